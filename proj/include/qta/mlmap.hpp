#pragma once

#include <span>
#include <string>
#include <vector>

#include "qta/field.hpp"
#include "qta/rng.hpp"

namespace qta {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, int dim);
Vec basis_vec(const Field& f, int dim, int i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& a);
bool is_zero(const Vec& a);

/* Dense multilinear map V_1 x ... x V_n -> W with per-slot dimensions.
 * Coefficients are stored row-major over basis input tuples: the entry
 * (t, out) is the coordinate of f(e_{t_1}, ..., e_{t_n}) on the out-th
 * basis vector of W. Arity 0 is allowed and means a constant, i.e. an
 * element of W; these are the degree -1 objects of the graded algebra.
 *
 * Maps with all slot dimensions equal to the output dimension ("square"
 * maps) are the elements of the graded Lie algebra g; the circle product
 * and Gerstenhaber bracket below are defined for those. */
class MLMap {
  public:
    MLMap() = default;
    MLMap(const Field& f, std::vector<int> in_dims, int out_dim);

    /* Square map on a single space. */
    static MLMap square(const Field& f, int dim, int arity);

    const Field& field() const { return field_; }
    int arity() const { return static_cast<int>(in_dims_.size()); }
    const std::vector<int>& in_dims() const { return in_dims_; }
    int out_dim() const { return out_dim_; }
    bool is_square() const;
    int sq_dim() const;  // throws unless square

    std::size_t tuple_count() const { return tuples_; }
    std::size_t flat_index(std::span<const int> tuple) const;
    void unflatten(std::size_t t, std::span<int> tuple) const;

    const Scalar& at(std::span<const int> tuple, int out) const { return c_[flat_index(tuple) * out_dim_ + out]; }
    Scalar& at(std::span<const int> tuple, int out) { return c_[flat_index(tuple) * out_dim_ + out]; }
    const Scalar& at_flat(std::size_t t, int out) const { return c_[t * out_dim_ + out]; }
    Scalar& at_flat(std::size_t t, int out) { return c_[t * out_dim_ + out]; }

    /* f(e_{t_1}, ..., e_{t_n}) as a coordinate vector. */
    Vec value(std::span<const int> tuple) const;
    /* Full multilinear evaluation on coordinate vectors. */
    Vec apply(std::span<const Vec> args) const;
    Vec apply1(const Vec& x) const;
    Vec apply2(const Vec& x, const Vec& y) const;

    bool is_zero() const;
    bool operator==(const MLMap& o) const;
    MLMap operator+(const MLMap& o) const;
    MLMap operator-(const MLMap& o) const;
    MLMap operator-() const;
    MLMap scaled(const Scalar& c) const;

    const std::vector<Scalar>& coeffs() const { return c_; }
    std::vector<Scalar>& coeffs() { return c_; }

  private:
    Field field_;
    std::vector<int> in_dims_;
    int out_dim_ = 0;
    std::size_t tuples_ = 1;
    std::vector<Scalar> c_;

    void check_compatible(const MLMap& o) const;
};

MLMap random_mlmap(const Field& f, std::vector<int> in_dims, int out_dim, Rng& rng);
MLMap identity_map(const Field& f, int dim);

/* f <> g: insert g into every slot of f with the sign (-1)^{(i-1)(n-1)}
 * on the i-th slot, n = arity of g. Requires square maps of equal
 * dimension and arity(f) >= 1; g of arity 0 is inserted as a constant.
 * The result has arity m + n - 1. */
MLMap circle(const MLMap& f, const MLMap& g);

/* Gerstenhaber bracket [f, g] = f<>g - (-1)^{(m-1)(n-1)} g<>f. At most
 * one argument may have arity 0 (a constant); then the missing circle
 * term is zero. */
MLMap bracket(const MLMap& f, const MLMap& g);

/* The associator tensor m<>m of an arity-2 map; m is associative iff it
 * vanishes. Over characteristic 2 this carries the content of the
 * Maurer-Cartan condition that [m, m] = 2 (m<>m) cannot see. */
MLMap associator(const MLMap& m);

/* true iff the associator of the arity-2 map m vanishes. */
bool is_associative(const MLMap& m);

}  // namespace qta
