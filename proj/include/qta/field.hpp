#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "qta/error.hpp"

namespace qta {

/* Base field of a whole computation: the rationals (p == 0) or the prime
 * field F_p for a prime p <= 2^31. Every value in the library is exact;
 * there is no floating point anywhere. */
struct Field {
    std::uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;

    std::string str() const { return p == 0 ? "rational" : "F_" + std::to_string(p); }

    /* True when k! is a unit, i.e. char 0 or p > k. */
    bool factorial_invertible(int k) const { return p == 0 || static_cast<std::uint32_t>(k) < p; }
};

inline Field rationals() { return Field{0}; }
Field prime_field(std::uint32_t p);  // validates primality

/* One field element. Rationals are kept in lowest terms with positive
 * denominator (mpq canonical form); prime-field values live in [0, p). */
class Scalar {
  public:
    Scalar() : p_(0), v_(0), q_(0) {}  // rational zero
    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_long(const Field& f, long v);
    static Scalar rational(long num, long den);
    static Scalar mod_p(const Field& f, std::uint64_t v);
    static Scalar from_mpq(mpq_class q);
    /* Parses "n" or "n/d"; over F_p only plain integers in [0, p). */
    static Scalar parse(const Field& f, const std::string& s);

    Field field() const { return Field{p_}; }
    bool is_zero() const { return p_ == 0 ? q_ == 0 : v_ == 0; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;

    /* Canonical text form: "3", "-2/7", or the residue as a decimal. */
    std::string str() const;

    const mpq_class& rat() const { return q_; }
    std::uint64_t residue() const { return v_; }

  private:
    std::uint32_t p_;  // 0 = rational
    std::uint64_t v_;  // residue when p_ != 0
    mpq_class q_;      // value when p_ == 0

    void check_same(const Scalar& o) const {
        if (p_ != o.p_) throw FieldMismatch("scalar fields differ: " + field().str() + " vs " + o.field().str());
    }
};

/* 1/k!; throws CharacteristicError when k! is not a unit. */
Scalar inv_factorial(const Field& f, int k);

}  // namespace qta
