#include "qta/mlmap.hpp"

#include <algorithm>

#include "qta/error.hpp"

namespace qta {

Vec zero_vec(const Field& f, int dim) { return Vec(static_cast<std::size_t>(dim), Scalar::zero(f)); }

Vec basis_vec(const Field& f, int dim, int i) {
    Vec v = zero_vec(f, dim);
    v[static_cast<std::size_t>(i)] = Scalar::one(f);
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimMismatch("vec add: sizes differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimMismatch("vec sub: sizes differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

MLMap::MLMap(const Field& f, std::vector<int> in_dims, int out_dim)
    : field_(f), in_dims_(std::move(in_dims)), out_dim_(out_dim) {
    tuples_ = 1;
    for (int d : in_dims_) {
        if (d <= 0) throw DimMismatch("MLMap: nonpositive slot dimension");
        tuples_ *= static_cast<std::size_t>(d);
    }
    if (out_dim_ <= 0) throw DimMismatch("MLMap: nonpositive output dimension");
    c_.assign(tuples_ * static_cast<std::size_t>(out_dim_), Scalar::zero(field_));
}

MLMap MLMap::square(const Field& f, int dim, int arity) {
    return MLMap(f, std::vector<int>(static_cast<std::size_t>(arity), dim), dim);
}

bool MLMap::is_square() const {
    return std::all_of(in_dims_.begin(), in_dims_.end(), [&](int d) { return d == out_dim_; });
}

int MLMap::sq_dim() const {
    if (!is_square()) throw DimMismatch("sq_dim: map is not square");
    return out_dim_;
}

std::size_t MLMap::flat_index(std::span<const int> tuple) const {
    if (tuple.size() != in_dims_.size()) throw DimMismatch("flat_index: wrong tuple length");
    std::size_t t = 0;
    for (std::size_t k = 0; k < tuple.size(); ++k) t = t * static_cast<std::size_t>(in_dims_[k]) + static_cast<std::size_t>(tuple[k]);
    return t;
}

void MLMap::unflatten(std::size_t t, std::span<int> tuple) const {
    for (std::size_t k = in_dims_.size(); k-- > 0;) {
        tuple[k] = static_cast<int>(t % static_cast<std::size_t>(in_dims_[k]));
        t /= static_cast<std::size_t>(in_dims_[k]);
    }
}

Vec MLMap::value(std::span<const int> tuple) const {
    const std::size_t t = flat_index(tuple);
    Vec v;
    v.reserve(static_cast<std::size_t>(out_dim_));
    for (int o = 0; o < out_dim_; ++o) v.push_back(c_[t * static_cast<std::size_t>(out_dim_) + o]);
    return v;
}

Vec MLMap::apply(std::span<const Vec> args) const {
    if (static_cast<int>(args.size()) != arity()) throw DimMismatch("apply: wrong argument count");
    for (std::size_t k = 0; k < args.size(); ++k)
        if (static_cast<int>(args[k].size()) != in_dims_[k]) throw DimMismatch("apply: argument dimension mismatch");
    Vec out = zero_vec(field_, out_dim_);
    std::vector<int> tuple(args.size(), 0);
    const std::size_t n = args.size();
    auto rec = [&](auto&& self, std::size_t k, const Scalar& weight) -> void {
        if (k == n) {
            const std::size_t t = flat_index(tuple);
            for (int o = 0; o < out_dim_; ++o) {
                const Scalar& cf = c_[t * static_cast<std::size_t>(out_dim_) + o];
                if (!cf.is_zero()) out[static_cast<std::size_t>(o)] += weight * cf;
            }
            return;
        }
        for (int i = 0; i < in_dims_[k]; ++i) {
            const Scalar& a = args[k][static_cast<std::size_t>(i)];
            if (a.is_zero()) continue;
            tuple[k] = i;
            self(self, k + 1, weight * a);
        }
    };
    rec(rec, 0, Scalar::one(field_));
    return out;
}

Vec MLMap::apply1(const Vec& x) const { return apply(std::span<const Vec>(&x, 1)); }

Vec MLMap::apply2(const Vec& x, const Vec& y) const {
    const Vec args[2] = {x, y};
    return apply(std::span<const Vec>(args, 2));
}

bool MLMap::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

void MLMap::check_compatible(const MLMap& o) const {
    if (!(field_ == o.field_) || in_dims_ != o.in_dims_ || out_dim_ != o.out_dim_)
        throw DimMismatch("MLMap: shapes or fields differ");
}

bool MLMap::operator==(const MLMap& o) const {
    check_compatible(o);
    return c_ == o.c_;
}

MLMap MLMap::operator+(const MLMap& o) const {
    check_compatible(o);
    MLMap r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

MLMap MLMap::operator-(const MLMap& o) const {
    check_compatible(o);
    MLMap r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

MLMap MLMap::operator-() const {
    MLMap r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

MLMap MLMap::scaled(const Scalar& s) const {
    MLMap r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

MLMap random_mlmap(const Field& f, std::vector<int> in_dims, int out_dim, Rng& rng) {
    MLMap m(f, std::move(in_dims), out_dim);
    for (auto& x : m.coeffs()) x = random_scalar(f, rng);
    return m;
}

MLMap identity_map(const Field& f, int dim) {
    MLMap m = MLMap::square(f, dim, 1);
    for (int i = 0; i < dim; ++i) m.at_flat(static_cast<std::size_t>(i), i) = Scalar::one(f);
    return m;
}

MLMap circle(const MLMap& f, const MLMap& g) {
    if (!f.is_square() || !g.is_square()) throw DimMismatch("circle: maps must be square");
    const int d = f.sq_dim();
    if (d != g.sq_dim()) throw DimMismatch("circle: dimensions differ");
    if (!(f.field() == g.field())) throw FieldMismatch("circle: fields differ");
    const int m = f.arity(), n = g.arity();
    if (m < 1) throw DimMismatch("circle: left map must have arity >= 1");
    const int res_ar = m + n - 1;
    MLMap res = MLMap::square(f.field(), d, res_ar);

    std::vector<int> tuple(static_cast<std::size_t>(res_ar));
    std::vector<int> ftuple(static_cast<std::size_t>(m));
    std::vector<int> gtuple(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < res.tuple_count(); ++t) {
        res.unflatten(t, tuple);
        for (int slot = 0; slot < m; ++slot) {
            const bool neg = ((slot * (n - 1)) % 2 + 2) % 2 == 1;  // (-1)^{(i-1)(n-1)}, i = slot+1
            for (int k = 0; k < n; ++k) gtuple[static_cast<std::size_t>(k)] = tuple[static_cast<std::size_t>(slot + k)];
            const std::size_t gt = g.flat_index(gtuple);
            for (int j = 0; j < d; ++j) {
                const Scalar& cg = g.at_flat(gt, j);
                if (cg.is_zero()) continue;
                for (int k = 0; k < slot; ++k) ftuple[static_cast<std::size_t>(k)] = tuple[static_cast<std::size_t>(k)];
                ftuple[static_cast<std::size_t>(slot)] = j;
                for (int k = slot + 1; k < m; ++k) ftuple[static_cast<std::size_t>(k)] = tuple[static_cast<std::size_t>(k + n - 1)];
                const std::size_t ft = f.flat_index(ftuple);
                for (int o = 0; o < d; ++o) {
                    const Scalar& cf = f.at_flat(ft, o);
                    if (cf.is_zero()) continue;
                    Scalar term = cg * cf;
                    if (neg) term = -term;
                    res.at_flat(t, o) += term;
                }
            }
        }
    }
    return res;
}

MLMap bracket(const MLMap& f, const MLMap& g) {
    const int m = f.arity(), n = g.arity();
    if (m == 0 && n == 0) throw DimMismatch("bracket: both arguments are constants");
    const bool sign_neg = (((m - 1) * (n - 1)) % 2 + 2) % 2 == 1;
    if (m == 0) {
        MLMap gf = circle(g, f);
        return sign_neg ? gf : -gf;
    }
    MLMap fg = circle(f, g);
    if (n == 0) return fg;  // no insertion slots in g
    MLMap gf = circle(g, f);
    return sign_neg ? fg + gf : fg - gf;
}

MLMap associator(const MLMap& m) {
    if (m.arity() != 2) throw DimMismatch("associator: arity must be 2");
    return circle(m, m);
}

bool is_associative(const MLMap& m) { return associator(m).is_zero(); }

}  // namespace qta
