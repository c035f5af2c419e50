#include "qta/field.hpp"

namespace qta {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p), p prime, a != 0
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw Error("mod_inverse: not invertible");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Field prime_field(std::uint32_t p) {
    if (!is_prime(p)) throw Error("prime_field: " + std::to_string(p) + " is not prime");
    return Field{p};
}

Scalar Scalar::zero(const Field& f) { return of_long(f, 0); }
Scalar Scalar::one(const Field& f) { return of_long(f, 1); }

Scalar Scalar::of_long(const Field& f, long v) {
    Scalar s;
    s.p_ = f.p;
    if (f.p == 0) {
        s.q_ = v;
    } else {
        long long m = v % static_cast<long long>(f.p);
        if (m < 0) m += f.p;
        s.v_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw Error("rational: zero denominator");
    Scalar s;
    s.p_ = 0;
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::mod_p(const Field& f, std::uint64_t v) {
    if (f.p == 0) throw FieldMismatch("mod_p called for the rational field");
    Scalar s;
    s.p_ = f.p;
    s.v_ = v % f.p;
    return s;
}

Scalar Scalar::from_mpq(mpq_class q) {
    q.canonicalize();
    Scalar s;
    s.p_ = 0;
    s.q_ = std::move(q);
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
    if (f.p != 0) {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw Error("parse: bad F_p literal '" + s + "'");
        if (v < 0 || static_cast<std::uint64_t>(v) >= f.p)
            throw Error("parse: residue " + s + " outside [0, " + std::to_string(f.p) + ")");
        return mod_p(f, static_cast<std::uint64_t>(v));
    }
    Scalar r;
    r.p_ = 0;
    if (r.q_.set_str(s, 10) != 0) throw Error("parse: bad rational literal '" + s + "'");
    if (r.q_.get_den() == 0) throw Error("parse: zero denominator in '" + s + "'");
    r.q_.canonicalize();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r;
    r.p_ = p_;
    if (p_ == 0)
        r.q_ = q_ + o.q_;
    else
        r.v_ = (v_ + o.v_) % p_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar r;
    r.p_ = p_;
    if (p_ == 0)
        r.q_ = q_ - o.q_;
    else
        r.v_ = (v_ + p_ - o.v_) % p_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r;
    r.p_ = p_;
    if (p_ == 0)
        r.q_ = q_ * o.q_;
    else
        r.v_ = (v_ * o.v_) % p_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    Scalar r;
    r.p_ = p_;
    if (p_ == 0)
        r.q_ = 1 / q_;
    else
        r.v_ = mod_inverse(v_, p_);
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.p_ = p_;
    if (p_ == 0)
        r.q_ = -q_;
    else
        r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    return p_ == 0 ? q_ == o.q_ : v_ == o.v_;
}

std::string Scalar::str() const {
    if (p_ != 0) return std::to_string(v_);
    return q_.get_str();
}

Scalar inv_factorial(const Field& f, int k) {
    if (!f.factorial_invertible(k))
        throw CharacteristicError("1/" + std::to_string(k) + "! does not exist over " + f.str());
    Scalar r = Scalar::one(f);
    for (int i = 2; i <= k; ++i) r = r / Scalar::of_long(f, i);
    return r;
}

}  // namespace qta
