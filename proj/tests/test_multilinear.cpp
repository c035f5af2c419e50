#include "doctest.h"

#include "fixtures.hpp"
#include "qta/mlmap.hpp"

using namespace qta;

namespace {

int deg(const MLMap& f) { return f.arity() - 1; }

Scalar sign_pow(const Field& f, int e) {
    return ((e % 2) + 2) % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
}

MLMap random_square(const Field& f, int dim, int arity, Rng& rng) {
    return random_mlmap(f, std::vector<int>(static_cast<std::size_t>(arity), dim), dim, rng);
}

}  // namespace

TEST_CASE("circle unrolls to the associator for a bilinear map") {
    Field Q = rationals();
    Rng rng(11);
    MLMap m = random_square(Q, 2, 2, rng);
    MLMap c = circle(m, m);
    // (m<>m)(a,b,c) = m(m(a,b),c) - m(a,m(b,c)) on every basis triple
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int cc = 0; cc < 2; ++cc) {
                Vec va = basis_vec(Q, 2, a), vb = basis_vec(Q, 2, b), vc = basis_vec(Q, 2, cc);
                Vec expect = sub(m.apply2(m.apply2(va, vb), vc), m.apply2(va, m.apply2(vb, vc)));
                int idx[3] = {a, b, cc};
                CHECK(c.value(idx) == expect);
            }
}

TEST_CASE("circle with the identity and with constants") {
    Field Q = rationals();
    Rng rng(12);
    MLMap id = identity_map(Q, 1);
    for (int ar = 1; ar <= 3; ++ar) {
        MLMap f = random_square(Q, 1, ar, rng);
        // f <> id: each of the ar slots inserts id with sign (-1)^{(i-1)*0} = +1,
        // so the coefficient tensor is ar * f on dim 1
        MLMap fid = circle(f, id);
        MLMap expect = f.scaled(Scalar::of_long(Q, ar));
        CHECK(fid == expect);
    }
    // arity-1 composition
    MLMap g1 = random_square(Q, 2, 1, rng), g2 = random_square(Q, 2, 1, rng);
    MLMap comp = circle(g1, g2);
    for (int i = 0; i < 2; ++i) {
        int idx[1] = {i};
        CHECK(comp.value(idx) == g1.apply1(g2.value(idx)));
    }
    // constants: insert into each slot with alternating signs; c <> f = 0
    MLMap cst = random_square(Q, 2, 0, rng);
    MLMap m = random_square(Q, 2, 2, rng);
    MLMap mc = circle(m, cst);
    Vec v = cst.value(std::span<const int>{});
    for (int u = 0; u < 2; ++u) {
        int idx[1] = {u};
        Vec vu = basis_vec(Q, 2, u);
        CHECK(mc.value(idx) == sub(m.apply2(v, vu), m.apply2(vu, v)));
    }
    CHECK(bracket(m, cst) == mc);  // [f, c] = f <> c
}

TEST_CASE("bracket of a bilinear map with itself doubles the associator") {
    Field Q = rationals();
    Rng rng(13);
    MLMap m = random_square(Q, 2, 2, rng);
    CHECK(bracket(m, m) == associator(m).scaled(Scalar::of_long(Q, 2)));
}

TEST_CASE("the identity acts as the grading operator: [id, g] = (1-n) g") {
    // id <> g = g while g <> id = n g, so [id, g] = (1-n) g; in particular
    // it vanishes exactly on arity-1 maps.
    Field Q = rationals();
    Rng rng(14);
    for (int dim = 1; dim <= 2; ++dim) {
        MLMap id = identity_map(Q, dim);
        for (int ar = 1; ar <= 3; ++ar) {
            MLMap g = random_square(Q, dim, ar, rng);
            CHECK(bracket(id, g) == g.scaled(Scalar::of_long(Q, 1 - ar)));
        }
        MLMap g1 = random_square(Q, dim, 1, rng);
        CHECK(bracket(id, g1).is_zero());
    }
}

TEST_CASE("graded antisymmetry on random tensors, dims <= 3, arities <= 3") {
    Field Q = rationals();
    Rng rng(15);
    for (int dim = 1; dim <= 3; ++dim)
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
                MLMap f = random_square(Q, dim, m, rng), g = random_square(Q, dim, n, rng);
                MLMap rhs = bracket(g, f).scaled(-sign_pow(Q, deg(f) * deg(g)));
                CHECK(bracket(f, g) == rhs);
            }
}

TEST_CASE("graded Jacobi on random tensors, dims <= 2, arities <= 3") {
    Field Q = rationals();
    Rng rng(16);
    for (int dim = 1; dim <= 2; ++dim)
        for (int trial = 0; trial < 6; ++trial) {
            MLMap f = random_square(Q, dim, 1 + static_cast<int>(rng.below(3)), rng);
            MLMap g = random_square(Q, dim, 1 + static_cast<int>(rng.below(3)), rng);
            MLMap h = random_square(Q, dim, 1 + static_cast<int>(rng.below(3)), rng);
            MLMap s = bracket(bracket(f, g), h).scaled(sign_pow(Q, deg(f) * deg(h))) +
                      bracket(bracket(g, h), f).scaled(sign_pow(Q, deg(g) * deg(f))) +
                      bracket(bracket(h, f), g).scaled(sign_pow(Q, deg(h) * deg(g)));
            CHECK(s.is_zero());
        }
}

TEST_CASE("is_associative on the named fixtures") {
    Field Q = rationals();
    CHECK(is_associative(fixtures::k1(Q).product));
    CHECK(is_associative(fixtures::d2(Q).product));
    // e1*e1 = e2, e2*e1 = e1, everything else zero: associator at (e1,e1,e1) is
    // (e1 e1) e1 - e1 (e1 e1) = e2 e1 - 0 = e1 != 0
    MLMap bad = MLMap::square(Q, 2, 2);
    int i00[2] = {0, 0}, i10[2] = {1, 0};
    bad.at(i00, 1) = Scalar::one(Q);
    bad.at(i10, 0) = Scalar::one(Q);
    CHECK_FALSE(is_associative(bad));
    CHECK_THROWS_AS(is_associative(identity_map(Q, 2)), DimMismatch);
}

TEST_CASE("bracket(m,m) = 0 iff associative: exhaustive over F2 dim 1, random over Q") {
    Field F2 = prime_field(2);
    for (int bit = 0; bit < 2; ++bit) {
        MLMap m = MLMap::square(F2, 1, 2);
        m.coeffs()[0] = Scalar::of_long(F2, bit);
        CHECK(bracket(m, m).is_zero() == is_associative(m));
    }
    Field Q = rationals();
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        MLMap m = random_square(Q, 2, 2, rng);
        CHECK(bracket(m, m).is_zero() == is_associative(m));
    }
}
