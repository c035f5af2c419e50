#include "doctest.h"

#include "fixtures.hpp"
#include "qta/defmap.hpp"
#include "qta/tridend.hpp"

using namespace qta;
using namespace qta::fixtures;

namespace {

MLMap scalar_bilinear(const Field& f, const Scalar& c) {
    MLMap m(f, {1, 1}, 1);
    m.coeffs()[0] = c;
    return m;
}

MLMap scalar_linear(const Field& f, const Scalar& c) {
    MLMap m(f, {1}, 1);
    m.coeffs()[0] = c;
    return m;
}

/* The cocycle behind reynolds_shape(K1): actions = multiplication,
 * theta = -mu, and the ZERO product on the B copy (the B-side product of
 * the semidirect-type total algebra vanishes; with nu = mu the identity
 * (nab1) fails: (ab)|>x + theta(a,b)x = 1 - 1 = 0 != 1). */
NonAbelianCocycle reynolds_cocycle(const Field& f) {
    Algebra K = k1(f);
    return make_cocycle(f, 1, 1, K.product, MLMap(f, {1, 1}, 1), K.product, K.product, -K.product);
}

NonAbelianCocycle weight1_cocycle(const Field& f) {
    Algebra K = k1(f);
    return make_cocycle(f, 1, 1, K.product, K.product, K.product, K.product, MLMap(f, {1, 1}, 1));
}

}  // namespace

TEST_CASE("cocycle validation on the two scalar families and a planted break") {
    Field Q = rationals();
    CHECK(validate_cocycle(weight1_cocycle(Q)).pass);  // theta = 0, honest bimodule-algebra
    CHECK(validate_cocycle(reynolds_cocycle(Q)).pass);

    NonAbelianCocycle bad = reynolds_cocycle(Q);
    bad.tl.coeffs()[0] = Scalar::of_long(Q, 2);  // perturb <|: (nab3) breaks
    AxiomReport rep = validate_cocycle(bad);
    CHECK_FALSE(rep.pass);
    bool nab3_failed = false;
    for (const auto& item : rep.items)
        if (item.name == "nab3" && !item.pass) {
            nab3_failed = true;
            CHECK_FALSE(item.witness.empty());
        }
    CHECK(nab3_failed);
}

TEST_CASE("boxtimes reproduces the example families") {
    Field Q = rationals();
    Algebra K = k1(Q);

    // theta = 0: the weight-1 algebra of Example-ex3 shape
    QuasiTwilledAlgebra bt = boxtimes(weight1_cocycle(Q));
    QuasiTwilledAlgebra w1 = weight_one_regular(K);
    CHECK(bt.mu == w1.mu);
    CHECK(bt.nu == w1.nu);
    CHECK(bt.tr == w1.tr);
    CHECK(bt.tl == w1.tl);
    CHECK(bt.theta == w1.theta);
    CHECK(bt.rh.is_zero());
    CHECK(bt.lh.is_zero());

    // Reynolds shape
    QuasiTwilledAlgebra btr = boxtimes(reynolds_cocycle(Q));
    QuasiTwilledAlgebra ry = reynolds_shape(K);
    CHECK(btr.mu == ry.mu);
    CHECK(btr.nu == ry.nu);
    CHECK(btr.tr == ry.tr);
    CHECK(btr.tl == ry.tl);
    CHECK(btr.theta == ry.theta);
    CHECK(validate_axioms(btr).pass);
}

TEST_CASE("twisted RB operators coincide with weak maps of boxtimes") {
    // exhaustive over F3 at dims (1,1): all five structure scalars, all r
    Field F3 = prime_field(3);
    int cocycles_seen = 0;
    for (int code = 0; code < 243; ++code) {
        int c = code;
        long vals[5];
        for (long& v : vals) {
            v = c % 3;
            c /= 3;
        }
        NonAbelianCocycle coc{F3, 1, 1,
                              scalar_bilinear(F3, Scalar::of_long(F3, vals[0])),
                              scalar_bilinear(F3, Scalar::of_long(F3, vals[1])),
                              scalar_bilinear(F3, Scalar::of_long(F3, vals[2])),
                              scalar_bilinear(F3, Scalar::of_long(F3, vals[3])),
                              scalar_bilinear(F3, Scalar::of_long(F3, vals[4]))};
        if (!cocycle_valid(coc)) continue;
        ++cocycles_seen;
        QuasiTwilledAlgebra bt = boxtimes(coc);
        for (long l = 0; l < 3; ++l) {
            MLMap r = scalar_linear(F3, Scalar::of_long(F3, l));
            CHECK(is_twisted_rb(coc, r) == is_weak(bt, r));
        }
    }
    CHECK(cocycles_seen > 3);

    // random over Q on the Reynolds cocycle
    Field Q = rationals();
    NonAbelianCocycle rc = reynolds_cocycle(Q);
    QuasiTwilledAlgebra bt = boxtimes(rc);
    Rng rng(61);
    for (int t = 0; t < 30; ++t) {
        MLMap r = random_mlmap(Q, {1}, 1, rng);
        CHECK(is_twisted_rb(rc, r) == is_weak(bt, r));
    }
    // scalar solution sets
    for (long l = -3; l <= 3; ++l) {
        CHECK(is_twisted_rb(weight1_cocycle(Q), scalar_linear(Q, Scalar::of_long(Q, l))) == (l == 0 || l == -1));
        CHECK(is_twisted_rb(rc, scalar_linear(Q, Scalar::of_long(Q, l))) == (l == 0 || l == 1));
    }
}

TEST_CASE("induced twisted tridendriform structures") {
    Field Q = rationals();

    // r = 0: all induced products vanish, TT reduces to associativity of nu
    NonAbelianCocycle c = weight1_cocycle(Q);
    TwistedTridendriform t0 = induce_ttd(c, scalar_linear(Q, Scalar::zero(Q)));
    CHECK(t0.prec.is_zero());
    CHECK(t0.succ.is_zero());
    CHECK(t0.wedge.is_zero());
    CHECK(validate_ttd(t0).pass);  // TT reduces to associativity of dot
    CHECK(is_tridendriform(t0));
    CHECK_FALSE(is_ns_algebra(t0));  // dot = nu of K1 is nonzero

    // weight-1 at l = -1: a 1-dim tridendriform algebra (wedge = 0)
    TwistedTridendriform t1 = induce_ttd(c, scalar_linear(Q, Scalar::of_long(Q, -1)));
    CHECK(validate_ttd(t1).pass);
    CHECK(is_tridendriform(t1));
    CHECK_FALSE(is_ns_algebra(t1));
    int idx[2] = {0, 0};
    CHECK(t1.prec.at(idx, 0) == Scalar::of_long(Q, -1));
    CHECK(t1.succ.at(idx, 0) == Scalar::of_long(Q, -1));
    CHECK(t1.dot.at(idx, 0) == Scalar::one(Q));
    // star = -mu, associative
    MLMap star = star_product(t1);
    CHECK(star.at(idx, 0) == Scalar::of_long(Q, -1));
    CHECK(is_associative(star));

    // Reynolds at l = 1: wedge = theta(r-, r-) = -mu != 0, an NS-flavoured case
    NonAbelianCocycle rc = reynolds_cocycle(Q);
    TwistedTridendriform t2 = induce_ttd(rc, scalar_linear(Q, Scalar::one(Q)));
    CHECK(validate_ttd(t2).pass);
    CHECK_FALSE(is_tridendriform(t2));
    CHECK(t2.wedge.at(idx, 0) == Scalar::of_long(Q, -1));

    CHECK_THROWS_AS(induce_ttd(rc, scalar_linear(Q, Scalar::of_long(Q, 2))), ValidationError);
}

TEST_CASE("star associativity comes from summing the TT identities") {
    Field Q = rationals();
    // a valid ttd: dot = 0, the NS case from a twisted RB operator
    NonAbelianCocycle rc = reynolds_cocycle(Q);
    TwistedTridendriform t = induce_ttd(rc, scalar_linear(Q, Scalar::one(Q)));
    MLMap star = t.prec + t.succ + t.wedge + t.dot;
    for (int a = 0; a < t.dim; ++a)
        for (int b = 0; b < t.dim; ++b)
            for (int cc = 0; cc < t.dim; ++cc) {
                Vec va = basis_vec(Q, t.dim, a), vb = basis_vec(Q, t.dim, b), vc = basis_vec(Q, t.dim, cc);
                CHECK(is_zero(sub(star.apply2(star.apply2(va, vb), vc), star.apply2(va, star.apply2(vb, vc)))));
            }
}

TEST_CASE("converse: ttd_to_cocycle and the identity roundtrip") {
    Field Q = rationals();

    // zero ttd
    TwistedTridendriform z = make_ttd(Q, 2, MLMap(Q, {2, 2}, 2), MLMap(Q, {2, 2}, 2), MLMap(Q, {2, 2}, 2),
                                      MLMap(Q, {2, 2}, 2));
    CHECK(identity_roundtrip(z));

    // the weight-1 l = -1 ttd on K1
    TwistedTridendriform t1 = induce_ttd(weight1_cocycle(Q), scalar_linear(Q, Scalar::of_long(Q, -1)));
    CHECK(identity_roundtrip(t1));

    // Reynolds l = 1 ttd
    TwistedTridendriform t2 = induce_ttd(reynolds_cocycle(Q), scalar_linear(Q, Scalar::one(Q)));
    CHECK(identity_roundtrip(t2));
}

TEST_CASE("exhaustive dim-1 ttd search over F5: every valid ttd round-trips") {
    Field F5 = prime_field(5);
    int valid = 0;
    for (int code = 0; code < 625; ++code) {
        int c = code;
        long v[4];
        for (long& x : v) {
            x = c % 5;
            c /= 5;
        }
        TwistedTridendriform t{F5, 1, scalar_bilinear(F5, Scalar::of_long(F5, v[0])),
                               scalar_bilinear(F5, Scalar::of_long(F5, v[1])),
                               scalar_bilinear(F5, Scalar::of_long(F5, v[2])),
                               scalar_bilinear(F5, Scalar::of_long(F5, v[3]))};
        if (!ttd_valid(t)) continue;
        ++valid;
        CHECK(identity_roundtrip(t));
        CHECK(is_associative(t.prec + t.succ + t.wedge + t.dot));
    }
    CHECK(valid > 1);
}

TEST_CASE("double_qta equals boxtimes of the converse cocycle") {
    Field Q = rationals();
    TwistedTridendriform t = induce_ttd(weight1_cocycle(Q), scalar_linear(Q, Scalar::of_long(Q, -1)));
    QuasiTwilledAlgebra d = double_qta(t);
    CHECK(validate_axioms(d).pass);
    QuasiTwilledAlgebra viaCocycle = boxtimes(ttd_to_cocycle(t));
    CHECK(total_product(d) == total_product(viaCocycle));

    TwistedTridendriform z = make_ttd(Q, 1, MLMap(Q, {1, 1}, 1), MLMap(Q, {1, 1}, 1), MLMap(Q, {1, 1}, 1),
                                      MLMap(Q, {1, 1}, 1));
    CHECK(total_product(double_qta(z)).is_zero());
}

TEST_CASE("exhaustive cocycle search over F5 at dims (2,1): found structures validate") {
    Field F5 = prime_field(5);
    Algebra A = d2(F5);  // dual numbers over F5
    Algebra B = k1(F5);
    int found = 0, validated = 0, checked_rb = 0;
    // 8 free coefficients: tr (2), tl (2), theta (4)
    for (long code = 0; code < 390625; ++code) {
        long c = code;
        MLMap tr(F5, {2, 1}, 1), tl(F5, {1, 2}, 1), theta(F5, {2, 2}, 1);
        for (auto& s : tr.coeffs()) {
            s = Scalar::of_long(F5, c % 5);
            c /= 5;
        }
        for (auto& s : tl.coeffs()) {
            s = Scalar::of_long(F5, c % 5);
            c /= 5;
        }
        for (auto& s : theta.coeffs()) {
            s = Scalar::of_long(F5, c % 5);
            c /= 5;
        }
        NonAbelianCocycle coc{F5, 2, 1, A.product, B.product, tr, tl, theta};
        if (!cocycle_valid(coc)) continue;
        ++found;
        if (validated < 10 || found % 50 == 0) {
            ++validated;
            QuasiTwilledAlgebra bt = boxtimes(coc);
            CHECK(validate_axioms(bt).pass);
            for (long rc = 0; rc < 25; ++rc) {
                MLMap r(F5, {1}, 2);
                r.coeffs()[0] = Scalar::of_long(F5, rc % 5);
                r.coeffs()[1] = Scalar::of_long(F5, rc / 5);
                CHECK(is_twisted_rb(coc, r) == is_weak(bt, r));
                if (is_twisted_rb(coc, r)) {
                    TwistedTridendriform t = induce_ttd(coc, r);
                    CHECK(validate_ttd(t).pass);
                    CHECK(identity_roundtrip(t));
                    ++checked_rb;
                }
            }
        }
    }
    CHECK(found > 0);
    CHECK(checked_rb > 0);
}
