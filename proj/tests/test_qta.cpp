#include "doctest.h"

#include "fixtures.hpp"
#include "qta/quasi_twilled.hpp"

using namespace qta;
using namespace qta::fixtures;

namespace {

/* Independent route for the differential: one bracket against the total
 * product assembled directly from the component formula. */
Cochain delta_oracle(const QuasiTwilledAlgebra& q, const Cochain& F) {
    MLMap d = bracket(total_product(q), F.map);
    if ((F.degree - 1) % 2 != 0) d = -d;
    return Cochain{F.degree + 1, std::move(d)};
}

/* dims (1,2): nu has f1 f1 = f2, the actions project onto f1. The module
 * laws (b2)-(b4) hold but the module-algebra compatibilities (b5), (b6)
 * break: e |> (f1 f1) = 0 while (e |> f1) f1 = f2. */
QuasiTwilledAlgebra planted_b5_violation(const Field& f) {
    Algebra K = k1(f);
    QuasiTwilledAlgebra q = zero_qta(f, SplitSpace{1, 2});
    q.mu = K.product;
    int i11[2] = {0, 0};
    q.nu.at(i11, 1) = Scalar::one(f);  // f1 f1 = f2
    int ef1[2] = {0, 0}, f1e[2] = {0, 0};
    q.tr.at(ef1, 0) = Scalar::one(f);  // e |> f1 = f1, e |> f2 = 0
    q.tl.at(f1e, 0) = Scalar::one(f);  // f1 <| e = f1, f2 <| e = 0
    return q;
}

}  // namespace

TEST_CASE("validate_axioms passes on the example families") {
    Field Q = rationals();
    Algebra K = k1(Q), D = d2(Q);
    CHECK(validate_axioms(direct_product(K, K)).pass);
    CHECK(validate_axioms(direct_product(K, D)).pass);
    CHECK(validate_axioms(semidirect_regular(D)).pass);
    CHECK(validate_axioms(weight_one_regular(K)).pass);
    CHECK(validate_axioms(box(D)).pass);
    CHECK(validate_axioms(reynolds_shape(K)).pass);
    CHECK(validate_axioms(left_module_only(K, 1, K.product)).pass);
    CHECK(validate_axioms(right_module_only(K, 1, K.product)).pass);
    CHECK(validate_axioms(theta_twisted_semidirect(K, 1, K.product, K.product, -K.product)).pass);
}

TEST_CASE("a planted compatibility violation is localized at b5/b6 with a witness") {
    Field Q = rationals();
    QuasiTwilledAlgebra bad = planted_b5_violation(Q);
    AxiomReport rep = validate_axioms(bad);
    CHECK_FALSE(rep.pass);
    for (const auto& item : rep.items) {
        if (item.name == "b5" || item.name == "b6") {
            CHECK_FALSE(item.pass);
            CHECK_FALSE(item.witness.empty());
        } else {
            CHECK(item.pass);
        }
    }
    CHECK(rep.first_failure().substr(0, 2) == "b5");
    CHECK_FALSE(validate_via_mc(bad));  // same verdict through the bracket
}

TEST_CASE("omega equals total_product and matches the displayed products") {
    Field Q = rationals();
    Algebra K = k1(Q);

    QuasiTwilledAlgebra dp = direct_product(K, K);
    CHECK(omega(dp) == total_product(dp));
    int aa[2] = {0, 0}, bb[2] = {1, 1}, ab[2] = {0, 1};
    MLMap om = omega(dp);
    CHECK(om.at(aa, 0) == Scalar::one(Q));
    CHECK(om.at(bb, 1) == Scalar::one(Q));
    CHECK(om.at(ab, 0).is_zero());
    CHECK(om.at(ab, 1).is_zero());

    // box: (a,a') box (b,b') = (ab' + a'b, ab + a'b')
    QuasiTwilledAlgebra bx = box(K);
    MLMap ob = omega(bx);
    CHECK(ob == total_product(bx));
    int ba[2] = {1, 0};
    CHECK(ob.at(aa, 0).is_zero());
    CHECK(ob.at(aa, 1) == Scalar::one(Q));
    CHECK(ob.at(ab, 0) == Scalar::one(Q));
    CHECK(ob.at(ba, 0) == Scalar::one(Q));
    CHECK(ob.at(bb, 1) == Scalar::one(Q));
    CHECK(in_subalgebra(bx.space, ob, Strata::Q));

    // reynolds: (a,a') x (b,b') = (ab, ab' + a'b - ab)
    QuasiTwilledAlgebra ry = reynolds_shape(K);
    MLMap orr = omega(ry);
    CHECK(orr.at(aa, 0) == Scalar::one(Q));
    CHECK(orr.at(aa, 1) == -Scalar::one(Q));
    CHECK(orr.at(ab, 1) == Scalar::one(Q));
    CHECK(orr.at(ba, 1) == Scalar::one(Q));
    CHECK(orr.at(bb, 0).is_zero());
    CHECK(orr.at(bb, 1).is_zero());

    // zero structure maps give the zero product
    CHECK(omega(zero_qta(Q, SplitSpace{2, 1})).is_zero());
}

TEST_CASE("validate_via_mc agrees with validate_axioms and with associativity") {
    Field Q = rationals();
    Rng rng(31);
    Algebra K = k1(Q), D = d2(Q);
    for (const auto& q : {direct_product(K, D), semidirect_regular(D), box(K), reynolds_shape(K)}) {
        CHECK(validate_via_mc(q));
        CHECK(is_associative(omega(q)));
    }
    // random raw structures: both routes give the same verdict
    int agree_checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        QuasiTwilledAlgebra q = zero_qta(Q, SplitSpace{1, 1});
        for (MLMap* t : {&q.mu, &q.nu, &q.tr, &q.tl, &q.rh, &q.lh, &q.theta})
            t->coeffs()[0] = Scalar::of_long(Q, rng.range(-1, 1));
        CHECK(validate_axioms(q).pass == validate_via_mc(q));
        ++agree_checked;
    }
    CHECK(agree_checked == 60);
}

TEST_CASE("MC equivalence is exhaustive over F2 at dims (1,1)") {
    Field F2 = prime_field(2);
    for (int mask = 0; mask < 128; ++mask) {
        QuasiTwilledAlgebra q = zero_qta(F2, SplitSpace{1, 1});
        MLMap* tensors[7] = {&q.mu, &q.nu, &q.tr, &q.tl, &q.rh, &q.lh, &q.theta};
        for (int b = 0; b < 7; ++b) tensors[b]->coeffs()[0] = Scalar::of_long(F2, (mask >> b) & 1);
        CHECK(validate_axioms(q).pass == validate_via_mc(q));
    }
}

TEST_CASE("differential: zero, squares to zero, and the two routes agree") {
    Field Q = rationals();
    Algebra K = k1(Q), D = d2(Q);
    Rng rng(32);
    for (const auto& q : {direct_product(K, K), semidirect_regular(D), box(K), reynolds_shape(K),
                          weight_one_regular(K)}) {
        CHECK(qta_differential(q, zero_cochain(q, 2)).map.is_zero());
        for (int n = 0; n <= 3; ++n) {
            Cochain F = random_cochain(q, n, rng);
            Cochain dF = qta_differential(q, F);
            CHECK(dF.degree == n + 1);
            CHECK(dF.map == delta_oracle(q, F).map);       // single-bracket route
            CHECK(qta_differential(q, dF).map.is_zero());  // delta^2 = 0
        }
    }
}

TEST_CASE("componentwise reading of the differential") {
    Field Q = rationals();
    Algebra D = d2(Q);
    QuasiTwilledAlgebra q = semidirect_regular(D);
    HatMaps h = hat_components(q.space, q.mu, q.nu, q.tr, q.tl, q.rh, q.lh, q.theta);
    Rng rng(33);
    const int n = 2;
    Cochain F = random_cochain(q, n, rng);
    Cochain dF = qta_differential(q, F);
    for (int r = 0; r <= n + 1; ++r) {
        MLMap expect = MLMap::square(Q, q.space.total(), n + 1);
        if (r + 1 <= n) expect = expect + bracket(h.theta_tilde, cochain_component(q.space, F, r + 1));
        if (r <= n) expect = expect + bracket(h.mu_hat, cochain_component(q.space, F, r));
        if (r - 1 >= 0) expect = expect + bracket(h.nu_hat, cochain_component(q.space, F, r - 1));
        if ((n - 1) % 2 != 0) expect = -expect;
        CHECK(cochain_component(q.space, dF, r) == expect);
    }
}

TEST_CASE("matched pair differential and its relation to the full one") {
    Field Q = rationals();
    Algebra K = k1(Q), D = d2(Q);
    Rng rng(34);
    // direct products are matched pairs
    for (const auto& q : {direct_product(K, K), direct_product(K, D), semidirect_regular(D)}) {
        CHECK(is_matched_pair(q));
        CHECK(matched_pair_differential(q, zero_cochain(q, 2)).map.is_zero());
        for (int n = 0; n <= 3; ++n) {
            Cochain F = random_cochain(q, n, rng);
            Cochain dF = matched_pair_differential(q, F);
            CHECK(matched_pair_differential(q, dF).map.is_zero());
            // theta = 0 kills the [theta~, -] terms, so both differentials agree
            CHECK(dF.map == qta_differential(q, F).map);
        }
    }
    QuasiTwilledAlgebra ry = reynolds_shape(K);
    CHECK_FALSE(is_matched_pair(ry));
    CHECK_THROWS_AS(matched_pair_differential(ry, zero_cochain(ry, 1)), ValidationError);
}

TEST_CASE("factory input validation fails loudly with a witness") {
    Field Q = rationals();
    Algebra K = k1(Q);
    // non-bimodule: tr = 2 * multiplication violates the left-module law
    MLMap bad_tr = K.product.scaled(Scalar::of_long(Q, 2));
    CHECK_THROWS_AS(semidirect(K, 1, bad_tr, K.product), ValidationError);
    // non-associative product
    MLMap bad = MLMap::square(Q, 2, 2);
    int i00[2] = {0, 0}, i10[2] = {1, 0};
    bad.at(i00, 1) = Scalar::one(Q);
    bad.at(i10, 0) = Scalar::one(Q);
    CHECK_THROWS_AS(make_algebra(Q, 2, bad), ValidationError);
}

TEST_CASE("B is a subalgebra of every factory output") {
    Field Q = rationals();
    Algebra K = k1(Q), D = d2(Q);
    for (const auto& q : {direct_product(K, D), semidirect_regular(D), box(D), reynolds_shape(K),
                          weight_one_regular(K)}) {
        MLMap tp = total_product(q);
        for (int x = 0; x < q.space.dim_b; ++x)
            for (int y = 0; y < q.space.dim_b; ++y) {
                int idx[2] = {q.space.dim_a + x, q.space.dim_a + y};
                for (int o = 0; o < q.space.dim_a; ++o) CHECK(tp.at(idx, o).is_zero());
            }
    }
}

TEST_CASE("qta_from_omega round-trips the factories") {
    Field Q = rationals();
    Algebra K = k1(Q);
    for (const auto& q : {direct_product(K, K), box(K), reynolds_shape(K)}) {
        QuasiTwilledAlgebra r = qta_from_omega(q.field, q.space, omega(q));
        CHECK(r.mu == q.mu);
        CHECK(r.nu == q.nu);
        CHECK(r.tr == q.tr);
        CHECK(r.tl == q.tl);
        CHECK(r.rh == q.rh);
        CHECK(r.lh == q.lh);
        CHECK(r.theta == q.theta);
    }
}

TEST_CASE("cohomology dimensions: zero algebra has delta = 0") {
    Field Q = rationals();
    QuasiTwilledAlgebra z = zero_qta(Q, SplitSpace{1, 1});
    auto dims = qta_cohomology_dims(z, 3);
    // dim C^0 = 2, dim C^n = 2^n * 2 - 1 for n >= 1 at dims (1,1)
    CHECK(dims == std::vector<int>{2, 3, 7, 15});
}

TEST_CASE("degree-0 overflow: H^1 uses only the part of im(delta^0) inside C^1") {
    // box over a noncommutative algebra: -[Omega, v] has a genuine
    // Hom(B, A) component, outside the paper-level C^1 strata
    Field Q = rationals();
    QuasiTwilledAlgebra q = box(ut2(Q));
    const SplitSpace s = q.space;
    const int d = s.total();
    bool overflow_seen = false;
    Matrix M0(Q, d * d, d);
    for (int i = 0; i < d; ++i) {
        Cochain v{0, MLMap::square(Q, d, 0)};
        v.map.coeffs()[static_cast<std::size_t>(i)] = Scalar::one(Q);
        Cochain dv = qta_differential(q, v);
        if (!proj_b(s, dv.map).is_zero()) overflow_seen = true;
        for (int r = 0; r < d * d; ++r) M0.at(r, i) = dv.map.coeffs()[static_cast<std::size_t>(r)];
    }
    CHECK(overflow_seen);
    auto dims = qta_cohomology_dims(q, 2);
    for (int x : dims) CHECK(x >= 0);

    // the rank-difference used for dim(im delta^0 /\ C^1) equals the
    // direct computation: push ker(overflow rows) through delta^0
    std::vector<int> overflow_slots;
    for (int t = 0; t < d; ++t)
        for (int o = 0; o < d; ++o)
            if (!s.in_a(t) && s.in_a(o)) overflow_slots.push_back(t * d + o);
    Matrix Z(Q, static_cast<int>(overflow_slots.size()), d);
    for (std::size_t r = 0; r < overflow_slots.size(); ++r)
        for (int i = 0; i < d; ++i) Z.at(static_cast<int>(r), i) = M0.at(overflow_slots[r], i);
    const int via_ranks = rank(M0) - rank(Z);
    auto ker = kernel_basis(Z);
    Matrix pushed(Q, d * d, static_cast<int>(ker.size()));
    for (std::size_t c = 0; c < ker.size(); ++c)
        for (int r = 0; r < d * d; ++r) {
            Scalar acc = Scalar::zero(Q);
            for (int i = 0; i < d; ++i) acc += M0.at(r, i) * ker[c][static_cast<std::size_t>(i)];
            pushed.at(r, static_cast<int>(c)) = acc;
        }
    CHECK(via_ranks == rank(pushed));
}

TEST_CASE("cohomology regression: direct product K1 (+) K1") {
    Field Q = rationals();
    Algebra K = k1(Q);
    QuasiTwilledAlgebra dp = direct_product(K, K);
    auto dims = qta_cohomology_dims(dp, 3);
    REQUIRE(dims.size() == 4);
    // frozen regression values; both K1 products are commutative so
    // delta^0 = 0 and H^0 is all of C^0, while delta^1 is injective
    CHECK(dims == std::vector<int>{2, 0, 0, 0});

    auto mdims = matched_pair_cohomology_dims(dp, 3);
    REQUIRE(mdims.size() == 4);
    CHECK(mdims == std::vector<int>{2, 0, 0, 0});
}
