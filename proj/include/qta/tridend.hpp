#pragma once

#include "qta/quasi_twilled.hpp"

namespace qta {

/* Non-abelian 2-cocycle (|>, <|, theta) on the algebra A with values in
 * the algebra B: the data of a non-abelian extension, axioms (nab1)-(nab7). */
struct NonAbelianCocycle {
    Field field;
    int dim_a = 0, dim_b = 0;
    MLMap mu;     // A x A -> A, associative
    MLMap nu;     // B x B -> B, associative
    MLMap tr;     // A x B -> B
    MLMap tl;     // B x A -> B
    MLMap theta;  // A x A -> B
};

NonAbelianCocycle make_cocycle(const Field& f, int dim_a, int dim_b, MLMap mu, MLMap nu, MLMap tr, MLMap tl,
                               MLMap theta);  // shape checks only

/* Per-axiom report: A-assoc, B-assoc, nab1..nab7. */
AxiomReport validate_cocycle(const NonAbelianCocycle& c);
/* Short-circuit variant for search loops. */
bool cocycle_valid(const NonAbelianCocycle& c);

/* (A + B, boxtimes) with -> = <- = 0; passes validate_axioms. */
QuasiTwilledAlgebra boxtimes(const NonAbelianCocycle& c);

/* r(x) r(y) = r( r(x)|>y + x<|r(y) + xy + theta(r(x), r(y)) ); coincides
 * with being a weak deformation map in boxtimes(c). */
bool is_twisted_rb(const NonAbelianCocycle& c, const MLMap& r);

/* Four products on one space subject to (TT1)-(TT8); star is always the
 * derived sum prec + succ + wedge + dot, never stored. */
struct TwistedTridendriform {
    Field field;
    int dim = 0;
    MLMap prec;   // x < y
    MLMap succ;   // x > y
    MLMap wedge;  // x v y
    MLMap dot;    // x . y
};

TwistedTridendriform make_ttd(const Field& f, int dim, MLMap prec, MLMap succ, MLMap wedge, MLMap dot);

/* Per-axiom report TT1..TT8. */
AxiomReport validate_ttd(const TwistedTridendriform& t);
bool ttd_valid(const TwistedTridendriform& t);

/* x <_r y = x <| r(y), x >_r y = r(x) |> y, x v_r y = theta(r(x), r(y));
 * with the B-product this is a twisted tridendriform algebra. */
TwistedTridendriform induce_ttd(const NonAbelianCocycle& c, const MLMap& r);

/* x * y = x<y + x>y + xvy + x.y; associative for every valid t. */
MLMap star_product(const TwistedTridendriform& t);

/* The converse construction: (|> = succ, <| = prec, theta = wedge) is a
 * non-abelian 2-cocycle on (A, star) with values in (A, dot). */
NonAbelianCocycle ttd_to_cocycle(const TwistedTridendriform& t);

/* Id is a twisted Rota-Baxter operator for ttd_to_cocycle(t) and induces
 * t back, coefficient for coefficient. */
bool identity_roundtrip(const TwistedTridendriform& t);

/* (x,x') * (y,y') = (x*y, x'.y' + x>y' + x'<y + xvy) on A + A; equals
 * boxtimes(ttd_to_cocycle(t)) as a tensor. */
QuasiTwilledAlgebra double_qta(const TwistedTridendriform& t);

/* Degeneracy detectors (exact zero tests). */
bool is_tridendriform(const TwistedTridendriform& t);  // wedge = 0
bool is_ns_algebra(const TwistedTridendriform& t);     // dot = 0
bool is_dendriform(const TwistedTridendriform& t);     // both

}  // namespace qta
