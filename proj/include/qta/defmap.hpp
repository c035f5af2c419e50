#pragma once

#include "qta/quasi_twilled.hpp"

namespace qta {

/* Strong deformation maps D: A -> B and weak deformation maps r: B -> A.
 * Both are plain linear maps; "is a deformation map" is a predicate. A
 * strong map has its graph {(a, D(a))} closed under the total product, a
 * weak map has {(r(x), x)} closed. */
using StrongMap = MLMap;  // arity 1, A -> B
using WeakMap = MLMap;    // arity 1, B -> A

MLMap zero_strong(const QuasiTwilledAlgebra& q);
MLMap zero_weak(const QuasiTwilledAlgebra& q);

/* Equation route: D(ab + a<-D(b) + D(a)->b) = D(a)D(b) + a|>D(b) + D(a)<|b + theta(a,b). */
bool is_strong(const QuasiTwilledAlgebra& q, const MLMap& D);
/* Graph route: the total product maps Gr(D) x Gr(D) into Gr(D). */
bool graph_check_strong(const QuasiTwilledAlgebra& q, const MLMap& D);

/* Defect tensor of the strong equation (zero iff strong): A x A -> B. */
MLMap strong_defect(const QuasiTwilledAlgebra& q, const MLMap& D);

/* a .D b = ab + a <- D(b) + D(a) -> b; associative when D is strong
 * (validated eagerly, a failure indicates a sign error upstream). */
MLMap induced_A_D(const QuasiTwilledAlgebra& q, const MLMap& D);

/* (A_{mu_D}, B_nu, |>_D, <|_D, ->, <-) with theta = 0. */
QuasiTwilledAlgebra induced_matched_pair(const QuasiTwilledAlgebra& q, const MLMap& D);

/* Hochschild differential of A_D with coefficients in (B, |>_D, <|_D),
 * written out against the original seven tensors plus D. f: A^{x n} -> B. */
MLMap delta_D(const QuasiTwilledAlgebra& q, const MLMap& D, const MLMap& f);
std::vector<int> strong_cohomology_dims(const QuasiTwilledAlgebra& q, const MLMap& D, int max_degree);

/* Weak side. */
bool is_weak(const QuasiTwilledAlgebra& q, const MLMap& r);
bool graph_check_weak(const QuasiTwilledAlgebra& q, const MLMap& r);
MLMap weak_defect(const QuasiTwilledAlgebra& q, const MLMap& r);  // B x B -> A

/* x .r y = xy + r(x)|>y + x<|r(y) + theta(r(x), r(y)); associative when r
 * is weak (validated). */
MLMap induced_B_r(const QuasiTwilledAlgebra& q, const MLMap& r);

/* The deformed structure (A_{mu_r}, B_{nu_r}, |>_r, <|_r, ->_r, <-_r, theta). */
QuasiTwilledAlgebra deformed_qta(const QuasiTwilledAlgebra& q, const MLMap& r);

/* Omega_r = theta~ + (mu^)_r + (nu^)_r + psi_r for an ARBITRARY linear r,
 * computed by transporting Omega along the shear (a,x) -> (a + r(x), x).
 * This is fraction-free and valid over every field; over char 0 it equals
 * the displayed exp(ad_r) formulas with their 1/2 and 1/6 coefficients
 * (a tested property). [Omega_r, Omega_r] = 0 always; psi_r = 0 iff r is
 * weak. */
struct OmegaRParts {
    MLMap theta_tilde;  // C^{2|-1}, equals theta~ of q
    MLMap mu_r;         // C^{1|0}
    MLMap nu_r;         // C^{0|1}
    MLMap psi_r;        // C^{-1|2}, the weak-equation defect
};
OmegaRParts omega_r_parts(const QuasiTwilledAlgebra& q, const MLMap& r);
MLMap omega_r(const QuasiTwilledAlgebra& q, const MLMap& r);  // the sum

/* Hochschild differential of B_r with coefficients in (A, ->_r, <-_r),
 * written out against the original tensors plus r. f: B^{x n} -> A. */
MLMap delta_r(const QuasiTwilledAlgebra& q, const MLMap& r, const MLMap& f);
std::vector<int> weak_cohomology_dims(const QuasiTwilledAlgebra& q, const MLMap& r, int max_degree);

enum class MapKind { Strong, Weak };

/* Operator-zoo tag from the factory provenance; unknown fingerprints get
 * the generic tag. */
std::string recognize(const QuasiTwilledAlgebra& q, MapKind kind);

}  // namespace qta
