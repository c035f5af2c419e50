#pragma once

#include <string>
#include <vector>

#include "qta/bigraded.hpp"

namespace qta {

/* Where a structure came from; drives the operator-zoo naming of strong
 * and weak deformation maps. Structural inference is a non-goal. */
enum class Provenance {
    Raw,
    DirectProduct,
    Semidirect,
    AlgebraInBimodules,
    LeftModule,
    RightModule,
    MatchedPair,
    Box,
    ThetaTwisted,
    Reynolds,
    NonAbelianBoxtimes,
};

std::string provenance_name(Provenance p);

/* Associative product on A + B with B a subalgebra, stored as the seven
 * component tensors
 *   mu: AxA->A   nu: BxB->B   tr: AxB->B (|>)  tl: BxA->B (<|)
 *   rh: BxA->A (->)  lh: AxB->A (<-)  theta: AxA->B.
 * Construction only checks shapes; validate_axioms decides whether the
 * data is genuinely quasi-twilled. */
struct QuasiTwilledAlgebra {
    Field field;
    SplitSpace space;
    MLMap mu, nu, tr, tl, rh, lh, theta;
    Provenance tag = Provenance::Raw;
};

QuasiTwilledAlgebra make_qta(const Field& f, const SplitSpace& s, MLMap mu, MLMap nu, MLMap tr, MLMap tl, MLMap rh,
                             MLMap lh, MLMap theta, Provenance tag = Provenance::Raw);

/* All-zero structure tensors of the right shapes. */
QuasiTwilledAlgebra zero_qta(const Field& f, const SplitSpace& s);

struct AxiomCheck {
    std::string name;
    bool pass = true;
    std::string witness;  // first violating tuple and both sides, empty when pass
};

struct AxiomReport {
    bool pass = true;
    std::vector<AxiomCheck> items;
    std::string first_failure() const;
};

/* nu-associativity, the three B-bimodule laws on A, then (b1)-(b11), each
 * as its own predicate over all basis tuples. Deliberately independent of
 * the Maurer-Cartan route so the two can cross-check each other. */
AxiomReport validate_axioms(const QuasiTwilledAlgebra& q);

/* theta~ + mu^ + nu^, the degree-1 element of Q. */
MLMap omega(const QuasiTwilledAlgebra& q);

/* The product (a,x)(b,y) = (ab + a<-y + x->b, xy + a|>y + x<|b + theta(a,b)),
 * assembled directly; coincides with omega(q) as a tensor. */
MLMap total_product(const QuasiTwilledAlgebra& q);

/* Maurer-Cartan route: the associator of omega(q) vanishes. Over fields of
 * characteristic != 2 this is [Omega, Omega] = 0; the associator form also
 * carries the right content over F_2, where the literal bracket of an
 * arity-2 map with itself is identically zero. */
bool validate_via_mc(const QuasiTwilledAlgebra& q);

bool is_matched_pair(const QuasiTwilledAlgebra& q);

/* Split an arity-2 map in the Q_1 strata back into the seven tensors.
 * Throws when the map has a B(x)B -> A component. */
QuasiTwilledAlgebra qta_from_omega(const Field& f, const SplitSpace& s, const MLMap& om,
                                   Provenance tag = Provenance::Raw);

/* Degree-n cochain: an arity-n map on A + B. Degree 0 is a constant, the
 * constants C^0 = A + B. For n >= 1 the cochain space proper is the Q
 * strata; components F_r in C^{n-r|r-1} are recovered by projection. */
struct Cochain {
    int degree = 0;
    MLMap map;
};

Cochain zero_cochain(const QuasiTwilledAlgebra& q, int degree);
Cochain random_cochain(const QuasiTwilledAlgebra& q, int degree, Rng& rng);  // within the Q strata
MLMap cochain_component(const SplitSpace& s, const Cochain& F, int r);

/* delta(F) = (-1)^{n-1} ([theta~,F] + [mu^,F] + [nu^,F]); at n = 0 this
 * reads -[Omega, v] on the constant v. */
Cochain qta_differential(const QuasiTwilledAlgebra& q, const Cochain& F);

/* Matched-pair variant: (-1)^{n-1} [mu^ + nu^, F]; requires theta = 0.
 * The degree-0 case is handled the same way as in the full theory, as
 * -[mu^ + nu^, v] on the constant v; no separate convention exists for
 * constants here, so this analogous reading is the implemented one. */
Cochain matched_pair_differential(const QuasiTwilledAlgebra& q, const Cochain& F);

/* dim H^n for n = 0..max_degree by exact rank computation on the matrix
 * of delta in the canonical cochain basis (tuple-major, outputs inner).
 * The degree-0 differential may leave the C^1 strata; H^1 is then
 * ker(delta^1) modulo the part of im(delta^0) that lies inside C^1. */
std::vector<int> qta_cohomology_dims(const QuasiTwilledAlgebra& q, int max_degree);
std::vector<int> matched_pair_cohomology_dims(const QuasiTwilledAlgebra& q, int max_degree);

/* Plain associative algebra input for the factories below. */
struct Algebra {
    Field field;
    int dim = 0;
    MLMap product;
};

/* Throws ValidationError (with a witness triple) unless associative. */
Algebra make_algebra(const Field& f, int dim, MLMap product);

/* The example families. Inputs are checked eagerly; every output passes
 * validate_axioms. */
QuasiTwilledAlgebra direct_product(const Algebra& A, const Algebra& B);
QuasiTwilledAlgebra semidirect(const Algebra& A, int dim_b, const MLMap& tr, const MLMap& tl);
QuasiTwilledAlgebra algebra_in_bimodules(const Algebra& A, const Algebra& B, const MLMap& tr, const MLMap& tl);
QuasiTwilledAlgebra left_module_only(const Algebra& A, int dim_b, const MLMap& tr);
QuasiTwilledAlgebra right_module_only(const Algebra& A, int dim_b, const MLMap& tl);
QuasiTwilledAlgebra matched_pair(const Field& f, const SplitSpace& s, const MLMap& mu, const MLMap& nu,
                                 const MLMap& tr, const MLMap& tl, const MLMap& rh, const MLMap& lh);
QuasiTwilledAlgebra box(const Algebra& A);
QuasiTwilledAlgebra theta_twisted_semidirect(const Algebra& A, int dim_b, const MLMap& tr, const MLMap& tl,
                                             const MLMap& theta);
QuasiTwilledAlgebra reynolds_shape(const Algebra& A);

}  // namespace qta
