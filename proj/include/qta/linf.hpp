#pragma once

#include <functional>
#include <optional>

#include "qta/defmap.hpp"
#include "qta/quasi_twilled.hpp"

namespace qta {

/* Graded carriers are truncated to a degree window: structure maps that
 * would need an intermediate arity beyond max_arity raise WindowOverflow
 * instead of silently truncating. */
struct DegreeWindow {
    int max_arity = 7;
};

/* Homogeneous element of one of the tabulated graded carriers: a square
 * map on the ambient A + B space, possibly carrying the [1] shift of the
 * Q-component. Degree is arity - 1, one less when shifted. */
struct LComp {
    bool shifted = false;
    MLMap map;
    int degree() const { return map.arity() - 1 - (shifted ? 1 : 0); }
};

/* Formal sum of homogeneous components. */
using LElem = std::vector<LComp>;

LElem lplain(MLMap m);
LElem lshift(MLMap m);
LElem lelem_add(const LElem& a, const LElem& b);
LElem lelem_normalize(LElem e);  // merge like (shifted, arity) terms, drop zeros
bool lelem_is_zero(const LElem& e);
bool lelem_equal(const LElem& a, const LElem& b);

/* A tabulated (curved) L-infinity algebra: l0 plus an evaluator for every
 * l_k on homogeneous tuples. Structure maps are closures over the fixture
 * rather than materialized tensors. `exact_residual`, when present, is a
 * fraction-free route to the Maurer-Cartan residual that works over every
 * field (the literal sum needs invertible k!). */
struct CurvedLInfinity {
    Field field;
    SplitSpace space;
    DegreeWindow window;
    int max_k = 2;  // l_k = 0 for k > max_k (within the window)
    LElem l0;
    std::function<LElem(std::span<const LComp>)> lk;
    std::function<LElem(const LElem&)> exact_residual;

    struct Sampler {
        bool has_shifted = false;  // Q[1] summand present
        bool plain_ab = false;     // plain part lives in Hom(A^{x n}, B)
        bool plain_ba = false;     // plain part lives in Hom(B^{x n}, A)
    } sampler;

    /* Multilinear extension of lk to formal sums. */
    LElem eval(std::span<const LElem> args) const;
};

/* Literal residual l0 + sum 1/k! l_k(alpha,...,alpha); throws
 * CharacteristicError when some needed k! is not a unit. */
LElem mc_residual(const CurvedLInfinity& L, const LElem& alpha);

/* Uses the literal residual when the factorials exist, otherwise the
 * exact hook. */
bool is_mc(const CurvedLInfinity& L, const LElem& alpha);

/* Twist by a Maurer-Cartan element (checked): l_k^a = sum 1/n! l_{n+k}(a^n, -). */
CurvedLInfinity twist(const CurvedLInfinity& L, const LElem& alpha);

enum class ProjSide { A, B };

/* Voronov derived brackets on the abelian subalgebra im(P):
 * l0 = P(Delta), l_k(a_1..a_k) = P[...[[Delta,a_1],a_2],...,a_k]. */
CurvedLInfinity voronov_small(const Field& f, const SplitSpace& s, MLMap delta, ProjSide side, DegreeWindow w = {});

/* Part (ii) of the construction on Q[1] (+) im(P) with Delta = 0. */
CurvedLInfinity voronov_big(const Field& f, const SplitSpace& s, ProjSide side, DegreeWindow w = {});

/* Controlling algebras: MC elements of the A side are the strong maps,
 * of the B side the weak maps. */
CurvedLInfinity controlling_strong(const QuasiTwilledAlgebra& q, DegreeWindow w = {});
CurvedLInfinity controlling_weak(const QuasiTwilledAlgebra& q, DegreeWindow w = {});

/* Twists at a given deformation map; MC elements are admissible increments. */
CurvedLInfinity governing_strong(const QuasiTwilledAlgebra& q, const MLMap& D, DegreeWindow w = {});
CurvedLInfinity governing_weak(const QuasiTwilledAlgebra& q, const MLMap& r, DegreeWindow w = {});

/* Simultaneous-deformation algebras on Q[1] (+) a and Q[1] (+) b; MC
 * elements are pairs (Omega[1], D) / (Omega[1], r). */
CurvedLInfinity simultaneous_strong(const Field& f, const SplitSpace& s, DegreeWindow w = {});
CurvedLInfinity simultaneous_weak(const Field& f, const SplitSpace& s, DegreeWindow w = {});

/* Twists of the simultaneous algebras at a validated pair. */
CurvedLInfinity governing_pair_strong(const QuasiTwilledAlgebra& q, const MLMap& D, DegreeWindow w = {});
CurvedLInfinity governing_pair_weak(const QuasiTwilledAlgebra& q, const MLMap& r, DegreeWindow w = {});

/* The two literal-formula specializations; each must agree coefficientwise
 * with its derived-bracket twin (controlling_strong(box(A)) resp.
 * controlling_weak of a matched pair) -- the key cross-check. */
CurvedLInfinity modified_rmatrix_controlling(const Algebra& A, DegreeWindow w = {});
CurvedLInfinity matched_pair_weak_controlling(const QuasiTwilledAlgebra& mp, DegreeWindow w = {});

/* Candidates as library-level elements. */
LElem strong_candidate(const QuasiTwilledAlgebra& q, const MLMap& D);
LElem weak_candidate(const QuasiTwilledAlgebra& q, const MLMap& r);
LElem pair_candidate(const SplitSpace& s, const MLMap& omega2, const MLMap& linear, ProjSide side);

/* Random homogeneous component compatible with the carrier, arity <= cap. */
LComp sample_component(const CurvedLInfinity& L, Rng& rng, int arity_cap = 3);

/* Law checks used by tests, the acceptance suite and the CLI. */
bool check_graded_symmetry(const CurvedLInfinity& L, int samples, Rng& rng, std::string* diag = nullptr);
bool check_generalized_jacobi(const CurvedLInfinity& L, int max_n, int samples, Rng& rng, std::string* diag = nullptr);
/* mc_residual(L, a + b) = mc_residual(twist(L, a), b) for MC a. */
bool check_twist_consistency(const CurvedLInfinity& L, const LElem& alpha, int samples, Rng& rng,
                             std::string* diag = nullptr);

}  // namespace qta
