#pragma once

#include <optional>

#include "qta/mlmap.hpp"

namespace qta {

/* Split carrier A + B with the A basis first. Every tensor index on the
 * total space decodes to (A-or-B, local index) by comparison with dim_a;
 * this ordering is frozen and part of the file format. */
struct SplitSpace {
    int dim_a = 0, dim_b = 0;
    int total() const { return dim_a + dim_b; }
    bool in_a(int idx) const { return idx < dim_a; }
    bool operator==(const SplitSpace&) const = default;
};

/* Bidegree k|l of a homogeneous map on A + B: inputs with k+1 tensor
 * factors from A (and l from B) land in A, inputs with k factors from A
 * land in B, everything else dies. k + l = arity - 1, both >= -1. */
struct Bidegree {
    int k = 0, l = 0;
    bool operator==(const Bidegree&) const = default;
};

/* Bidegree of one coefficient slot: a_count = number of A-indices in the
 * input tuple, out_in_a = whether the output coordinate lies in A. */
inline Bidegree slot_bidegree(int arity, int a_count, bool out_in_a) {
    return out_in_a ? Bidegree{a_count - 1, arity - a_count} : Bidegree{a_count, arity - 1 - a_count};
}

/* The unique bidegree of a nonzero homogeneous map; nullopt when the map
 * is zero or mixes strata. */
std::optional<Bidegree> classify(const SplitSpace& s, const MLMap& f);

/* The C^{k|l} component; the projections over all bidegrees of the arity
 * sum back to f. */
MLMap project(const SplitSpace& s, const MLMap& f, Bidegree d);

enum class Strata { Q, M, R };

/* Membership in the graded Lie subalgebras of Prop-style strata filters:
 * Q_n drops C^{-1|n+1}, M_n drops both extremes, R_n drops C^{n+1|-1}. */
bool in_subalgebra(const SplitSpace& s, const MLMap& f, Strata which);

/* Projection onto a = Hom(A^{x n+1}, B): keep all-A input tuples, project
 * the output to B. Dually proj_b keeps Hom(B^{x n+1}, A). */
MLMap proj_a(const SplitSpace& s, const MLMap& f);
MLMap proj_b(const SplitSpace& s, const MLMap& f);

/* Hat embeddings of the seven structure tensors (Theorem-level formulas):
 *   theta~((a,x),(b,y)) = (0, theta(a,b))                 in C^{2|-1}
 *   mu^((a,x),(b,y))    = (a.b, a|>y + x<|b)              in C^{1|0}
 *   nu^((a,x),(b,y))    = (a<-y + x->b, x.y)              in C^{0|1}   */
struct HatMaps {
    MLMap theta_tilde, mu_hat, nu_hat;
};
HatMaps hat_components(const SplitSpace& s, const MLMap& mu, const MLMap& nu, const MLMap& tr, const MLMap& tl,
                       const MLMap& rh, const MLMap& lh, const MLMap& theta);

/* Hom(A^{x n}, B) <-> the C^{n|-1} stratum, Hom(B^{x n}, A) <-> C^{-1|n}.
 * Linear maps A->B / B->A embed the same way at arity 1. */
MLMap embed_hom_ab(const SplitSpace& s, const MLMap& f);
MLMap embed_hom_ba(const SplitSpace& s, const MLMap& f);
MLMap extract_hom_ab(const SplitSpace& s, const MLMap& f);
MLMap extract_hom_ba(const SplitSpace& s, const MLMap& f);

/* Transport of a bilinear product along the shear id + n for a
 * square-zero arity-1 map n:  (id - n) o m o ((id+n) x (id+n)).
 * Equals exp(ad_n) m, but without the 1/k! coefficients, so it works
 * over every field. */
MLMap shear_conjugate(const MLMap& m, const MLMap& n);

}  // namespace qta
