#include "qta/linf.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "qta/error.hpp"

namespace qta {

namespace {

MLMap wbracket(const DegreeWindow& w, const MLMap& f, const MLMap& g) {
    if (f.arity() + g.arity() - 1 > w.max_arity)
        throw WindowOverflow("bracket needs arity " + std::to_string(f.arity() + g.arity() - 1) + " > window " +
                             std::to_string(w.max_arity));
    return bracket(f, g);
}

LElem scaled(LElem e, const Scalar& c) {
    for (auto& comp : e) comp.map = comp.map.scaled(c);
    return e;
}

LElem negated(LElem e) {
    for (auto& comp : e) comp.map = -comp.map;
    return e;
}

MLMap proj_side(const SplitSpace& s, ProjSide side, const MLMap& m) {
    return side == ProjSide::A ? proj_a(s, m) : proj_b(s, m);
}

}  // namespace

LElem lplain(MLMap m) {
    LElem e;
    if (!m.is_zero()) e.push_back(LComp{false, std::move(m)});
    return e;
}

LElem lshift(MLMap m) {
    LElem e;
    if (!m.is_zero()) e.push_back(LComp{true, std::move(m)});
    return e;
}

LElem lelem_add(const LElem& a, const LElem& b) {
    LElem r = a;
    r.insert(r.end(), b.begin(), b.end());
    return lelem_normalize(std::move(r));
}

LElem lelem_normalize(LElem e) {
    LElem out;
    for (auto& c : e) {
        bool merged = false;
        for (auto& o : out) {
            if (o.shifted == c.shifted && o.map.arity() == c.map.arity()) {
                o.map = o.map + c.map;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(std::move(c));
    }
    LElem pruned;
    for (auto& c : out)
        if (!c.map.is_zero()) pruned.push_back(std::move(c));
    return pruned;
}

bool lelem_is_zero(const LElem& e) { return lelem_normalize(e).empty(); }

bool lelem_equal(const LElem& a, const LElem& b) { return lelem_is_zero(lelem_add(a, negated(b))); }

LElem CurvedLInfinity::eval(std::span<const LElem> args) const {
    LElem total;
    std::vector<LComp> current;
    current.reserve(args.size());
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == args.size()) {
            total = lelem_add(total, lk(current));
            return;
        }
        for (const LComp& c : args[j]) {
            current.push_back(c);
            self(self, j + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return total;
}

LElem mc_residual(const CurvedLInfinity& L, const LElem& alpha) {
    // Over characteristic p <= max_k the k-fold bracket on a repeated
    // argument silently loses the k! it is meant to be divided by (e.g.
    // l2(a,a) = 2 gamma_2(a) = 0 over F_2), so the literal sum is not
    // merely inconvenient but wrong. Refuse instead.
    if (!L.field.factorial_invertible(L.max_k))
        throw CharacteristicError("mc_residual needs 1/k! up to k = " + std::to_string(L.max_k) + " over " +
                                  L.field.str() + "; use the exact residual");
    const LElem a = lelem_normalize(alpha);
    for (const auto& c : a)
        if (c.degree() != 0) throw DimMismatch("mc_residual: alpha must be a degree-0 element");
    LElem res = L.l0;
    std::vector<LComp> tuple;
    for (int k = 1; k <= L.max_k; ++k) {
        if (a.empty()) break;
        const Scalar coef = inv_factorial(L.field, k);
        tuple.clear();
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == k) {
                res = lelem_add(res, scaled(L.lk(tuple), coef));
                return;
            }
            for (const LComp& c : a) {
                tuple.push_back(c);
                self(self, depth + 1);
                tuple.pop_back();
            }
        };
        rec(rec, 0);
    }
    return lelem_normalize(res);
}

bool is_mc(const CurvedLInfinity& L, const LElem& alpha) {
    if (!L.field.factorial_invertible(L.max_k) && L.exact_residual)
        return lelem_is_zero(L.exact_residual(alpha));
    try {
        return lelem_is_zero(mc_residual(L, alpha));
    } catch (const CharacteristicError&) {
        if (L.exact_residual) return lelem_is_zero(L.exact_residual(alpha));
        throw;
    }
}

CurvedLInfinity twist(const CurvedLInfinity& L, const LElem& alpha) {
    if (!is_mc(L, alpha)) throw ValidationError("twist: alpha is not a Maurer-Cartan element", "mc");
    auto base = std::make_shared<CurvedLInfinity>(L);
    const LElem a = lelem_normalize(alpha);
    CurvedLInfinity T;
    T.field = L.field;
    T.space = L.space;
    T.window = L.window;
    T.max_k = L.max_k;
    T.l0 = {};  // flat: alpha is MC
    T.sampler = L.sampler;
    T.lk = [base, a](std::span<const LComp> args) -> LElem {
        LElem total;
        const int k = static_cast<int>(args.size());
        if (!a.empty() && !base->field.factorial_invertible(std::max(0, base->max_k - k)))
            throw CharacteristicError("twisted bracket needs 1/n! beyond the characteristic; use the exact residual");
        std::vector<LComp> tuple;
        for (int n = 0; n + k <= base->max_k; ++n) {
            if (n > 0 && a.empty()) break;
            const Scalar coef = inv_factorial(base->field, n);
            tuple.clear();
            auto rec = [&](auto&& self, int depth) -> void {
                if (depth == n) {
                    std::vector<LComp> full = tuple;
                    full.insert(full.end(), args.begin(), args.end());
                    total = lelem_add(total, scaled(base->lk(full), coef));
                    return;
                }
                for (const LComp& c : a) {
                    tuple.push_back(c);
                    self(self, depth + 1);
                    tuple.pop_back();
                }
            };
            rec(rec, 0);
        }
        return total;
    };
    if (L.exact_residual) {
        auto hook = L.exact_residual;
        T.exact_residual = [hook, a](const LElem& beta) { return hook(lelem_add(a, beta)); };
    }
    return T;
}

namespace {

/* Koszul sign exponent for moving all shifted entries of `args` to the
 * front, keeping relative orders. */
int unshuffle_sign_exp(std::span<const LComp> args) {
    int e = 0;
    for (std::size_t j = 0; j < args.size(); ++j) {
        if (!args[j].shifted) continue;
        for (std::size_t i = 0; i < j; ++i)
            if (!args[i].shifted) e += args[i].degree() * args[j].degree();
    }
    return e;
}

LElem apply_sign(LElem e, int exp) { return ((exp % 2) + 2) % 2 == 0 ? e : negated(std::move(e)); }

}  // namespace

CurvedLInfinity voronov_small(const Field& f, const SplitSpace& s, MLMap delta, ProjSide side, DegreeWindow w) {
    if (!associator(delta).is_zero()) throw ValidationError("voronov_small: [Delta, Delta] != 0", "delta");
    {
        // ker P must be a graded Lie subalgebra; spot-check on seeded samples
        Rng rng(0x5eed);
        for (int t = 0; t < 4; ++t) {
            MLMap u = random_mlmap(f, std::vector<int>(1 + t % 2, s.total()), s.total(), rng);
            MLMap v = random_mlmap(f, std::vector<int>(2 - t % 2, s.total()), s.total(), rng);
            u = u - proj_side(s, side, u);
            v = v - proj_side(s, side, v);
            if (!proj_side(s, side, bracket(u, v)).is_zero())
                throw ValidationError("voronov_small: ker P is not closed under the bracket", "kerP");
        }
    }
    CurvedLInfinity L;
    L.field = f;
    L.space = s;
    L.window = w;
    L.max_k = side == ProjSide::A ? 2 : 3;
    L.l0 = lplain(proj_side(s, side, delta));
    L.sampler.plain_ab = side == ProjSide::A;
    L.sampler.plain_ba = side == ProjSide::B;
    MLMap dl = delta;
    L.lk = [f, s, side, dl, w](std::span<const LComp> args) -> LElem {
        if (args.empty()) throw DimMismatch("lk: empty tuple");
        for (const auto& c : args)
            if (c.shifted) throw DimMismatch("lk: this carrier has no shifted part");
        MLMap acc = dl;
        for (const auto& c : args) acc = wbracket(w, acc, c.map);
        return lplain(proj_side(s, side, acc));
    };
    L.exact_residual = [f, s, side, dl](const LElem& alpha) -> LElem {
        MLMap n = MLMap::square(f, s.total(), 1);
        for (const auto& c : lelem_normalize(alpha)) {
            if (c.shifted || c.map.arity() != 1) throw DimMismatch("exact residual: need an arity-1 plain element");
            n = n + c.map;
        }
        return lplain(proj_side(s, side, shear_conjugate(dl, n)));
    };
    return L;
}

CurvedLInfinity voronov_big(const Field& f, const SplitSpace& s, ProjSide side, DegreeWindow w) {
    CurvedLInfinity L;
    L.field = f;
    L.space = s;
    L.window = w;
    L.max_k = w.max_arity + 1;  // l_k(F[1], f_1..f_{k-1}) can survive while brackets fit
    L.l0 = {};                  // Delta = 0
    L.sampler.has_shifted = true;
    L.sampler.plain_ab = side == ProjSide::A;
    L.sampler.plain_ba = side == ProjSide::B;
    L.lk = [f, s, side, w](std::span<const LComp> args) -> LElem {
        if (args.empty()) throw DimMismatch("lk: empty tuple");
        const int sign_exp = unshuffle_sign_exp(args);
        std::vector<const LComp*> sh, pl;
        for (const auto& c : args) (c.shifted ? sh : pl).push_back(&c);
        const std::size_t k = args.size();
        if (sh.size() == 0) return {};  // P[...[Delta, a_1]...] with Delta = 0
        if (sh.size() == 1 && k == 1) return apply_sign(lplain(proj_side(s, side, sh[0]->map)), sign_exp);
        if (sh.size() == 1) {
            MLMap acc = sh[0]->map;
            for (const auto* p : pl) acc = wbracket(w, acc, p->map);
            return apply_sign(lplain(proj_side(s, side, acc)), sign_exp);
        }
        if (sh.size() == 2 && k == 2) {
            const int deg_x = sh[0]->map.arity() - 1;  // unshifted degree
            MLMap br = wbracket(w, sh[0]->map, sh[1]->map);
            return apply_sign(lshift(std::move(br)), sign_exp + deg_x);
        }
        return {};
    };
    L.exact_residual = [f, s, side](const LElem& alpha) -> LElem {
        MLMap om2 = MLMap::square(f, s.total(), 2);
        MLMap n1 = MLMap::square(f, s.total(), 1);
        for (const auto& c : lelem_normalize(alpha)) {
            if (c.shifted && c.map.arity() == 2)
                om2 = om2 + c.map;
            else if (!c.shifted && c.map.arity() == 1)
                n1 = n1 + c.map;
            else
                throw DimMismatch("exact residual: only degree-0 pairs are supported");
        }
        LElem res = lshift(-circle(om2, om2));  // -(1/2)[Omega, Omega][1]
        return lelem_add(res, lplain(proj_side(s, side, shear_conjugate(om2, n1))));
    };
    return L;
}

CurvedLInfinity controlling_strong(const QuasiTwilledAlgebra& q, DegreeWindow w) {
    return voronov_small(q.field, q.space, omega(q), ProjSide::A, w);
}

CurvedLInfinity controlling_weak(const QuasiTwilledAlgebra& q, DegreeWindow w) {
    return voronov_small(q.field, q.space, omega(q), ProjSide::B, w);
}

LElem strong_candidate(const QuasiTwilledAlgebra& q, const MLMap& D) {
    LElem e;
    e.push_back(LComp{false, embed_hom_ab(q.space, D)});
    return e;
}

LElem weak_candidate(const QuasiTwilledAlgebra& q, const MLMap& r) {
    LElem e;
    e.push_back(LComp{false, embed_hom_ba(q.space, r)});
    return e;
}

LElem pair_candidate(const SplitSpace& s, const MLMap& omega2, const MLMap& linear, ProjSide side) {
    LElem e;
    if (!omega2.is_zero()) {
        if (!in_subalgebra(s, omega2, Strata::Q)) throw DimMismatch("pair_candidate: omega part must lie in Q");
        e.push_back(LComp{true, omega2});
    }
    if (!linear.is_zero())
        e.push_back(LComp{false, side == ProjSide::A ? embed_hom_ab(s, linear) : embed_hom_ba(s, linear)});
    return e;
}

CurvedLInfinity governing_strong(const QuasiTwilledAlgebra& q, const MLMap& D, DegreeWindow w) {
    if (!is_strong(q, D)) throw ValidationError("governing_strong: D is not strong", "strong-equation");
    return twist(controlling_strong(q, w), strong_candidate(q, D));
}

CurvedLInfinity governing_weak(const QuasiTwilledAlgebra& q, const MLMap& r, DegreeWindow w) {
    if (!is_weak(q, r)) throw ValidationError("governing_weak: r is not weak", "weak-equation");
    return twist(controlling_weak(q, w), weak_candidate(q, r));
}

CurvedLInfinity simultaneous_strong(const Field& f, const SplitSpace& s, DegreeWindow w) {
    return voronov_big(f, s, ProjSide::A, w);
}

CurvedLInfinity simultaneous_weak(const Field& f, const SplitSpace& s, DegreeWindow w) {
    return voronov_big(f, s, ProjSide::B, w);
}

CurvedLInfinity governing_pair_strong(const QuasiTwilledAlgebra& q, const MLMap& D, DegreeWindow w) {
    if (!is_strong(q, D)) throw ValidationError("governing_pair_strong: D is not strong", "strong-equation");
    return twist(simultaneous_strong(q.field, q.space, w), pair_candidate(q.space, omega(q), D, ProjSide::A));
}

CurvedLInfinity governing_pair_weak(const QuasiTwilledAlgebra& q, const MLMap& r, DegreeWindow w) {
    if (!is_weak(q, r)) throw ValidationError("governing_pair_weak: r is not weak", "weak-equation");
    return twist(simultaneous_weak(q.field, q.space, w), pair_candidate(q.space, omega(q), r, ProjSide::B));
}

namespace {

int pow_sign_exp(int e) { return ((e % 2) + 2) % 2; }

/* Literal modified-r-matrix l2: the displayed double-sum formula on
 * f in Hom(A^{x m}, A), g in Hom(A^{x n}, A), with a . b the product of A. */
MLMap literal_rmatrix_l2(const Algebra& A, const MLMap& f, const MLMap& g) {
    const Field& F = A.field;
    const int da = A.dim;
    const int m = f.arity(), n = g.arity();
    const MLMap& mu = A.product;
    MLMap out(F, std::vector<int>(static_cast<std::size_t>(m + n), da), da);
    std::vector<int> tuple(static_cast<std::size_t>(m + n));
    const Scalar one = Scalar::one(F);
    for (std::size_t t = 0; t < out.tuple_count(); ++t) {
        out.unflatten(t, tuple);
        std::vector<Vec> a;
        for (int k = 0; k < m + n; ++k) a.push_back(basis_vec(F, da, tuple[static_cast<std::size_t>(k)]));
        Vec acc = zero_vec(F, da);
        auto fsum = [&](const MLMap& outer, const MLMap& inner, int om, int in, bool prod_right, int base_exp) {
            // outer(a_1..a_{s}, inner(..) . a  or  a . inner(..), ..), s ranging
            for (int s = 0; s < om; ++s) {
                std::vector<Vec> args;
                for (int k = 0; k < s; ++k) args.push_back(a[static_cast<std::size_t>(k)]);
                std::vector<Vec> iargs;
                if (prod_right) {
                    for (int k = s; k < s + in; ++k) iargs.push_back(a[static_cast<std::size_t>(k)]);
                    args.push_back(mu.apply2(inner.apply(iargs), a[static_cast<std::size_t>(s + in)]));
                } else {
                    for (int k = s + 1; k < s + in + 1; ++k) iargs.push_back(a[static_cast<std::size_t>(k)]);
                    args.push_back(mu.apply2(a[static_cast<std::size_t>(s)], inner.apply(iargs)));
                }
                for (int k = s + in + 1; k < m + n; ++k) args.push_back(a[static_cast<std::size_t>(k)]);
                Vec term = outer.apply(args);
                const int exp = base_exp + (prod_right ? s * in : (s + 1) * in);
                if (pow_sign_exp(exp)) term = scale(-one, term);
                acc = add(acc, term);
            }
        };
        fsum(f, g, m, n, true, m);                   // (-1)^m (-1)^{(i-1)n} f(..., g(..) . a, ...)
        fsum(f, g, m, n, false, m + 1);              // -(-1)^m (-1)^{in} f(..., a . g(..), ...)
        fsum(g, f, n, m, true, m * (n + 1) + 1);     // -(-1)^{m(n+1)} (-1)^{(i-1)m} g(..., f(..) . a, ...)
        fsum(g, f, n, m, false, m * (n + 1));        // +(-1)^{m(n+1)} (-1)^{im} g(..., a . f(..), ...)
        {
            std::vector<Vec> fa(a.begin(), a.begin() + m), ga(a.begin() + m, a.end());
            Vec term = mu.apply2(f.apply(fa), g.apply(ga));
            if (pow_sign_exp(m * (n + 1))) term = scale(-one, term);
            acc = add(acc, term);
        }
        {
            std::vector<Vec> ga(a.begin(), a.begin() + n), fa(a.begin() + n, a.end());
            Vec term = mu.apply2(g.apply(ga), f.apply(fa));
            if (pow_sign_exp(m + 1)) term = scale(-one, term);
            acc = add(acc, term);
        }
        for (int o = 0; o < da; ++o) out.at_flat(t, o) = acc[static_cast<std::size_t>(o)];
    }
    return out;
}

/* Literal matched-pair l1 on f in Hom(B^{x m}, A). */
MLMap literal_mp_l1(const QuasiTwilledAlgebra& q, const MLMap& f) {
    const Field& F = q.field;
    const int da = q.space.dim_a, db = q.space.dim_b;
    const int m = f.arity();
    MLMap out(F, std::vector<int>(static_cast<std::size_t>(m) + 1, db), da);
    std::vector<int> tuple(static_cast<std::size_t>(m) + 1);
    const Scalar one = Scalar::one(F);
    for (std::size_t t = 0; t < out.tuple_count(); ++t) {
        out.unflatten(t, tuple);
        std::vector<Vec> x;
        for (int k = 0; k <= m; ++k) x.push_back(basis_vec(F, db, tuple[static_cast<std::size_t>(k)]));
        Vec acc = zero_vec(F, da);
        {
            Vec head = q.rh.apply2(x[0], f.apply(std::span<const Vec>(x.data() + 1, static_cast<std::size_t>(m))));
            if (pow_sign_exp(m + 1)) head = scale(-one, head);
            acc = add(acc, head);
        }
        acc = add(acc, q.lh.apply2(f.apply(std::span<const Vec>(x.data(), static_cast<std::size_t>(m))),
                                   x[static_cast<std::size_t>(m)]));
        for (int s = 0; s < m; ++s) {  // i = s + 1
            std::vector<Vec> args;
            for (int k = 0; k < s; ++k) args.push_back(x[static_cast<std::size_t>(k)]);
            args.push_back(q.nu.apply2(x[static_cast<std::size_t>(s)], x[static_cast<std::size_t>(s + 1)]));
            for (int k = s + 2; k <= m; ++k) args.push_back(x[static_cast<std::size_t>(k)]);
            Vec term = f.apply(args);
            if (pow_sign_exp(s + m)) term = scale(-one, term);  // (-1)^{i+m+1}
            acc = add(acc, term);
        }
        for (int o = 0; o < da; ++o) out.at_flat(t, o) = acc[static_cast<std::size_t>(o)];
    }
    return out;
}

/* Literal matched-pair l2 on f, g in Hom(B^{x .}, A): same shape as the
 * r-matrix formula with the actions in place of the products. */
MLMap literal_mp_l2(const QuasiTwilledAlgebra& q, const MLMap& f, const MLMap& g) {
    const Field& F = q.field;
    const int da = q.space.dim_a, db = q.space.dim_b;
    const int m = f.arity(), n = g.arity();
    MLMap out(F, std::vector<int>(static_cast<std::size_t>(m + n), db), da);
    std::vector<int> tuple(static_cast<std::size_t>(m + n));
    const Scalar one = Scalar::one(F);
    for (std::size_t t = 0; t < out.tuple_count(); ++t) {
        out.unflatten(t, tuple);
        std::vector<Vec> x;
        for (int k = 0; k < m + n; ++k) x.push_back(basis_vec(F, db, tuple[static_cast<std::size_t>(k)]));
        Vec acc = zero_vec(F, da);
        auto gsum = [&](const MLMap& outer, const MLMap& inner, int om, int in, bool act_right, int base_exp) {
            for (int s = 0; s < om; ++s) {
                std::vector<Vec> args;
                for (int k = 0; k < s; ++k) args.push_back(x[static_cast<std::size_t>(k)]);
                std::vector<Vec> iargs;
                if (act_right) {  // inner(..) |> x_{s+in}
                    for (int k = s; k < s + in; ++k) iargs.push_back(x[static_cast<std::size_t>(k)]);
                    args.push_back(q.tr.apply2(inner.apply(iargs), x[static_cast<std::size_t>(s + in)]));
                } else {  // x_s <| inner(..)
                    for (int k = s + 1; k < s + in + 1; ++k) iargs.push_back(x[static_cast<std::size_t>(k)]);
                    args.push_back(q.tl.apply2(x[static_cast<std::size_t>(s)], inner.apply(iargs)));
                }
                for (int k = s + in + 1; k < m + n; ++k) args.push_back(x[static_cast<std::size_t>(k)]);
                Vec term = outer.apply(args);
                const int exp = base_exp + (act_right ? s * in : (s + 1) * in);
                if (pow_sign_exp(exp)) term = scale(-one, term);
                acc = add(acc, term);
            }
        };
        gsum(f, g, m, n, true, m);
        gsum(f, g, m, n, false, m + 1);
        gsum(g, f, n, m, true, m * (n + 1) + 1);
        gsum(g, f, n, m, false, m * (n + 1));
        {
            std::vector<Vec> fa(x.begin(), x.begin() + m), ga(x.begin() + m, x.end());
            Vec term = q.mu.apply2(f.apply(fa), g.apply(ga));
            if (pow_sign_exp(m * (n + 1))) term = scale(-one, term);
            acc = add(acc, term);
        }
        {
            std::vector<Vec> ga(x.begin(), x.begin() + n), fa(x.begin() + n, x.end());
            Vec term = q.mu.apply2(g.apply(ga), f.apply(fa));
            if (pow_sign_exp(m + 1)) term = scale(-one, term);
            acc = add(acc, term);
        }
        for (int o = 0; o < da; ++o) out.at_flat(t, o) = acc[static_cast<std::size_t>(o)];
    }
    return out;
}

}  // namespace

CurvedLInfinity modified_rmatrix_controlling(const Algebra& A, DegreeWindow w) {
    CurvedLInfinity L;
    L.field = A.field;
    L.space = SplitSpace{A.dim, A.dim};
    L.window = w;
    L.max_k = 2;
    L.l0 = lplain(embed_hom_ab(L.space, A.product));  // l0 = mu
    L.sampler.plain_ab = true;
    const SplitSpace s = L.space;
    const Algebra alg = A;
    L.lk = [s, alg, w](std::span<const LComp> args) -> LElem {
        for (const auto& c : args)
            if (c.shifted) throw DimMismatch("lk: this carrier has no shifted part");
        if (args.size() != 2) return {};  // l1 = 0 and l_k = 0 for k >= 3
        if (args[0].map.arity() + args[1].map.arity() > w.max_arity)
            throw WindowOverflow("literal l2 beyond the degree window");
        MLMap f = extract_hom_ab(s, args[0].map);
        MLMap g = extract_hom_ab(s, args[1].map);
        return lplain(embed_hom_ab(s, literal_rmatrix_l2(alg, f, g)));
    };
    // same exact residual as the derived twin on box(A)
    CurvedLInfinity derived = controlling_strong(box(A), w);
    L.exact_residual = derived.exact_residual;
    return L;
}

CurvedLInfinity matched_pair_weak_controlling(const QuasiTwilledAlgebra& mp, DegreeWindow w) {
    if (!is_matched_pair(mp)) throw ValidationError("matched_pair_weak_controlling: not a matched pair", "theta");
    CurvedLInfinity L;
    L.field = mp.field;
    L.space = mp.space;
    L.window = w;
    L.max_k = 2;  // l3 contains theta~ = 0
    L.l0 = {};
    L.sampler.plain_ba = true;
    const QuasiTwilledAlgebra q = mp;
    L.lk = [q, w](std::span<const LComp> args) -> LElem {
        for (const auto& c : args)
            if (c.shifted) throw DimMismatch("lk: this carrier has no shifted part");
        if (args.size() == 1) return lplain(embed_hom_ba(q.space, literal_mp_l1(q, extract_hom_ba(q.space, args[0].map))));
        if (args.size() == 2) {
            if (args[0].map.arity() + args[1].map.arity() > w.max_arity)
                throw WindowOverflow("literal l2 beyond the degree window");
            MLMap f = extract_hom_ba(q.space, args[0].map);
            MLMap g = extract_hom_ba(q.space, args[1].map);
            return lplain(embed_hom_ba(q.space, literal_mp_l2(q, f, g)));
        }
        return {};
    };
    CurvedLInfinity derived = controlling_weak(mp, w);
    L.exact_residual = derived.exact_residual;
    return L;
}

LComp sample_component(const CurvedLInfinity& L, Rng& rng, int arity_cap) {
    std::vector<int> kinds;  // 0 = shifted, 1 = plain ab, 2 = plain ba
    if (L.sampler.has_shifted) kinds.push_back(0);
    if (L.sampler.plain_ab) kinds.push_back(1);
    if (L.sampler.plain_ba) kinds.push_back(2);
    if (kinds.empty()) throw Error("sample_component: carrier has no sampler spec");
    const int kind = kinds[rng.below(kinds.size())];
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, arity_cap))));
    const SplitSpace& s = L.space;
    if (kind == 0) {
        MLMap m = random_mlmap(L.field, std::vector<int>(static_cast<std::size_t>(n), s.total()), s.total(), rng);
        m = m - proj_b(s, m);  // keep the Q strata
        return LComp{true, std::move(m)};
    }
    if (kind == 1) {
        MLMap f = random_mlmap(L.field, std::vector<int>(static_cast<std::size_t>(n), s.dim_a), s.dim_b, rng);
        return LComp{false, embed_hom_ab(s, f)};
    }
    MLMap f = random_mlmap(L.field, std::vector<int>(static_cast<std::size_t>(n), s.dim_b), s.dim_a, rng);
    return LComp{false, embed_hom_ba(s, f)};
}

bool check_graded_symmetry(const CurvedLInfinity& L, int samples, Rng& rng, std::string* diag) {
    for (int t = 0; t < samples; ++t) {
        const int k = 2 + static_cast<int>(rng.below(2));
        const int cap = std::max(1, 1 + (L.window.max_arity - 2) / k);
        std::vector<LComp> tuple;
        for (int j = 0; j < k; ++j) tuple.push_back(sample_component(L, rng, cap));
        const std::size_t pos = rng.below(static_cast<std::uint64_t>(k - 1));
        LElem lhs = L.lk(tuple);
        std::vector<LComp> swapped = tuple;
        std::swap(swapped[pos], swapped[pos + 1]);
        const int exp = tuple[pos].degree() * tuple[pos + 1].degree();
        LElem rhs = apply_sign(L.lk(swapped), exp);
        if (!lelem_equal(lhs, rhs)) {
            if (diag) *diag = "graded symmetry fails at sample " + std::to_string(t) + ", k=" + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool check_generalized_jacobi(const CurvedLInfinity& L, int max_n, int samples, Rng& rng, std::string* diag) {
    for (int N = 0; N <= max_n; ++N) {
        const int reps = N == 0 ? 1 : samples;
        for (int rep = 0; rep < reps; ++rep) {
            const int cap = N == 0 ? 2 : std::max(1, 1 + (L.window.max_arity - 3) / N);
            std::vector<LComp> x;
            for (int j = 0; j < N; ++j) x.push_back(sample_component(L, rng, cap));
            LElem total;
            std::vector<int> subset;
            auto run_subset = [&](const std::vector<int>& sel) {
                std::vector<char> in(static_cast<std::size_t>(N), 0);
                for (int idx : sel) in[static_cast<std::size_t>(idx)] = 1;
                int sign_exp = 0;
                for (int sidx : sel)
                    for (int tdx = 0; tdx < sidx; ++tdx)
                        if (!in[static_cast<std::size_t>(tdx)])
                            sign_exp += x[static_cast<std::size_t>(tdx)].degree() * x[static_cast<std::size_t>(sidx)].degree();
                std::vector<LComp> inner_args;
                for (int idx : sel) inner_args.push_back(x[static_cast<std::size_t>(idx)]);
                LElem inner = sel.empty() ? L.l0 : L.lk(inner_args);
                std::vector<LComp> rest;
                for (int j = 0; j < N; ++j)
                    if (!in[static_cast<std::size_t>(j)]) rest.push_back(x[static_cast<std::size_t>(j)]);
                for (const LComp& c : inner) {
                    std::vector<LComp> outer;
                    outer.push_back(c);
                    outer.insert(outer.end(), rest.begin(), rest.end());
                    total = lelem_add(total, apply_sign(L.lk(outer), sign_exp));
                }
            };
            auto rec = [&](auto&& self, int start, int remaining) -> void {
                if (remaining == 0) {
                    run_subset(subset);
                    return;
                }
                for (int v = start; v <= N - remaining; ++v) {
                    subset.push_back(v);
                    self(self, v + 1, remaining - 1);
                    subset.pop_back();
                }
            };
            for (int i = 0; i <= N; ++i) rec(rec, 0, i);
            if (!lelem_is_zero(total)) {
                if (diag)
                    *diag = "generalized Jacobi fails at N=" + std::to_string(N) + ", sample " + std::to_string(rep);
                return false;
            }
        }
    }
    return true;
}

bool check_twist_consistency(const CurvedLInfinity& L, const LElem& alpha, int samples, Rng& rng,
                             std::string* diag) {
    CurvedLInfinity T = twist(L, alpha);
    for (int t = 0; t < samples; ++t) {
        LElem beta;
        if (L.sampler.has_shifted) {
            MLMap m = random_mlmap(L.field, {L.space.total(), L.space.total()}, L.space.total(), rng);
            beta = lelem_add(beta, lshift(m - proj_b(L.space, m)));
        }
        if (L.sampler.plain_ab) {
            MLMap f = random_mlmap(L.field, {L.space.dim_a}, L.space.dim_b, rng);
            beta = lelem_add(beta, lplain(embed_hom_ab(L.space, f)));
        }
        if (L.sampler.plain_ba) {
            MLMap f = random_mlmap(L.field, {L.space.dim_b}, L.space.dim_a, rng);
            beta = lelem_add(beta, lplain(embed_hom_ba(L.space, f)));
        }
        LElem lhs = mc_residual(L, lelem_add(alpha, beta));
        LElem rhs = mc_residual(T, beta);
        if (!lelem_equal(lhs, rhs)) {
            if (diag) *diag = "twist consistency fails at sample " + std::to_string(t);
            return false;
        }
    }
    return true;
}

}  // namespace qta
