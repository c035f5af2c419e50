#include "qta/quasi_twilled.hpp"

#include <functional>

#include "qta/error.hpp"
#include "qta/matrix.hpp"

namespace qta {

namespace {

std::string vec_str(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + "]";
}

std::string tuple_str(std::span<const int> idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i]);
    }
    return s + ")";
}

/* Runs `law` over all basis tuples of the given slot dimensions; the law
 * returns (lhs, rhs) for one tuple. Records the first violation. */
AxiomCheck check_law(const std::string& name, std::span<const int> dims,
                     const std::function<std::pair<Vec, Vec>(std::span<const int>)>& law) {
    AxiomCheck c{name, true, {}};
    std::vector<int> idx(dims.size(), 0);
    for (;;) {
        auto [lhs, rhs] = law(idx);
        if (!is_zero(sub(lhs, rhs))) {
            c.pass = false;
            c.witness = tuple_str(idx) + " lhs=" + vec_str(lhs) + " rhs=" + vec_str(rhs);
            return c;
        }
        int k = static_cast<int>(dims.size()) - 1;
        while (k >= 0) {
            if (++idx[static_cast<std::size_t>(k)] < dims[static_cast<std::size_t>(k)]) break;
            idx[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return c;
}

}  // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Raw: return "raw";
        case Provenance::DirectProduct: return "direct_product";
        case Provenance::Semidirect: return "semidirect";
        case Provenance::AlgebraInBimodules: return "algebra_in_bimodules";
        case Provenance::LeftModule: return "left_module";
        case Provenance::RightModule: return "right_module";
        case Provenance::MatchedPair: return "matched_pair";
        case Provenance::Box: return "box";
        case Provenance::ThetaTwisted: return "theta_twisted_semidirect";
        case Provenance::Reynolds: return "reynolds";
        case Provenance::NonAbelianBoxtimes: return "nonabelian_boxtimes";
    }
    return "raw";
}

QuasiTwilledAlgebra make_qta(const Field& f, const SplitSpace& s, MLMap mu, MLMap nu, MLMap tr, MLMap tl, MLMap rh,
                             MLMap lh, MLMap theta, Provenance tag) {
    const int da = s.dim_a, db = s.dim_b;
    auto expect = [&](const MLMap& m, int i1, int i2, int out, const char* name) {
        if (!(m.field() == f) || m.arity() != 2 || m.in_dims()[0] != i1 || m.in_dims()[1] != i2 || m.out_dim() != out)
            throw DimMismatch(std::string("make_qta: bad shape for ") + name);
    };
    expect(mu, da, da, da, "mu");
    expect(nu, db, db, db, "nu");
    expect(tr, da, db, db, "tr");
    expect(tl, db, da, db, "tl");
    expect(rh, db, da, da, "rh");
    expect(lh, da, db, da, "lh");
    expect(theta, da, da, db, "theta");
    return QuasiTwilledAlgebra{f, s, std::move(mu), std::move(nu), std::move(tr), std::move(tl),
                               std::move(rh), std::move(lh), std::move(theta), tag};
}

QuasiTwilledAlgebra zero_qta(const Field& f, const SplitSpace& s) {
    const int da = s.dim_a, db = s.dim_b;
    return make_qta(f, s, MLMap(f, {da, da}, da), MLMap(f, {db, db}, db), MLMap(f, {da, db}, db),
                    MLMap(f, {db, da}, db), MLMap(f, {db, da}, da), MLMap(f, {da, db}, da), MLMap(f, {da, da}, db));
}

std::string AxiomReport::first_failure() const {
    for (const auto& c : items)
        if (!c.pass) return c.name + " at " + c.witness;
    return {};
}

AxiomReport validate_axioms(const QuasiTwilledAlgebra& q) {
    const Field& F = q.field;
    const int da = q.space.dim_a, db = q.space.dim_b;
    auto eA = [&](int i) { return basis_vec(F, da, i); };
    auto eB = [&](int i) { return basis_vec(F, db, i); };
    const auto& mu = q.mu;
    const auto& nu = q.nu;
    const auto& tr = q.tr;
    const auto& tl = q.tl;
    const auto& rh = q.rh;
    const auto& lh = q.lh;
    const auto& th = q.theta;

    AxiomReport rep;
    auto law = [&](const std::string& name, std::initializer_list<int> dims,
                   std::function<std::pair<Vec, Vec>(std::span<const int>)> fn) {
        std::vector<int> dd(dims);
        rep.items.push_back(check_law(name, dd, fn));
    };

    // nu associative, (A, ->, <-) a B_nu-bimodule
    law("nu-assoc", {db, db, db}, [&](std::span<const int> i) {
        Vec x = eB(i[0]), y = eB(i[1]), z = eB(i[2]);
        return std::pair{nu.apply2(nu.apply2(x, y), z), nu.apply2(x, nu.apply2(y, z))};
    });
    law("bimodule-left", {db, db, da}, [&](std::span<const int> i) {
        Vec x = eB(i[0]), y = eB(i[1]), a = eA(i[2]);
        return std::pair{rh.apply2(nu.apply2(x, y), a), rh.apply2(x, rh.apply2(y, a))};
    });
    law("bimodule-right", {da, db, db}, [&](std::span<const int> i) {
        Vec a = eA(i[0]), x = eB(i[1]), y = eB(i[2]);
        return std::pair{lh.apply2(a, nu.apply2(x, y)), lh.apply2(lh.apply2(a, x), y)};
    });
    law("bimodule-mixed", {db, da, db}, [&](std::span<const int> i) {
        Vec x = eB(i[0]), a = eA(i[1]), y = eB(i[2]);
        return std::pair{lh.apply2(rh.apply2(x, a), y), rh.apply2(x, lh.apply2(a, y))};
    });
    // (b1) a(bc) + a <- theta(b,c) = (ab)c + theta(a,b) -> c
    law("b1", {da, da, da}, [&](std::span<const int> i) {
        Vec a = eA(i[0]), b = eA(i[1]), c = eA(i[2]);
        return std::pair{add(mu.apply2(a, mu.apply2(b, c)), lh.apply2(a, th.apply2(b, c))),
                         add(mu.apply2(mu.apply2(a, b), c), rh.apply2(th.apply2(a, b), c))};
    });
    // (b2) (ab) |> x + theta(a,b).x = a |> (b |> x) + theta(a, b <- x)
    law("b2", {da, da, db}, [&](std::span<const int> i) {
        Vec a = eA(i[0]), b = eA(i[1]), x = eB(i[2]);
        return std::pair{add(tr.apply2(mu.apply2(a, b), x), nu.apply2(th.apply2(a, b), x)),
                         add(tr.apply2(a, tr.apply2(b, x)), th.apply2(a, lh.apply2(b, x)))};
    });
    // (b3) x <| (ab) + x.theta(a,b) = (x <| a) <| b + theta(x -> a, b)
    law("b3", {db, da, da}, [&](std::span<const int> i) {
        Vec x = eB(i[0]), a = eA(i[1]), b = eA(i[2]);
        return std::pair{add(tl.apply2(x, mu.apply2(a, b)), nu.apply2(x, th.apply2(a, b))),
                         add(tl.apply2(tl.apply2(x, a), b), th.apply2(rh.apply2(x, a), b))};
    });
    // (b4) a |> (x <| b) + theta(a, x -> b) = (a |> x) <| b + theta(a <- x, b)
    law("b4", {da, db, da}, [&](std::span<const int> i) {
        Vec a = eA(i[0]), x = eB(i[1]), b = eA(i[2]);
        return std::pair{add(tr.apply2(a, tl.apply2(x, b)), th.apply2(a, rh.apply2(x, b))),
                         add(tl.apply2(tr.apply2(a, x), b), th.apply2(lh.apply2(a, x), b))};
    });
    // (b5) a |> (xy) = (a |> x)y + (a <- x) |> y
    law("b5", {da, db, db}, [&](std::span<const int> i) {
        Vec a = eA(i[0]), x = eB(i[1]), y = eB(i[2]);
        return std::pair{tr.apply2(a, nu.apply2(x, y)),
                         add(nu.apply2(tr.apply2(a, x), y), tr.apply2(lh.apply2(a, x), y))};
    });
    // (b6) (xy) <| a = x(y <| a) + x <| (y -> a)
    law("b6", {db, db, da}, [&](std::span<const int> i) {
        Vec x = eB(i[0]), y = eB(i[1]), a = eA(i[2]);
        return std::pair{tl.apply2(nu.apply2(x, y), a),
                         add(nu.apply2(x, tl.apply2(y, a)), tl.apply2(x, rh.apply2(y, a)))};
    });
    // (b7) x <| (a <- y) + x(a |> y) = (x -> a) |> y + (x <| a)y
    law("b7", {db, da, db}, [&](std::span<const int> i) {
        Vec x = eB(i[0]), a = eA(i[1]), y = eB(i[2]);
        return std::pair{add(tl.apply2(x, lh.apply2(a, y)), nu.apply2(x, tr.apply2(a, y))),
                         add(tr.apply2(rh.apply2(x, a), y), nu.apply2(tl.apply2(x, a), y))};
    });
    // (b8) x -> (ab) = (x -> a)b + (x <| a) -> b
    law("b8", {db, da, da}, [&](std::span<const int> i) {
        Vec x = eB(i[0]), a = eA(i[1]), b = eA(i[2]);
        return std::pair{rh.apply2(x, mu.apply2(a, b)),
                         add(mu.apply2(rh.apply2(x, a), b), rh.apply2(tl.apply2(x, a), b))};
    });
    // (b9) (ab) <- x = a(b <- x) + a <- (b |> x)
    law("b9", {da, da, db}, [&](std::span<const int> i) {
        Vec a = eA(i[0]), b = eA(i[1]), x = eB(i[2]);
        return std::pair{lh.apply2(mu.apply2(a, b), x),
                         add(mu.apply2(a, lh.apply2(b, x)), lh.apply2(a, tr.apply2(b, x)))};
    });
    // (b10) a <- (x <| b) + a(x -> b) = (a |> x) -> b + (a <- x)b
    law("b10", {da, db, da}, [&](std::span<const int> i) {
        Vec a = eA(i[0]), x = eB(i[1]), b = eA(i[2]);
        return std::pair{add(lh.apply2(a, tl.apply2(x, b)), mu.apply2(a, rh.apply2(x, b))),
                         add(rh.apply2(tr.apply2(a, x), b), mu.apply2(lh.apply2(a, x), b))};
    });
    // (b11) theta(a, bc) + a |> theta(b,c) = theta(ab, c) + theta(a,b) <| c
    law("b11", {da, da, da}, [&](std::span<const int> i) {
        Vec a = eA(i[0]), b = eA(i[1]), c = eA(i[2]);
        return std::pair{add(th.apply2(a, mu.apply2(b, c)), tr.apply2(a, th.apply2(b, c))),
                         add(th.apply2(mu.apply2(a, b), c), tl.apply2(th.apply2(a, b), c))};
    });

    rep.pass = true;
    for (const auto& c : rep.items) rep.pass = rep.pass && c.pass;
    return rep;
}

MLMap omega(const QuasiTwilledAlgebra& q) {
    HatMaps h = hat_components(q.space, q.mu, q.nu, q.tr, q.tl, q.rh, q.lh, q.theta);
    return h.theta_tilde + h.mu_hat + h.nu_hat;
}

MLMap total_product(const QuasiTwilledAlgebra& q) {
    const SplitSpace& s = q.space;
    const int da = s.dim_a, d = s.total();
    MLMap m = MLMap::square(q.field, d, 2);
    int idx[2];
    int sub[2];
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            idx[0] = i;
            idx[1] = j;
            const bool ia = s.in_a(i), ja = s.in_a(j);
            sub[0] = ia ? i : i - da;
            sub[1] = ja ? j : j - da;
            if (ia && ja) {
                for (int o = 0; o < da; ++o) m.at(idx, o) = q.mu.at(sub, o);
                for (int o = 0; o < s.dim_b; ++o) m.at(idx, da + o) = q.theta.at(sub, o);
            } else if (ia && !ja) {
                for (int o = 0; o < da; ++o) m.at(idx, o) = q.lh.at(sub, o);
                for (int o = 0; o < s.dim_b; ++o) m.at(idx, da + o) = q.tr.at(sub, o);
            } else if (!ia && ja) {
                for (int o = 0; o < da; ++o) m.at(idx, o) = q.rh.at(sub, o);
                for (int o = 0; o < s.dim_b; ++o) m.at(idx, da + o) = q.tl.at(sub, o);
            } else {
                for (int o = 0; o < da; ++o) m.at(idx, o) = Scalar::zero(q.field);
                for (int o = 0; o < s.dim_b; ++o) m.at(idx, da + o) = q.nu.at(sub, o);
            }
        }
    }
    return m;
}

bool validate_via_mc(const QuasiTwilledAlgebra& q) { return associator(omega(q)).is_zero(); }

bool is_matched_pair(const QuasiTwilledAlgebra& q) { return q.theta.is_zero() && validate_axioms(q).pass; }

QuasiTwilledAlgebra qta_from_omega(const Field& f, const SplitSpace& s, const MLMap& om, Provenance tag) {
    if (!om.is_square() || om.sq_dim() != s.total() || om.arity() != 2)
        throw DimMismatch("qta_from_omega: need an arity-2 map on the split space");
    if (!proj_b(s, om).is_zero()) throw DimMismatch("qta_from_omega: map has a BxB -> A part, not in the Q strata");
    const int da = s.dim_a, db = s.dim_b;
    MLMap mu(f, {da, da}, da), nu(f, {db, db}, db), tr(f, {da, db}, db), tl(f, {db, da}, db), rh(f, {db, da}, da),
        lh(f, {da, db}, da), th(f, {da, da}, db);
    int idx[2];
    int sub[2];
    for (int i = 0; i < s.total(); ++i) {
        for (int j = 0; j < s.total(); ++j) {
            idx[0] = i;
            idx[1] = j;
            const bool ia = s.in_a(i), ja = s.in_a(j);
            sub[0] = ia ? i : i - da;
            sub[1] = ja ? j : j - da;
            if (ia && ja) {
                for (int o = 0; o < da; ++o) mu.at(sub, o) = om.at(idx, o);
                for (int o = 0; o < db; ++o) th.at(sub, o) = om.at(idx, da + o);
            } else if (ia && !ja) {
                for (int o = 0; o < da; ++o) lh.at(sub, o) = om.at(idx, o);
                for (int o = 0; o < db; ++o) tr.at(sub, o) = om.at(idx, da + o);
            } else if (!ia && ja) {
                for (int o = 0; o < da; ++o) rh.at(sub, o) = om.at(idx, o);
                for (int o = 0; o < db; ++o) tl.at(sub, o) = om.at(idx, da + o);
            } else {
                for (int o = 0; o < db; ++o) nu.at(sub, o) = om.at(idx, da + o);
            }
        }
    }
    return make_qta(f, s, std::move(mu), std::move(nu), std::move(tr), std::move(tl), std::move(rh), std::move(lh),
                    std::move(th), tag);
}

Cochain zero_cochain(const QuasiTwilledAlgebra& q, int degree) {
    return Cochain{degree, MLMap::square(q.field, q.space.total(), degree)};
}

Cochain random_cochain(const QuasiTwilledAlgebra& q, int degree, Rng& rng) {
    MLMap m = random_mlmap(q.field, std::vector<int>(static_cast<std::size_t>(degree), q.space.total()),
                           q.space.total(), rng);
    if (degree >= 1) m = m - proj_b(q.space, m);  // stay inside the Q strata
    return Cochain{degree, std::move(m)};
}

MLMap cochain_component(const SplitSpace& s, const Cochain& F, int r) {
    return project(s, F.map, Bidegree{F.degree - r, r - 1});
}

Cochain qta_differential(const QuasiTwilledAlgebra& q, const Cochain& F) {
    if (!F.map.is_square() || F.map.sq_dim() != q.space.total() || F.map.arity() != F.degree)
        throw DimMismatch("qta_differential: malformed cochain");
    HatMaps h = hat_components(q.space, q.mu, q.nu, q.tr, q.tl, q.rh, q.lh, q.theta);
    MLMap d = bracket(h.theta_tilde, F.map) + bracket(h.mu_hat, F.map) + bracket(h.nu_hat, F.map);
    if ((F.degree - 1) % 2 != 0) d = -d;  // (-1)^{n-1}
    return Cochain{F.degree + 1, std::move(d)};
}

Cochain matched_pair_differential(const QuasiTwilledAlgebra& q, const Cochain& F) {
    if (!q.theta.is_zero()) throw ValidationError("matched_pair_differential: theta != 0", "theta");
    if (!F.map.is_square() || F.map.sq_dim() != q.space.total() || F.map.arity() != F.degree)
        throw DimMismatch("matched_pair_differential: malformed cochain");
    HatMaps h = hat_components(q.space, q.mu, q.nu, q.tr, q.tl, q.rh, q.lh, q.theta);
    MLMap d = bracket(h.mu_hat, F.map) + bracket(h.nu_hat, F.map);
    if ((F.degree - 1) % 2 != 0) d = -d;
    return Cochain{F.degree + 1, std::move(d)};
}

namespace {

/* Canonical basis of C^n for the two theories: all (tuple,
 * output) coefficient slots except the excluded extreme strata. Degree 0
 * is the constants A + B. */
struct CochainBasis {
    std::vector<std::pair<std::size_t, int>> slots;  // (flat tuple, output)
};

CochainBasis cochain_basis(const QuasiTwilledAlgebra& q, int degree, bool matched) {
    CochainBasis b;
    const SplitSpace& s = q.space;
    const MLMap model = MLMap::square(q.field, s.total(), degree);
    std::vector<int> tuple(static_cast<std::size_t>(degree));
    for (std::size_t t = 0; t < model.tuple_count(); ++t) {
        model.unflatten(t, tuple);
        int ca = 0;
        for (int i : tuple)
            if (s.in_a(i)) ++ca;
        for (int o = 0; o < s.total(); ++o) {
            if (degree >= 1) {
                const bool low = ca == 0 && s.in_a(o);              // C^{-1|n}
                const bool high = ca == degree && !s.in_a(o);       // C^{n|-1}
                if (low) continue;
                if (matched && high) continue;
            }
            b.slots.emplace_back(t, o);
        }
    }
    return b;
}

/* Matrix of delta on the degree-n basis; rows run over ALL coefficient
 * slots of arity n+1 so the degree-0 overflow is visible. */
Matrix delta_matrix(const QuasiTwilledAlgebra& q, int degree, bool matched, const CochainBasis& dom) {
    const int d = q.space.total();
    const std::size_t out_slots = static_cast<std::size_t>(d);
    std::size_t rows = out_slots;
    for (int k = 0; k < degree + 1; ++k) rows *= static_cast<std::size_t>(d);
    Matrix M(q.field, static_cast<int>(rows), static_cast<int>(dom.slots.size()));
    for (std::size_t col = 0; col < dom.slots.size(); ++col) {
        Cochain e = zero_cochain(q, degree);
        e.map.at_flat(dom.slots[col].first, dom.slots[col].second) = Scalar::one(q.field);
        Cochain de = matched ? matched_pair_differential(q, e) : qta_differential(q, e);
        const auto& c = de.map.coeffs();
        for (std::size_t r = 0; r < c.size(); ++r)
            if (!c[r].is_zero()) M.at(static_cast<int>(r), static_cast<int>(col)) = c[r];
    }
    return M;
}

/* Restrict rows of M to the slots of the codomain basis. */
Matrix restrict_rows(const Matrix& M, const QuasiTwilledAlgebra& q, int out_degree, const CochainBasis& cod) {
    const int d = q.space.total();
    Matrix R(M.field, static_cast<int>(cod.slots.size()), M.cols);
    for (std::size_t r = 0; r < cod.slots.size(); ++r) {
        const std::size_t flat = cod.slots[r].first * static_cast<std::size_t>(d) +
                                 static_cast<std::size_t>(cod.slots[r].second);
        for (int c = 0; c < M.cols; ++c) R.at(static_cast<int>(r), c) = M.at(static_cast<int>(flat), c);
    }
    (void)out_degree;
    return R;
}

std::vector<int> cohomology_dims(const QuasiTwilledAlgebra& q, int max_degree, bool matched) {
    std::vector<CochainBasis> bases;
    for (int n = 0; n <= max_degree + 1; ++n) bases.push_back(cochain_basis(q, n, matched));
    std::vector<Matrix> full;  // delta^n with unrestricted rows
    for (int n = 0; n <= max_degree; ++n) full.push_back(delta_matrix(q, n, matched, bases[static_cast<std::size_t>(n)]));

    std::vector<int> dims;
    for (int n = 0; n <= max_degree; ++n) {
        const Matrix restricted = restrict_rows(full[static_cast<std::size_t>(n)], q, n + 1,
                                                bases[static_cast<std::size_t>(n + 1)]);
        const int ker_n = static_cast<int>(bases[static_cast<std::size_t>(n)].slots.size()) - rank(restricted);
        int im_prev = 0;
        if (n >= 1) {
            const Matrix& prev = full[static_cast<std::size_t>(n - 1)];
            // part of the image that lies inside the C^n strata:
            // rank(delta) - rank(overflow rows of delta)
            const int full_rank = rank(prev);
            if (n == 1) {
                // overflow rows = slots excluded from the C^1 basis
                std::vector<bool> keep(static_cast<std::size_t>(prev.rows), false);
                const int d = q.space.total();
                for (const auto& [t, o] : bases[1].slots)
                    keep[t * static_cast<std::size_t>(d) + static_cast<std::size_t>(o)] = true;
                int overflow_rows = 0;
                for (bool k : keep)
                    if (!k) ++overflow_rows;
                Matrix Z(q.field, overflow_rows, prev.cols);
                int rr = 0;
                for (int r = 0; r < prev.rows; ++r) {
                    if (keep[static_cast<std::size_t>(r)]) continue;
                    for (int c = 0; c < prev.cols; ++c) Z.at(rr, c) = prev.at(r, c);
                    ++rr;
                }
                im_prev = full_rank - rank(Z);
            } else {
                im_prev = full_rank;  // image lies in the strata automatically
            }
        }
        dims.push_back(ker_n - im_prev);
    }
    return dims;
}

}  // namespace

std::vector<int> qta_cohomology_dims(const QuasiTwilledAlgebra& q, int max_degree) {
    return cohomology_dims(q, max_degree, false);
}

std::vector<int> matched_pair_cohomology_dims(const QuasiTwilledAlgebra& q, int max_degree) {
    if (!q.theta.is_zero()) throw ValidationError("matched_pair_cohomology_dims: theta != 0", "theta");
    return cohomology_dims(q, max_degree, true);
}

Algebra make_algebra(const Field& f, int dim, MLMap product) {
    if (!(product.field() == f) || product.arity() != 2 || product.in_dims()[0] != dim || product.out_dim() != dim)
        throw DimMismatch("make_algebra: bad product shape");
    MLMap assoc = associator(product);
    if (!assoc.is_zero()) {
        std::vector<int> tuple(3);
        for (std::size_t t = 0; t < assoc.tuple_count(); ++t)
            for (int o = 0; o < dim; ++o)
                if (!assoc.at_flat(t, o).is_zero()) {
                    assoc.unflatten(t, tuple);
                    throw ValidationError("make_algebra: product is not associative", "assoc" + tuple_str(tuple));
                }
    }
    return Algebra{f, dim, std::move(product)};
}

namespace {

void require(bool ok, const char* law, const std::string& witness) {
    if (!ok) throw ValidationError(std::string("factory input violates ") + law, witness);
}

void check_bimodule(const Algebra& A, const MLMap& tr, const MLMap& tl) {
    const Field& f = A.field;
    const int da = A.dim, db = tr.out_dim();
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int x = 0; x < db; ++x) {
                Vec a = basis_vec(f, da, i), b = basis_vec(f, da, j), xx = basis_vec(f, db, x);
                require(is_zero(sub(tr.apply2(A.product.apply2(a, b), xx), tr.apply2(a, tr.apply2(b, xx)))),
                        "left-module law", "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(x) + ")");
                require(is_zero(sub(tl.apply2(tl.apply2(xx, a), b), tl.apply2(xx, A.product.apply2(a, b)))),
                        "right-module law", "(" + std::to_string(x) + "," + std::to_string(i) + "," + std::to_string(j) + ")");
                require(is_zero(sub(tl.apply2(tr.apply2(a, xx), b), tr.apply2(a, tl.apply2(xx, b)))),
                        "bimodule law", "(" + std::to_string(i) + "," + std::to_string(x) + "," + std::to_string(j) + ")");
            }
}

void check_module_algebra(const Algebra& A, const Algebra& B, const MLMap& tr, const MLMap& tl) {
    const Field& f = A.field;
    const int da = A.dim, db = B.dim;
    for (int i = 0; i < da; ++i)
        for (int x = 0; x < db; ++x)
            for (int y = 0; y < db; ++y) {
                Vec a = basis_vec(f, da, i), xx = basis_vec(f, db, x), yy = basis_vec(f, db, y);
                require(is_zero(sub(tr.apply2(a, B.product.apply2(xx, yy)), B.product.apply2(tr.apply2(a, xx), yy))),
                        "module-algebra law a|>(xy)=(a|>x)y", "(" + std::to_string(i) + "," + std::to_string(x) + "," + std::to_string(y) + ")");
                require(is_zero(sub(tl.apply2(B.product.apply2(xx, yy), a), B.product.apply2(xx, tl.apply2(yy, a)))),
                        "module-algebra law (xy)<|a=x(y<|a)", "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(i) + ")");
                require(is_zero(sub(B.product.apply2(tl.apply2(xx, a), yy), B.product.apply2(xx, tr.apply2(a, yy)))),
                        "module-algebra law (x<|a)y=x(a|>y)", "(" + std::to_string(x) + "," + std::to_string(i) + "," + std::to_string(y) + ")");
            }
}

void check_cocycle(const Algebra& A, const MLMap& tr, const MLMap& tl, const MLMap& theta) {
    const Field& f = A.field;
    const int da = A.dim;
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int k = 0; k < da; ++k) {
                Vec a = basis_vec(f, da, i), b = basis_vec(f, da, j), c = basis_vec(f, da, k);
                Vec lhs = add(theta.apply2(a, A.product.apply2(b, c)), tr.apply2(a, theta.apply2(b, c)));
                Vec rhs = add(theta.apply2(A.product.apply2(a, b), c), tl.apply2(theta.apply2(a, b), c));
                require(is_zero(sub(lhs, rhs)), "Hochschild 2-cocycle law",
                        "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
}

QuasiTwilledAlgebra finish(QuasiTwilledAlgebra q) {
    AxiomReport rep = validate_axioms(q);
    if (!rep.pass) throw ValidationError("factory output failed validate_axioms", rep.first_failure());
    return q;
}

}  // namespace

QuasiTwilledAlgebra direct_product(const Algebra& A, const Algebra& B) {
    QuasiTwilledAlgebra q = zero_qta(A.field, SplitSpace{A.dim, B.dim});
    q.mu = A.product;
    q.nu = B.product;
    q.tag = Provenance::DirectProduct;
    return finish(std::move(q));
}

QuasiTwilledAlgebra semidirect(const Algebra& A, int dim_b, const MLMap& tr, const MLMap& tl) {
    check_bimodule(A, tr, tl);
    QuasiTwilledAlgebra q = zero_qta(A.field, SplitSpace{A.dim, dim_b});
    q.mu = A.product;
    q.tr = tr;
    q.tl = tl;
    q.tag = Provenance::Semidirect;
    return finish(std::move(q));
}

QuasiTwilledAlgebra algebra_in_bimodules(const Algebra& A, const Algebra& B, const MLMap& tr, const MLMap& tl) {
    check_bimodule(A, tr, tl);
    check_module_algebra(A, B, tr, tl);
    QuasiTwilledAlgebra q = zero_qta(A.field, SplitSpace{A.dim, B.dim});
    q.mu = A.product;
    q.nu = B.product;
    q.tr = tr;
    q.tl = tl;
    q.tag = Provenance::AlgebraInBimodules;
    return finish(std::move(q));
}

QuasiTwilledAlgebra left_module_only(const Algebra& A, int dim_b, const MLMap& tr) {
    const Field& f = A.field;
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            for (int x = 0; x < dim_b; ++x) {
                Vec a = basis_vec(f, A.dim, i), b = basis_vec(f, A.dim, j), xx = basis_vec(f, dim_b, x);
                require(is_zero(sub(tr.apply2(A.product.apply2(a, b), xx), tr.apply2(a, tr.apply2(b, xx)))),
                        "left-module law", "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(x) + ")");
            }
    QuasiTwilledAlgebra q = zero_qta(A.field, SplitSpace{A.dim, dim_b});
    q.mu = A.product;
    q.tr = tr;
    q.tag = Provenance::LeftModule;
    return finish(std::move(q));
}

QuasiTwilledAlgebra right_module_only(const Algebra& A, int dim_b, const MLMap& tl) {
    const Field& f = A.field;
    for (int x = 0; x < dim_b; ++x)
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j) {
                Vec a = basis_vec(f, A.dim, i), b = basis_vec(f, A.dim, j), xx = basis_vec(f, dim_b, x);
                require(is_zero(sub(tl.apply2(tl.apply2(xx, a), b), tl.apply2(xx, A.product.apply2(a, b)))),
                        "right-module law", "(" + std::to_string(x) + "," + std::to_string(i) + "," + std::to_string(j) + ")");
            }
    QuasiTwilledAlgebra q = zero_qta(A.field, SplitSpace{A.dim, dim_b});
    q.mu = A.product;
    q.tl = tl;
    q.tag = Provenance::RightModule;
    return finish(std::move(q));
}

QuasiTwilledAlgebra matched_pair(const Field& f, const SplitSpace& s, const MLMap& mu, const MLMap& nu,
                                 const MLMap& tr, const MLMap& tl, const MLMap& rh, const MLMap& lh) {
    QuasiTwilledAlgebra q = zero_qta(f, s);
    q.mu = mu;
    q.nu = nu;
    q.tr = tr;
    q.tl = tl;
    q.rh = rh;
    q.lh = lh;
    q.tag = Provenance::MatchedPair;
    AxiomReport rep = validate_axioms(q);
    if (!rep.pass) throw ValidationError("matched_pair: compatibility fails", rep.first_failure());
    return q;
}

QuasiTwilledAlgebra box(const Algebra& A) {
    QuasiTwilledAlgebra q = zero_qta(A.field, SplitSpace{A.dim, A.dim});
    q.nu = A.product;
    q.rh = A.product;
    q.lh = A.product;
    q.theta = A.product;
    q.tag = Provenance::Box;
    return finish(std::move(q));
}

QuasiTwilledAlgebra theta_twisted_semidirect(const Algebra& A, int dim_b, const MLMap& tr, const MLMap& tl,
                                             const MLMap& theta) {
    check_bimodule(A, tr, tl);
    check_cocycle(A, tr, tl, theta);
    QuasiTwilledAlgebra q = zero_qta(A.field, SplitSpace{A.dim, dim_b});
    q.mu = A.product;
    q.tr = tr;
    q.tl = tl;
    q.theta = theta;
    q.tag = Provenance::ThetaTwisted;
    return finish(std::move(q));
}

QuasiTwilledAlgebra reynolds_shape(const Algebra& A) {
    QuasiTwilledAlgebra q = zero_qta(A.field, SplitSpace{A.dim, A.dim});
    q.mu = A.product;
    q.tr = A.product;
    q.tl = A.product;
    q.theta = -A.product;
    q.tag = Provenance::Reynolds;
    return finish(std::move(q));
}

}  // namespace qta
