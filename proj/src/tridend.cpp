#include "qta/tridend.hpp"

#include <functional>

#include "qta/error.hpp"

namespace qta {

namespace {

std::string tuple_str(std::span<const int> idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i]);
    }
    return s + ")";
}

std::string vec_str(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + "]";
}

AxiomCheck check_triples(const std::string& name, std::span<const int> dims,
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

AxiomReport finish_report(AxiomReport rep) {
    rep.pass = true;
    for (const auto& item : rep.items) rep.pass = rep.pass && item.pass;
    return rep;
}

}  // namespace

NonAbelianCocycle make_cocycle(const Field& f, int dim_a, int dim_b, MLMap mu, MLMap nu, MLMap tr, MLMap tl,
                               MLMap theta) {
    auto expect = [&](const MLMap& m, int i1, int i2, int out, const char* name) {
        if (!(m.field() == f) || m.arity() != 2 || m.in_dims()[0] != i1 || m.in_dims()[1] != i2 || m.out_dim() != out)
            throw DimMismatch(std::string("make_cocycle: bad shape for ") + name);
    };
    expect(mu, dim_a, dim_a, dim_a, "mu");
    expect(nu, dim_b, dim_b, dim_b, "nu");
    expect(tr, dim_a, dim_b, dim_b, "tr");
    expect(tl, dim_b, dim_a, dim_b, "tl");
    expect(theta, dim_a, dim_a, dim_b, "theta");
    return NonAbelianCocycle{f, dim_a, dim_b, std::move(mu), std::move(nu), std::move(tr), std::move(tl),
                             std::move(theta)};
}

namespace {

AxiomReport run_cocycle_laws(const NonAbelianCocycle& c, bool stop_early) {
    const Field& F = c.field;
    const int da = c.dim_a, db = c.dim_b;
    auto eA = [&](int i) { return basis_vec(F, da, i); };
    auto eB = [&](int i) { return basis_vec(F, db, i); };

    AxiomReport rep;
    bool bail = false;
    auto law = [&](const std::string& name, std::initializer_list<int> dims,
                   std::function<std::pair<Vec, Vec>(std::span<const int>)> fn) {
        if (bail) return;
        std::vector<int> dd(dims);
        rep.items.push_back(check_triples(name, dd, fn));
        if (stop_early && !rep.items.back().pass) bail = true;
    };

    law("A-assoc", {da, da, da}, [&](std::span<const int> i) {
        Vec a = eA(i[0]), b = eA(i[1]), cc = eA(i[2]);
        return std::pair{c.mu.apply2(c.mu.apply2(a, b), cc), c.mu.apply2(a, c.mu.apply2(b, cc))};
    });
    law("B-assoc", {db, db, db}, [&](std::span<const int> i) {
        Vec x = eB(i[0]), y = eB(i[1]), z = eB(i[2]);
        return std::pair{c.nu.apply2(c.nu.apply2(x, y), z), c.nu.apply2(x, c.nu.apply2(y, z))};
    });
    // (nab1) (ab) |> x + theta(a,b) x = a |> (b |> x)
    law("nab1", {da, da, db}, [&](std::span<const int> i) {
        Vec a = eA(i[0]), b = eA(i[1]), x = eB(i[2]);
        return std::pair{add(c.tr.apply2(c.mu.apply2(a, b), x), c.nu.apply2(c.theta.apply2(a, b), x)),
                         c.tr.apply2(a, c.tr.apply2(b, x))};
    });
    // (nab2) (a |> x) <| b = a |> (x <| b)
    law("nab2", {da, db, da}, [&](std::span<const int> i) {
        Vec a = eA(i[0]), x = eB(i[1]), b = eA(i[2]);
        return std::pair{c.tl.apply2(c.tr.apply2(a, x), b), c.tr.apply2(a, c.tl.apply2(x, b))};
    });
    // (nab3) (x <| a) <| b = x <| (ab) + x theta(a,b)
    law("nab3", {db, da, da}, [&](std::span<const int> i) {
        Vec x = eB(i[0]), a = eA(i[1]), b = eA(i[2]);
        return std::pair{c.tl.apply2(c.tl.apply2(x, a), b),
                         add(c.tl.apply2(x, c.mu.apply2(a, b)), c.nu.apply2(x, c.theta.apply2(a, b)))};
    });
    // (nab4) (a |> x) y = a |> (x y)
    law("nab4", {da, db, db}, [&](std::span<const int> i) {
        Vec a = eA(i[0]), x = eB(i[1]), y = eB(i[2]);
        return std::pair{c.nu.apply2(c.tr.apply2(a, x), y), c.tr.apply2(a, c.nu.apply2(x, y))};
    });
    // (nab5) (x <| a) y = x (a |> y)
    law("nab5", {db, da, db}, [&](std::span<const int> i) {
        Vec x = eB(i[0]), a = eA(i[1]), y = eB(i[2]);
        return std::pair{c.nu.apply2(c.tl.apply2(x, a), y), c.nu.apply2(x, c.tr.apply2(a, y))};
    });
    // (nab6) (x y) <| a = x (y <| a)
    law("nab6", {db, db, da}, [&](std::span<const int> i) {
        Vec x = eB(i[0]), y = eB(i[1]), a = eA(i[2]);
        return std::pair{c.tl.apply2(c.nu.apply2(x, y), a), c.nu.apply2(x, c.tl.apply2(y, a))};
    });
    // (nab7) theta(a,b) <| c + theta(ab, c) = a |> theta(b,c) + theta(a, bc)
    law("nab7", {da, da, da}, [&](std::span<const int> i) {
        Vec a = eA(i[0]), b = eA(i[1]), cc = eA(i[2]);
        return std::pair{add(c.tl.apply2(c.theta.apply2(a, b), cc), c.theta.apply2(c.mu.apply2(a, b), cc)),
                         add(c.tr.apply2(a, c.theta.apply2(b, cc)), c.theta.apply2(a, c.mu.apply2(b, cc)))};
    });

    return finish_report(std::move(rep));
}

}  // namespace

AxiomReport validate_cocycle(const NonAbelianCocycle& c) { return run_cocycle_laws(c, false); }

bool cocycle_valid(const NonAbelianCocycle& c) { return run_cocycle_laws(c, true).pass; }

QuasiTwilledAlgebra boxtimes(const NonAbelianCocycle& c) {
    AxiomReport rep = validate_cocycle(c);
    if (!rep.pass) throw ValidationError("boxtimes: cocycle axioms fail", rep.first_failure());
    QuasiTwilledAlgebra q = zero_qta(c.field, SplitSpace{c.dim_a, c.dim_b});
    q.mu = c.mu;
    q.nu = c.nu;
    q.tr = c.tr;
    q.tl = c.tl;
    q.theta = c.theta;
    q.tag = Provenance::NonAbelianBoxtimes;
    AxiomReport qrep = validate_axioms(q);
    if (!qrep.pass) throw ValidationError("boxtimes: output fails validation", qrep.first_failure());
    return q;
}

bool is_twisted_rb(const NonAbelianCocycle& c, const MLMap& r) {
    if (!(r.field() == c.field) || r.arity() != 1 || r.in_dims()[0] != c.dim_b || r.out_dim() != c.dim_a)
        throw DimMismatch("is_twisted_rb: r must be linear B -> A");
    const Field& F = c.field;
    for (int i = 0; i < c.dim_b; ++i)
        for (int j = 0; j < c.dim_b; ++j) {
            Vec x = basis_vec(F, c.dim_b, i), y = basis_vec(F, c.dim_b, j);
            Vec rx = r.apply1(x), ry = r.apply1(y);
            Vec lhs = c.mu.apply2(rx, ry);
            Vec inner = add(add(c.tr.apply2(rx, y), c.tl.apply2(x, ry)),
                            add(c.nu.apply2(x, y), c.theta.apply2(rx, ry)));
            if (!is_zero(sub(lhs, r.apply1(inner)))) return false;
        }
    return true;
}

TwistedTridendriform make_ttd(const Field& f, int dim, MLMap prec, MLMap succ, MLMap wedge, MLMap dot) {
    for (const MLMap* m : {&prec, &succ, &wedge, &dot})
        if (!(m->field() == f) || m->arity() != 2 || m->in_dims()[0] != dim || m->out_dim() != dim)
            throw DimMismatch("make_ttd: products must be bilinear on one space");
    return TwistedTridendriform{f, dim, std::move(prec), std::move(succ), std::move(wedge), std::move(dot)};
}

namespace {

AxiomReport run_ttd_laws(const TwistedTridendriform& t, bool stop_early) {
    const Field& F = t.field;
    const int d = t.dim;
    auto e = [&](int i) { return basis_vec(F, d, i); };
    auto star = [&](const Vec& x, const Vec& y) {
        return add(add(t.prec.apply2(x, y), t.succ.apply2(x, y)), add(t.wedge.apply2(x, y), t.dot.apply2(x, y)));
    };

    AxiomReport rep;
    bool bail = false;
    auto law = [&](const std::string& name, std::function<std::pair<Vec, Vec>(std::span<const int>)> fn) {
        if (bail) return;
        std::vector<int> dims{d, d, d};
        rep.items.push_back(check_triples(name, dims, fn));
        if (stop_early && !rep.items.back().pass) bail = true;
    };

    law("TT1", [&](std::span<const int> i) {  // (x<y)<z = x<(y*z) + x.(yvz)
        Vec x = e(i[0]), y = e(i[1]), z = e(i[2]);
        return std::pair{t.prec.apply2(t.prec.apply2(x, y), z),
                         add(t.prec.apply2(x, star(y, z)), t.dot.apply2(x, t.wedge.apply2(y, z)))};
    });
    law("TT2", [&](std::span<const int> i) {  // (x>y)<z = x>(y<z)
        Vec x = e(i[0]), y = e(i[1]), z = e(i[2]);
        return std::pair{t.prec.apply2(t.succ.apply2(x, y), z), t.succ.apply2(x, t.prec.apply2(y, z))};
    });
    law("TT3", [&](std::span<const int> i) {  // (x*y)>z + (xvy).z = x>(y>z)
        Vec x = e(i[0]), y = e(i[1]), z = e(i[2]);
        return std::pair{add(t.succ.apply2(star(x, y), z), t.dot.apply2(t.wedge.apply2(x, y), z)),
                         t.succ.apply2(x, t.succ.apply2(y, z))};
    });
    law("TT4", [&](std::span<const int> i) {  // (x>y).z = x>(y.z)
        Vec x = e(i[0]), y = e(i[1]), z = e(i[2]);
        return std::pair{t.dot.apply2(t.succ.apply2(x, y), z), t.succ.apply2(x, t.dot.apply2(y, z))};
    });
    law("TT5", [&](std::span<const int> i) {  // (x<y).z = x.(y>z)
        Vec x = e(i[0]), y = e(i[1]), z = e(i[2]);
        return std::pair{t.dot.apply2(t.prec.apply2(x, y), z), t.dot.apply2(x, t.succ.apply2(y, z))};
    });
    law("TT6", [&](std::span<const int> i) {  // (x.y)<z = x.(y<z)
        Vec x = e(i[0]), y = e(i[1]), z = e(i[2]);
        return std::pair{t.prec.apply2(t.dot.apply2(x, y), z), t.dot.apply2(x, t.prec.apply2(y, z))};
    });
    law("TT7", [&](std::span<const int> i) {  // (x.y).z = x.(y.z)
        Vec x = e(i[0]), y = e(i[1]), z = e(i[2]);
        return std::pair{t.dot.apply2(t.dot.apply2(x, y), z), t.dot.apply2(x, t.dot.apply2(y, z))};
    });
    law("TT8", [&](std::span<const int> i) {  // (xvy)<z + (x*y)vz = x>(yvz) + xv(y*z)
        Vec x = e(i[0]), y = e(i[1]), z = e(i[2]);
        return std::pair{add(t.prec.apply2(t.wedge.apply2(x, y), z), t.wedge.apply2(star(x, y), z)),
                         add(t.succ.apply2(x, t.wedge.apply2(y, z)), t.wedge.apply2(x, star(y, z)))};
    });

    return finish_report(std::move(rep));
}

}  // namespace

AxiomReport validate_ttd(const TwistedTridendriform& t) { return run_ttd_laws(t, false); }

bool ttd_valid(const TwistedTridendriform& t) { return run_ttd_laws(t, true).pass; }

TwistedTridendriform induce_ttd(const NonAbelianCocycle& c, const MLMap& r) {
    if (!is_twisted_rb(c, r)) throw ValidationError("induce_ttd: r is not a twisted Rota-Baxter operator", "rbt");
    const Field& F = c.field;
    const int d = c.dim_b;
    MLMap prec(F, {d, d}, d), succ(F, {d, d}, d), wedge(F, {d, d}, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec x = basis_vec(F, d, i), y = basis_vec(F, d, j);
            Vec rx = r.apply1(x), ry = r.apply1(y);
            Vec vp = c.tl.apply2(x, ry);
            Vec vs = c.tr.apply2(rx, y);
            Vec vw = c.theta.apply2(rx, ry);
            int idx[2] = {i, j};
            for (int o = 0; o < d; ++o) {
                prec.at(idx, o) = vp[static_cast<std::size_t>(o)];
                succ.at(idx, o) = vs[static_cast<std::size_t>(o)];
                wedge.at(idx, o) = vw[static_cast<std::size_t>(o)];
            }
        }
    TwistedTridendriform t{F, d, std::move(prec), std::move(succ), std::move(wedge), c.nu};
    AxiomReport rep = validate_ttd(t);
    if (!rep.pass) throw ValidationError("induce_ttd: output fails TT axioms (sign error tripwire)", rep.first_failure());
    return t;
}

MLMap star_product(const TwistedTridendriform& t) {
    AxiomReport rep = validate_ttd(t);
    if (!rep.pass) throw ValidationError("star_product: TT axioms fail", rep.first_failure());
    MLMap star = t.prec + t.succ + t.wedge + t.dot;
    if (!is_associative(star)) throw ValidationError("star_product: star is not associative", "assoc");
    return star;
}

NonAbelianCocycle ttd_to_cocycle(const TwistedTridendriform& t) {
    MLMap star = star_product(t);  // validates
    NonAbelianCocycle c = make_cocycle(t.field, t.dim, t.dim, star, t.dot, t.succ, t.prec, t.wedge);
    AxiomReport rep = validate_cocycle(c);
    if (!rep.pass) throw ValidationError("ttd_to_cocycle: cocycle axioms fail (sign error tripwire)", rep.first_failure());
    return c;
}

bool identity_roundtrip(const TwistedTridendriform& t) {
    NonAbelianCocycle c = ttd_to_cocycle(t);
    MLMap id = identity_map(t.field, t.dim);
    if (!is_twisted_rb(c, id)) return false;
    TwistedTridendriform back = induce_ttd(c, id);
    return back.prec == t.prec && back.succ == t.succ && back.wedge == t.wedge && back.dot == t.dot;
}

QuasiTwilledAlgebra double_qta(const TwistedTridendriform& t) {
    MLMap star = star_product(t);  // validates
    QuasiTwilledAlgebra q = zero_qta(t.field, SplitSpace{t.dim, t.dim});
    q.mu = star;
    q.nu = t.dot;
    q.tr = t.succ;
    q.tl = t.prec;
    q.theta = t.wedge;
    q.tag = Provenance::NonAbelianBoxtimes;
    AxiomReport rep = validate_axioms(q);
    if (!rep.pass) throw ValidationError("double_qta: output fails validation", rep.first_failure());
    return q;
}

bool is_tridendriform(const TwistedTridendriform& t) { return t.wedge.is_zero(); }
bool is_ns_algebra(const TwistedTridendriform& t) { return t.dot.is_zero(); }
bool is_dendriform(const TwistedTridendriform& t) { return t.wedge.is_zero() && t.dot.is_zero(); }

}  // namespace qta
