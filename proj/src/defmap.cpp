#include "qta/defmap.hpp"

#include <functional>

#include "qta/error.hpp"
#include "qta/matrix.hpp"

namespace qta {

namespace {

void check_strong_shape(const QuasiTwilledAlgebra& q, const MLMap& D) {
    if (!(D.field() == q.field) || D.arity() != 1 || D.in_dims()[0] != q.space.dim_a || D.out_dim() != q.space.dim_b)
        throw DimMismatch("strong map must be linear A -> B");
}

void check_weak_shape(const QuasiTwilledAlgebra& q, const MLMap& r) {
    if (!(r.field() == q.field) || r.arity() != 1 || r.in_dims()[0] != q.space.dim_b || r.out_dim() != q.space.dim_a)
        throw DimMismatch("weak map must be linear B -> A");
}

MLMap require_associative(MLMap product, const char* what) {
    if (!is_associative(product)) throw ValidationError(std::string(what) + ": induced product is not associative", "assoc");
    return product;
}

}  // namespace

MLMap zero_strong(const QuasiTwilledAlgebra& q) { return MLMap(q.field, {q.space.dim_a}, q.space.dim_b); }
MLMap zero_weak(const QuasiTwilledAlgebra& q) { return MLMap(q.field, {q.space.dim_b}, q.space.dim_a); }

MLMap strong_defect(const QuasiTwilledAlgebra& q, const MLMap& D) {
    check_strong_shape(q, D);
    const Field& F = q.field;
    const int da = q.space.dim_a;
    MLMap defect(F, {da, da}, q.space.dim_b);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            Vec a = basis_vec(F, da, i), b = basis_vec(F, da, j);
            Vec Da = D.apply1(a), Db = D.apply1(b);
            Vec rhs = add(add(q.nu.apply2(Da, Db), q.tr.apply2(a, Db)), add(q.tl.apply2(Da, b), q.theta.apply2(a, b)));
            Vec inner = add(q.mu.apply2(a, b), add(q.lh.apply2(a, Db), q.rh.apply2(Da, b)));
            Vec diff = sub(rhs, D.apply1(inner));
            int idx[2] = {i, j};
            for (int o = 0; o < q.space.dim_b; ++o) defect.at(idx, o) = diff[static_cast<std::size_t>(o)];
        }
    return defect;
}

bool is_strong(const QuasiTwilledAlgebra& q, const MLMap& D) { return strong_defect(q, D).is_zero(); }

bool graph_check_strong(const QuasiTwilledAlgebra& q, const MLMap& D) {
    check_strong_shape(q, D);
    const Field& F = q.field;
    const int da = q.space.dim_a, db = q.space.dim_b, d = q.space.total();
    const MLMap prod = total_product(q);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            Vec gi = zero_vec(F, d), gj = zero_vec(F, d);
            gi[static_cast<std::size_t>(i)] = Scalar::one(F);
            gj[static_cast<std::size_t>(j)] = Scalar::one(F);
            Vec Di = D.value(std::span<const int>(&i, 1)), Dj = D.value(std::span<const int>(&j, 1));
            for (int o = 0; o < db; ++o) {
                gi[static_cast<std::size_t>(da + o)] = Di[static_cast<std::size_t>(o)];
                gj[static_cast<std::size_t>(da + o)] = Dj[static_cast<std::size_t>(o)];
            }
            Vec u = prod.apply2(gi, gj);
            Vec ua(u.begin(), u.begin() + da), ub(u.begin() + da, u.end());
            if (!is_zero(sub(ub, D.apply1(ua)))) return false;
        }
    return true;
}

MLMap induced_A_D(const QuasiTwilledAlgebra& q, const MLMap& D) {
    if (!is_strong(q, D)) throw ValidationError("induced_A_D: D is not a strong deformation map", "strong-equation");
    const Field& F = q.field;
    const int da = q.space.dim_a;
    MLMap mu_d(F, {da, da}, da);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            Vec a = basis_vec(F, da, i), b = basis_vec(F, da, j);
            Vec v = add(q.mu.apply2(a, b), add(q.lh.apply2(a, D.apply1(b)), q.rh.apply2(D.apply1(a), b)));
            int idx[2] = {i, j};
            for (int o = 0; o < da; ++o) mu_d.at(idx, o) = v[static_cast<std::size_t>(o)];
        }
    return require_associative(std::move(mu_d), "induced_A_D");
}

QuasiTwilledAlgebra induced_matched_pair(const QuasiTwilledAlgebra& q, const MLMap& D) {
    MLMap mu_d = induced_A_D(q, D);  // checks is_strong
    const Field& F = q.field;
    const int da = q.space.dim_a, db = q.space.dim_b;
    MLMap tr_d(F, {da, db}, db), tl_d(F, {db, da}, db);
    for (int i = 0; i < da; ++i)
        for (int x = 0; x < db; ++x) {
            Vec a = basis_vec(F, da, i), xx = basis_vec(F, db, x);
            Vec Da = D.apply1(a);
            Vec v1 = sub(add(q.tr.apply2(a, xx), q.nu.apply2(Da, xx)), D.apply1(q.lh.apply2(a, xx)));
            Vec v2 = sub(add(q.tl.apply2(xx, a), q.nu.apply2(xx, Da)), D.apply1(q.rh.apply2(xx, a)));
            int ax[2] = {i, x}, xa[2] = {x, i};
            for (int o = 0; o < db; ++o) {
                tr_d.at(ax, o) = v1[static_cast<std::size_t>(o)];
                tl_d.at(xa, o) = v2[static_cast<std::size_t>(o)];
            }
        }
    QuasiTwilledAlgebra mp = zero_qta(F, q.space);
    mp.mu = std::move(mu_d);
    mp.nu = q.nu;
    mp.tr = std::move(tr_d);
    mp.tl = std::move(tl_d);
    mp.rh = q.rh;
    mp.lh = q.lh;
    mp.tag = Provenance::MatchedPair;
    AxiomReport rep = validate_axioms(mp);
    if (!rep.pass)
        throw ValidationError("induced_matched_pair: output fails validation (sign error tripwire)", rep.first_failure());
    return mp;
}

MLMap delta_D(const QuasiTwilledAlgebra& q, const MLMap& D, const MLMap& f) {
    check_strong_shape(q, D);
    const Field& F = q.field;
    const int da = q.space.dim_a, db = q.space.dim_b;
    const int n = f.arity();
    for (int dd : f.in_dims())
        if (dd != da) throw DimMismatch("delta_D: cochain must take inputs from A");
    if (f.out_dim() != db) throw DimMismatch("delta_D: cochain must land in B");

    MLMap out(F, std::vector<int>(static_cast<std::size_t>(n) + 1, da), db);
    std::vector<int> tuple(static_cast<std::size_t>(n) + 1);
    const Scalar one = Scalar::one(F);
    for (std::size_t t = 0; t < out.tuple_count(); ++t) {
        out.unflatten(t, tuple);
        std::vector<Vec> args;
        args.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) args.push_back(basis_vec(F, da, tuple[static_cast<std::size_t>(k)]));

        Vec acc = zero_vec(F, db);
        // a_1 |>_D f(a_2, ..., a_{n+1})
        {
            Vec head = f.apply(std::span<const Vec>(args.data() + 1, static_cast<std::size_t>(n)));
            Vec term = add(add(q.tr.apply2(args[0], head), q.nu.apply2(D.apply1(args[0]), head)),
                           scale(-one, D.apply1(q.lh.apply2(args[0], head))));
            acc = add(acc, term);
        }
        // alternating insertions of a_i .D a_{i+1}
        for (int i = 1; i <= n; ++i) {
            const Vec& ai = args[static_cast<std::size_t>(i - 1)];
            const Vec& aj = args[static_cast<std::size_t>(i)];
            Vec prodD = add(q.mu.apply2(ai, aj), add(q.lh.apply2(ai, D.apply1(aj)), q.rh.apply2(D.apply1(ai), aj)));
            std::vector<Vec> inner;
            inner.reserve(static_cast<std::size_t>(n));
            for (int k = 0; k < i - 1; ++k) inner.push_back(args[static_cast<std::size_t>(k)]);
            inner.push_back(prodD);
            for (int k = i + 1; k <= n; ++k) inner.push_back(args[static_cast<std::size_t>(k)]);
            Vec term = f.apply(inner);
            if (i % 2 != 0) term = scale(-one, term);
            acc = add(acc, term);
        }
        // (-1)^{n+1} f(a_1, ..., a_n) <|_D a_{n+1}
        {
            Vec tail = f.apply(std::span<const Vec>(args.data(), static_cast<std::size_t>(n)));
            const Vec& last = args[static_cast<std::size_t>(n)];
            Vec term = add(add(q.tl.apply2(tail, last), q.nu.apply2(tail, D.apply1(last))),
                           scale(-one, D.apply1(q.rh.apply2(tail, last))));
            if ((n + 1) % 2 != 0) term = scale(-one, term);
            acc = add(acc, term);
        }
        for (int o = 0; o < db; ++o) out.at_flat(t, o) = acc[static_cast<std::size_t>(o)];
    }
    return out;
}

MLMap weak_defect(const QuasiTwilledAlgebra& q, const MLMap& r) {
    check_weak_shape(q, r);
    const Field& F = q.field;
    const int db = q.space.dim_b;
    MLMap defect(F, {db, db}, q.space.dim_a);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < db; ++j) {
            Vec x = basis_vec(F, db, i), y = basis_vec(F, db, j);
            Vec rx = r.apply1(x), ry = r.apply1(y);
            Vec lhs = add(q.mu.apply2(rx, ry), add(q.lh.apply2(rx, y), q.rh.apply2(x, ry)));
            Vec inner = add(add(q.nu.apply2(x, y), q.tr.apply2(rx, y)), add(q.tl.apply2(x, ry), q.theta.apply2(rx, ry)));
            Vec diff = sub(lhs, r.apply1(inner));
            int idx[2] = {i, j};
            for (int o = 0; o < q.space.dim_a; ++o) defect.at(idx, o) = diff[static_cast<std::size_t>(o)];
        }
    return defect;
}

bool is_weak(const QuasiTwilledAlgebra& q, const MLMap& r) { return weak_defect(q, r).is_zero(); }

bool graph_check_weak(const QuasiTwilledAlgebra& q, const MLMap& r) {
    check_weak_shape(q, r);
    const Field& F = q.field;
    const int da = q.space.dim_a, db = q.space.dim_b, d = q.space.total();
    const MLMap prod = total_product(q);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < db; ++j) {
            Vec gi = zero_vec(F, d), gj = zero_vec(F, d);
            gi[static_cast<std::size_t>(da + i)] = Scalar::one(F);
            gj[static_cast<std::size_t>(da + j)] = Scalar::one(F);
            Vec ri = r.value(std::span<const int>(&i, 1)), rj = r.value(std::span<const int>(&j, 1));
            for (int o = 0; o < da; ++o) {
                gi[static_cast<std::size_t>(o)] = ri[static_cast<std::size_t>(o)];
                gj[static_cast<std::size_t>(o)] = rj[static_cast<std::size_t>(o)];
            }
            Vec u = prod.apply2(gi, gj);
            Vec ua(u.begin(), u.begin() + da), ub(u.begin() + da, u.end());
            if (!is_zero(sub(ua, r.apply1(ub)))) return false;
        }
    return true;
}

MLMap induced_B_r(const QuasiTwilledAlgebra& q, const MLMap& r) {
    if (!is_weak(q, r)) throw ValidationError("induced_B_r: r is not a weak deformation map", "weak-equation");
    const Field& F = q.field;
    const int db = q.space.dim_b;
    MLMap nu_r(F, {db, db}, db);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < db; ++j) {
            Vec x = basis_vec(F, db, i), y = basis_vec(F, db, j);
            Vec rx = r.apply1(x), ry = r.apply1(y);
            Vec v = add(add(q.nu.apply2(x, y), q.tr.apply2(rx, y)), add(q.tl.apply2(x, ry), q.theta.apply2(rx, ry)));
            int idx[2] = {i, j};
            for (int o = 0; o < db; ++o) nu_r.at(idx, o) = v[static_cast<std::size_t>(o)];
        }
    return require_associative(std::move(nu_r), "induced_B_r");
}

QuasiTwilledAlgebra deformed_qta(const QuasiTwilledAlgebra& q, const MLMap& r) {
    if (!is_weak(q, r)) throw ValidationError("deformed_qta: r is not a weak deformation map", "weak-equation");
    const Field& F = q.field;
    const int da = q.space.dim_a, db = q.space.dim_b;
    QuasiTwilledAlgebra out = zero_qta(F, q.space);
    out.theta = q.theta;
    const Scalar mone = -Scalar::one(F);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            Vec a = basis_vec(F, da, i), b = basis_vec(F, da, j);
            Vec v = add(q.mu.apply2(a, b), scale(mone, r.apply1(q.theta.apply2(a, b))));
            int idx[2] = {i, j};
            for (int o = 0; o < da; ++o) out.mu.at(idx, o) = v[static_cast<std::size_t>(o)];
        }
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < db; ++j) {
            Vec x = basis_vec(F, db, i), y = basis_vec(F, db, j);
            Vec rx = r.apply1(x), ry = r.apply1(y);
            Vec v = add(add(q.nu.apply2(x, y), q.tr.apply2(rx, y)), add(q.tl.apply2(x, ry), q.theta.apply2(rx, ry)));
            int idx[2] = {i, j};
            for (int o = 0; o < db; ++o) out.nu.at(idx, o) = v[static_cast<std::size_t>(o)];
        }
    for (int i = 0; i < da; ++i)
        for (int x = 0; x < db; ++x) {
            Vec a = basis_vec(F, da, i), xx = basis_vec(F, db, x);
            Vec rx = r.apply1(xx);
            Vec tr_r = add(q.tr.apply2(a, xx), q.theta.apply2(a, rx));
            Vec tl_r = add(q.tl.apply2(xx, a), q.theta.apply2(rx, a));
            Vec rh_r = add(add(q.rh.apply2(xx, a), q.mu.apply2(rx, a)),
                           scale(mone, r.apply1(add(q.tl.apply2(xx, a), q.theta.apply2(rx, a)))));
            Vec lh_r = add(add(q.lh.apply2(a, xx), q.mu.apply2(a, rx)),
                           scale(mone, r.apply1(add(q.tr.apply2(a, xx), q.theta.apply2(a, rx)))));
            int ax[2] = {i, x}, xa[2] = {x, i};
            for (int o = 0; o < db; ++o) {
                out.tr.at(ax, o) = tr_r[static_cast<std::size_t>(o)];
                out.tl.at(xa, o) = tl_r[static_cast<std::size_t>(o)];
            }
            for (int o = 0; o < da; ++o) {
                out.rh.at(xa, o) = rh_r[static_cast<std::size_t>(o)];
                out.lh.at(ax, o) = lh_r[static_cast<std::size_t>(o)];
            }
        }
    AxiomReport rep = validate_axioms(out);
    if (!rep.pass) throw ValidationError("deformed_qta: output fails validation (sign error tripwire)", rep.first_failure());
    return out;
}

OmegaRParts omega_r_parts(const QuasiTwilledAlgebra& q, const MLMap& r) {
    check_weak_shape(q, r);
    const MLMap conj = shear_conjugate(omega(q), embed_hom_ba(q.space, r));
    return OmegaRParts{project(q.space, conj, Bidegree{2, -1}), project(q.space, conj, Bidegree{1, 0}),
                       project(q.space, conj, Bidegree{0, 1}), project(q.space, conj, Bidegree{-1, 2})};
}

MLMap omega_r(const QuasiTwilledAlgebra& q, const MLMap& r) {
    OmegaRParts p = omega_r_parts(q, r);
    return p.theta_tilde + p.mu_r + p.nu_r + p.psi_r;
}

MLMap delta_r(const QuasiTwilledAlgebra& q, const MLMap& r, const MLMap& f) {
    check_weak_shape(q, r);
    const Field& F = q.field;
    const int da = q.space.dim_a, db = q.space.dim_b;
    const int n = f.arity();
    for (int dd : f.in_dims())
        if (dd != db) throw DimMismatch("delta_r: cochain must take inputs from B");
    if (f.out_dim() != da) throw DimMismatch("delta_r: cochain must land in A");

    MLMap out(F, std::vector<int>(static_cast<std::size_t>(n) + 1, db), da);
    std::vector<int> tuple(static_cast<std::size_t>(n) + 1);
    const Scalar one = Scalar::one(F);
    for (std::size_t t = 0; t < out.tuple_count(); ++t) {
        out.unflatten(t, tuple);
        std::vector<Vec> args;
        args.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) args.push_back(basis_vec(F, db, tuple[static_cast<std::size_t>(k)]));

        Vec acc = zero_vec(F, da);
        // x_1 ->_r f(x_2, ..., x_{n+1})
        {
            Vec head = f.apply(std::span<const Vec>(args.data() + 1, static_cast<std::size_t>(n)));
            Vec rx = r.apply1(args[0]);
            Vec term = add(add(q.rh.apply2(args[0], head), q.mu.apply2(rx, head)),
                           scale(-one, r.apply1(add(q.tl.apply2(args[0], head), q.theta.apply2(rx, head)))));
            acc = add(acc, term);
        }
        // alternating insertions of x_i .r x_{i+1}
        for (int i = 1; i <= n; ++i) {
            const Vec& xi = args[static_cast<std::size_t>(i - 1)];
            const Vec& xj = args[static_cast<std::size_t>(i)];
            Vec rxi = r.apply1(xi), rxj = r.apply1(xj);
            Vec prodR = add(add(q.nu.apply2(xi, xj), q.tr.apply2(rxi, xj)), add(q.tl.apply2(xi, rxj), q.theta.apply2(rxi, rxj)));
            std::vector<Vec> inner;
            inner.reserve(static_cast<std::size_t>(n));
            for (int k = 0; k < i - 1; ++k) inner.push_back(args[static_cast<std::size_t>(k)]);
            inner.push_back(prodR);
            for (int k = i + 1; k <= n; ++k) inner.push_back(args[static_cast<std::size_t>(k)]);
            Vec term = f.apply(inner);
            if (i % 2 != 0) term = scale(-one, term);
            acc = add(acc, term);
        }
        // (-1)^{n+1} f(x_1, ..., x_n) <-_r x_{n+1}
        {
            Vec tail = f.apply(std::span<const Vec>(args.data(), static_cast<std::size_t>(n)));
            const Vec& last = args[static_cast<std::size_t>(n)];
            Vec rl = r.apply1(last);
            Vec term = add(add(q.lh.apply2(tail, last), q.mu.apply2(tail, rl)),
                           scale(-one, r.apply1(add(q.tr.apply2(tail, last), q.theta.apply2(tail, rl)))));
            if ((n + 1) % 2 != 0) term = scale(-one, term);
            acc = add(acc, term);
        }
        for (int o = 0; o < da; ++o) out.at_flat(t, o) = acc[static_cast<std::size_t>(o)];
    }
    return out;
}

namespace {

std::vector<int> hom_complex_dims(const Field& field, int in_dim, int out_dim, int max_degree,
                                  const std::function<MLMap(const MLMap&)>& delta) {
    // C^n = Hom(in^{x n}, out); matrices of delta in the canonical basis
    std::vector<Matrix> mats;
    for (int n = 0; n <= max_degree; ++n) {
        MLMap model(field, std::vector<int>(static_cast<std::size_t>(n), in_dim), out_dim);
        const std::size_t cols = model.coeffs().size();
        std::size_t rows = static_cast<std::size_t>(out_dim);
        for (int k = 0; k <= n; ++k) rows *= static_cast<std::size_t>(in_dim);
        Matrix M(field, static_cast<int>(rows), static_cast<int>(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            MLMap e = model;
            e.coeffs()[c] = Scalar::one(field);
            MLMap de = delta(e);
            for (std::size_t rr = 0; rr < de.coeffs().size(); ++rr)
                if (!de.coeffs()[rr].is_zero()) M.at(static_cast<int>(rr), static_cast<int>(c)) = de.coeffs()[rr];
        }
        mats.push_back(std::move(M));
    }
    std::vector<int> dims;
    int prev_rank = 0;
    for (int n = 0; n <= max_degree; ++n) {
        const int rk = rank(mats[static_cast<std::size_t>(n)]);
        const int ker = mats[static_cast<std::size_t>(n)].cols - rk;
        dims.push_back(ker - prev_rank);
        prev_rank = rk;
    }
    return dims;
}

}  // namespace

std::vector<int> strong_cohomology_dims(const QuasiTwilledAlgebra& q, const MLMap& D, int max_degree) {
    if (!is_strong(q, D)) throw ValidationError("strong_cohomology_dims: D is not strong", "strong-equation");
    return hom_complex_dims(q.field, q.space.dim_a, q.space.dim_b, max_degree,
                            [&](const MLMap& f) { return delta_D(q, D, f); });
}

std::vector<int> weak_cohomology_dims(const QuasiTwilledAlgebra& q, const MLMap& r, int max_degree) {
    if (!is_weak(q, r)) throw ValidationError("weak_cohomology_dims: r is not weak", "weak-equation");
    return hom_complex_dims(q.field, q.space.dim_b, q.space.dim_a, max_degree,
                            [&](const MLMap& f) { return delta_r(q, r, f); });
}

std::string recognize(const QuasiTwilledAlgebra& q, MapKind kind) {
    if (kind == MapKind::Strong) {
        switch (q.tag) {
            case Provenance::DirectProduct: return "algebra homomorphism";
            case Provenance::Semidirect: return "derivation";
            case Provenance::AlgebraInBimodules: return "crossed homomorphism";
            case Provenance::Box: return "modified associative r-matrix";
            default: return "strong deformation map (generic)";
        }
    }
    switch (q.tag) {
        case Provenance::DirectProduct: return "algebra homomorphism";
        case Provenance::Semidirect: return "relative Rota-Baxter operator of weight 0";
        case Provenance::AlgebraInBimodules: return "relative Rota-Baxter operator of weight 1";
        case Provenance::LeftModule: return "relative left averaging operator";
        case Provenance::RightModule: return "relative right averaging operator";
        case Provenance::ThetaTwisted: return "twisted Rota-Baxter operator";
        case Provenance::Reynolds: return "Reynolds operator";
        case Provenance::MatchedPair: return "deformation map in a matched pair";
        case Provenance::NonAbelianBoxtimes: return "Rota-Baxter operator twisted by a non-abelian 2-cocycle";
        default: return "weak deformation map (generic)";
    }
}

}  // namespace qta
