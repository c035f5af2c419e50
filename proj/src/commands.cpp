#include "qta/commands.hpp"

#include <cmath>
#include <thread>

#include "qta/linf.hpp"
#include "qta/matrix.hpp"

namespace qta {

using nlohmann::ordered_json;

namespace {

ordered_json check_item(const std::string& name, bool pass, const std::string& witness = {}) {
    ordered_json c;
    c["name"] = name;
    c["pass"] = pass;
    if (!witness.empty()) c["witness"] = witness;
    return c;
}

ordered_json base_report(const std::string& command, const Field& f) {
    ordered_json j;
    j["command"] = command;
    j["field"] = f.is_rational() ? ordered_json("rational") : ordered_json{{"prime", f.p}};
    j["checks"] = ordered_json::array();
    return j;
}

CommandResult finish(ordered_json j) {
    bool pass = true;
    for (const auto& c : j["checks"])
        if (!c.value("skipped", false)) pass = pass && c.at("pass").get<bool>();
    j["pass"] = pass;
    return CommandResult{std::move(j), pass ? 0 : 1};
}

CommandResult input_error(ordered_json j, const std::string& msg) {
    j["error"] = msg;
    j["pass"] = false;
    return CommandResult{std::move(j), 2};
}

}  // namespace

CommandResult cmd_validate(const AlgebraFile& file) {
    ordered_json j = base_report("validate", file.field);
    if (!file.qta) return input_error(std::move(j), "validate needs dims or a factory");
    const QuasiTwilledAlgebra& q = *file.qta;
    AxiomReport rep = validate_axioms(q);
    for (const auto& item : rep.items) j["checks"].push_back(check_item(item.name, item.pass, item.witness));
    const bool mc = validate_via_mc(q);
    j["checks"].push_back(check_item("maurer-cartan", mc));
    j["checks"].push_back(check_item("mc-axioms-agreement", mc == rep.pass));
    if (q.theta.is_zero()) j["checks"].push_back(check_item("matched-pair", is_matched_pair(q)));
    j["provenance"] = provenance_name(q.tag);
    return finish(std::move(j));
}

CommandResult cmd_check_map(const AlgebraFile& file, const std::string& kind) {
    ordered_json j = base_report("check-map", file.field);
    j["kind"] = kind;
    if (!file.qta) return input_error(std::move(j), "check-map needs dims or a factory");
    const QuasiTwilledAlgebra& q = *file.qta;
    if (kind == "strong") {
        if (!file.D) return input_error(std::move(j), "check-map --kind strong needs a D entry");
        const bool eq = is_strong(q, *file.D);
        const bool gr = graph_check_strong(q, *file.D);
        j["checks"].push_back(check_item("strong-equation", eq, eq ? "" : "defect " + mlmap_to_json(strong_defect(q, *file.D)).dump()));
        j["checks"].push_back(check_item("graph-subalgebra", gr));
        j["checks"].push_back(check_item("routes-agree", eq == gr));
        j["tag"] = recognize(q, MapKind::Strong);
        return finish(std::move(j));
    }
    if (kind == "weak") {
        if (!file.r) return input_error(std::move(j), "check-map --kind weak needs an r entry");
        const bool eq = is_weak(q, *file.r);
        const bool gr = graph_check_weak(q, *file.r);
        j["checks"].push_back(check_item("weak-equation", eq, eq ? "" : "defect " + mlmap_to_json(weak_defect(q, *file.r)).dump()));
        j["checks"].push_back(check_item("graph-subalgebra", gr));
        j["checks"].push_back(check_item("routes-agree", eq == gr));
        j["tag"] = recognize(q, MapKind::Weak);
        return finish(std::move(j));
    }
    return input_error(std::move(j), "unknown kind '" + kind + "' (strong|weak)");
}

CommandResult cmd_cohomology(const AlgebraFile& file, const std::string& theory, int max_degree) {
    ordered_json j = base_report("cohomology", file.field);
    j["theory"] = theory;
    j["max_degree"] = max_degree;
    if (!file.qta) return input_error(std::move(j), "cohomology needs dims or a factory");
    if (max_degree < 1) return input_error(std::move(j), "max-degree must be >= 1");
    const QuasiTwilledAlgebra& q = *file.qta;
    Rng rng(2);

    std::vector<int> dims;
    if (theory == "qta") {
        bool d2ok = true;
        for (int n = 0; n <= 2; ++n) {
            Cochain F = random_cochain(q, n, rng);
            d2ok = d2ok && qta_differential(q, qta_differential(q, F)).map.is_zero();
        }
        j["checks"].push_back(check_item("delta-squared-zero", d2ok));
        dims = qta_cohomology_dims(q, max_degree);
    } else if (theory == "matched") {
        if (!q.theta.is_zero()) return input_error(std::move(j), "matched theory needs theta = 0");
        if (!is_matched_pair(q)) {
            j["checks"].push_back(check_item("matched-pair", false));
            return finish(std::move(j));
        }
        bool d2ok = true;
        for (int n = 0; n <= 2; ++n) {
            Cochain F = random_cochain(q, n, rng);
            d2ok = d2ok && matched_pair_differential(q, matched_pair_differential(q, F)).map.is_zero();
        }
        j["checks"].push_back(check_item("delta-squared-zero", d2ok));
        dims = matched_pair_cohomology_dims(q, max_degree);
    } else if (theory == "strong") {
        if (!file.D) return input_error(std::move(j), "strong theory needs a D entry");
        const bool ok = is_strong(q, *file.D);
        j["checks"].push_back(check_item("is-strong", ok));
        if (!ok) return finish(std::move(j));
        bool d2ok = true;
        for (int n = 0; n <= 2; ++n) {
            MLMap f = random_mlmap(q.field, std::vector<int>(static_cast<std::size_t>(n), q.space.dim_a),
                                   q.space.dim_b, rng);
            d2ok = d2ok && delta_D(q, *file.D, delta_D(q, *file.D, f)).is_zero();
        }
        j["checks"].push_back(check_item("delta-squared-zero", d2ok));
        dims = strong_cohomology_dims(q, *file.D, max_degree);
    } else if (theory == "weak") {
        if (!file.r) return input_error(std::move(j), "weak theory needs an r entry");
        const bool ok = is_weak(q, *file.r);
        j["checks"].push_back(check_item("is-weak", ok));
        if (!ok) return finish(std::move(j));
        bool d2ok = true;
        for (int n = 0; n <= 2; ++n) {
            MLMap f = random_mlmap(q.field, std::vector<int>(static_cast<std::size_t>(n), q.space.dim_b),
                                   q.space.dim_a, rng);
            d2ok = d2ok && delta_r(q, *file.r, delta_r(q, *file.r, f)).is_zero();
        }
        j["checks"].push_back(check_item("delta-squared-zero", d2ok));
        dims = weak_cohomology_dims(q, *file.r, max_degree);
    } else {
        return input_error(std::move(j), "unknown theory '" + theory + "' (qta|matched|strong|weak)");
    }
    ordered_json table = ordered_json::array();
    for (std::size_t n = 0; n < dims.size(); ++n)
        table.push_back(ordered_json{{"degree", n}, {"dim", dims[n]}});
    j["cohomology"] = table;
    return finish(std::move(j));
}

namespace {

/* Fill the coefficients of maps from the digits of `code` base p. */
void decode(std::vector<MLMap*> maps, const Field& f, unsigned long long code) {
    for (MLMap* m : maps)
        for (auto& s : m->coeffs()) {
            s = Scalar::of_long(f, static_cast<long>(code % f.p));
            code /= f.p;
        }
}

/* Deterministic exhaustive scan, chunked over threads; hits are reported
 * in candidate order regardless of the thread count. */
std::vector<unsigned long long> scan(unsigned long long total, int threads,
                                     const std::function<bool(unsigned long long)>& test) {
    threads = std::max(1, std::min(threads, 64));
    if (threads == 1 || total < 1024) {
        std::vector<unsigned long long> hits;
        for (unsigned long long c = 0; c < total; ++c)
            if (test(c)) hits.push_back(c);
        return hits;
    }
    std::vector<std::vector<unsigned long long>> parts(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    const unsigned long long chunk = (total + static_cast<unsigned long long>(threads) - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            const unsigned long long lo = chunk * static_cast<unsigned long long>(t);
            const unsigned long long hi = std::min(total, lo + chunk);
            for (unsigned long long c = lo; c < hi; ++c)
                if (test(c)) parts[static_cast<std::size_t>(t)].push_back(c);
        });
    }
    for (auto& th : pool) th.join();
    std::vector<unsigned long long> hits;
    for (const auto& p : parts) hits.insert(hits.end(), p.begin(), p.end());
    return hits;
}

}  // namespace

CommandResult cmd_search(const AlgebraFile& file, const SearchOptions& opt) {
    ordered_json j = base_report("search", opt.field_p ? Field{opt.field_p} : file.field);
    j["kind"] = opt.kind;
    j["budget"] = opt.budget;

    Field fp = file.field;
    if (opt.field_p != 0) fp = prime_field(opt.field_p);
    if (fp.is_rational()) return input_error(std::move(j), "search needs a prime field (--field p)");
    j["field"] = ordered_json{{"prime", fp.p}};

    auto space_size = [&](int coeffs) -> unsigned long long {
        const double bits = coeffs * std::log2(static_cast<double>(fp.p));
        if (bits > 62 || std::pow(static_cast<double>(fp.p), coeffs) > static_cast<double>(opt.budget)) return 0;
        unsigned long long s = 1;
        for (int i = 0; i < coeffs; ++i) s *= fp.p;
        return s;
    };

    ordered_json sols = ordered_json::array();
    if (opt.kind == "strong" || opt.kind == "weak") {
        if (!file.qta) return input_error(std::move(j), "search needs dims or a factory");
        QuasiTwilledAlgebra q = file.field.is_rational() ? reduce_mod_p(*file.qta, fp) : *file.qta;
        const int n_coeff = q.space.dim_a * q.space.dim_b;
        const unsigned long long total = space_size(n_coeff);
        if (total == 0) return input_error(std::move(j), "budget exceeded: p^" + std::to_string(n_coeff));
        j["space"] = total;
        const bool strong = opt.kind == "strong";
        auto hits = scan(total, opt.threads, [&](unsigned long long code) {
            MLMap m = strong ? MLMap(fp, {q.space.dim_a}, q.space.dim_b) : MLMap(fp, {q.space.dim_b}, q.space.dim_a);
            decode({&m}, fp, code);
            return strong ? is_strong(q, m) : is_weak(q, m);
        });
        for (unsigned long long code : hits) {
            MLMap m = strong ? MLMap(fp, {q.space.dim_a}, q.space.dim_b) : MLMap(fp, {q.space.dim_b}, q.space.dim_a);
            decode({&m}, fp, code);
            sols.push_back(ordered_json{{strong ? "D" : "r", mlmap_to_json(m)}});
        }
        j["checks"].push_back(check_item("exhaustive", true));
    } else if (opt.kind == "cocycle") {
        if (!file.qta) return input_error(std::move(j), "cocycle search needs the A and B algebras (mu, nu)");
        QuasiTwilledAlgebra q = file.field.is_rational() ? reduce_mod_p(*file.qta, fp) : *file.qta;
        const int da = q.space.dim_a, db = q.space.dim_b;
        const int n_coeff = da * db * db + db * da * db + da * da * db;
        const unsigned long long total = space_size(n_coeff);
        if (total == 0) return input_error(std::move(j), "budget exceeded: p^" + std::to_string(n_coeff));
        j["space"] = total;
        auto hits = scan(total, opt.threads, [&](unsigned long long code) {
            MLMap tr(fp, {da, db}, db), tl(fp, {db, da}, db), th(fp, {da, da}, db);
            decode({&tr, &tl, &th}, fp, code);
            return cocycle_valid(NonAbelianCocycle{fp, da, db, q.mu, q.nu, tr, tl, th});
        });
        for (unsigned long long code : hits) {
            MLMap tr(fp, {da, db}, db), tl(fp, {db, da}, db), th(fp, {da, da}, db);
            decode({&tr, &tl, &th}, fp, code);
            sols.push_back(ordered_json{{"tr", mlmap_to_json(tr)}, {"tl", mlmap_to_json(tl)}, {"theta", mlmap_to_json(th)}});
        }
        j["checks"].push_back(check_item("exhaustive", true));
    } else if (opt.kind == "ttd") {
        int d = 0;
        if (file.ttd)
            d = file.ttd->dim;
        else if (file.qta)
            d = file.qta->space.dim_a;
        if (d <= 0) return input_error(std::move(j), "ttd search needs a ttd block or dims");
        const int n_coeff = 4 * d * d * d;
        const unsigned long long total = space_size(n_coeff);
        if (total == 0) return input_error(std::move(j), "budget exceeded: p^" + std::to_string(n_coeff));
        j["space"] = total;
        auto hits = scan(total, opt.threads, [&](unsigned long long code) {
            MLMap p1(fp, {d, d}, d), p2(fp, {d, d}, d), p3(fp, {d, d}, d), p4(fp, {d, d}, d);
            decode({&p1, &p2, &p3, &p4}, fp, code);
            return ttd_valid(TwistedTridendriform{fp, d, p1, p2, p3, p4});
        });
        for (unsigned long long code : hits) {
            MLMap p1(fp, {d, d}, d), p2(fp, {d, d}, d), p3(fp, {d, d}, d), p4(fp, {d, d}, d);
            decode({&p1, &p2, &p3, &p4}, fp, code);
            sols.push_back(ttd_to_json(TwistedTridendriform{fp, d, p1, p2, p3, p4}));
        }
        j["checks"].push_back(check_item("exhaustive", true));
    } else {
        return input_error(std::move(j), "unknown kind '" + opt.kind + "' (strong|weak|cocycle|ttd)");
    }
    j["solutions"] = sols;
    j["count"] = sols.size();
    return finish(std::move(j));
}

CommandResult cmd_linf_check(const AlgebraFile& file, const LinfOptions& opt) {
    ordered_json j = base_report("linf-check", file.field);
    j["which"] = opt.which;
    j["samples"] = opt.samples;
    j["seed"] = opt.seed;
    if (!file.qta) return input_error(std::move(j), "linf-check needs dims or a factory");
    const QuasiTwilledAlgebra& q = *file.qta;
    Rng rng(opt.seed);
    std::string diag;

    auto run_laws = [&](const CurvedLInfinity& L) {
        const bool sym = check_graded_symmetry(L, opt.samples, rng, &diag);
        j["checks"].push_back(check_item("graded-symmetry", sym, sym ? "" : diag));
        const bool jac = check_generalized_jacobi(L, 4, std::max(2, opt.samples / 5), rng, &diag);
        j["checks"].push_back(check_item("jacobi-N<=4", jac, jac ? "" : diag));
    };
    auto twist_check = [&](const CurvedLInfinity& L, const LElem& alpha, const char* name) {
        if (!L.field.factorial_invertible(L.max_k)) {
            ordered_json c = check_item(name, true, "skipped: needs characteristic 0 or p > K");
            c["skipped"] = true;
            j["checks"].push_back(c);
            return;
        }
        const bool ok = check_twist_consistency(L, alpha, std::max(2, opt.samples / 5), rng, &diag);
        j["checks"].push_back(check_item(name, ok, ok ? "" : diag));
    };

    if (opt.which == "controlling-strong" || opt.which == "controlling-weak") {
        const bool strong = opt.which == "controlling-strong";
        CurvedLInfinity L = strong ? controlling_strong(q) : controlling_weak(q);
        run_laws(L);
        bool spot = true;
        for (int t = 0; t < opt.samples && spot; ++t) {
            if (strong) {
                MLMap D = random_mlmap(q.field, {q.space.dim_a}, q.space.dim_b, rng);
                spot = is_mc(L, strong_candidate(q, D)) == is_strong(q, D);
            } else {
                MLMap r = random_mlmap(q.field, {q.space.dim_b}, q.space.dim_a, rng);
                spot = is_mc(L, weak_candidate(q, r)) == is_weak(q, r);
            }
        }
        j["checks"].push_back(check_item("mc-equivalence", spot));
        LElem alpha;
        if (strong && file.D && is_strong(q, *file.D)) alpha = strong_candidate(q, *file.D);
        if (!strong && file.r && is_weak(q, *file.r)) alpha = weak_candidate(q, *file.r);
        twist_check(L, alpha, "twist-consistency");
        return finish(std::move(j));
    }
    if (opt.which == "governing") {
        bool any = false;
        if (file.D) {
            if (!is_strong(q, *file.D)) return input_error(std::move(j), "governing: D is not strong");
            CurvedLInfinity G = governing_strong(q, *file.D);
            run_laws(G);
            bool spot = true;
            for (int t = 0; t < opt.samples && spot; ++t) {
                MLMap inc = random_mlmap(q.field, {q.space.dim_a}, q.space.dim_b, rng);
                spot = is_mc(G, strong_candidate(q, inc)) == is_strong(q, *file.D + inc);
            }
            j["checks"].push_back(check_item("mc-increments-strong", spot));
            any = true;
        }
        if (file.r) {
            if (!is_weak(q, *file.r)) return input_error(std::move(j), "governing: r is not weak");
            CurvedLInfinity G = governing_weak(q, *file.r);
            run_laws(G);
            bool spot = true;
            for (int t = 0; t < opt.samples && spot; ++t) {
                MLMap inc = random_mlmap(q.field, {q.space.dim_b}, q.space.dim_a, rng);
                spot = is_mc(G, weak_candidate(q, inc)) == is_weak(q, *file.r + inc);
            }
            j["checks"].push_back(check_item("mc-increments-weak", spot));
            any = true;
        }
        if (!any) return input_error(std::move(j), "governing needs a D or r entry");
        return finish(std::move(j));
    }
    if (opt.which == "simultaneous") {
        CurvedLInfinity Ls = simultaneous_strong(q.field, q.space);
        CurvedLInfinity Lw = simultaneous_weak(q.field, q.space);
        run_laws(Ls);
        run_laws(Lw);
        bool spot = true;
        const MLMap om = omega(q);
        const bool q_ok = validate_axioms(q).pass;
        for (int t = 0; t < opt.samples && spot; ++t) {
            MLMap D = random_mlmap(q.field, {q.space.dim_a}, q.space.dim_b, rng);
            spot = is_mc(Ls, pair_candidate(q.space, om, D, ProjSide::A)) == (q_ok && is_strong(q, D));
            MLMap r = random_mlmap(q.field, {q.space.dim_b}, q.space.dim_a, rng);
            spot = spot && is_mc(Lw, pair_candidate(q.space, om, r, ProjSide::B)) == (q_ok && is_weak(q, r));
        }
        j["checks"].push_back(check_item("mc-pairs", spot));
        if (q.field.p == 2 && q.space.dim_a == 1 && q.space.dim_b == 1) {
            // exhaustive over F_2 at dims (1,1): all 2^7 structures x 2 maps
            bool ex = true;
            for (int mask = 0; mask < 256 && ex; ++mask) {
                QuasiTwilledAlgebra cand = zero_qta(q.field, q.space);
                MLMap* tensors[7] = {&cand.mu, &cand.nu, &cand.tr, &cand.tl, &cand.rh, &cand.lh, &cand.theta};
                for (int b = 0; b < 7; ++b) tensors[b]->coeffs()[0] = Scalar::of_long(q.field, (mask >> b) & 1);
                MLMap lin(q.field, {1}, 1);
                lin.coeffs()[0] = Scalar::of_long(q.field, (mask >> 7) & 1);
                const MLMap cm = omega(cand);
                const bool ok = validate_axioms(cand).pass;
                ex = is_mc(Ls, pair_candidate(q.space, cm, lin, ProjSide::A)) == (ok && is_strong(cand, lin));
                ex = ex && is_mc(Lw, pair_candidate(q.space, cm, lin, ProjSide::B)) == (ok && is_weak(cand, lin));
            }
            j["checks"].push_back(check_item("exhaustive-F2-pairs", ex));
        }
        return finish(std::move(j));
    }
    return input_error(std::move(j), "unknown --which '" + opt.which + "'");
}

CommandResult cmd_induce(const AlgebraFile& file, const std::string& kind) {
    ordered_json j = base_report("induce", file.field);
    j["kind"] = kind;
    if (kind == "strong") {
        if (!file.qta || !file.D) return input_error(std::move(j), "induce --kind strong needs a structure and D");
        const bool ok = is_strong(*file.qta, *file.D);
        j["checks"].push_back(check_item("is-strong", ok));
        if (!ok) return finish(std::move(j));
        QuasiTwilledAlgebra mp = induced_matched_pair(*file.qta, *file.D);
        j["checks"].push_back(check_item("induced-matched-pair-valid", validate_axioms(mp).pass));
        j["induced"] = qta_to_json(mp);
        return finish(std::move(j));
    }
    if (kind == "weak") {
        if (!file.qta || !file.r) return input_error(std::move(j), "induce --kind weak needs a structure and r");
        const bool ok = is_weak(*file.qta, *file.r);
        j["checks"].push_back(check_item("is-weak", ok));
        if (!ok) return finish(std::move(j));
        QuasiTwilledAlgebra def = deformed_qta(*file.qta, *file.r);
        j["checks"].push_back(check_item("deformed-qta-valid", validate_axioms(def).pass));
        j["induced"] = qta_to_json(def);
        return finish(std::move(j));
    }
    if (kind == "ttd") {
        if (!file.qta || !file.r) return input_error(std::move(j), "induce --kind ttd needs a cocycle-shaped structure and r");
        const QuasiTwilledAlgebra& q = *file.qta;
        if (!q.rh.is_zero() || !q.lh.is_zero())
            return input_error(std::move(j), "induce --kind ttd: rh and lh must vanish (non-abelian cocycle shape)");
        NonAbelianCocycle c = make_cocycle(q.field, q.space.dim_a, q.space.dim_b, q.mu, q.nu, q.tr, q.tl, q.theta);
        AxiomReport crep = validate_cocycle(c);
        j["checks"].push_back(check_item("cocycle-valid", crep.pass, crep.first_failure()));
        if (!crep.pass) return finish(std::move(j));
        const bool ok = is_twisted_rb(c, *file.r);
        j["checks"].push_back(check_item("is-twisted-rb", ok));
        if (!ok) return finish(std::move(j));
        TwistedTridendriform t = induce_ttd(c, *file.r);
        j["checks"].push_back(check_item("tt-axioms", validate_ttd(t).pass));
        j["checks"].push_back(check_item("identity-roundtrip", identity_roundtrip(t)));
        ordered_json out;
        out["format"] = 1;
        out["field"] = q.field.is_rational() ? ordered_json("rational") : ordered_json{{"prime", q.field.p}};
        out["ttd"] = ttd_to_json(t);
        j["induced"] = out;
        return finish(std::move(j));
    }
    return input_error(std::move(j), "unknown kind '" + kind + "' (strong|weak|ttd)");
}

std::string human_summary(const ordered_json& report) {
    std::string s;
    s += "[" + report.at("command").get<std::string>() + "] ";
    if (report.contains("error")) return s + "input error: " + report.at("error").get<std::string>() + "\n";
    for (const auto& c : report.at("checks")) {
        s += "\n  ";
        s += c.at("pass").get<bool>() ? "pass " : "FAIL ";
        s += c.at("name").get<std::string>();
        if (c.contains("witness")) s += "  [" + c.at("witness").get<std::string>() + "]";
    }
    if (report.contains("count")) s += "\n  solutions: " + std::to_string(report.at("count").get<std::size_t>());
    if (report.contains("tag")) s += "\n  tag: " + report.at("tag").get<std::string>();
    s += report.at("pass").get<bool>() ? "\n  => PASS\n" : "\n  => FAIL\n";
    return s;
}

}  // namespace qta
