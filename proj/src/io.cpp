#include "qta/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qta/error.hpp"

namespace qta {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

Scalar scalar_from_json(const Field& f, const json& v, const std::string& where) {
    if (v.is_string()) {
        if (!f.is_rational()) throw ParseError(where + ": string entries are only valid over the rationals");
        return Scalar::parse(f, v.get<std::string>());
    }
    if (v.is_number_integer()) {
        const long long n = v.get<long long>();
        if (f.is_rational()) return Scalar::of_long(f, static_cast<long>(n));
        if (n < 0 || static_cast<std::uint64_t>(n) >= f.p)
            throw ParseError(where + ": residue " + std::to_string(n) + " outside [0, " + std::to_string(f.p) + ")");
        return Scalar::mod_p(f, static_cast<std::uint64_t>(n));
    }
    throw ParseError(where + ": entries must be integers or rational strings, never floats");
}

MLMap tensor_from_json(const Field& f, std::vector<int> in_dims, int out_dim, const json& arr,
                       const std::string& where) {
    MLMap m(f, std::move(in_dims), out_dim);
    if (!arr.is_array()) throw ParseError(where + ": expected an array");
    if (arr.size() != m.coeffs().size())
        throw ParseError(where + ": expected " + std::to_string(m.coeffs().size()) + " entries, got " +
                         std::to_string(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i)
        m.coeffs()[i] = scalar_from_json(f, arr[i], where + "[" + std::to_string(i) + "]");
    return m;
}

MLMap opt_tensor(const Field& f, const json& j, const char* key, std::vector<int> in_dims, int out_dim,
                 const std::string& origin) {
    if (!j.contains(key)) return MLMap(f, std::move(in_dims), out_dim);
    return tensor_from_json(f, std::move(in_dims), out_dim, j.at(key), origin + ":" + key);
}

Algebra algebra_from_json(const Field& f, const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("dim")) throw ParseError(where + ": expected {\"dim\": n, \"product\": [...]}");
    const int dim = j.at("dim").get<int>();
    if (dim <= 0) throw ParseError(where + ": dim must be positive");
    MLMap prod = opt_tensor(f, j, "product", {dim, dim}, dim, where);
    return make_algebra(f, dim, std::move(prod));
}

QuasiTwilledAlgebra factory_from_json(const Field& f, const json& fac, const std::string& origin) {
    if (!fac.is_object() || !fac.contains("name")) throw ParseError(origin + ":factory: missing name");
    const std::string name = fac.at("name").get<std::string>();
    auto need_b_dim = [&]() {
        if (!fac.contains("B") || !fac.at("B").contains("dim")) throw ParseError(origin + ":factory: missing B.dim");
        return fac.at("B").at("dim").get<int>();
    };
    if (name == "direct_product")
        return direct_product(algebra_from_json(f, fac.at("A"), origin + ":A"),
                              algebra_from_json(f, fac.at("B"), origin + ":B"));
    if (name == "semidirect") {
        Algebra A = algebra_from_json(f, fac.at("A"), origin + ":A");
        const int db = need_b_dim();
        return semidirect(A, db, opt_tensor(f, fac, "tr", {A.dim, db}, db, origin),
                          opt_tensor(f, fac, "tl", {db, A.dim}, db, origin));
    }
    if (name == "algebra_in_bimodules") {
        Algebra A = algebra_from_json(f, fac.at("A"), origin + ":A");
        Algebra B = algebra_from_json(f, fac.at("B"), origin + ":B");
        return algebra_in_bimodules(A, B, opt_tensor(f, fac, "tr", {A.dim, B.dim}, B.dim, origin),
                                    opt_tensor(f, fac, "tl", {B.dim, A.dim}, B.dim, origin));
    }
    if (name == "left_module") {
        Algebra A = algebra_from_json(f, fac.at("A"), origin + ":A");
        const int db = need_b_dim();
        return left_module_only(A, db, opt_tensor(f, fac, "tr", {A.dim, db}, db, origin));
    }
    if (name == "right_module") {
        Algebra A = algebra_from_json(f, fac.at("A"), origin + ":A");
        const int db = need_b_dim();
        return right_module_only(A, db, opt_tensor(f, fac, "tl", {db, A.dim}, db, origin));
    }
    if (name == "matched_pair") {
        Algebra A = algebra_from_json(f, fac.at("A"), origin + ":A");
        Algebra B = algebra_from_json(f, fac.at("B"), origin + ":B");
        const SplitSpace s{A.dim, B.dim};
        return matched_pair(f, s, A.product, B.product,
                            opt_tensor(f, fac, "tr", {A.dim, B.dim}, B.dim, origin),
                            opt_tensor(f, fac, "tl", {B.dim, A.dim}, B.dim, origin),
                            opt_tensor(f, fac, "rh", {B.dim, A.dim}, A.dim, origin),
                            opt_tensor(f, fac, "lh", {A.dim, B.dim}, A.dim, origin));
    }
    if (name == "box") return box(algebra_from_json(f, fac.at("A"), origin + ":A"));
    if (name == "theta_twisted_semidirect") {
        Algebra A = algebra_from_json(f, fac.at("A"), origin + ":A");
        const int db = need_b_dim();
        return theta_twisted_semidirect(A, db, opt_tensor(f, fac, "tr", {A.dim, db}, db, origin),
                                        opt_tensor(f, fac, "tl", {db, A.dim}, db, origin),
                                        opt_tensor(f, fac, "theta", {A.dim, A.dim}, db, origin));
    }
    if (name == "reynolds") return reynolds_shape(algebra_from_json(f, fac.at("A"), origin + ":A"));
    if (name == "nonabelian_boxtimes") {
        Algebra A = algebra_from_json(f, fac.at("A"), origin + ":A");
        Algebra B = algebra_from_json(f, fac.at("B"), origin + ":B");
        NonAbelianCocycle c = make_cocycle(f, A.dim, B.dim, A.product, B.product,
                                           opt_tensor(f, fac, "tr", {A.dim, B.dim}, B.dim, origin),
                                           opt_tensor(f, fac, "tl", {B.dim, A.dim}, B.dim, origin),
                                           opt_tensor(f, fac, "theta", {A.dim, A.dim}, B.dim, origin));
        return boxtimes(c);
    }
    throw ParseError(origin + ":factory: unknown factory '" + name + "'");
}

}  // namespace

AlgebraFile parse_algebra_text(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(origin + ": top level must be an object");
    if (j.contains("format") && j.at("format").get<int>() != 1)
        throw ParseError(origin + ": unsupported format version");

    AlgebraFile out;
    out.field = rationals();
    if (j.contains("field")) {
        const json& fj = j.at("field");
        if (fj.is_string() && fj.get<std::string>() == "rational")
            out.field = rationals();
        else if (fj.is_object() && fj.contains("prime"))
            out.field = prime_field(fj.at("prime").get<std::uint32_t>());
        else
            throw ParseError(origin + ": field must be \"rational\" or {\"prime\": p}");
    }
    const Field f = out.field;

    if (j.contains("factory")) {
        out.qta = factory_from_json(f, j.at("factory"), origin);
        out.factory = j.at("factory").at("name").get<std::string>();
    } else if (j.contains("dims")) {
        const json& dj = j.at("dims");
        if (!dj.contains("A") || !dj.contains("B")) throw ParseError(origin + ": dims needs A and B");
        const int da = dj.at("A").get<int>(), db = dj.at("B").get<int>();
        if (da <= 0 || db <= 0) throw ParseError(origin + ": dims must be positive");
        out.qta = make_qta(f, SplitSpace{da, db},
                           opt_tensor(f, j, "mu", {da, da}, da, origin),
                           opt_tensor(f, j, "nu", {db, db}, db, origin),
                           opt_tensor(f, j, "tr", {da, db}, db, origin),
                           opt_tensor(f, j, "tl", {db, da}, db, origin),
                           opt_tensor(f, j, "rh", {db, da}, da, origin),
                           opt_tensor(f, j, "lh", {da, db}, da, origin),
                           opt_tensor(f, j, "theta", {da, da}, db, origin));
    }

    if (out.qta) {
        const int da = out.qta->space.dim_a, db = out.qta->space.dim_b;
        if (j.contains("D")) out.D = tensor_from_json(f, {da}, db, j.at("D"), origin + ":D");
        if (j.contains("r")) out.r = tensor_from_json(f, {db}, da, j.at("r"), origin + ":r");
    } else if (j.contains("D") || j.contains("r")) {
        throw ParseError(origin + ": a candidate map needs dims or a factory");
    }

    if (j.contains("ttd")) {
        const json& tj = j.at("ttd");
        if (!tj.contains("dim")) throw ParseError(origin + ":ttd: missing dim");
        const int d = tj.at("dim").get<int>();
        if (d <= 0) throw ParseError(origin + ":ttd: dim must be positive");
        out.ttd = make_ttd(f, d, opt_tensor(f, tj, "prec", {d, d}, d, origin + ":ttd"),
                           opt_tensor(f, tj, "succ", {d, d}, d, origin + ":ttd"),
                           opt_tensor(f, tj, "wedge", {d, d}, d, origin + ":ttd"),
                           opt_tensor(f, tj, "dot", {d, d}, d, origin + ":ttd"));
    }

    if (!out.qta && !out.ttd) throw ParseError(origin + ": nothing to load (need dims, factory, or ttd)");
    return out;
}

AlgebraFile parse_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra_text(ss.str(), path);
}

namespace {

ordered_json tensor_entries(const MLMap& m) {
    ordered_json arr = ordered_json::array();
    for (const Scalar& s : m.coeffs()) {
        if (m.field().is_rational())
            arr.push_back(s.str());
        else
            arr.push_back(s.residue());
    }
    return arr;
}

}  // namespace

ordered_json mlmap_to_json(const MLMap& m) { return tensor_entries(m); }

ordered_json qta_to_json(const QuasiTwilledAlgebra& q) {
    ordered_json j;
    j["format"] = 1;
    if (q.field.is_rational())
        j["field"] = "rational";
    else
        j["field"] = ordered_json{{"prime", q.field.p}};
    j["dims"] = ordered_json{{"A", q.space.dim_a}, {"B", q.space.dim_b}};
    j["mu"] = tensor_entries(q.mu);
    j["nu"] = tensor_entries(q.nu);
    j["tr"] = tensor_entries(q.tr);
    j["tl"] = tensor_entries(q.tl);
    j["rh"] = tensor_entries(q.rh);
    j["lh"] = tensor_entries(q.lh);
    j["theta"] = tensor_entries(q.theta);
    return j;
}

ordered_json ttd_to_json(const TwistedTridendriform& t) {
    ordered_json j;
    j["dim"] = t.dim;
    j["prec"] = tensor_entries(t.prec);
    j["succ"] = tensor_entries(t.succ);
    j["wedge"] = tensor_entries(t.wedge);
    j["dot"] = tensor_entries(t.dot);
    return j;
}

MLMap reduce_mod_p(const MLMap& m, const Field& fp) {
    if (!m.field().is_rational()) {
        if (m.field() == fp) return m;
        throw FieldMismatch("reduce_mod_p: tensor already lives over " + m.field().str());
    }
    MLMap out(fp, m.in_dims(), m.out_dim());
    for (std::size_t i = 0; i < m.coeffs().size(); ++i) {
        const mpq_class& q = m.coeffs()[i].rat();
        mpz_class den_mod = q.get_den() % fp.p;
        if (den_mod == 0) throw Error("reduce_mod_p: denominator divisible by " + std::to_string(fp.p));
        mpz_class num_mod = q.get_num() % fp.p;
        if (num_mod < 0) num_mod += fp.p;
        Scalar num = Scalar::mod_p(fp, num_mod.get_ui());
        Scalar den = Scalar::mod_p(fp, den_mod.get_ui());
        out.coeffs()[i] = num / den;
    }
    return out;
}

QuasiTwilledAlgebra reduce_mod_p(const QuasiTwilledAlgebra& q, const Field& fp) {
    QuasiTwilledAlgebra out = zero_qta(fp, q.space);
    out.mu = reduce_mod_p(q.mu, fp);
    out.nu = reduce_mod_p(q.nu, fp);
    out.tr = reduce_mod_p(q.tr, fp);
    out.tl = reduce_mod_p(q.tl, fp);
    out.rh = reduce_mod_p(q.rh, fp);
    out.lh = reduce_mod_p(q.lh, fp);
    out.theta = reduce_mod_p(q.theta, fp);
    out.tag = q.tag;
    return out;
}

}  // namespace qta
