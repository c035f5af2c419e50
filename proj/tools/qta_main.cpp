#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "qta/commands.hpp"

namespace {

int thread_count_from_env() {
    const char* env = std::getenv("QTA_THREADS");
    if (!env) return 1;
    const int n = std::atoi(env);
    return n < 1 ? 1 : (n > 64 ? 64 : n);
}

int emit(const qta::CommandResult& res) {
    std::cout << res.report.dump(2) << "\n";
    std::cerr << qta::human_summary(res.report);
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qta: exact checks for quasi-twilled associative algebras, deformation maps and their governing algebras"};
    app.require_subcommand(1);

    std::string path, kind, theory, which;
    int max_degree = 3;
    qta::SearchOptions sopt;
    qta::LinfOptions lopt;

    auto* validate = app.add_subcommand("validate", "axioms (b1)-(b11) and the Maurer-Cartan route");
    validate->add_option("file", path)->required();

    auto* check = app.add_subcommand("check-map", "strong/weak deformation map predicates");
    check->add_option("file", path)->required();
    check->add_option("--kind", kind, "strong|weak")->required();

    auto* coh = app.add_subcommand("cohomology", "dimension tables of the four theories");
    coh->add_option("file", path)->required();
    coh->add_option("--theory", theory, "qta|matched|strong|weak")->required();
    coh->add_option("--max-degree", max_degree)->default_val(3);

    auto* search = app.add_subcommand("search", "exhaustive solution lists over F_p");
    search->add_option("file", path)->required();
    search->add_option("--kind", sopt.kind, "strong|weak|cocycle|ttd")->required();
    search->add_option("--field", sopt.field_p, "prime p (defaults to the file's field)");
    search->add_option("--budget", sopt.budget)->default_val(20000000);

    auto* linf = app.add_subcommand("linf-check", "L-infinity law suite on the constructed algebras");
    linf->add_option("file", path)->required();
    linf->add_option("--which", lopt.which, "controlling-strong|controlling-weak|governing|simultaneous")->required();
    linf->add_option("--samples", lopt.samples)->default_val(25);
    linf->add_option("--seed", lopt.seed)->default_val(1);

    auto* induce = app.add_subcommand("induce", "emit the induced structure as a new algebra file");
    induce->add_option("file", path)->required();
    induce->add_option("--kind", kind, "strong|weak|ttd")->required();

    CLI11_PARSE(app, argc, argv);
    sopt.threads = thread_count_from_env();

    try {
        qta::AlgebraFile file = qta::parse_algebra_file(path);
        if (validate->parsed()) return emit(qta::cmd_validate(file));
        if (check->parsed()) return emit(qta::cmd_check_map(file, kind));
        if (coh->parsed()) return emit(qta::cmd_cohomology(file, theory, max_degree));
        if (search->parsed()) return emit(qta::cmd_search(file, sopt));
        if (linf->parsed()) return emit(qta::cmd_linf_check(file, lopt));
        if (induce->parsed()) return emit(qta::cmd_induce(file, kind));
    } catch (const qta::Error& e) {
        std::cout << "{\n  \"error\": " << nlohmann::json(e.what()).dump() << "\n}\n";
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
