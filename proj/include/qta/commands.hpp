#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "qta/io.hpp"

namespace qta {

/* Exit codes: 0 = all checks pass, 1 = a mathematical check failed,
 * 2 = input error (parse/shape/budget). Reports are byte-identical given
 * the same file, options and seed; timing goes to the stderr summary only. */
struct CommandResult {
    nlohmann::ordered_json report;
    int exit_code = 0;
};

struct SearchOptions {
    std::string kind;  // strong | weak | cocycle | ttd
    std::uint32_t field_p = 0;  // 0: use the file's field (must be prime)
    long budget = 20000000;
    int threads = 1;
};

struct LinfOptions {
    std::string which;  // controlling-strong | controlling-weak | governing | simultaneous
    int samples = 25;
    std::uint64_t seed = 1;
};

CommandResult cmd_validate(const AlgebraFile& file);
CommandResult cmd_check_map(const AlgebraFile& file, const std::string& kind);
CommandResult cmd_cohomology(const AlgebraFile& file, const std::string& theory, int max_degree);
CommandResult cmd_search(const AlgebraFile& file, const SearchOptions& opt);
CommandResult cmd_linf_check(const AlgebraFile& file, const LinfOptions& opt);
CommandResult cmd_induce(const AlgebraFile& file, const std::string& kind);

/* One-line-per-check text for stderr. */
std::string human_summary(const nlohmann::ordered_json& report);

}  // namespace qta
