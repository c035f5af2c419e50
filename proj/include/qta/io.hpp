#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qta/quasi_twilled.hpp"
#include "qta/tridend.hpp"

namespace qta {

/* Parsed input file. Structure constants come either as named dense
 * arrays (row-major, outputs innermost) or as a factory invocation.
 * Rational entries are strings "p/q"; F_p entries are plain integers in
 * [0, p). Floats are rejected everywhere. */
struct AlgebraFile {
    Field field;
    std::optional<QuasiTwilledAlgebra> qta;
    std::optional<MLMap> D;  // candidate strong map A -> B
    std::optional<MLMap> r;  // candidate weak map B -> A
    std::optional<TwistedTridendriform> ttd;
    std::string factory;  // empty when raw tensors were given
};

AlgebraFile parse_algebra_file(const std::string& path);
AlgebraFile parse_algebra_text(const std::string& text, const std::string& origin);

/* Serialization used by `induce`: emits a loadable AlgebraFile object. */
nlohmann::ordered_json qta_to_json(const QuasiTwilledAlgebra& q);
nlohmann::ordered_json ttd_to_json(const TwistedTridendriform& t);
nlohmann::ordered_json mlmap_to_json(const MLMap& m);

/* The quasi-twilled structure over F_p obtained by reducing every entry;
 * requires all denominators prime to p. */
QuasiTwilledAlgebra reduce_mod_p(const QuasiTwilledAlgebra& q, const Field& fp);
MLMap reduce_mod_p(const MLMap& m, const Field& fp);

}  // namespace qta
