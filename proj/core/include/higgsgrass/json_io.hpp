#pragma once

#include "higgsgrass/higgs.hpp"
#include "higgsgrass/ideal.hpp"
#include "higgsgrass/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace higgsgrass {

/// A parsed problem file: exactly one of a Higgs field or a Jordan
/// specification, plus optional engine knobs.
struct ProblemFile {
    std::optional<HiggsField> higgs;
    std::optional<JordanSpec> spec;
    std::optional<MonomialOrder> order;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> spair_budget;
};

/// Parses {"higgs": {...}} or {"spec": {...}} with optional "order", "seed",
/// "spair_budget". Schemas:
///   higgs: {"base_dim": n, "rank": r, "base_vars": [names],
///           "matrices": [[[poly-string, ...], ...], ...]}   (row-major, h = 1..n)
///   spec:  {"base_vars": [names]?, "blocks": [{"lambda": poly-string,
///           "size": i, "mult": m}, ...]}                    (base defaults to ["x"])
ProblemFile problem_from_json(const std::string& text);

/// {"vars": [names], "generators": [poly-string, ...], "order": name?}
/// with order one of "grevlex" (default), "lex", "elimination_block:<k>".
Ideal ideal_from_json(const std::string& text);

MonomialOrder order_from_name(const std::string& name);

} // namespace higgsgrass
