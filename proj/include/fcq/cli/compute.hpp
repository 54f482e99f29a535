#pragma once

#include "fcq/cli/json.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace fcq::cli {

struct ComputeConfig {
    std::string alg;                 // weyl, qtorus, coulomb, poly, cohom
    std::optional<std::uint32_t> p;  // coefficient characteristic
    std::optional<int> r;            // Coulomb / K-theoretic parameter
    std::optional<int> n;            // root-of-unity order (qtorus)
    std::string op = "element";      // cohom: element, st, as, P
    int s = 0;                       // cohom: index of P^s
};

struct ComputeResult {
    std::string text;
    Json json;
};

/// Evaluates `expression` in the selected algebra and returns its normal
/// form. Throws ParseError for text or identifiers the algebra does not
/// know, AlgebraError when evaluation fails.
ComputeResult compute(const ComputeConfig& config, const std::string& expression);

const std::vector<std::string>& compute_algebras();

} // namespace fcq::cli
