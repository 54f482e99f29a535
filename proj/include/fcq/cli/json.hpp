#pragma once

#include "fcq/exactalg/poly.hpp"
#include "fcq/ore/ore.hpp"
#include "fcq/report.hpp"

#include <json.hpp>

namespace fcq::cli {

using Json = nlohmann::ordered_json;

/// {"vars":[...],"terms":[{"exp":[...],"coeff":"..."}]}, decimal string
/// coefficients, `h` written as `hbar`.
Json poly_to_json(const Poly& f);
Poly poly_from_json(const Json& j, std::uint32_t characteristic = 0);

Json coeff_ring_json(std::uint32_t characteristic, const std::vector<std::string>& vars);

Json to_json(const ore::WeylElement& u);
Json to_json(const ore::QTorusElement& u);
Json to_json(const ore::CoulombElement& u);
Json to_json(const VerificationReport& rep);

} // namespace fcq::cli
