#include "fcq/cli/json.hpp"

namespace fcq::cli {

namespace {

std::string json_var(const std::string& v) { return v == "h" ? "hbar" : v; }
std::string internal_var(const std::string& v) { return v == "hbar" ? "h" : v; }

std::vector<std::string> json_vars(const std::vector<std::string>& vars)
{
    std::vector<std::string> out;
    for (const auto& v : vars)
        out.push_back(json_var(v));
    return out;
}

/// Splits the listed variables off as a key; the rest form the coefficient.
template <class Key>
std::map<Key, Poly> split_terms(const Poly& f, const std::vector<std::size_t>& key_vars,
                                const std::vector<std::string>& coeff_vars, Key (*make)(const std::vector<int>&))
{
    std::map<Key, Poly> out;
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> key, rest;
        for (std::size_t i = 0; i < e.size(); ++i) {
            bool is_key = false;
            for (auto k : key_vars)
                is_key = is_key || k == i;
            (is_key ? key : rest).push_back(e[i]);
        }
        auto [it, ins] = out.try_emplace(make(key), coeff_vars, f.characteristic());
        it->second.add_term(rest, c);
    }
    return out;
}

std::pair<int, int> pair_key(const std::vector<int>& k) { return {k[0], k[1]}; }

} // namespace

Json poly_to_json(const Poly& f)
{
    Json terms = Json::array();
    std::vector<std::pair<Poly::Exponent, Integer>> sorted(f.terms().begin(), f.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
    for (const auto& [e, c] : sorted)
        terms.push_back({{"exp", e}, {"coeff", c.get_str()}});
    return {{"vars", json_vars(f.vars())}, {"terms", terms}};
}

Poly poly_from_json(const Json& j, std::uint32_t characteristic)
{
    std::vector<std::string> vars;
    for (const auto& v : j.at("vars"))
        vars.push_back(internal_var(v.get<std::string>()));
    Poly f(vars, characteristic);
    for (const auto& t : j.at("terms")) {
        const auto e = t.at("exp").get<std::vector<int>>();
        if (e.size() != vars.size())
            throw AlgebraError("polynomial JSON: exponent length does not match vars");
        f.add_term(e, Integer(t.at("coeff").get<std::string>()));
    }
    return f;
}

Json coeff_ring_json(std::uint32_t characteristic, const std::vector<std::string>& vars)
{
    return {{"base", characteristic == 0 ? std::string("Z") : "F_" + std::to_string(characteristic)},
            {"vars", json_vars(vars)}};
}

Json to_json(const ore::WeylElement& u)
{
    const std::vector<std::string> cv{"h"};
    const auto parts = split_terms<std::pair<int, int>>(u.poly(), {0, 1}, cv, pair_key);
    Json terms = Json::array();
    for (const auto& [k, c] : parts)
        terms.push_back({{"x", k.first}, {"d", k.second}, {"c", poly_to_json(c)}});
    return {{"alg", "weyl"}, {"coeff_ring", coeff_ring_json(u.characteristic(), cv)}, {"terms", terms}};
}

Json to_json(const ore::QTorusElement& u)
{
    const std::vector<std::string> cv{"q"};
    const auto parts = split_terms<std::pair<int, int>>(u.poly(), {1, 2}, cv, pair_key);
    Json terms = Json::array();
    for (const auto& [k, c] : parts)
        terms.push_back({{"x", k.first}, {"y", k.second}, {"c", poly_to_json(c)}});
    return {{"alg", "qtorus"}, {"coeff_ring", coeff_ring_json(0, cv)}, {"terms", terms}};
}

Json to_json(const ore::CoulombElement& u)
{
    Json terms = Json::array();
    for (const auto& [n, g] : u.coefficients())
        terms.push_back({{"e", n}, {"c", poly_to_json(g)}});
    return {{"alg", "coulomb"},
            {"r", u.r()},
            {"coeff_ring", coeff_ring_json(u.characteristic(), ore::wform_variables())},
            {"terms", terms}};
}

Json to_json(const VerificationReport& rep)
{
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json j{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
        if (!c.passed)
            j["witness"] = c.witness;
        checks.push_back(j);
    }
    return {{"name", rep.name}, {"passed", rep.passed()}, {"checks", checks}};
}

} // namespace fcq::cli
