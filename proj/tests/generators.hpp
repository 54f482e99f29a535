#pragma once

// Seeded generators shared by the property tests.

#include "fcq/exactalg/poly.hpp"
#include "fcq/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fcq::testing {

using Rng = SeededRng;

/// Random polynomial with up to `terms` terms, exponents in [min_exp, max_exp].
inline Poly random_poly(Rng& rng, const std::vector<std::string>& vars, std::uint32_t ch, int terms, int min_exp,
                        int max_exp, long coeff_bound = 9)
{
    Poly r(vars, ch);
    const int n = static_cast<int>(rng.uniform(0, terms));
    for (int t = 0; t < n; ++t) {
        Poly::Exponent e(vars.size());
        for (auto& x : e)
            x = static_cast<int>(rng.uniform(min_exp, max_exp));
        r.add_term(e, Integer(rng.uniform(-coeff_bound, coeff_bound)));
    }
    return r;
}

} // namespace fcq::testing
