#pragma once

#include "fcq/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fcq::ore {

template <class T>
using Named = std::vector<std::pair<std::string, T>>;

/// Checks that every [image, generator] reduces to zero. `commutator` and
/// `reduce` are the algebra's bracket and the map to the quotient.
template <class T, class Commutator, class Reduce>
VerificationReport centrality_report(const Named<T>& images, const Named<T>& generators, Commutator commutator,
                                     Reduce reduce, const std::string& modulus)
{
    VerificationReport rep;
    rep.name = "centrality";
    for (const auto& [in, u] : images)
        for (const auto& [gn, g] : generators) {
            const T c = reduce(commutator(u, g));
            rep.add("[" + in + ", " + gn + "] = 0 " + modulus, c.is_zero(), c.to_string());
        }
    return rep;
}

} // namespace fcq::ore
