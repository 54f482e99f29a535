#pragma once

#include <cstdint>
#include <random>

namespace fcq {

/// Deterministic generator for randomized checks. Draws are reduced by
/// plain modulo so sequences do not depend on the standard library's
/// distribution implementations.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }

    bool coin() { return (gen_() & 1) != 0; }

    std::uint64_t next() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace fcq
