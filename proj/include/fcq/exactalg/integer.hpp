#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fcq {

/// Arbitrary-precision integer used for every exact coefficient.
using Integer = mpz_class;

/// Raised on contract violations of the algebra routines (bad shapes,
/// mismatched rings, invalid parameters).
class AlgebraError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_prime(std::int64_t n);

/// Throws unless p is an odd prime.
void require_odd_prime(std::int64_t p, const char* what);

Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(std::int64_t n);

/// Falling factorial a(a-1)...(a-k+1); defined for negative a.
Integer falling_factorial(std::int64_t a, std::int64_t k);

/// Residue in [0, m).
Integer mod_floor(const Integer& a, std::uint32_t m);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

/// Inverse of a modulo the prime p; throws when a = 0 mod p.
std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

std::int64_t pow_mod(std::int64_t base, std::uint64_t e, std::int64_t p);

} // namespace fcq
