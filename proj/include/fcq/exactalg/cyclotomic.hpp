#pragma once

#include "fcq/exactalg/poly.hpp"
#include "fcq/report.hpp"

#include <string>
#include <utility>
#include <variant>

namespace fcq {

/// Phi_n in the single variable `var`.
Poly cyclotomic(int n, const std::string& var = "q");

/// Quotient and remainder of `a` by a polynomial that is monic in `var`
/// (other variables are treated as coefficients).
std::pair<Poly, Poly> divrem_monic(const Poly& a, const Poly& monic, const std::string& var);

/// Reduction targets accepted by poly_reduce.
struct ModPrime {
    std::uint32_t p;
};
/// Z[q]/Phi_n(q), with q^-1 = q^(n-1) for Laurent inputs.
struct ModCyclotomic {
    int n;
    std::string var = "q";
};
/// Z[q]/(q^n - 1).
struct ModPowerMinusOne {
    int n;
    std::string var = "q";
};
using Modulus = std::variant<ModPrime, ModCyclotomic, ModPowerMinusOne>;

/// Canonical representative of x modulo the given ideal. Reduction is a ring
/// homomorphism; the representative has degree < deg of the modulus in var.
Poly poly_reduce(const Poly& x, const Modulus& modulus);

/// Element of Z[q]/Phi_n(q), kept reduced.
class CyclotomicRing {
public:
    explicit CyclotomicRing(int n, std::string var = "q");

    int order() const { return n_; }
    const std::string& var() const { return var_; }
    const Poly& phi() const { return phi_; }

    Poly reduce(const Poly& x) const { return poly_reduce(x, ModCyclotomic{n_, var_}); }
    bool is_zero(const Poly& x) const { return reduce(x).is_zero(); }

private:
    int n_;
    std::string var_;
    Poly phi_;
};

/// prod_{i=0}^{p-1} (T - i*hbar) == T^p - hbar^(p-1) T in F_p[T, hbar].
VerificationReport falling_factorial_identity(int p);

} // namespace fcq
