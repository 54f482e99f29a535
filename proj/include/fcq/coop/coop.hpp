#pragma once

#include "fcq/exactalg/poly.hpp"
#include "fcq/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace fcq::coop {

/// Polynomial cohomology ring F_p[x_1..x_n] on even-degree generators, with a
/// Bockstein table. Images of power operations live in R[a, h] with a^2 = 0,
/// |a| = 1, |h| = 2.
class CohomRing {
public:
    CohomRing(std::uint32_t p, std::vector<std::string> generators, std::vector<int> degrees = {},
              std::map<std::string, Poly> bockstein = {});

    std::uint32_t p() const { return p_; }
    const std::vector<std::string>& generators() const { return gens_; }
    const std::vector<int>& degrees() const { return degrees_; }
    /// beta of a generator, zero when absent from the table.
    Poly bockstein(const std::string& gen) const;

    /// Variable lists of R and of R[a, h].
    const std::vector<std::string>& vars() const { return gens_; }
    const std::vector<std::string>& image_vars() const { return image_vars_; }

    Poly zero() const { return Poly(gens_, p_); }
    Poly one() const { return Poly::constant(gens_, 1, p_); }
    Poly gen(const std::string& name) const { return Poly::variable(gens_, name, p_); }
    /// Coerces into this ring (reduces mod p, re-indexes variables).
    Poly element(const Poly& f) const;

    /// Cohomological degree of a monomial; of f when homogeneous (throws otherwise).
    int degree(const Poly::Exponent& e) const;
    int degree(const Poly& f) const;
    bool is_homogeneous(const Poly& f) const;

    /// Image-ring degree, counting a and h.
    int image_degree(const Poly::Exponent& e) const;

private:
    std::uint32_t p_;
    std::vector<std::string> gens_;
    std::vector<int> degrees_;
    std::map<std::string, Poly> beta_;
    std::vector<std::string> image_vars_;
};

/// Sets a^2 = 0 in an element of R[a, h].
Poly kill_a_squared(const Poly& x);

/// Ring homomorphism extending x -> x^p - h^{p-1} x + a h^{p-2} beta(x) on
/// degree-2 generators.
Poly st_in(const CohomRing& R, const Poly& f);

/// x_i -> x_i^p - h^{p-1} x_i on F_p[x_1..x_n]; result in F_p[x_1..x_n, h].
Poly as_hbar(const Poly& f, std::uint32_t p, const std::string& hbar = "h");

/// P^s(f) for f homogeneous of even degree n = 2k.
Poly steenrod_P(const CohomRing& R, int s, const Poly& f);

/// St_in(b) vanishes on b = t h for t in F_p, and b^p - h^{p-1} b is the only
/// degree-2p element of F_p[b, h] doing so with reduction b^p at h = 0.
VerificationReport hbar_multiple_vanishing(int p);

/// P^0, P^1, binomial formula, Cartan formula and unstability on F_p[b] up to
/// the given degree.
VerificationReport steenrod_operations_report(int p, int max_degree = 20);

} // namespace fcq::coop
