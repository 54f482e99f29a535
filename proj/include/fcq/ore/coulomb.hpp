#pragma once

#include "fcq/ore/weyl.hpp"
#include "fcq/report.hpp"

#include <optional>
#include <ostream>

namespace fcq::ore {

/// sum g_n(w, h) e_n in the rank-1 quantum Coulomb branch A_h(r), with
/// e_n = prod_{i=1}^{nr}(r w - i h) x^n for n >= 1 and e_n = x^n for n <= 0.
/// Coefficients live in Z[w, h] (characteristic 0) or F_p[w, h].
class CoulombElement {
public:
    CoulombElement(int r, std::uint32_t characteristic);

    static CoulombElement basis(int r, int n, std::uint32_t characteristic = 0);
    /// g(w, h) e_0.
    static CoulombElement scalar(int r, const Poly& g, std::uint32_t characteristic = 0);
    static CoulombElement w(int r, std::uint32_t characteristic = 0);
    static CoulombElement hbar(int r, std::uint32_t characteristic = 0);

    int r() const { return r_; }
    std::uint32_t characteristic() const { return char_; }
    const std::map<int, Poly>& coefficients() const { return coeffs_; }
    /// g_n, zero when absent.
    Poly coefficient(int n) const;
    void add(int n, const Poly& g);
    bool is_zero() const { return coeffs_.empty(); }

    CoulombElement reduce_mod(std::uint32_t p) const;
    CoulombElement lift() const;
    /// Sets h = 0 in every coefficient.
    CoulombElement at_hbar_zero() const;

    friend CoulombElement operator+(const CoulombElement& a, const CoulombElement& b);
    friend CoulombElement operator-(const CoulombElement& a, const CoulombElement& b);
    friend CoulombElement operator*(const CoulombElement& a, const CoulombElement& b);
    friend bool operator==(const CoulombElement& a, const CoulombElement& b);
    friend bool operator!=(const CoulombElement& a, const CoulombElement& b) { return !(a == b); }

    /// e.g. `e(2)`, `(w - h)*e(-1)`.
    friend std::ostream& operator<<(std::ostream& os, const CoulombElement& u) { return os << u.to_string(); }

    std::string to_string() const;

private:
    void require_same(const CoulombElement& o) const;

    int r_;
    std::uint32_t char_;
    std::map<int, Poly> coeffs_;
};

/// prod_{i=1}^{nr}(r w - i h) for n >= 1, and 1 otherwise.
Poly coulomb_factor(int r, int n, std::uint32_t characteristic = 0);

/// Image in the Weyl algebra (over the same coefficient ring).
WeylElement to_weyl(const CoulombElement& u);

/// Re-expresses a w-form in the e_n basis by exact division; throws when a
/// coefficient is not divisible.
CoulombElement coulomb_from_wform(const WForm& f, int r, std::uint32_t characteristic);

/// Lift to Z[h], normal-order in the Weyl algebra, divide by the basis
/// factors over Z, reduce mod p.
CoulombElement coulomb_mul(const CoulombElement& u, const CoulombElement& v);
CoulombElement coulomb_commutator(const CoulombElement& u, const CoulombElement& v);

/// Result of testing whether a mod-p Weyl element lies in A_h(r).
struct Membership {
    std::optional<CoulombElement> element;
    int failing_n = 0;

    bool accepted() const { return element.has_value(); }
};

Membership coulomb_membership(const WeylElement& u, int r);

enum class CoulombGenerator { XInverse, E1, W };

std::optional<CoulombGenerator> parse_coulomb_generator(const std::string& s);
std::string to_string(CoulombGenerator g);

/// Element of the commutative algebra A(r) = F_p[w][e_{-1}, e_1]/(e_1 e_{-1} = (r w)^r):
/// n -> c_n(w) on the basis ebar_n.
class ClassicalElement {
public:
    ClassicalElement(int r, std::uint32_t p);

    static ClassicalElement generator(int r, std::uint32_t p, CoulombGenerator g);
    static ClassicalElement one(int r, std::uint32_t p);

    int r() const { return r_; }
    std::uint32_t p() const { return p_; }
    const std::map<int, Poly>& coefficients() const { return coeffs_; }
    void add(int n, const Poly& c);

    ClassicalElement pow(unsigned e) const;
    friend ClassicalElement operator+(const ClassicalElement& a, const ClassicalElement& b);
    friend ClassicalElement operator*(const ClassicalElement& a, const ClassicalElement& b);
    friend bool operator==(const ClassicalElement& a, const ClassicalElement& b);

    std::string to_string() const;

private:
    int r_;
    std::uint32_t p_;
    std::map<int, Poly> coeffs_;
};

/// Generator images: e_{-1} -> e_{-p}, e_1 -> e_p, w -> prod_{i<p}(w - i h).
CoulombElement coulomb_frobenius(int r, std::uint32_t p, CoulombGenerator g);

/// Multiplicative extension of the generator images to A(r).
CoulombElement frobenius_hbar(const ClassicalElement& c);

/// The h = 0 reduction of A_h(r) read as A(r) via e_n -> ebar_n.
ClassicalElement classical_reduction(const CoulombElement& u);

/// e_n e_m = e_{n+m} over Z[h] for 0 <= n, m <= max_index.
VerificationReport coulomb_product_report(int r, int max_index = 4);
/// Relation preservation and centrality of the generator images mod p.
VerificationReport coulomb_frobenius_report(int r, int p);
/// F(1) = 1, F mod h is the p-th power, F multiplicative on products of generators.
VerificationReport coulomb_frobenius_structure_report(int r, int p, std::uint64_t seed = 1);

} // namespace fcq::ore
