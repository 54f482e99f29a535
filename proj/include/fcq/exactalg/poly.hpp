#pragma once

#include "fcq/exactalg/integer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fcq {

/// Sparse polynomial over Z or F_p in a named variable set. Exponents may be
/// negative, so the same type carries Laurent polynomials such as elements of
/// Z[q, q^-1]. Zero coefficients are never stored; over F_p coefficients are
/// kept in [0, p).
class Poly {
public:
    using Exponent = std::vector<int>;
    using Terms = std::map<Exponent, Integer>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars, std::uint32_t characteristic = 0);

    static Poly constant(std::vector<std::string> vars, const Integer& c, std::uint32_t characteristic = 0);
    static Poly variable(std::vector<std::string> vars, const std::string& name, std::uint32_t characteristic = 0);
    static Poly monomial(std::vector<std::string> vars, Exponent e, const Integer& c, std::uint32_t characteristic = 0);

    const std::vector<std::string>& vars() const { return vars_; }
    std::uint32_t characteristic() const { return char_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// True for a constant (possibly zero) polynomial.
    bool is_constant() const;
    Integer constant_term() const;
    Integer coeff(const Exponent& e) const;

    /// Index of a variable, or -1.
    int var_index(const std::string& name) const;

    int degree(int var) const;
    int min_degree(int var) const;
    int total_degree() const;

    /// Sum of the terms whose exponent in `var` equals e, with that exponent
    /// set to zero.
    Poly coefficient_of(int var, int e) const;

    void add_term(const Exponent& e, const Integer& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Integer& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Integer& c) { return a *= c; }
    friend Poly operator*(const Integer& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const;

    /// Same polynomial with coefficients reduced into F_p.
    Poly reduce_mod(std::uint32_t p) const;
    /// Integer lift (residues in [0, p) become integers).
    Poly lift() const;

    /// Ring homomorphism sending `var` to `value` (other variables fixed).
    /// Negative exponents need `value` to be a unit monomial.
    Poly substitute(int var, const Poly& value) const;

    /// Re-expresses the polynomial over another variable list; every variable
    /// that occurs must exist in `vars`.
    Poly with_vars(const std::vector<std::string>& vars) const;

    /// Multiplies every exponent of `var` by n.
    Poly dilate(int var, int n) const;

    /// Divides by a monomial unit (throws unless exact).
    Poly divide_by_monomial(const Exponent& e) const;

    /// Human-readable form, graded-lexicographic descending, centred residues
    /// over F_p.
    std::string to_string() const;

private:
    void require_compatible(const Poly& o, const char* op) const;
    void adopt_ring(const Poly& o);
    void normalize(Integer& c) const;

    std::vector<std::string> vars_;
    std::uint32_t char_ = 0;
    Terms terms_;
};

/// a / b when b divides a exactly (lex leading-term division; exponents must
/// be nonnegative). Over Z the quotient must have integer coefficients.
std::optional<Poly> exact_quotient(const Poly& a, const Poly& b);

/// Graded-lexicographic descending comparison used for display.
bool grlex_greater(const Poly::Exponent& a, const Poly::Exponent& b);

} // namespace fcq
