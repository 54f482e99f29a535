#pragma once

#include "fcq/exactalg/poly.hpp"
#include "fcq/report.hpp"

#include <map>
#include <ostream>

namespace fcq::ore {

/// sum c_{a,b}(h) x^a d^b in the Weyl algebra R[h]<x^{+-1}, d>/([d,x] = h),
/// stored as a polynomial in (x, d, h) with x Laurent and d, h polynomial.
class WeylElement {
public:
    static const std::vector<std::string>& variables();

    explicit WeylElement(std::uint32_t characteristic = 0);
    explicit WeylElement(const Poly& normal_form);

    static WeylElement constant(const Integer& c, std::uint32_t characteristic = 0);
    static WeylElement monomial(int a, int b, const Integer& c = 1, int h_power = 0, std::uint32_t characteristic = 0);
    static WeylElement x(int a = 1, std::uint32_t characteristic = 0) { return monomial(a, 0, 1, 0, characteristic); }
    static WeylElement d(int b = 1, std::uint32_t characteristic = 0) { return monomial(0, b, 1, 0, characteristic); }
    static WeylElement hbar(std::uint32_t characteristic = 0) { return monomial(0, 0, 1, 1, characteristic); }
    /// x d.
    static WeylElement w(std::uint32_t characteristic = 0) { return monomial(1, 1, 1, 0, characteristic); }

    const Poly& poly() const { return f_; }
    std::uint32_t characteristic() const { return f_.characteristic(); }
    bool is_zero() const { return f_.is_zero(); }

    WeylElement reduce_mod(std::uint32_t p) const { return WeylElement(f_.reduce_mod(p)); }
    WeylElement lift() const { return WeylElement(f_.lift()); }
    WeylElement pow(unsigned e) const;

    WeylElement operator-() const { return WeylElement(-f_); }
    friend WeylElement operator+(const WeylElement& a, const WeylElement& b) { return WeylElement(a.f_ + b.f_); }
    friend WeylElement operator-(const WeylElement& a, const WeylElement& b) { return WeylElement(a.f_ - b.f_); }
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator*(const Integer& c, const WeylElement& a) { return WeylElement(a.f_ * c); }
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.f_ == b.f_; }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const WeylElement& u) { return os << u.to_string(); }

    std::string to_string() const { return f_.to_string(); }

private:
    Poly f_;
};

WeylElement weyl_mul(const WeylElement& u, const WeylElement& v);
WeylElement weyl_commutator(const WeylElement& u, const WeylElement& v);

/// x^a y^b in F_p[x^{+-1}, y] -> x^{pa} d^{pb}.
WeylElement frobenius_weyl(int a, int b, std::uint32_t p);

/// prod_{i=0}^{n-1} (x d - i h).
WeylElement falling_w(int n, std::uint32_t characteristic = 0);

/// Coefficients placed left of x^n: n -> g_n(w, h), with w = x d.
using WForm = std::map<int, Poly>;

const std::vector<std::string>& wform_variables();

/// x^a d^b = P_b(w - (a-b) h) x^{a-b}, P_b(w) = prod_{i<b}(w - i h).
WForm to_wform(const WeylElement& u);
WeylElement from_wform(const WForm& f, std::uint32_t characteristic = 0);
/// (g x^n)(k x^m) = g(w) k(w - n h) x^{n+m}.
WForm wform_mul(const WForm& u, const WForm& v);
WForm wform_reduce_mod(const WForm& f, std::uint32_t p);

/// Weyl identity and its mod-p form for x^p d^p.
VerificationReport weyl_frobenius_report(int p);
/// [x^{+-p}, g], [d^p, g], [prod(x d - i h), g] vanish mod p for g in {x, x^-1, d}.
VerificationReport weyl_centrality_report(int p);

} // namespace fcq::ore
