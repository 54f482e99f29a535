#pragma once

#include "fcq/exactalg/poly.hpp"
#include "fcq/report.hpp"

#include <cstdint>
#include <ostream>

namespace fcq::ore {

/// sum c_{a,b}(q) x^a y^b in Z[q^{+-1}]<x^{+-1}, y^{+-1}>/(y x = q x y), stored
/// as a Laurent polynomial in (q, x, y).
class QTorusElement {
public:
    static const std::vector<std::string>& variables();

    QTorusElement();
    explicit QTorusElement(const Poly& normal_form);

    static QTorusElement constant(const Integer& c);
    static QTorusElement monomial(int a, int b, const Integer& c = 1, int q_power = 0);
    static QTorusElement x(int a = 1) { return monomial(a, 0); }
    static QTorusElement y(int b = 1) { return monomial(0, b); }
    static QTorusElement q(int k = 1) { return monomial(0, 0, 1, k); }
    /// g(y, q) placed left of x^m; g is a Laurent polynomial in (q, y).
    static QTorusElement left(const Poly& g, int m);

    const Poly& poly() const { return f_; }
    bool is_zero() const { return f_.is_zero(); }

    /// Coefficients reduced modulo Phi_n(q).
    QTorusElement reduce_cyclotomic(int n) const;
    QTorusElement pow(unsigned e) const;

    QTorusElement operator-() const { return QTorusElement(-f_); }
    friend QTorusElement operator+(const QTorusElement& a, const QTorusElement& b) { return QTorusElement(a.f_ + b.f_); }
    friend QTorusElement operator-(const QTorusElement& a, const QTorusElement& b) { return QTorusElement(a.f_ - b.f_); }
    friend QTorusElement operator*(const QTorusElement& a, const QTorusElement& b);
    friend bool operator==(const QTorusElement& a, const QTorusElement& b) { return a.f_ == b.f_; }
    friend bool operator!=(const QTorusElement& a, const QTorusElement& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const QTorusElement& u) { return os << u.to_string(); }

    std::string to_string() const { return f_.to_string(); }

private:
    Poly f_;
};

QTorusElement qtorus_mul(const QTorusElement& u, const QTorusElement& v);
QTorusElement qtorus_commutator(const QTorusElement& u, const QTorusElement& v);

/// Laurent ring Z[q^{+-1}, y^{+-1}] of left coefficients.
const std::vector<std::string>& k_coefficient_variables();

/// prod_{i=0}^{k-1} (1 - y^r q^{-i}) in Z[q^{+-1}, y^{+-1}].
Poly k_factor(int r, int k);

/// f_m = prod_{i=0}^{mr-1}(1 - y^r q^{-i}) x^m for m >= 1, x^m otherwise.
QTorusElement k_basis(int r, int m);

/// Images of the K-theoretic generators x^{-1}, y, f_1 at a root of unity of
/// order n.
struct KCentralImages {
    QTorusElement x_inverse; // x^{-n}
    QTorusElement y;         // y^n
    QTorusElement f1;        // prod_{i=0}^{nr-1}(1 - y^r q^{-i}) x^n
};

KCentralImages k_central_map(int r, int n);

/// f_n f_m = f_{n+m} for -bound <= n, m <= bound.
VerificationReport ktheory_product_report(int r, int bound = 3);
/// Centrality of the k_central_map images modulo Phi_n and the cyclotomic identity.
VerificationReport root_of_unity_report(int r, int n);

/// psi^n on Laurent polynomials: y^k -> y^{nk}.
Poly adams(const Poly& f, int n, const std::string& var = "y");
/// Homomorphism on seeded random products, psi^1 = id, psi^n psi^m = psi^{nm}.
VerificationReport adams_report(std::uint64_t seed = 1, int max_index = 4);

} // namespace fcq::ore
