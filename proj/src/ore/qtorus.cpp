#include "fcq/ore/qtorus.hpp"

#include "fcq/exactalg/cyclotomic.hpp"
#include "fcq/ore/centrality.hpp"
#include "fcq/rng.hpp"

namespace fcq::ore {

namespace {

constexpr std::size_t kQ = 0, kX = 1, kY = 2;

} // namespace

const std::vector<std::string>& QTorusElement::variables()
{
    static const std::vector<std::string> v{"q", "x", "y"};
    return v;
}

QTorusElement::QTorusElement() : f_(variables()) {}

QTorusElement::QTorusElement(const Poly& normal_form) : f_(normal_form.with_vars(variables()))
{
    if (f_.characteristic() != 0)
        throw AlgebraError("quantum torus coefficients are integral");
}

QTorusElement QTorusElement::constant(const Integer& c) { return QTorusElement(Poly::constant(variables(), c)); }

QTorusElement QTorusElement::monomial(int a, int b, const Integer& c, int q_power)
{
    return QTorusElement(Poly::monomial(variables(), {q_power, a, b}, c));
}

QTorusElement QTorusElement::left(const Poly& g, int m)
{
    return QTorusElement(g.with_vars(variables())) * x(m);
}

QTorusElement QTorusElement::reduce_cyclotomic(int n) const
{
    return QTorusElement(poly_reduce(f_, ModCyclotomic{n, "q"}));
}

QTorusElement QTorusElement::pow(unsigned e) const
{
    QTorusElement r = constant(1);
    for (unsigned i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

QTorusElement operator*(const QTorusElement& u, const QTorusElement& v)
{
    // (x^a y^b)(x^c y^d) = q^{bc} x^{a+c} y^{b+d}
    Poly out(QTorusElement::variables());
    for (const auto& [eu, cu] : u.f_.terms())
        for (const auto& [ev, cv] : v.f_.terms())
            out.add_term({eu[kQ] + ev[kQ] + eu[kY] * ev[kX], eu[kX] + ev[kX], eu[kY] + ev[kY]}, cu * cv);
    return QTorusElement(out);
}

QTorusElement qtorus_mul(const QTorusElement& u, const QTorusElement& v) { return u * v; }

QTorusElement qtorus_commutator(const QTorusElement& u, const QTorusElement& v) { return u * v - v * u; }

const std::vector<std::string>& k_coefficient_variables()
{
    static const std::vector<std::string> v{"q", "y"};
    return v;
}

Poly k_factor(int r, int k)
{
    const auto& vars = k_coefficient_variables();
    Poly f = Poly::constant(vars, 1);
    for (int i = 0; i < k; ++i)
        f *= Poly::constant(vars, 1) - Poly::monomial(vars, {-i, r}, 1);
    return f;
}

QTorusElement k_basis(int r, int m)
{
    if (r < 0)
        throw AlgebraError("k_basis: r must be nonnegative");
    return m >= 1 ? QTorusElement::left(k_factor(r, m * r), m) : QTorusElement::x(m);
}

KCentralImages k_central_map(int r, int n)
{
    if (n < 1)
        throw AlgebraError("k_central_map: order must be positive");
    if (r < 0)
        throw AlgebraError("k_central_map: r must be nonnegative");
    return {QTorusElement::x(-n), QTorusElement::y(n), QTorusElement::left(k_factor(r, n * r), n)};
}

VerificationReport ktheory_product_report(int r, int bound)
{
    VerificationReport rep;
    rep.name = "ktheory-product r=" + std::to_string(r);
    for (int n = -bound; n <= bound; ++n)
        for (int m = -bound; m <= bound; ++m) {
            const QTorusElement got = k_basis(r, n) * k_basis(r, m);
            const QTorusElement want = k_basis(r, n + m);
            rep.add("f(" + std::to_string(n) + ") f(" + std::to_string(m) + ") = f(" + std::to_string(n + m) + ")",
                    got == want, "f(" + std::to_string(n) + ") f(" + std::to_string(m) + ") = " + got.to_string() +
                                     ", f(" + std::to_string(n + m) + ") = " + want.to_string());
        }
    return rep;
}

VerificationReport root_of_unity_report(int r, int n)
{
    VerificationReport rep;
    rep.name = "root-of-unity r=" + std::to_string(r) + " n=" + std::to_string(n);
    const auto img = k_central_map(r, n);
    const Named<QTorusElement> images{
        {"x^-" + std::to_string(n), img.x_inverse}, {"y^" + std::to_string(n), img.y}, {"F(f_1)", img.f1}};
    const Named<QTorusElement> gens{
        {"x^-1", QTorusElement::x(-1)}, {"f_1", k_basis(r, 1)}, {"y", QTorusElement::y(1)}, {"q", QTorusElement::q(1)}};
    rep.checks = centrality_report(images, gens, qtorus_commutator,
                                   [n](const QTorusElement& c) { return c.reduce_cyclotomic(n); },
                                   "mod Phi_" + std::to_string(n))
                     .checks;
    const auto& vars = k_coefficient_variables();
    const Poly lhs = (Poly::constant(vars, 1) - Poly::monomial(vars, {0, n * r}, 1)).pow(static_cast<unsigned>(r));
    const Poly diff = poly_reduce(lhs - k_factor(r, n * r), ModCyclotomic{n, "q"});
    rep.add("(1 - y^{nr})^r = prod_{i<nr}(1 - y^r q^-i) mod Phi_" + std::to_string(n), diff.is_zero(),
            "difference " + diff.to_string());
    return rep;
}

Poly adams(const Poly& f, int n, const std::string& var)
{
    if (n < 1)
        throw AlgebraError("adams: n must be positive");
    const int v = f.var_index(var);
    if (v < 0)
        return f;
    return f.dilate(v, n);
}

VerificationReport adams_report(std::uint64_t seed, int max_index)
{
    VerificationReport rep;
    rep.name = "adams";
    const std::vector<std::string> vars{"y"};
    SeededRng rng(seed);
    auto random_laurent = [&] {
        Poly f(vars);
        for (int t = 0; t < 4; ++t)
            f.add_term({static_cast<int>(rng.uniform(-3, 3))}, Integer(rng.uniform(-5, 5)));
        return f;
    };
    std::vector<Poly> samples;
    for (int i = 0; i < 8; ++i)
        samples.push_back(random_laurent());
    samples.push_back(Poly::monomial(vars, {1}, 1) + Poly::monomial(vars, {-1}, 1));

    std::string bad;
    for (int n = 1; n <= max_index && bad.empty(); ++n)
        for (std::size_t i = 0; i + 1 < samples.size() && bad.empty(); ++i) {
            const Poly& f = samples[i];
            const Poly& g = samples[i + 1];
            if (adams(f * g, n) != adams(f, n) * adams(g, n) || adams(f + g, n) != adams(f, n) + adams(g, n))
                bad = "n=" + std::to_string(n) + " on " + f.to_string() + " and " + g.to_string();
        }
    rep.add("psi^n is a ring homomorphism", bad.empty(), bad);

    bad.clear();
    for (const auto& f : samples)
        if (adams(f, 1) != f && bad.empty())
            bad = f.to_string();
    rep.add("psi^1 = id", bad.empty(), bad);

    bad.clear();
    for (int n = 1; n <= max_index && bad.empty(); ++n)
        for (int m = 1; m <= max_index && bad.empty(); ++m)
            for (const auto& f : samples)
                if (adams(adams(f, m), n) != adams(f, n * m)) {
                    bad = "n=" + std::to_string(n) + ", m=" + std::to_string(m) + " on " + f.to_string();
                    break;
                }
    rep.add("psi^n psi^m = psi^{nm}", bad.empty(), bad);

    const Poly example = adams(samples.back(), 2);
    rep.add("psi^2(y + y^-1) = y^2 + y^-2", example == Poly::monomial(vars, {2}, 1) + Poly::monomial(vars, {-2}, 1),
            example.to_string());
    return rep;
}

} // namespace fcq::ore
