#include "fcq/ore/weyl.hpp"

#include "fcq/ore/centrality.hpp"

#include "fcq/exactalg/integer.hpp"
#include "fcq/report.hpp"

namespace fcq::ore {

namespace {

constexpr std::size_t kX = 0, kD = 1, kH = 2;

void require_normal(const Poly& f)
{
    for (const auto& [e, c] : f.terms())
        if (e[kD] < 0 || e[kH] < 0)
            throw AlgebraError("Weyl element: negative power of d or h");
}

} // namespace

const std::vector<std::string>& WeylElement::variables()
{
    static const std::vector<std::string> v{"x", "d", "h"};
    return v;
}

WeylElement::WeylElement(std::uint32_t characteristic) : f_(variables(), characteristic) {}

WeylElement::WeylElement(const Poly& normal_form) : f_(normal_form.with_vars(variables()))
{
    require_normal(f_);
}

WeylElement WeylElement::constant(const Integer& c, std::uint32_t characteristic)
{
    return WeylElement(Poly::constant(variables(), c, characteristic));
}

WeylElement WeylElement::monomial(int a, int b, const Integer& c, int h_power, std::uint32_t characteristic)
{
    return WeylElement(Poly::monomial(variables(), {a, b, h_power}, c, characteristic));
}

WeylElement WeylElement::pow(unsigned e) const
{
    WeylElement r = constant(1, characteristic());
    WeylElement base = *this;
    while (e) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

WeylElement operator*(const WeylElement& u, const WeylElement& v)
{
    if (u.characteristic() != v.characteristic())
        throw AlgebraError("weyl_mul: coefficient rings differ");
    Poly out(WeylElement::variables(), u.characteristic());
    // d^b x^c = sum_j C(b,j) (c)_j h^j x^{c-j} d^{b-j}
    std::map<std::pair<int, int>, Integer> leibniz;
    auto coef = [&](int b, int c, int j) -> const Integer& {
        const auto key = std::make_pair(b * 4096 + j, c);
        auto it = leibniz.find(key);
        if (it == leibniz.end())
            it = leibniz.emplace(key, binomial(b, j) * falling_factorial(c, j)).first;
        return it->second;
    };
    for (const auto& [eu, cu] : u.f_.terms())
        for (const auto& [ev, cv] : v.f_.terms()) {
            const int a = eu[kX], b = eu[kD], c = ev[kX], e = ev[kD];
            const int jmax = c >= 0 ? std::min(b, c) : b;
            const Integer base = cu * cv;
            for (int j = 0; j <= jmax; ++j) {
                const Integer& k = coef(b, c, j);
                if (k == 0)
                    continue;
                out.add_term({a + c - j, b - j + e, eu[kH] + ev[kH] + j}, base * k);
            }
        }
    return WeylElement(out);
}

WeylElement weyl_mul(const WeylElement& u, const WeylElement& v) { return u * v; }

WeylElement weyl_commutator(const WeylElement& u, const WeylElement& v) { return u * v - v * u; }

WeylElement frobenius_weyl(int a, int b, std::uint32_t p)
{
    require_odd_prime(p, "frobenius_weyl");
    if (b < 0)
        throw AlgebraError("frobenius_weyl: negative power of y");
    return WeylElement::monomial(static_cast<int>(p) * a, static_cast<int>(p) * b, 1, 0, p);
}

WeylElement falling_w(int n, std::uint32_t characteristic)
{
    WeylElement r = WeylElement::constant(1, characteristic);
    const WeylElement w = WeylElement::w(characteristic), h = WeylElement::hbar(characteristic);
    for (int i = 0; i < n; ++i)
        r = r * (w - Integer(i) * h);
    return r;
}

const std::vector<std::string>& wform_variables()
{
    static const std::vector<std::string> v{"w", "h"};
    return v;
}

WForm to_wform(const WeylElement& u)
{
    const auto& vars = wform_variables();
    const std::uint32_t ch = u.characteristic();
    const Poly w = Poly::variable(vars, "w", ch), h = Poly::variable(vars, "h", ch);
    WForm out;
    for (const auto& [e, c] : u.poly().terms()) {
        const int a = e[kX], b = e[kD], n = a - b;
        // P_b(w - n h)
        Poly g = Poly::monomial(vars, {0, e[kH]}, c, ch);
        for (int i = 0; i < b; ++i)
            g *= w - Integer(n + i) * h;
        auto [it, ins] = out.try_emplace(n, vars, ch);
        it->second += g;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

WeylElement from_wform(const WForm& f, std::uint32_t characteristic)
{
    WeylElement out(characteristic);
    std::map<int, WeylElement> wpow;
    const WeylElement w = WeylElement::w(characteristic);
    auto power = [&](int k) -> const WeylElement& {
        auto it = wpow.find(k);
        if (it == wpow.end())
            it = wpow.emplace(k, w.pow(static_cast<unsigned>(k))).first;
        return it->second;
    };
    for (const auto& [n, g] : f) {
        WeylElement left(characteristic);
        for (const auto& [e, c] : g.terms()) {
            if (e[0] < 0 || e[1] < 0)
                throw AlgebraError("from_wform: negative power of w or h");
            left = left + WeylElement(Poly(power(e[0]).poly() * Poly::monomial(WeylElement::variables(), {0, 0, e[1]}, c, characteristic)));
        }
        out = out + left * WeylElement::x(n, characteristic);
    }
    return out;
}

WForm wform_mul(const WForm& u, const WForm& v)
{
    WForm out;
    for (const auto& [n, g] : u)
        for (const auto& [m, k] : v) {
            const auto& vars = k.vars();
            const Poly shifted =
                k.substitute(0, Poly::variable(vars, "w", k.characteristic()) - Integer(n) * Poly::variable(vars, "h", k.characteristic()));
            auto [it, ins] = out.try_emplace(n + m, vars, k.characteristic());
            it->second += g * shifted;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

WForm wform_reduce_mod(const WForm& f, std::uint32_t p)
{
    WForm out;
    for (const auto& [n, g] : f) {
        Poly r = g.reduce_mod(p);
        if (!r.is_zero())
            out.emplace(n, std::move(r));
    }
    return out;
}

VerificationReport weyl_frobenius_report(int p)
{
    require_odd_prime(p, "weyl_frobenius_report");
    const auto up = static_cast<std::uint32_t>(p);
    VerificationReport rep;
    rep.name = "weyl-frobenius p=" + std::to_string(p);
    const WeylElement lhs = WeylElement::x(p) * WeylElement::d(p);
    const WeylElement prod = falling_w(p);
    rep.add("x^p d^p = prod(x d - i h) over Z[h]", lhs == prod, "difference " + (lhs - prod).to_string());
    const WeylElement w = WeylElement::w();
    const WeylElement as = (w.pow(up) - WeylElement::hbar().pow(up - 1) * w).reduce_mod(up);
    rep.add("x^p d^p = (x d)^p - h^(p-1) x d mod p", lhs.reduce_mod(up) == as,
            "x^p d^p mod p = " + lhs.reduce_mod(up).to_string());
    rep.add("F(x) F(y) = x^p d^p", frobenius_weyl(1, 0, up) * frobenius_weyl(0, 1, up) == lhs.reduce_mod(up));
    rep.add("F(x), F(y) commute", weyl_commutator(frobenius_weyl(1, 0, up), frobenius_weyl(0, 1, up)).is_zero());
    return rep;
}

VerificationReport weyl_centrality_report(int p)
{
    require_odd_prime(p, "weyl_centrality_report");
    const auto up = static_cast<std::uint32_t>(p);
    VerificationReport rep;
    rep.name = "weyl-centrality p=" + std::to_string(p);
    const Named<WeylElement> images{
        {"x^" + std::to_string(p), WeylElement::x(p)},
        {"x^-" + std::to_string(p), WeylElement::x(-p)},
        {"d^" + std::to_string(p), WeylElement::d(p)},
        {"prod(x d - i h)", falling_w(p)}};
    const Named<WeylElement> gens{
        {"x", WeylElement::x(1)}, {"x^-1", WeylElement::x(-1)}, {"d", WeylElement::d(1)}};
    rep.checks = centrality_report(images, gens, weyl_commutator,
                                   [up](const WeylElement& c) { return c.reduce_mod(up); }, "mod p")
                     .checks;
    return rep;
}

} // namespace fcq::ore
