#include "fcq/ore/coulomb.hpp"

#include "fcq/exactalg/integer.hpp"
#include "fcq/ore/centrality.hpp"
#include "fcq/rng.hpp"

namespace fcq::ore {

namespace {

Poly wvar(std::uint32_t ch) { return Poly::variable(wform_variables(), "w", ch); }
Poly hvar(std::uint32_t ch) { return Poly::variable(wform_variables(), "h", ch); }
Poly wone(std::uint32_t ch) { return Poly::constant(wform_variables(), 1, ch); }

const std::vector<std::string>& classical_vars()
{
    static const std::vector<std::string> v{"w"};
    return v;
}

std::string term_string(const Poly& g, const std::string& basis, bool first)
{
    std::string c = g.to_string();
    std::string sep = first ? "" : " + ";
    if (g.size() == 1 && c[0] == '-') {
        sep = first ? "-" : " - ";
        c = c.substr(1);
    }
    if (c == "1")
        return sep + basis;
    if (g.size() == 1)
        return sep + c + "*" + basis;
    return sep + "(" + c + ")*" + basis;
}

} // namespace

CoulombElement::CoulombElement(int r, std::uint32_t characteristic) : r_(r), char_(characteristic)
{
    if (r < 0)
        throw AlgebraError("Coulomb branch parameter r must be nonnegative");
    if (char_ != 0)
        require_odd_prime(char_, "CoulombElement");
}

CoulombElement CoulombElement::basis(int r, int n, std::uint32_t characteristic)
{
    CoulombElement e(r, characteristic);
    e.add(n, wone(characteristic));
    return e;
}

CoulombElement CoulombElement::scalar(int r, const Poly& g, std::uint32_t characteristic)
{
    CoulombElement e(r, characteristic);
    e.add(0, g);
    return e;
}

CoulombElement CoulombElement::w(int r, std::uint32_t characteristic) { return scalar(r, wvar(characteristic), characteristic); }

CoulombElement CoulombElement::hbar(int r, std::uint32_t characteristic)
{
    return scalar(r, hvar(characteristic), characteristic);
}

Poly CoulombElement::coefficient(int n) const
{
    const auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Poly(wform_variables(), char_) : it->second;
}

void CoulombElement::add(int n, const Poly& g)
{
    Poly c = g.with_vars(wform_variables());
    if (c.characteristic() != char_)
        c = char_ == 0 ? c.lift() : c.reduce_mod(char_);
    auto [it, ins] = coeffs_.try_emplace(n, wform_variables(), char_);
    it->second += c;
    if (it->second.is_zero())
        coeffs_.erase(it);
}

CoulombElement CoulombElement::reduce_mod(std::uint32_t p) const
{
    CoulombElement out(r_, p);
    for (const auto& [n, g] : coeffs_)
        out.add(n, g.reduce_mod(p));
    return out;
}

CoulombElement CoulombElement::lift() const
{
    CoulombElement out(r_, 0);
    for (const auto& [n, g] : coeffs_)
        out.add(n, g.lift());
    return out;
}

CoulombElement CoulombElement::at_hbar_zero() const
{
    CoulombElement out(r_, char_);
    for (const auto& [n, g] : coeffs_)
        out.add(n, g.substitute(1, Poly(wform_variables(), char_)));
    return out;
}

void CoulombElement::require_same(const CoulombElement& o) const
{
    if (r_ != o.r_ || char_ != o.char_)
        throw AlgebraError("Coulomb elements live in different algebras (r or characteristic differ)");
}

CoulombElement operator+(const CoulombElement& a, const CoulombElement& b)
{
    a.require_same(b);
    CoulombElement out = a;
    for (const auto& [n, g] : b.coeffs_)
        out.add(n, g);
    return out;
}

CoulombElement operator-(const CoulombElement& a, const CoulombElement& b)
{
    a.require_same(b);
    CoulombElement out = a;
    for (const auto& [n, g] : b.coeffs_)
        out.add(n, -g);
    return out;
}

CoulombElement operator*(const CoulombElement& a, const CoulombElement& b) { return coulomb_mul(a, b); }

bool operator==(const CoulombElement& a, const CoulombElement& b)
{
    return a.r_ == b.r_ && a.char_ == b.char_ && a.coeffs_ == b.coeffs_;
}

std::string CoulombElement::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        out += term_string(it->second, "e(" + std::to_string(it->first) + ")", out.empty());
    return out;
}

Poly coulomb_factor(int r, int n, std::uint32_t characteristic)
{
    Poly f = wone(characteristic);
    const Poly rw = wvar(characteristic) * Integer(r);
    for (int i = 1; i <= n * r; ++i)
        f *= rw - hvar(characteristic) * Integer(i);
    return f;
}

WeylElement to_weyl(const CoulombElement& u)
{
    WForm f;
    for (const auto& [n, g] : u.coefficients())
        f.emplace(n, g * coulomb_factor(u.r(), n, u.characteristic()));
    return from_wform(f, u.characteristic());
}

CoulombElement coulomb_from_wform(const WForm& f, int r, std::uint32_t characteristic)
{
    CoulombElement out(r, characteristic);
    for (const auto& [n, g0] : f) {
        const Poly g = characteristic == 0 ? g0 : g0.reduce_mod(characteristic);
        if (n <= 0 || r == 0) {
            out.add(n, g);
            continue;
        }
        const auto q = exact_quotient(g, coulomb_factor(r, n, characteristic));
        if (!q)
            throw AlgebraError("Coulomb basis re-expression failed at n = " + std::to_string(n) +
                               ": coefficient " + g.to_string() + " is not divisible by the basis factor");
        out.add(n, *q);
    }
    return out;
}

CoulombElement coulomb_mul(const CoulombElement& u, const CoulombElement& v)
{
    if (u.r() != v.r() || u.characteristic() != v.characteristic())
        throw AlgebraError("coulomb_mul: elements live in different algebras");
    const WeylElement prod = to_weyl(u.lift()) * to_weyl(v.lift());
    const CoulombElement integral = coulomb_from_wform(to_wform(prod), u.r(), 0);
    return u.characteristic() == 0 ? integral : integral.reduce_mod(u.characteristic());
}

CoulombElement coulomb_commutator(const CoulombElement& u, const CoulombElement& v)
{
    return coulomb_mul(u, v) - coulomb_mul(v, u);
}

Membership coulomb_membership(const WeylElement& u, int r)
{
    const std::uint32_t p = u.characteristic();
    if (p == 0)
        throw AlgebraError("coulomb_membership: expects a mod-p Weyl element");
    if (r % static_cast<int>(p) == 0 && r != 0)
        throw AlgebraError("coulomb_membership: the embedding is not faithful when p divides r");
    CoulombElement out(r, p);
    for (const auto& [n, g] : to_wform(u)) {
        if (n <= 0 || r == 0) {
            out.add(n, g);
            continue;
        }
        const auto q = exact_quotient(g, coulomb_factor(r, n, p));
        if (!q)
            return {std::nullopt, n};
        out.add(n, *q);
    }
    return {std::move(out), 0};
}

std::optional<CoulombGenerator> parse_coulomb_generator(const std::string& s)
{
    if (s == "x^-1" || s == "xinv" || s == "e(-1)")
        return CoulombGenerator::XInverse;
    if (s == "e1" || s == "e(1)")
        return CoulombGenerator::E1;
    if (s == "w")
        return CoulombGenerator::W;
    return std::nullopt;
}

std::string to_string(CoulombGenerator g)
{
    switch (g) {
    case CoulombGenerator::XInverse: return "x^-1";
    case CoulombGenerator::E1: return "e(1)";
    case CoulombGenerator::W: return "w";
    }
    return "?";
}

ClassicalElement::ClassicalElement(int r, std::uint32_t p) : r_(r), p_(p)
{
    require_odd_prime(p, "ClassicalElement");
    if (r < 0)
        throw AlgebraError("Coulomb branch parameter r must be nonnegative");
}

ClassicalElement ClassicalElement::generator(int r, std::uint32_t p, CoulombGenerator g)
{
    ClassicalElement c(r, p);
    switch (g) {
    case CoulombGenerator::XInverse: c.add(-1, Poly::constant(classical_vars(), 1, p)); break;
    case CoulombGenerator::E1: c.add(1, Poly::constant(classical_vars(), 1, p)); break;
    case CoulombGenerator::W: c.add(0, Poly::variable(classical_vars(), "w", p)); break;
    }
    return c;
}

ClassicalElement ClassicalElement::one(int r, std::uint32_t p)
{
    ClassicalElement c(r, p);
    c.add(0, Poly::constant(classical_vars(), 1, p));
    return c;
}

void ClassicalElement::add(int n, const Poly& c)
{
    Poly v = c.with_vars(classical_vars());
    if (v.characteristic() != p_)
        v = v.reduce_mod(p_);
    auto [it, ins] = coeffs_.try_emplace(n, classical_vars(), p_);
    it->second += v;
    if (it->second.is_zero())
        coeffs_.erase(it);
}

ClassicalElement ClassicalElement::pow(unsigned e) const
{
    ClassicalElement r = one(r_, p_);
    for (unsigned i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

ClassicalElement operator+(const ClassicalElement& a, const ClassicalElement& b)
{
    ClassicalElement out = a;
    for (const auto& [n, c] : b.coeffs_)
        out.add(n, c);
    return out;
}

ClassicalElement operator*(const ClassicalElement& a, const ClassicalElement& b)
{
    if (a.r_ != b.r_ || a.p_ != b.p_)
        throw AlgebraError("classical product: elements live in different algebras");
    ClassicalElement out(a.r_, a.p_);
    const Poly rw = Poly::variable(classical_vars(), "w", a.p_) * Integer(a.r_);
    for (const auto& [n, c] : a.coeffs_)
        for (const auto& [m, d] : b.coeffs_) {
            // ebar_n ebar_m: each cancelling pair e_1 e_{-1} gives (r w)^r
            const int pairs = (n > 0 && m < 0) || (n < 0 && m > 0) ? std::min(std::abs(n), std::abs(m)) : 0;
            out.add(n + m, c * d * rw.pow(static_cast<unsigned>(a.r_ * pairs)));
        }
    return out;
}

bool operator==(const ClassicalElement& a, const ClassicalElement& b)
{
    return a.r_ == b.r_ && a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
}

std::string ClassicalElement::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        out += term_string(it->second, "ebar(" + std::to_string(it->first) + ")", out.empty());
    return out;
}

namespace {

Poly frobenius_w(std::uint32_t p)
{
    Poly f = wone(p);
    for (std::uint32_t i = 0; i < p; ++i)
        f *= wvar(p) - hvar(p) * Integer(static_cast<long>(i));
    return f;
}

} // namespace

CoulombElement coulomb_frobenius(int r, std::uint32_t p, CoulombGenerator g)
{
    require_odd_prime(p, "coulomb_frobenius");
    const int ip = static_cast<int>(p);
    switch (g) {
    case CoulombGenerator::XInverse: return CoulombElement::basis(r, -ip, p);
    case CoulombGenerator::E1: return CoulombElement::basis(r, ip, p);
    case CoulombGenerator::W: return CoulombElement::scalar(r, frobenius_w(p), p);
    }
    throw AlgebraError("coulomb_frobenius: unknown generator");
}

CoulombElement frobenius_hbar(const ClassicalElement& c)
{
    const std::uint32_t p = c.p();
    const Poly Fw = frobenius_w(p);
    CoulombElement out(c.r(), p);
    for (const auto& [n, g] : c.coefficients())
        out.add(static_cast<int>(p) * n, g.with_vars(wform_variables()).substitute(0, Fw));
    return out;
}

ClassicalElement classical_reduction(const CoulombElement& u)
{
    if (u.characteristic() == 0)
        throw AlgebraError("classical_reduction: expects coefficients mod p");
    ClassicalElement out(u.r(), u.characteristic());
    const CoulombElement reduced = u.at_hbar_zero();
    for (const auto& [n, g] : reduced.coefficients())
        out.add(n, g.with_vars(classical_vars()));
    return out;
}

VerificationReport coulomb_product_report(int r, int max_index)
{
    VerificationReport rep;
    rep.name = "coulomb-product r=" + std::to_string(r);
    for (int n = 0; n <= max_index; ++n)
        for (int m = 0; m <= max_index; ++m) {
            const CoulombElement got = coulomb_mul(CoulombElement::basis(r, n), CoulombElement::basis(r, m));
            const CoulombElement want = CoulombElement::basis(r, n + m);
            rep.add("e(" + std::to_string(n) + ") e(" + std::to_string(m) + ") = e(" + std::to_string(n + m) + ")",
                    got == want, got.to_string());
        }
    return rep;
}

VerificationReport coulomb_frobenius_report(int r, int p)
{
    require_odd_prime(p, "coulomb_frobenius_report");
    const auto up = static_cast<std::uint32_t>(p);
    VerificationReport rep;
    rep.name = "coulomb-frobenius r=" + std::to_string(r) + " p=" + std::to_string(p);
    const auto Fx = coulomb_frobenius(r, up, CoulombGenerator::XInverse);
    const auto Fe = coulomb_frobenius(r, up, CoulombGenerator::E1);
    const auto Fw = coulomb_frobenius(r, up, CoulombGenerator::W);

    // F(e_1) F(e_{-1}) = F((r w)^r) = (r F(w))^r
    const CoulombElement lhs = coulomb_mul(Fe, Fx);
    CoulombElement rhs = CoulombElement::basis(r, 0, up);
    for (int i = 0; i < r; ++i)
        rhs = coulomb_mul(rhs, CoulombElement::scalar(r, Fw.coefficient(0) * Integer(r), up));
    rep.add("F(e_1) F(e_-1) = F((r w)^r)", lhs == rhs, "lhs " + lhs.to_string() + ", rhs " + rhs.to_string());

    const Named<CoulombElement> images{
        {"F(x^-1)", Fx}, {"F(e_1)", Fe}, {"F(w)", Fw}};
    const Named<CoulombElement> gens{
        {"x^-1", CoulombElement::basis(r, -1, up)},
        {"e_1", CoulombElement::basis(r, 1, up)},
        {"w", CoulombElement::w(r, up)},
        {"h", CoulombElement::hbar(r, up)}};
    for (auto& c : centrality_report(images, gens, coulomb_commutator, [](const CoulombElement& e) { return e; }, "mod p").checks)
        rep.checks.push_back(std::move(c));
    return rep;
}

VerificationReport coulomb_frobenius_structure_report(int r, int p, std::uint64_t seed)
{
    require_odd_prime(p, "coulomb_frobenius_structure_report");
    const auto up = static_cast<std::uint32_t>(p);
    VerificationReport rep;
    rep.name = "coulomb-frobenius-structure r=" + std::to_string(r) + " p=" + std::to_string(p);
    const auto one = ClassicalElement::one(r, up);
    rep.add("F(1) = 1", frobenius_hbar(one) == CoulombElement::basis(r, 0, up), frobenius_hbar(one).to_string());

    const std::vector<CoulombGenerator> gens{CoulombGenerator::XInverse, CoulombGenerator::E1, CoulombGenerator::W};
    std::vector<std::pair<std::string, ClassicalElement>> samples;
    for (auto g : gens)
        samples.push_back({to_string(g), ClassicalElement::generator(r, up, g)});
    for (auto g : gens)
        for (auto k : gens)
            samples.push_back({to_string(g) + "*" + to_string(k),
                               ClassicalElement::generator(r, up, g) * ClassicalElement::generator(r, up, k)});

    // products of generators map to products of images
    for (auto g : gens)
        for (auto k : gens) {
            const auto a = ClassicalElement::generator(r, up, g), b = ClassicalElement::generator(r, up, k);
            const CoulombElement lhs = frobenius_hbar(a * b);
            const CoulombElement rhs = coulomb_mul(frobenius_hbar(a), frobenius_hbar(b));
            rep.add("F(" + to_string(g) + " " + to_string(k) + ") = F(" + to_string(g) + ") F(" + to_string(k) + ")",
                    lhs == rhs, "lhs " + lhs.to_string() + ", rhs " + rhs.to_string());
        }

    // seeded sums of monomials
    SeededRng rng(seed);
    auto random_element = [&] {
        ClassicalElement c(r, up);
        for (int t = 0; t < 2; ++t) {
            Poly m = Poly::monomial({"w"}, {static_cast<int>(rng.uniform(0, 1))},
                                    Integer(static_cast<long>(rng.uniform(1, p - 1))), up);
            c.add(static_cast<int>(rng.uniform(-1, 1)), m);
        }
        return c;
    };
    for (int trial = 0; trial < 3; ++trial) {
        const auto a = random_element(), b = random_element();
        samples.push_back({"random " + std::to_string(trial), a});
        const CoulombElement lhs = frobenius_hbar(a * b);
        const CoulombElement rhs = coulomb_mul(frobenius_hbar(a), frobenius_hbar(b));
        rep.add("F multiplicative on (" + a.to_string() + ")(" + b.to_string() + ")", lhs == rhs,
                "lhs " + lhs.to_string() + ", rhs " + rhs.to_string());
    }

    for (const auto& [name, c] : samples) {
        const ClassicalElement got = classical_reduction(frobenius_hbar(c));
        const ClassicalElement want = c.pow(up);
        rep.add("F(" + name + ") mod h = p-th power", got == want, "got " + got.to_string() + ", want " + want.to_string());
    }
    return rep;
}

} // namespace fcq::ore
