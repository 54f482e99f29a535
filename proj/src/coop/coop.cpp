#include "fcq/coop/coop.hpp"

#include "fcq/exactalg/integer.hpp"
#include "fcq/exactalg/linalg.hpp"
#include "fcq/exactalg/zp.hpp"

#include <algorithm>

namespace fcq::coop {

namespace {

const std::string kA = "a";
const std::string kH = "h";

/// Ring map sending variable i of f to images[i], all images in one ring.
Poly evaluate(const Poly& f, const std::vector<Poly>& images, const Poly& zero)
{
    std::vector<std::map<int, Poly>> powers(images.size());
    auto power = [&](std::size_t i, int e) -> const Poly& {
        auto it = powers[i].find(e);
        if (it == powers[i].end())
            it = powers[i].emplace(e, images[i].pow(static_cast<unsigned>(e))).first;
        return it->second;
    };
    Poly out = zero;
    for (const auto& [e, c] : f.terms()) {
        Poly t = zero + Poly::constant(zero.vars(), c, zero.characteristic());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0)
                throw AlgebraError("negative exponent in a polynomial cohomology class");
            if (e[i] > 0)
                t = t * power(i, e[i]);
        }
        out += t;
    }
    return out;
}

} // namespace

CohomRing::CohomRing(std::uint32_t p, std::vector<std::string> generators, std::vector<int> degrees,
                     std::map<std::string, Poly> bockstein)
    : p_(p), gens_(std::move(generators)), degrees_(std::move(degrees)), beta_(std::move(bockstein))
{
    require_odd_prime(p_, "CohomRing");
    if (degrees_.empty())
        degrees_.assign(gens_.size(), 2);
    if (degrees_.size() != gens_.size())
        throw AlgebraError("CohomRing: one degree per generator");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i] == kA || gens_[i] == kH)
            throw AlgebraError("CohomRing: generator names 'a' and 'h' are reserved");
        if (degrees_[i] <= 0 || degrees_[i] % 2 != 0)
            throw AlgebraError("CohomRing: generator '" + gens_[i] + "' must have positive even degree");
    }
    for (auto& [g, b] : beta_) {
        const auto it = std::find(gens_.begin(), gens_.end(), g);
        if (it == gens_.end())
            throw AlgebraError("CohomRing: Bockstein of unknown generator '" + g + "'");
        b = element(b);
        const int want = degrees_[static_cast<std::size_t>(it - gens_.begin())] + 1;
        for (const auto& [e, c] : b.terms())
            if (degree(e) != want)
                throw AlgebraError("CohomRing: Bockstein of '" + g + "' must have degree " + std::to_string(want));
    }
    image_vars_ = gens_;
    image_vars_.push_back(kA);
    image_vars_.push_back(kH);
}

Poly CohomRing::bockstein(const std::string& gen) const
{
    const auto it = beta_.find(gen);
    return it == beta_.end() ? zero() : it->second;
}

Poly CohomRing::element(const Poly& f) const
{
    const Poly g = f.characteristic() == p_ ? f : f.reduce_mod(p_);
    return g.with_vars(gens_);
}

int CohomRing::degree(const Poly::Exponent& e) const
{
    int d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        d += e[i] * degrees_[i];
    return d;
}

bool CohomRing::is_homogeneous(const Poly& f) const
{
    const Poly g = element(f);
    if (g.is_zero())
        return true;
    const int d = degree(g.terms().begin()->first);
    return std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& t) { return degree(t.first) == d; });
}

int CohomRing::degree(const Poly& f) const
{
    const Poly g = element(f);
    if (!is_homogeneous(g))
        throw AlgebraError("element is not homogeneous");
    return g.is_zero() ? 0 : degree(g.terms().begin()->first);
}

int CohomRing::image_degree(const Poly::Exponent& e) const
{
    return degree(e) + e[gens_.size()] + 2 * e[gens_.size() + 1];
}

Poly kill_a_squared(const Poly& x)
{
    const int ia = x.var_index(kA);
    if (ia < 0)
        return x;
    Poly out(x.vars(), x.characteristic());
    for (const auto& [e, c] : x.terms())
        if (e[static_cast<std::size_t>(ia)] < 2)
            out.add_term(e, c);
    return out;
}

Poly st_in(const CohomRing& R, const Poly& f)
{
    const std::uint32_t p = R.p();
    const auto& vars = R.image_vars();
    const Poly zero(vars, p);
    const Poly a = Poly::variable(vars, kA, p), h = Poly::variable(vars, kH, p);
    std::vector<Poly> images;
    for (std::size_t i = 0; i < R.generators().size(); ++i) {
        const auto& g = R.generators()[i];
        if (R.degrees()[i] != 2)
            throw AlgebraError("st_in: only degree-2 generators are supported ('" + g + "' has degree " +
                               std::to_string(R.degrees()[i]) + ")");
        const Poly x = Poly::variable(vars, g, p);
        const Poly beta = R.bockstein(g).with_vars(vars);
        images.push_back(x.pow(p) - h.pow(p - 1) * x + a * h.pow(p - 2) * beta);
    }
    return kill_a_squared(evaluate(R.element(f), images, zero));
}

Poly as_hbar(const Poly& f, std::uint32_t p, const std::string& hbar)
{
    require_odd_prime(p, "as_hbar");
    if (f.var_index(hbar) >= 0)
        throw AlgebraError("as_hbar: input already uses the variable '" + hbar + "'");
    auto vars = f.vars();
    vars.push_back(hbar);
    const Poly zero(vars, p);
    const Poly h = Poly::variable(vars, hbar, p);
    std::vector<Poly> images;
    for (const auto& v : f.vars()) {
        const Poly x = Poly::variable(vars, v, p);
        images.push_back(x.pow(p) - h.pow(p - 1) * x);
    }
    const Poly g = f.characteristic() == p ? f : f.reduce_mod(p);
    return evaluate(g, images, zero);
}

Poly steenrod_P(const CohomRing& R, int s, const Poly& f)
{
    if (s < 0)
        throw AlgebraError("steenrod_P: s must be nonnegative");
    const Poly g = R.element(f);
    const int n = R.degree(g);
    if (n % 2 != 0)
        throw AlgebraError("steenrod_P: odd degree");
    const int k = n / 2;
    if (2 * s > n || g.is_zero())
        return R.zero();
    const std::uint32_t p = R.p();
    const long q = (static_cast<long>(p) - 1) / 2;

    // (-1)^{q n(n-1)/2} (q!)^{-n}
    const long qf = mod_floor(factorial(q), p).get_si();
    long c = pow_mod(inverse_mod(qf, p), n, p);
    if ((q * n * (n - 1) / 2) % 2 != 0)
        c = static_cast<long>(p) - c;
    if (s % 2 != 0)
        c = (static_cast<long>(p) - c) % static_cast<long>(p);

    const Poly St = st_in(R, g);
    const int ia = static_cast<int>(R.generators().size());
    const Poly no_a = St.coefficient_of(ia, 0);
    const Poly coeff = no_a.coefficient_of(ia + 1, static_cast<int>(p - 1) * (k - s));
    return R.element(coeff * Integer(c));
}

VerificationReport hbar_multiple_vanishing(int p)
{
    require_odd_prime(p, "hbar_multiple_vanishing");
    VerificationReport rep;
    rep.name = "as-vanishing p=" + std::to_string(p);
    const auto up = static_cast<std::uint32_t>(p);
    const CohomRing R(up, {"b"});
    const Poly St = st_in(R, R.gen("b"));
    const auto& vars = R.image_vars();
    const Poly h = Poly::variable(vars, kH, up);
    for (int t = 0; t < p; ++t) {
        const Poly v = St.substitute(0, h * Integer(t));
        rep.add("St_in(b) at b = " + std::to_string(t) + "h vanishes", v.is_zero(), v.to_string());
    }

    // sum_i c_i b^i h^{p-i}, c_p = 1, vanishing at b = t h for all t
    with_prime(p, [&]<int P>() {
        using F = Zp<P>;
        Matrix<F> M(P, P);
        Vector<F> rhs(P);
        for (int t = 0; t < P; ++t) {
            F pw(1);
            for (int i = 0; i < P; ++i) {
                M(t, i) = pw;
                pw *= F(t);
            }
            rhs(t) = -pw;
        }
        const Eigen::Index rk = rank<F>(M);
        const auto sol = solve<F>(M, rhs);
        rep.add("uniqueness system has full rank", rk == P, "rank " + std::to_string(rk));
        bool matches = sol.has_value();
        std::string got;
        if (sol)
            for (int i = 0; i < P; ++i) {
                const F want = i == 1 ? F(-1) : F(0);
                matches = matches && (*sol)(i) == want;
                got += (i ? "," : "") + std::to_string((*sol)(i).centered());
            }
        rep.add("unique solution is b^p - h^{p-1} b", matches, "coefficients of b^i h^{p-i}: " + got);
    });
    return rep;
}

VerificationReport steenrod_operations_report(int p, int max_degree)
{
    require_odd_prime(p, "steenrod_operations_report");
    VerificationReport rep;
    rep.name = "steenrod-operations p=" + std::to_string(p);
    const auto up = static_cast<std::uint32_t>(p);
    const CohomRing R(up, {"b"});
    const Poly b = R.gen("b");
    rep.add("P^0(b) = b", steenrod_P(R, 0, b) == b, steenrod_P(R, 0, b).to_string());
    rep.add("P^1(b) = b^p", steenrod_P(R, 1, b) == b.pow(up), steenrod_P(R, 1, b).to_string());

    const int kmax = max_degree / 2;
    std::string bad;
    for (int k = 0; k <= kmax && bad.empty(); ++k)
        for (int s = 0; s <= k + 1 && bad.empty(); ++s) {
            const Poly got = steenrod_P(R, s, b.pow(static_cast<unsigned>(k)));
            const Poly want =
                s > k ? R.zero() : b.pow(static_cast<unsigned>(k + s * (p - 1))) * binomial(k, s);
            if (got != want)
                bad = "P^" + std::to_string(s) + "(b^" + std::to_string(k) + ") = " + got.to_string();
        }
    rep.add("P^s(b^k) = C(k,s) b^{k+s(p-1)}", bad.empty(), bad);

    // Cartan on pairs of homogeneous elements c b^i, c' b^j
    bad.clear();
    for (int i = 0; i <= kmax && bad.empty(); ++i)
        for (int j = 0; i + j <= kmax && bad.empty(); ++j) {
            const Poly f = b.pow(static_cast<unsigned>(i)) * Integer(1 + i % (p - 1));
            const Poly g = b.pow(static_cast<unsigned>(j)) * Integer(1 + (2 * j) % (p - 1));
            for (int s = 0; s <= i + j && bad.empty(); ++s) {
                Poly rhs = R.zero();
                for (int u = 0; u <= s; ++u)
                    rhs += steenrod_P(R, u, f) * steenrod_P(R, s - u, g);
                if (steenrod_P(R, s, f * g) != rhs)
                    bad = "s=" + std::to_string(s) + " on b^" + std::to_string(i) + " * b^" + std::to_string(j);
            }
        }
    rep.add("Cartan formula up to degree " + std::to_string(max_degree), bad.empty(), bad);

    bad.clear();
    for (int k = 1; k <= kmax && bad.empty(); ++k) {
        const Poly f = b.pow(static_cast<unsigned>(k));
        if (!steenrod_P(R, k + 1, f).is_zero())
            bad = "P^" + std::to_string(k + 1) + "(b^" + std::to_string(k) + ") != 0";
        else if (steenrod_P(R, k, f) != f.pow(up))
            bad = "P^" + std::to_string(k) + "(b^" + std::to_string(k) + ") != b^" + std::to_string(k * p);
    }
    rep.add("unstability", bad.empty(), bad);
    return rep;
}

} // namespace fcq::coop
