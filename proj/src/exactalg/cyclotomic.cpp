#include "fcq/exactalg/cyclotomic.hpp"

namespace fcq {

Poly cyclotomic(int n, const std::string& var)
{
    if (n < 1)
        throw AlgebraError("cyclotomic: n must be positive");
    const std::vector<std::string> vars{var};
    // Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d
    Poly num = Poly::monomial(vars, {n}, 1) - Poly::constant(vars, 1);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        auto [q, r] = divrem_monic(num, cyclotomic(d, var), var);
        if (!r.is_zero())
            throw AlgebraError("cyclotomic: inexact division (internal error)");
        num = std::move(q);
    }
    return num;
}

std::pair<Poly, Poly> divrem_monic(const Poly& a, const Poly& monic, const std::string& var)
{
    Poly mm = monic.with_vars(a.vars());
    if (mm.characteristic() != a.characteristic()) {
        if (a.characteristic() == 0)
            throw AlgebraError("divrem: coefficient rings differ");
        mm = mm.lift().reduce_mod(a.characteristic());
    }
    const int v = a.var_index(var);
    if (v < 0)
        throw AlgebraError("divrem: unknown variable '" + var + "'");
    const int dm = mm.degree(v);
    const Poly lead = mm.coefficient_of(v, dm);
    if (!(lead.is_constant() && lead.constant_term() == 1))
        throw AlgebraError("divrem: divisor is not monic in " + var);
    if (a.min_degree(v) < 0)
        throw AlgebraError("divrem: negative exponent in dividend");
    Poly rem = a;
    Poly quo(a.vars(), a.characteristic());
    while (!rem.is_zero() && rem.degree(v) >= dm) {
        const int dr = rem.degree(v);
        Poly lc = rem.coefficient_of(v, dr);
        Poly::Exponent shift(a.vars().size(), 0);
        shift[static_cast<std::size_t>(v)] = dr - dm;
        Poly t = lc * Poly::monomial(a.vars(), shift, 1, a.characteristic());
        quo += t;
        rem -= t * mm;
    }
    return {quo, rem};
}

namespace {

/// Folds exponents of var into [0, n) using var^n = 1.
Poly fold_exponents(const Poly& x, int v, int n)
{
    Poly r(x.vars(), x.characteristic());
    for (const auto& [e, c] : x.terms()) {
        Poly::Exponent k = e;
        k[static_cast<std::size_t>(v)] = static_cast<int>(mod_floor(k[static_cast<std::size_t>(v)], n));
        r.add_term(k, c);
    }
    return r;
}

} // namespace

Poly poly_reduce(const Poly& x, const Modulus& modulus)
{
    return std::visit(
        [&](const auto& m) -> Poly {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, ModPrime>) {
                require_odd_prime(m.p, "poly_reduce");
                return x.reduce_mod(m.p);
            } else {
                if (m.n < 1)
                    throw AlgebraError("poly_reduce: order must be positive");
                const int v = x.var_index(m.var);
                if (v < 0) {
                    if (x.is_constant())
                        return x;
                    throw AlgebraError("poly_reduce: variable mismatch ('" + m.var + "' not present)");
                }
                Poly folded = fold_exponents(x, v, m.n);
                if constexpr (std::is_same_v<M, ModPowerMinusOne>)
                    return folded;
                else
                    return divrem_monic(folded, cyclotomic(m.n, m.var), m.var).second;
            }
        },
        modulus);
}

CyclotomicRing::CyclotomicRing(int n, std::string var) : n_(n), var_(std::move(var)), phi_(cyclotomic(n, var_)) {}

VerificationReport falling_factorial_identity(int p)
{
    require_odd_prime(p, "falling_factorial_identity");
    const auto up = static_cast<std::uint32_t>(p);
    const std::vector<std::string> vars{"T", "h"};
    const Poly T = Poly::variable(vars, "T"), h = Poly::variable(vars, "h");

    Poly product = Poly::constant(vars, 1);
    for (int i = 0; i < p; ++i)
        product *= T - Integer(i) * h;
    const Poly target = T.pow(static_cast<unsigned>(p)) - h.pow(static_cast<unsigned>(p - 1)) * T;

    VerificationReport rep;
    rep.name = "falling-factorial p=" + std::to_string(p);
    const Poly reduced = product.reduce_mod(up);
    rep.add("prod(T - i*h) == T^p - h^(p-1)*T mod p", reduced == target.reduce_mod(up),
            "product = " + reduced.to_string());
    const Poly at_h0 = reduced.substitute(1, Poly::constant(vars, 0, up));
    rep.add("h = 0 specialization is T^p", at_h0 == T.pow(static_cast<unsigned>(p)).reduce_mod(up),
            "got " + at_h0.to_string());
    // Over Z the identity fails; its defect must be divisible by p.
    const Poly defect = product - target;
    bool divisible = true;
    for (const auto& [e, c] : defect.terms())
        divisible = divisible && mod_floor(c, up) == 0;
    rep.add("integral defect divisible by p", divisible, "defect = " + defect.to_string());
    return rep;
}

} // namespace fcq
