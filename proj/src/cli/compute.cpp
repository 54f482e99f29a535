#include "fcq/cli/compute.hpp"

#include "fcq/cli/expr.hpp"
#include "fcq/coop/coop.hpp"

#include <algorithm>

namespace fcq::cli {

namespace {

using ore::CoulombElement;
using ore::QTorusElement;
using ore::WeylElement;

[[noreturn]] void unknown_identifier(const std::string& alg, const std::string& name)
{
    throw ParseError(alg + ": unknown identifier '" + name + "'");
}

[[noreturn]] void unknown_call(const std::string& alg, const std::string& name)
{
    throw ParseError(alg + ": unknown function '" + name + "'");
}

/// Inverse of c * m for a monomial m with unit coefficient c, as c^-1 m^-1.
std::optional<Poly> invert_monomial(const Poly& f)
{
    if (f.size() != 1)
        return std::nullopt;
    const auto& [e, c] = *f.terms().begin();
    Integer inv;
    if (f.characteristic() == 0) {
        if (c != 1 && c != -1)
            return std::nullopt;
        inv = c;
    } else {
        const Integer p(f.characteristic());
        if (mpz_invert(inv.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t()) == 0)
            return std::nullopt;
    }
    Poly::Exponent neg(e.size());
    std::transform(e.begin(), e.end(), neg.begin(), [](int k) { return -k; });
    return Poly::monomial(f.vars(), neg, inv, f.characteristic());
}

/// Shared folding of products and powers for an element type with operator*.
template <class T>
struct RingOps {
    T add(const T& a, const T& b) { return a + b; }
    T sub(const T& a, const T& b) { return a - b; }
    T neg(const T& a) { return a - a - a; } // not every element type has unary minus
    T mul(const T& a, const T& b) { return a * b; }
};

struct PolyBackend : RingOps<Poly> {
    std::vector<std::string> vars;
    std::uint32_t characteristic;

    Poly constant(const Integer& c) { return Poly::constant(vars, c, characteristic); }
    Poly identifier(const std::string& name) { return Poly::variable(vars, name, characteristic); }
    Poly call(const std::string& name, long) { unknown_call("poly", name); }
    Poly pow(const Poly& a, long e)
    {
        if (e >= 0)
            return a.pow(static_cast<unsigned>(e));
        const auto inv = invert_monomial(a);
        if (!inv)
            throw AlgebraError("poly: negative power of a non-unit");
        return inv->pow(static_cast<unsigned>(-e));
    }
};

struct WeylBackend : RingOps<WeylElement> {
    std::uint32_t characteristic;

    WeylElement constant(const Integer& c) { return WeylElement::constant(c, characteristic); }
    WeylElement identifier(const std::string& name)
    {
        if (name == "x")
            return WeylElement::x(1, characteristic);
        if (name == "d")
            return WeylElement::d(1, characteristic);
        if (name == "h" || name == "hbar")
            return WeylElement::hbar(characteristic);
        if (name == "w")
            return WeylElement::w(characteristic);
        unknown_identifier("weyl", name);
    }
    WeylElement call(const std::string& name, long) { unknown_call("weyl", name); }
    WeylElement pow(const WeylElement& a, long e)
    {
        if (e >= 0)
            return a.pow(static_cast<unsigned>(e));
        // only x-monomials are units
        const auto inv = invert_monomial(a.poly());
        if (!inv || inv->terms().begin()->first[1] != 0 || inv->terms().begin()->first[2] != 0)
            throw AlgebraError("weyl: negative power of a non-unit");
        return WeylElement(*inv).pow(static_cast<unsigned>(-e));
    }
};

struct QTorusBackend : RingOps<QTorusElement> {
    int r;

    QTorusElement constant(const Integer& c) { return QTorusElement::constant(c); }
    QTorusElement identifier(const std::string& name)
    {
        if (name == "x")
            return QTorusElement::x();
        if (name == "y")
            return QTorusElement::y();
        if (name == "q")
            return QTorusElement::q();
        unknown_identifier("qtorus", name);
    }
    QTorusElement call(const std::string& name, long m)
    {
        if (name != "f")
            unknown_call("qtorus", name);
        return ore::k_basis(r, static_cast<int>(m));
    }
    QTorusElement pow(const QTorusElement& a, long e)
    {
        if (e >= 0)
            return a.pow(static_cast<unsigned>(e));
        // (c q^k x^a y^b)^-1 = c^-1 q^{ab-k} x^-a y^-b
        const auto& f = a.poly();
        if (f.size() != 1)
            throw AlgebraError("qtorus: negative power of a non-unit");
        const auto& [ex, c] = *f.terms().begin();
        if (c != 1 && c != -1)
            throw AlgebraError("qtorus: negative power of a non-unit");
        const auto inv = QTorusElement::monomial(-ex[1], -ex[2], c, ex[1] * ex[2] - ex[0]);
        if (a * inv != QTorusElement::constant(1))
            throw AlgebraError("qtorus: inverse check failed");
        return inv.pow(static_cast<unsigned>(-e));
    }
};

struct CoulombBackend : RingOps<CoulombElement> {
    int r;
    std::uint32_t characteristic;

    CoulombElement constant(const Integer& c)
    {
        return CoulombElement::scalar(r, Poly::constant(ore::wform_variables(), c, characteristic), characteristic);
    }
    CoulombElement identifier(const std::string& name)
    {
        if (name == "w")
            return CoulombElement::w(r, characteristic);
        if (name == "h" || name == "hbar")
            return CoulombElement::hbar(r, characteristic);
        unknown_identifier("coulomb", name);
    }
    CoulombElement call(const std::string& name, long n)
    {
        if (name != "e")
            unknown_call("coulomb", name);
        return CoulombElement::basis(r, static_cast<int>(n), characteristic);
    }
    CoulombElement pow(const CoulombElement& a, long e)
    {
        if (e < 0)
            throw AlgebraError("coulomb: negative powers are not defined");
        CoulombElement out = constant(1);
        for (long i = 0; i < e; ++i)
            out = out * a;
        return out;
    }
};

std::uint32_t require_p(const ComputeConfig& c)
{
    if (!c.p)
        throw ParseError(c.alg + ": --p is required");
    return *c.p;
}

Json envelope(const ComputeConfig& c, const std::string& expression)
{
    Json j{{"schema", "fcq/1"}, {"command", "compute"}, {"alg", c.alg}, {"input", expression}};
    if (c.p)
        j["p"] = *c.p;
    if (c.r)
        j["r"] = *c.r;
    if (c.n)
        j["n"] = *c.n;
    return j;
}

ComputeResult poly_result(Json j, const Poly& f)
{
    j["result"] = {{"alg", "poly"}, {"coeff_ring", coeff_ring_json(f.characteristic(), {})}, {"poly", poly_to_json(f)}};
    return {f.to_string(), j};
}

ComputeResult compute_cohom(const ComputeConfig& c, const Expr& e, Json j)
{
    const std::uint32_t p = require_p(c);
    std::vector<std::string> gens;
    for (const auto& v : identifiers(e))
        if (v != "a" && v != "h")
            gens.push_back(v);
        else
            throw ParseError("cohom: '" + v + "' is reserved for the image ring");
    const coop::CohomRing R(p, gens);
    PolyBackend b{{}, R.vars(), p};
    const Poly f = evaluate(e, b);
    j["op"] = c.op;
    if (c.op == "element")
        return poly_result(j, f);
    if (c.op == "st")
        return poly_result(j, coop::st_in(R, f));
    if (c.op == "as")
        return poly_result(j, coop::as_hbar(f, p));
    if (c.op == "P") {
        j["s"] = c.s;
        return poly_result(j, coop::steenrod_P(R, c.s, f));
    }
    throw ParseError("cohom: unknown --op '" + c.op + "' (element, st, as, P)");
}

} // namespace

const std::vector<std::string>& compute_algebras()
{
    static const std::vector<std::string> algs{"weyl", "qtorus", "coulomb", "poly", "cohom"};
    return algs;
}

ComputeResult compute(const ComputeConfig& c, const std::string& expression)
{
    const auto e = parse_expression(expression);
    Json j = envelope(c, expression);
    const std::uint32_t characteristic = c.p.value_or(0);

    if (c.alg == "weyl") {
        WeylBackend b{{}, characteristic};
        const auto u = evaluate(*e, b);
        j["result"] = to_json(u);
        return {u.to_string(), j};
    }
    if (c.alg == "qtorus") {
        if (c.p)
            throw ParseError("qtorus: coefficients are Z[q, q^-1]; --p is not supported");
        QTorusBackend b{{}, c.r.value_or(1)};
        auto u = evaluate(*e, b);
        if (c.n)
            u = u.reduce_cyclotomic(*c.n);
        j["result"] = to_json(u);
        return {u.to_string(), j};
    }
    if (c.alg == "coulomb") {
        CoulombBackend b{{}, c.r.value_or(1), characteristic};
        const auto u = evaluate(*e, b);
        j["result"] = to_json(u);
        return {u.to_string(), j};
    }
    if (c.alg == "poly") {
        const auto names = identifiers(*e);
        PolyBackend b{{}, {names.begin(), names.end()}, characteristic};
        return poly_result(j, evaluate(*e, b));
    }
    if (c.alg == "cohom")
        return compute_cohom(c, *e, j);
    throw ParseError("unknown algebra '" + c.alg + "'");
}

} // namespace fcq::cli
