#include "fcq/exactalg/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace fcq {

namespace {

int sum_of(const Poly::Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

} // namespace

bool grlex_greater(const Poly::Exponent& a, const Poly::Exponent& b)
{
    const int da = sum_of(a), db = sum_of(b);
    if (da != db)
        return da > db;
    return a > b;
}

Poly::Poly(std::vector<std::string> vars, std::uint32_t characteristic)
    : vars_(std::move(vars)), char_(characteristic)
{
    if (char_ == 1 || (char_ != 0 && !is_prime(char_)))
        throw AlgebraError("polynomial characteristic must be 0 or a prime");
}

Poly Poly::constant(std::vector<std::string> vars, const Integer& c, std::uint32_t characteristic)
{
    Poly r(std::move(vars), characteristic);
    r.add_term(Exponent(r.vars_.size(), 0), c);
    return r;
}

Poly Poly::variable(std::vector<std::string> vars, const std::string& name, std::uint32_t characteristic)
{
    Poly r(std::move(vars), characteristic);
    const int i = r.var_index(name);
    if (i < 0)
        throw AlgebraError("unknown variable '" + name + "'");
    Exponent e(r.vars_.size(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    r.add_term(e, 1);
    return r;
}

Poly Poly::monomial(std::vector<std::string> vars, Exponent e, const Integer& c, std::uint32_t characteristic)
{
    Poly r(std::move(vars), characteristic);
    if (e.size() != r.vars_.size())
        throw AlgebraError("exponent length does not match variable count");
    r.add_term(e, c);
    return r;
}

bool Poly::is_constant() const
{
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Integer Poly::constant_term() const { return coeff(Exponent(vars_.size(), 0)); }

Integer Poly::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

int Poly::var_index(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

int Poly::degree(int var) const
{
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const int x = e[static_cast<std::size_t>(var)];
        if (first || x > d)
            d = x;
        first = false;
    }
    return d;
}

int Poly::min_degree(int var) const
{
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const int x = e[static_cast<std::size_t>(var)];
        if (first || x < d)
            d = x;
        first = false;
    }
    return d;
}

int Poly::total_degree() const
{
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const int x = sum_of(e);
        if (first || x > d)
            d = x;
        first = false;
    }
    return d;
}

Poly Poly::coefficient_of(int var, int e) const
{
    Poly r(vars_, char_);
    for (const auto& [exp, c] : terms_) {
        if (exp[static_cast<std::size_t>(var)] != e)
            continue;
        Exponent k = exp;
        k[static_cast<std::size_t>(var)] = 0;
        r.terms_.emplace(std::move(k), c);
    }
    return r;
}

void Poly::normalize(Integer& c) const
{
    if (char_ != 0)
        c = mod_floor(c, char_);
}

void Poly::add_term(const Exponent& e, const Integer& c)
{
    if (e.size() != vars_.size())
        throw AlgebraError("exponent length does not match variable count");
    Integer v = c;
    normalize(v);
    if (v == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, v);
    if (!inserted) {
        it->second += v;
        normalize(it->second);
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Poly::require_compatible(const Poly& o, const char* op) const
{
    if (char_ != o.char_)
        throw AlgebraError(std::string(op) + ": coefficient rings differ (characteristic " + std::to_string(char_) +
                           " vs " + std::to_string(o.char_) + ")");
    if (vars_ != o.vars_ && !vars_.empty() && !o.vars_.empty())
        throw AlgebraError(std::string(op) + ": variable mismatch");
}

void Poly::adopt_ring(const Poly& o)
{
    if (vars_.empty() && !o.vars_.empty()) {
        Terms t;
        for (auto& [e, c] : terms_)
            t.emplace(Exponent(o.vars_.size(), 0), c);
        terms_ = std::move(t);
        vars_ = o.vars_;
    }
}

Poly Poly::operator-() const
{
    Poly r(*this);
    for (auto& [e, c] : r.terms_) {
        c = -c;
        normalize(c);
    }
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    require_compatible(o, "add");
    adopt_ring(o);
    if (o.vars_.empty() && !vars_.empty()) {
        add_term(Exponent(vars_.size(), 0), o.constant_term());
        return *this;
    }
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b)
{
    a.require_compatible(b, "multiply");
    const auto& vars = a.vars_.empty() ? b.vars_ : a.vars_;
    Poly r(vars, a.char_);
    const std::size_t n = vars.size();
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Poly::Exponent e(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                e[i] = (a.vars_.empty() ? 0 : ea[i]) + (b.vars_.empty() ? 0 : eb[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Integer& c)
{
    Integer k = c;
    normalize(k);
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= k;
        normalize(it->second);
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

bool operator==(const Poly& a, const Poly& b)
{
    if (a.char_ != b.char_)
        return false;
    if (a.vars_ == b.vars_)
        return a.terms_ == b.terms_;
    // Constants compare across variable lists.
    if (a.is_constant() && b.is_constant())
        return a.constant_term() == b.constant_term();
    return false;
}

Poly Poly::pow(unsigned e) const
{
    Poly r = constant(vars_, 1, char_);
    Poly b = *this;
    while (e) {
        if (e & 1)
            r *= b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

Poly Poly::reduce_mod(std::uint32_t p) const
{
    if (char_ != 0 && char_ != p)
        throw AlgebraError("cannot reduce a characteristic-" + std::to_string(char_) + " polynomial mod " +
                           std::to_string(p));
    Poly r(vars_, p);
    for (const auto& [e, c] : terms_)
        r.add_term(e, c);
    return r;
}

Poly Poly::lift() const
{
    Poly r(vars_, 0);
    r.terms_ = terms_;
    return r;
}

Poly Poly::substitute(int var, const Poly& value) const
{
    const Poly v = value.vars_.empty() ? Poly::constant(vars_, value.constant_term(), value.char_) : value;
    if (v.vars_ != vars_ || v.char_ != char_)
        throw AlgebraError("substitute: value lives in a different ring");
    const auto idx = static_cast<std::size_t>(var);
    // Group by exponent of var, then apply Horner-free power evaluation.
    std::map<int, Poly> groups;
    for (const auto& [e, c] : terms_) {
        Exponent k = e;
        const int x = k[idx];
        k[idx] = 0;
        auto [it, ins] = groups.try_emplace(x, vars_, char_);
        it->second.add_term(k, c);
    }
    Poly inv_v(vars_, char_);
    bool have_inverse = false;
    Poly r(vars_, char_);
    for (const auto& [x, g] : groups) {
        if (x >= 0) {
            r += g * v.pow(static_cast<unsigned>(x));
            continue;
        }
        if (!have_inverse) {
            if (v.size() != 1)
                throw AlgebraError("substitute: negative power of a non-monomial");
            const auto& [ve, vc] = *v.terms_.begin();
            Integer unit = vc;
            if (char_ == 0) {
                if (unit != 1 && unit != -1)
                    throw AlgebraError("substitute: negative power of a non-unit");
            } else {
                unit = Integer(static_cast<long>(inverse_mod(vc.get_si(), char_)));
            }
            Exponent ie = ve;
            for (auto& k : ie)
                k = -k;
            inv_v = Poly::monomial(vars_, ie, unit, char_);
            have_inverse = true;
        }
        r += g * inv_v.pow(static_cast<unsigned>(-x));
    }
    return r;
}

Poly Poly::with_vars(const std::vector<std::string>& vars) const
{
    std::vector<int> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        map[i] = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
    }
    Poly r(vars, char_);
    for (const auto& [e, c] : terms_) {
        Exponent k(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (map[i] < 0)
                throw AlgebraError("with_vars: variable '" + vars_[i] + "' has no counterpart");
            k[static_cast<std::size_t>(map[i])] += e[i];
        }
        r.add_term(k, c);
    }
    return r;
}

Poly Poly::dilate(int var, int n) const
{
    Poly r(vars_, char_);
    for (const auto& [e, c] : terms_) {
        Exponent k = e;
        k[static_cast<std::size_t>(var)] *= n;
        r.add_term(k, c);
    }
    return r;
}

Poly Poly::divide_by_monomial(const Exponent& m) const
{
    Poly r(vars_, char_);
    for (const auto& [e, c] : terms_) {
        Exponent k = e;
        for (std::size_t i = 0; i < k.size(); ++i)
            k[i] -= m[i];
        r.add_term(k, c);
    }
    return r;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Exponent, Integer>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c0] : sorted) {
        Integer c = c0;
        if (char_ != 0 && c > Integer(static_cast<long>(char_ / 2)))
            c -= char_;
        const bool neg = c < 0;
        if (neg)
            c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_[i];
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            os << c.get_str();
        else if (c == 1)
            os << mono;
        else
            os << c.get_str() << "*" << mono;
    }
    return os.str();
}

std::optional<Poly> exact_quotient(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw AlgebraError("exact_quotient: division by zero");
    if (a.characteristic() != b.characteristic() || a.vars() != b.vars())
        throw AlgebraError("exact_quotient: operands live in different rings");
    auto nonneg = [](const Poly& f) {
        for (const auto& [e, c] : f.terms())
            for (int k : e)
                if (k < 0)
                    return false;
        return true;
    };
    if (!nonneg(a) || !nonneg(b))
        throw AlgebraError("exact_quotient: negative exponents");
    const std::uint32_t ch = a.characteristic();
    const auto& [lb, lc] = *b.terms().rbegin();
    Integer lc_inv = 0;
    if (ch != 0)
        lc_inv = Integer(static_cast<long>(inverse_mod(mod_floor(lc, ch).get_si(), ch)));
    Poly q(a.vars(), ch), r = a;
    while (!r.is_zero()) {
        const auto& [lr, cr] = *r.terms().rbegin();
        Poly::Exponent e(lr.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = lr[i] - lb[i];
            if (e[i] < 0)
                return std::nullopt;
        }
        Integer c;
        if (ch == 0) {
            if (!mpz_divisible_p(cr.get_mpz_t(), lc.get_mpz_t()))
                return std::nullopt;
            c = cr / lc;
        } else {
            c = cr * lc_inv;
        }
        const Poly t = Poly::monomial(a.vars(), e, c, ch);
        q += t;
        r -= t * b;
    }
    return q;
}

} // namespace fcq
