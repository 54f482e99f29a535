#pragma once

#include "fcq/homalg/complex.hpp"
#include "fcq/homalg/tate.hpp"
#include "fcq/report.hpp"

#include <functional>

namespace fcq::homalg {

template <class Scalar>
struct PeriodicResolution {
    CyclicComplex<Scalar> res;
    ChainMap<Scalar> aug; // to the trivial module in degree 0
    ChainMap<Scalar> top; // to the trivial module in degree 1-p
};

namespace detail {

template <class Scalar>
Matrix<Scalar> cyclic_shift(int p)
{
    return regular_module<Scalar>(p).sigma(0);
}

} // namespace detail

/// Rank-1 trivial term in degree 1-p followed by free terms in degrees
/// 2-p..0, joined by 1 -> N and then alternating sigma-1 and N, ending with
/// sigma-1 into degree 0.
template <class Scalar>
PeriodicResolution<Scalar> periodic_resolution(int p)
{
    require_odd_prime(p, "periodic_resolution");
    const Matrix<Scalar> s = detail::cyclic_shift<Scalar>(p);
    const Matrix<Scalar> one = identity_matrix<Scalar>(p);
    Matrix<Scalar> N = Matrix<Scalar>::Constant(p, p, Scalar(1));

    std::map<int, Index> dims{{1 - p, 1}};
    std::map<int, Matrix<Scalar>> d, sig{{1 - p, identity_matrix<Scalar>(1)}};
    for (int k = 2 - p; k <= 0; ++k) {
        dims[k] = p;
        sig[k] = s;
    }
    d[1 - p] = Matrix<Scalar>::Constant(p, 1, Scalar(1));
    for (int k = -1; k >= 2 - p; --k)
        d[k] = ((-1 - k) % 2 == 0) ? Matrix<Scalar>(s - one) : N;

    PeriodicResolution<Scalar> out;
    out.res = CyclicComplex<Scalar>(Complex<Scalar>(dims, d), sig, p);
    const auto R0 = Complex<Scalar>::concentrated(0, 1);
    const auto Rtop = Complex<Scalar>::concentrated(1 - p, 1);
    out.aug = ChainMap<Scalar>(out.res.complex(), R0, {{0, Matrix<Scalar>::Constant(1, p, Scalar(1))}});
    out.top = ChainMap<Scalar>(out.res.complex(), Rtop, {{1 - p, identity_matrix<Scalar>(1)}});
    return out;
}

/// 1_S for nonempty S of [p] = {1..p}, as bitmasks (bit s-1 for s), in
/// lexicographic order of the sorted element lists within each degree -|S|.
inline std::vector<unsigned> subsets_of_size(int p, int k)
{
    std::vector<unsigned> out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            unsigned m = 0;
            for (int s : pick)
                m |= 1u << (s - 1);
            out.push_back(m);
            return;
        }
        for (int s = start; s <= p; ++s) {
            pick[static_cast<std::size_t>(depth)] = s;
            rec(s + 1, depth + 1);
        }
    };
    rec(1, 0);
    return out;
}

/// The complex E: degree -k spanned by 1_S with |S| = k >= 1, differential
/// 1_S -> sum_j (-1)^j 1_{S - s_j} (s_0 < s_1 < ...), cyclic action
/// 1_S -> (-1)^{[p in S](|S|-1)} 1_{S+1}.
template <class Scalar>
class ExteriorModel {
public:
    explicit ExteriorModel(int p) : p_(p)
    {
        require_odd_prime(p, "ExteriorModel");
        std::map<int, Index> dims;
        for (int k = 1; k <= p; ++k) {
            basis_[k] = subsets_of_size(p, k);
            for (std::size_t i = 0; i < basis_[k].size(); ++i)
                pos_[basis_[k][i]] = static_cast<Index>(i);
            dims[-k] = static_cast<Index>(basis_[k].size());
        }
        std::map<int, Matrix<Scalar>> d, sig;
        const unsigned full = (1u << p) - 1;
        for (int k = 1; k <= p; ++k) {
            const auto& B = basis_[k];
            Matrix<Scalar> s = zero_matrix<Scalar>(dims[-k], dims[-k]);
            for (std::size_t c = 0; c < B.size(); ++c) {
                const unsigned S = B[c];
                const unsigned rotated = ((S << 1) | (S >> (p - 1))) & full;
                const bool wraps = (S >> (p - 1)) & 1;
                s(pos_[rotated], static_cast<Index>(c)) = Scalar(wraps && (k - 1) % 2 ? -1 : 1);
            }
            sig[-k] = s;
            if (k == 1)
                continue;
            Matrix<Scalar> m = zero_matrix<Scalar>(dims[1 - k], dims[-k]);
            for (std::size_t c = 0; c < B.size(); ++c) {
                int j = 0;
                for (int e = 0; e < p; ++e) {
                    if (!((B[c] >> e) & 1))
                        continue;
                    m(pos_[B[c] & ~(1u << e)], static_cast<Index>(c)) = Scalar(j % 2 ? -1 : 1);
                    ++j;
                }
            }
            d[-k] = m;
        }
        E_ = CyclicComplex<Scalar>(Complex<Scalar>(dims, d), sig, p);
    }

    const CyclicComplex<Scalar>& complex() const { return E_; }
    int p() const { return p_; }
    Index position(unsigned S) const { return pos_.at(S); }
    const std::vector<unsigned>& basis(int k) const { return basis_.at(k); }

    /// Boundary epsilon: E -> Sigma F_p, minus the coefficient of 1_{empty}.
    ChainMap<Scalar> boundary() const
    {
        const auto SR = Complex<Scalar>::concentrated(-1, 1);
        return ChainMap<Scalar>(E_.complex(), SR, {{-1, Matrix<Scalar>::Constant(1, p_, Scalar(-1))}});
    }

private:
    int p_;
    std::map<int, std::vector<unsigned>> basis_;
    std::map<unsigned, Index> pos_;
    CyclicComplex<Scalar> E_;
};

/// p (x) Sigma F_p: the periodic resolution shifted down by one, with the
/// same (unsigned) differential.
template <class Scalar>
CyclicComplex<Scalar> shifted_resolution(int p)
{
    const auto P = periodic_resolution<Scalar>(p).res;
    std::map<int, Index> dims;
    std::map<int, Matrix<Scalar>> d, s;
    for (int n : P.complex().degrees()) {
        dims[n - 1] = P.dim(n);
        d[n - 1] = P.d(n);
        s[n - 1] = P.sigma(n);
    }
    return CyclicComplex<Scalar>(Complex<Scalar>(dims, d), s, p);
}

/// True when every maximal run of consecutive integers in the mask has
/// even length.
inline bool even_runs(unsigned T)
{
    int run = 0;
    for (int e = 0; e <= 32; ++e) {
        if (e < 32 && ((T >> e) & 1)) {
            ++run;
        } else {
            if (run % 2)
                return false;
            run = 0;
        }
    }
    return true;
}

template <class Scalar>
struct ZetaMap {
    ExteriorModel<Scalar> E;
    CyclicComplex<Scalar> source;
    ChainMap<Scalar> zeta;
    Scalar top_value; // zeta on the rank-1 term, as a multiple of 1_[p]
};

/// Explicit generator images; the degree -p value is solved from the
/// chain-map condition.
template <class Scalar>
ZetaMap<Scalar> zeta_map(int p)
{
    ExteriorModel<Scalar> E(p);
    const auto src = shifted_resolution<Scalar>(p);
    const auto& Ec = E.complex();

    auto gen_image = [&](int degree) {
        // degree -(2i+1): {1} u T, T in {2..p}; degree -(2i+2): {1,2} u T, T in {3..p}
        const int k = -degree;
        const bool odd = k % 2 == 1;
        const int i = odd ? (k - 1) / 2 : (k - 2) / 2;
        const unsigned fixed = odd ? 1u : 3u;
        const Scalar c = -Scalar(mod_floor(factorial(i), static_cast<std::uint32_t>(p)).get_si());
        Vector<Scalar> v = Vector<Scalar>::Constant(Ec.dim(degree), Scalar(0));
        for (unsigned S : E.basis(k)) {
            if ((S & fixed) != fixed)
                continue;
            const unsigned T = S & ~fixed;
            if (even_runs(T))
                v(E.position(S)) += c;
        }
        return v;
    };

    std::map<int, Matrix<Scalar>> z;
    for (int n = 1 - p; n <= -1; ++n) {
        const Vector<Scalar> g = gen_image(n);
        Matrix<Scalar> m(Ec.dim(n), p);
        Vector<Scalar> cur = g;
        for (int j = 0; j < p; ++j) {
            m.col(j) = cur;
            cur = Ec.sigma(n) * cur;
        }
        z[n] = m;
    }
    // degree -p: d_E(c 1_[p]) = zeta^{1-p}(d t)
    const Vector<Scalar> rhs = z[1 - p] * src.d(-p);
    const auto c = solve<Scalar>(Ec.d(-p), rhs);
    if (!c)
        throw AlgebraError("zeta_map: no chain-map extension in degree -p");
    z[-p] = *c;
    const Scalar top = (*c)(0);
    ChainMap<Scalar> zeta(src.complex(), Ec.complex(), z);
    return {std::move(E), src, std::move(zeta), top};
}

/// Chain-map and equivariance of zeta, epsilon.zeta = aug, and the top
/// scalar against -((p-1)/2)!.
template <class Scalar>
VerificationReport verify_zeta(int p)
{
    static_assert(is_prime_field_v<Scalar>);
    if (characteristic_v<Scalar> != p)
        throw AlgebraError("verify_zeta: coefficient field must be F_p");
    VerificationReport rep;
    rep.name = "zeta p=" + std::to_string(p);
    const auto Z = zeta_map<Scalar>(p);
    const auto defect = chain_map_defect(Z.zeta);
    rep.add("zeta is a chain map", !defect, defect ? "fails in degree " + std::to_string(*defect) : "");
    rep.add("zeta is equivariant", is_equivariant(Z.zeta, Z.source, Z.E.complex()));

    const auto eps = Z.E.boundary();
    const auto ez = compose(eps, Z.zeta);
    const auto aug = periodic_resolution<Scalar>(p).aug;
    rep.add("epsilon zeta is induced by aug", ez.at(-1) == aug.at(0),
            "epsilon zeta = " + matrix_to_string(ez.at(-1)) + ", aug = " + matrix_to_string(aug.at(0)));

    const int q = (p - 1) / 2;
    const Integer expected = -factorial(static_cast<unsigned>(q));
    const Scalar want(mod_floor(expected, static_cast<std::uint32_t>(p)).get_si());
    rep.add("gamma-delta-zeta = " + expected.get_str(), Z.top_value == want,
            "composite scalar " + std::to_string(Z.top_value.value()) + ", expected " +
                std::to_string(want.value()));
    return rep;
}

} // namespace fcq::homalg
