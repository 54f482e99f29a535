#pragma once

#include "fcq/homalg/complex.hpp"

namespace fcq::homalg {

/// Dimensions of the 2-periodic Tate hypercohomology.
struct TateDims {
    Index even = 0; // H^0 = H^{2k}
    Index odd = 0;  // H^1 = H^{2k+1} = H^{-1}

    bool vanishes() const { return even == 0 && odd == 0; }
    Index at(int n) const { return n % 2 == 0 ? even : odd; }
};

/// Total complex of the complete-resolution double complex: column a holds
/// M, horizontal maps are sigma-1 out of even columns and N out of odd ones,
/// vertical maps are (-1)^a d.
template <class Scalar>
TateDims tate_hypercohomology(const CyclicComplex<Scalar>& M)
{
    static_assert(is_prime_field_v<Scalar>);
    if (characteristic_v<Scalar> != M.order())
        throw AlgebraError("tate_hypercohomology: coefficient field must have characteristic p");
    const auto degs = M.complex().degrees();

    std::map<int, Index> off;
    Index dimT = 0;
    for (int b : degs) {
        off[b] = dimT;
        dimT += M.dim(b);
    }
    // T^n = sum_b M^b with M^b in column n - b, so every T^n has the same shape.
    auto total_d = [&](int n) {
        Matrix<Scalar> D = zero_matrix<Scalar>(dimT, dimT);
        for (int b : degs) {
            const int a = n - b;
            const Index k = M.dim(b);
            // horizontal: (a, b) -> (a+1, b)
            D.block(off.at(b), off.at(b), k, k) = (a % 2 == 0) ? M.sigma_minus_one(b) : M.norm(b);
            // vertical: (a, b) -> (a, b+1)
            if (M.dim(b + 1) > 0) {
                const Scalar sgn((a % 2 == 0) ? 1 : -1);
                D.block(off.at(b + 1), off.at(b), M.dim(b + 1), k) = sgn * M.d(b);
            }
        }
        return D;
    };
    if (degs.empty())
        return {};
    auto h = [&](int n) { return dimT - rank(total_d(n)) - rank(total_d(n - 1)); };
    return {h(0), h(1)};
}

/// Per degree: is M^n free over F_p[mu_p]?
template <class Scalar>
std::map<int, bool> is_induced(const CyclicComplex<Scalar>& M)
{
    std::map<int, bool> out;
    const Index p = M.order();
    for (int n : M.complex().degrees()) {
        const Index k = M.dim(n);
        out[n] = k % p == 0 && k - rank(M.sigma_minus_one(n)) == k / p;
    }
    return out;
}

template <class Scalar>
bool is_degreewise_free(const CyclicComplex<Scalar>& M)
{
    for (const auto& [n, ok] : is_induced(M))
        if (!ok)
            return false;
    return true;
}

/// Regular representation F_p[mu_p] concentrated in one degree.
template <class Scalar>
CyclicComplex<Scalar> regular_module(int p, int degree = 0)
{
    Matrix<Scalar> s = zero_matrix<Scalar>(p, p);
    for (int j = 0; j < p; ++j)
        s((j + 1) % p, j) = Scalar(1);
    return CyclicComplex<Scalar>(Complex<Scalar>::concentrated(degree, p), {{degree, s}}, p);
}

} // namespace fcq::homalg
