#pragma once

#include "fcq/homalg/complex.hpp"
#include "fcq/rng.hpp"

namespace fcq::homalg {

template <class Scalar>
Matrix<Scalar> random_matrix(SeededRng& rng, Index rows, Index cols)
{
    Matrix<Scalar> m = zero_matrix<Scalar>(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = Scalar(rng.uniform(0, characteristic_v<Scalar> - 1));
    return m;
}

/// Random complex with the given dimensions. Each d^n is a random
/// combination of functionals vanishing on im d^{n-1}.
template <class Scalar>
Complex<Scalar> random_complex(SeededRng& rng, const std::map<int, Index>& dims)
{
    std::map<int, Matrix<Scalar>> d;
    auto dim = [&](int n) {
        auto it = dims.find(n);
        return it == dims.end() ? Index(0) : it->second;
    };
    for (const auto& [n, k] : dims) {
        if (dim(n + 1) == 0 || k == 0)
            continue;
        Matrix<Scalar> Y; // rows: functionals killing im d^{n-1}
        auto prev = d.find(n - 1);
        if (prev == d.end())
            Y = identity_matrix<Scalar>(k);
        else
            Y = kernel<Scalar>(prev->second.transpose()).transpose();
        d[n] = random_matrix<Scalar>(rng, dim(n + 1), Y.rows()) * Y;
    }
    return Complex<Scalar>(dims, d);
}

/// Uniform random element of the space of chain maps A -> B.
template <class Scalar>
ChainMap<Scalar> random_chain_map(SeededRng& rng, const Complex<Scalar>& A, const Complex<Scalar>& B)
{
    // unknowns: entries of f^n for degrees where both sides are nonzero
    std::map<int, Index> start;
    Index nvars = 0;
    for (int n : A.degrees())
        if (B.dim(n) > 0) {
            start[n] = nvars;
            nvars += B.dim(n) * A.dim(n);
        }
    auto var = [&](int n, Index i, Index j) { return start.at(n) + j * B.dim(n) + i; };
    std::vector<std::vector<std::pair<Index, Scalar>>> rows;
    // d_B f^n - f^{n+1} d_A = 0 as a map A^n -> B^{n+1}
    std::vector<int> degs = A.degrees();
    for (int n : B.degrees())
        degs.push_back(n - 1);
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (int n : degs) {
        const Index a = A.dim(n), b1 = B.dim(n + 1);
        if (a == 0 || b1 == 0)
            continue;
        const auto dB = B.d(n);
        const auto dA = A.d(n);
        for (Index i = 0; i < b1; ++i)
            for (Index j = 0; j < a; ++j) {
                std::vector<std::pair<Index, Scalar>> row;
                if (start.count(n))
                    for (Index k = 0; k < B.dim(n); ++k)
                        row.push_back({var(n, k, j), dB(i, k)});
                if (start.count(n + 1))
                    for (Index k = 0; k < A.dim(n + 1); ++k)
                        row.push_back({var(n + 1, i, k), -dA(k, j)});
                rows.push_back(std::move(row));
            }
    }
    Matrix<Scalar> sys = zero_matrix<Scalar>(static_cast<Index>(rows.size()), nvars);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r])
            sys(static_cast<Index>(r), c) += v;
    const Matrix<Scalar> K = kernel(sys);
    const Vector<Scalar> x = K * random_matrix<Scalar>(rng, K.cols(), 1);
    std::map<int, Matrix<Scalar>> f;
    for (const auto& [n, s] : start) {
        Matrix<Scalar> m = zero_matrix<Scalar>(B.dim(n), A.dim(n));
        for (Index j = 0; j < A.dim(n); ++j)
            for (Index i = 0; i < B.dim(n); ++i)
                m(i, j) = x(var(n, i, j));
        f[n] = m;
    }
    return ChainMap<Scalar>(A, B, f);
}

template <class Scalar>
Matrix<Scalar> kron(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    Matrix<Scalar> out = zero_matrix<Scalar>(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// C (x) F_p[mu_p] with sigma acting on the second factor: degreewise free.
template <class Scalar>
CyclicComplex<Scalar> induced_complex(const Complex<Scalar>& C, int p)
{
    Matrix<Scalar> s = zero_matrix<Scalar>(p, p);
    for (int j = 0; j < p; ++j)
        s((j + 1) % p, j) = Scalar(1);
    std::map<int, Index> dims;
    std::map<int, Matrix<Scalar>> d, sig;
    for (int n : C.degrees()) {
        dims[n] = C.dim(n) * p;
        sig[n] = kron<Scalar>(identity_matrix<Scalar>(C.dim(n)), s);
        if (C.dim(n + 1) > 0)
            d[n] = kron<Scalar>(C.d(n), identity_matrix<Scalar>(p));
    }
    return CyclicComplex<Scalar>(Complex<Scalar>(dims, d), sig, p);
}

/// Random dimension profile on degrees [lo, hi] with total at most `total`.
inline std::map<int, Index> random_dims(SeededRng& rng, int lo, int hi, Index total)
{
    std::map<int, Index> dims;
    Index left = total;
    for (int n = lo; n <= hi && left > 0; ++n) {
        const Index k = rng.uniform(0, left);
        if (k > 0)
            dims[n] = k;
        left -= k;
    }
    if (dims.empty())
        dims[lo] = 1;
    return dims;
}

} // namespace fcq::homalg
