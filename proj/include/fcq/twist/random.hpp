#pragma once

#include "fcq/rng.hpp"
#include "fcq/twist/superalgebra.hpp"

namespace fcq::twist {

/// F_p^k with orthogonal idempotents; the unit e_1 + ... + e_k is not a
/// basis vector.
template <class S>
SuperAlgebra<S> split_product(int k)
{
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i)
        names.push_back("e" + std::to_string(i + 1));
    Matrix<S> m = zero_matrix<S>(k, k * k);
    for (int i = 0; i < k; ++i)
        m(i, i * k + i) = S(1);
    return SuperAlgebra<S>(names, std::vector<int>(static_cast<std::size_t>(k), 0), m, Vector<S>::Constant(k, S(1)),
                           true);
}

/// Same algebra in the basis e'_i = sum_k P(k, i) e_k; P must preserve
/// degrees and be invertible.
template <class S>
SuperAlgebra<S> change_basis(const SuperAlgebra<S>& A, const Matrix<S>& P)
{
    const Index n = A.dim();
    Matrix<S> Pinv(n, n);
    for (Index k = 0; k < n; ++k) {
        const auto x = solve<S>(P, A.basis_vector(k));
        if (!x)
            throw AlgebraError("change_basis: matrix is singular");
        Pinv.col(k) = *x;
    }
    Matrix<S> m = zero_matrix<S>(n, n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            m.col(i * n + j) = Pinv * A.mul(P.col(i), P.col(j));
    std::vector<std::string> names;
    for (Index i = 0; i < n; ++i)
        names.push_back("f" + std::to_string(i + 1));
    return SuperAlgebra<S>(names, A.degrees(), m, Pinv * A.unit(), A.graded_commutative());
}

/// Random invertible matrix that is block diagonal with respect to degree.
template <class S>
Matrix<S> random_graded_automorphism(SeededRng& rng, const std::vector<int>& degrees)
{
    const auto n = static_cast<Index>(degrees.size());
    while (true) {
        Matrix<S> P = zero_matrix<S>(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                if (degrees[static_cast<std::size_t>(i)] == degrees[static_cast<std::size_t>(j)])
                    P(i, j) = S(rng.uniform(0, characteristic_v<S> - 1));
        if (rank(P) == n)
            return P;
    }
}

/// Random associative unital graded algebra of dimension at most 3, drawn
/// from: split products, truncated polynomial rings, square-zero and
/// nilpotent extensions; then a random graded change of basis.
template <class S>
SuperAlgebra<S> random_super_algebra(SeededRng& rng)
{
    SuperAlgebra<S> A;
    switch (rng.uniform(0, 4)) {
    case 0:
        A = split_product<S>(static_cast<int>(rng.uniform(1, 3)));
        break;
    case 1:
        A = truncated_polynomial<S>(static_cast<int>(rng.uniform(0, 4)), static_cast<int>(rng.uniform(2, 3)));
        break;
    case 2: {
        // 1, a, b with a^2 = c b when |b| = 2|a|
        const int da = static_cast<int>(rng.uniform(-2, 3));
        const bool linked = rng.coin();
        const int db = linked ? 2 * da : static_cast<int>(rng.uniform(-2, 3));
        AlgebraBuilder<S> b({"1", "a", "b"}, {0, da, db}, 0);
        if (linked)
            b.set(1, 1, 2, S(rng.uniform(0, characteristic_v<S> - 1)));
        A = b.build();
        break;
    }
    case 3: {
        // exterior algebra on one odd generator
        const int d = 2 * static_cast<int>(rng.uniform(-1, 2)) + 1;
        A = exterior<S>({"xi"}, {d});
        break;
    }
    default: {
        // F_p x k[x]/x^2 via an idempotent e with ex = xe = 0
        const int d = static_cast<int>(rng.uniform(1, 4));
        A = AlgebraBuilder<S>({"1", "e", "x"}, {0, 0, d}, 0).set(1, 1, 1, S(1)).build(d % 2 == 0);
        break;
    }
    }
    return change_basis(A, random_graded_automorphism<S>(rng, A.degrees()));
}

} // namespace fcq::twist
