#pragma once

#include "fcq/exactalg/zp.hpp"

#include <optional>
#include <vector>

namespace fcq {

template <class Scalar>
bool is_zero(const Matrix<Scalar>& m)
{
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != Scalar(0))
                return false;
    return true;
}

template <class Scalar>
Matrix<Scalar> zero_matrix(Eigen::Index rows, Eigen::Index cols)
{
    return Matrix<Scalar>::Constant(rows, cols, Scalar(0));
}

template <class Scalar>
Matrix<Scalar> identity_matrix(Eigen::Index n)
{
    Matrix<Scalar> m = zero_matrix<Scalar>(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        m(i, i) = Scalar(1);
    return m;
}

/// Reduced row echelon form over a prime field.
template <class Scalar>
struct Echelon {
    Matrix<Scalar> reduced;
    std::vector<Eigen::Index> pivots; // pivot column of each nonzero row

    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <class Scalar>
Echelon<Scalar> row_echelon(Matrix<Scalar> m)
{
    static_assert(is_prime_field_v<Scalar>, "row reduction needs a field");
    Echelon<Scalar> out;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index piv = row;
        while (piv < m.rows() && m(piv, col) == Scalar(0))
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != row)
            m.row(piv).swap(m.row(row));
        const Scalar inv = m(row, col).inverse();
        for (Eigen::Index j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == Scalar(0))
                continue;
            const Scalar f = m(i, col);
            for (Eigen::Index j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <class Scalar>
Eigen::Index rank(const Matrix<Scalar>& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return row_echelon(m).rank();
}

/// Columns form a basis of the right kernel {v : m v = 0}.
template <class Scalar>
Matrix<Scalar> kernel(const Matrix<Scalar>& m)
{
    const Eigen::Index n = m.cols();
    if (m.rows() == 0)
        return identity_matrix<Scalar>(n);
    const auto ech = row_echelon(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (auto c : ech.pivots)
        is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index c = 0; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)])
            free_cols.push_back(c);
    Matrix<Scalar> basis = zero_matrix<Scalar>(n, static_cast<Eigen::Index>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const Eigen::Index f = free_cols[k];
        basis(f, static_cast<Eigen::Index>(k)) = Scalar(1);
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            basis(ech.pivots[r], static_cast<Eigen::Index>(k)) = -ech.reduced(static_cast<Eigen::Index>(r), f);
    }
    return basis;
}

/// Some x with m x = b, or nullopt when the system is inconsistent.
template <class Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& m, const Vector<Scalar>& b)
{
    Matrix<Scalar> aug(m.rows(), m.cols() + 1);
    aug << m, b;
    const auto ech = row_echelon<Scalar>(aug);
    Vector<Scalar> x = Vector<Scalar>::Constant(m.cols(), Scalar(0));
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        const Eigen::Index c = ech.pivots[r];
        if (c == m.cols())
            return std::nullopt;
        x(c) = ech.reduced(static_cast<Eigen::Index>(r), m.cols());
    }
    return x;
}

/// Product that skips zero entries of b; the tensor-power matrices are
/// mostly signed permutations and very sparse.
template <class Scalar>
Matrix<Scalar> sparse_mul(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    Matrix<Scalar> out = zero_matrix<Scalar>(a.rows(), b.cols());
    for (Eigen::Index j = 0; j < b.cols(); ++j)
        for (Eigen::Index k = 0; k < b.rows(); ++k) {
            const Scalar c = b(k, j);
            if (c == Scalar(0))
                continue;
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                if (a(i, k) != Scalar(0))
                    out(i, j) += a(i, k) * c;
        }
    return out;
}

/// Matrix power by repeated squaring.
template <class Scalar>
Matrix<Scalar> matrix_power(const Matrix<Scalar>& m, unsigned e)
{
    Matrix<Scalar> r = identity_matrix<Scalar>(m.rows());
    Matrix<Scalar> b = m;
    while (e) {
        if (e & 1)
            r = sparse_mul(r, b);
        b = sparse_mul(b, b);
        e >>= 1;
    }
    return r;
}

} // namespace fcq
