#pragma once

#include "fcq/exactalg/integer.hpp"
#include "fcq/exactalg/linalg.hpp"
#include "fcq/report.hpp"

#include <string>
#include <vector>

namespace fcq::twist {

using Index = Eigen::Index;

inline int koszul(long e) { return e % 2 == 0 ? 1 : -1; }

/// Finite-dimensional Z-graded algebra over F_p given by structure
/// constants: column i*dim + j of `mult` is m(e_i, e_j).
template <class S>
class SuperAlgebra {
public:
    SuperAlgebra() = default;

    SuperAlgebra(std::vector<std::string> names, std::vector<int> degrees, Matrix<S> mult, Vector<S> unit,
                 bool graded_commutative = false)
        : names_(std::move(names)), degrees_(std::move(degrees)), mult_(std::move(mult)), unit_(std::move(unit)),
          commutative_(graded_commutative)
    {
        const auto n = static_cast<Index>(degrees_.size());
        if (static_cast<Index>(names_.size()) != n || mult_.rows() != n || mult_.cols() != n * n || unit_.size() != n)
            throw AlgebraError("SuperAlgebra: inconsistent sizes");
        const auto rep = axioms();
        if (!rep.passed())
            for (const auto& c : rep.checks)
                if (!c.passed)
                    throw AlgebraError("SuperAlgebra: " + c.name + " fails (" + c.witness + ")");
    }

    Index dim() const { return static_cast<Index>(degrees_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(Index i) const { return degrees_[static_cast<std::size_t>(i)]; }
    const Matrix<S>& mult() const { return mult_; }
    const Vector<S>& unit() const { return unit_; }
    bool graded_commutative() const { return commutative_; }

    Vector<S> product(Index i, Index j) const { return mult_.col(i * dim() + j); }

    Vector<S> mul(const Vector<S>& a, const Vector<S>& b) const
    {
        Vector<S> out = Vector<S>::Constant(dim(), S(0));
        for (Index i = 0; i < dim(); ++i) {
            if (a(i) == S(0))
                continue;
            for (Index j = 0; j < dim(); ++j)
                if (b(j) != S(0))
                    out += (a(i) * b(j)) * product(i, j);
        }
        return out;
    }

    Vector<S> basis_vector(Index i) const
    {
        Vector<S> v = Vector<S>::Constant(dim(), S(0));
        v(i) = S(1);
        return v;
    }

    /// Associativity, unit laws, homogeneity, and graded commutativity when
    /// flagged.
    VerificationReport axioms() const
    {
        VerificationReport rep;
        rep.name = "algebra axioms";
        const Index n = dim();
        std::string bad;
        for (Index i = 0; i < n && bad.empty(); ++i)
            for (Index j = 0; j < n && bad.empty(); ++j) {
                const Vector<S> c = product(i, j);
                for (Index k = 0; k < n; ++k)
                    if (c(k) != S(0) && degree(k) != degree(i) + degree(j))
                        bad = names_[i] + "*" + names_[j];
            }
        rep.add("products are homogeneous", bad.empty(), bad);
        bad.clear();
        for (Index i = 0; i < n && bad.empty(); ++i)
            for (Index j = 0; j < n && bad.empty(); ++j)
                for (Index k = 0; k < n && bad.empty(); ++k) {
                    const auto ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
                    if (mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek)))
                        bad = "(" + names_[i] + "*" + names_[j] + ")*" + names_[k];
                }
        rep.add("associativity", bad.empty(), bad);
        bad.clear();
        for (Index i = 0; i < n && bad.empty(); ++i) {
            const auto ei = basis_vector(i);
            if (mul(unit_, ei) != ei || mul(ei, unit_) != ei)
                bad = names_[i];
        }
        rep.add("unit laws", bad.empty(), bad);
        if (commutative_) {
            bad.clear();
            for (Index i = 0; i < n && bad.empty(); ++i)
                for (Index j = 0; j < n && bad.empty(); ++j)
                    if (product(i, j) != S(koszul(static_cast<long>(degree(i)) * degree(j))) * product(j, i))
                        bad = names_[i] + ", " + names_[j];
            rep.add("graded commutativity", bad.empty(), bad);
        }
        return rep;
    }

    /// Product in A (x) A: (a(x)b)(c(x)d) = (-1)^{|b||c|} ac (x) bd, basis
    /// index j*dim + k for e_j (x) e_k.
    Vector<S> tensor_mul(const Vector<S>& x, const Vector<S>& y) const
    {
        const Index n = dim();
        Vector<S> out = Vector<S>::Constant(n * n, S(0));
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b) {
                const S xv = x(a * n + b);
                if (xv == S(0))
                    continue;
                for (Index c = 0; c < n; ++c)
                    for (Index d = 0; d < n; ++d) {
                        const S yv = y(c * n + d);
                        if (yv == S(0))
                            continue;
                        const S coef = xv * yv * S(koszul(static_cast<long>(degree(b)) * degree(c)));
                        const Vector<S> ac = product(a, c), bd = product(b, d);
                        for (Index k = 0; k < n; ++k)
                            if (ac(k) != S(0))
                                for (Index l = 0; l < n; ++l)
                                    if (bd(l) != S(0))
                                        out(k * n + l) += coef * ac(k) * bd(l);
                    }
            }
        return out;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    Matrix<S> mult_;
    Vector<S> unit_;
    bool commutative_ = false;
};

/// Accumulates structure constants; the unit is a basis element.
template <class S>
class AlgebraBuilder {
public:
    AlgebraBuilder(std::vector<std::string> names, std::vector<int> degrees, Index unit_index)
        : names_(std::move(names)), degrees_(std::move(degrees)), unit_(unit_index)
    {
        const auto n = static_cast<Index>(degrees_.size());
        mult_ = zero_matrix<S>(n, n * n);
        for (Index i = 0; i < n; ++i) {
            mult_(i, unit_ * n + i) = S(1);
            mult_(i, i * n + unit_) = S(1);
        }
    }

    AlgebraBuilder& set(Index i, Index j, Index k, S c)
    {
        mult_(k, i * dim() + j) = c;
        return *this;
    }

    Index dim() const { return static_cast<Index>(degrees_.size()); }

    SuperAlgebra<S> build(bool graded_commutative = false) const
    {
        Vector<S> u = Vector<S>::Constant(dim(), S(0));
        u(unit_) = S(1);
        return SuperAlgebra<S>(names_, degrees_, mult_, u, graded_commutative);
    }

private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    Index unit_;
    Matrix<S> mult_;
};

template <class S>
SuperAlgebra<S> ground_field()
{
    return AlgebraBuilder<S>({"1"}, {0}, 0).build(true);
}

/// k[x]/x^n with |x| = deg.
template <class S>
SuperAlgebra<S> truncated_polynomial(int deg, int n, const std::string& var = "x")
{
    std::vector<std::string> names{"1"};
    std::vector<int> degs{0};
    for (int i = 1; i < n; ++i) {
        names.push_back(i == 1 ? var : var + "^" + std::to_string(i));
        degs.push_back(i * deg);
    }
    AlgebraBuilder<S> b(names, degs, 0);
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j < n; ++j)
            b.set(i, j, i + j, S(1));
    return b.build(deg % 2 == 0);
}

/// Exterior algebra on generators of the given (odd) degrees; basis indexed
/// by subsets in increasing bitmask order.
template <class S>
SuperAlgebra<S> exterior(const std::vector<std::string>& gens, const std::vector<int>& gen_degrees)
{
    const int k = static_cast<int>(gens.size());
    const unsigned count = 1u << k;
    std::vector<std::string> names;
    std::vector<int> degs;
    for (unsigned m = 0; m < count; ++m) {
        std::string nm;
        int d = 0;
        for (int g = 0; g < k; ++g)
            if ((m >> g) & 1) {
                nm += gens[static_cast<std::size_t>(g)];
                d += gen_degrees[static_cast<std::size_t>(g)];
            }
        names.push_back(m == 0 ? "1" : nm);
        degs.push_back(d);
    }
    AlgebraBuilder<S> b(names, degs, 0);
    for (unsigned x = 1; x < count; ++x)
        for (unsigned y = 1; y < count; ++y) {
            if (x & y)
                continue;
            // sign of sorting the concatenated generator list
            long e = 0;
            for (int g = 0; g < k; ++g)
                if ((y >> g) & 1)
                    for (int h = g + 1; h < k; ++h)
                        if ((x >> h) & 1)
                            e += static_cast<long>(gen_degrees[static_cast<std::size_t>(g)]) *
                                 gen_degrees[static_cast<std::size_t>(h)];
            b.set(x, y, x | y, S(koszul(e)));
        }
    return b.build(true);
}

/// Graded algebra map f: A -> B as a dim B x dim A matrix.
template <class S>
struct AlgebraMap {
    SuperAlgebra<S> source;
    SuperAlgebra<S> target;
    Matrix<S> matrix;

    bool preserves_degree() const
    {
        for (Index j = 0; j < matrix.cols(); ++j)
            for (Index i = 0; i < matrix.rows(); ++i)
                if (matrix(i, j) != S(0) && target.degree(i) != source.degree(j))
                    return false;
        return true;
    }

    bool is_homomorphism() const
    {
        if (!preserves_degree() || matrix * source.unit() != target.unit())
            return false;
        for (Index i = 0; i < source.dim(); ++i)
            for (Index j = 0; j < source.dim(); ++j) {
                const Vector<S> lhs = matrix * source.product(i, j);
                const Vector<S> rhs = target.mul(matrix.col(i), matrix.col(j));
                if (lhs != rhs)
                    return false;
            }
        return true;
    }
};

} // namespace fcq::twist
