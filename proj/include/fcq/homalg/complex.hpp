#pragma once

#include "fcq/exactalg/integer.hpp"
#include "fcq/exactalg/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fcq::homalg {

using Index = Eigen::Index;

/// Bounded cochain complex of finite-dimensional free modules. The
/// differential d^n maps degree n to degree n+1; degrees absent from the
/// map have dimension zero.
template <class Scalar>
class Complex {
public:
    using Mat = Matrix<Scalar>;

    Complex() = default;

    Complex(std::map<int, Index> dims, std::map<int, Mat> d) : dims_(std::move(dims)), d_(std::move(d))
    {
        for (auto it = dims_.begin(); it != dims_.end();)
            it = it->second == 0 ? dims_.erase(it) : std::next(it);
        for (auto it = d_.begin(); it != d_.end();) {
            const auto [n, m] = *it;
            if (m.rows() != dim(n + 1) || m.cols() != dim(n))
                throw AlgebraError("Complex: differential d^" + std::to_string(n) + " has wrong shape");
            it = (m.rows() == 0 || m.cols() == 0) ? d_.erase(it) : std::next(it);
        }
        for (const auto& [n, m] : d_) {
            auto next = d_.find(n + 1);
            if (next != d_.end() && !is_zero<Scalar>(sparse_mul(next->second, m)))
                throw AlgebraError("Complex: d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " != 0");
        }
    }

    /// One nonzero degree, zero differential.
    static Complex concentrated(int degree, Index dim) { return Complex({{degree, dim}}, {}); }

    Index dim(int n) const
    {
        auto it = dims_.find(n);
        return it == dims_.end() ? 0 : it->second;
    }

    Mat d(int n) const
    {
        auto it = d_.find(n);
        return it == d_.end() ? zero_matrix<Scalar>(dim(n + 1), dim(n)) : it->second;
    }

    const std::map<int, Index>& dims() const { return dims_; }

    std::vector<int> degrees() const
    {
        std::vector<int> out;
        for (const auto& [n, k] : dims_)
            out.push_back(n);
        return out;
    }

    bool empty() const { return dims_.empty(); }
    int min_degree() const { return dims_.empty() ? 0 : dims_.begin()->first; }
    int max_degree() const { return dims_.empty() ? -1 : dims_.rbegin()->first; }

    Index total_dim() const
    {
        Index t = 0;
        for (const auto& [n, k] : dims_)
            t += k;
        return t;
    }

    friend bool operator==(const Complex& a, const Complex& b)
    {
        if (a.dims_ != b.dims_)
            return false;
        for (int n : a.degrees())
            if (a.d(n) != b.d(n))
                return false;
        return true;
    }

private:
    std::map<int, Index> dims_;
    std::map<int, Mat> d_;
};

/// Complex with a degreewise automorphism sigma of order dividing p that
/// commutes with d.
template <class Scalar>
class CyclicComplex {
public:
    using Mat = Matrix<Scalar>;

    CyclicComplex() = default;

    CyclicComplex(Complex<Scalar> c, std::map<int, Mat> s, int p) : c_(std::move(c)), sigma_(std::move(s)), p_(p)
    {
        require_odd_prime(p, "CyclicComplex");
        for (int n : c_.degrees()) {
            auto it = sigma_.find(n);
            if (it == sigma_.end() || it->second.rows() != c_.dim(n) || it->second.cols() != c_.dim(n))
                throw AlgebraError("CyclicComplex: sigma missing or misshapen in degree " + std::to_string(n));
            if (matrix_power(it->second, static_cast<unsigned>(p)) != identity_matrix<Scalar>(c_.dim(n)))
                throw AlgebraError("CyclicComplex: sigma^p != 1 in degree " + std::to_string(n));
            if (c_.dim(n + 1) > 0 && sparse_mul(sigma(n + 1), c_.d(n)) != sparse_mul(c_.d(n), it->second))
                throw AlgebraError("CyclicComplex: sigma does not commute with d^" + std::to_string(n));
        }
    }

    /// Trivial action.
    static CyclicComplex trivial(Complex<Scalar> c, int p)
    {
        std::map<int, Mat> s;
        for (int n : c.degrees())
            s[n] = identity_matrix<Scalar>(c.dim(n));
        return CyclicComplex(std::move(c), std::move(s), p);
    }

    const Complex<Scalar>& complex() const { return c_; }
    int order() const { return p_; }
    Index dim(int n) const { return c_.dim(n); }
    Mat d(int n) const { return c_.d(n); }

    Mat sigma(int n) const
    {
        auto it = sigma_.find(n);
        return it == sigma_.end() ? zero_matrix<Scalar>(0, 0) : it->second;
    }

    /// N = 1 + sigma + ... + sigma^{p-1}.
    Mat norm(int n) const
    {
        const Mat s = sigma(n);
        Mat acc = identity_matrix<Scalar>(dim(n));
        Mat pw = acc;
        for (int k = 1; k < p_; ++k) {
            pw = pw * s;
            acc += pw;
        }
        return acc;
    }

    Mat sigma_minus_one(int n) const { return sigma(n) - identity_matrix<Scalar>(dim(n)); }

private:
    Complex<Scalar> c_;
    std::map<int, Mat> sigma_;
    int p_ = 3;
};

/// Degreewise matrices f^n : source^n -> target^n.
template <class Scalar>
struct ChainMap {
    using Mat = Matrix<Scalar>;

    Complex<Scalar> source;
    Complex<Scalar> target;
    std::map<int, Mat> f;

    ChainMap() = default;

    ChainMap(Complex<Scalar> s, Complex<Scalar> t, std::map<int, Mat> m)
        : source(std::move(s)), target(std::move(t)), f(std::move(m))
    {
        for (const auto& [n, a] : f)
            if (a.rows() != target.dim(n) || a.cols() != source.dim(n))
                throw AlgebraError("ChainMap: shape mismatch in degree " + std::to_string(n));
    }

    Mat at(int n) const
    {
        auto it = f.find(n);
        return it == f.end() ? zero_matrix<Scalar>(target.dim(n), source.dim(n)) : it->second;
    }

    std::vector<int> degrees() const
    {
        std::vector<int> out = source.degrees();
        for (int n : target.degrees())
            out.push_back(n);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    static ChainMap identity(const Complex<Scalar>& c)
    {
        std::map<int, Mat> m;
        for (int n : c.degrees())
            m[n] = identity_matrix<Scalar>(c.dim(n));
        return ChainMap(c, c, std::move(m));
    }

    static ChainMap zero(const Complex<Scalar>& s, const Complex<Scalar>& t) { return ChainMap(s, t, {}); }
};

/// Degree at which f fails to commute with d, or nullopt.
template <class Scalar>
std::optional<int> chain_map_defect(const ChainMap<Scalar>& f)
{
    for (int n : f.degrees()) {
        const Matrix<Scalar> lhs = sparse_mul(f.target.d(n), f.at(n));
        const Matrix<Scalar> rhs = sparse_mul(f.at(n + 1), f.source.d(n));
        if (lhs != rhs)
            return n;
        // also degree n-1 -> n, for degrees where only the target lives
        const Matrix<Scalar> lhs0 = sparse_mul(f.target.d(n - 1), f.at(n - 1));
        const Matrix<Scalar> rhs0 = sparse_mul(f.at(n), f.source.d(n - 1));
        if (lhs0 != rhs0)
            return n - 1;
    }
    return std::nullopt;
}

template <class Scalar>
bool is_chain_map(const ChainMap<Scalar>& f)
{
    return !chain_map_defect(f).has_value();
}

template <class Scalar>
bool is_equivariant(const ChainMap<Scalar>& f, const CyclicComplex<Scalar>& s, const CyclicComplex<Scalar>& t)
{
    for (int n : f.degrees())
        if (s.dim(n) > 0 && t.dim(n) > 0 && sparse_mul(t.sigma(n), f.at(n)) != sparse_mul(f.at(n), s.sigma(n)))
            return false;
    return true;
}

template <class Scalar>
ChainMap<Scalar> compose(const ChainMap<Scalar>& g, const ChainMap<Scalar>& f)
{
    std::map<int, Matrix<Scalar>> m;
    for (int n : f.degrees())
        if (g.target.dim(n) > 0 && f.source.dim(n) > 0)
            m[n] = sparse_mul(g.at(n), f.at(n));
    return ChainMap<Scalar>(f.source, g.target, std::move(m));
}

template <class Scalar>
ChainMap<Scalar> operator+(const ChainMap<Scalar>& f, const ChainMap<Scalar>& g)
{
    if (!(f.source == g.source) || !(f.target == g.target))
        throw AlgebraError("chain maps are not parallel");
    std::map<int, Matrix<Scalar>> m;
    for (int n : f.degrees())
        if (f.target.dim(n) > 0 && f.source.dim(n) > 0)
            m[n] = f.at(n) + g.at(n);
    return ChainMap<Scalar>(f.source, f.target, std::move(m));
}

template <class Scalar>
ChainMap<Scalar> operator-(const ChainMap<Scalar>& f, const ChainMap<Scalar>& g)
{
    std::map<int, Matrix<Scalar>> m;
    for (int n : g.degrees())
        if (g.target.dim(n) > 0 && g.source.dim(n) > 0)
            m[n] = -g.at(n);
    return f + ChainMap<Scalar>(g.source, g.target, std::move(m));
}

/// Cohomology dimensions dim H^n over a prime field.
template <class Scalar>
std::map<int, Index> cohomology_dims(const Complex<Scalar>& c)
{
    std::map<int, Index> out;
    for (int n : c.degrees()) {
        const Index h = c.dim(n) - rank(c.d(n)) - rank(c.d(n - 1));
        if (h != 0)
            out[n] = h;
    }
    return out;
}

/// Shift: (Sigma A)^n = A^{n+1}, differential -d.
template <class Scalar>
Complex<Scalar> shift(const Complex<Scalar>& a)
{
    std::map<int, Index> dims;
    std::map<int, Matrix<Scalar>> d;
    for (int n : a.degrees()) {
        dims[n - 1] = a.dim(n);
        d[n - 1] = -a.d(n);
    }
    return Complex<Scalar>(dims, d);
}

/// cone(f)^n = A^{n+1} + B^n with differential (-d_A, 0; f, d_B).
template <class Scalar>
Complex<Scalar> cone(const ChainMap<Scalar>& f)
{
    const auto& A = f.source;
    const auto& B = f.target;
    std::map<int, Index> dims;
    for (int n : A.degrees())
        dims[n - 1] += A.dim(n);
    for (int n : B.degrees())
        dims[n] += B.dim(n);
    std::map<int, Matrix<Scalar>> d;
    for (const auto& [n, k] : dims) {
        const Index a0 = A.dim(n + 1), b0 = B.dim(n), a1 = A.dim(n + 2), b1 = B.dim(n + 1);
        Matrix<Scalar> m = zero_matrix<Scalar>(a1 + b1, a0 + b0);
        if (a1 && a0)
            m.block(0, 0, a1, a0) = -A.d(n + 1);
        if (b1 && a0)
            m.block(a1, 0, b1, a0) = f.at(n + 1);
        if (b1 && b0)
            m.block(a1, a0, b1, b0) = B.d(n);
        d[n] = m;
    }
    return Complex<Scalar>(dims, d);
}

template <class Scalar>
Complex<Scalar> direct_sum(const Complex<Scalar>& a, const Complex<Scalar>& b)
{
    std::map<int, Index> dims = a.dims();
    for (const auto& [n, k] : b.dims())
        dims[n] += k;
    std::map<int, Matrix<Scalar>> d;
    for (const auto& [n, k] : dims) {
        Matrix<Scalar> m = zero_matrix<Scalar>(a.dim(n + 1) + b.dim(n + 1), k);
        if (a.dim(n + 1) && a.dim(n))
            m.block(0, 0, a.dim(n + 1), a.dim(n)) = a.d(n);
        if (b.dim(n + 1) && b.dim(n))
            m.block(a.dim(n + 1), a.dim(n), b.dim(n + 1), b.dim(n)) = b.d(n);
        d[n] = m;
    }
    return Complex<Scalar>(dims, d);
}

/// Restriction of a cyclic complex to the span of chosen basis vectors in
/// each degree. Valid as a subquotient when the chosen spans are the
/// difference of two sigma- and d-stable coordinate subcomplexes.
template <class Scalar>
CyclicComplex<Scalar> restrict_to(const CyclicComplex<Scalar>& c, const std::map<int, std::vector<Index>>& keep)
{
    auto sub = [](const Matrix<Scalar>& m, const std::vector<Index>& rows, const std::vector<Index>& cols) {
        Matrix<Scalar> out = zero_matrix<Scalar>(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                out(static_cast<Index>(i), static_cast<Index>(j)) = m(rows[i], cols[j]);
        return out;
    };
    static const std::vector<Index> none;
    auto idx = [&](int n) -> const std::vector<Index>& {
        auto it = keep.find(n);
        return it == keep.end() ? none : it->second;
    };
    std::map<int, Index> dims;
    std::map<int, Matrix<Scalar>> d, s;
    for (const auto& [n, v] : keep) {
        dims[n] = static_cast<Index>(v.size());
        if (v.empty())
            continue;
        s[n] = sub(c.sigma(n), v, v);
        if (!idx(n + 1).empty())
            d[n] = sub(c.d(n), idx(n + 1), v);
    }
    return CyclicComplex<Scalar>(Complex<Scalar>(dims, d), s, c.order());
}

template <class Scalar>
std::string matrix_to_string(const Matrix<Scalar>& m)
{
    std::string out = "[";
    for (Index i = 0; i < m.rows(); ++i) {
        out += i ? ",[" : "[";
        for (Index j = 0; j < m.cols(); ++j) {
            if (j)
                out += ",";
            if constexpr (is_prime_field_v<Scalar>)
                out += std::to_string(m(i, j).value());
            else
                out += std::to_string(m(i, j));
        }
        out += "]";
    }
    return out + "]";
}

} // namespace fcq::homalg
