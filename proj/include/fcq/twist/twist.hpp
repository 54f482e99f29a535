#pragma once

#include "fcq/homalg/steenrod.hpp"
#include "fcq/twist/superalgebra.hpp"

#include <functional>
#include <memory>

namespace fcq::twist {

/// (-1)^{ij p(p-1)/2}.
inline int sign_factor(long i, long j, int p)
{
    require_odd_prime(p, "sign_factor");
    return koszul(i * j * (static_cast<long>(p) * (p - 1) / 2));
}

/// Degree n piece goes to degree p*n.
inline std::map<int, Index> graded_twist_dims(const std::map<int, Index>& dims, int p)
{
    require_odd_prime(p, "graded_twist_dims");
    std::map<int, Index> out;
    for (const auto& [n, k] : dims)
        if (k != 0)
            out[p * n] = k;
    return out;
}

/// Element of V^{(x)p} concentrated in one degree.
template <class S>
struct TensorElement {
    int degree = 0;
    Vector<S> coeffs;
};

/// Explicit H^0 of mu_p acting on V^{(x)p} for a graded space V with a
/// chosen basis: ker(1 - sigma)/im N, with representatives e_i^{(x)p} and
/// im N spanned by the norms of free orbits of words.
template <class S>
class TateConstruction {
public:
    TateConstruction(std::vector<int> degrees, int p) : degrees_(std::move(degrees)), p_(p)
    {
        static_assert(is_prime_field_v<S>);
        if (characteristic_v<S> != p)
            throw AlgebraError("Tate construction: coefficients must be F_p");
        std::map<int, Index> dims;
        for (int d : degrees_)
            rank_in_degree_.push_back(dims[d]++);
        V_ = homalg::Complex<S>(dims, {});
        St_ = homalg::steenrod_complex(V_, p);
        wb_ = std::make_unique<homalg::WordBasis>(V_.dims(), p);
        for (std::size_t i = 0; i < degrees_.size(); ++i) {
            std::uint64_t code = 0;
            for (int k = 0; k < p; ++k)
                code = wb_->replace(code, k, letter(static_cast<Index>(i)));
            const int n = p * degrees_[i];
            reps_[n].push_back({static_cast<Index>(i), wb_->position(code)});
        }
        // sigma permutes words up to sign
        for (const auto& [n, k] : St_.complex().dims()) {
            const Matrix<S>& sg = St_.sigma(n);
            auto& perm = perm_[n];
            perm.resize(static_cast<std::size_t>(k));
            for (Index c = 0; c < k; ++c)
                for (Index r = 0; r < k; ++r)
                    if (sg(r, c) != S(0)) {
                        perm[static_cast<std::size_t>(c)] = {r, sg(r, c)};
                        break;
                    }
        }
    }

    int p() const { return p_; }
    Index dim() const { return static_cast<Index>(degrees_.size()); }
    const homalg::CyclicComplex<S>& tensor_power_complex() const { return St_; }

    /// Number of sigma-fixed words per degree: free orbits contribute nothing.
    std::map<int, Index> tate_dims() const { return tate_dims_by_orbits(); }

    std::map<int, Index> tate_dims_by_orbits() const
    {
        std::map<int, Index> out;
        for (const auto& [n, perm] : perm_) {
            Index h = 0;
            for (std::size_t c = 0; c < perm.size(); ++c)
                h += perm[c].first == static_cast<Index>(c) && perm[c].second == S(1);
            if (h)
                out[n] = h;
        }
        return out;
    }

    Index tate_dim() const
    {
        Index t = 0;
        for (const auto& [n, h] : tate_dims_by_orbits())
            t += h;
        return t;
    }

    /// dim ker(sigma - 1) - rank N per degree, by elimination.
    std::map<int, Index> tate_dims_by_rank() const
    {
        std::map<int, Index> out;
        for (const auto& [n, k] : St_.complex().dims()) {
            const Index h = (k - rank(St_.sigma_minus_one(n))) - rank(St_.norm(n));
            if (h)
                out[n] = h;
        }
        return out;
    }

    /// v^{(x)p} for v homogeneous.
    TensorElement<S> tensor_power(const Vector<S>& v) const
    {
        int deg = 0;
        bool found = false;
        std::vector<std::pair<std::size_t, S>> support;
        for (Index i = 0; i < v.size(); ++i) {
            if (v(i) == S(0))
                continue;
            if (found && degrees_[static_cast<std::size_t>(i)] != deg)
                throw AlgebraError("tensor_power: element is not homogeneous");
            deg = degrees_[static_cast<std::size_t>(i)];
            found = true;
            support.push_back({letter(i), v(i)});
        }
        TensorElement<S> out{p_ * deg, Vector<S>::Constant(St_.dim(p_ * deg), S(0))};
        if (!found)
            return out;
        std::function<void(int, std::uint64_t, S)> rec = [&](int k, std::uint64_t code, S c) {
            if (k == p_) {
                out.coeffs(wb_->position(code)) += c;
                return;
            }
            for (const auto& [l, x] : support)
                rec(k + 1, wb_->replace(code, k, l), c * x);
        };
        rec(0, 0, S(1));
        return out;
    }

    /// Class of a sigma-invariant element, as coefficients of the [e_i^{(x)p}].
    /// Writes w as fixed words plus norms of orbit leaders and checks the
    /// decomposition.
    Vector<S> classify(const TensorElement<S>& w) const
    {
        Vector<S> out = Vector<S>::Constant(dim(), S(0));
        if (St_.dim(w.degree) == 0)
            return out;
        const auto& perm = perm_.at(w.degree);
        const Index k = St_.dim(w.degree);
        for (Index c = 0; c < k; ++c) {
            const auto& [r, sg] = perm[static_cast<std::size_t>(c)];
            if (sg * w.coeffs(c) != w.coeffs(r))
                throw AlgebraError("classify: element is not sigma-invariant");
        }
        std::vector<bool> fixed(static_cast<std::size_t>(k), false);
        const auto it = reps_.find(w.degree);
        if (it != reps_.end())
            for (const auto& [i, pos] : it->second) {
                out(i) = w.coeffs(pos);
                fixed[static_cast<std::size_t>(pos)] = true;
            }
        // residual on free orbits: coefficient at the leader times N(leader)
        std::vector<bool> seen = fixed;
        for (Index c = 0; c < k; ++c) {
            if (seen[static_cast<std::size_t>(c)])
                continue;
            const S lead = w.coeffs(c);
            Index cur = c;
            S acc(1);
            for (int j = 0; j < p_; ++j) {
                if (j > 0 && cur == c)
                    throw AlgebraError("classify: orbit is not free");
                seen[static_cast<std::size_t>(cur)] = true;
                if (w.coeffs(cur) != lead * acc)
                    throw AlgebraError("classify: representatives do not span the Tate group");
                const auto& [r, sg] = perm[static_cast<std::size_t>(cur)];
                acc = acc * sg;
                cur = r;
            }
        }
        return out;
    }

    /// Product in the tensor-power algebra: (u_1..u_p)(v_1..v_p) =
    /// (-1)^{sum_{i<j}|v_i||u_j|} (u_1 v_1)...(u_p v_p), with the letter
    /// products given by `mul` (basis index pair -> vector).
    TensorElement<S> product(const TensorElement<S>& u, const TensorElement<S>& v,
                             const std::function<Vector<S>(Index, Index)>& mul) const
    {
        TensorElement<S> out{u.degree + v.degree, Vector<S>::Constant(St_.dim(u.degree + v.degree), S(0))};
        const auto& wu = wb_->words(u.degree);
        const auto& wv = wb_->words(v.degree);
        for (std::size_t a = 0; a < wu.size(); ++a) {
            const S cu = u.coeffs(static_cast<Index>(a));
            if (cu == S(0))
                continue;
            for (std::size_t b = 0; b < wv.size(); ++b) {
                const S cv = v.coeffs(static_cast<Index>(b));
                if (cv == S(0))
                    continue;
                long e = 0;
                for (int i = 0; i < p_; ++i)
                    for (int j = i + 1; j < p_; ++j)
                        e += static_cast<long>(wb_->letter(wb_->digit(wv[b], i)).degree) *
                             wb_->letter(wb_->digit(wu[a], j)).degree;
                std::vector<Vector<S>> factors;
                for (int k = 0; k < p_; ++k)
                    factors.push_back(mul(basis_index(wb_->digit(wu[a], k)), basis_index(wb_->digit(wv[b], k))));
                std::function<void(int, std::uint64_t, S)> rec = [&](int k, std::uint64_t code, S c) {
                    if (k == p_) {
                        out.coeffs(wb_->position(code)) += c;
                        return;
                    }
                    const auto& f = factors[static_cast<std::size_t>(k)];
                    for (Index l = 0; l < f.size(); ++l)
                        if (f(l) != S(0))
                            rec(k + 1, wb_->replace(code, k, letter(l)), c * f(l));
                };
                rec(0, 0, cu * cv * S(koszul(e)));
            }
        }
        return out;
    }

    TensorElement<S> representative(Index i) const { return tensor_power(basis(i)); }

    Vector<S> basis(Index i) const
    {
        Vector<S> v = Vector<S>::Constant(dim(), S(0));
        v(i) = S(1);
        return v;
    }

private:
    std::size_t letter(Index i) const
    {
        return wb_->letter_id(degrees_[static_cast<std::size_t>(i)], rank_in_degree_[static_cast<std::size_t>(i)]);
    }

    Index basis_index(std::size_t letter_id) const
    {
        const auto& L = wb_->letter(letter_id);
        for (std::size_t i = 0; i < degrees_.size(); ++i)
            if (degrees_[i] == L.degree && rank_in_degree_[i] == L.index)
                return static_cast<Index>(i);
        throw AlgebraError("unknown letter");
    }

    std::vector<int> degrees_;
    std::vector<Index> rank_in_degree_;
    int p_;
    homalg::Complex<S> V_;
    homalg::CyclicComplex<S> St_;
    std::unique_ptr<homalg::WordBasis> wb_;
    std::map<int, std::vector<std::pair<Index, Index>>> reps_; // degree -> (basis index, word position)
    std::map<int, std::vector<std::pair<Index, S>>> perm_; // sigma(word c) = sign * word r
};

/// A^(1) = H^0(mu_p, A^{(x)p}) with the induced product, in the basis
/// [e_i^{(x)p}].
template <class S>
SuperAlgebra<S> frobenius_twist_algebra(const SuperAlgebra<S>& A, int p)
{
    const TateConstruction<S> T(A.degrees(), p);
    if (T.tate_dim() != A.dim())
        throw AlgebraError("frobenius_twist_algebra: Tate group has the wrong dimension");
    const Index n = A.dim();
    Matrix<S> mult = zero_matrix<S>(n, n * n);
    const auto mul = [&A](Index i, Index j) { return A.product(i, j); };
    std::vector<TensorElement<S>> reps;
    for (Index i = 0; i < n; ++i)
        reps.push_back(T.representative(i));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            mult.col(i * n + j) = T.classify(T.product(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)], mul));
    const Vector<S> unit = T.classify(T.tensor_power(A.unit()));
    std::vector<std::string> names;
    std::vector<int> degs;
    for (Index i = 0; i < n; ++i) {
        names.push_back(A.names()[static_cast<std::size_t>(i)] + "^(1)");
        degs.push_back(p * A.degree(i));
    }
    return SuperAlgebra<S>(names, degs, mult, unit, A.graded_commutative());
}

/// f^(1): [a^{(x)p}] -> [f(a)^{(x)p}] for a degree-preserving linear map.
template <class S>
Matrix<S> twist_linear_map(const std::vector<int>& src_degrees, const std::vector<int>& tgt_degrees,
                           const Matrix<S>& f, int p)
{
    const TateConstruction<S> T(tgt_degrees, p);
    Matrix<S> out = zero_matrix<S>(f.rows(), f.cols());
    for (Index i = 0; i < f.cols(); ++i) {
        const Vector<S> img = f.col(i);
        auto tp = T.tensor_power(img);
        if (!img.isZero() && tp.degree != p * src_degrees[static_cast<std::size_t>(i)])
            throw AlgebraError("twist_linear_map: map does not preserve degree");
        out.col(i) = T.classify(tp);
    }
    return out;
}

template <class S>
AlgebraMap<S> twist_map(const AlgebraMap<S>& f, int p)
{
    return {frobenius_twist_algebra(f.source, p), frobenius_twist_algebra(f.target, p),
            twist_linear_map<S>(f.source.degrees(), f.target.degrees(), f.matrix, p)};
}

/// Compares the structure constants of A^(1) with sign_factor times those
/// of A.
template <class S>
VerificationReport sign_lemma_report(const SuperAlgebra<S>& A, int p)
{
    const auto A1 = frobenius_twist_algebra(A, p);
    VerificationReport rep;
    rep.name = "sign-lemma p=" + std::to_string(p);
    for (Index i = 0; i < A.dim(); ++i)
        for (Index j = 0; j < A.dim(); ++j) {
            const S sgn(sign_factor(A.degree(i), A.degree(j), p));
            const Vector<S> want = sgn * A.product(i, j);
            const Vector<S> got = A1.product(i, j);
            if (A.product(i, j).isZero())
                continue;
            rep.add("m(" + A1.names()[static_cast<std::size_t>(i)] + ", " + A1.names()[static_cast<std::size_t>(j)] +
                        ") = " + std::to_string(sign_factor(A.degree(i), A.degree(j), p)) + " m",
                    want == got);
        }
    rep.add("dim A^(1) = dim A", A1.dim() == A.dim());
    bool dilated = true;
    for (Index i = 0; i < A.dim(); ++i)
        dilated = dilated && A1.degree(i) == p * A.degree(i);
    rep.add("degrees multiplied by p", dilated);
    return rep;
}

/// Hopf algebra tables: coproduct is dim^2 x dim (row j*dim+k for e_j (x) e_k),
/// counit 1 x dim, antipode dim x dim.
template <class S>
struct SuperHopf {
    SuperAlgebra<S> alg;
    Matrix<S> coproduct;
    Matrix<S> counit;
    Matrix<S> antipode;

    VerificationReport axioms() const
    {
        VerificationReport rep;
        rep.name = "hopf axioms";
        rep.merge(alg.axioms());
        const Index n = alg.dim();
        const Matrix<S> id = identity_matrix<S>(n);
        auto kron = [](const Matrix<S>& a, const Matrix<S>& b) {
            Matrix<S> out = zero_matrix<S>(a.rows() * b.rows(), a.cols() * b.cols());
            for (Index i = 0; i < a.rows(); ++i)
                for (Index j = 0; j < a.cols(); ++j)
                    out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
            return out;
        };
        // Koszul signs do not enter (D (x) 1) and (1 (x) D) since D has degree 0.
        rep.add("coassociativity", Matrix<S>(kron(coproduct, id) * coproduct) == Matrix<S>(kron(id, coproduct) * coproduct));
        rep.add("left counit", Matrix<S>(kron(counit, id) * coproduct) == id);
        rep.add("right counit", Matrix<S>(kron(id, counit) * coproduct) == id);
        const Matrix<S> ue = alg.unit() * counit;
        Matrix<S> left = zero_matrix<S>(n, n), right = zero_matrix<S>(n, n);
        for (Index i = 0; i < n; ++i) {
            const Vector<S> Si = kron(antipode, id) * coproduct.col(i);
            const Vector<S> iS = kron(id, antipode) * coproduct.col(i);
            left.col(i) = alg.mult() * Si;
            right.col(i) = alg.mult() * iS;
        }
        rep.add("antipode (S (x) 1)", left == ue);
        rep.add("antipode (1 (x) S)", right == ue);
        bool mult = true, counit_mult = true, homog = true;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                const Vector<S> lhs = coproduct * alg.product(i, j);
                const Vector<S> rhs = alg.tensor_mul(coproduct.col(i), coproduct.col(j));
                mult = mult && lhs == rhs;
                const S a = (counit * alg.product(i, j))(0, 0);
                counit_mult = counit_mult && a == counit(0, i) * counit(0, j);
            }
        for (Index i = 0; i < n; ++i)
            for (Index r = 0; r < n * n; ++r)
                if (coproduct(r, i) != S(0))
                    homog = homog && alg.degree(r / n) + alg.degree(r % n) == alg.degree(i);
        rep.add("coproduct is an algebra map", mult);
        rep.add("counit is an algebra map", counit_mult);
        rep.add("coproduct preserves degree", homog);
        rep.add("coproduct of unit", Matrix<S>(coproduct * alg.unit()) == kron(alg.unit(), alg.unit()));
        return rep;
    }
};

/// Twist of a Hopf algebra on the identification A^(1) = A: product with the
/// sign lemma, coproduct terms e_j (x) e_k scaled by (-1)^{C(p,2)|e_j||e_k|},
/// counit eps^p (= eps over F_p), antipode unchanged.
template <class S>
SuperHopf<S> hopf_twist(const SuperHopf<S>& H, int p)
{
    const auto rep = H.axioms();
    if (!rep.passed())
        throw AlgebraError("hopf_twist: input is not a Hopf algebra");
    SuperHopf<S> out;
    out.alg = frobenius_twist_algebra(H.alg, p);
    const Index n = H.alg.dim();
    out.coproduct = H.coproduct;
    for (Index r = 0; r < n * n; ++r) {
        const S sgn(sign_factor(H.alg.degree(r / n), H.alg.degree(r % n), p));
        out.coproduct.row(r) *= sgn;
    }
    out.counit = H.counit;
    for (Index i = 0; i < n; ++i)
        out.counit(0, i) = out.counit(0, i).pow(static_cast<std::uint64_t>(p));
    out.antipode = H.antipode;
    return out;
}

/// Coproduct of A^(1) computed from the Tate construction on A (x) A:
/// [D(e)^{(x)p}] classified there, then unshuffled to A^(1) (x) A^(1).
template <class S>
Matrix<S> twisted_coproduct_explicit(const SuperHopf<S>& H, int p)
{
    const Index n = H.alg.dim();
    std::vector<int> degs;
    for (Index r = 0; r < n * n; ++r)
        degs.push_back(H.alg.degree(r / n) + H.alg.degree(r % n));
    const TateConstruction<S> T(degs, p);
    Matrix<S> out = zero_matrix<S>(n * n, n);
    for (Index i = 0; i < n; ++i) {
        const Vector<S> c = T.classify(T.tensor_power(H.coproduct.col(i)));
        for (Index r = 0; r < n * n; ++r)
            out(r, i) = c(r) * S(koszul(static_cast<long>(H.alg.degree(r / n)) * H.alg.degree(r % n) *
                                        (static_cast<long>(p) * (p - 1) / 2)));
    }
    return out;
}

/// F_p[g]/(g^2 - 1) with g group-like.
template <class S>
SuperHopf<S> group_algebra_z2()
{
    auto A = AlgebraBuilder<S>({"1", "g"}, {0, 0}, 0).set(1, 1, 0, S(1)).build(true);
    Matrix<S> D = zero_matrix<S>(4, 2);
    D(0, 0) = S(1);
    D(3, 1) = S(1);
    Matrix<S> e(1, 2);
    e << S(1), S(1);
    return {A, D, e, identity_matrix<S>(2)};
}

/// Exterior algebra on primitive odd generators.
template <class S>
SuperHopf<S> primitive_exterior(const std::vector<std::string>& gens, const std::vector<int>& degrees)
{
    const auto A = exterior<S>(gens, degrees);
    const Index n = A.dim();
    const int k = static_cast<int>(gens.size());
    Matrix<S> D = zero_matrix<S>(n * n, n);
    Matrix<S> eps = zero_matrix<S>(1, n);
    Matrix<S> Smat = zero_matrix<S>(n, n);
    auto unit2 = [&] {
        Vector<S> v = Vector<S>::Constant(n * n, S(0));
        v(0) = S(1);
        return v;
    };
    for (unsigned m = 0; m < (1u << k); ++m) {
        // D(e_m) = product of D(generators) in increasing order
        Vector<S> acc = unit2();
        int len = 0;
        for (int g = 0; g < k; ++g) {
            if (!((m >> g) & 1))
                continue;
            Vector<S> prim = Vector<S>::Constant(n * n, S(0));
            const Index gi = static_cast<Index>(1u << g);
            prim(gi * n + 0) += S(1);
            prim(0 * n + gi) += S(1);
            acc = A.tensor_mul(acc, prim);
            ++len;
        }
        D.col(m) = acc;
        // S is an anti-homomorphism; the reversal sign cancels against reordering
        Smat(m, m) = S(koszul(len));
    }
    eps(0, 0) = S(1);
    return {A, D, eps, Smat};
}

} // namespace fcq::twist
