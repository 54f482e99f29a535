#pragma once

#include "fcq/homalg/complex.hpp"
#include "fcq/report.hpp"

#include <cstdint>
#include <functional>

namespace fcq::homalg {

/// Basis of C^{(x)p}: words u_1...u_p over the letters (basis vectors) of C.
/// A word is encoded in base D (number of letters) with u_1 most significant.
class WordBasis {
public:
    struct Letter {
        int degree;
        Index index;
    };

    WordBasis(const std::map<int, Index>& dims, int p) : p_(p)
    {
        for (const auto& [n, k] : dims) {
            offset_[n] = static_cast<Index>(letters_.size());
            for (Index i = 0; i < k; ++i)
                letters_.push_back({n, i});
        }
        const auto D = static_cast<std::uint64_t>(letters_.size());
        std::uint64_t total = 1;
        for (int k = 0; k < p; ++k) {
            total *= D;
            if (total > (1u << 22))
                throw AlgebraError("steenrod: tensor power too large");
        }
        place_.resize(D == 0 ? 0 : total);
        pow_.assign(static_cast<std::size_t>(p), 1);
        for (int k = p - 2; k >= 0; --k)
            pow_[static_cast<std::size_t>(k)] = pow_[static_cast<std::size_t>(k) + 1] * D;
        for (std::uint64_t code = 0; code < place_.size(); ++code) {
            int deg = 0;
            for (int k = 0; k < p; ++k)
                deg += letters_[digit(code, k)].degree;
            auto& list = words_[deg];
            place_[code] = {deg, static_cast<Index>(list.size())};
            list.push_back(code);
        }
    }

    int p() const { return p_; }
    std::size_t letter_count() const { return letters_.size(); }
    const Letter& letter(std::size_t id) const { return letters_[id]; }
    std::size_t letter_id(int degree, Index i) const { return static_cast<std::size_t>(offset_.at(degree) + i); }

    std::size_t digit(std::uint64_t code, int k) const
    {
        return static_cast<std::size_t>((code / pow_[static_cast<std::size_t>(k)]) % letters_.size());
    }
    std::uint64_t replace(std::uint64_t code, int k, std::size_t letter) const
    {
        const auto old = digit(code, k);
        return code + (static_cast<std::uint64_t>(letter) - old) * pow_[static_cast<std::size_t>(k)];
    }

    int degree_of(std::uint64_t code) const { return place_[code].first; }
    Index position(std::uint64_t code) const { return place_[code].second; }

    std::map<int, Index> dims() const
    {
        std::map<int, Index> out;
        for (const auto& [n, v] : words_)
            out[n] = static_cast<Index>(v.size());
        return out;
    }

    const std::vector<std::uint64_t>& words(int degree) const
    {
        static const std::vector<std::uint64_t> none;
        auto it = words_.find(degree);
        return it == words_.end() ? none : it->second;
    }
    const std::map<int, std::vector<std::uint64_t>>& all_words() const { return words_; }

private:
    int p_;
    std::vector<Letter> letters_;
    std::map<int, Index> offset_;
    std::vector<std::uint64_t> pow_;
    std::vector<std::pair<int, Index>> place_;
    std::map<int, std::vector<std::uint64_t>> words_;
};

namespace detail {

inline int sign_of(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace detail

/// St(C) = C^{(x)p} with Koszul-signed differential and the cyclic action
/// sigma(u_1...u_p) = (-1)^{|u_p|(n-|u_p|)} u_p u_1...u_{p-1}.
template <class Scalar>
CyclicComplex<Scalar> steenrod_complex(const Complex<Scalar>& C, int p)
{
    require_odd_prime(p, "steenrod_complex");
    const WordBasis wb(C.dims(), p);
    std::map<int, Matrix<Scalar>> d, s;
    std::map<int, Matrix<Scalar>> dC;
    for (int n : C.degrees())
        dC[n] = C.d(n);
    for (const auto& [n, list] : wb.all_words()) {
        const Index rows_next = static_cast<Index>(wb.words(n + 1).size());
        Matrix<Scalar> dn = zero_matrix<Scalar>(rows_next, static_cast<Index>(list.size()));
        Matrix<Scalar> sn = zero_matrix<Scalar>(static_cast<Index>(list.size()), static_cast<Index>(list.size()));
        for (std::size_t col = 0; col < list.size(); ++col) {
            const std::uint64_t code = list[col];
            const auto c = static_cast<Index>(col);
            int running = 0;
            for (int k = 0; k < p; ++k) {
                const auto& L = wb.letter(wb.digit(code, k));
                if (C.dim(L.degree + 1) > 0) {
                    const auto& m = dC[L.degree];
                    const Scalar sign(detail::sign_of(running));
                    for (Index r = 0; r < m.rows(); ++r) {
                        if (m(r, L.index) == Scalar(0))
                            continue;
                        const auto tgt = wb.replace(code, k, wb.letter_id(L.degree + 1, r));
                        dn(wb.position(tgt), c) += sign * m(r, L.index);
                    }
                }
                running += L.degree;
            }
            // rotation: last factor to the front
            const auto last = wb.digit(code, p - 1);
            const long e = static_cast<long>(wb.letter(last).degree) * (n - wb.letter(last).degree);
            std::uint64_t rotated = 0;
            for (int k = 0; k < p; ++k)
                rotated = wb.replace(rotated, k, wb.digit(code, (k + p - 1) % p));
            sn(wb.position(rotated), c) = Scalar(detail::sign_of(e));
        }
        if (rows_next > 0)
            d[n] = std::move(dn);
        s[n] = std::move(sn);
    }
    return CyclicComplex<Scalar>(Complex<Scalar>(wb.dims(), d), s, p);
}

/// phi_1 (x) ... (x) phi_p between tensor powers, one chain map per factor.
/// All maps share source and target complexes.
template <class Scalar>
ChainMap<Scalar> tensor_map(const std::vector<const ChainMap<Scalar>*>& phis, const Complex<Scalar>& St_src,
                            const Complex<Scalar>& St_tgt)
{
    const int p = static_cast<int>(phis.size());
    const auto& A = phis.front()->source;
    const auto& B = phis.front()->target;
    const WordBasis ws(A.dims(), p), wt(B.dims(), p);
    std::vector<std::map<int, Matrix<Scalar>>> mats(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k)
        for (int n : A.degrees())
            mats[static_cast<std::size_t>(k)][n] = phis[static_cast<std::size_t>(k)]->at(n);
    std::map<int, Matrix<Scalar>> out;
    for (const auto& [n, list] : ws.all_words()) {
        if (wt.words(n).empty())
            continue;
        Matrix<Scalar> m = zero_matrix<Scalar>(static_cast<Index>(wt.words(n).size()), static_cast<Index>(list.size()));
        for (std::size_t col = 0; col < list.size(); ++col) {
            const auto code = list[col];
            // expand the product of columns factor by factor
            std::function<void(int, std::uint64_t, Scalar)> rec = [&](int k, std::uint64_t acc, Scalar coef) {
                if (k == p) {
                    m(wt.position(acc), static_cast<Index>(col)) += coef;
                    return;
                }
                const auto& L = ws.letter(ws.digit(code, k));
                if (B.dim(L.degree) == 0)
                    return;
                const auto& f = mats[static_cast<std::size_t>(k)][L.degree];
                for (Index r = 0; r < f.rows(); ++r)
                    if (f(r, L.index) != Scalar(0))
                        rec(k + 1, wt.replace(acc, k, wt.letter_id(L.degree, r)), coef * f(r, L.index));
            };
            rec(0, 0, Scalar(1));
        }
        out[n] = std::move(m);
    }
    return ChainMap<Scalar>(St_src, St_tgt, std::move(out));
}

/// St(f) = f^{(x)p}.
template <class Scalar>
ChainMap<Scalar> steenrod_chainmap(const ChainMap<Scalar>& f, int p)
{
    require_odd_prime(p, "steenrod_chainmap");
    const auto S = steenrod_complex(f.source, p);
    const auto T = steenrod_complex(f.target, p);
    std::vector<const ChainMap<Scalar>*> phis(static_cast<std::size_t>(p), &f);
    return tensor_map(phis, S.complex(), T.complex());
}

template <class Scalar>
struct AdditivityDefect {
    ChainMap<Scalar> h;
    std::size_t orbit_representatives = 0;
    VerificationReport report;
};

/// h = sum over orbit representatives of mixed words in {f, g}; checks that
/// its average sum_j sigma^j h sigma^{-j} equals St(f+g) - St(f) - St(g).
template <class Scalar>
AdditivityDefect<Scalar> additivity_defect(const ChainMap<Scalar>& f, const ChainMap<Scalar>& g, int p)
{
    require_odd_prime(p, "additivity_defect");
    if (!(f.source == g.source) || !(f.target == g.target))
        throw AlgebraError("additivity_defect: maps are not parallel");
    const auto SA = steenrod_complex(f.source, p);
    const auto SB = steenrod_complex(f.target, p);

    AdditivityDefect<Scalar> out;
    out.h = ChainMap<Scalar>::zero(SA.complex(), SB.complex());
    const unsigned full = (1u << p) - 1;
    for (unsigned bits = 1; bits < full; ++bits) {
        bool minimal = true;
        for (int r = 1; r < p && minimal; ++r) {
            const unsigned rot = ((bits << r) | (bits >> (p - r))) & full;
            minimal = bits <= rot;
        }
        if (!minimal)
            continue;
        std::vector<const ChainMap<Scalar>*> phis;
        for (int k = 0; k < p; ++k)
            phis.push_back((bits >> k) & 1 ? &g : &f);
        out.h = out.h + tensor_map(phis, SA.complex(), SB.complex());
        ++out.orbit_representatives;
    }

    const auto defect = steenrod_chainmap(f + g, p) - steenrod_chainmap(f, p) - steenrod_chainmap(g, p);
    out.report.name = "additivity";
    out.report.add("orbit count (2^p - 2)/p", out.orbit_representatives == ((1u << p) - 2) / static_cast<unsigned>(p));
    for (const auto& [n, k] : SA.complex().dims()) {
        if (SB.dim(n) == 0)
            continue;
        const auto sa = SA.sigma(n), sb = SB.sigma(n);
        const auto sa_inv = matrix_power(sa, static_cast<unsigned>(p - 1));
        Matrix<Scalar> av = zero_matrix<Scalar>(SB.dim(n), k);
        Matrix<Scalar> left = identity_matrix<Scalar>(SB.dim(n)), right = identity_matrix<Scalar>(k);
        for (int j = 0; j < p; ++j) {
            av += left * out.h.at(n) * right;
            left = sb * left;
            right = right * sa_inv;
        }
        out.report.add("Av(h) = St(f+g) - St(f) - St(g) in degree " + std::to_string(n), av == defect.at(n),
                       "Av(h) = " + matrix_to_string(av) + ", defect = " + matrix_to_string(defect.at(n)));
    }
    out.report.add("St(f+g) - St(f) - St(g) is a chain map", is_chain_map(defect));
    return out;
}

/// The summand of St(A + B) spanned by words mixing letters of A and B; it
/// complements the images of St(A) and St(B) and is a subcomplex.
template <class Scalar>
CyclicComplex<Scalar> direct_sum_complement(const Complex<Scalar>& A, const Complex<Scalar>& B, int p)
{
    const auto S = direct_sum(A, B);
    const auto St = steenrod_complex(S, p);
    const WordBasis wb(S.dims(), p);
    std::map<int, std::vector<Index>> keep;
    for (const auto& [n, list] : wb.all_words()) {
        auto& v = keep[n];
        for (std::size_t i = 0; i < list.size(); ++i) {
            int a = 0;
            for (int k = 0; k < p; ++k) {
                const auto& L = wb.letter(wb.digit(list[i], k));
                a += L.index < A.dim(L.degree) ? 1 : 0;
            }
            if (a > 0 && a < p)
                v.push_back(static_cast<Index>(i));
        }
    }
    return restrict_to(St, keep);
}

/// Increasing filtration F_0 <= ... <= F_p of St(cone(f)) by the number of
/// letters taken from the A-summand.
template <class Scalar>
class ConeFiltration {
public:
    ConeFiltration(const ChainMap<Scalar>& f, int p)
        : f_(f), p_(p), cone_(cone(f)), total_(steenrod_complex(cone_, p)), basis_(cone_.dims(), p)
    {
        for (const auto& [n, list] : basis_.all_words()) {
            for (std::size_t i = 0; i < list.size(); ++i) {
                int a = 0;
                for (int k = 0; k < p; ++k) {
                    const auto& L = basis_.letter(basis_.digit(list[i], k));
                    a += L.index < f.source.dim(L.degree + 1) ? 1 : 0;
                }
                level_[n].push_back(a);
            }
        }
    }

    int p() const { return p_; }
    const Complex<Scalar>& cone_complex() const { return cone_; }
    const CyclicComplex<Scalar>& total() const { return total_; }

    /// Basis positions of words with at most i letters from A.
    std::map<int, std::vector<Index>> span(int i) const { return select([i](int a) { return a <= i; }); }

    /// F_i / F_{i-1}: words with exactly i letters from A.
    CyclicComplex<Scalar> graded_piece(int i) const { return restrict_to(total_, select([i](int a) { return a == i; })); }

    CyclicComplex<Scalar> subcomplex(int i) const { return restrict_to(total_, span(i)); }

    /// F_i is stable under d and sigma.
    bool is_stable(int i) const
    {
        for (const auto& [n, lv] : level_) {
            const auto s = total_.sigma(n);
            const auto d = total_.d(n);
            for (Index c = 0; c < static_cast<Index>(lv.size()); ++c) {
                if (lv[static_cast<std::size_t>(c)] > i)
                    continue;
                for (Index r = 0; r < s.rows(); ++r)
                    if (s(r, c) != Scalar(0) && lv[static_cast<std::size_t>(r)] > i)
                        return false;
                if (d.rows() == 0)
                    continue;
                const auto& up = level_.at(n + 1);
                for (Index r = 0; r < d.rows(); ++r)
                    if (d(r, c) != Scalar(0) && up[static_cast<std::size_t>(r)] > i)
                        return false;
            }
        }
        return true;
    }

    /// F_0 is the image of St(B) under St of the inclusion B -> cone(f).
    bool bottom_is_steenrod_of_target() const
    {
        const auto inc = inclusion_of_target();
        const auto St_inc = steenrod_chainmap(inc, p_);
        const auto SB = steenrod_complex(f_.target, p_);
        const auto F0 = span(0);
        for (const auto& [n, k] : total_.complex().dims()) {
            const auto m = St_inc.at(n);
            const auto& keep = F0.count(n) ? F0.at(n) : std::vector<Index>{};
            if (rank(m) != static_cast<Index>(keep.size()))
                return false;
            std::vector<bool> in(static_cast<std::size_t>(k), false);
            for (auto r : keep)
                in[static_cast<std::size_t>(r)] = true;
            for (Index r = 0; r < m.rows(); ++r)
                for (Index c = 0; c < m.cols(); ++c)
                    if (m(r, c) != Scalar(0) && !in[static_cast<std::size_t>(r)])
                        return false;
            // St(inclusion) intertwines the cyclic actions
            if (SB.dim(n) > 0 && total_.sigma(n) * m != m * SB.sigma(n))
                return false;
        }
        return true;
    }

    /// F_p / F_{p-1} equals St(Sigma A) with its cyclic structure, via St of
    /// the projection cone(f) -> Sigma A.
    bool top_is_steenrod_of_shift() const
    {
        const auto top = graded_piece(p_);
        const auto SA = steenrod_complex(shift(f_.source), p_);
        const auto proj = projection_to_shift();
        const auto St_proj = steenrod_chainmap(proj, p_);
        const auto keep = select([this](int a) { return a == p_; });
        for (const auto& [n, k] : SA.complex().dims()) {
            if (top.dim(n) != k)
                return false;
            // St(proj) restricted to the top words is an isomorphism
            const auto full = St_proj.at(n);
            Matrix<Scalar> m = zero_matrix<Scalar>(k, k);
            const auto& cols = keep.at(n);
            for (Index c = 0; c < k; ++c)
                m.col(c) = full.col(cols[static_cast<std::size_t>(c)]);
            if (rank(m) != k)
                return false;
            if (SA.sigma(n) * m != m * top.sigma(n))
                return false;
            if (SA.dim(n + 1) > 0 && top.dim(n + 1) > 0) {
                Matrix<Scalar> m1 = zero_matrix<Scalar>(SA.dim(n + 1), SA.dim(n + 1));
                const auto& c1 = keep.at(n + 1);
                const auto full1 = St_proj.at(n + 1);
                for (Index c = 0; c < SA.dim(n + 1); ++c)
                    m1.col(c) = full1.col(c1[static_cast<std::size_t>(c)]);
                if (SA.d(n) * m != m1 * top.d(n))
                    return false;
            }
        }
        return true;
    }

    ChainMap<Scalar> inclusion_of_target() const
    {
        std::map<int, Matrix<Scalar>> m;
        for (int n : f_.target.degrees()) {
            const Index a = f_.source.dim(n + 1);
            Matrix<Scalar> x = zero_matrix<Scalar>(cone_.dim(n), f_.target.dim(n));
            x.block(a, 0, f_.target.dim(n), f_.target.dim(n)) = identity_matrix<Scalar>(f_.target.dim(n));
            m[n] = x;
        }
        return ChainMap<Scalar>(f_.target, cone_, m);
    }

    ChainMap<Scalar> projection_to_shift() const
    {
        const auto SA = shift(f_.source);
        std::map<int, Matrix<Scalar>> m;
        for (int n : SA.degrees()) {
            Matrix<Scalar> x = zero_matrix<Scalar>(SA.dim(n), cone_.dim(n));
            x.block(0, 0, SA.dim(n), SA.dim(n)) = identity_matrix<Scalar>(SA.dim(n));
            m[n] = x;
        }
        return ChainMap<Scalar>(cone_, SA, m);
    }

private:
    template <class Pred>
    std::map<int, std::vector<Index>> select(Pred pred) const
    {
        std::map<int, std::vector<Index>> out;
        for (const auto& [n, lv] : level_) {
            auto& v = out[n];
            for (std::size_t i = 0; i < lv.size(); ++i)
                if (pred(lv[i]))
                    v.push_back(static_cast<Index>(i));
        }
        return out;
    }

    ChainMap<Scalar> f_;
    int p_;
    Complex<Scalar> cone_;
    CyclicComplex<Scalar> total_;
    WordBasis basis_;
    std::map<int, std::vector<int>> level_;
};

template <class Scalar>
ConeFiltration<Scalar> cone_filtration(const ChainMap<Scalar>& f, int p)
{
    require_odd_prime(p, "cone_filtration");
    return ConeFiltration<Scalar>(f, p);
}

} // namespace fcq::homalg
