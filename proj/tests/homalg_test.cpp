#include "fcq/homalg/homalg.hpp"

#include <gtest/gtest.h>

using namespace fcq;
using namespace fcq::homalg;

namespace {

using F3 = Zp<3>;
using F5 = Zp<5>;
using F7 = Zp<7>;

template <class S>
Matrix<S> scalar(long c)
{
    Matrix<S> m(1, 1);
    m(0, 0) = S(c);
    return m;
}

template <class S>
Complex<S> interval(long c = 1)
{
    return Complex<S>({{0, 1}, {1, 1}}, {{0, scalar<S>(c)}});
}

} // namespace

TEST(Steenrod, PointIsTrivial)
{
    const auto St = steenrod_complex(Complex<F3>::concentrated(0, 1), 3);
    EXPECT_EQ(St.complex().dims(), (std::map<int, Index>{{0, 1}}));
    EXPECT_EQ(St.sigma(0), scalar<F3>(1));
}

TEST(Steenrod, OddLineRotatesWithoutSign)
{
    const auto St = steenrod_complex(Complex<F3>::concentrated(1, 1), 3);
    EXPECT_EQ(St.dim(3), 1);
    EXPECT_EQ(St.sigma(3), scalar<F3>(1));
    // a single odd letter at p=5: sign (-1)^{1*4} = +1
    EXPECT_EQ(steenrod_complex(Complex<F5>::concentrated(1, 1), 5).sigma(5), scalar<F5>(1));
    // degree-2 line: sign (-1)^{2*4} = +1 as well
    EXPECT_EQ(steenrod_complex(Complex<F3>::concentrated(2, 1), 3).sigma(6), scalar<F3>(1));
}

TEST(Steenrod, IntervalDimensionsAreBinomial)
{
    const auto St = steenrod_complex(interval<F3>(), 3);
    EXPECT_EQ(St.complex().dims(), (std::map<int, Index>{{0, 1}, {1, 3}, {2, 3}, {3, 1}}));
    // the interval is acyclic, so is its tensor cube
    EXPECT_TRUE(cohomology_dims(St.complex()).empty());
}

TEST(Steenrod, RejectsEvenP)
{
    EXPECT_THROW(steenrod_complex(interval<F3>(), 4), AlgebraError);
}

TEST(Steenrod, RandomComplexesSatisfyInvariants)
{
    SeededRng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const auto C = random_complex<F3>(rng, random_dims(rng, -1, 2, 4));
        // constructor asserts d^2 = 0, sigma^p = 1 and sigma d = d sigma
        const auto St = steenrod_complex(C, 3);
        const Index D = C.total_dim();
        EXPECT_EQ(St.complex().total_dim(), D * D * D);
    }
    SeededRng rng5(12);
    for (int trial = 0; trial < 5; ++trial) {
        const auto C = random_complex<F5>(rng5, random_dims(rng5, 0, 1, 4));
        EXPECT_NO_THROW(steenrod_complex(C, 5));
    }
}

TEST(Steenrod, ChainMapBasics)
{
    const auto C = interval<F3>();
    const auto id = steenrod_chainmap(ChainMap<F3>::identity(C), 3);
    const auto St = steenrod_complex(C, 3);
    for (int n : St.complex().degrees())
        EXPECT_EQ(id.at(n), identity_matrix<F3>(St.dim(n)));
    const auto z = steenrod_chainmap(ChainMap<F3>::zero(C, C), 3);
    for (int n : St.complex().degrees())
        EXPECT_TRUE(is_zero<F3>(z.at(n)));
}

TEST(Steenrod, ScalarGoesToPthPower)
{
    const auto pt = Complex<F7>::concentrated(0, 1);
    for (long c = 0; c < 7; ++c) {
        const ChainMap<F7> f(pt, pt, {{0, scalar<F7>(c)}});
        EXPECT_EQ(steenrod_chainmap(f, 3).at(0), scalar<F7>(c * c * c)) << c;
        EXPECT_EQ(steenrod_chainmap(f, 5).at(0), scalar<F7>(c * c * c * c * c)) << c;
    }
}

TEST(Steenrod, FunctorialAndEquivariantOnRandomMaps)
{
    SeededRng rng(2026);
    for (int trial = 0; trial < 12; ++trial) {
        const auto A = random_complex<F3>(rng, random_dims(rng, 0, 1, 2));
        const auto B = random_complex<F3>(rng, random_dims(rng, 0, 1, 3));
        const auto C = random_complex<F3>(rng, random_dims(rng, 0, 1, 2));
        const auto f = random_chain_map(rng, A, B);
        const auto g = random_chain_map(rng, B, C);
        ASSERT_TRUE(is_chain_map(f));
        ASSERT_TRUE(is_chain_map(g));
        const auto Sf = steenrod_chainmap(f, 3);
        const auto Sg = steenrod_chainmap(g, 3);
        const auto Sgf = steenrod_chainmap(compose(g, f), 3);
        EXPECT_TRUE(is_chain_map(Sf));
        EXPECT_TRUE(is_equivariant(Sf, steenrod_complex(A, 3), steenrod_complex(B, 3)));
        const auto comp = compose(Sg, Sf);
        for (int n : Sgf.degrees())
            EXPECT_EQ(Sgf.at(n), comp.at(n));
    }
}

TEST(Additivity, ZeroMapsGiveZero)
{
    const auto C = interval<F3>();
    const auto z = ChainMap<F3>::zero(C, C);
    const auto out = additivity_defect(z, z, 3);
    EXPECT_TRUE(out.report.passed());
    for (int n : out.h.degrees())
        EXPECT_TRUE(is_zero<F3>(out.h.at(n)));
}

TEST(Additivity, IdentityOnPointOverIntegers)
{
    // words in {f,g}^3: 8 in total, 6 mixed, 2 orbits
    const auto pt = Complex<long long>::concentrated(0, 1);
    const auto one = ChainMap<long long>::identity(pt);
    const auto out = additivity_defect(one, one, 3);
    EXPECT_EQ(out.orbit_representatives, 2u);
    EXPECT_EQ(out.h.at(0)(0, 0), 2);
    const auto defect = steenrod_chainmap(one + one, 3) - steenrod_chainmap(one, 3) - steenrod_chainmap(one, 3);
    EXPECT_EQ(defect.at(0)(0, 0), 6);
    EXPECT_TRUE(out.report.passed());
}

TEST(Additivity, RandomCasesOverF3)
{
    SeededRng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const auto A = random_complex<F3>(rng, random_dims(rng, 0, 1, 3));
        const auto B = random_complex<F3>(rng, random_dims(rng, 0, 1, 3));
        const auto f = random_chain_map(rng, A, B);
        const auto g = random_chain_map(rng, A, B);
        const auto out = additivity_defect(f, g, 3);
        EXPECT_TRUE(out.report.passed()) << trial;
    }
}

TEST(Additivity, RejectsNonParallel)
{
    const auto A = interval<F3>();
    const auto B = Complex<F3>::concentrated(0, 1);
    EXPECT_THROW(additivity_defect(ChainMap<F3>::identity(A), ChainMap<F3>::identity(B), 3), AlgebraError);
}

template <class S>
void check_cone_filtration(std::uint64_t seed, int p)
{
    SeededRng rng(seed);
    const auto A = random_complex<S>(rng, random_dims(rng, 0, 1, 2));
    const auto B = random_complex<S>(rng, random_dims(rng, 0, 1, 2));
    const auto f = random_chain_map(rng, A, B);
    const auto F = cone_filtration(f, p);
    for (int i = 0; i <= p; ++i)
        EXPECT_TRUE(F.is_stable(i)) << "F_" << i;
    EXPECT_EQ(F.span(p), F.span(p + 1));
    Index whole = 0;
    for (const auto& [n, v] : F.span(p))
        whole += static_cast<Index>(v.size());
    EXPECT_EQ(whole, F.total().complex().total_dim());
    EXPECT_TRUE(F.bottom_is_steenrod_of_target());
    EXPECT_TRUE(F.top_is_steenrod_of_shift());
    for (int i = 1; i < p; ++i) {
        const auto piece = F.graded_piece(i);
        EXPECT_TRUE(is_degreewise_free(piece)) << "piece " << i;
        EXPECT_TRUE(tate_hypercohomology(piece).vanishes());
    }
}

TEST(ConeFiltration, PiecesP3) { check_cone_filtration<F3>(5, 3); }
TEST(ConeFiltration, PiecesP5) { check_cone_filtration<F5>(6, 5); }

TEST(ConeFiltration, ExteriorModelIsQuotientOfConeOfIdentity)
{
    for (int p : {3, 5}) {
        with_prime(p, [&]<int P>() {
            using S = Zp<P>;
            const auto pt = Complex<S>::concentrated(0, 1);
            const auto F = cone_filtration(ChainMap<S>::identity(pt), p);
            // letters of cone(id): a (degree -1) and b (degree 0); E = words containing an a
            const auto& T = F.total();
            const WordBasis wb(F.cone_complex().dims(), p);
            ExteriorModel<S> E(p);
            for (int k = 1; k <= p; ++k) {
                const int n = -k;
                // permutation: word -> subset of positions holding a (position 1 = first factor)
                std::vector<Index> perm(static_cast<std::size_t>(E.complex().dim(n)));
                for (std::size_t i = 0; i < wb.words(n).size(); ++i) {
                    unsigned S_ = 0;
                    for (int pos = 0; pos < p; ++pos)
                        if (wb.letter(wb.digit(wb.words(n)[i], pos)).degree == -1)
                            S_ |= 1u << pos;
                    perm[static_cast<std::size_t>(E.position(S_))] = static_cast<Index>(i);
                }
                const auto s = T.sigma(n);
                const auto es = E.complex().sigma(n);
                for (Index r = 0; r < es.rows(); ++r)
                    for (Index c = 0; c < es.cols(); ++c)
                        EXPECT_EQ(es(r, c), s(perm[r], perm[c])) << "sigma p=" << p << " k=" << k;
                if (k == 1)
                    continue;
                const auto d = T.d(n);
                const auto ed = E.complex().d(n);
                std::vector<Index> perm_up(static_cast<std::size_t>(E.complex().dim(n + 1)));
                for (std::size_t i = 0; i < wb.words(n + 1).size(); ++i) {
                    unsigned S_ = 0;
                    for (int pos = 0; pos < p; ++pos)
                        if (wb.letter(wb.digit(wb.words(n + 1)[i], pos)).degree == -1)
                            S_ |= 1u << pos;
                    perm_up[static_cast<std::size_t>(E.position(S_))] = static_cast<Index>(i);
                }
                for (Index r = 0; r < ed.rows(); ++r)
                    for (Index c = 0; c < ed.cols(); ++c)
                        EXPECT_EQ(ed(r, c), d(perm_up[r], perm[c])) << "d p=" << p << " k=" << k;
            }
            return 0;
        });
    }
}

TEST(PeriodicResolution, P3ShapeAndCohomology)
{
    const auto R = periodic_resolution<F3>(3);
    EXPECT_EQ(R.res.complex().dims(), (std::map<int, Index>{{-2, 1}, {-1, 3}, {0, 3}}));
    EXPECT_EQ(rank(R.res.d(-2)), 1);
    EXPECT_EQ(rank(R.res.d(-1)), 2);
    EXPECT_EQ(cohomology_dims(R.res.complex()), (std::map<int, Index>{{0, 1}}));
    EXPECT_TRUE(is_chain_map(R.aug));
    EXPECT_TRUE(is_chain_map(R.top));
    // aug induces an isomorphism on H^0: it kills im d^{-1} and is nonzero
    EXPECT_TRUE(is_zero<F3>(R.aug.at(0) * R.res.d(-1)));
    EXPECT_EQ(rank(R.aug.at(0)), 1);
}

TEST(PeriodicResolution, AcyclicAwayFromZero)
{
    for (int p : {5, 7})
        with_prime(p, [&]<int P>() {
            const auto R = periodic_resolution<Zp<P>>(p);
            EXPECT_EQ(cohomology_dims(R.res.complex()), (std::map<int, Index>{{0, 1}}));
            EXPECT_TRUE(is_chain_map(R.aug));
            EXPECT_TRUE(is_chain_map(R.top));
            return 0;
        });
}

TEST(Zeta, GeneratorImagesP3)
{
    const auto Z = zeta_map<F3>(3);
    // column 0 is the generator itself
    Vector<F3> v1 = Z.zeta.at(-1).col(0);
    Vector<F3> want1 = Vector<F3>::Constant(3, F3(0));
    want1(Z.E.position(0b001)) = F3(-1);
    EXPECT_EQ(v1, want1);
    Vector<F3> v2 = Z.zeta.at(-2).col(0);
    Vector<F3> want2 = Vector<F3>::Constant(3, F3(0));
    want2(Z.E.position(0b011)) = F3(-1);
    EXPECT_EQ(v2, want2);
}

TEST(Zeta, GeneratorImageP5DegreeMinus3)
{
    const auto Z = zeta_map<F5>(5);
    Vector<F5> v = Z.zeta.at(-3).col(0);
    Vector<F5> want = Vector<F5>::Constant(Z.E.complex().dim(-3), F5(0));
    // T in {2,3,4,5}, |T| = 2, one run of even length: {2,3}, {3,4}, {4,5}
    for (unsigned S : {0b00111u, 0b01101u, 0b11001u})
        want(Z.E.position(S)) = F5(-1);
    EXPECT_EQ(v, want);
}

TEST(Zeta, EvenRuns)
{
    EXPECT_TRUE(even_runs(0));
    EXPECT_TRUE(even_runs(0b0110));
    EXPECT_FALSE(even_runs(0b0101));
    EXPECT_TRUE(even_runs(0b11011));
    EXPECT_FALSE(even_runs(0b111));
}

TEST(Zeta, VerifyAndTopScalar)
{
    const auto r3 = verify_zeta<F3>(3);
    EXPECT_TRUE(r3.passed());
    EXPECT_EQ(zeta_map<F3>(3).top_value, F3(2));
    EXPECT_EQ(r3.checks.back().name, "gamma-delta-zeta = -1");
    EXPECT_TRUE(verify_zeta<F5>(5).passed());
    EXPECT_EQ(zeta_map<F5>(5).top_value, F5(3));
    EXPECT_TRUE(verify_zeta<F7>(7).passed());
    EXPECT_EQ(zeta_map<F7>(7).top_value, F7(1));
}

TEST(Zeta, BoundaryIsChainMap)
{
    ExteriorModel<F5> E(5);
    EXPECT_TRUE(is_chain_map(E.boundary()));
}

TEST(Tate, RegularModuleVanishes)
{
    EXPECT_TRUE(tate_hypercohomology(regular_module<F3>(3)).vanishes());
    EXPECT_TRUE(tate_hypercohomology(regular_module<F5>(5, 2)).vanishes());
}

TEST(Tate, TrivialModuleIsOneEverywhere)
{
    const auto M = CyclicComplex<F3>::trivial(Complex<F3>::concentrated(0, 1), 3);
    const auto h = tate_hypercohomology(M);
    EXPECT_EQ(h.even, 1);
    EXPECT_EQ(h.odd, 1);
    const auto M2 = CyclicComplex<F5>::trivial(Complex<F5>::concentrated(1, 2), 5);
    EXPECT_EQ(tate_hypercohomology(M2).at(0), 2);
}

TEST(Tate, SteenrodOfAcyclicVanishes)
{
    EXPECT_TRUE(tate_hypercohomology(steenrod_complex(interval<F3>(), 3)).vanishes());
    EXPECT_TRUE(tate_hypercohomology(steenrod_complex(interval<F5>(2), 5)).vanishes());
}

TEST(Tate, SteenrodOfPointIsTrivial)
{
    // St(F_p[n]) = F_p[pn] with trivial action
    const auto h = tate_hypercohomology(steenrod_complex(Complex<F3>::concentrated(1, 1), 3));
    EXPECT_EQ(h.even + h.odd, 2);
}

TEST(Tate, VanishesOnRandomFreeComplexes)
{
    SeededRng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto C = random_complex<F3>(rng, random_dims(rng, -1, 1, 3));
        const auto M = induced_complex(C, 3);
        EXPECT_TRUE(is_degreewise_free(M));
        EXPECT_TRUE(tate_hypercohomology(M).vanishes());
    }
}

TEST(Tate, HypercohomologyIsInvariantUnderFreeComplement)
{
    // St(A + B) = St(A) + St(B) + free part
    SeededRng rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        const auto A = random_complex<F3>(rng, random_dims(rng, 0, 1, 2));
        const auto B = random_complex<F3>(rng, random_dims(rng, 0, 1, 2));
        const auto comp = direct_sum_complement(A, B, 3);
        EXPECT_TRUE(is_degreewise_free(comp));
        const auto hs = tate_hypercohomology(steenrod_complex(direct_sum(A, B), 3));
        const auto ha = tate_hypercohomology(steenrod_complex(A, 3));
        const auto hb = tate_hypercohomology(steenrod_complex(B, 3));
        EXPECT_EQ(hs.even, ha.even + hb.even);
        EXPECT_EQ(hs.odd, ha.odd + hb.odd);
    }
}

TEST(Induced, Examples)
{
    EXPECT_TRUE(is_induced(regular_module<F3>(3)).at(0));
    const auto triv = CyclicComplex<F3>::trivial(Complex<F3>::concentrated(0, 1), 3);
    EXPECT_FALSE(is_induced(triv).at(0));
    const auto triv3 = CyclicComplex<F3>::trivial(Complex<F3>::concentrated(0, 3), 3);
    EXPECT_FALSE(is_induced(triv3).at(0));
}

TEST(Complex, RejectsBadDifferential)
{
    Matrix<F3> one = scalar<F3>(1);
    EXPECT_THROW(Complex<F3>({{0, 1}, {1, 1}, {2, 1}}, {{0, one}, {1, one}}), AlgebraError);
    EXPECT_THROW(Complex<F3>({{0, 2}, {1, 1}}, {{0, one}}), AlgebraError);
}
