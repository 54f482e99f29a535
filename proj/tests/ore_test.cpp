#include "fcq/exactalg/cyclotomic.hpp"
#include "fcq/ore/centrality.hpp"
#include "fcq/ore/ore.hpp"
#include "fcq/rng.hpp"

#include <gtest/gtest.h>

using namespace fcq;
using namespace fcq::ore;

namespace {

WeylElement X(int a = 1) { return WeylElement::x(a); }
WeylElement D(int b = 1) { return WeylElement::d(b); }
WeylElement H() { return WeylElement::hbar(); }
WeylElement W() { return WeylElement::w(); }

WeylElement random_weyl(SeededRng& rng, std::uint32_t ch = 0)
{
    WeylElement u(ch);
    for (int t = 0; t < 3; ++t)
        u = u + WeylElement::monomial(static_cast<int>(rng.uniform(-2, 2)), static_cast<int>(rng.uniform(0, 2)),
                                      Integer(rng.uniform(-3, 3)), static_cast<int>(rng.uniform(0, 1)), ch);
    return u;
}

QTorusElement random_qtorus(SeededRng& rng)
{
    QTorusElement u;
    for (int t = 0; t < 3; ++t)
        u = u + QTorusElement::monomial(static_cast<int>(rng.uniform(-2, 2)), static_cast<int>(rng.uniform(-2, 2)),
                                        Integer(rng.uniform(-3, 3)), static_cast<int>(rng.uniform(-1, 1)));
    return u;
}

Poly wpoly(std::initializer_list<std::pair<std::vector<int>, long>> terms, std::uint32_t ch = 0)
{
    Poly f(wform_variables(), ch);
    for (const auto& [e, c] : terms)
        f.add_term(e, Integer(c));
    return f;
}

} // namespace

TEST(Weyl, Examples)
{
    EXPECT_EQ(D() * X(), X() * D() + H());
    EXPECT_EQ((D() * X()).to_string(), "x*d + h");
    EXPECT_EQ(D() * X(-1), X(-1) * D() - WeylElement::monomial(-2, 0, 1, 1));
    // x^3 d^3 = w (w - h)(w - 2h)
    EXPECT_EQ(X(3) * D(3), W() * (W() - H()) * (W() - Integer(2) * H()));
    EXPECT_EQ((X(3) * D(3)).reduce_mod(3), (W().pow(3) - H().pow(2) * W()).reduce_mod(3));
}

TEST(Weyl, Commutators)
{
    EXPECT_EQ(weyl_commutator(W(), X()), H() * X());
    for (int p : {3, 5, 7}) {
        const auto c = weyl_commutator(X(p), D());
        EXPECT_EQ(c, Integer(-p) * WeylElement::monomial(p - 1, 0, 1, 1));
        EXPECT_TRUE(c.reduce_mod(static_cast<std::uint32_t>(p)).is_zero());
    }
    SeededRng rng(3);
    for (int t = 0; t < 10; ++t) {
        const auto u = random_weyl(rng);
        EXPECT_TRUE(weyl_commutator(H(), u).is_zero());
        EXPECT_TRUE(weyl_commutator(u, u).is_zero());
    }
}

TEST(Weyl, AssociativeAndUnital)
{
    SeededRng rng(4);
    const auto one = WeylElement::constant(1);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_weyl(rng), b = random_weyl(rng), c = random_weyl(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(one * a, a);
        EXPECT_EQ(a * one, a);
    }
    // mod 3 as well
    for (int t = 0; t < 10; ++t) {
        const auto a = random_weyl(rng, 3), b = random_weyl(rng, 3), c = random_weyl(rng, 3);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(Weyl, WFormRoundTripAndProductOracle)
{
    SeededRng rng(5);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_weyl(rng), b = random_weyl(rng);
        EXPECT_EQ(from_wform(to_wform(a)), a);
        EXPECT_EQ(to_wform(a * b), wform_mul(to_wform(a), to_wform(b)));
    }
}

TEST(Weyl, FrobeniusImages)
{
    EXPECT_EQ(frobenius_weyl(1, 0, 3), WeylElement::x(3, 3));
    EXPECT_EQ(frobenius_weyl(0, 1, 3), WeylElement::d(3, 3));
    EXPECT_EQ(frobenius_weyl(0, 0, 5), WeylElement::constant(1, 5));
    EXPECT_EQ(frobenius_weyl(-1, 2, 3), WeylElement::monomial(-3, 6, 1, 0, 3));
    for (int p : {3, 5, 7}) {
        EXPECT_TRUE(weyl_frobenius_report(p).passed()) << weyl_frobenius_report(p).failure_summary();
        EXPECT_TRUE(weyl_centrality_report(p).passed()) << weyl_centrality_report(p).failure_summary();
    }
    // over Z the identity holds but centrality does not
    EXPECT_FALSE(weyl_commutator(D(3), X()).is_zero());
}

TEST(Coulomb, BasisExamples)
{
    // r = 1, n = 1: (w - h) x = x^2 d
    EXPECT_EQ(to_weyl(CoulombElement::basis(1, 1)), X(2) * D());
    EXPECT_EQ(to_weyl(CoulombElement::basis(1, -1)), X(-1));
    EXPECT_EQ(to_weyl(CoulombElement::basis(3, 0)), WeylElement::constant(1));
    const auto two = Integer(2);
    EXPECT_EQ(to_weyl(CoulombElement::basis(2, 1)), (two * W() - H()) * (two * W() - two * H()) * X());
}

TEST(Coulomb, ProductExamples)
{
    for (int r : {0, 1, 2, 3}) {
        EXPECT_EQ(CoulombElement::basis(r, 1) * CoulombElement::basis(r, 1), CoulombElement::basis(r, 2));
        // e_1 e_{-1} = prod_{i=1}^r (r w - i h)
        EXPECT_EQ(CoulombElement::basis(r, 1) * CoulombElement::basis(r, -1),
                  CoulombElement::scalar(r, coulomb_factor(r, 1)));
        // e_{-1} e_1 = prod_{i=0}^{r-1} (r w + i h)
        Poly want = Poly::constant(wform_variables(), 1);
        for (int i = 0; i < r; ++i)
            want *= wpoly({{{1, 0}, r}, {{0, 1}, i}});
        EXPECT_EQ(CoulombElement::basis(r, -1) * CoulombElement::basis(r, 1), CoulombElement::scalar(r, want));
    }
    EXPECT_EQ((CoulombElement::basis(1, 1, 3) * CoulombElement::basis(1, 1, 3)).to_string(), "e(2)");
}

TEST(Coulomb, ProductMatchesWFormOracleAndIsAssociative)
{
    SeededRng rng(6);
    for (int r : {1, 2}) {
        auto rnd = [&] {
            CoulombElement u(r, 0);
            for (int t = 0; t < 2; ++t)
                u.add(static_cast<int>(rng.uniform(-2, 2)),
                      wpoly({{{static_cast<int>(rng.uniform(0, 1)), static_cast<int>(rng.uniform(0, 1))},
                              rng.uniform(1, 3)}}));
            return u;
        };
        for (int t = 0; t < 5; ++t) {
            const auto a = rnd(), b = rnd(), c = rnd();
            const auto ab = a * b;
            // w-form oracle: multiply g B_n x^n directly
            WForm fa, fb;
            for (const auto& [n, g] : a.coefficients())
                fa[n] = g * coulomb_factor(r, n);
            for (const auto& [n, g] : b.coefficients())
                fb[n] = g * coulomb_factor(r, n);
            EXPECT_EQ(ab, coulomb_from_wform(wform_mul(fa, fb), r, 0));
            EXPECT_EQ((a * b) * c, a * (b * c));
        }
    }
}

TEST(Coulomb, ProductIdentityReport)
{
    for (int r : {1, 2, 3})
        EXPECT_TRUE(coulomb_product_report(r, 4).passed()) << coulomb_product_report(r, 4).failure_summary();
}

TEST(Coulomb, NotInBasisIsHardError)
{
    WForm f{{1, Poly::constant(wform_variables(), 1)}};
    EXPECT_THROW(coulomb_from_wform(f, 1, 0), AlgebraError);
}

TEST(Coulomb, Membership)
{
    const auto m = coulomb_membership((X(2) * D()).reduce_mod(3), 1);
    ASSERT_TRUE(m.accepted());
    EXPECT_EQ(*m.element, CoulombElement::basis(1, 1, 3));
    const auto x = coulomb_membership(WeylElement::x(1, 3), 1);
    EXPECT_FALSE(x.accepted());
    EXPECT_EQ(x.failing_n, 1);
    EXPECT_TRUE(coulomb_membership(WeylElement::x(-2, 3), 1).accepted());
    EXPECT_THROW(coulomb_membership(WeylElement::x(1, 3), 3), AlgebraError);

    // round trips for p not dividing r
    SeededRng rng(7);
    for (int r : {1, 2}) {
        for (int t = 0; t < 5; ++t) {
            CoulombElement u(r, 5);
            u.add(static_cast<int>(rng.uniform(-2, 2)), wpoly({{{1, 0}, rng.uniform(1, 4)}}, 5));
            u.add(static_cast<int>(rng.uniform(-2, 2)), wpoly({{{0, 1}, rng.uniform(1, 4)}}, 5));
            const auto back = coulomb_membership(to_weyl(u), r);
            ASSERT_TRUE(back.accepted());
            EXPECT_EQ(*back.element, u);
        }
    }
}

TEST(Coulomb, DegenerateWhenPDividesR)
{
    // lift of e_1 e_{-1} at r = 3 has every coefficient divisible by 3
    const auto lifted = to_weyl(CoulombElement::basis(3, 1) * CoulombElement::basis(3, -1));
    EXPECT_FALSE(lifted.is_zero());
    EXPECT_TRUE(lifted.reduce_mod(3).is_zero());
    EXPECT_TRUE((CoulombElement::basis(3, 1, 3) * CoulombElement::basis(3, -1, 3)).is_zero());
}

TEST(Coulomb, FrobeniusImages)
{
    const auto Fx = coulomb_frobenius(1, 3, CoulombGenerator::XInverse);
    EXPECT_EQ(to_weyl(Fx), WeylElement::x(-3, 3));
    EXPECT_EQ(coulomb_frobenius(2, 5, CoulombGenerator::E1), CoulombElement::basis(2, 5, 5));
    const auto Fw = coulomb_frobenius(1, 3, CoulombGenerator::W);
    const Poly w = Poly::variable(wform_variables(), "w", 3), h = Poly::variable(wform_variables(), "h", 3);
    EXPECT_EQ(Fw.coefficient(0), w.pow(3) - h.pow(2) * w);
    EXPECT_EQ(parse_coulomb_generator("e(1)"), CoulombGenerator::E1);
    EXPECT_FALSE(parse_coulomb_generator("e(2)").has_value());
    // [F(w), e_1] = 0 mod 3 at r = 1, but not over Z
    EXPECT_TRUE(coulomb_commutator(Fw, CoulombElement::basis(1, 1, 3)).is_zero());
    const auto Fw_lift = Fw.lift();
    EXPECT_FALSE(coulomb_commutator(Fw_lift, CoulombElement::basis(1, 1)).is_zero());
}

TEST(Coulomb, FrobeniusReports)
{
    for (int p : {3, 5})
        for (int r : {1, 2, 3}) {
            const auto a = coulomb_frobenius_report(r, p);
            EXPECT_TRUE(a.passed()) << a.failure_summary();
            const auto b = coulomb_frobenius_structure_report(r, p, 9);
            EXPECT_TRUE(b.passed()) << b.failure_summary();
        }
}

TEST(Coulomb, ClassicalAlgebra)
{
    const auto e1 = ClassicalElement::generator(2, 3, CoulombGenerator::E1);
    const auto em = ClassicalElement::generator(2, 3, CoulombGenerator::XInverse);
    // e_1 e_{-1} = (2w)^2 = 4 w^2 = w^2 mod 3
    ClassicalElement want(2, 3);
    want.add(0, Poly::monomial({"w"}, {2}, 1, 3));
    EXPECT_EQ(e1 * em, want);
    EXPECT_EQ(classical_reduction(CoulombElement::basis(2, 1, 3) * CoulombElement::basis(2, -1, 3)), want);
}

TEST(QTorus, Examples)
{
    using Q = QTorusElement;
    EXPECT_EQ(Q::y() * Q::x(), Q::q() * Q::x() * Q::y());
    EXPECT_EQ((Q::y() * Q::x()).to_string(), "q*x*y");
    EXPECT_EQ(Q::x() * Q::y(), Q::monomial(1, 1));
    // (1 - y) x (1 - y) x = (1 - y)(1 - q^-1 y) x^2
    const Q f = (Q::constant(1) - Q::y()) * Q::x();
    EXPECT_EQ(f * f, (Q::constant(1) - Q::y()) * (Q::constant(1) - Q::monomial(0, 1, 1, -1)) * Q::x(2));
}

TEST(QTorus, AssociativeAndUnital)
{
    SeededRng rng(8);
    const auto one = QTorusElement::constant(1);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_qtorus(rng), b = random_qtorus(rng), c = random_qtorus(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(one * a, a);
        EXPECT_EQ(a * one, a);
    }
}

TEST(KTheory, BasisExamples)
{
    using Q = QTorusElement;
    EXPECT_EQ(k_basis(1, 1), (Q::constant(1) - Q::y()) * Q::x());
    EXPECT_EQ(k_basis(1, -1), Q::x(-1));
    EXPECT_EQ(k_basis(2, 1),
              (Q::constant(1) - Q::y(2)) * (Q::constant(1) - Q::monomial(0, 2, 1, -1)) * Q::x());
}

TEST(KTheory, ProductRuleOnNonnegativeAndNonpositiveIndices)
{
    // oracle: x^n g(y) = g(q^-n y) x^n
    for (int r : {1, 2})
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= 3; ++m) {
                EXPECT_EQ(k_basis(r, n) * k_basis(r, m), k_basis(r, n + m));
                EXPECT_EQ(k_basis(r, -n) * k_basis(r, -m), k_basis(r, -n - m));
            }
}

TEST(KTheory, MixedSignProductsLeaveTheBasis)
{
    // f_1 f_{-1} = prod_{i<r}(1 - y^r q^-i), not f_0 = 1
    EXPECT_EQ(k_basis(1, 1) * k_basis(1, -1), QTorusElement::constant(1) - QTorusElement::y(1));
    for (int r : {1, 2}) {
        const auto got = k_basis(r, 1) * k_basis(r, -1);
        EXPECT_EQ(got, QTorusElement::left(k_factor(r, r), 0));
        EXPECT_FALSE(ktheory_product_report(r, 3).passed());
    }
}

TEST(KTheory, CentralMapAndCyclotomicIdentity)
{
    const auto id = k_central_map(1, 1);
    EXPECT_EQ(id.x_inverse, QTorusElement::x(-1));
    EXPECT_EQ(id.y, QTorusElement::y(1));
    EXPECT_EQ(id.f1, k_basis(1, 1));
    // n = 2, r = 1: (1 - y)(1 - y q^-1) = 1 - y^2 mod q + 1
    const Poly d2 = poly_reduce(k_factor(1, 2) - (Poly::constant(k_coefficient_variables(), 1) -
                                                  Poly::monomial(k_coefficient_variables(), {0, 2}, 1)),
                                ModCyclotomic{2, "q"});
    EXPECT_TRUE(d2.is_zero());
    const Poly d3 = poly_reduce(k_factor(1, 3) - (Poly::constant(k_coefficient_variables(), 1) -
                                                  Poly::monomial(k_coefficient_variables(), {0, 3}, 1)),
                                ModCyclotomic{3, "q"});
    EXPECT_TRUE(d3.is_zero());
    for (int n : {2, 3, 4, 6})
        for (int r : {1, 2})
            EXPECT_TRUE(root_of_unity_report(r, n).passed()) << root_of_unity_report(r, n).failure_summary();
    // [x^n, y] = (1 - q^n) x^n y, nonzero before reduction
    EXPECT_EQ(qtorus_commutator(QTorusElement::x(3), QTorusElement::y()),
              QTorusElement::monomial(3, 1) - QTorusElement::monomial(3, 1, 1, 3));
    EXPECT_TRUE(qtorus_commutator(QTorusElement::x(3), QTorusElement::y()).reduce_cyclotomic(3).is_zero());
}

TEST(Adams, Examples)
{
    const std::vector<std::string> v{"y"};
    const Poly f = Poly::monomial(v, {1}, 1) + Poly::monomial(v, {-1}, 1);
    EXPECT_EQ(adams(f, 2), Poly::monomial(v, {2}, 1) + Poly::monomial(v, {-2}, 1));
    EXPECT_EQ(adams(f, 1), f);
    EXPECT_THROW(adams(f, 0), AlgebraError);
    EXPECT_TRUE(adams_report(5).passed()) << adams_report(5).failure_summary();
}

TEST(Centrality, GenericReportListsEveryPair)
{
    const Named<WeylElement> imgs{{"h", H()}, {"x^3", X(3)}};
    const Named<WeylElement> gens{{"x", X()}, {"d", D()}};
    const auto rep = centrality_report(imgs, gens, weyl_commutator,
                                       [](const WeylElement& c) { return c.reduce_mod(3); }, "mod 3");
    EXPECT_EQ(rep.checks.size(), 4u);
    EXPECT_TRUE(rep.passed());
    const auto over_z =
        centrality_report(imgs, gens, weyl_commutator, [](const WeylElement& c) { return c; }, "over Z");
    EXPECT_EQ(over_z.failures(), 1u);
}
