#include "fcq/cli/compute.hpp"
#include "fcq/cli/expr.hpp"
#include "fcq/cli/structures.hpp"
#include "fcq/cli/suite.hpp"
#include "fcq/homalg/tate.hpp"
#include "fcq/twist/twist.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>

using namespace fcq;
using namespace fcq::cli;

namespace {

using F3 = Zp<3>;
using F5 = Zp<5>;

std::string run(const std::string& alg, const std::string& expr, std::optional<std::uint32_t> p = {},
                std::optional<int> r = {}, std::optional<int> n = {})
{
    ComputeConfig c;
    c.alg = alg;
    c.p = p;
    c.r = r;
    c.n = n;
    return compute(c, expr).text;
}

Json load_golden(const std::string& name)
{
    std::ifstream in(std::string(FCQ_GOLDEN_DIR) + "/" + name);
    if (!in)
        throw std::runtime_error("missing golden file " + name);
    return Json::parse(in);
}

RunConfig quiet(unsigned threads = 1)
{
    RunConfig c;
    c.threads = threads;
    return c;
}

} // namespace

TEST(Parser, Precedence)
{
    const auto e = parse_expression("2*x^2 + 3");
    ASSERT_EQ(e->kind, Expr::Kind::Add);
    EXPECT_EQ(e->children[0]->kind, Expr::Kind::Mul);
    EXPECT_EQ(e->children[0]->children[1]->kind, Expr::Kind::Pow);
    EXPECT_EQ(e->children[0]->children[1]->argument, 2);

    const auto neg = parse_expression("-x^2");
    ASSERT_EQ(neg->kind, Expr::Kind::Neg);
    EXPECT_EQ(neg->children[0]->kind, Expr::Kind::Pow);

    const auto sub = parse_expression("a - b - c");
    ASSERT_EQ(sub->kind, Expr::Kind::Sub);
    EXPECT_EQ(sub->children[0]->kind, Expr::Kind::Sub);
}

TEST(Parser, CallsAndSignedExponents)
{
    const auto call = parse_expression("e(-1)");
    ASSERT_EQ(call->kind, Expr::Kind::Call);
    EXPECT_EQ(call->name, "e");
    EXPECT_EQ(call->argument, -1);
    EXPECT_EQ(parse_expression("x^-3")->argument, -3);
    EXPECT_EQ(parse_expression("x^(-3)")->argument, -3);
    EXPECT_EQ(identifiers(*parse_expression("d*x - x*d + f(2)")), (std::set<std::string>{"d", "x"}));
}

TEST(Parser, RejectsMalformedInput)
{
    for (const char* bad : {"", "x+", "(x", "x^y", "2 3", "e(", "e(x)", "x)", "*x", "x^"})
        EXPECT_THROW(parse_expression(bad), ParseError) << bad;
}

TEST(Compute, DocumentedExamples)
{
    EXPECT_EQ(run("weyl", "d*x", 3), "x*d + h");
    EXPECT_EQ(run("qtorus", "y*x"), "q*x*y");
    EXPECT_EQ(run("coulomb", "e(1)*e(1)", 3, 1), "e(2)");
}

TEST(Compute, WeylAndQTorus)
{
    EXPECT_EQ(run("weyl", "d*x - x*d"), "h");
    EXPECT_EQ(run("weyl", "x^-2*d*x^2"), "d + 2*x^-1*h");
    EXPECT_EQ(run("weyl", "d^3*x", 3), "x*d^3");
    EXPECT_EQ(run("qtorus", "y*x - q*x*y"), "0");
    EXPECT_EQ(run("qtorus", "(q*x*y)^-1*q*x*y"), "1");
    EXPECT_EQ(run("qtorus", "f(1)*f(-1)", {}, 1), "-y + 1");
    EXPECT_EQ(run("qtorus", "f(2)", {}, 1), ore::k_basis(1, 2).to_string());
    // q^2 = -q - 1 mod Phi_3
    EXPECT_EQ(run("qtorus", "q^2", {}, {}, 3), "-q - 1");
}

TEST(Compute, CoulombPolyAndCohom)
{
    EXPECT_EQ(run("coulomb", "e(2)*e(3)", {}, 2), "e(5)");
    EXPECT_EQ(run("coulomb", "w*e(0) - e(0)*w", {}, 1), "0");
    EXPECT_EQ(run("poly", "(x + y)^5", 5), "x^5 + y^5");
    EXPECT_EQ(run("poly", "x^-1*x"), "1");

    ComputeConfig c{"cohom", 3, {}, {}, "st", 0};
    EXPECT_EQ(compute(c, "b").text, "b^3 - b*h^2");
    EXPECT_EQ(compute(c, "b").json["result"]["poly"]["vars"], Json({"b", "a", "hbar"}));
    c.op = "as";
    EXPECT_EQ(compute(c, "b").text, "b^3 - b*h^2");
    c.op = "P";
    c.s = 1;
    EXPECT_EQ(compute(c, "b^2").text, "-b^4"); // 2 b^4 mod 3
}

TEST(Compute, ErrorsAreClassified)
{
    EXPECT_THROW(run("weyl", "d*z"), ParseError);
    EXPECT_THROW(run("weyl", "e(1)"), ParseError);
    EXPECT_THROW(run("coulomb", "x"), ParseError);
    EXPECT_THROW(run("qtorus", "x", 3), ParseError);
    EXPECT_THROW(run("cohom", "b"), ParseError);
    EXPECT_THROW(run("frobnicate", "1"), ParseError);
    EXPECT_THROW(run("weyl", "(d + 1)^-1"), AlgebraError);
    EXPECT_THROW(run("qtorus", "(1 + x)^-1"), AlgebraError);
    EXPECT_THROW(run("coulomb", "e(1)^-1"), AlgebraError);
}

TEST(Json, ElementShapes)
{
    ComputeConfig c{"weyl", {}, {}, {}, "element", 0};
    const auto j = compute(c, "x^-1").json;
    EXPECT_EQ(j["schema"], "fcq/1");
    const auto& r = j["result"];
    EXPECT_EQ(r["alg"], "weyl");
    EXPECT_EQ(r["coeff_ring"], Json::parse(R"({"base":"Z","vars":["hbar"]})"));
    EXPECT_EQ(r["terms"], Json::parse(R"([{"x":-1,"d":0,"c":{"vars":["hbar"],"terms":[{"exp":[0],"coeff":"1"}]}}])"));

    c.alg = "qtorus";
    EXPECT_EQ(compute(c, "y*x").json["result"]["terms"],
              Json::parse(R"([{"x":1,"y":1,"c":{"vars":["q"],"terms":[{"exp":[1],"coeff":"1"}]}}])"));
}

TEST(Json, PolynomialRoundTrip)
{
    fcq::testing::Rng rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint32_t ch = trial % 2 ? 0 : 7;
        const Poly f = fcq::testing::random_poly(rng, {"q", "h", "y"}, ch, 6, -3, 4, 1000);
        const Json j = poly_to_json(f);
        EXPECT_EQ(poly_from_json(j, ch), f);
        EXPECT_EQ(j["vars"], Json({"q", "hbar", "y"}));
    }
}

TEST(Json, ComplexRoundTrip)
{
    const auto M = homalg::regular_module<F3>(3, 1);
    const Json j = to_json(M);
    EXPECT_EQ(j["p"], 3);
    EXPECT_EQ(j["degrees"], Json::parse(R"({"1":3})"));
    EXPECT_EQ(to_json(cyclic_complex_from_json<F3>(j)), j);
}

TEST(Golden, ExteriorTwistSigns)
{
    const auto L3 = twist::exterior<F3>({"xi", "eta"}, {1, 1});
    const auto g3 = load_golden("exterior_xi_eta_twist_p3.json");
    EXPECT_EQ(to_json(twist::frobenius_twist_algebra(L3, 3)), g3);
    EXPECT_EQ(to_json(superalgebra_from_json<F3>(g3)), g3);

    const auto L5 = twist::exterior<F5>({"xi", "eta"}, {1, 1});
    const auto g5 = load_golden("exterior_xi_eta_twist_p5.json");
    EXPECT_EQ(to_json(twist::frobenius_twist_algebra(L5, 5)), g5);
    EXPECT_THROW(superalgebra_from_json<F3>(g5), AlgebraError);
}

TEST(Suite, RegistryCoversEveryCriterion)
{
    std::set<std::string> ids;
    std::set<int> criteria;
    for (const auto& c : check_registry()) {
        EXPECT_TRUE(ids.insert(c.id).second) << c.id;
        criteria.insert(c.criterion);
        EXPECT_NE(describe(c).find(c.statement), std::string::npos);
    }
    for (int k = 1; k <= 14; ++k)
        EXPECT_TRUE(criteria.count(k)) << k;
    EXPECT_EQ(find_check("unknown"), nullptr);
    ASSERT_NE(find_check("fermat-falling-factorial"), nullptr);
    EXPECT_NE(describe(*find_check("fermat-falling-factorial")).find("T^p - h^{p-1} T"), std::string::npos);
}

TEST(Suite, GridExpansionAndOverrides)
{
    RunConfig c;
    EXPECT_EQ(expand_cases({"coulomb-frobenius"}, c).size(), 6u);
    c.ps = {7};
    const auto cases = expand_cases({"coulomb-frobenius", "adams"}, c);
    ASSERT_EQ(cases.size(), 4u);
    EXPECT_EQ(cases[0].second, (Params{{"p", 7}, {"r", 1}}));
    EXPECT_TRUE(cases[3].second.empty());
    EXPECT_TRUE(expand_cases({}, c).empty());
}

TEST(Suite, Validation)
{
    RunConfig c;
    EXPECT_TRUE(validate(c).empty());
    c.ps = {3, 9};
    EXPECT_FALSE(validate(c).empty());
    c.ps = {2};
    EXPECT_FALSE(validate(c).empty());
    c.ps = {};
    c.max_degree = 0;
    EXPECT_FALSE(validate(c).empty());
}

TEST(Suite, ZetaReportsTheScalar)
{
    RunConfig c = quiet();
    c.ps = {3};
    const auto res = run_suite({"zeta"}, c);
    ASSERT_EQ(res.cases.size(), 1u);
    EXPECT_EQ(res.exit_code(), 0);
    const auto text = render_text(res, false);
    EXPECT_NE(text.find("gamma-delta-zeta = -1"), std::string::npos);
}

TEST(Suite, DeterministicAcrossThreadCounts)
{
    std::vector<std::string> ids;
    for (const auto& c : check_registry())
        ids.push_back(c.id);
    const auto a = render_json(run_suite(ids, quiet(1)), quiet(1)).dump();
    const auto b = render_json(run_suite(ids, quiet(6)), quiet(6)).dump();
    EXPECT_EQ(a, b);
    const auto j = Json::parse(a);
    EXPECT_EQ(j["schema"], "fcq/1");
    EXPECT_EQ(j["seed"], 1);
    EXPECT_FALSE(j["results"][0].contains("elapsed"));
}

TEST(Suite, ExitCodes)
{
    EXPECT_EQ(run_suite({"fermat-falling-factorial", "sign-lemma"}, quiet()).exit_code(), 0);
    // mixed-sign products of the K-theoretic basis do not multiply to the sum index
    EXPECT_EQ(run_suite({"ktheory-product"}, quiet()).exit_code(), 1);
    // 17 is outside the supported field characteristics of the chain-level checks
    RunConfig c = quiet();
    c.ps = {17};
    EXPECT_EQ(run_suite({"tate-regular"}, c).exit_code(), 3);
}

TEST(Suite, CrossModule)
{
    for (int p : {3, 5, 7})
        EXPECT_TRUE(cross_module_report(p).passed()) << p;
}
