#include "fcq/cli/suite.hpp"

#include "fcq/coop/coop.hpp"
#include "fcq/exactalg/cyclotomic.hpp"
#include "fcq/homalg/homalg.hpp"
#include "fcq/twist/random.hpp"
#include "fcq/twist/twist.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace fcq::cli {

namespace {

template <int P>
using F = Zp<P>;

int param(const Params& params, const char* key) { return params.at(key); }

VerificationReport tate_regular(int p)
{
    return with_prime(p, [p]<int P>() {
        VerificationReport rep;
        for (int degree : {0, 1}) {
            const auto M = homalg::regular_module<F<P>>(p, degree);
            const auto T = homalg::tate_hypercohomology(M);
            rep.add("regular module in degree " + std::to_string(degree) + " has zero Tate cohomology", T.vanishes(),
                    "dims (even, odd) = (" + std::to_string(T.even) + ", " + std::to_string(T.odd) + ")");
        }
        return rep;
    });
}

VerificationReport twist_dilation(int p, std::uint64_t seed, int count)
{
    return with_prime(p, [&]<int P>() {
        VerificationReport rep;
        SeededRng rng(seed);
        for (int trial = 0; trial < count; ++trial) {
            const auto A = twist::random_super_algebra<F<P>>(rng);
            auto r = twist::sign_lemma_report(A, p);
            r.name = "algebra " + std::to_string(trial) + " (dim " + std::to_string(A.dim()) + ")";
            rep.merge(r);
        }
        return rep;
    });
}

VerificationReport sign_lemma(int p)
{
    return with_prime(p, [p]<int P>() {
        using S = F<P>;
        const auto L = twist::exterior<S>({"xi", "eta"}, {1, 1});
        const auto T = twist::frobenius_twist_algebra(L, p);
        // basis 1, xi, eta, xi.eta; the twisted product xi*eta is a multiple of xi.eta
        const auto got = T.product(1, 2);
        const int sign = got(3).centered();
        const long binom = static_cast<long>(p) * (p - 1) / 2;
        const int want = binom % 2 == 0 ? 1 : -1;
        VerificationReport rep;
        rep.add("xi*eta in Lambda[xi,eta]^(1) = " + std::to_string(sign) + " xi.eta",
                got(0) == S(0) && got(1) == S(0) && got(2) == S(0) && (sign == 1 || sign == -1),
                "product vector has components outside xi.eta");
        rep.add("sign(xi, eta) = " + std::to_string(want), sign == want,
                "twisted product gives " + std::to_string(sign));
        rep.merge(twist::sign_lemma_report(L, p));
        return rep;
    });
}

VerificationReport additivity(int p, std::uint64_t seed, int count)
{
    return with_prime(p, [&]<int P>() {
        VerificationReport rep;
        SeededRng rng(seed);
        for (int trial = 0; trial < count; ++trial) {
            const auto A = homalg::random_complex<F<P>>(rng, homalg::random_dims(rng, 0, 1, 3));
            const auto B = homalg::random_complex<F<P>>(rng, homalg::random_dims(rng, 0, 1, 3));
            const auto f = homalg::random_chain_map(rng, A, B);
            const auto g = homalg::random_chain_map(rng, A, B);
            auto r = homalg::additivity_defect(f, g, p).report;
            r.name = "case " + std::to_string(trial);
            rep.merge(r);
        }
        return rep;
    });
}

VerificationReport cone_filtration(int p, std::uint64_t seed)
{
    return with_prime(p, [&]<int P>() {
        VerificationReport rep;
        SeededRng rng(seed);
        const auto A = homalg::random_complex<F<P>>(rng, homalg::random_dims(rng, 0, 1, 2));
        const auto B = homalg::random_complex<F<P>>(rng, homalg::random_dims(rng, 0, 1, 2));
        const auto f = homalg::random_chain_map(rng, A, B);
        const auto Fl = homalg::cone_filtration(f, p);
        bool stable = true;
        for (int i = 0; i <= p; ++i)
            stable = stable && Fl.is_stable(i);
        rep.add("F_0 .. F_p are subcomplexes stable under sigma", stable);
        rep.add("F_0 = St(B)", Fl.bottom_is_steenrod_of_target());
        rep.add("F_p / F_{p-1} = St(A[1])", Fl.top_is_steenrod_of_shift());
        for (int i = 1; i < p; ++i) {
            const auto piece = Fl.graded_piece(i);
            rep.add("graded piece " + std::to_string(i) + " is degreewise free", homalg::is_degreewise_free(piece));
        }
        return rep;
    });
}

VerificationReport zeta(int p)
{
    return with_prime(p, []<int P>() { return homalg::verify_zeta<F<P>>(P); });
}

VerificationReport as_hbar_checks(int p) { return coop::hbar_multiple_vanishing(p); }

std::vector<int> primes(std::initializer_list<int> ps) { return ps; }

std::vector<CheckSpec> build_registry()
{
    std::vector<CheckSpec> r;
    r.push_back({"fermat-falling-factorial", 1, "falling factorial in characteristic p",
                 "prod_{i=0}^{p-1} (T - i h) = T^p - h^{p-1} T in F_p[T, h]",
                 {{"p", primes({3, 5, 7})}},
                 [](const Params& a, const RunConfig&) { return falling_factorial_identity(param(a, "p")); }});
    r.push_back({"weyl-frobenius", 2, "Weyl algebra identity for x^p d^p",
                 "x^p d^p = prod_{i=0}^{p-1} (x d - i h) over Z[h]; mod p this is (x d)^p - h^{p-1} x d",
                 {{"p", primes({3, 5, 7})}},
                 [](const Params& a, const RunConfig&) { return ore::weyl_frobenius_report(param(a, "p")); }});
    r.push_back({"weyl-centrality", 3, "p-th powers are central in the Weyl algebra mod p",
                 "[x^{+-p}, g] = [d^p, g] = [prod_{i<p}(x d - i h), g] = 0 mod p for g in {x, x^-1, d}",
                 {{"p", primes({3, 5, 7})}},
                 [](const Params& a, const RunConfig&) { return ore::weyl_centrality_report(param(a, "p")); }});
    r.push_back({"coulomb-product", 4, "basis products in the abelian Coulomb branch algebra",
                 "e_n e_m = e_{n+m} over Z[w, h] for 0 <= n, m <= 4, with e_n = prod_{i=1}^{nr}(r w - i h)^{-1} x^n d^{nr}",
                 {{"r", {1, 2, 3}}},
                 [](const Params& a, const RunConfig&) { return ore::coulomb_product_report(param(a, "r"), 4); }});
    r.push_back({"coulomb-frobenius", 5, "quantum Frobenius on the Coulomb branch: relation and centrality",
                 "F(ebar_1) F(ebar_-1) = F((r w)^r) mod p, and F(ebar_{+-1}), F(w) commute with x^-1, e_1, w, h mod p",
                 {{"p", primes({3, 5})}, {"r", {1, 2, 3}}},
                 [](const Params& a, const RunConfig&) {
                     return ore::coulomb_frobenius_report(param(a, "r"), param(a, "p"));
                 }});
    r.push_back({"coulomb-frobenius-structure", 6, "quantum Frobenius is unital, multiplicative, and the p-th power mod h",
                 "F(1) = 1; F(ab) = F(a) F(b) on products of generators; F(u) at h = 0 equals u^p",
                 {{"p", primes({3, 5})}, {"r", {1, 2, 3}}},
                 [](const Params& a, const RunConfig& c) {
                     return ore::coulomb_frobenius_structure_report(param(a, "r"), param(a, "p"), c.seed);
                 }});
    r.push_back({"ktheory-product", 7, "product rule for the K-theoretic basis of the quantum torus",
                 "f_n f_m = f_{n+m} in Z[q^{+-1}]<x^{+-1}, y^{+-1}> for -3 <= n, m <= 3, "
                 "f_m = prod_{i=0}^{mr-1}(1 - y^r q^{-i}) x^m (m >= 1), f_m = x^m (m <= 0)",
                 {{"r", {1, 2}}},
                 [](const Params& a, const RunConfig&) { return ore::ktheory_product_report(param(a, "r"), 3); }});
    r.push_back({"root-of-unity-centrality", 8, "central images at a root of unity",
                 "x^-n, y^n, prod_{i<nr}(1 - y^r q^{-i}) x^n commute with x^-1, f_1, y mod Phi_n(q); "
                 "(1 - y^{nr})^r = prod_{i<nr}(1 - y^r q^{-i}) mod Phi_n(q)",
                 {{"n", {2, 3, 4, 6}}, {"r", {1, 2}}},
                 [](const Params& a, const RunConfig&) { return ore::root_of_unity_report(param(a, "r"), param(a, "n")); }});
    r.push_back({"tate-regular", 9, "Tate cohomology of the regular representation",
                 "the Tate hypercohomology of F_p[mu_p] vanishes",
                 {{"p", primes({3, 5})}},
                 [](const Params& a, const RunConfig&) { return tate_regular(param(a, "p")); }});
    r.push_back({"twist-dilation", 9, "Frobenius twist of random super algebras",
                 "dim A^(1) = dim A, degrees multiplied by p, m^(1)(a, b) = (-1)^{|a||b| p(p-1)/2} m(a, b)",
                 {{"p", primes({3, 5})}},
                 [](const Params& a, const RunConfig& c) { return twist_dilation(param(a, "p"), c.seed, 5); }});
    r.push_back({"sign-lemma", 9, "sign change of odd products under the Frobenius twist",
                 "m^(1)(a, b) = (-1)^{ij p(p-1)/2} m(a, b) for |a| = i, |b| = j; on Lambda[xi, eta] "
                 "xi*eta picks up -1 for p = 3 and +1 for p = 5",
                 {{"p", primes({3, 5})}},
                 [](const Params& a, const RunConfig&) { return sign_lemma(param(a, "p")); }});
    r.push_back({"additivity", 10, "additivity defect of the Steenrod construction on chain maps",
                 "St(f + g) - St(f) - St(g) = Av(h), the norm of the mixed words, on 10 seeded cases",
                 {{"p", primes({3})}},
                 [](const Params& a, const RunConfig& c) { return additivity(param(a, "p"), c.seed, 10); }});
    r.push_back({"cone-filtration", 10, "filtration of the Steenrod construction of a cone",
                 "St(cone f) has a sigma-stable filtration from St(B) to St(A[1]) whose middle graded pieces are "
                 "degreewise free",
                 {{"p", primes({3, 5})}},
                 [](const Params& a, const RunConfig& c) { return cone_filtration(param(a, "p"), c.seed); }});
    r.push_back({"zeta", 11, "the comparison map zeta into the Steenrod construction of a cone",
                 "zeta is a chain map, epsilon zeta agrees with the augmentation, and gamma delta zeta = "
                 "-((p-1)/2)! mod p",
                 {{"p", primes({3, 5, 7})}},
                 [](const Params& a, const RunConfig&) { return zeta(param(a, "p")); }});
    r.push_back({"steenrod-operations", 12, "Steenrod powers read off St_in on F_p[b]",
                 "P^0 b = b, P^1 b = b^p, P^s(b^k) = C(k, s) b^{k+s(p-1)}, Cartan formula, unstability, "
                 "up to the degree cutoff",
                 {{"p", primes({3, 5})}},
                 [](const Params& a, const RunConfig& c) {
                     return coop::steenrod_operations_report(param(a, "p"), c.max_degree);
                 }});
    r.push_back({"as-hbar", 12, "vanishing and uniqueness of the one-variable AS_h polynomial",
                 "b^p - h^{p-1} b vanishes at b = t h for all t in F_p and is the unique such degree-2p element "
                 "reducing to b^p at h = 0",
                 {{"p", primes({3, 5})}},
                 [](const Params& a, const RunConfig&) { return as_hbar_checks(param(a, "p")); }});
    r.push_back({"cross-module", 13, "AS_h on one variable agrees with the Coulomb Frobenius of w",
                 "as_hbar(w) = w^p - h^{p-1} w equals F(w) = prod_{i<p}(w - i h) mod p, also after w -> x d "
                 "in the Weyl algebra",
                 {{"p", primes({3, 5, 7})}},
                 [](const Params& a, const RunConfig&) { return cross_module_report(param(a, "p")); }});
    r.push_back({"adams", 14, "Adams operations on Laurent polynomials",
                 "psi^n(y) = y^n is a ring map on Z[y, y^-1]; psi^1 = id; psi^n psi^m = psi^{nm} for n, m <= 4",
                 {},
                 [](const Params&, const RunConfig& c) { return ore::adams_report(c.seed, 4); }});
    return r;
}

std::string status_word(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
    }
    return "error";
}

} // namespace

const std::vector<CheckSpec>& check_registry()
{
    static const std::vector<CheckSpec> registry = build_registry();
    return registry;
}

const CheckSpec* find_check(const std::string& id)
{
    for (const auto& c : check_registry())
        if (c.id == id)
            return &c;
    return nullptr;
}

bool SuiteResult::passed() const
{
    for (const auto& c : cases)
        if (c.status != Status::Pass)
            return false;
    return true;
}

bool SuiteResult::has_errors() const
{
    for (const auto& c : cases)
        if (c.status == Status::Error)
            return true;
    return false;
}

int SuiteResult::exit_code() const { return has_errors() ? 3 : passed() ? 0 : 1; }

std::string validate(const RunConfig& c)
{
    for (int p : c.ps)
        if (p < 3 || !is_prime(p))
            return "--p: " + std::to_string(p) + " is not an odd prime";
    for (int r : c.rs)
        if (r < 0)
            return "--r: " + std::to_string(r) + " is negative";
    for (int n : c.ns)
        if (n < 1)
            return "--n: " + std::to_string(n) + " is not a positive order";
    if (c.max_degree < 1)
        return "--max-degree must be at least 1";
    return {};
}

std::vector<std::pair<const CheckSpec*, Params>> expand_cases(const std::vector<std::string>& ids, const RunConfig& config)
{
    std::vector<std::pair<const CheckSpec*, Params>> out;
    for (const auto& spec : check_registry()) {
        if (std::find(ids.begin(), ids.end(), spec.id) == ids.end())
            continue;
        std::vector<Params> points{{}};
        for (const auto& [axis, defaults] : spec.grid) {
            const auto& override_values = axis == "p" ? config.ps : axis == "r" ? config.rs : config.ns;
            const auto& values = override_values.empty() ? defaults : override_values;
            std::vector<Params> next;
            for (const auto& pt : points)
                for (int v : values) {
                    auto q = pt;
                    q[axis] = v;
                    next.push_back(std::move(q));
                }
            points = std::move(next);
        }
        for (auto& pt : points)
            out.emplace_back(&spec, std::move(pt));
    }
    return out;
}

unsigned resolve_threads(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("FCQ_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SuiteResult run_suite(const std::vector<std::string>& ids, const RunConfig& config)
{
    const auto cases = expand_cases(ids, config);
    SuiteResult result;
    result.seed = config.seed;
    result.cases.resize(cases.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            const auto& [spec, params] = cases[i];
            auto& out = result.cases[i];
            out.id = spec->id;
            out.params = params;
            const auto start = std::chrono::steady_clock::now();
            try {
                out.report = spec->run(params, config);
                out.status = out.report.passed() ? Status::Pass : Status::Fail;
            } catch (const std::exception& e) {
                out.status = Status::Error;
                out.error = e.what();
            }
            out.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };
    const unsigned n = std::min<std::size_t>(resolve_threads(config.threads), std::max<std::size_t>(cases.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return result;
}

std::string params_label(const Params& params)
{
    std::string out;
    for (const auto& [k, v] : params)
        out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return out;
}

std::string render_text(const SuiteResult& result, bool timings)
{
    std::ostringstream os;
    std::size_t passed = 0, failed = 0, errors = 0;
    for (const auto& c : result.cases) {
        const char* head = c.status == Status::Pass ? "PASS " : c.status == Status::Fail ? "FAIL " : "ERROR";
        os << head << ' ' << c.id;
        if (!c.params.empty())
            os << ' ' << params_label(c.params);
        if (timings)
            os << " [" << c.elapsed << " s]";
        os << '\n';
        for (const auto& ch : c.report.checks) {
            os << "    " << (ch.passed ? "ok   " : "FAIL ") << ch.name;
            if (!ch.passed && !ch.witness.empty())
                os << ": " << ch.witness;
            os << '\n';
        }
        if (c.status == Status::Error)
            os << "    error: " << c.error << '\n';
        (c.status == Status::Pass ? passed : c.status == Status::Fail ? failed : errors)++;
    }
    os << result.cases.size() << " cases: " << passed << " passed, " << failed << " failed, " << errors
       << " errors (seed " << result.seed << ")\n";
    return os.str();
}

Json render_json(const SuiteResult& result, const RunConfig& config)
{
    Json cases = Json::array();
    std::size_t passed = 0, failed = 0, errors = 0;
    for (const auto& c : result.cases) {
        Json j{{"id", c.id}, {"params", c.params}, {"status", status_word(c.status)}};
        if (config.timings)
            j["elapsed"] = c.elapsed;
        j["checks"] = to_json(c.report).at("checks");
        if (c.status == Status::Error)
            j["error"] = c.error;
        cases.push_back(std::move(j));
        (c.status == Status::Pass ? passed : c.status == Status::Fail ? failed : errors)++;
    }
    return {{"schema", "fcq/1"},
            {"command", "verify"},
            {"seed", result.seed},
            {"config", {{"p", config.ps}, {"r", config.rs}, {"n", config.ns}, {"max_degree", config.max_degree}}},
            {"results", cases},
            {"summary", {{"cases", result.cases.size()}, {"passed", passed}, {"failed", failed}, {"errors", errors}}},
            {"exit_code", result.exit_code()}};
}

std::string describe(const CheckSpec& spec)
{
    std::ostringstream os;
    os << spec.id << ": " << spec.summary << '\n';
    os << "  certifies: " << spec.statement << '\n';
    os << "  acceptance criterion: " << spec.criterion << '\n';
    os << "  default grid:";
    if (spec.grid.empty())
        os << " none (seeded)";
    for (const auto& [axis, values] : spec.grid) {
        os << ' ' << axis << " in {";
        for (std::size_t i = 0; i < values.size(); ++i)
            os << (i ? "," : "") << values[i];
        os << '}';
    }
    os << '\n';
    return os.str();
}

VerificationReport cross_module_report(int p)
{
    const auto up = static_cast<std::uint32_t>(p);
    VerificationReport rep;
    rep.name = "cross-module p=" + std::to_string(p);

    const Poly w = Poly::variable({"w"}, "w", up);
    const Poly as = coop::as_hbar(w, up).with_vars(ore::wform_variables());
    const auto F = ore::coulomb_frobenius(1, up, ore::CoulombGenerator::W);
    const bool only_zero = F.coefficients().size() == 1 && F.coefficients().count(0) == 1;
    rep.add("F(w) lies in degree 0", only_zero, F.to_string());
    rep.add("as_hbar(w) = F(w) in F_p[w, h]", F.coefficient(0) == as,
            "as_hbar = " + as.to_string() + ", F = " + F.coefficient(0).to_string());

    // as_hbar(w) evaluated at w = x d in the Weyl algebra
    ore::WeylElement lhs(up);
    const ore::WeylElement xd = ore::WeylElement::w(up);
    for (const auto& [e, c] : as.terms())
        lhs = lhs + c * xd.pow(static_cast<unsigned>(e[0])) * ore::WeylElement::hbar(up).pow(static_cast<unsigned>(e[1]));
    const auto rhs = ore::to_weyl(F);
    rep.add("as_hbar(x d) = image of F(w) in the Weyl algebra", lhs == rhs,
            "as_hbar(x d) = " + lhs.to_string() + ", image = " + rhs.to_string());
    return rep;
}

} // namespace fcq::cli
