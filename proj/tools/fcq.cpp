#include "fcq/cli/compute.hpp"
#include "fcq/cli/expr.hpp"
#include "fcq/cli/suite.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace fcq;
using namespace fcq::cli;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_evaluation = 3;

int usage_error(const std::string& msg)
{
    std::cerr << "fcq: " << msg << '\n';
    return exit_usage;
}

Format parse_format(const std::string& s) { return s == "json" ? Format::Json : Format::Text; }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for Frobenius twists, quantum Frobenius maps and Steenrod operations"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto formats = CLI::IsMember({"text", "json"});

    // compute
    auto* compute_cmd = app.add_subcommand("compute", "Evaluate an expression and print its normal form");
    ComputeConfig cc;
    std::string expression;
    std::optional<int> cp, cr, cn;
    compute_cmd->add_option("--alg", cc.alg, "Algebra")->required()->check(CLI::IsMember(compute_algebras()));
    compute_cmd->add_option("--p", cp, "Coefficient characteristic (odd prime)");
    compute_cmd->add_option("--r", cr, "Coulomb / K-theory parameter r");
    compute_cmd->add_option("--n", cn, "Reduce modulo Phi_n(q) (qtorus)");
    compute_cmd->add_option("--op", cc.op, "cohom: element, st, as, P")->check(CLI::IsMember({"element", "st", "as", "P"}));
    compute_cmd->add_option("--s", cc.s, "cohom: index s of P^s");
    compute_cmd->add_option("--format", format, "Output format")->check(formats);
    compute_cmd->add_option("expression", expression, "Expression, e.g. \"d*x\"")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run verification checks");
    RunConfig rc;
    bool all = false;
    std::vector<std::string> only;
    verify_cmd->add_flag("--all", all, "Run every check");
    verify_cmd->add_option("--only", only, "Comma-separated check ids")->delimiter(',');
    verify_cmd->add_option("--p", rc.ps, "Primes, comma-separated")->delimiter(',');
    verify_cmd->add_option("--r", rc.rs, "Values of r, comma-separated")->delimiter(',');
    verify_cmd->add_option("--n", rc.ns, "Root-of-unity orders, comma-separated")->delimiter(',');
    verify_cmd->add_option("--max-degree", rc.max_degree, "Degree cutoff for cohomology operations");
    verify_cmd->add_option("--seed", rc.seed, "Seed for randomized checks");
    verify_cmd->add_option("--format", format, "Output format")->check(formats);
    verify_cmd->add_option("--threads", rc.threads, "Worker threads (default FCQ_THREADS or all cores)");
    verify_cmd->add_flag("--timings", rc.timings, "Include elapsed times");

    // describe
    auto* describe_cmd = app.add_subcommand("describe", "Explain what a check certifies");
    std::string describe_id;
    describe_cmd->add_option("id", describe_id, "Check id")->required();

    // list
    auto* list_cmd = app.add_subcommand("list", "List check ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    if (*compute_cmd) {
        if (cp) {
            if (*cp < 3 || !is_prime(*cp))
                return usage_error("--p: " + std::to_string(*cp) + " is not an odd prime");
            cc.p = static_cast<std::uint32_t>(*cp);
        }
        if (cr && *cr < 0)
            return usage_error("--r must be nonnegative");
        if (cn && *cn < 1)
            return usage_error("--n must be positive");
        cc.r = cr;
        cc.n = cn;
        try {
            const auto out = compute(cc, expression);
            if (parse_format(format) == Format::Json)
                std::cout << out.json.dump(2) << '\n';
            else
                std::cout << out.text << '\n';
            return 0;
        } catch (const ParseError& e) {
            return usage_error(e.what());
        } catch (const std::exception& e) {
            std::cerr << "fcq: evaluation error: " << e.what() << '\n';
            return exit_evaluation;
        }
    }

    if (*verify_cmd) {
        std::vector<std::string> ids;
        if (all) {
            if (!only.empty())
                return usage_error("--all and --only are exclusive");
            for (const auto& c : check_registry())
                ids.push_back(c.id);
        } else {
            for (const auto& id : only) {
                if (!find_check(id))
                    return usage_error("unknown check id '" + id + "'");
                ids.push_back(id);
            }
        }
        if (ids.empty())
            return usage_error("no checks selected (use --all or --only <id,...>)");
        if (const auto msg = validate(rc); !msg.empty())
            return usage_error(msg);
        rc.format = parse_format(format);
        const auto result = run_suite(ids, rc);
        if (rc.format == Format::Json)
            std::cout << render_json(result, rc).dump(2) << '\n';
        else
            std::cout << render_text(result, rc.timings);
        return result.exit_code();
    }

    if (*describe_cmd) {
        const auto* spec = find_check(describe_id);
        if (!spec)
            return usage_error("unknown check id '" + describe_id + "'");
        std::cout << describe(*spec);
        return 0;
    }

    if (*list_cmd) {
        for (const auto& c : check_registry())
            std::cout << c.id << '\n';
        return 0;
    }
    return exit_usage;
}
