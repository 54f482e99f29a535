#pragma once

#include "fcq/cli/json.hpp"
#include "fcq/report.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fcq::cli {

enum class Format { Text, Json };

struct RunConfig {
    std::vector<int> ps, rs, ns; // empty: each check's default grid
    int max_degree = 20;
    std::uint64_t seed = 1;
    Format format = Format::Text;
    bool timings = false;
    unsigned threads = 0; // 0: FCQ_THREADS or hardware concurrency
};

/// One point of a check's parameter grid, e.g. {{"p", 3}, {"r", 2}}.
using Params = std::map<std::string, int>;

struct CheckSpec {
    std::string id;
    int criterion;                          // acceptance criterion number
    std::string summary;                    // one line
    std::string statement;                  // formula the check certifies
    std::map<std::string, std::vector<int>> grid;
    std::function<VerificationReport(const Params&, const RunConfig&)> run;
};

const std::vector<CheckSpec>& check_registry();
const CheckSpec* find_check(const std::string& id);

enum class Status { Pass, Fail, Error };

struct CaseResult {
    std::string id;
    Params params;
    Status status = Status::Pass;
    double elapsed = 0; // seconds
    VerificationReport report;
    std::string error;
};

struct SuiteResult {
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases;

    bool passed() const;
    bool has_errors() const;
    /// 0 all pass, 1 a check failed, 3 an evaluation error.
    int exit_code() const;
};

/// Expands the grids of the selected checks (overridden per axis by the
/// config) into cases, in registry order then grid order.
std::vector<std::pair<const CheckSpec*, Params>> expand_cases(const std::vector<std::string>& ids, const RunConfig& config);

/// Runs the cases on up to `threads` workers; results keep case order.
SuiteResult run_suite(const std::vector<std::string>& ids, const RunConfig& config);

std::string params_label(const Params& params);
std::string render_text(const SuiteResult& result, bool timings);
Json render_json(const SuiteResult& result, const RunConfig& config);
std::string describe(const CheckSpec& spec);

/// Empty when the config is usable; otherwise a usage message.
std::string validate(const RunConfig& config);

/// Worker count: explicit value, else FCQ_THREADS, else hardware concurrency.
unsigned resolve_threads(unsigned requested);

/// Coefficient-level and Weyl-level comparison of the one-variable AS_h map
/// with the Coulomb Frobenius image of w at r = 1.
VerificationReport cross_module_report(int p);

} // namespace fcq::cli
