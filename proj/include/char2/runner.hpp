#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "char2/coeffring.hpp"

namespace char2 {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;       // verify-theorem, enumerate-lg, quadrics, ...
    unsigned n = 3;
    unsigned m = 0;            // alternating size / spinor index
    unsigned q = 2;            // field size for enumerations
    uint64_t p = 3;            // odd prime for fiber counts
    std::string ring = "f2";
    std::string variety;       // quadrics subcommand
    std::string fts_case;      // freudenthal / tangential subcommand
    std::string profile = "fast";
    std::string matrix_path;
    std::string subspace_path;
    std::string eval_path;
    bool mod2 = false;
    bool compare = false;
    bool check_sl2 = false;
    bool gow = false;
    bool timing = false;       // include elapsed_ms in the JSON report
    long budget_ms = 0;        // 0: env CHAR2_BUDGET_MS or none
};

// Dispatches one command and assembles its deterministic JSON report
// (byte-identical across runs and thread counts; timing fields only with
// cfg.timing). Budget overruns and invalid configs surface as Error.
Json run(const RunConfig& cfg);

// Exit code contract: 0 ok, 1 failed checks, 2 invalid config, 3 budget.
int exit_code_for_error(const Error& e);

struct CriterionResult {
    int id = 0;
    std::string label;
    bool ok = false;
    long elapsed_ms = 0;
    long limit_ms = 0; // 0 = no limit
    std::string detail;
};

// The acceptance checks; profile "fast" skips the 66-quadric kernel and the
// big tangential case, "full" adds the kernel, "slow" runs everything.
std::vector<CriterionResult> run_acceptance(const std::string& profile);

Json acceptance_report(const std::string& profile);

} // namespace char2
