#pragma once

#include <map>
#include <string>
#include <vector>

#include "hart/io.hpp"

namespace hart {

struct AcceptanceConfig {
    std::string data_dir;
    RunConfig run;
    std::size_t random_modules = 200;
    // Criterion 9 repeats criteria 1-8 and compares every artifact.
    bool determinism = true;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double budget = 0;  // seconds; 0 means unbudgeted
};

struct AcceptanceRun {
    std::vector<CriterionResult> results;
    // Report files by name (JSON reports, DOT graphs), no timings inside.
    std::map<std::string, std::string> artifacts;
    std::uint64_t seed = 0;
    bool pass() const;
};

AcceptanceRun run_acceptance(const AcceptanceConfig& cfg);

// One line per criterion: "C<k> PASS|FAIL <seconds>s/<budget>s <title>: <detail>".
std::string format_table(const AcceptanceRun& run);
// Writes the artifacts plus summary.json (no timings) into `dir`.
void write_artifacts(const AcceptanceRun& run, const std::string& dir);

}  // namespace hart
