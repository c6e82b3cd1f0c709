#pragma once

#include <string>

#include "hart/dynkin.hpp"
#include "hart/io.hpp"

namespace hart {

// Output of one subcommand: a JSON report (always carries the seed), a
// short text rendering, an optional DOT graph and the exit code.
struct CommandResult {
    Json report;
    std::string text;
    std::string dot;
    int exit_code = 0;
};

// Exit 0 iff n-complete.
CommandResult cmd_check(const Presentation& p, std::size_t n, const RunConfig& cfg);
// tau_n-closure; DOT is the AR quiver of add M with dashed tau_n edges.
CommandResult cmd_closure(const Presentation& p, std::size_t n, const RunConfig& cfg, bool with_modules = false);
CommandResult cmd_quiver(const Presentation& p, std::size_t n, const RunConfig& cfg);
// End(M) as an algebra file (usable as input again) plus its quiver.
CommandResult cmd_cone(const Presentation& p, std::size_t n, const RunConfig& cfg);
// Levels 1..n_max starting from linear A_m: completeness of each level,
// its cone compared with Q^(n). Exit 0 iff every level passes.
CommandResult cmd_tower(int m, std::size_t n_max, const RunConfig& cfg);
CommandResult cmd_family(const Quiver& q, std::size_t n, FamilyKind kind, long lo, long hi, const RunConfig& cfg);
// U_n of Lambda on cfg.window and its verification. Exit 0 iff it passes.
CommandResult cmd_derived(const Presentation& p, std::size_t n, const RunConfig& cfg);

// Formatting of already computed results, shared with the acceptance suite.
CommandResult check_result(const CompletenessReport& r, const RunConfig& cfg);
CommandResult closure_result(const TauClosure& c, const RunConfig& cfg, bool with_modules = false);
CommandResult cone_result(const ConeAlgebra& c, const RunConfig& cfg);
CommandResult derived_result(const UClosure& u, const WindowReport& w, const RunConfig& cfg);

}  // namespace hart
