#ifndef SIGLAT_REPORT_HPP
#define SIGLAT_REPORT_HPP

#include "siglat/dsl/miner.hpp"

#include <string>

namespace siglat::report {

/// Exit-code convention shared by the command-line front end:
/// 0 everything holds, 1 a check failed or a counterexample was found,
/// 2 bad input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

struct RunOutcome {
    int exit_code;
    std::string text;
};

/// Evaluates each check under the script's let assignments only (no search)
/// and reports one verdict per check, printing both sides' atoms when a
/// check fails. Throws on scripts whose checks reference unassigned
/// variables.
RunOutcome run_check(const dsl::Script& script);

/// Runs the counterexample miner on every check and formats the witnesses
/// (as re-parsable partition literals) or the search certificates. Text
/// output contains no timing and is byte-stable for fixed inputs and seed.
RunOutcome run_mine(const dsl::Script& script, const dsl::MineOptions& options);

/// The same report as a machine-readable JSON array, one object per check,
/// with an elapsed-milliseconds field.
RunOutcome run_mine_json(const dsl::Script& script, const dsl::MineOptions& options);

/// Prints the atoms of both sides of every check, evaluated under the let
/// assignments, in canonical order; on product spaces atoms are printed as
/// coordinate pairs and flagged by the rectangle test.
RunOutcome run_atoms(const dsl::Script& script);

} // namespace siglat::report

#endif
