#ifndef SIGLAT_DSL_MINER_HPP
#define SIGLAT_DSL_MINER_HPP

#include "siglat/dsl/eval.hpp"
#include "siglat/dsl/typecheck.hpp"
#include "siglat/enumeration.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace siglat::dsl {

enum class SearchMode { Exhaustive, Random };

struct MineOptions {
    int max_ground = 3;                   // per-space ground size bound
    SearchMode mode = SearchMode::Exhaustive;
    std::optional<std::uint64_t> seed;    // required in random mode
    std::uint64_t limit = 1000;           // random-mode trial budget
    int workers = 0;                      // 0 = hardware concurrency
};

/// A variable assignment witnessing a violated check, re-verifiable by
/// evaluating the relation under it.
struct Counterexample {
    SpaceSizes sizes;                             // ground sizes in effect
    std::map<std::string, Partition> assignment;  // every variable, lets included
    Relation relation;
    Partition lhs_atoms;
    Partition rhs_atoms;
    std::uint64_t rank;                           // 0-based position in search order
};

/// What was searched when no violation was found.
struct Certificate {
    SearchMode mode;
    int max_ground;
    std::uint64_t assignments_checked;    // assignments actually evaluated
    std::uint64_t seed = 0;               // random mode only
    std::uint64_t trials = 0;             // random mode only
};

struct MineResult {
    std::optional<Counterexample> counterexample;
    std::optional<Certificate> certificate;   // present iff no counterexample
};

/// Searches for an assignment violating one check statement.
///
/// Spaces carrying a let keep their declared size; every other declared
/// space ranges over 1..max_ground. Exhaustive mode walks size vectors in
/// (total size, then lexicographic) order and, within each, the assignments
/// in lexicographic product order of enumerate_partitions per variable
/// (variables in declaration order), returning the violation of smallest
/// rank. Assignments breaking a constrain declaration are skipped. Random
/// mode draws sizes and partitions uniformly per trial, derived from the
/// seed so results do not depend on scheduling.
///
/// The search may run on several workers; the result (and hence any
/// formatted output) is identical for every worker count.
MineResult mine_check(const Script& script, std::size_t check_index, const MineOptions& options);

/// Runs mine_check on every check of the script, in order.
std::vector<MineResult> mine(const Script& script, const MineOptions& options);

} // namespace siglat::dsl

#endif
