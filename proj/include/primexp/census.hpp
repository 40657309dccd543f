// census.hpp — exhaustive class censuses: exponent histograms, closed-form
// cross-checks against the oracles, the embedded reference table for small
// orders, and machine-readable reports.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "primexp/companion.hpp"
#include "primexp/formula.hpp"

namespace primexp {

inline constexpr int kCensusSchemaVersion = 1;
// Revision of the formula dispatch; cached censuses keyed on it go stale
// whenever a clause changes.
inline constexpr const char* kRulesRevision = "rules-2026.08-r1";

inline constexpr const char* kCacheEnvVar = "PRIMEXP_CACHE_DIR";

struct CensusOptions {
    int jobs = 0;       // 0: pick from hardware_concurrency
    int cap = 16;       // refuse larger n with a size estimate
    bool use_cache = true;  // honored only when PRIMEXP_CACHE_DIR is set
    // Harness self-test: adds 2 to every formula value produced by this
    // rule, so the mismatch report provably localizes to a clause.
    std::optional<Rule> perturb_rule;
};

enum class MismatchKind { exponent, primitivity };

/// One disagreement row; never aborts a census.
struct Mismatch {
    std::uint64_t y = 0;
    MismatchKind kind = MismatchKind::exponent;
    int formula_value = 0;  // primitivity rows carry 0/1 here
    Rule rule = Rule::T32_1;
    int oracle_bfs = 0;
    int oracle_power = 0;
};

/// Exhaustive census of one (n, class): matrix-weighted counts (each
/// canonical graph counts its multiplicity 2), exponent histogram keyed by
/// the oracle value, and all formula/oracle disagreements.
struct ExponentCensus {
    int n = 0;
    ClassTag tag;
    std::uint64_t primitive_count = 0;
    std::uint64_t imprimitive_count = 0;
    std::map<int, std::uint64_t> histogram;
    std::vector<Mismatch> mismatches;
};

/// Runs the census; deterministic output for every worker count (chunks
/// merge in Y order).  Throws std::invalid_argument when n exceeds the cap.
ExponentCensus run_census(int n, ClassTag tag, const CensusOptions& opts = {});

struct Comparison {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct CensusReport {
    std::vector<ExponentCensus> censuses;
    std::vector<Comparison> comparisons;
    int failed_comparisons() const;
};

/// Reference histogram cell for small orders (n in [3,10]).
struct ReferenceCell {
    int n;
    int alpha;
    int eps;
    int b;
    std::uint64_t count;
};

/// The embedded reference table of per-exponent counts, n in [3,10].
const std::vector<ReferenceCell>& reference_table();

/// Censuses for every class over [from, to] plus cell-for-cell comparisons
/// against the reference table wherever it has rows.
CensusReport table1(int from, int to, const CensusOptions& opts = {});

/// Formula-vs-oracle harness: one comparison row per (n, class) asserting
/// zero mismatches, mismatches spelled out in the census blocks.
CensusReport verify(int from, int to, const CensusOptions& opts = {});

/// Census-derived exponent sets against the closed-form sets, including the
/// k-stratified (1,0) subclasses.
CensusReport exponent_sets_report(int from, int to, const CensusOptions& opts = {});

/// Oracle-derived exponent sets of the (1,0) subclasses keyed by the
/// longest zero-run length k.
std::map<int, std::set<int>> k_stratified_sets(int n, const CensusOptions& opts = {});

/// Closed-form count of primitive matrices in one class, matrix-weighted:
/// 2^{n-2} for the loop classes, minus 2^{(n-2)/2} for (1,0) at even n,
/// minus 2^{floor((n-1)/2)} for (0,0).
std::uint64_t expected_primitive_count(int n, ClassTag tag);

}  // namespace primexp
