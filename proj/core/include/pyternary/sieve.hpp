#ifndef PYTERNARY_SIEVE_HPP
#define PYTERNARY_SIEVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pyternary/combinatorics.hpp"
#include "pyternary/toric.hpp"

namespace pyternary {

struct PredicateResult {
    bool ok = true;
    long long value = 0;     // the evaluated quantity
    long long threshold = 0; // what it was compared against
};

// Verdict of the six filters applied to a candidate degree set.
//   F0  minimal generator degree >= 3
//   F1  at least three generators of degree <= d
//   F2  when exactly three generators have degree <= d, their degree sum is
//       at most 2d+3 (complete-intersection socle bound; vacuous otherwise)
//   F3  dim J_d >= d+1
//   F4  initial degree-2d spanning bound >= dim S_{2d} - 1
//   F5  codim J_d = T_d >= 3d-2
// pass is the conjunction; first_failing names the first failed predicate in
// the order F0..F5 (empty when passing).
struct FilterVerdict {
    PredicateResult min_gen_degree;  // F0: k vs 3
    PredicateResult low_gen_count;   // F1: #{q_i <= d} vs 3
    PredicateResult ci_degree_sum;   // F2: sum of the three low degrees vs 2d+3
    PredicateResult ideal_dim_d;     // F3: dim J_d vs d+1
    PredicateResult initial_bound;   // F4: bound vs c(2d)-1
    PredicateResult codim_d;         // F5: T_d vs 3d-2
    bool pass = false;
    std::string first_failing;
};

enum class StrategyKind { ci8, divisor_reduction, constant_syzygy, toric };

struct Strategy {
    StrategyKind kind;
    std::string rationale;
};

const char* strategy_name(StrategyKind k);

// Aggregate results of the randomized witness trials run for one case.
struct TrialRecord {
    std::uint64_t seed = 0;
    int attempts = 0;
    bool validated = false;
    std::optional<bool> toric_relations_ok;
    std::optional<bool> syzygy_nonzero;
    std::optional<int> reduced_count;
    std::optional<double> residual;
    std::optional<bool> divisor_found;
    std::optional<bool> ci8_identity_ok;
};

struct WitnessReport {
    int trials = 0;
    int validated = 0;
    int total_attempts = 0;
    std::vector<TrialRecord> records;
};

// One sieve survivor with everything later pipeline stages attach to it.
struct CaseRecord {
    std::string id; // "<2d>.<index>", index per the sorted survivor list
    Candidate candidate;
    FilterVerdict verdict;
    std::optional<Strategy> strategy;
    std::optional<ToricSummary> toric;
    std::optional<DegreeData> rewritten; // divisor-reduction result, when fired
    std::optional<WitnessReport> witness;
    std::optional<int> py_bound;
    bool inconclusive = false;
    std::vector<std::string> notes;
};

// Upper bound for dim <J_d>_{2d} from the degree data alone:
//   sum_{q_i <= d} c(2d - q_i) - sum_{p_i < m} c(2d - p_i),
// with m = min{q_i : q_i >= d+1}, taken as +infinity (every relation counted)
// when no generator exceeds degree d.
long long initial_bound(int d, const DegreeData& dd);

FilterVerdict apply_filters(int d, const Candidate& c);

// Survivors of the filter pipeline for socle degree 2d, sorted by
// (k, generator degrees lexicographically); ids are "<2d>.<index>" starting
// at 1.  Requires d >= 3.
std::vector<CaseRecord> sieve(int d);

// Every candidate with its verdict, in enumeration order (for --trace and
// for re-checking rejected verdicts independently).
std::vector<std::pair<Candidate, FilterVerdict>> sieve_trace(int d);

} // namespace pyternary

#endif
