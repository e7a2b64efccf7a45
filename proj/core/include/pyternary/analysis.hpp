#ifndef PYTERNARY_ANALYSIS_HPP
#define PYTERNARY_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pyternary/sieve.hpp"

namespace pyternary {

// Deterministic per-case strategy:
//   ci8               d = 4 (the lone socle-8 complete intersection)
//   divisor-reduction some relation degree p sees exactly two generators of
//                     degree < p, both of degree p-1 (a linear syzygy between
//                     two forms forces a common factor)
//   constant-syzygy   dim J_d = d+1 and a relation in degree <= d+1
//   toric             everything else
// Precedence in that order.
Strategy select_strategy(int d, const CaseRecord& c);

// Divisor-reduction rewrite: the two degree-(p-1) generators sharing the
// forced degree-(p-2) divisor collapse to one degree-(p-2) generator and the
// spent relation is dropped.
DegreeData rewrite_divisor_case(const DegreeData& dd, int relation_degree);

struct StageCount {
    std::string name;
    long long in = 0;
    long long out = 0;
};

struct AnalysisReport {
    std::string version;
    int degree = 0; // 2d
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<StageCount> stages;
    std::vector<CaseRecord> cases;
};

// Full pipeline for socle degree 2d: enumerate, sieve, select strategies,
// classify toric cases, run seeded witness trials per case.  Deterministic:
// identical (d, seed, trials) give identical reports.  Guarded to d <= 10
// unless force is set (enumeration grows exponentially).
AnalysisReport analyze(int d, std::uint64_t seed, int trials, bool force = false);

enum class ReportFormat { structured, markdown };

// Serializes a report; structured output is JSON with stable key order and
// rationals as {num, den} pairs.
std::string render_report(const AnalysisReport& r, ReportFormat format);

ReportFormat parse_format(const std::string& name); // throws UnknownFormat

} // namespace pyternary

#endif
