#include "pyternary/sieve.hpp"

#include <algorithm>
#include <stdexcept>

namespace pyternary {

const char* strategy_name(StrategyKind k) {
    switch (k) {
        case StrategyKind::ci8: return "ci8";
        case StrategyKind::divisor_reduction: return "divisor-reduction";
        case StrategyKind::constant_syzygy: return "constant-syzygy";
        case StrategyKind::toric: return "toric";
    }
    return "?";
}

long long initial_bound(int d, const DegreeData& dd) {
    const int n = 2 * d;
    long long m = -1; // -1 encodes +infinity: every relation is subtracted
    for (int q : dd.gens)
        if (q >= d + 1 && (m < 0 || q < m)) m = q;

    long long bound = 0;
    bool any_low = false;
    for (int q : dd.gens)
        if (q <= d) {
            any_low = true;
            bound += dim_forms(n - q);
        }
    if (!any_low) return 0; // nothing of degree d generates anything
    for (int p : dd.rels)
        if (m < 0 || p < m) bound -= dim_forms(n - p);
    return std::max(bound, 0LL); // it bounds a dimension
}

FilterVerdict apply_filters(int d, const Candidate& c) {
    const DegreeData& dd = c.degrees;
    const HilbertFunction& T = c.hilbert;
    FilterVerdict v;

    v.min_gen_degree = {dd.k >= 3, dd.k, 3};

    long long low = 0;
    long long low_sum = 0;
    for (int q : dd.gens)
        if (q <= d) {
            ++low;
            low_sum += q;
        }
    v.low_gen_count = {low >= 3, low, 3};

    // With exactly three base-point-free generators of degree <= d the ideal
    // contains a complete intersection with socle degree low_sum - 3; a sum
    // above 2d+3 caps <J_d>_{2d} below hyperplane dimension.  Only the upper
    // bound is tested: the equality version would also reject four socle-14
    // degree sets that belong to the case list.
    if (low == 3)
        v.ci_degree_sum = {low_sum <= 2 * d + 3, low_sum, 2 * d + 3};
    else
        v.ci_degree_sum = {true, low_sum, 2 * d + 3};

    const long long dim_jd = dim_forms(d) - T.values[d];
    v.ideal_dim_d = {dim_jd >= d + 1, dim_jd, d + 1};

    const long long bound = initial_bound(d, dd);
    v.initial_bound = {bound >= dim_forms(2 * d) - 1, bound, dim_forms(2 * d) - 1};

    v.codim_d = {T.values[d] >= 3 * d - 2, T.values[d], 3 * d - 2};

    v.pass = v.min_gen_degree.ok && v.low_gen_count.ok && v.ci_degree_sum.ok &&
             v.ideal_dim_d.ok && v.initial_bound.ok && v.codim_d.ok;
    if (!v.pass) {
        if (!v.min_gen_degree.ok) v.first_failing = "F0";
        else if (!v.low_gen_count.ok) v.first_failing = "F1";
        else if (!v.ci_degree_sum.ok) v.first_failing = "F2";
        else if (!v.ideal_dim_d.ok) v.first_failing = "F3";
        else if (!v.initial_bound.ok) v.first_failing = "F4";
        else v.first_failing = "F5";
    }
    return v;
}

std::vector<std::pair<Candidate, FilterVerdict>> sieve_trace(int d) {
    if (d < 3) throw std::invalid_argument("sieve requires d >= 3");
    std::vector<std::pair<Candidate, FilterVerdict>> out;
    for (Candidate& c : enumerate_candidates(d)) {
        FilterVerdict v = apply_filters(d, c);
        out.emplace_back(std::move(c), std::move(v));
    }
    return out;
}

std::vector<CaseRecord> sieve(int d) {
    std::vector<CaseRecord> out;
    for (auto& [cand, verdict] : sieve_trace(d)) {
        if (!verdict.pass) continue;
        CaseRecord rec;
        rec.candidate = std::move(cand);
        rec.verdict = std::move(verdict);
        out.push_back(std::move(rec));
    }
    std::stable_sort(out.begin(), out.end(), [](const CaseRecord& a, const CaseRecord& b) {
        if (a.candidate.degrees.k != b.candidate.degrees.k)
            return a.candidate.degrees.k < b.candidate.degrees.k;
        return a.candidate.degrees.gens < b.candidate.degrees.gens;
    });
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].id = std::to_string(2 * d) + "." + std::to_string(i + 1);
    return out;
}

} // namespace pyternary
