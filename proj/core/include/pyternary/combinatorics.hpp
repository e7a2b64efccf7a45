#ifndef PYTERNARY_COMBINATORICS_HPP
#define PYTERNARY_COMBINATORICS_HPP

#include <vector>

namespace pyternary {

// dim of the space of ternary forms of degree t: (t+1)(t+2)/2, zero for t < 0.
long long dim_forms(long long t);

// Self-complementary partition of a 2k x (2d-2k+2) box with nondecreasing
// rows a_1 <= ... <= a_{2k} satisfying a_i + a_{2k+1-i} = width.  The first k
// rows determine the rest; they range over [0, d-k+1].
struct Partition {
    int d = 0;
    int k = 0;
    std::vector<int> rows; // 2k entries, nondecreasing

    int width() const { return 2 * d - 2 * k + 2; }
    bool operator==(const Partition&) const = default;
};

// Generator/relation degree data of a height-3 Gorenstein resolution with
// socle degree n = 2d.  Lists are index-paired: q_i + p_i = n + 3 and the
// diagonal degrees r_i = p_i - q_i are odd.  Q is nondecreasing, P
// nonincreasing, |Q| odd, q_1 = k.
struct DegreeData {
    int socle = 0;          // n = 2d
    int k = 0;              // minimal generator degree
    std::vector<int> diag;  // r_i, nonincreasing
    std::vector<int> gens;  // q_i, nondecreasing
    std::vector<int> rels;  // p_i, nonincreasing
    bool minimal = false;

    bool operator==(const DegreeData&) const = default;
};

// Graded dimensions T_0..T_n of the quotient algebra.  Symmetric with
// T_0 = T_n = 1 and T_t = dim_forms(t) exactly for t < k.
struct HilbertFunction {
    int socle = 0;
    std::vector<long long> values;

    bool operator==(const HilbertFunction&) const = default;
};

// Evaluates the alternating resolution formula
//   T_t = c(t) - sum c(t-q_i) + sum c(t-p_i) - c(t-n-3)
// and validates the result.  Throws MalformedDegrees if Q and P cannot be
// index-paired, NonGorensteinData if the computed T fails symmetry,
// nonnegativity or T_0 = T_n = 1.
HilbertFunction hilbert_from_degrees(int n, const std::vector<int>& Q,
                                     const std::vector<int>& P);

// dim J_t = c(t) - T_t, valid for any integer t (0 below the minimal
// generator degree, c(t) - 0 above the socle).
long long ideal_dim(int n, const std::vector<int>& Q, const std::vector<int>& P,
                    int t);

// All self-complementary partitions for socle 2d and minimal generator
// degree k, in lexicographic order of the row sequence.  Requires
// 1 <= k <= d+1.
std::vector<Partition> enumerate_partitions(int d, int k);

// Degree data read off a partition: r_1 = 2d+3-2k and r_{i+1} =
// width - 2 a_i + 1, then q_i = (2d+3-r_i)/2 and p_i = 2d+3-q_i.  The result
// is the full (not yet minimalized) data.
DegreeData degrees_from_partition(const Partition& p);

// Removes cancelling diagonal pairs r_i + r_j = 0: for each value v > 0,
// min(count(v), count(-v)) pairs go.  Idempotent; never touches r_1, so
// q_1 = k survives.  The Hilbert function is unchanged.
DegreeData minimalize(const DegreeData& dd);

struct Candidate {
    Partition partition;
    DegreeData full;     // as read off the partition
    DegreeData degrees;  // minimalized
    HilbertFunction hilbert;
};

// Union over k = 1..d+1 of all partitions with their minimal degree data and
// Hilbert functions, in lexicographic order of (k, row sequence).  Distinct
// candidates always carry distinct Hilbert functions.
std::vector<Candidate> enumerate_candidates(int d);

} // namespace pyternary

#endif
