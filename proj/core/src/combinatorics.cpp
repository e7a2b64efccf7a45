#include "pyternary/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "pyternary/errors.hpp"

namespace pyternary {

long long dim_forms(long long t) {
    if (t < 0) return 0;
    return (t + 1) * (t + 2) / 2;
}

namespace {

long long resolution_value(int n, const std::vector<int>& Q,
                           const std::vector<int>& P, long long t) {
    long long v = dim_forms(t);
    for (int q : Q) v -= dim_forms(t - q);
    for (int p : P) v += dim_forms(t - p);
    v -= dim_forms(t - n - 3);
    return v;
}

void check_pairing(int n, const std::vector<int>& Q, const std::vector<int>& P) {
    if (Q.size() != P.size())
        throw MalformedDegrees("generator and relation degree lists differ in length");
    for (std::size_t i = 0; i < Q.size(); ++i) {
        if (Q[i] + P[i] != n + 3)
            throw MalformedDegrees("degree pair q_" + std::to_string(i + 1) + " + p_" +
                                   std::to_string(i + 1) + " != socle + 3");
    }
}

} // namespace

HilbertFunction hilbert_from_degrees(int n, const std::vector<int>& Q,
                                     const std::vector<int>& P) {
    check_pairing(n, Q, P);
    HilbertFunction T;
    T.socle = n;
    T.values.resize(n + 1);
    for (int t = 0; t <= n; ++t) T.values[t] = resolution_value(n, Q, P, t);

    for (int t = 0; t <= n; ++t) {
        if (T.values[t] < 0)
            throw NonGorensteinData("negative Hilbert value at degree " + std::to_string(t));
        if (T.values[t] != T.values[n - t])
            throw NonGorensteinData("Hilbert function not symmetric at degree " +
                                    std::to_string(t));
    }
    if (T.values[0] != 1 || T.values[n] != 1)
        throw NonGorensteinData("Hilbert function must start and end at 1");
    return T;
}

long long ideal_dim(int n, const std::vector<int>& Q, const std::vector<int>& P,
                    int t) {
    check_pairing(n, Q, P);
    if (t < 0) return 0;
    return dim_forms(t) - resolution_value(n, Q, P, t);
}

std::vector<Partition> enumerate_partitions(int d, int k) {
    if (k < 1 || k > d + 1)
        throw std::invalid_argument("minimal generator degree k must lie in [1, d+1]");
    const int w = 2 * d - 2 * k + 2;
    const int half_max = d - k + 1; // = w/2

    std::vector<Partition> out;
    std::vector<int> half(k, 0);
    while (true) {
        Partition p;
        p.d = d;
        p.k = k;
        p.rows.resize(2 * k);
        for (int i = 0; i < k; ++i) {
            p.rows[i] = half[i];
            p.rows[2 * k - 1 - i] = w - half[i];
        }
        out.push_back(std::move(p));

        // next nondecreasing tuple in lexicographic order
        int i = k - 1;
        while (i >= 0 && half[i] == half_max) --i;
        if (i < 0) break;
        ++half[i];
        for (int j = i + 1; j < k; ++j) half[j] = half[i];
    }
    return out;
}

DegreeData degrees_from_partition(const Partition& p) {
    const int d = p.d;
    const int k = p.k;
    const int w = p.width();
    const int n = 2 * d;

    DegreeData dd;
    dd.socle = n;
    dd.k = k;
    dd.minimal = false;
    dd.diag.reserve(2 * k + 1);
    dd.diag.push_back(2 * d + 3 - 2 * k);
    for (int i = 0; i < 2 * k; ++i) dd.diag.push_back(w - 2 * p.rows[i] + 1);

    for (int r : dd.diag) {
        dd.gens.push_back((2 * d + 3 - r) / 2);
        dd.rels.push_back((2 * d + 3 + r) / 2);
    }
    return dd;
}

DegreeData minimalize(const DegreeData& dd) {
    std::map<int, int> count;
    for (int r : dd.diag) ++count[r];

    // occurrences of +v and -v to drop, per positive value v
    std::map<int, int> drop;
    for (const auto& [v, c] : count) {
        if (v <= 0) continue;
        auto it = count.find(-v);
        if (it == count.end()) continue;
        drop[v] = std::min(c, it->second);
    }

    DegreeData out;
    out.socle = dd.socle;
    out.k = dd.k;
    out.minimal = true;
    std::map<int, int> left_pos = drop, left_neg = drop;
    for (int r : dd.diag) {
        auto& left = (r > 0) ? left_pos : left_neg;
        auto it = left.find(std::abs(r));
        if (it != left.end() && it->second > 0) {
            --it->second;
            continue;
        }
        out.diag.push_back(r);
        out.gens.push_back((dd.socle + 3 - r) / 2);
        out.rels.push_back((dd.socle + 3 + r) / 2);
    }
    return out;
}

std::vector<Candidate> enumerate_candidates(int d) {
    std::vector<Candidate> out;
    std::map<std::vector<long long>, int> seen;
    for (int k = 1; k <= d + 1; ++k) {
        for (Partition& p : enumerate_partitions(d, k)) {
            Candidate c;
            c.full = degrees_from_partition(p);
            c.degrees = minimalize(c.full);
            c.hilbert = hilbert_from_degrees(2 * d, c.degrees.gens, c.degrees.rels);
            c.partition = std::move(p);
            auto [it, fresh] = seen.emplace(c.hilbert.values, 1);
            if (!fresh)
                throw NonGorensteinData("two candidates share a Hilbert function");
            out.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace pyternary
