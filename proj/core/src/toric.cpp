#include "pyternary/toric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "pyternary/combinatorics.hpp"
#include "pyternary/errors.hpp"

namespace pyternary {

const char* variety_class_name(VarietyClass c) {
    switch (c) {
        case VarietyClass::minimal: return "minimal";
        case VarietyClass::almost_minimal_acm: return "almost-minimal-aCM";
        case VarietyClass::other: return "other";
    }
    return "?";
}

std::vector<std::vector<int>> StackedPolytope::ambient_points() const {
    std::vector<std::vector<int>> pts;
    pts.reserve(omega.size());
    for (const auto& [i, j, k] : omega) {
        std::vector<int> p(dim(), 0);
        p[0] = j;
        p[1] = k;
        if (i >= 2) p[i] = 1; // z_{i-1} coordinate
        pts.push_back(std::move(p));
    }
    return pts;
}

namespace {

// Lattice points of the triangle {x, y >= 0, x + y <= size}, graded by total
// degree then x descending; matches the omega listing order.
std::vector<std::array<int, 2>> triangle_points(int size) {
    std::vector<std::array<int, 2>> pts;
    for (int deg = 0; deg <= size; ++deg)
        for (int j = deg; j >= 0; --j) pts.push_back({j, deg - j});
    return pts;
}

// Enumerates nonnegative integer weight vectors u with |u| = t over the
// layers; cb(u) is called with the weights.
template <typename F>
void for_each_weight(int layers, long long t, F&& cb) {
    std::vector<long long> u(layers, 0);
    // iterative multi-index enumeration
    auto rec = [&](auto&& self, int pos, long long rem) -> void {
        if (pos == layers - 1) {
            u[pos] = rem;
            cb(u);
            return;
        }
        for (long long v = 0; v <= rem; ++v) {
            u[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, t);
}

} // namespace

StackedPolytope build_polytope(int d, const std::vector<int>& gens) {
    StackedPolytope p;
    p.d = d;
    for (int q : gens) {
        if (q < d) p.m.push_back(d - q);
        else if (q == d) ++p.cone_count;
        // q > d: no degree-d multiples, ignored
    }
    if (p.m.empty())
        throw NoLowDegreeGenerators("no generator of degree below d = " + std::to_string(d));
    std::sort(p.m.begin(), p.m.end(), std::greater<int>());

    for (int i = 1; i <= p.layers(); ++i)
        for (const auto& [j, k] : triangle_points(p.m[i - 1]))
            p.omega.push_back({i, j, k});
    return p;
}

long long dilate_count(const StackedPolytope& p, long long t) {
    long long total = 0;
    for_each_weight(p.layers(), t, [&](const std::vector<long long>& u) {
        long long size = 0;
        for (int i = 0; i < p.layers(); ++i) size += p.m[i] * u[i];
        total += (size + 1) * (size + 2) / 2;
    });
    return total;
}

std::vector<std::vector<int>> dilate_points(const StackedPolytope& p, long long t) {
    std::vector<std::vector<int>> pts;
    for_each_weight(p.layers(), t, [&](const std::vector<long long>& u) {
        long long size = 0;
        for (int i = 0; i < p.layers(); ++i) size += p.m[i] * u[i];
        for (int deg = 0; deg <= size; ++deg)
            for (int j = deg; j >= 0; --j) {
                std::vector<int> pt(p.dim());
                pt[0] = j;
                pt[1] = deg - j;
                for (int i = 1; i < p.layers(); ++i) pt[1 + i] = static_cast<int>(u[i]);
                pts.push_back(std::move(pt));
            }
    });
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<mpq_class> ehrhart(const StackedPolytope& p) {
    const int D = p.dim();
    // Vandermonde system at t = 0..D, solved exactly by Gaussian elimination.
    std::vector<std::vector<mpq_class>> a(D + 1, std::vector<mpq_class>(D + 2));
    for (int r = 0; r <= D; ++r) {
        mpq_class pw = 1;
        for (int c = 0; c <= D; ++c) {
            a[r][c] = pw;
            pw *= r;
        }
        a[r][D + 1] = static_cast<long>(dilate_count(p, r));
    }
    for (int col = 0; col <= D; ++col) {
        int piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        const mpq_class pivot = a[col][col];
        for (int c = col; c <= D + 1; ++c) a[col][c] /= pivot;
        for (int r = 0; r <= D; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const mpq_class f = a[r][col];
            for (int c = col; c <= D + 1; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<mpq_class> coeffs(D + 1);
    for (int i = 0; i <= D; ++i) {
        coeffs[i] = a[i][D + 1];
        coeffs[i].canonicalize();
    }

    for (long long t = D + 1; t <= D + 2; ++t) {
        mpq_class val = 0, pw = 1;
        for (int i = 0; i <= D; ++i) {
            val += coeffs[i] * pw;
            pw *= static_cast<long>(t);
        }
        if (val != static_cast<long>(dilate_count(p, t)))
            throw InterpolationMismatch("Ehrhart interpolation fails at t = " +
                                        std::to_string(t));
    }
    return coeffs;
}

long long normalized_volume(const StackedPolytope& p) {
    const auto coeffs = ehrhart(p);
    mpq_class lead = coeffs.back();
    for (int i = 2; i <= p.dim(); ++i) lead *= i;
    lead.canonicalize();
    if (lead.get_den() != 1 || lead <= 0)
        throw InterpolationMismatch("normalized volume is not a positive integer");
    return static_cast<long long>(lead.get_num().get_si());
}

namespace {

// w in sK, directly from the H-representation.
bool in_dilate(const StackedPolytope& p, const std::vector<int>& w, long long s) {
    if (w[0] < 0 || w[1] < 0) return false;
    long long zsum = 0;
    long long cap = s * p.m[0];
    for (int j = 1; j < p.layers(); ++j) {
        const int zj = w[1 + j];
        if (zj < 0) return false;
        zsum += zj;
        cap += static_cast<long long>(p.m[j] - p.m[0]) * zj;
    }
    return zsum <= s && w[0] + w[1] <= cap;
}

} // namespace

bool idp_check(const StackedPolytope& p) {
    long long work = 0;
    for (int t = 2; t <= p.dim() + 1; ++t) work += dilate_count(p, t);

    if (work <= 50000) {
        // sumset route: build (K cap Z) + ((t-1)K cap Z) outright
        const auto base = dilate_points(p, 1);
        auto prev = base;
        bool idp = true;
        for (int t = 2; t <= p.dim() + 1; ++t) {
            const auto target = dilate_points(p, t);
            std::set<std::vector<int>> sums;
            for (const auto& a : base)
                for (const auto& b : prev) {
                    std::vector<int> s(a.size());
                    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
                    sums.insert(std::move(s));
                }
            // one-sided containment holds for any polytope; a violation means
            // the point enumeration itself is wrong
            for (const auto& s : sums)
                if (!std::binary_search(target.begin(), target.end(), s))
                    throw std::logic_error("sumset escapes the dilate; enumeration bug");
            if (sums.size() != target.size()) idp = false;
            prev = std::move(target);
        }
        return idp;
    }

    // decomposition route for large dilates: tK = K + (t-1)K iff every lattice
    // point of tK splits off a lattice point of K (the reverse containment is
    // linear arithmetic on the H-representation)
    const auto base = dilate_points(p, 1);
    for (int t = 2; t <= p.dim() + 1; ++t) {
        for (const auto& v : dilate_points(p, t)) {
            bool found = false;
            std::vector<int> diff(v.size());
            for (const auto& a : base) {
                for (std::size_t i = 0; i < v.size(); ++i) diff[i] = v[i] - a[i];
                if (in_dilate(p, diff, t - 1)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

ToricSummary classify(const StackedPolytope& p) {
    ToricSummary s;
    s.points = static_cast<long long>(p.omega.size());
    s.base_dim = p.dim();
    s.codim = s.points - 1 - s.base_dim;
    s.ehrhart_coeffs = ehrhart(p);
    mpq_class lead = s.ehrhart_coeffs.back();
    for (int i = 2; i <= p.dim(); ++i) lead *= i;
    lead.canonicalize();
    s.degree = static_cast<long long>(lead.get_num().get_si());
    s.idp = idp_check(p);
    s.cone_count = p.cone_count;
    s.dim = s.base_dim + s.cone_count;

    if (s.degree < s.codim + 1)
        throw std::logic_error("degree below codim + 1; not a nondegenerate toric embedding");

    // the normalized volume equals the embedded degree only under projective
    // normality, so both classifications demand the IDP certificate
    if (!s.idp) {
        s.cls = VarietyClass::other;
        s.assumptions.push_back(
            "IDP not verified: normalized volume cannot be equated with the "
            "embedded degree, no bound");
    } else if (s.degree == s.codim + 1) {
        s.cls = VarietyClass::minimal;
        s.py_bound = s.dim + 1;
    } else if (s.degree == s.codim + 2) {
        s.cls = VarietyClass::almost_minimal_acm;
        s.py_bound = s.dim + 2;
        s.assumptions.push_back(
            "aCM certified through IDP (normal semigroup ring is Cohen-Macaulay)");
    } else {
        s.cls = VarietyClass::other;
    }
    if (s.cone_count > 0 && s.cls == VarietyClass::almost_minimal_acm)
        s.assumptions.push_back("cones over aCM varieties taken as aCM");
    return s;
}

} // namespace pyternary
