#include <doctest.h>

#include <algorithm>
#include <set>

#include "pyternary/errors.hpp"
#include "pyternary/rng.hpp"
#include "pyternary/toric.hpp"

using namespace pyternary;

namespace {

// Independent lattice-point oracle straight from the H-representation of the
// dilate: x, y >= 0, z_j >= 0, sum z_j <= t, x + y <= t m_1 + sum (m_{j+1} -
// m_1) z_j.  Shares no code with the closed-form counting.
std::set<std::vector<int>> hrep_points(const std::vector<int>& m, int t) {
    const int s = static_cast<int>(m.size());
    std::set<std::vector<int>> pts;
    std::vector<int> z(s - 1, 0);
    const int zmax = t;
    const int xymax = t * *std::max_element(m.begin(), m.end());
    auto valid_z = [&]() {
        int sum = 0;
        for (int v : z) sum += v;
        return sum <= t;
    };
    for (;;) {
        if (valid_z()) {
            long long cap = static_cast<long long>(t) * m[0];
            for (int j = 0; j + 1 < s; ++j) cap += static_cast<long long>(m[j + 1] - m[0]) * z[j];
            for (int x = 0; x <= xymax; ++x)
                for (int y = 0; x + y <= cap && y <= xymax; ++y) {
                    std::vector<int> p{x, y};
                    p.insert(p.end(), z.begin(), z.end());
                    pts.insert(std::move(p));
                }
        }
        int i = s - 2;
        while (i >= 0 && z[i] == zmax) --i;
        if (i < 0) break;
        ++z[i];
        for (int j = i + 1; j < s - 1; ++j) z[j] = 0;
    }
    return pts;
}

StackedPolytope make(const std::vector<int>& m, int cones = 0) {
    // realize triangle sizes m at level d = max(m)+1 via degrees d - m_i
    const int d = *std::max_element(m.begin(), m.end()) + 1;
    std::vector<int> gens;
    for (int mi : m) gens.push_back(d - mi);
    for (int i = 0; i < cones; ++i) gens.push_back(d);
    return build_polytope(d, gens);
}

} // namespace

TEST_CASE("build_polytope matches the worked point lists") {
    SUBCASE("two unit triangles plus one cone point") {
        const StackedPolytope p = build_polytope(5, {4, 4, 5});
        CHECK(p.m == std::vector<int>{1, 1});
        CHECK(p.cone_count == 1);
        const std::vector<std::vector<int>> expected{
            {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}};
        CHECK(p.ambient_points() == expected);
    }
    SUBCASE("sizes two and one") {
        const StackedPolytope p = build_polytope(6, {4, 5, 6});
        CHECK(p.m == std::vector<int>{2, 1});
        CHECK(p.cone_count == 1);
        const auto pts = p.ambient_points();
        for (const std::vector<int>& v : {std::vector<int>{0, 0, 0}, {2, 0, 0}, {0, 2, 0},
                                          {0, 0, 1}, {1, 0, 1}, {0, 1, 1}})
            CHECK(std::find(pts.begin(), pts.end(), v) != pts.end());
        CHECK(pts.size() == 9);
    }
    SUBCASE("single triangle with two cone points") {
        const StackedPolytope p = build_polytope(5, {3, 5, 5});
        CHECK(p.m == std::vector<int>{2});
        CHECK(p.cone_count == 2);
        CHECK(p.omega.size() == 6);
    }
    SUBCASE("generators above d are ignored") {
        const StackedPolytope p = build_polytope(6, {4, 6, 6, 6, 8});
        CHECK(p.m == std::vector<int>{2});
        CHECK(p.cone_count == 3);
    }
    SUBCASE("no generator below d") {
        CHECK_THROWS_AS(build_polytope(5, {5, 5, 5}), NoLowDegreeGenerators);
        CHECK_THROWS_AS(build_polytope(5, {6, 7}), NoLowDegreeGenerators);
    }
}

TEST_CASE("dilate_count closed form vs brute-force H-representation oracle") {
    SUBCASE("single triangle of size two at t=1") {
        CHECK(dilate_count(make({2}), 1) == 6);
    }
    SUBCASE("triple unit prism at t=1") {
        CHECK(dilate_count(make({1, 1, 1}), 1) == 9);
    }
    SUBCASE("sizes (2,1) at t=2, equals N(4)+N(3)+N(2)") {
        CHECK(dilate_count(make({2, 1}), 2) == 31);
        CHECK(31 == 15 + 10 + 6);
    }
    SUBCASE("oracle agreement over a family") {
        for (const auto& m : std::vector<std::vector<int>>{
                 {1}, {3}, {2, 1}, {2, 2}, {3, 1}, {1, 1, 1}, {3, 2, 1}, {2, 2, 1, 1}}) {
            const StackedPolytope p = make(m);
            for (int t = 0; t <= 3; ++t) {
                CHECK(dilate_count(p, t) ==
                      static_cast<long long>(hrep_points(m, t).size()));
                // the enumerated point set is the same set the oracle finds
                const auto pts = dilate_points(p, t);
                CHECK(std::set<std::vector<int>>(pts.begin(), pts.end()) ==
                      hrep_points(m, t));
            }
        }
    }
}

TEST_CASE("dilate_count endpoints") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> m(rng.uniform_int(1, 4));
        for (int& v : m) v = rng.uniform_int(1, 4);
        std::sort(m.begin(), m.end(), std::greater<int>());
        const StackedPolytope p = make(m, rng.uniform_int(0, 2));
        CHECK(dilate_count(p, 0) == 1);
        CHECK(dilate_count(p, 1) == static_cast<long long>(p.omega.size()));
    }
}

TEST_CASE("ehrhart polynomials") {
    SUBCASE("triangle of size two: N(2t) = 2t^2 + 3t + 1") {
        const auto c = ehrhart(make({2}));
        REQUIRE(c.size() == 3);
        CHECK(c[0] == 1);
        CHECK(c[1] == 3);
        CHECK(c[2] == 2);
    }
    SUBCASE("unit triangle: (t+1)(t+2)/2") {
        const auto c = ehrhart(make({1}));
        REQUIRE(c.size() == 3);
        CHECK(c[0] == 1);
        CHECK(c[1] == mpq_class(3, 2));
        CHECK(c[2] == mpq_class(1, 2));
    }
    SUBCASE("sizes (2,1): cubic with leading coefficient 7/6") {
        const auto c = ehrhart(make({2, 1}));
        REQUIRE(c.size() == 4);
        CHECK(c[3] == mpq_class(7, 6));
    }
    SUBCASE("evaluations beyond the interpolation nodes match the counter") {
        for (const auto& m : std::vector<std::vector<int>>{{2}, {2, 1}, {1, 1, 1}, {3}}) {
            const StackedPolytope p = make(m);
            const auto c = ehrhart(p);
            for (long long t = p.dim() + 1; t <= p.dim() + 2; ++t) {
                mpq_class val = 0, pw = 1;
                for (const auto& ci : c) {
                    val += ci * pw;
                    pw *= static_cast<long>(t);
                }
                CHECK(val == static_cast<long>(dilate_count(p, t)));
            }
        }
    }
}

TEST_CASE("normalized_volume") {
    CHECK(normalized_volume(make({2})) == 4);      // quadratic Veronese surface
    CHECK(normalized_volume(make({2, 1})) == 7);
    CHECK(normalized_volume(make({1, 1, 1})) == 6); // C(4,2)
}

TEST_CASE("idp_check holds on the stacked family") {
    CHECK(idp_check(make({3})));
    CHECK(idp_check(make({2, 1})));
    CHECK(idp_check(make({1, 1, 1})));
    CHECK(idp_check(make({3, 2, 1})));
}

TEST_CASE("classify") {
    struct Row {
        int d;
        std::vector<int> gens;
        int dim;
        long long codim, degree;
        VarietyClass cls;
        int py;
    };
    const std::vector<Row> rows = {
        {5, {3, 5, 5}, 4, 3, 4, VarietyClass::minimal, 5},
        {5, {4, 4, 5}, 4, 2, 3, VarietyClass::minimal, 5},
        {6, {3, 6, 6}, 4, 7, 9, VarietyClass::almost_minimal_acm, 6},
        {6, {4, 5, 6}, 4, 5, 7, VarietyClass::almost_minimal_acm, 6},
        {6, {4, 6, 6, 6, 8}, 5, 3, 4, VarietyClass::minimal, 6},
        {6, {5, 5, 5}, 4, 4, 6, VarietyClass::almost_minimal_acm, 6},
        {6, {5, 5, 6, 6, 8}, 5, 2, 3, VarietyClass::minimal, 6},
        {4, {3, 4, 4}, 4, 0, 1, VarietyClass::minimal, 5},
    };
    for (const Row& r : rows) {
        CAPTURE(r.d);
        const ToricSummary s = classify(build_polytope(r.d, r.gens));
        CHECK(s.dim == r.dim);
        CHECK(s.codim == r.codim);
        CHECK(s.degree == r.degree);
        CHECK(s.cls == r.cls);
        CHECK(s.idp);
        REQUIRE(s.py_bound.has_value());
        CHECK(*s.py_bound == r.py);
        CHECK(s.degree >= s.codim + 1);
    }
}
