#include <doctest.h>

#include <algorithm>

#include "pyternary/sieve.hpp"

using namespace pyternary;

namespace {

Candidate find_candidate(int d, const std::vector<int>& gens) {
    for (Candidate& c : enumerate_candidates(d))
        if (c.degrees.gens == gens) return c;
    REQUIRE_MESSAGE(false, "candidate not enumerated");
    return {};
}

// (Q, P) pairs per surviving case, in sieve output order.
std::vector<std::pair<std::vector<int>, std::vector<int>>> survivors(int d) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const CaseRecord& c : sieve(d))
        out.emplace_back(c.candidate.degrees.gens, c.candidate.degrees.rels);
    return out;
}

} // namespace

TEST_CASE("initial_bound") {
    SUBCASE("socle 8 complete intersection attains the hyperplane bound") {
        // 21 + 15 + 15 - (1 + 3 + 3); no generator above d, every relation counts
        const auto c = find_candidate(4, {3, 4, 4});
        CHECK(initial_bound(4, c.degrees) == 44);
        CHECK(44 == dim_forms(8) - 1);
    }
    SUBCASE("socle 10 cubic-plus-quintics: 36 + 21 + 21 - (1 + 6 + 6)") {
        const auto c = find_candidate(5, {3, 5, 5});
        CHECK(initial_bound(5, c.degrees) == 65);
        CHECK(65 == dim_forms(10) - 1);
    }
    SUBCASE("no generator of degree <= d gives an empty first sum") {
        DegreeData dd;
        dd.socle = 6;
        dd.k = 5;
        dd.gens = {5, 5, 5};
        dd.rels = {4, 4, 4};
        dd.minimal = true;
        CHECK(initial_bound(3, dd) == 0);
    }
}

TEST_CASE("apply_filters on the worked socle-8 candidates") {
    SUBCASE("the surviving complete intersection") {
        const auto c = find_candidate(4, {3, 4, 4});
        const FilterVerdict v = apply_filters(4, c);
        CHECK(v.pass);
        CHECK(v.ideal_dim_d.value == 5);
        CHECK(v.codim_d.value == 10); // = 3d - 2 exactly
        CHECK(v.codim_d.threshold == 10);
        CHECK(v.initial_bound.value == 44);
        CHECK(v.initial_bound.threshold == 44);
        CHECK(v.first_failing.empty());
    }
    SUBCASE("(3,3,5) fails the codimension filter") {
        const auto c = find_candidate(4, {3, 3, 5});
        const FilterVerdict v = apply_filters(4, c);
        CHECK(!v.pass);
        CHECK(!v.codim_d.ok);
        CHECK(v.codim_d.value == 9); // T_4 = 9 < 10
    }
    SUBCASE("(3,3,3,3,7,7,7) fails the codimension filter") {
        const auto c = find_candidate(4, {3, 3, 3, 3, 7, 7, 7});
        const FilterVerdict v = apply_filters(4, c);
        CHECK(!v.pass);
        CHECK(!v.codim_d.ok);
        CHECK(v.codim_d.value == 6); // T_4 = 6 < 10
    }
}

TEST_CASE("sieve golden list at socle 8") {
    const auto s = survivors(4);
    REQUIRE(s.size() == 1);
    CHECK(s[0].first == std::vector<int>{3, 4, 4});
    CHECK(s[0].second == std::vector<int>{8, 7, 7});

    // F3 and F5 jointly pin dim J_4 = 5 exactly
    const auto recs = sieve(4);
    CHECK(recs[0].verdict.ideal_dim_d.value == 5);
    CHECK(dim_forms(4) - recs[0].verdict.codim_d.value == 5);
}

TEST_CASE("sieve golden list at socle 10") {
    const auto s = survivors(5);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == std::pair(std::vector<int>{3, 5, 5}, std::vector<int>{10, 8, 8}));
    CHECK(s[1] == std::pair(std::vector<int>{4, 4, 5}, std::vector<int>{9, 9, 8}));
    CHECK(s[2] ==
          std::pair(std::vector<int>{4, 5, 5, 5, 7}, std::vector<int>{9, 8, 8, 8, 6}));
}

TEST_CASE("sieve golden list at socle 12") {
    const auto s = survivors(6);
    REQUIRE(s.size() == 7);
    CHECK(s[0] == std::pair(std::vector<int>{3, 6, 6}, std::vector<int>{12, 9, 9}));
    CHECK(s[1] == std::pair(std::vector<int>{4, 4, 6, 6, 10},
                            std::vector<int>{11, 11, 9, 9, 5}));
    CHECK(s[2] == std::pair(std::vector<int>{4, 5, 6}, std::vector<int>{11, 10, 9}));
    // the relation list here is forced by q_i + p_i = 15
    CHECK(s[3] == std::pair(std::vector<int>{4, 6, 6, 6, 8},
                            std::vector<int>{11, 9, 9, 9, 7}));
    CHECK(s[4] == std::pair(std::vector<int>{5, 5, 5}, std::vector<int>{10, 10, 10}));
    CHECK(s[5] == std::pair(std::vector<int>{5, 5, 6, 6, 8},
                            std::vector<int>{10, 10, 9, 9, 7}));
    CHECK(s[6] == std::pair(std::vector<int>{5, 6, 6, 6, 6, 8, 8},
                            std::vector<int>{10, 9, 9, 9, 9, 7, 7}));
}

TEST_CASE("sieve case count at socle 14") {
    CHECK(sieve(7).size() == 22);
}

TEST_CASE("sieve requires d >= 3") {
    CHECK_THROWS_AS(sieve(2), std::invalid_argument);
}

TEST_CASE("sieve output is sorted by (k, Q) and ids are sequential") {
    for (int d = 4; d <= 7; ++d) {
        const auto recs = sieve(d);
        for (std::size_t i = 0; i < recs.size(); ++i) {
            CHECK(recs[i].id == std::to_string(2 * d) + "." + std::to_string(i + 1));
            if (i == 0) continue;
            const auto& a = recs[i - 1].candidate.degrees;
            const auto& b = recs[i].candidate.degrees;
            CHECK((a.k < b.k || (a.k == b.k && a.gens < b.gens)));
        }
    }
}

TEST_CASE("rejected verdicts name a predicate that independently fails") {
    for (int d = 4; d <= 6; ++d) {
        for (const auto& [cand, v] : sieve_trace(d)) {
            if (v.pass) {
                CHECK(v.first_failing.empty());
                continue;
            }
            REQUIRE(!v.first_failing.empty());
            const DegreeData& dd = cand.degrees;
            const auto& T = cand.hilbert.values;
            long long low = 0, low_sum = 0;
            for (int q : dd.gens)
                if (q <= d) {
                    ++low;
                    low_sum += q;
                }
            if (v.first_failing == "F0") CHECK(dd.k < 3);
            else if (v.first_failing == "F1") CHECK(low < 3);
            else if (v.first_failing == "F2") CHECK((low == 3 && low_sum > 2 * d + 3));
            else if (v.first_failing == "F3") CHECK(dim_forms(d) - T[d] < d + 1);
            else if (v.first_failing == "F4")
                CHECK(initial_bound(d, dd) < dim_forms(2 * d) - 1);
            else if (v.first_failing == "F5") CHECK(T[d] < 3 * d - 2);
            else CHECK(false);
        }
    }
}
