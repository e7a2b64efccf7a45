#include <doctest.h>

#include <algorithm>

#include "pyternary/analysis.hpp"
#include "pyternary/errors.hpp"

using namespace pyternary;

namespace {

CaseRecord find_case(int d, const std::vector<int>& gens) {
    for (CaseRecord& c : sieve(d))
        if (c.candidate.degrees.gens == gens) return c;
    REQUIRE_MESSAGE(false, "case not in the sieve output");
    return {};
}

} // namespace

TEST_CASE("select_strategy on the known cases") {
    CHECK(select_strategy(4, find_case(4, {3, 4, 4})).kind == StrategyKind::ci8);

    CHECK(select_strategy(5, find_case(5, {3, 5, 5})).kind == StrategyKind::toric);
    CHECK(select_strategy(5, find_case(5, {4, 4, 5})).kind == StrategyKind::toric);
    CHECK(select_strategy(5, find_case(5, {4, 5, 5, 5, 7})).kind ==
          StrategyKind::constant_syzygy);

    CHECK(select_strategy(6, find_case(6, {3, 6, 6})).kind == StrategyKind::toric);
    CHECK(select_strategy(6, find_case(6, {4, 4, 6, 6, 10})).kind ==
          StrategyKind::divisor_reduction);
    CHECK(select_strategy(6, find_case(6, {4, 5, 6})).kind == StrategyKind::toric);
    CHECK(select_strategy(6, find_case(6, {4, 6, 6, 6, 8})).kind == StrategyKind::toric);
    CHECK(select_strategy(6, find_case(6, {5, 5, 5})).kind == StrategyKind::toric);
    CHECK(select_strategy(6, find_case(6, {5, 5, 6, 6, 8})).kind == StrategyKind::toric);
    CHECK(select_strategy(6, find_case(6, {5, 6, 6, 6, 6, 8, 8})).kind ==
          StrategyKind::constant_syzygy);
}

TEST_CASE("divisor rewrite collapses the two quartics to a cubic") {
    const CaseRecord c = find_case(6, {4, 4, 6, 6, 10});
    const DegreeData r = rewrite_divisor_case(c.candidate.degrees, 5);
    CHECK(r.gens == std::vector<int>{3, 6, 6, 10});
    CHECK(r.rels == std::vector<int>{11, 11, 9, 9});
    CHECK(r.k == 3);
}

TEST_CASE("analyze at socle 10") {
    const AnalysisReport rep = analyze(5, 11, 3);
    REQUIRE(rep.cases.size() == 3);
    CHECK(rep.degree == 10);

    CHECK(rep.cases[0].strategy->kind == StrategyKind::toric);
    CHECK(rep.cases[1].strategy->kind == StrategyKind::toric);
    CHECK(rep.cases[2].strategy->kind == StrategyKind::constant_syzygy);
    for (const CaseRecord& c : rep.cases) {
        REQUIRE(c.py_bound.has_value());
        CHECK(*c.py_bound == 5);
        CHECK(!c.inconclusive);
        REQUIRE(c.witness.has_value());
        CHECK(c.witness->validated == c.witness->trials);
    }
    // constant-syzygy case carries reductions to five squares
    for (const TrialRecord& t : rep.cases[2].witness->records) {
        REQUIRE(t.syzygy_nonzero.has_value());
        CHECK(*t.syzygy_nonzero);
        REQUIRE(t.reduced_count.has_value());
        CHECK(*t.reduced_count <= 5);
        CHECK(*t.residual < 1e-6);
    }
}

TEST_CASE("analyze at socle 8 is inconclusive with identity witnesses") {
    const AnalysisReport rep = analyze(4, 5, 2);
    REQUIRE(rep.cases.size() == 1);
    const CaseRecord& c = rep.cases[0];
    CHECK(c.strategy->kind == StrategyKind::ci8);
    CHECK(c.inconclusive);
    REQUIRE(c.py_bound.has_value());
    CHECK(*c.py_bound == 5); // = d + 1, no contradiction
    CHECK(std::any_of(c.notes.begin(), c.notes.end(), [](const std::string& n) {
        return n.find("inconclusive") != std::string::npos;
    }));
    for (const TrialRecord& t : c.witness->records) {
        REQUIRE(t.ci8_identity_ok.has_value());
        CHECK(*t.ci8_identity_ok);
    }
}

TEST_CASE("analyze handles a degree with no survivors") {
    const AnalysisReport rep = analyze(3, 0, 1);
    CHECK(rep.cases.empty());
    CHECK(!rep.stages.empty());
    const std::string json = render_report(rep, ReportFormat::structured);
    CHECK(json.find("\"cases\": []") != std::string::npos);
    CHECK(json.find("\"stages\"") != std::string::npos);
}

TEST_CASE("analyze respects the resource guard") {
    CHECK_THROWS_AS(analyze(11, 0, 1), ResourceLimit);
    CHECK_THROWS_AS(analyze(2, 0, 1), std::invalid_argument);
}

TEST_CASE("reports are deterministic") {
    const AnalysisReport a = analyze(5, 99, 2);
    const AnalysisReport b = analyze(5, 99, 2);
    CHECK(render_report(a, ReportFormat::structured) ==
          render_report(b, ReportFormat::structured));
    CHECK(render_report(a, ReportFormat::markdown) ==
          render_report(b, ReportFormat::markdown));
}

TEST_CASE("markdown report mirrors the case table") {
    const AnalysisReport rep = analyze(5, 1, 1);
    const std::string md = render_report(rep, ReportFormat::markdown);
    CHECK(md.find("| 10.1 | {3, 5, 5} | {10, 8, 8} |") != std::string::npos);
    CHECK(md.find("| 10.2 | {4, 4, 5} | {9, 9, 8} |") != std::string::npos);
    CHECK(md.find("| 10.3 | {4, 5, 5, 5, 7} | {9, 8, 8, 8, 6} |") != std::string::npos);
    CHECK(md.find("constant-syzygy") != std::string::npos);
}

TEST_CASE("structured report carries pyBound per case at socle 12") {
    const AnalysisReport rep = analyze(6, 123, 1);
    REQUIRE(rep.cases.size() == 7);
    for (const CaseRecord& c : rep.cases) {
        REQUIRE(c.py_bound.has_value());
        CHECK(*c.py_bound == 6);
    }
    const std::string json = render_report(rep, ReportFormat::structured);
    CHECK(std::count(json.begin(), json.end(), '\n') > 50);
    std::size_t hits = 0, pos = 0;
    while ((pos = json.find("\"pyBound\": 6", pos)) != std::string::npos) {
        ++hits;
        pos += 1;
    }
    CHECK(hits == 7);
}

TEST_CASE("parse_format") {
    CHECK(parse_format("json") == ReportFormat::structured);
    CHECK(parse_format("structured") == ReportFormat::structured);
    CHECK(parse_format("markdown") == ReportFormat::markdown);
    CHECK_THROWS_AS(parse_format("xml"), UnknownFormat);
}
