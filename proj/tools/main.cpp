#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pyternary/analysis.hpp"
#include "pyternary/errors.hpp"
#include "pyternary/version.hpp"
#include "pyternary/witness.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pyternary;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int degree_to_d(int degree) {
    if (degree < 2 || degree % 2 != 0)
        throw CLI::ValidationError("--degree", "socle degree must be a positive even integer");
    return degree / 2;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

json rational_json(const mpq_class& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

int run_enumerate(int degree, int k, bool as_json) {
    const int d = degree_to_d(degree);
    std::vector<Candidate> cands;
    if (k > 0) {
        for (Partition& p : enumerate_partitions(d, k)) {
            Candidate c;
            c.full = degrees_from_partition(p);
            c.degrees = minimalize(c.full);
            c.hilbert = hilbert_from_degrees(2 * d, c.degrees.gens, c.degrees.rels);
            c.partition = std::move(p);
            cands.push_back(std::move(c));
        }
    } else {
        cands = enumerate_candidates(d);
    }

    if (as_json) {
        json out;
        out["version"] = kVersion;
        out["degree"] = degree;
        if (k > 0) out["k"] = k;
        json arr = json::array();
        for (const Candidate& c : cands) {
            json jc;
            jc["k"] = c.degrees.k;
            jc["partitionRows"] = c.partition.rows;
            jc["fullQ"] = c.full.gens;
            jc["fullP"] = c.full.rels;
            jc["R"] = c.full.diag;
            jc["Q"] = c.degrees.gens;
            jc["P"] = c.degrees.rels;
            jc["hilbert"] = c.hilbert.values;
            arr.push_back(std::move(jc));
        }
        out["candidates"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << cands.size() << " candidate(s) for socle degree " << degree << "\n";
    for (const Candidate& c : cands) {
        std::cout << "k=" << c.degrees.k << "  rows=(";
        for (std::size_t i = 0; i < c.partition.rows.size(); ++i)
            std::cout << (i ? "," : "") << c.partition.rows[i];
        std::cout << ")  Q=(";
        for (std::size_t i = 0; i < c.degrees.gens.size(); ++i)
            std::cout << (i ? "," : "") << c.degrees.gens[i];
        std::cout << ")  P=(";
        for (std::size_t i = 0; i < c.degrees.rels.size(); ++i)
            std::cout << (i ? "," : "") << c.degrees.rels[i];
        std::cout << ")  T=(";
        for (std::size_t i = 0; i < c.hilbert.values.size(); ++i)
            std::cout << (i ? "," : "") << c.hilbert.values[i];
        std::cout << ")\n";
    }
    return kExitOk;
}

json verdict_to_json(const FilterVerdict& v) {
    auto p = [](const PredicateResult& r) {
        return json{{"ok", r.ok}, {"value", r.value}, {"threshold", r.threshold}};
    };
    json j;
    j["F0"] = p(v.min_gen_degree);
    j["F1"] = p(v.low_gen_count);
    j["F2"] = p(v.ci_degree_sum);
    j["F3"] = p(v.ideal_dim_d);
    j["F4"] = p(v.initial_bound);
    j["F5"] = p(v.codim_d);
    j["pass"] = v.pass;
    if (!v.first_failing.empty()) j["firstFailing"] = v.first_failing;
    return j;
}

int run_sieve(int degree, bool trace, const std::string& format) {
    const int d = degree_to_d(degree);
    const auto survivors = sieve(d);

    if (format == "json") {
        json out;
        out["version"] = kVersion;
        out["degree"] = degree;
        json arr = json::array();
        for (const CaseRecord& c : survivors) {
            json jc;
            jc["id"] = c.id;
            jc["k"] = c.candidate.degrees.k;
            jc["Q"] = c.candidate.degrees.gens;
            jc["P"] = c.candidate.degrees.rels;
            jc["hilbert"] = c.candidate.hilbert.values;
            jc["verdict"] = verdict_to_json(c.verdict);
            arr.push_back(std::move(jc));
        }
        out["cases"] = std::move(arr);
        if (trace) {
            json rej = json::array();
            for (const auto& [cand, v] : sieve_trace(d)) {
                if (v.pass) continue;
                json jc;
                jc["k"] = cand.degrees.k;
                jc["Q"] = cand.degrees.gens;
                jc["P"] = cand.degrees.rels;
                jc["verdict"] = verdict_to_json(v);
                rej.push_back(std::move(jc));
            }
            out["rejected"] = std::move(rej);
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    if (format == "markdown") {
        std::cout << "| case | Q | P | dim J_d | codim J_d |\n|---|---|---|---|---|\n";
        for (const CaseRecord& c : survivors) {
            std::cout << "| " << c.id << " | ";
            for (std::size_t i = 0; i < c.candidate.degrees.gens.size(); ++i)
                std::cout << (i ? "," : "") << c.candidate.degrees.gens[i];
            std::cout << " | ";
            for (std::size_t i = 0; i < c.candidate.degrees.rels.size(); ++i)
                std::cout << (i ? "," : "") << c.candidate.degrees.rels[i];
            std::cout << " | " << c.verdict.ideal_dim_d.value << " | "
                      << c.verdict.codim_d.value << " |\n";
        }
        return kExitOk;
    }

    std::cout << survivors.size() << " surviving case(s) for socle degree " << degree
              << "\n";
    for (const CaseRecord& c : survivors) {
        std::cout << c.id << "  Q=(";
        for (std::size_t i = 0; i < c.candidate.degrees.gens.size(); ++i)
            std::cout << (i ? "," : "") << c.candidate.degrees.gens[i];
        std::cout << ")  P=(";
        for (std::size_t i = 0; i < c.candidate.degrees.rels.size(); ++i)
            std::cout << (i ? "," : "") << c.candidate.degrees.rels[i];
        std::cout << ")  dim J_d=" << c.verdict.ideal_dim_d.value
                  << "  codim=" << c.verdict.codim_d.value << "\n";
    }
    if (trace) {
        for (const auto& [cand, v] : sieve_trace(d)) {
            if (v.pass) continue;
            std::cout << "rejected k=" << cand.degrees.k << " Q=(";
            for (std::size_t i = 0; i < cand.degrees.gens.size(); ++i)
                std::cout << (i ? "," : "") << cand.degrees.gens[i];
            std::cout << ") first failing " << v.first_failing << "\n";
        }
    }
    return kExitOk;
}

int run_toric(int d, const std::vector<int>& gens, bool as_json) {
    const StackedPolytope p = build_polytope(d, gens);
    const ToricSummary s = classify(p);

    if (as_json) {
        json j;
        j["version"] = kVersion;
        j["d"] = d;
        j["gens"] = gens;
        j["m"] = p.m;
        j["coneCount"] = p.cone_count;
        json pts = json::array();
        for (const auto& pt : p.ambient_points()) pts.push_back(pt);
        j["points"] = std::move(pts);
        j["latticePoints"] = s.points;
        j["dim"] = s.dim;
        j["codim"] = s.codim;
        j["degree"] = s.degree;
        j["idp"] = s.idp;
        j["classification"] = variety_class_name(s.cls);
        if (s.py_bound) j["py"] = *s.py_bound;
        else j["py"] = nullptr;
        json coeffs = json::array();
        for (const auto& c : s.ehrhart_coeffs) coeffs.push_back(rational_json(c));
        j["ehrhart"] = std::move(coeffs);
        if (!s.assumptions.empty()) j["assumptions"] = s.assumptions;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "stacked polytope for d=" << d << ", triangles (";
    for (std::size_t i = 0; i < p.m.size(); ++i) std::cout << (i ? "," : "") << p.m[i];
    std::cout << "), cone points " << p.cone_count << "\n";
    std::cout << "lattice points " << s.points << ", dim " << s.dim << ", codim "
              << s.codim << ", degree " << s.degree << "\n";
    std::cout << "Ehrhart coefficients (ascending):";
    for (const auto& c : s.ehrhart_coeffs) std::cout << " " << c.get_str();
    std::cout << "\nIDP " << (s.idp ? "verified" : "not verified") << ", class "
              << variety_class_name(s.cls);
    if (s.py_bound) std::cout << ", py <= " << *s.py_bound;
    std::cout << "\n";
    return kExitOk;
}

int run_analyze(int degree, std::uint64_t seed, int trials, const std::string& out_path,
                bool force, const std::string& format) {
    const int d = degree_to_d(degree);
    const AnalysisReport rep = analyze(d, seed, trials, force);
    write_out(out_path, render_report(rep, parse_format(format)));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"height-3 Gorenstein degree-data enumeration, dimension sieve, toric "
                 "bounds and exact syzygy witnesses for sums of squares of ternary forms"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "partitions, degree data and Hilbert functions");
    int enum_degree = 0, enum_k = 0;
    bool enum_json = false;
    cmd_enum->add_option("--degree", enum_degree, "socle degree 2d")->required();
    cmd_enum->add_option("--k", enum_k, "restrict to one minimal generator degree");
    cmd_enum->add_flag("--json", enum_json, "structured output");

    // sieve
    auto* cmd_sieve = app.add_subcommand("sieve", "filter pipeline with per-predicate verdicts");
    int sieve_degree = 0;
    bool sieve_trace_flag = false, sieve_json = false, sieve_md = false;
    cmd_sieve->add_option("--degree", sieve_degree, "socle degree 2d")->required();
    cmd_sieve->add_flag("--trace", sieve_trace_flag, "include rejected candidates");
    cmd_sieve->add_flag("--json", sieve_json, "structured output");
    cmd_sieve->add_flag("--markdown", sieve_md, "markdown table");

    // toric
    auto* cmd_toric = app.add_subcommand("toric", "stacked polytope report for generator degrees");
    int toric_d = 0;
    std::vector<int> toric_gens;
    bool toric_json = false;
    cmd_toric->add_option("--d", toric_d, "half socle degree d")->required();
    cmd_toric->add_option("--gens", toric_gens, "generator degrees q1,q2,...")
        ->required()
        ->delimiter(',');
    cmd_toric->add_flag("--json", toric_json, "structured output");

    // analyze
    auto* cmd_analyze = app.add_subcommand("analyze", "full per-case analysis with witness trials");
    int an_degree = 0, an_trials = 20;
    std::uint64_t an_seed = 0;
    std::string an_out, an_format = "json";
    bool an_force = false;
    cmd_analyze->add_option("--degree", an_degree, "socle degree 2d")->required();
    cmd_analyze->add_option("--seed", an_seed, "master seed");
    cmd_analyze->add_option("--trials", an_trials, "witness trials per case");
    cmd_analyze->add_option("--out", an_out, "output path (stdout if omitted)");
    cmd_analyze->add_option("--format", an_format, "json|markdown");
    cmd_analyze->add_flag("--force", an_force, "override the 2d <= 20 resource guard");

    // report
    auto* cmd_report = app.add_subcommand("report", "markdown reproduction document");
    int rep_degree = 0, rep_trials = 5;
    std::uint64_t rep_seed = 0;
    std::string rep_out;
    bool rep_force = false;
    cmd_report->add_option("--degree", rep_degree, "socle degree 2d")->required();
    cmd_report->add_option("--out", rep_out, "output path (.md)")->required();
    cmd_report->add_option("--seed", rep_seed, "master seed");
    cmd_report->add_option("--trials", rep_trials, "witness trials per case");
    cmd_report->add_flag("--force", rep_force, "override the 2d <= 20 resource guard");

    try {
        app.parse(argc, argv);
        if (cmd_enum->parsed()) return run_enumerate(enum_degree, enum_k, enum_json);
        if (cmd_sieve->parsed()) {
            if (sieve_json && sieve_md)
                throw CLI::ValidationError("--json", "choose one of --json/--markdown");
            const std::string fmt = sieve_json ? "json" : (sieve_md ? "markdown" : "text");
            return run_sieve(sieve_degree, sieve_trace_flag, fmt);
        }
        if (cmd_toric->parsed()) return run_toric(toric_d, toric_gens, toric_json);
        if (cmd_analyze->parsed()) {
            if (an_force)
                std::cerr << "warning: resource guard overridden; enumeration grows "
                             "exponentially with the degree\n";
            return run_analyze(an_degree, an_seed, an_trials, an_out, an_force, an_format);
        }
        if (cmd_report->parsed()) {
            if (rep_force)
                std::cerr << "warning: resource guard overridden; enumeration grows "
                             "exponentially with the degree\n";
            return run_analyze(rep_degree, rep_seed, rep_trials, rep_out, rep_force,
                               "markdown");
        }
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
}
