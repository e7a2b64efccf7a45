#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "pyternary/analysis.hpp"
#include "pyternary/errors.hpp"

namespace pyternary {

namespace {

using json = nlohmann::ordered_json;

json rational(const mpq_class& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

std::string residual_str(double r) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << r;
    return os.str();
}

json predicate_json(const PredicateResult& p) {
    return json{{"ok", p.ok}, {"value", p.value}, {"threshold", p.threshold}};
}

json verdict_json(const FilterVerdict& v) {
    json j;
    j["F0_min_gen_degree"] = predicate_json(v.min_gen_degree);
    j["F1_low_degree_gens"] = predicate_json(v.low_gen_count);
    j["F2_ci_degree_sum"] = predicate_json(v.ci_degree_sum);
    j["F3_ideal_dim_d"] = predicate_json(v.ideal_dim_d);
    j["F4_initial_bound"] = predicate_json(v.initial_bound);
    j["F5_codim_d"] = predicate_json(v.codim_d);
    j["pass"] = v.pass;
    if (!v.first_failing.empty()) j["firstFailing"] = v.first_failing;
    return j;
}

json toric_json(const ToricSummary& t) {
    json j;
    j["points"] = t.points;
    j["baseDim"] = t.base_dim;
    j["codim"] = t.codim;
    j["degree"] = t.degree;
    j["idp"] = t.idp;
    j["coneCount"] = t.cone_count;
    j["dim"] = t.dim;
    j["classification"] = variety_class_name(t.cls);
    if (t.py_bound) j["py"] = *t.py_bound;
    else j["py"] = nullptr;
    json coeffs = json::array();
    for (const auto& c : t.ehrhart_coeffs) coeffs.push_back(rational(c));
    j["ehrhart"] = coeffs;
    if (!t.assumptions.empty()) j["assumptions"] = t.assumptions;
    return j;
}

json witness_json(const WitnessReport& w) {
    json j;
    j["trials"] = w.trials;
    j["validated"] = w.validated;
    j["totalAttempts"] = w.total_attempts;
    json recs = json::array();
    for (const TrialRecord& t : w.records) {
        json r;
        r["seed"] = t.seed;
        r["attempts"] = t.attempts;
        r["validated"] = t.validated;
        if (t.toric_relations_ok) r["toricRelationsOk"] = *t.toric_relations_ok;
        if (t.syzygy_nonzero) r["syzygyNonzero"] = *t.syzygy_nonzero;
        if (t.reduced_count) r["reducedCount"] = *t.reduced_count;
        if (t.residual) r["residual"] = residual_str(*t.residual);
        if (t.divisor_found) r["divisorFound"] = *t.divisor_found;
        if (t.ci8_identity_ok) r["ci8IdentityOk"] = *t.ci8_identity_ok;
        recs.push_back(std::move(r));
    }
    j["records"] = std::move(recs);
    return j;
}

json case_json(const CaseRecord& c) {
    json j;
    j["id"] = c.id;
    j["k"] = c.candidate.degrees.k;
    j["Q"] = c.candidate.degrees.gens;
    j["P"] = c.candidate.degrees.rels;
    j["R"] = c.candidate.degrees.diag;
    j["partitionRows"] = c.candidate.partition.rows;
    j["fullQ"] = c.candidate.full.gens;
    j["hilbert"] = c.candidate.hilbert.values;
    j["verdict"] = verdict_json(c.verdict);
    if (c.strategy)
        j["strategy"] = json{{"kind", strategy_name(c.strategy->kind)},
                             {"rationale", c.strategy->rationale}};
    if (c.rewritten)
        j["rewritten"] = json{{"Q", c.rewritten->gens}, {"P", c.rewritten->rels}};
    if (c.toric) j["toric"] = toric_json(*c.toric);
    if (c.witness) j["witness"] = witness_json(*c.witness);
    if (c.py_bound) j["pyBound"] = *c.py_bound;
    else j["pyBound"] = nullptr;
    j["inconclusive"] = c.inconclusive;
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

std::string list_str(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::string hilbert_str(const HilbertFunction& T) {
    std::string s = "(";
    for (std::size_t i = 0; i < T.values.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(T.values[i]);
    }
    return s + ")";
}

std::string markdown(const AnalysisReport& r) {
    std::ostringstream os;
    const int d = r.degree / 2;
    os << "# Sum-of-squares length analysis: ternary forms of degree " << r.degree
       << "\n\n";
    os << "- tool version " << r.version << ", master seed " << r.seed << ", "
       << r.trials << " trial(s) per case\n";
    os << "- target bound: every sum of squares has length at most d+1 = " << d + 1
       << "; a case concludes when its bound is at most d = " << d << "\n\n";

    os << "## Filter pipeline\n\n";
    os << "| stage | in | out |\n|---|---|---|\n";
    for (const StageCount& s : r.stages)
        os << "| " << s.name << " | " << s.in << " | " << s.out << " |\n";
    os << "\n";

    os << "## Surviving degree data\n\n";
    if (r.cases.empty()) {
        os << "No candidate survives the filters at this degree.\n";
        return os.str();
    }
    os << "| case | Q | P | strategy | py bound |\n|---|---|---|---|---|\n";
    for (const CaseRecord& c : r.cases) {
        os << "| " << c.id << " | " << list_str(c.candidate.degrees.gens) << " | "
           << list_str(c.candidate.degrees.rels) << " | "
           << (c.strategy ? strategy_name(c.strategy->kind) : "-") << " | ";
        if (c.py_bound)
            os << *c.py_bound << (c.inconclusive ? " (inconclusive)" : "");
        else
            os << "-";
        os << " |\n";
    }
    os << "\n";

    for (const CaseRecord& c : r.cases) {
        os << "## Case " << c.id << ": Q = " << list_str(c.candidate.degrees.gens)
           << ", P = " << list_str(c.candidate.degrees.rels) << "\n\n";
        os << "- Hilbert function: " << hilbert_str(c.candidate.hilbert) << "\n";
        if (c.strategy)
            os << "- strategy: " << strategy_name(c.strategy->kind) << " ("
               << c.strategy->rationale << ")\n";
        if (c.rewritten)
            os << "- rewritten generator degrees: " << list_str(c.rewritten->gens)
               << "\n";
        if (c.toric) {
            os << "- toric: dim " << c.toric->dim << ", codim " << c.toric->codim
               << ", degree " << c.toric->degree << ", IDP "
               << (c.toric->idp ? "verified" : "not verified") << ", class "
               << variety_class_name(c.toric->cls);
            if (c.toric->py_bound) os << ", py <= " << *c.toric->py_bound;
            os << "\n";
            for (const std::string& a : c.toric->assumptions)
                os << "- assumption: " << a << "\n";
        }
        if (c.witness) {
            os << "- witness trials: " << c.witness->validated << "/"
               << c.witness->trials << " validated";
            int reduced = 0, syz = 0, toric_ok = 0, div = 0, ci8 = 0;
            double max_res = 0;
            bool any_res = false;
            for (const TrialRecord& t : c.witness->records) {
                if (t.syzygy_nonzero && *t.syzygy_nonzero) ++syz;
                if (t.reduced_count) ++reduced;
                if (t.residual) {
                    max_res = std::max(max_res, *t.residual);
                    any_res = true;
                }
                if (t.toric_relations_ok && *t.toric_relations_ok) ++toric_ok;
                if (t.divisor_found && *t.divisor_found) ++div;
                if (t.ci8_identity_ok && *t.ci8_identity_ok) ++ci8;
            }
            if (syz) os << "; nonzero quadratic syzygy in " << syz;
            if (reduced) os << "; length reduced in " << reduced;
            if (any_res) os << " (max residual " << residual_str(max_res) << ")";
            if (toric_ok) os << "; toric quadrics verified in " << toric_ok;
            if (div) os << "; common divisor extracted in " << div;
            if (ci8) os << "; syzygy identity exact in " << ci8;
            os << "\n";
        }
        if (c.py_bound)
            os << "- concluded bound: py <= " << *c.py_bound
               << (c.inconclusive ? " (inconclusive, equals d+1)" : "") << "\n";
        for (const std::string& n : c.notes) os << "- note: " << n << "\n";
        os << "\n";
    }
    return os.str();
}

} // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "structured" || name == "json") return ReportFormat::structured;
    if (name == "markdown" || name == "md") return ReportFormat::markdown;
    throw UnknownFormat("unknown report format: " + name);
}

std::string render_report(const AnalysisReport& r, ReportFormat format) {
    if (format == ReportFormat::markdown) return markdown(r);

    json j;
    j["version"] = r.version;
    j["degree"] = r.degree;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    json stages = json::array();
    for (const StageCount& s : r.stages)
        stages.push_back(json{{"name", s.name}, {"in", s.in}, {"out", s.out}});
    j["stages"] = std::move(stages);
    json cases = json::array();
    for (const CaseRecord& c : r.cases) cases.push_back(case_json(c));
    j["cases"] = std::move(cases);
    return j.dump(2) + "\n";
}

} // namespace pyternary
