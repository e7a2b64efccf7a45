#include "pyternary/pfaffian.hpp"

#include <stdexcept>
#include <unordered_map>

#include "pyternary/errors.hpp"
#include "pyternary/witness.hpp"

namespace pyternary {

SkewPolyMatrix::SkewPolyMatrix(int size, int socle, std::vector<int> gen_degrees)
    : size_(size), socle_(socle), degrees_(std::move(gen_degrees)),
      upper_(size * size) {
    if (static_cast<int>(degrees_.size()) != size_)
        throw std::invalid_argument("degree list does not match matrix size");
    for (int i = 0; i < size_; ++i)
        for (int j = i + 1; j < size_; ++j) {
            const int deg = entry_degree(i, j);
            upper_[i * size_ + j] = Form(deg < 0 ? 0 : deg);
        }
}

int SkewPolyMatrix::entry_degree(int i, int j) const {
    return socle_ + 3 - degrees_[i] - degrees_[j];
}

const Form& SkewPolyMatrix::at(int i, int j) const {
    if (i >= j) throw std::invalid_argument("upper triangle only");
    return upper_[i * size_ + j];
}

void SkewPolyMatrix::set(int i, int j, Form f) {
    if (i >= j) throw std::invalid_argument("upper triangle only");
    upper_[i * size_ + j] = std::move(f);
}

SkewPolyMatrix SkewPolyMatrix::random(const DegreeData& dd, Rng& rng) {
    const int n = static_cast<int>(dd.gens.size());
    SkewPolyMatrix m(n, dd.socle, dd.gens);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int deg = m.entry_degree(i, j);
            if (deg < 0) continue; // forced zero by the grading
            if (deg == 0) {
                m.set(i, j, Form::constant(rng.uniform_nonzero_int(-9, 9)));
            } else {
                m.set(i, j, Form::random(deg, rng));
            }
        }
    return m;
}

namespace {

Form pf_recurse(const SkewPolyMatrix& m, std::uint32_t mask,
                std::unordered_map<std::uint32_t, Form>& memo) {
    if (mask == 0) return Form::constant(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    const int first = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1u << first);
    Form acc;
    int pos = 0;
    for (int j = first + 1; j < 32; ++j) {
        if (!(rest & (1u << j))) continue;
        ++pos; // 1-based position of j among remaining indices
        const Form& entry = m.at(first, j);
        if (!entry.is_zero()) {
            Form term = entry * pf_recurse(m, rest & ~(1u << j), memo);
            if (pos % 2 == 0) term = -term;
            acc += term;
        }
    }
    memo.emplace(mask, acc);
    return acc;
}

} // namespace

Form pfaffian(const SkewPolyMatrix& m, const std::vector<int>& indices) {
    if (indices.size() % 2 != 0)
        throw std::invalid_argument("pfaffian needs an even index set");
    std::uint32_t mask = 0;
    for (int i : indices) mask |= 1u << i;
    std::unordered_map<std::uint32_t, Form> memo;
    return pf_recurse(m, mask, memo);
}

std::vector<Form> sub_pfaffians(const SkewPolyMatrix& m) {
    const int n = m.size();
    std::unordered_map<std::uint32_t, Form> memo;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<Form> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        Form f = pf_recurse(m, full & ~(1u << i), memo);
        if (i % 2 == 1) f = -f;
        out.push_back(std::move(f));
    }
    return out;
}

PfaffianInstance pfaffian_generators(int d, const DegreeData& dd, std::uint64_t seed,
                                     int max_attempts) {
    if (dd.socle != 2 * d)
        throw std::invalid_argument("degree data does not belong to socle 2d");
    if (dd.gens.size() % 2 == 0)
        throw std::invalid_argument("generator count must be odd");
    const HilbertFunction T = hilbert_from_degrees(dd.socle, dd.gens, dd.rels);

    PfaffianInstance inst;
    inst.hilbert = T;
    std::uint64_t current = seed;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        inst.seeds_tried.push_back(current);
        Rng rng(current);
        const SkewPolyMatrix m = SkewPolyMatrix::random(dd, rng);
        std::vector<Form> gens = sub_pfaffians(m);

        bool degree_ok = true;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].is_zero() || gens[i].degree() != dd.gens[i]) degree_ok = false;

        if (degree_ok && validate_instance(gens, T).valid) {
            inst.gens = std::move(gens);
            inst.attempts = attempt;
            return inst;
        }
        Rng derive(current ^ 0x5851f42d4c957f2dULL);
        current = derive.next();
    }
    throw DegenerateInstance("no valid instance after " + std::to_string(max_attempts) +
                             " draws (seed " + std::to_string(seed) + ")");
}

} // namespace pyternary
