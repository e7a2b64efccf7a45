#ifndef PYTERNARY_PFAFFIAN_HPP
#define PYTERNARY_PFAFFIAN_HPP

#include <cstdint>
#include <vector>

#include "pyternary/combinatorics.hpp"
#include "pyternary/form.hpp"

namespace pyternary {

// Skew-symmetric matrix of forms, size 2k+1, entry (i,j) of degree
// 2d+3 - q_i - q_j.  Only the upper triangle is stored; negative-degree
// slots are identically zero (forced by the grading), degree-0 slots are
// nonzero constants.
class SkewPolyMatrix {
public:
    SkewPolyMatrix(int size, int socle, std::vector<int> gen_degrees);

    int size() const { return size_; }
    int entry_degree(int i, int j) const; // 2d+3 - q_i - q_j
    const Form& at(int i, int j) const;   // upper triangle only (i < j)
    void set(int i, int j, Form f);

    static SkewPolyMatrix random(const DegreeData& dd, Rng& rng);

private:
    int size_;
    int socle_;
    std::vector<int> degrees_;
    std::vector<Form> upper_;
};

// Pfaffian of the principal submatrix on the given (strictly increasing)
// index subset; the empty subset gives 1.
Form pfaffian(const SkewPolyMatrix& m, const std::vector<int>& indices);

// All maximal sub-Pfaffians, entry i obtained by deleting row/column i and
// signed (-1)^i.  These generate a height-3 Gorenstein ideal with
// deg(gen_i) = q_i (Buchsbaum-Eisenbud).
std::vector<Form> sub_pfaffians(const SkewPolyMatrix& m);

struct ValidationReport; // witness.hpp

struct PfaffianInstance {
    std::vector<Form> gens;
    HilbertFunction hilbert;
    int attempts = 0;
    std::vector<std::uint64_t> seeds_tried;
};

// Random generators with the prescribed degree pattern whose ideal realizes
// the Hilbert function of `dd`; degenerate draws are retried up to
// `max_attempts` times with derived seeds before DegenerateInstance is
// thrown.
PfaffianInstance pfaffian_generators(int d, const DegreeData& dd, std::uint64_t seed,
                                     int max_attempts = 10);

} // namespace pyternary

#endif
