#ifndef PYTERNARY_WITNESS_HPP
#define PYTERNARY_WITNESS_HPP

#include <optional>
#include <vector>

#include "pyternary/combinatorics.hpp"
#include "pyternary/form.hpp"
#include "pyternary/linalg.hpp"

namespace pyternary {

struct GradedPiece {
    long long dim = 0;
    std::vector<Form> basis; // echelonized, primitive integer coefficients
};

// Degree-t slice of the ideal generated by homogeneous forms: row space of
// all monomial multiples landing in degree t, echelonized by fraction-free
// elimination.
GradedPiece graded_piece(const std::vector<Form>& gens, int t);

// Rank only (cheaper when the basis is not needed).
long long graded_dim(const std::vector<Form>& gens, int t);

struct ValidationReport {
    bool valid = false;
    int first_mismatch_t = -1;
    long long expected = 0;
    long long got = 0;
};

// Checks dim <gens>_t = c(t) - T_t for every t = 0..socle.  Rational ranks
// are cross-checked against a prime-field rank on the happy path; a
// persistent disagreement (three primes) indicates an elimination bug and
// throws.
ValidationReport validate_instance(const std::vector<Form>& gens,
                                   const HilbertFunction& T);

// Constant quadratic syzygy sum alpha_{ij} u_i u_j = 0 over a listed basis,
// stored as the full symmetric matrix alpha.
struct QuadraticWitness {
    QMat alpha;

    bool is_zero() const;
    // Exact expansion of sum_{i,j} alpha_{ij} u_i u_j.
    Form expand(const std::vector<Form>& basis) const;
};

// Exact kernel basis of the symmetric multiplication map
// (c_{ij}) -> sum_{i<=j} c_{ij} u_i u_j.  Throws DependentInput when the
// input forms are linearly dependent.
std::vector<QuadraticWitness> quadratic_syzygies(const std::vector<Form>& w, int d);

struct Reduction {
    std::vector<RealForm> forms;
    bool exact = false;        // conservation verified with exact arithmetic
    double relative_residual = 0.0;
};

// Rewrites sum h_i^2 (r+1 squares) as at most r squares using a nonzero
// quadratic witness: sum h_i^2 = h^T (I - tA) h with t = 1/lambda for the
// extreme eigenvalue of the right sign, and I - tA positive semidefinite of
// rank <= r.  Exact when that eigenvalue is rational (rational-root scan of
// the characteristic polynomial), numeric otherwise.
Reduction reduce_length(const std::vector<Form>& h, const QuadraticWitness& w);

// If l1 f1 + l2 f2 = 0 has a nonzero linear solution, both inputs share a
// degree-(deg-1) factor; returns it (primitive), else nullopt.
std::optional<Form> common_factor_from_linear_syzygy(const Form& f1, const Form& f2);

// Syzygy with coefficient triple (-c0 m2, -c1 m2, a), a = m0 c0 + m1 c1,
// vanishing against (m0 f, m1 f, m2 f) identically.  {m0, m1, m2} must be a
// basis of the linear forms.
struct Ci8Witness {
    std::vector<Form> coeffs; // three entries of degree deg(c)+1
    Form a;
};
Ci8Witness ci8_syzygy_witness(const Form& m0, const Form& m1, const Form& m2,
                              const Form& c0, const Form& c1, const Form& f);

// Monomial-multiple basis t_w = x1^j x2^k x3^(d-q_i-j-k) f_i over the index
// set of the stacked polytope (generators of degree < d only).
std::vector<std::pair<std::array<int, 3>, Form>> toric_basis(
    const std::vector<Form>& gens, int d);

// Every binomial quadric of the stacked toric variety vanishes on the t_w:
// products with equal layer multiset and equal (j, k) sums agree as forms.
bool binomial_quadrics_vanish(
    const std::vector<std::pair<std::array<int, 3>, Form>>& basis);

bool toric_relation_check(const std::vector<Form>& gens, int d);

} // namespace pyternary

#endif
