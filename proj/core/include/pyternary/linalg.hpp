#ifndef PYTERNARY_LINALG_HPP
#define PYTERNARY_LINALG_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace pyternary {

using ZMat = std::vector<std::vector<mpz_class>>;
using QMat = std::vector<std::vector<mpq_class>>;

/*
 * Fraction-free (Bareiss) elimination over the integers.  Intermediate
 * entries are minors of the input, so every division is exact and no
 * rationals ever appear.  Handles rectangular and rank-deficient input via
 * row swaps and column skips.
 */

// Rank; the matrix is consumed.
long long bareiss_rank(ZMat m);

// Echelon basis of the row space: nonzero echelon rows, each divided by its
// content with positive leading entry.  rank_out (optional) receives the rank.
ZMat bareiss_echelon(ZMat m, long long* rank_out = nullptr);

// Rank over F_p (p < 2^31).  Always a lower bound for the rational rank; a
// pivot certificate mod p proves a nonzero minor over Z.
long long rank_mod_p(const ZMat& m, std::uint64_t p);

// First primes >= 32003, by index (wraps around a fixed list of 16).
std::uint64_t nth_check_prime(int idx);

// Kernel basis of m x = 0, exact, via reduced row echelon form; deterministic
// one vector per free column.
QMat nullspace(QMat m);

// Solves a x = b exactly if consistent; returns false otherwise.
bool solve_exact(QMat a, std::vector<mpq_class> b, std::vector<mpq_class>& x);

} // namespace pyternary

#endif
