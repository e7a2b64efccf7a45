#include "pyternary/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pyternary {

namespace {

// One in-place fraction-free elimination pass.  On return `m` is in echelon
// form up to row scaling; returns the rank.
long long bareiss_eliminate(ZMat& m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();

    mpz_class prev(1);
    mpz_t tmp;
    mpz_init(tmp);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap(m[piv], m[r]);

        mpz_srcptr pv = m[r][c].get_mpz_t();
        for (std::size_t i = r + 1; i < rows; ++i) {
            mpz_srcptr mic = m[i][c].get_mpz_t();
            const bool zero_head = mpz_sgn(mic) == 0;
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_ptr mij = m[i][j].get_mpz_t();
                mpz_mul(tmp, mij, pv);
                if (!zero_head) mpz_submul(tmp, mic, m[r][j].get_mpz_t());
                mpz_divexact(mij, tmp, prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    mpz_clear(tmp);
    return static_cast<long long>(r);
}

} // namespace

long long bareiss_rank(ZMat m) { return bareiss_eliminate(m); }

ZMat bareiss_echelon(ZMat m, long long* rank_out) {
    const long long rank = bareiss_eliminate(m);
    if (rank_out) *rank_out = rank;
    ZMat basis;
    basis.reserve(rank);
    for (auto& row : m) {
        mpz_class content = 0;
        for (const auto& v : row) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        if (content == 0) continue; // zero row
        const auto lead = std::find_if(row.begin(), row.end(),
                                       [](const mpz_class& v) { return v != 0; });
        if (*lead < 0) content = -content;
        for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
        basis.push_back(std::move(row));
    }
    return basis;
}

long long rank_mod_p(const ZMat& m, std::uint64_t p) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();

    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    mpz_class t;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            t = m[i][j] % static_cast<long>(p);
            long v = t.get_si();
            if (v < 0) v += static_cast<long>(p);
            a[i][j] = static_cast<std::uint64_t>(v);
        }

    auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t acc = 1;
        while (e) {
            if (e & 1) acc = acc * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return acc;
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const std::uint64_t inv = pow_mod(a[r][c], p - 2);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const std::uint64_t f = a[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
        }
        ++r;
    }
    return static_cast<long long>(r);
}

std::uint64_t nth_check_prime(int idx) {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> ps;
        for (std::uint64_t n = 32003; ps.size() < 16; ++n) {
            bool prime = n % 2 != 0;
            for (std::uint64_t q = 3; prime && q * q <= n; q += 2)
                if (n % q == 0) prime = false;
            if (prime) ps.push_back(n);
        }
        return ps;
    }();
    return primes[static_cast<std::size_t>(idx) % primes.size()];
}

namespace {

// Reduced row echelon form; returns pivot column per row.
std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const mpq_class pv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const mpq_class f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

QMat nullspace(QMat m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    const auto pivots = rref(m);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    QMat kernel;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

bool solve_exact(QMat a, std::vector<mpq_class> b, std::vector<mpq_class>& x) {
    const std::size_t rows = a.size();
    if (rows == 0) return false;
    const std::size_t cols = a[0].size();
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    const auto pivots = rref(a);

    x.assign(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return false; // pivot in the augmented column
        x[pivots[r]] = a[r][cols];
    }
    // residual check guards against inconsistent rows below the pivot block
    for (std::size_t i = pivots.size(); i < rows; ++i)
        if (a[i][cols] != 0) return false;
    return true;
}

} // namespace pyternary
