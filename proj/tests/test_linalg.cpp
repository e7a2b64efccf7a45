#include <doctest.h>

#include "pyternary/linalg.hpp"
#include "pyternary/rng.hpp"

using namespace pyternary;

namespace {

ZMat zmat(const std::vector<std::vector<long>>& rows) {
    ZMat m;
    for (const auto& r : rows) {
        std::vector<mpz_class> row(r.begin(), r.end());
        m.push_back(std::move(row));
    }
    return m;
}

QMat qmat(const std::vector<std::vector<long>>& rows) {
    QMat m;
    for (const auto& r : rows) {
        std::vector<mpq_class> row(r.begin(), r.end());
        m.push_back(std::move(row));
    }
    return m;
}

ZMat random_zmat(Rng& rng, int rows, int cols, int lo, int hi) {
    ZMat m(rows, std::vector<mpz_class>(cols));
    for (auto& r : m)
        for (auto& v : r) v = rng.uniform_int(lo, hi);
    return m;
}

} // namespace

TEST_CASE("bareiss_rank basics") {
    CHECK(bareiss_rank(zmat({{1, 0}, {0, 1}})) == 2);
    CHECK(bareiss_rank(zmat({{1, 2}, {2, 4}})) == 1);
    CHECK(bareiss_rank(zmat({{0, 0}, {0, 0}})) == 0);
    CHECK(bareiss_rank(zmat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    CHECK(bareiss_rank(zmat({{0, 1, 0}, {0, 0, 2}})) == 2); // column skips
}

TEST_CASE("bareiss vs prime-field rank on random matrices") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = rng.uniform_int(1, 8), cols = rng.uniform_int(1, 8);
        ZMat m = random_zmat(rng, rows, cols, -6, 6);
        // occasionally force dependent rows
        if (rows >= 2 && trial % 3 == 0)
            for (int j = 0; j < cols; ++j) m[rows - 1][j] = m[0][j] * 2 - m[rows / 2][j];
        const long long rp = rank_mod_p(m, nth_check_prime(0));
        const long long rq = bareiss_rank(m);
        CHECK(rp == rq); // entries are tiny; 32003 cannot kill a minor here
    }
}

TEST_CASE("bareiss_echelon spans the same row space") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        ZMat m = random_zmat(rng, rng.uniform_int(2, 6), rng.uniform_int(2, 6), -4, 4);
        long long rank = 0;
        ZMat e = bareiss_echelon(m, &rank);
        CHECK(static_cast<long long>(e.size()) == rank);
        // primitive rows with positive leading entries
        for (const auto& row : e) {
            mpz_class g = 0;
            const mpz_class* lead = nullptr;
            for (const auto& v : row) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
                if (!lead && v != 0) lead = &v;
            }
            CHECK(g == 1);
            REQUIRE(lead != nullptr);
            CHECK(*lead > 0);
        }
        // stacking the echelon on the original changes nothing
        ZMat stacked = m;
        for (auto& row : e) stacked.push_back(row);
        CHECK(bareiss_rank(std::move(stacked)) == rank);
    }
}

TEST_CASE("nullspace") {
    SUBCASE("known kernel") {
        // x + y + z = 0, y - z = 0  ->  kernel spanned by (-2, 1, 1)
        const auto k = nullspace(qmat({{1, 1, 1}, {0, 1, -1}}));
        REQUIRE(k.size() == 1);
        const auto& v = k[0];
        CHECK(v[0] * 1 + v[1] * 1 + v[2] * 1 == 0);
        CHECK(v[1] - v[2] == 0);
        CHECK(!(v[0] == 0 && v[1] == 0 && v[2] == 0));
    }
    SUBCASE("full-rank square matrix has no kernel") {
        CHECK(nullspace(qmat({{2, 1}, {1, 1}})).empty());
    }
    SUBCASE("random kernels verify exactly") {
        Rng rng(77);
        for (int trial = 0; trial < 30; ++trial) {
            const int rows = rng.uniform_int(1, 5), cols = rng.uniform_int(1, 6);
            QMat m(rows, std::vector<mpq_class>(cols));
            for (auto& r : m)
                for (auto& v : r) v = rng.uniform_int(-5, 5);
            ZMat zm(rows, std::vector<mpz_class>(cols));
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) zm[i][j] = m[i][j].get_num();
            const long long rank = bareiss_rank(std::move(zm));
            const auto kernel = nullspace(m);
            CHECK(static_cast<long long>(kernel.size()) == cols - rank);
            for (const auto& v : kernel)
                for (int i = 0; i < rows; ++i) {
                    mpq_class dot = 0;
                    for (int j = 0; j < cols; ++j) dot += m[i][j] * v[j];
                    CHECK(dot == 0);
                }
        }
    }
}

TEST_CASE("solve_exact") {
    std::vector<mpq_class> x;
    SUBCASE("consistent system") {
        REQUIRE(solve_exact(qmat({{2, 0}, {0, 4}}), {mpq_class(1), mpq_class(2)}, x));
        CHECK(x[0] == mpq_class(1, 2));
        CHECK(x[1] == mpq_class(1, 2));
    }
    SUBCASE("inconsistent system") {
        CHECK(!solve_exact(qmat({{1, 1}, {2, 2}}), {mpq_class(1), mpq_class(3)}, x));
    }
    SUBCASE("underdetermined but consistent") {
        REQUIRE(solve_exact(qmat({{1, 1}}), {mpq_class(3)}, x));
        CHECK(x[0] + x[1] == 3);
    }
}

TEST_CASE("check primes start at 32003") {
    CHECK(nth_check_prime(0) == 32003);
    CHECK(nth_check_prime(1) == 32009);
    for (int i = 0; i < 16; ++i) {
        const std::uint64_t p = nth_check_prime(i);
        for (std::uint64_t q = 2; q * q <= p; ++q) CHECK(p % q != 0);
    }
}
