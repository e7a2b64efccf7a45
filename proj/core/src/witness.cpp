#include "pyternary/witness.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "pyternary/errors.hpp"

namespace pyternary {

namespace {

// Rows of the multiplication map into degree t: one row per (generator,
// monomial) pair, integer entries after clearing denominators per generator.
ZMat graded_matrix(const std::vector<Form>& gens, int t) {
    ZMat rows;
    const std::size_t cols = static_cast<std::size_t>(dim_forms(t));
    for (const Form& g0 : gens) {
        if (g0.is_zero() || g0.degree() > t) continue;
        const Form g = g0.primitive();
        for (const Exponent& mu : monomial_basis(t - g.degree())) {
            std::vector<mpz_class> row(cols, 0);
            for (const auto& [e, c] : g.terms()) {
                const Exponent shifted{e[0] + mu[0], e[1] + mu[1], e[2] + mu[2]};
                row[monomial_index(t, shifted)] = c.get_num(); // primitive => integer
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// Rational rank must agree with the prime-field rank; an unlucky prime is
// retried, persistent disagreement means the elimination itself is broken.
void crosscheck_rank(const ZMat& m, long long exact, long long first_rank,
                     int first_prime_idx) {
    if (first_rank == exact) return;
    for (int idx = first_prime_idx + 1; idx <= first_prime_idx + 2; ++idx)
        if (rank_mod_p(m, nth_check_prime(idx)) == exact) return;
    throw std::logic_error("modular and rational ranks disagree across primes");
}

} // namespace

GradedPiece graded_piece(const std::vector<Form>& gens, int t) {
    GradedPiece out;
    if (t < 0) return out;
    ZMat m = graded_matrix(gens, t);
    if (m.empty()) return out;
    const ZMat echelon = bareiss_echelon(std::move(m), &out.dim);
    for (const auto& row : echelon) {
        std::vector<mpq_class> coeffs(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) coeffs[i] = row[i];
        out.basis.push_back(Form::from_dense(t, coeffs));
    }
    return out;
}

long long graded_dim(const std::vector<Form>& gens, int t) {
    if (t < 0) return 0;
    ZMat m = graded_matrix(gens, t);
    if (m.empty()) return 0;
    return bareiss_rank(std::move(m));
}

ValidationReport validate_instance(const std::vector<Form>& gens,
                                   const HilbertFunction& T) {
    ValidationReport rep;
    for (int t = 0; t <= T.socle; ++t) {
        const long long expected = dim_forms(t) - T.values[t];
        const ZMat m = graded_matrix(gens, t);
        long long got;
        if (m.empty()) {
            got = 0;
        } else {
            const long long rank_p = rank_mod_p(m, nth_check_prime(0));
            got = bareiss_rank(m);
            crosscheck_rank(m, got, rank_p, 0);
        }
        if (got != expected) {
            rep.valid = false;
            rep.first_mismatch_t = t;
            rep.expected = expected;
            rep.got = got;
            return rep;
        }
    }
    rep.valid = true;
    return rep;
}

bool QuadraticWitness::is_zero() const {
    for (const auto& row : alpha)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

Form QuadraticWitness::expand(const std::vector<Form>& basis) const {
    const std::size_t r = basis.size();
    Form acc;
    for (std::size_t i = 0; i < r; ++i) {
        if (alpha[i][i] != 0) acc += alpha[i][i] * (basis[i] * basis[i]);
        for (std::size_t j = i + 1; j < r; ++j)
            if (alpha[i][j] != 0) acc += (2 * alpha[i][j]) * (basis[i] * basis[j]);
    }
    return acc;
}

std::vector<QuadraticWitness> quadratic_syzygies(const std::vector<Form>& w, int d) {
    const std::size_t r = w.size();
    if (r == 0) return {};
    for (const Form& f : w)
        if (f.is_zero() || f.degree() != d)
            throw std::invalid_argument("basis forms must be nonzero of degree d");

    // independence check
    {
        ZMat m;
        for (const Form& f : w) {
            const Form g = f.primitive();
            std::vector<mpz_class> row(dim_forms(d), 0);
            for (const auto& [e, c] : g.terms()) row[monomial_index(d, e)] = c.get_num();
            m.push_back(std::move(row));
        }
        if (bareiss_rank(std::move(m)) != static_cast<long long>(r))
            throw DependentInput("input forms are linearly dependent");
    }

    // kernel of (c_pair) -> sum c_pair u_i u_j, pairs (i <= j) in lex order
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) pairs.emplace_back(i, j);

    const std::size_t cols = static_cast<std::size_t>(dim_forms(2 * d));
    QMat mt(cols, std::vector<mpq_class>(pairs.size(), 0));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const Form prod = w[pairs[p].first] * w[pairs[p].second];
        for (const auto& [e, c] : prod.terms()) mt[monomial_index(2 * d, e)][p] = c;
    }

    std::vector<QuadraticWitness> out;
    for (const auto& vec : nullspace(std::move(mt))) {
        QuadraticWitness qw;
        qw.alpha.assign(r, std::vector<mpq_class>(r, 0));
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const auto [i, j] = pairs[p];
            if (i == j) {
                qw.alpha[i][i] = vec[p];
            } else {
                qw.alpha[i][j] = vec[p] / 2;
                qw.alpha[j][i] = qw.alpha[i][j];
            }
        }
        if (!qw.expand(w).is_zero())
            throw std::logic_error("kernel vector fails exact expansion");
        out.push_back(std::move(qw));
    }
    return out;
}

namespace {

// det(x I - A), exact, by Faddeev-LeVerrier: B_1 = A, c_{n-1} = -tr(B_1),
// B_k = A (B_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(B_k)/k.
std::vector<mpq_class> char_poly(const QMat& a) {
    const std::size_t n = a.size();
    std::vector<mpq_class> coeffs(n + 1, 0);
    coeffs[n] = 1;
    QMat b = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            for (std::size_t i = 0; i < n; ++i) b[i][i] += coeffs[n - k + 1];
            QMat next(n, std::vector<mpq_class>(n, 0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t l = 0; l < n; ++l) {
                    if (a[i][l] == 0) continue;
                    for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * b[l][j];
                }
            b = std::move(next);
        }
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += b[i][i];
        coeffs[n - k] = -tr / static_cast<long>(k);
        coeffs[n - k].canonicalize();
    }
    return coeffs;
}

mpq_class eval_poly(const std::vector<mpq_class>& coeffs, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Continued-fraction convergents of x with denominators up to max_den; used
// as candidates for a rational eigenvalue, each verified exactly against the
// characteristic polynomial.
std::vector<mpq_class> rational_candidates(double x, long max_den) {
    std::vector<mpq_class> out;
    double v = x;
    long long p0 = 1, q0 = 0, p1 = 0, q1 = 1; // convergents p/q
    for (int it = 0; it < 40; ++it) {
        if (!std::isfinite(v)) break;
        const double fl = std::floor(v);
        if (std::abs(fl) > 1e15) break;
        const long long a = static_cast<long long>(fl);
        const long long p2 = a * p0 + p1, q2 = a * q0 + q1;
        if (q2 > max_den) break;
        p1 = p0; q1 = q0; p0 = p2; q0 = q2;
        out.emplace_back(static_cast<long>(p2), static_cast<long>(q2));
        out.back().canonicalize();
        const double frac = v - fl;
        if (frac < 1e-14) break;
        v = 1.0 / frac;
    }
    return out;
}

// Rank-1 peeling LDL^T of a symmetric rational matrix; succeeds exactly when
// the matrix is PSD.  Returns pairs (d_j, l_j) with M = sum d_j l_j l_j^T.
bool psd_ldl(QMat m, std::vector<std::pair<mpq_class, std::vector<mpq_class>>>& out) {
    const std::size_t n = m.size();
    for (;;) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i][i] < 0) return false;
            if (m[i][i] > 0 && p == n) p = i;
        }
        if (p == n) {
            // zero diagonal everywhere: PSD forces the whole matrix to vanish
            for (const auto& row : m)
                for (const auto& v : row)
                    if (v != 0) return false;
            return true;
        }
        const mpq_class d = m[p][p];
        std::vector<mpq_class> l(n);
        for (std::size_t i = 0; i < n; ++i) l[i] = m[i][p] / d;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= d * l[i] * l[j];
        out.emplace_back(d, std::move(l));
    }
}

} // namespace

Reduction reduce_length(const std::vector<Form>& h, const QuadraticWitness& w) {
    const std::size_t n = h.size();
    if (w.alpha.size() != n)
        throw std::invalid_argument("witness size does not match basis size");
    if (w.is_zero()) throw ZeroWitness("witness matrix is zero");
    if (!w.expand(h).is_zero())
        throw std::invalid_argument("witness does not annihilate the given forms");

    const int d = h[0].degree();

    // exact sum of squares of the input, the conservation reference
    Form input_sum;
    for (const Form& f : h) input_sum += f * f;

    Eigen::MatrixXd a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = w.alpha[i][j].get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    const double lam_min = es.eigenvalues()(0);
    const double lam_max = es.eigenvalues()(n - 1);
    const double scale = std::max(std::abs(lam_min), std::abs(lam_max));
    // spectral shift: positive eigenvalues present -> 1/lambda_max, else A is
    // negative semidefinite and 1/lambda_min works
    const double lambda = (lam_max > 1e-12 * scale) ? lam_max : lam_min;

    Reduction red;

    // exact route when the chosen eigenvalue is rational
    const auto cp = char_poly(w.alpha);
    for (const mpq_class& cand : rational_candidates(lambda, 1000000)) {
        if (cand == 0) continue; // the shift needs 1/cand
        if (std::abs(cand.get_d() - lambda) > 1e-9 * std::max(1.0, std::abs(lambda)))
            continue;
        if (eval_poly(cp, cand) != 0) continue;
        QMat m(n, std::vector<mpq_class>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i][j] = -w.alpha[i][j] / cand;
            m[i][i] += 1;
        }
        std::vector<std::pair<mpq_class, std::vector<mpq_class>>> fac;
        if (!psd_ldl(std::move(m), fac)) break; // wrong eigenvalue sign; go numeric

        Form check;
        std::vector<std::pair<mpq_class, Form>> weighted;
        for (const auto& [dj, lj] : fac) {
            Form g(d);
            for (std::size_t i = 0; i < n; ++i)
                if (lj[i] != 0) g += lj[i] * h[i];
            check += dj * (g * g);
            weighted.emplace_back(dj, std::move(g));
        }
        if (!(check - input_sum).is_zero())
            throw std::logic_error("exact factorization fails conservation");

        for (const auto& [dj, g] : weighted) {
            RealForm rf = RealForm::from(g);
            const double s = std::sqrt(dj.get_d());
            for (double& c : rf.coeffs) c *= s;
            red.forms.push_back(std::move(rf));
        }
        red.exact = true;
        break;
    }

    if (red.forms.empty()) {
        // numeric route: eigendecompose I - (1/lambda) A and keep positive modes
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) - a / lambda;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> em(m);
        std::vector<RealForm> hh;
        hh.reserve(n);
        for (const Form& f : h) hh.push_back(RealForm::from(f));
        const double mu_max = em.eigenvalues().maxCoeff();
        for (std::size_t j = 0; j < n; ++j) {
            const double mu = em.eigenvalues()(j);
            if (mu <= 1e-9 * std::max(1.0, mu_max)) continue;
            RealForm g = RealForm::zero(d);
            for (std::size_t i = 0; i < n; ++i) g.add_scaled(hh[i], em.eigenvectors()(i, j));
            const double s = std::sqrt(mu);
            for (double& c : g.coeffs) c *= s;
            red.forms.push_back(std::move(g));
        }
    }

    if (red.forms.size() > n - 1)
        throw std::logic_error("length reduction failed to drop a square");

    // residual: max-norm of (sum inputs^2 - sum outputs^2), relative
    RealForm diff = RealForm::from(input_sum);
    double ref = 0;
    for (double c : diff.coeffs) ref = std::max(ref, std::abs(c));
    for (const RealForm& g : red.forms) diff.add_scaled(g * g, -1.0);
    double err = 0;
    for (double c : diff.coeffs) err = std::max(err, std::abs(c));
    red.relative_residual = (ref == 0) ? err : err / ref;
    return red;
}

std::optional<Form> common_factor_from_linear_syzygy(const Form& f1, const Form& f2) {
    if (f1.is_zero() || f2.is_zero()) return std::nullopt;
    if (f1.degree() != f2.degree())
        throw std::invalid_argument("forms must have equal degree");
    const int deg = f1.degree();

    // unknowns: coefficients of l1 (3) then l2 (3)
    const std::size_t rows = static_cast<std::size_t>(dim_forms(deg + 1));
    QMat m(rows, std::vector<mpq_class>(6, 0));
    for (int v = 0; v < 3; ++v) {
        for (const auto& [e, c] : f1.terms()) {
            Exponent s = e;
            ++s[v];
            m[monomial_index(deg + 1, s)][v] += c;
        }
        for (const auto& [e, c] : f2.terms()) {
            Exponent s = e;
            ++s[v];
            m[monomial_index(deg + 1, s)][3 + v] += c;
        }
    }

    for (const auto& vec : nullspace(m)) {
        Form l2(1);
        for (int v = 0; v < 3; ++v) {
            Exponent e{0, 0, 0};
            e[v] = 1;
            l2.set_coeff(e, vec[3 + v]);
        }
        if (l2.is_zero()) continue;

        // divide f1 by l2: solve the multiplication system exactly
        const std::size_t crows = static_cast<std::size_t>(dim_forms(deg));
        const std::size_t ccols = static_cast<std::size_t>(dim_forms(deg - 1));
        QMat mult(crows, std::vector<mpq_class>(ccols, 0));
        const auto basis = monomial_basis(deg - 1);
        for (std::size_t col = 0; col < ccols; ++col)
            for (const auto& [e, c] : l2.terms()) {
                const Exponent s{e[0] + basis[col][0], e[1] + basis[col][1],
                                 e[2] + basis[col][2]};
                mult[monomial_index(deg, s)][col] += c;
            }
        std::vector<mpq_class> x;
        if (!solve_exact(std::move(mult), f1.dense(), x)) continue;
        return Form::from_dense(deg - 1, x).primitive();
    }
    return std::nullopt;
}

Ci8Witness ci8_syzygy_witness(const Form& m0, const Form& m1, const Form& m2,
                              const Form& c0, const Form& c1, const Form& f) {
    const std::array<const Form*, 3> ms{&m0, &m1, &m2};
    QMat coords(3, std::vector<mpq_class>(3, 0));
    for (int i = 0; i < 3; ++i) {
        if (ms[i]->degree() != 1 || ms[i]->is_zero())
            throw DependentBasis("m0, m1, m2 must be nonzero linear forms");
        for (int v = 0; v < 3; ++v) {
            Exponent e{0, 0, 0};
            e[v] = 1;
            coords[i][v] = ms[i]->coeff(e);
        }
    }
    const mpq_class det = coords[0][0] * (coords[1][1] * coords[2][2] - coords[1][2] * coords[2][1]) -
                          coords[0][1] * (coords[1][0] * coords[2][2] - coords[1][2] * coords[2][0]) +
                          coords[0][2] * (coords[1][0] * coords[2][1] - coords[1][1] * coords[2][0]);
    if (det == 0) throw DependentBasis("m0, m1, m2 do not span the linear forms");

    Ci8Witness wit;
    wit.a = m0 * c0 + m1 * c1;
    wit.coeffs = {-(c0 * m2), -(c1 * m2), wit.a};

    Form check = wit.coeffs[0] * (m0 * f) + wit.coeffs[1] * (m1 * f) + wit.coeffs[2] * (m2 * f);
    if (!check.is_zero())
        throw std::logic_error("complete-intersection syzygy identity failed to vanish");
    return wit;
}

std::vector<std::pair<std::array<int, 3>, Form>> toric_basis(
    const std::vector<Form>& gens, int d) {
    std::vector<std::pair<std::array<int, 3>, Form>> out;
    int layer = 0;
    for (const Form& g : gens) {
        if (g.degree() >= d) continue;
        ++layer;
        const int m = d - g.degree();
        for (int deg = 0; deg <= m; ++deg)
            for (int j = deg; j >= 0; --j) {
                const int k = deg - j;
                const Form mono = Form::monomial({j, k, m - j - k}, 1);
                out.emplace_back(std::array<int, 3>{layer, j, k}, mono * g);
            }
    }
    return out;
}

bool binomial_quadrics_vanish(
    const std::vector<std::pair<std::array<int, 3>, Form>>& basis) {
    // products with equal layer multiset and equal (j, k) sums must coincide
    std::map<std::array<int, 4>, Form> rep;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a; b < basis.size(); ++b) {
            const auto& [wa, fa] = basis[a];
            const auto& [wb, fb] = basis[b];
            const std::array<int, 4> key{std::min(wa[0], wb[0]), std::max(wa[0], wb[0]),
                                         wa[1] + wb[1], wa[2] + wb[2]};
            Form prod = fa * fb;
            auto it = rep.find(key);
            if (it == rep.end()) {
                rep.emplace(key, std::move(prod));
            } else if (!(prod - it->second).is_zero()) {
                return false;
            }
        }
    return true;
}

bool toric_relation_check(const std::vector<Form>& gens, int d) {
    return binomial_quadrics_vanish(toric_basis(gens, d));
}

} // namespace pyternary
