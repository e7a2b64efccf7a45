#ifndef PYTERNARY_FORM_HPP
#define PYTERNARY_FORM_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pyternary/rng.hpp"

namespace pyternary {

using Exponent = std::array<int, 3>;

// Monomials of fixed total degree t, ordered by descending lexicographic
// exponent (x1^t first, x3^t last).
std::vector<Exponent> monomial_basis(int t);
int monomial_index(int t, const Exponent& e);

// Homogeneous ternary polynomial with exact rational coefficients.  Stored
// sparse; zero coefficients are never kept.
class Form {
public:
    Form() = default;
    explicit Form(int degree) : degree_(degree) {}

    static Form monomial(const Exponent& e, const mpq_class& c);
    static Form constant(const mpq_class& c) { return monomial({0, 0, 0}, c); }
    static Form variable(int i); // x1, x2 or x3 for i = 0, 1, 2

    // Dense coefficient draw with integer entries in [lo, hi].
    static Form random(int degree, Rng& rng, int lo = -9, int hi = 9);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, mpq_class>& terms() const { return terms_; }

    mpq_class coeff(const Exponent& e) const;
    void set_coeff(const Exponent& e, const mpq_class& c);

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Form& a, const Form& b);
    friend Form operator*(const mpq_class& c, const Form& f);
    Form operator-() const { return mpq_class(-1) * *this; }
    bool operator==(const Form& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

    Form pow(int n) const;

    // Coefficients over monomial_basis(degree()).
    std::vector<mpq_class> dense() const;
    static Form from_dense(int degree, const std::vector<mpq_class>& coeffs);

    // Primitive integer multiple: divides by the coefficient content and
    // makes the leading (first stored) coefficient positive.
    Form primitive() const;

    std::string str() const; // e.g. "3*x1^2*x2 - 1/2*x3^3"

private:
    int degree_ = 0;
    std::map<Exponent, mpq_class> terms_;
};

// Dense double-precision counterpart used by the numeric rank-reduction
// path, where square roots make exact coefficients impossible.
struct RealForm {
    int degree = 0;
    std::vector<double> coeffs; // over monomial_basis(degree)

    static RealForm from(const Form& f);
    static RealForm zero(int degree);
    RealForm operator*(const RealForm& o) const;
    RealForm& add_scaled(const RealForm& o, double s);
};

} // namespace pyternary

#endif
