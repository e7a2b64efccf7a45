#include "pyternary/form.hpp"

#include <sstream>
#include <stdexcept>

namespace pyternary {

std::vector<Exponent> monomial_basis(int t) {
    std::vector<Exponent> out;
    if (t < 0) return out;
    out.reserve((t + 1) * (t + 2) / 2);
    for (int e1 = t; e1 >= 0; --e1)
        for (int e2 = t - e1; e2 >= 0; --e2) out.push_back({e1, e2, t - e1 - e2});
    return out;
}

int monomial_index(int t, const Exponent& e) {
    const int r = t - e[0]; // monomials with larger first exponent come first
    return r * (r + 1) / 2 + (r - e[1]);
}

Form Form::monomial(const Exponent& e, const mpq_class& c) {
    Form f(e[0] + e[1] + e[2]);
    mpq_class v = c;
    v.canonicalize();
    if (v != 0) f.terms_[e] = std::move(v);
    return f;
}

Form Form::variable(int i) {
    Exponent e{0, 0, 0};
    e.at(i) = 1;
    return monomial(e, 1);
}

Form Form::random(int degree, Rng& rng, int lo, int hi) {
    Form f(degree);
    for (const Exponent& e : monomial_basis(degree)) {
        const int c = rng.uniform_int(lo, hi);
        if (c != 0) f.terms_[e] = c;
    }
    return f;
}

mpq_class Form::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void Form::set_coeff(const Exponent& e, const mpq_class& c) {
    mpq_class v = c;
    v.canonicalize();
    if (v == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(v);
}

Form& Form::operator+=(const Form& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in form sum");
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Form& Form::operator-=(const Form& o) { return *this += mpq_class(-1) * o; }

Form operator*(const Form& a, const Form& b) {
    Form out(a.degree_ + b.degree_);
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            const Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

Form operator*(const mpq_class& c, const Form& f) {
    Form out(f.degree_);
    mpq_class s = c;
    s.canonicalize();
    if (s == 0) return out;
    for (const auto& [e, v] : f.terms_) out.terms_.emplace(e, s * v);
    return out;
}

Form Form::pow(int n) const {
    Form out = Form::constant(1);
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
}

std::vector<mpq_class> Form::dense() const {
    std::vector<mpq_class> out((degree_ + 1) * (degree_ + 2) / 2, 0);
    for (const auto& [e, c] : terms_) out[monomial_index(degree_, e)] = c;
    return out;
}

Form Form::from_dense(int degree, const std::vector<mpq_class>& coeffs) {
    Form f(degree);
    const auto basis = monomial_basis(degree);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i] != 0) f.terms_[basis[i]] = coeffs[i];
    return f;
}

Form Form::primitive() const {
    if (is_zero()) return *this;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    // first stored term gets a positive coefficient
    const auto& lead = *terms_.begin();
    if (lead.second * scale < 0) scale = -scale;
    return scale * *this;
}

std::string Form::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print in descending-lex monomial order
    for (const Exponent& e : monomial_basis(degree_)) {
        auto it = terms_.find(e);
        if (it == terms_.end()) continue;
        mpq_class c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        const bool is_const = e[0] == 0 && e[1] == 0 && e[2] == 0;
        if (c != 1 || is_const) {
            os << c.get_str();
            if (!is_const) os << "*";
        }
        bool star = false;
        for (int i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

RealForm RealForm::from(const Form& f) {
    RealForm r;
    r.degree = f.degree();
    r.coeffs.assign((f.degree() + 1) * (f.degree() + 2) / 2, 0.0);
    for (const auto& [e, c] : f.terms())
        r.coeffs[monomial_index(f.degree(), e)] = c.get_d();
    return r;
}

RealForm RealForm::zero(int degree) {
    RealForm r;
    r.degree = degree;
    r.coeffs.assign((degree + 1) * (degree + 2) / 2, 0.0);
    return r;
}

RealForm RealForm::operator*(const RealForm& o) const {
    RealForm out = zero(degree + o.degree);
    const auto ba = monomial_basis(degree);
    const auto bb = monomial_basis(o.degree);
    for (std::size_t i = 0; i < ba.size(); ++i) {
        if (coeffs[i] == 0.0) continue;
        for (std::size_t j = 0; j < bb.size(); ++j) {
            if (o.coeffs[j] == 0.0) continue;
            const Exponent e{ba[i][0] + bb[j][0], ba[i][1] + bb[j][1], ba[i][2] + bb[j][2]};
            out.coeffs[monomial_index(out.degree, e)] += coeffs[i] * o.coeffs[j];
        }
    }
    return out;
}

RealForm& RealForm::add_scaled(const RealForm& o, double s) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += s * o.coeffs[i];
    return *this;
}

} // namespace pyternary
