#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "bergmod/exponent.hpp"
#include "bergmod/gaussian_rational.hpp"

namespace bergmod {

// A point of the multidisk: finitely supported complex values per variable.
// Unlisted variables evaluate as 0.
struct Point {
    std::map<int, std::complex<double>> coords;

    std::complex<double> get(int var) const {
        auto it = coords.find(var);
        return it == coords.end() ? std::complex<double>(0.0) : it->second;
    }
    void set(int var, std::complex<double> z) { coords[var] = z; }

    bool in_open_polydisk() const {
        for (auto& [v, z] : coords)
            if (std::abs(z) >= 1.0) return false;
        return true;
    }
    bool on_torus(double tol = 1e-12) const {
        for (auto& [v, z] : coords)
            if (std::abs(std::abs(z) - 1.0) > tol) return false;
        return true;
    }
};

struct NotDivisibleError : std::domain_error {
    NotDivisibleError() : std::domain_error("polynomial division is not exact") {}
};
struct ZeroPolynomialError : std::domain_error {
    ZeroPolynomialError() : std::domain_error("operation undefined for the zero polynomial") {}
};

// Sparse multivariate polynomial over Q(i), variables z1, z2, ...
// Terms are kept in graded-lex order; no zero coefficients are stored.
class Polynomial {
  public:
    using TermMap = std::map<Exponent, GaussianRational, GrlexLess>;

    Polynomial() = default;
    Polynomial(long c) {
        if (c != 0) terms_[Exponent{}] = GaussianRational(c);
    }
    Polynomial(const GaussianRational& c) {
        if (!c.is_zero()) terms_[Exponent{}] = c;
    }

    static Polynomial variable(int var, long exp = 1) {
        Polynomial p;
        if (exp < 0) throw std::invalid_argument("negative exponent");
        Exponent e;
        e.set(var, exp);
        p.terms_[e] = GaussianRational(1);
        return p;
    }
    static Polynomial monomial(const Exponent& e, const GaussianRational& c) {
        Polynomial p;
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
    }
    size_t term_count() const { return terms_.size(); }

    GaussianRational coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? GaussianRational() : it->second;
    }
    GaussianRational constant_term() const { return coeff(Exponent{}); }

    // Leading term under graded-lex.
    const Exponent& leading_exponent() const {
        if (is_zero()) throw ZeroPolynomialError();
        return terms_.rbegin()->first;
    }
    const GaussianRational& leading_coeff() const {
        if (is_zero()) throw ZeroPolynomialError();
        return terms_.rbegin()->second;
    }

    long total_degree() const {
        if (is_zero()) return -1;
        return leading_exponent().total_degree();
    }
    long degree_in(int var) const {
        long d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, e.get(var));
        return d;
    }

    VariableSet support_vars() const {
        VariableSet s;
        for (auto& [e, c] : terms_)
            for (auto& [v, ex] : e.entries()) s.insert(v);
        return s;
    }

    void add_term(const Exponent& e, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
        Polynomial r;
        if (c.is_zero()) return r;
        for (auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
        return r;
    }

    Polynomial pow(long n) const {
        if (n < 0) throw std::invalid_argument("pow: negative exponent");
        Polynomial r(1), base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Exact quotient: returns h with (*this) == q * h, or throws NotDivisibleError.
    Polynomial div_exact(const Polynomial& q) const {
        if (q.is_zero()) throw ZeroPolynomialError();
        Polynomial h, r = *this;
        while (!r.is_zero()) {
            const Exponent& le = r.leading_exponent();
            if (!q.leading_exponent().divides(le)) throw NotDivisibleError();
            Exponent de = le - q.leading_exponent();
            GaussianRational dc = r.leading_coeff() / q.leading_coeff();
            Polynomial t = Polynomial::monomial(de, dc);
            h += t;
            r -= t * q;
        }
        return h;
    }
    bool divisible_by(const Polynomial& q) const {
        try {
            div_exact(q);
            return true;
        } catch (const NotDivisibleError&) {
            return false;
        }
    }

    Polynomial derivative(int var) const {
        Polynomial r;
        for (auto& [e, c] : terms_) {
            long k = e.get(var);
            if (k == 0) continue;
            Exponent d = e;
            d.set(var, k - 1);
            r.add_term(d, GaussianRational(k) * c);
        }
        return r;
    }

    std::complex<double> eval(const Point& x) const {
        std::complex<double> s = 0.0;
        for (auto& [e, c] : terms_) {
            std::complex<double> t = c.to_complex();
            for (auto& [v, k] : e.entries()) {
                std::complex<double> zv = x.get(v);
                for (long j = 0; j < k; ++j) t *= zv;
            }
            s += t;
        }
        return s;
    }

    // Substitute a polynomial for one variable.
    Polynomial substitute(int var, const Polynomial& value) const {
        Polynomial r;
        for (auto& [e, c] : terms_) {
            long k = e.get(var);
            Exponent rest = e;
            rest.set(var, 0);
            Polynomial t = Polynomial::monomial(rest, c);
            if (k > 0) t *= value.pow(k);
            r += t;
        }
        return r;
    }

    // Set every variable outside S to zero (the E_S projection on polynomials).
    Polynomial project_to(const VariableSet& S) const {
        Polynomial r;
        for (auto& [e, c] : terms_) {
            bool keep = true;
            for (auto& [v, k] : e.entries())
                if (!S.count(v)) {
                    keep = false;
                    break;
                }
            if (keep) r.add_term(e, c);
        }
        return r;
    }

    // Coefficientwise complex conjugation.
    Polynomial conj_coeffs() const {
        Polynomial r;
        for (auto& [e, c] : terms_) r.terms_[e] = c.conj();
        return r;
    }

    // Divide by leading coefficient; returns the removed unit.
    GaussianRational make_monic() {
        if (is_zero()) throw ZeroPolynomialError();
        GaussianRational lc = leading_coeff();
        if (!lc.is_one())
            for (auto& [e, c] : terms_) c /= lc;
        return lc;
    }

  private:
    TermMap terms_;
};

inline VariableSet set_union(const VariableSet& a, const VariableSet& b) {
    VariableSet r = a;
    r.insert(b.begin(), b.end());
    return r;
}

}  // namespace bergmod
