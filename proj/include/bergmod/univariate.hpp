#pragma once

#include <vector>

#include "bergmod/polynomial.hpp"

namespace bergmod {

// Dense univariate polynomial over Q(i), coefficient of z^k at index k.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<GaussianRational> cs) : c_(std::move(cs)) { trim(); }
    UniPoly(const GaussianRational& c) : c_{c} { trim(); }

    static UniPoly from_poly(const Polynomial& p, int var) {
        std::vector<GaussianRational> cs(p.degree_in(var) + 1);
        for (auto& [e, co] : p.terms()) {
            for (auto& [v, k] : e.entries())
                if (v != var)
                    throw std::invalid_argument("UniPoly: polynomial not univariate in z" +
                                                std::to_string(var));
            cs[e.get(var)] = co;
        }
        return UniPoly(std::move(cs));
    }

    Polynomial to_poly(int var) const {
        Polynomial p;
        for (size_t k = 0; k < c_.size(); ++k) {
            Exponent e;
            e.set(var, (long)k);
            p.add_term(e, c_[k]);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return (long)c_.size() - 1; }  // -1 for zero
    const GaussianRational& operator[](size_t k) const { return c_[k]; }
    GaussianRational coeff(long k) const {
        return (k < 0 || k >= (long)c_.size()) ? GaussianRational() : c_[k];
    }
    const GaussianRational& lc() const { return c_.back(); }
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    UniPoly operator-() const {
        auto r = c_;
        for (auto& x : r) x = -x;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<GaussianRational> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
        for (size_t ia = 0; ia < a.c_.size(); ++ia)
            for (size_t ib = 0; ib < b.c_.size(); ++ib) r[ia + ib] += a.c_[ia] * b.c_[ib];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const GaussianRational& s, const UniPoly& a) {
        auto r = a.c_;
        for (auto& x : r) x *= s;
        return UniPoly(std::move(r));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    // Division with remainder over the field Q(i).
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
        if (b.is_zero()) throw ZeroPolynomialError();
        std::vector<GaussianRational> rem = a.c_, quo;
        long db = b.degree();
        if (a.degree() >= db) quo.resize(a.degree() - db + 1);
        for (long k = a.degree(); k >= db; --k) {
            if (rem[k].is_zero()) continue;
            GaussianRational f = rem[k] / b.lc();
            quo[k - db] = f;
            for (long j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
        }
        q = UniPoly(std::move(quo));
        r = UniPoly(std::move(rem));
    }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) {
        UniPoly q, r;
        divmod(a, b, q, r);
        return r;
    }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) {
        UniPoly q, r;
        divmod(a, b, q, r);
        return q;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<GaussianRational> r(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = GaussianRational((long)k) * c_[k];
        return UniPoly(std::move(r));
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        return inv(lc()) * *this;
    }

    // z^deg * conj(p)(1/z): coefficients conjugated and reversed.
    UniPoly reversed_conj() const {
        std::vector<GaussianRational> r(c_.rbegin(), c_.rend());
        for (auto& x : r) x = x.conj();
        return UniPoly(std::move(r));
    }

    UniPoly conj_coeffs() const {
        auto r = c_;
        for (auto& x : r) x = x.conj();
        return UniPoly(std::move(r));
    }

    // p(s * z) for rational scale s.
    UniPoly scaled(const GaussianRational& s) const {
        auto r = c_;
        GaussianRational f(1);
        for (size_t k = 1; k < r.size(); ++k) {
            f *= s;
            r[k] *= f;
        }
        return UniPoly(std::move(r));
    }

    // p(z + t) by Horner expansion.
    UniPoly shifted(const GaussianRational& t) const {
        UniPoly r;
        UniPoly lin(std::vector<GaussianRational>{t, GaussianRational(1)});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + UniPoly(*it);
        return r;
    }

    std::complex<double> eval(std::complex<double> z) const {
        std::complex<double> s = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * z + it->to_complex();
        return s;
    }
    GaussianRational eval_exact(const GaussianRational& z) const {
        GaussianRational s;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * z + *it;
        return s;
    }

    // Multiplicity of the root z = 0.
    long valuation() const {
        if (is_zero()) return -1;
        long v = 0;
        while (c_[v].is_zero()) ++v;
        return v;
    }
    UniPoly strip_zero_roots(long v) const {
        return UniPoly(std::vector<GaussianRational>(c_.begin() + v, c_.end()));
    }

  private:
    std::vector<GaussianRational> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

// Extended gcd: g = s*a + t*b, g monic (or zero).
inline UniPoly uni_ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0(GaussianRational(1)), s1, t0, t1(GaussianRational(1));
    while (!r1.is_zero()) {
        UniPoly q, r;
        UniPoly::divmod(r0, r1, q, r);
        UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) {
        s = s0;
        t = t0;
        return r0;
    }
    GaussianRational u = inv(r0.lc());
    s = u * s0;
    t = u * t0;
    return u * r0;
}

inline UniPoly uni_squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0) return p.monic();
    UniPoly g = uni_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.monic();
    return (p / g).monic();
}

}  // namespace bergmod
