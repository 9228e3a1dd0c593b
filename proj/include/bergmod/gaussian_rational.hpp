#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace bergmod {

// Element of Q(i): rational real and imaginary parts, always in lowest terms
// (mpq_class canonicalizes on construction and after arithmetic).
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(const mpq_class& r) : re(r), im(0) { this->re.canonicalize(); }
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
        // mpq_class(num, den) does not reduce to lowest terms on its own
        re.canonicalize();
        im.canonicalize();
    }

    static GaussianRational i() { return GaussianRational(0, 1); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianRational conj() const { return GaussianRational(re, -im); }

    // |z|^2, an exact rational.
    mpq_class norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return GaussianRational(-re, -im); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        mpq_class n = o.norm();
        mpq_class r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Total order used only for canonical tie-breaking (not an algebraic order).
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

inline GaussianRational inv(const GaussianRational& z) {
    GaussianRational one(1);
    return one / z;
}

inline GaussianRational pow(const GaussianRational& z, long n) {
    if (n < 0) return pow(inv(z), -n);
    GaussianRational r(1), base = z;
    while (n > 0) {
        if (n & 1) r *= base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

// Parses "a", "a/b", with optional sign. Throws on malformed input.
inline mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace bergmod
