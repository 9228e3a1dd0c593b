#pragma once

#include <vector>

#include "bergmod/polynomial.hpp"
#include "bergmod/univariate.hpp"

namespace bergmod {

struct AllZeroError : std::domain_error {
    AllZeroError() : std::domain_error("gcd of all-zero inputs") {}
};

namespace detail {

// View of p as a univariate polynomial in `var` with Polynomial coefficients.
inline std::vector<Polynomial> coeffs_in(const Polynomial& p, int var) {
    std::vector<Polynomial> cs(p.degree_in(var) + 1);
    for (auto& [e, c] : p.terms()) {
        Exponent rest = e;
        long k = e.get(var);
        rest.set(var, 0);
        cs[k].add_term(rest, c);
    }
    while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
    return cs;
}

inline Polynomial from_coeffs(const std::vector<Polynomial>& cs, int var) {
    Polynomial p;
    for (size_t k = 0; k < cs.size(); ++k) p += cs[k] * Polynomial::variable(var, (long)k);
    return p;
}

inline long deg_in(const std::vector<Polynomial>& cs) { return (long)cs.size() - 1; }

// Pseudo-remainder of A by B in the top variable: lc(B)^(dA-dB+1) * A mod B.
inline std::vector<Polynomial> pseudo_rem(std::vector<Polynomial> A, const std::vector<Polynomial>& B) {
    long dB = deg_in(B);
    const Polynomial& lcB = B.back();
    long delta = deg_in(A) - dB;
    long steps = 0;
    while (deg_in(A) >= dB && !(A.size() == 1 && A[0].is_zero())) {
        long dA = deg_in(A);
        Polynomial lcA = A.back();
        // A := lcB * A - lcA * v^(dA-dB) * B
        for (auto& c : A) c = lcB * c;
        for (long j = 0; j <= dB; ++j) A[dA - dB + j] -= lcA * B[j];
        while (A.size() > 1 && A.back().is_zero()) A.pop_back();
        ++steps;
    }
    // Normalize to the standard prem: lc(B)^(delta+1) * A mod B.
    if (steps < delta + 1) {
        Polynomial scale = lcB.pow(delta + 1 - steps);
        for (auto& c : A) c = scale * c;
    }
    return A;
}

}  // namespace detail

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Content of p with respect to `var`: gcd of its coefficient polynomials.
inline Polynomial content_in(const Polynomial& p, int var) {
    auto cs = detail::coeffs_in(p, var);
    Polynomial g;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    Polynomial r = g;
    r.make_monic();
    return r;
}

// gcd normalized to graded-lex leading coefficient 1. gcd(0,0) = 0.
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) {
        Polynomial r = b;
        if (!r.is_zero()) r.make_monic();
        return r;
    }
    if (b.is_zero()) {
        Polynomial r = a;
        r.make_monic();
        return r;
    }
    if (a.is_constant() || b.is_constant()) return Polynomial(1);

    VariableSet vars = set_union(a.support_vars(), b.support_vars());
    int v = *vars.rbegin();

    Polynomial ca = content_in(a, v), cb = content_in(b, v);
    Polynomial cont = poly_gcd(ca, cb);
    Polynomial pa = a.div_exact(ca), pb = b.div_exact(cb);

    auto A = detail::coeffs_in(pa, v);
    auto B = detail::coeffs_in(pb, v);
    if (detail::deg_in(A) < detail::deg_in(B)) std::swap(A, B);

    // Subresultant pseudo-remainder sequence on the primitive parts.
    Polynomial g(1), h(1);
    Polynomial prim_gcd(1);
    while (true) {
        if (detail::deg_in(B) == 0) {
            prim_gcd = Polynomial(1);  // nonzero v-constant divisor of primitives
            break;
        }
        long delta = detail::deg_in(A) - detail::deg_in(B);
        auto R = detail::pseudo_rem(A, B);
        if (R.size() == 1 && R[0].is_zero()) {
            Polynomial bp = detail::from_coeffs(B, v);
            prim_gcd = bp.div_exact(content_in(bp, v));
            break;
        }
        Polynomial divisor = g * h.pow(delta);
        auto newA = B;
        for (auto& c : R) c = c.div_exact(divisor);
        A = std::move(newA);
        B = std::move(R);
        g = A.back();
        if (delta > 0) h = g.pow(delta).div_exact(h.pow(delta - 1));
    }

    Polynomial result = cont * prim_gcd;
    result.make_monic();
    return result;
}

// gcd of a list; ignores zero entries; throws AllZeroError if all are zero.
inline Polynomial gcd_many(const std::vector<Polynomial>& ps) {
    Polynomial g;
    bool any = false;
    for (auto& p : ps) {
        if (p.is_zero()) continue;
        any = true;
        g = g.is_zero() ? p : poly_gcd(g, p);
        if (g.is_constant()) break;
    }
    if (!any) throw AllZeroError();
    g.make_monic();
    return g;
}

}  // namespace bergmod
