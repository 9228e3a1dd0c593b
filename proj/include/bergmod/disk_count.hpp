#pragma once

#include <optional>

#include "bergmod/univariate.hpp"

namespace bergmod {

namespace detail {

// ---- real univariate polynomials over Q, for Sturm chains ----

using RPoly = std::vector<mpq_class>;

inline void rp_trim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline long rp_deg(const RPoly& p) { return (long)p.size() - 1; }

inline RPoly rp_derivative(const RPoly& p) {
    RPoly r;
    for (size_t k = 1; k < p.size(); ++k) r.push_back(mpq_class((long)k) * p[k]);
    rp_trim(r);
    return r;
}

inline RPoly rp_rem(RPoly a, const RPoly& b) {
    long db = rp_deg(b);
    while (rp_deg(a) >= db) {
        mpq_class f = a.back() / b.back();
        long shift = rp_deg(a) - db;
        for (long j = 0; j <= db; ++j) a[shift + j] -= f * b[j];
        rp_trim(a);
    }
    return a;
}

inline RPoly rp_gcd(RPoly a, RPoly b) {
    rp_trim(a);
    rp_trim(b);
    while (!b.empty()) {
        RPoly r = rp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline int rp_sign(const mpq_class& q) { return sgn(q); }

// Number of distinct real roots via a Sturm chain over (-inf, inf).
inline long rp_count_real_roots(RPoly p) {
    rp_trim(p);
    if (rp_deg(p) <= 0) return 0;
    RPoly d = rp_derivative(p);
    RPoly g = rp_gcd(p, d);
    if (rp_deg(g) > 0) {
        // replace p by its squarefree part p / g
        RPoly rem = p;
        long dg = rp_deg(g);
        RPoly quo(rp_deg(p) - dg + 1);
        while (rp_deg(rem) >= dg) {
            mpq_class f = rem.back() / g.back();
            long shift = rp_deg(rem) - dg;
            quo[shift] = f;
            for (long j = 0; j <= dg; ++j) rem[shift + j] -= f * g[j];
            rp_trim(rem);
        }
        p = quo;
        rp_trim(p);
        d = rp_derivative(p);
    }
    std::vector<RPoly> chain{p, d};
    while (rp_deg(chain.back()) > 0) {
        RPoly r = rp_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        rp_trim(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    auto variations = [&](bool at_plus_inf) {
        long v = 0;
        int prev = 0;
        for (auto& q : chain) {
            if (q.empty()) continue;
            int s = rp_sign(q.back());
            if (!at_plus_inf && rp_deg(q) % 2 == 1) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++v;
            if (s != 0) prev = s;
        }
        return v;
    };
    return variations(false) - variations(true);
}

}  // namespace detail

struct SingularSchurCase {};

// Number of zeros of f in |z| < 1 via the Schur transform recursion.
// Requires f(0) != 0; throws SingularSchurCase when a degenerate step occurs
// (e.g. zeros on the unit circle). Counts with multiplicity.
inline long schur_count_open_disk(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    long n = f.degree();
    if (n == 0) return 0;
    mpq_class delta = f.coeff(0).norm() - f.lc().norm();
    if (delta == 0) throw SingularSchurCase{};
    UniPoly tf = f.coeff(0).conj() * f - f.lc() * f.reversed_conj();
    if (tf.is_zero()) throw SingularSchurCase{};
    long c = schur_count_open_disk(tf);
    return delta > 0 ? c : n - c;
}

// Number of distinct zeros of f on the unit circle, decided exactly via the
// Moebius parametrization z = (1+it)/(1-it) and a Sturm count of the real
// parameters. f need not be squarefree; distinct zeros are counted.
inline long circle_zero_count(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    long n = f.degree();
    // F(t) = sum_k a_k (1+it)^k (1-it)^(n-k)
    UniPoly up(std::vector<GaussianRational>{GaussianRational(1), GaussianRational::i()});
    UniPoly dn(std::vector<GaussianRational>{GaussianRational(1), -GaussianRational::i()});
    std::vector<UniPoly> up_pow(n + 1), dn_pow(n + 1);
    up_pow[0] = dn_pow[0] = UniPoly(GaussianRational(1));
    for (long k = 1; k <= n; ++k) {
        up_pow[k] = up_pow[k - 1] * up;
        dn_pow[k] = dn_pow[k - 1] * dn;
    }
    UniPoly F;
    for (long k = 0; k <= n; ++k) {
        GaussianRational a = f.coeff(k);
        if (a.is_zero()) continue;
        F = F + a * (up_pow[k] * dn_pow[n - k]);
    }
    detail::RPoly A, B;
    for (long k = 0; k <= F.degree(); ++k) {
        A.push_back(F.coeff(k).re);
        B.push_back(F.coeff(k).im);
    }
    detail::rp_trim(A);
    detail::rp_trim(B);
    detail::RPoly G = A.empty() ? B : (B.empty() ? A : detail::rp_gcd(A, B));
    long count = detail::rp_count_real_roots(G);
    // z = -1 is the one circle point missed by the parametrization.
    if (f.eval_exact(GaussianRational(mpq_class(-1))).is_zero()) ++count;
    return count;
}

// Distinct-zero counts of f relative to the open unit disk.
struct DiskCounts {
    long inside = 0;
    long on_circle = 0;
    long outside = 0;
};

// Exact distinct-root location counts for a nonzero univariate polynomial.
// Certification: counts at shrunken radii are lower bounds for the open
// regions; the loop stops once inside + on + outside reaches the number of
// distinct roots, which proves both bounds are exact.
inline DiskCounts count_roots_unit_disk(const UniPoly& f0) {
    if (f0.is_zero()) throw ZeroPolynomialError();
    UniPoly f = uni_squarefree_part(f0);
    long n = f.degree();
    DiskCounts r;
    if (n <= 0) return r;
    long v0 = f.valuation();
    if (v0 > 0) f = f.strip_zero_roots(v0);  // v0 <= 1 after squarefree
    n = f.degree();

    r.on_circle = circle_zero_count(f);
    UniPoly rc = f.reversed_conj();  // zeros are 1/conj(zeros of f)
    long rc_val = rc.valuation();
    if (rc_val > 0) rc = rc.strip_zero_roots(rc_val);  // cannot happen: f(0) != 0

    long target = n;
    for (long k = 1; k <= 64; ++k) {
        mpz_class den = mpz_class(1) << k;
        for (long nudge = 0; nudge < 24; ++nudge) {
            mpq_class rho = 1 - mpq_class(mpz_class(97 + nudge), den * 97);
            if (rho <= 0) continue;
            try {
                long nin = schur_count_open_disk(f.scaled(GaussianRational(rho)));
                long nout = schur_count_open_disk(rc.scaled(GaussianRational(rho)));
                if (nin + nout + r.on_circle == target) {
                    r.inside = nin + (v0 > 0 ? 1 : 0);
                    r.outside = nout;
                    return r;
                }
                break;  // counts valid but not yet saturated; shrink further
            } catch (const SingularSchurCase&) {
                continue;  // degenerate radius; nudge
            }
        }
    }
    throw std::runtime_error("count_roots_unit_disk: radius refinement did not converge");
}

// Distinct roots of f in the open disk |z - center| < radius.
inline long count_roots_in_disk(const UniPoly& f, const GaussianRational& center,
                                const mpq_class& radius) {
    UniPoly g = f.shifted(center).scaled(GaussianRational(radius));
    return count_roots_unit_disk(g).inside;
}

}  // namespace bergmod
