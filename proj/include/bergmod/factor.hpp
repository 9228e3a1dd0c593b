#pragma once

#include <algorithm>
#include <vector>

#include "bergmod/gcd.hpp"
#include "bergmod/roots.hpp"
#include "bergmod/univariate.hpp"

namespace bergmod {

struct ProductMismatchError : std::domain_error {
    ProductMismatchError() : std::domain_error("trusted factors do not multiply back to the input") {}
};
struct NotCoprimeError : std::domain_error {
    NotCoprimeError() : std::domain_error("trusted factors share a nontrivial common divisor") {}
};

struct Factor {
    Polynomial poly;  // non-constant, graded-lex leading coefficient 1
    long multiplicity = 1;
    bool certified_irreducible = false;
};

struct FactoredPoly {
    GaussianRational unit;
    std::vector<Factor> factors;
    std::vector<std::string> warnings;

    Polynomial expand() const {
        Polynomial p(unit);
        for (auto& f : factors) p *= f.poly.pow(f.multiplicity);
        return p;
    }
};

namespace detail {

// ---- Gaussian integer content ----

struct GInt {
    mpz_class re, im;
    bool is_zero() const { return re == 0 && im == 0; }
    mpz_class norm() const { return re * re + im * im; }
};

inline mpz_class round_div(const mpz_class& a, const mpz_class& b) {
    // nearest integer to a/b, b > 0
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), mpz_class(2 * a + b).get_mpz_t(), mpz_class(2 * b).get_mpz_t());
    return q;
}

inline GInt gint_gcd(GInt a, GInt b) {
    while (!b.is_zero()) {
        mpz_class n = b.norm();
        // a/b = a * conj(b) / |b|^2, rounded componentwise
        mpz_class pr = a.re * b.re + a.im * b.im;
        mpz_class pi = a.im * b.re - a.re * b.im;
        GInt q{round_div(pr, n), round_div(pi, n)};
        GInt r{a.re - (q.re * b.re - q.im * b.im), a.im - (q.re * b.im + q.im * b.re)};
        a = b;
        b = r;
    }
    return a;
}

// Scale to Gaussian-integer coefficients and remove their gcd.
inline UniPoly gint_primitive(const UniPoly& f) {
    mpz_class den = 1;
    for (auto& c : f.coeffs()) {
        den = lcm(den, c.re.get_den());
        den = lcm(den, c.im.get_den());
    }
    std::vector<GInt> cs;
    for (auto& c : f.coeffs()) {
        mpq_class r = c.re * den, i = c.im * den;
        cs.push_back({r.get_num(), i.get_num()});
    }
    GInt g{0, 0};
    for (auto& c : cs)
        if (!c.is_zero()) g = gint_gcd(g, c);
    GaussianRational gg(mpq_class(g.re), mpq_class(g.im));
    std::vector<GaussianRational> out;
    for (auto& c : cs) out.push_back(GaussianRational(mpq_class(c.re), mpq_class(c.im)) / gg);
    return UniPoly(std::move(out));
}

// ---- univariate irreducible factorization over Q(i) ----

// f squarefree, degree >= 1. Returns monic irreducible factors. Factor
// discovery is numeric (root clustering by subset products), but every
// emitted factor is verified by exact division, and irreducibility follows
// from minimality of the accepted subsets.
inline std::vector<UniPoly> uni_factor_squarefree(const UniPoly& f) {
    std::vector<UniPoly> out;
    if (f.degree() == 1) {
        out.push_back(f.monic());
        return out;
    }
    UniPoly F = gint_primitive(f);
    std::vector<std::complex<long double>> roots = durand_kerner_roots(F);
    std::vector<int> active(roots.size());
    for (size_t k = 0; k < roots.size(); ++k) active[k] = (int)k;

    auto try_subset = [&](const std::vector<int>& idx) -> bool {
        using C = std::complex<long double>;
        std::vector<C> poly{1.0L};
        for (int j : idx) {
            poly.push_back(0.0L);
            for (size_t t = poly.size() - 1; t > 0; --t) poly[t] -= roots[j] * poly[t - 1];
        }
        // candidate = lc(F) * prod (x - r_j), coefficients rounded to Z[i]
        C L((long double)F.lc().re.get_d(), (long double)F.lc().im.get_d());
        std::vector<GaussianRational> cand(poly.size());
        long double worst = 0;
        for (size_t t = 0; t < poly.size(); ++t) {
            C c = poly[poly.size() - 1 - t] * L;
            long rr = (long)std::llround((double)c.real()), ri = (long)std::llround((double)c.imag());
            worst = std::max(worst, std::abs(c.real() - (long double)rr));
            worst = std::max(worst, std::abs(c.imag() - (long double)ri));
            cand[t] = GaussianRational(mpq_class(rr), mpq_class(ri));
        }
        if (worst > 0.25L) return false;
        UniPoly C2(std::move(cand));
        if (C2.degree() != (long)idx.size()) return false;
        UniPoly q, r;
        UniPoly::divmod(F, C2, q, r);
        if (!r.is_zero()) return false;
        out.push_back(gint_primitive(C2).monic());
        F = gint_primitive(q);
        std::vector<int> rest;
        for (int a : active)
            if (std::find(idx.begin(), idx.end(), a) == idx.end()) rest.push_back(a);
        active = rest;
        return true;
    };

    for (size_t s = 1; 2 * s <= (size_t)F.degree();) {
        // enumerate size-s subsets of active
        std::vector<size_t> pos(s);
        for (size_t k = 0; k < s; ++k) pos[k] = k;
        bool found = false;
        while (s <= active.size()) {
            std::vector<int> idx;
            for (size_t k = 0; k < s; ++k) idx.push_back(active[pos[k]]);
            if (try_subset(idx)) {
                found = true;
                break;
            }
            // next combination
            long k = (long)s - 1;
            while (k >= 0 && pos[k] == active.size() - s + k) --k;
            if (k < 0) break;
            ++pos[k];
            for (size_t j = k + 1; j < s; ++j) pos[j] = pos[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (F.degree() >= 1) out.push_back(F.monic());
    return out;
}

// ---- multivariate machinery ----

// Drop terms whose total degree in variables other than `x` is >= K.
inline Polynomial truncate_aux(const Polynomial& p, int x, long K) {
    Polynomial r;
    for (auto& [e, c] : p.terms()) {
        long aux = e.total_degree() - e.get(x);
        if (aux < K) r.add_term(e, c);
    }
    return r;
}

// One Hensel pair lift of f = G*H around the origin of the non-main
// variables. G0, H0 monic coprime univariate images in x; lifts to
// f = G*H mod (aux degree K).
inline void hensel_pair(const Polynomial& f, int x, const UniPoly& G0, const UniPoly& H0, long K,
                        Polynomial& G, Polynomial& H) {
    UniPoly sigma, tau;
    UniPoly one = uni_ext_gcd(G0, H0, sigma, tau);  // sigma*G0 + tau*H0 = 1
    if (one.degree() != 0) throw std::logic_error("hensel_pair: images not coprime");
    G = G0.to_poly(x);
    H = H0.to_poly(x);
    for (long k = 1; k < K; ++k) {
        Polynomial E = truncate_aux(f - G * H, x, K);
        if (E.is_zero()) return;
        // homogeneous aux-degree-k slice, grouped by aux monomial
        std::map<Exponent, UniPoly, GrlexLess> slices;
        for (auto& [e, c] : E.terms()) {
            long aux = e.total_degree() - e.get(x);
            if (aux != k) continue;
            Exponent mu = e;
            mu.set(x, 0);
            auto& up = slices[mu];
            std::vector<GaussianRational> cs(up.coeffs());
            cs.resize(std::max<size_t>(cs.size(), e.get(x) + 1));
            cs[e.get(x)] += c;
            up = UniPoly(std::move(cs));
        }
        for (auto& [mu, e_mu] : slices) {
            UniPoly t = tau * e_mu;
            UniPoly q, dG;
            UniPoly::divmod(t, G0, q, dG);       // dG = tau*e mod G0
            UniPoly dH = sigma * e_mu + q * H0;  // dG*H0 + dH*G0 = e
            Polynomial mono = Polynomial::monomial(mu, GaussianRational(1));
            G += mono * dG.to_poly(x);
            H += mono * dH.to_poly(x);
        }
        G = truncate_aux(G, x, K);
        H = truncate_aux(H, x, K);
    }
}

// Lift the full factor list: prod result_i = f mod (aux degree K).
inline std::vector<Polynomial> hensel_list(const Polynomial& f, int x,
                                           const std::vector<UniPoly>& gs, long K) {
    if (gs.size() == 1) return {truncate_aux(f, x, K)};
    UniPoly rest(GaussianRational(1));
    for (size_t j = 1; j < gs.size(); ++j) rest = rest * gs[j];
    Polynomial G, H;
    hensel_pair(f, x, gs[0], rest, K, G, H);
    std::vector<UniPoly> tail(gs.begin() + 1, gs.end());
    std::vector<Polynomial> r = hensel_list(H, x, tail, K);
    r.insert(r.begin(), G);
    return r;
}

std::vector<Polynomial> split_irreducible(const Polynomial& p);

// p primitive squarefree with >= 2 support variables and positive degree in
// x, content-free in x. Returns irreducible factors (unnormalized).
inline std::vector<Polynomial> multivar_factor(const Polynomial& p0, int x) {
    Polynomial p = p0;
    VariableSet vars = p.support_vars();
    std::vector<int> others;
    for (int v : vars)
        if (v != x) others.push_back(v);

    // Make the x-leading coefficient constant by z_j -> z_j + c_j*x, so the
    // x-degree becomes the total degree.
    std::vector<long> cshift(others.size(), 0);
    {
        long D = p.total_degree();
        Polynomial top;
        for (auto& [e, c] : p.terms())
            if (e.total_degree() == D) top.add_term(e, c);
        bool need = !(p.degree_in(x) == D &&
                      [&] {
                          auto cs = coeffs_in(p, x);
                          return cs.back().is_constant();
                      }());
        if (need) {
            // search small integer tuples with top(1, c) != 0
            bool done = false;
            for (long trial = 0; trial < 200 && !done; ++trial) {
                std::vector<long> c(others.size());
                long t = trial;
                for (size_t j = 0; j < others.size(); ++j) {
                    long v = t % 5;
                    t /= 5;
                    c[j] = (v <= 2) ? v : 2 - v;  // 0,1,2,-1,-2
                }
                Polynomial ev = top;
                for (size_t j = 0; j < others.size(); ++j)
                    ev = ev.substitute(others[j], Polynomial(GaussianRational(c[j])));
                ev = ev.substitute(x, Polynomial(GaussianRational(1)));
                if (!ev.is_zero()) {
                    cshift = c;
                    done = true;
                }
            }
            if (!done) throw std::runtime_error("multivar_factor: no regularizing substitution");
            for (size_t j = 0; j < others.size(); ++j)
                if (cshift[j] != 0)
                    p = p.substitute(others[j], Polynomial::variable(others[j]) +
                                                    GaussianRational(cshift[j]) *
                                                        Polynomial::variable(x));
        }
    }
    long d = p.degree_in(x);

    // Choose an evaluation point a for the other variables with squarefree
    // full-degree image, then translate it to the origin.
    std::vector<GaussianRational> shift(others.size(), GaussianRational(0));
    {
        bool done = false;
        for (long trial = 0; trial < 400 && !done; ++trial) {
            std::vector<GaussianRational> a(others.size());
            long t = trial;
            for (size_t j = 0; j < others.size(); ++j) {
                long v = t % 7;
                t /= 7;
                static const long nums[7] = {0, 1, -1, 2, -2, 3, -3};
                a[j] = GaussianRational(mpq_class(nums[v], 2));
            }
            Polynomial ev = p;
            for (size_t j = 0; j < others.size(); ++j)
                ev = ev.substitute(others[j], Polynomial(a[j]));
            if (ev.is_zero() || ev.degree_in(x) != d) continue;
            UniPoly f0 = UniPoly::from_poly(ev, x);
            if (uni_gcd(f0, f0.derivative()).degree() != 0) continue;
            shift = a;
            done = true;
        }
        if (!done) throw std::runtime_error("multivar_factor: no squarefree evaluation point");
        for (size_t j = 0; j < others.size(); ++j)
            if (!shift[j].is_zero())
                p = p.substitute(others[j],
                                 Polynomial::variable(others[j]) + Polynomial(shift[j]));
    }

    // Monic normalization in x (leading coefficient is a constant now).
    GaussianRational lc = coeffs_in(p, x).back().constant_term();
    p = inv(lc) * p;

    Polynomial ev = p;
    for (int v : others) ev = ev.substitute(v, Polynomial(GaussianRational(0)));
    std::vector<UniPoly> gs = uni_factor_squarefree(UniPoly::from_poly(ev, x));

    std::vector<Polynomial> result;
    if (gs.size() == 1) {
        result.push_back(p0);  // irreducible: image has full degree and is irreducible
        return result;
    }

    long K = d + 1;  // monic factors have total degree = x-degree <= d
    std::vector<Polynomial> lifted = hensel_list(p, x, gs, K);

    // Recombine lifted factors by subsets, validated by exact division.
    std::vector<Polynomial> remaining = lifted;
    Polynomial rem_p = p;
    for (size_t s = 1; remaining.size() >= s;) {
        std::vector<size_t> pos(s);
        for (size_t k = 0; k < s; ++k) pos[k] = k;
        bool found = false;
        while (s <= remaining.size()) {
            Polynomial C(1);
            for (size_t k = 0; k < s; ++k) C = truncate_aux(C * remaining[pos[k]], x, K);
            bool ok = false;
            try {
                Polynomial q = rem_p.div_exact(C);
                rem_p = q;
                ok = true;
            } catch (const NotDivisibleError&) {
            }
            if (ok) {
                result.push_back(C);
                std::vector<Polynomial> rest;
                for (size_t j = 0; j < remaining.size(); ++j)
                    if (std::find(pos.begin(), pos.end(), j) == pos.end())
                        rest.push_back(remaining[j]);
                remaining = rest;
                found = true;
                break;
            }
            long k = (long)s - 1;
            while (k >= 0 && pos[k] == remaining.size() - s + k) --k;
            if (k < 0) break;
            ++pos[k];
            for (size_t j = k + 1; j < s; ++j) pos[j] = pos[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (!rem_p.is_constant()) result.push_back(rem_p);

    // Undo the shifts.
    for (auto& f : result) {
        for (size_t j = 0; j < others.size(); ++j)
            if (!shift[j].is_zero())
                f = f.substitute(others[j],
                                 Polynomial::variable(others[j]) - Polynomial(shift[j]));
        for (size_t j = 0; j < others.size(); ++j)
            if (cshift[j] != 0)
                f = f.substitute(others[j], Polynomial::variable(others[j]) -
                                                GaussianRational(cshift[j]) *
                                                    Polynomial::variable(x));
    }
    return result;
}

// Irreducible factors of a nonconstant squarefree polynomial.
inline std::vector<Polynomial> split_irreducible(const Polynomial& p) {
    VariableSet vars = p.support_vars();
    if (vars.empty()) return {};
    if (vars.size() == 1) {
        int v = *vars.begin();
        UniPoly f = UniPoly::from_poly(p, v);
        long val = f.valuation();
        std::vector<Polynomial> out;
        if (val > 0) {
            out.push_back(Polynomial::variable(v));
            f = f.strip_zero_roots(val);  // val <= 1 for squarefree input
        }
        if (f.degree() >= 1)
            for (auto& g : uni_factor_squarefree(f)) out.push_back(g.to_poly(v));
        return out;
    }
    // pick the main variable of smallest positive degree
    int x = *vars.begin();
    for (int v : vars)
        if (p.degree_in(v) < p.degree_in(x)) x = v;
    Polynomial cont = content_in(p, x);
    Polynomial prim = p.div_exact(cont);
    std::vector<Polynomial> out;
    if (!cont.is_constant())
        for (auto& f : split_irreducible(cont)) out.push_back(f);
    if (prim.support_vars().size() <= 1) {
        for (auto& f : split_irreducible(prim)) out.push_back(f);
    } else {
        for (auto& f : multivar_factor(prim, x)) out.push_back(f);
    }
    return out;
}

}  // namespace detail

// Squarefree decomposition: unit * prod w_m^m with the w_m squarefree and
// pairwise coprime. The gcd of p with all its partial derivatives collects
// every factor with its multiplicity reduced by one.
inline FactoredPoly squarefree(const Polynomial& p0) {
    if (p0.is_zero()) throw ZeroPolynomialError();
    FactoredPoly out;
    Polynomial p = p0;
    if (p.is_constant()) {
        out.unit = p.constant_term();
        return out;
    }
    out.unit = p.make_monic();

    std::vector<Polynomial> layers;  // layers[m-1] = product of factors with mult >= m
    while (!p.is_constant()) {
        std::vector<Polynomial> gens{p};
        for (int v : p.support_vars()) gens.push_back(p.derivative(v));
        Polynomial g = gcd_many(gens);
        layers.push_back(p.div_exact(g));
        p = g;
    }
    layers.push_back(Polynomial(1));
    for (size_t m = 0; m + 1 < layers.size(); ++m) {
        Polynomial w = layers[m].div_exact(layers[m + 1]);
        if (w.is_constant()) continue;
        GaussianRational u = w.make_monic();
        out.unit *= pow(u, (long)(m + 1));
        out.factors.push_back({w, (long)(m + 1), false});
    }
    return out;
}

inline FactoredPoly factor(const Polynomial& p, bool auto_mode = true) {
    FactoredPoly sf = squarefree(p);
    bool within_caps = true;
    if (p.total_degree() > 6 && p.support_vars().size() > 1) within_caps = false;
    if (p.support_vars().size() > 3) within_caps = false;
    if (!auto_mode || !within_caps) {
        if (!within_caps)
            sf.warnings.push_back("degree/variable cap exceeded: factors are squarefree only");
        return sf;
    }
    FactoredPoly out;
    out.unit = sf.unit;
    for (auto& f : sf.factors) {
        for (auto& irr : detail::split_irreducible(f.poly)) {
            Polynomial g = irr;
            // Normalizing every irreducible to graded-lex leading coefficient 1
            // keeps the product identity exact: f.poly is itself monic and the
            // graded-lex leading coefficient is multiplicative.
            g.make_monic();
            // merge associates
            bool merged = false;
            for (auto& existing : out.factors)
                if (existing.poly == g) {
                    existing.multiplicity += f.multiplicity;
                    merged = true;
                    break;
                }
            if (!merged) out.factors.push_back({g, f.multiplicity, true});
        }
    }
    return out;
}

// Trusted-input mode: verify the asserted product identity exactly and
// pairwise coprimality; factors are user-asserted, not certified.
inline FactoredPoly factor_trusted(const Polynomial& p,
                                   const std::vector<std::pair<Polynomial, long>>& asserted) {
    if (p.is_zero()) throw ZeroPolynomialError();
    FactoredPoly out;
    out.unit = GaussianRational(1);
    Polynomial prod(1);
    for (auto& [f, m] : asserted) {
        if (f.is_zero() || m <= 0) throw std::invalid_argument("bad trusted factor entry");
        Polynomial g = f;
        if (g.is_constant()) {
            out.unit *= pow(g.constant_term(), m);
            continue;
        }
        GaussianRational u = g.make_monic();
        out.unit *= pow(u, m);
        bool merged = false;
        for (auto& existing : out.factors)
            if (existing.poly == g) {
                existing.multiplicity += m;
                merged = true;
                break;
            }
        if (!merged) out.factors.push_back({g, m, false});
    }
    for (auto& f : out.factors) prod *= f.poly.pow(f.multiplicity);
    prod = out.unit * prod;
    // allow the input's own unit to differ: compare up to the stated unit
    if (prod != p) {
        // recover a constant discrepancy if the monomial supports agree
        if (!prod.is_zero() && !p.is_zero() && prod.term_count() == p.term_count()) {
            GaussianRational ratio = p.leading_coeff() / prod.leading_coeff();
            if (ratio * prod == p) {
                out.unit *= ratio;
                prod = ratio * prod;
            }
        }
        if (prod != p) throw ProductMismatchError();
    }
    for (size_t i = 0; i < out.factors.size(); ++i)
        for (size_t j = i + 1; j < out.factors.size(); ++j)
            if (!poly_gcd(out.factors[i].poly, out.factors[j].poly).is_constant())
                throw NotCoprimeError();
    out.warnings.push_back("factors are user-asserted (not certified irreducible)");
    return out;
}

}  // namespace bergmod
