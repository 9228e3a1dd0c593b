#pragma once

#include <cmath>
#include <map>
#include <random>

#include "bergmod/groebner.hpp"
#include "bergmod/polynomial.hpp"
#include "bergmod/stability.hpp"

namespace bergmod {

struct InvalidBetaError : std::domain_error {
    InvalidBetaError() : std::domain_error("weight parameter beta must be >= -1") {}
};
struct AlphaNotInBError : std::domain_error {
    AlphaNotInBError() : std::domain_error("exponent touches a Hardy variable") {}
};
struct PointOutOfDomainError : std::domain_error {
    PointOutOfDomainError() : std::domain_error("point has a coordinate outside the open disk") {}
};

// The weight sequence beta: a default value plus finitely many overrides.
// Hardy set H = {n : beta_n = -1}, Bergman set B = {n : beta_n > -1}.
struct WeightSignature {
    mpq_class default_beta = -1;
    std::map<int, mpq_class> overrides;

    WeightSignature() = default;
    explicit WeightSignature(mpq_class def, std::map<int, mpq_class> ov = {})
        : default_beta(std::move(def)), overrides(std::move(ov)) {
        default_beta.canonicalize();
        if (default_beta < -1) throw InvalidBetaError();
        for (auto& [v, b] : overrides) {
            b.canonicalize();
            if (b < -1) throw InvalidBetaError();
        }
    }

    mpq_class beta(int var) const {
        auto it = overrides.find(var);
        return it == overrides.end() ? default_beta : it->second;
    }
    bool is_hardy(int var) const { return beta(var) == -1; }
    bool is_bergman(int var) const { return !is_hardy(var); }
};

struct WeightValue {
    mpq_class exact;
    double approx = 0.0;
};

// omega_alpha = prod_n alpha_n! * Gamma(beta_n+2) / Gamma(alpha_n+beta_n+2),
// computed exactly via Gamma(a+b+2)/Gamma(b+2) = (b+2)(b+3)...(b+a+1).
inline WeightValue weight(const Exponent& alpha, const WeightSignature& sig) {
    WeightValue w;
    w.exact = 1;
    double lg = 0.0;
    for (auto& [v, a] : alpha.entries()) {
        mpq_class b = sig.beta(v);
        mpq_class num = 1, den = 1;
        for (long j = 1; j <= a; ++j) num *= j;          // alpha_n!
        for (long j = 0; j < a; ++j) den *= b + 2 + j;   // rising factorial
        w.exact *= num / den;
        double bd = b.get_d();
        lg += std::lgamma((double)a + 1.0) + std::lgamma(bd + 2.0) -
              std::lgamma((double)a + bd + 2.0);
    }
    w.approx = std::exp(lg);
    return w;
}

// <p, q> = sum_alpha p_alpha * conj(q_alpha) * omega_alpha (monomials are
// orthogonal).
inline GaussianRational inner_product(const Polynomial& p, const Polynomial& q,
                                      const WeightSignature& sig) {
    GaussianRational s;
    for (auto& [e, c] : p.terms()) {
        GaussianRational qc = q.coeff(e);
        if (qc.is_zero()) continue;
        s += c * qc.conj() * GaussianRational(weight(e, sig).exact);
    }
    return s;
}

inline mpq_class norm_sq(const Polynomial& p, const WeightSignature& sig) {
    mpq_class s = 0;
    for (auto& [e, c] : p.terms()) s += c.norm() * weight(e, sig).exact;
    return s;
}

// E_S: substitute 0 for every variable outside S.
inline Polynomial e_s(const Polynomial& f, const VariableSet& S) { return f.project_to(S); }

// C_alpha: the Hardy-variable coefficient polynomial of zeta^alpha in the
// expansion of F over Bergman-variable monomials. alpha must be supported in
// the Bergman set.
inline Polynomial c_alpha(const Polynomial& f, const Exponent& alpha, const WeightSignature& sig) {
    for (auto& [v, a] : alpha.entries())
        if (sig.is_hardy(v)) throw AlphaNotInBError();
    Polynomial out;
    for (auto& [e, c] : f.terms()) {
        Exponent bpart, hpart;
        for (auto& [v, a] : e.entries())
            (sig.is_bergman(v) ? bpart : hpart).set(v, a);
        if (bpart == alpha) out.add_term(hpart, c);
    }
    return out;
}

// All Bergman-part exponents appearing in f.
inline std::vector<Exponent> bergman_exponents(const Polynomial& f, const WeightSignature& sig) {
    std::map<Exponent, bool, GrlexLess> seen;
    for (auto& [e, c] : f.terms()) {
        Exponent bpart;
        for (auto& [v, a] : e.entries())
            if (sig.is_bergman(v)) bpart.set(v, a);
        seen[bpart] = true;
    }
    std::vector<Exponent> out;
    for (auto& [e, b] : seen) out.push_back(e);
    return out;
}

// K_lambda(zeta) = prod_n (1 - conj(lambda_n) zeta_n)^{-(beta_n + 2)}.
inline std::complex<double> kernel_eval(const Point& lambda, const Point& zeta,
                                        const WeightSignature& sig) {
    for (auto& [v, z] : lambda.coords)
        if (std::abs(z) >= 1.0) throw PointOutOfDomainError();
    for (auto& [v, z] : zeta.coords)
        if (std::abs(z) >= 1.0) throw PointOutOfDomainError();
    std::complex<double> out = 1.0;
    for (auto& [v, lz] : lambda.coords) {
        std::complex<double> base = 1.0 - std::conj(lz) * zeta.get(v);
        double expo = -(sig.beta(v).get_d() + 2.0);
        out *= std::pow(base, std::complex<double>(expo, 0.0));
    }
    return out;
}

// Monte-Carlo estimate of the integral of |p|^2 over the product of the
// torus (Hardy variables) and the beta-weighted disk (Bergman variables,
// radial inverse-CDF sampling of (beta+1)(1-r^2)^beta * 2r dr).
inline std::pair<double, double> mc_norm_estimate(const Polynomial& p, const WeightSignature& sig,
                                                  long samples, unsigned long seed) {
    if (samples <= 0) throw std::invalid_argument("samples must be positive");
    VariableSet vars = p.support_vars();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double two_pi = 2.0 * 3.14159265358979323846;
    double sum = 0.0, sum_sq = 0.0;
    for (long k = 0; k < samples; ++k) {
        Point pt;
        for (int v : vars) {
            double theta = uni(rng) * two_pi;
            double r = 1.0;
            if (sig.is_bergman(v)) {
                double b = sig.beta(v).get_d();
                double u = uni(rng);
                r = std::sqrt(1.0 - std::pow(1.0 - u, 1.0 / (b + 1.0)));
            }
            pt.set(v, {r * std::cos(theta), r * std::sin(theta)});
        }
        double val = std::norm(p.eval(pt));
        sum += val;
        sum_sq += val * val;
    }
    double mean = sum / (double)samples;
    double var = std::max(0.0, sum_sq / (double)samples - mean * mean);
    double se = std::sqrt(var / (double)samples);
    return {mean, se};
}

// Independent verification of a Yes certificate (p_tilde, q_tilde, G):
// exact norm equality ||p_tilde g||^2 = ||q_tilde g||^2 for random ideal
// elements g, per-C_alpha norm equality, and torus modulus agreement.
inline bool certificate_check(const Polynomial& p_tilde, const Polynomial& q_tilde,
                              const IdealGens& G, const WeightSignature& sig, long trials,
                              unsigned long seed, std::string* failure = nullptr) {
    auto fail = [&](const std::string& why) {
        if (failure) *failure = why;
        return false;
    };
    if (p_tilde.is_zero() || q_tilde.is_zero()) return fail("certificate polynomial is zero");
    for (int v : p_tilde.support_vars())
        if (!sig.is_hardy(v)) return fail("p_tilde touches Bergman variable z" + std::to_string(v));
    for (int v : q_tilde.support_vars())
        if (!sig.is_hardy(v)) return fail("q_tilde touches Bergman variable z" + std::to_string(v));

    VariableSet vars = set_union(set_union(p_tilde.support_vars(), q_tilde.support_vars()),
                                 G.variable_universe());
    if (vars.empty()) vars.insert(1);
    std::vector<int> var_list(vars.begin(), vars.end());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<long> degd(0, 4);
    std::uniform_int_distribution<size_t> pick_var(0, var_list.size() - 1);

    auto random_poly = [&]() {
        Polynomial r;
        for (int t = 0; t < 4; ++t) {
            Exponent e;
            long d = degd(rng);
            for (long j = 0; j < d; ++j) {
                int v = var_list[pick_var(rng)];
                e.set(v, e.get(v) + 1);
            }
            r.add_term(e, GaussianRational(mpq_class(num(rng), den(rng)),
                                           mpq_class(num(rng), den(rng))));
        }
        return r;
    };

    for (long t = 0; t < trials; ++t) {
        Polynomial g;
        for (auto& gen : G.generators) g += random_poly() * gen;
        if (g.is_zero()) g = G.generators.empty() ? Polynomial(1) : G.generators.front();
        Polynomial pg = p_tilde * g, qg = q_tilde * g;
        if (norm_sq(pg, sig) != norm_sq(qg, sig))
            return fail("norm mismatch on trial " + std::to_string(t));
        // Lemma-style refinement: each Bergman coefficient slice must agree.
        std::map<Exponent, bool, GrlexLess> alphas;
        for (auto& a : bergman_exponents(pg, sig)) alphas[a] = true;
        for (auto& a : bergman_exponents(qg, sig)) alphas[a] = true;
        for (auto& [a, b] : alphas) {
            mpq_class np = norm_sq(c_alpha(pg, a, sig), sig);
            mpq_class nq = norm_sq(c_alpha(qg, a, sig), sig);
            if (np != nq) return fail("C_alpha norm mismatch on trial " + std::to_string(t));
        }
    }

    VariableSet tvars = set_union(p_tilde.support_vars(), q_tilde.support_vars());
    if (!tvars.empty()) {
        for (auto& pt : torus_sample(tvars, 1000, seed ^ 0xabcdef12345ULL)) {
            double ap = std::abs(p_tilde.eval(pt)), aq = std::abs(q_tilde.eval(pt));
            // Relative tolerance with an absolute floor: multipliers may have
            // zeros arbitrarily close to the torus, where cancellation makes a
            // purely relative test unstable.
            double tol = 1e-9 * std::max(1.0, std::max(ap, aq));
            if (std::abs(ap - aq) > tol) return fail("torus modulus mismatch");
        }
    }
    return true;
}

}  // namespace bergmod
