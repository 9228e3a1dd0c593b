#pragma once

#include <string>
#include <vector>

#include "bergmod/factor.hpp"
#include "bergmod/parser.hpp"
#include "bergmod/stability.hpp"
#include "bergmod/weights.hpp"

namespace bergmod {

struct UndecidedStabilityError : std::runtime_error {
    Polynomial factor;
    explicit UndecidedStabilityError(const Polynomial& f)
        : std::runtime_error("stability undecided for factor " + format_poly(f)), factor(f) {}
};

enum class VerdictStatus { Yes, No, Undecided };

struct EquivalenceVerdict {
    VerdictStatus status = VerdictStatus::Undecided;

    // Yes certificate (Theorem-level: closures of p_tilde*G and q_tilde*G).
    bool has_certificate = false;
    Polynomial p_tilde, q_tilde;
    IdealGens G;
    // Modulus-level multipliers: |lhs * u| = |rhs * v| on the torus, u and v
    // zero-free in the open polydisk.
    Polynomial u, v;

    std::string obstruction;  // No
    std::string reason;       // Undecided
    std::vector<std::string> assumptions;
};

// Reflection p~(zeta) = zeta^multidegree * conj-coefficients(p)(1/zeta) with
// monomial content removed; raw = unit * poly, poly graded-lex monic and not
// divisible by any variable. |raw(zeta)| = |p(zeta)| exactly on the torus.
struct Reflection {
    Polynomial poly;        // monic (or 1 for constant input)
    GaussianRational unit;  // raw reflection = unit * poly

    Polynomial raw() const { return unit * poly; }
};

inline Reflection reflect(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    std::map<int, long> multideg;
    for (int v : p.support_vars()) multideg[v] = p.degree_in(v);
    Polynomial raw;
    for (auto& [e, c] : p.terms()) {
        Exponent f;
        for (auto& [v, d] : multideg) f.set(v, d - e.get(v));
        raw.add_term(f, c.conj());
    }
    // strip monomial content
    std::map<int, long> minexp = multideg;
    for (auto& [e, c] : raw.terms())
        for (auto& [v, m] : minexp) m = std::min(m, e.get(v));
    Polynomial content(1);
    for (auto& [v, m] : minexp)
        if (m > 0) content *= Polynomial::variable(v, m);
    Reflection out;
    out.poly = raw.div_exact(content);
    out.unit = out.poly.make_monic();
    return out;
}

// Decompose p = stable_part * p_star: stable_part zero-free in the open
// polydisk, p_star the product of the factors with certified zeros there.
inline std::pair<Polynomial, Polynomial> stable_free_part(const FactoredPoly& fp,
                                                          double eps = 1e-6,
                                                          unsigned long seed = 0) {
    Polynomial p_star(1), stable(fp.unit);
    for (auto& f : fp.factors) {
        StabilityVerdict sv = has_zero_in_open_polydisk(f.poly, eps, seed);
        switch (sv.status) {
            case StabilityStatus::ZeroFree:
                stable *= f.poly.pow(f.multiplicity);
                break;
            case StabilityStatus::ZeroInOpen:
                p_star *= f.poly.pow(f.multiplicity);
                break;
            case StabilityStatus::Undecided:
                throw UndecidedStabilityError(f.poly);
        }
    }
    return {p_star, stable};
}

inline std::pair<Polynomial, Polynomial> stable_free_part(const Polynomial& p, double eps = 1e-6,
                                                          unsigned long seed = 0) {
    if (p.is_zero()) throw ZeroPolynomialError();
    return stable_free_part(factor(p), eps, seed);
}

namespace detail {

struct ClassifiedFactor {
    Polynomial f;  // monic irreducible
    long mult;
    enum Kind { Stable, Discarded, Survivor } kind;
    Reflection refl;
    bool fragile = false;  // soundness of a No verdict not guaranteed
};

// A univariate irreducible with roots strictly on both sides of the unit
// circle splits over C into a stable part and a part with stable reflection;
// such factors admit modulus certificates that are invisible at the level of
// exact-coefficient factors, so a failed match must not report No.
inline bool univariate_straddles(const Polynomial& f) {
    VariableSet vars = f.support_vars();
    if (vars.size() != 1) return false;
    DiskCounts c = count_roots_unit_disk(UniPoly::from_poly(f, *vars.begin()));
    return c.inside > 0 && c.outside > 0;
}

inline ClassifiedFactor classify_factor(const Polynomial& f, long mult, double eps,
                                        unsigned long seed,
                                        std::vector<std::string>& assumptions) {
    ClassifiedFactor out{f, mult, ClassifiedFactor::Stable, reflect(f), false};
    StabilityVerdict own = has_zero_in_open_polydisk(f, eps, seed);
    if (own.status == StabilityStatus::Undecided) throw UndecidedStabilityError(f);
    if (own.status == StabilityStatus::ZeroFree) {
        out.kind = ClassifiedFactor::Stable;
        return out;
    }
    if (out.refl.poly.is_constant()) {
        out.kind = ClassifiedFactor::Discarded;  // |f| = const on the torus
        return out;
    }
    StabilityVerdict rv = has_zero_in_open_polydisk(out.refl.poly, eps, seed);
    if (rv.status == StabilityStatus::Undecided) throw UndecidedStabilityError(out.refl.poly);
    if (rv.status == StabilityStatus::ZeroFree) {
        out.kind = ClassifiedFactor::Discarded;
        return out;
    }
    out.kind = ClassifiedFactor::Survivor;
    if (univariate_straddles(f)) {
        out.fragile = true;
    } else {
        // Pathology guard: an irreducible factor whose reflection is
        // reducible with mixed-stability parts escapes the matching argument.
        FactoredPoly rf = factor(out.refl.poly);
        if (rf.factors.size() > 1 || !rf.warnings.empty()) {
            bool any_stable = false, any_zero = false;
            for (auto& g : rf.factors) {
                StabilityVerdict gv = has_zero_in_open_polydisk(g.poly, eps, seed);
                if (gv.status == StabilityStatus::ZeroFree) any_stable = true;
                if (gv.status == StabilityStatus::ZeroInOpen) any_zero = true;
                if (gv.status == StabilityStatus::Undecided) throw UndecidedStabilityError(g.poly);
            }
            if ((any_stable && any_zero) || !rf.warnings.empty()) out.fragile = true;
            if (rf.factors.size() > 1)
                assumptions.push_back("reflection of " + format_poly(f) + " is reducible");
        }
    }
    return out;
}

}  // namespace detail

// Modulus equivalence: exist stable u, v with |r*u| = |s*v| on the torus.
inline EquivalenceVerdict modulus_equivalent(const Polynomial& r, const Polynomial& s,
                                             double eps = 1e-6, unsigned long seed = 0) {
    if (r.is_zero() || s.is_zero()) throw ZeroPolynomialError();
    EquivalenceVerdict out;
    try {
        FactoredPoly fr = factor(r), fs = factor(s);
        for (auto& w : fr.warnings) out.assumptions.push_back("lhs: " + w);
        for (auto& w : fs.warnings) out.assumptions.push_back("rhs: " + w);
        for (auto& fp : {std::cref(fr), std::cref(fs)})
            for (auto& f : fp.get().factors)
                if (!f.certified_irreducible)
                    out.assumptions.push_back("factor " + format_poly(f.poly) +
                                              " not certified irreducible");

        // Constant prefixes: both sides end up carrying |unit(r)*unit(s)|.
        Polynomial u(fs.unit), v(fr.unit);

        struct SurvivorGroup {
            Polynomial rep;
            long r_mult = 0, s_mult = 0;
            bool fragile = false;
        };
        std::map<std::string, SurvivorGroup> classes;
        // side 0 = lhs r, side 1 = rhs s
        auto process = [&](const FactoredPoly& fp, int side) {
            Polynomial& cross = (side == 0) ? v : u;  // multiplier of the other side
            for (auto& f : fp.factors) {
                auto cf = detail::classify_factor(f.poly, f.multiplicity, eps, seed,
                                                  out.assumptions);
                switch (cf.kind) {
                    case detail::ClassifiedFactor::Stable:
                        cross *= cf.f.pow(cf.mult);
                        break;
                    case detail::ClassifiedFactor::Discarded:
                        cross *= cf.refl.raw().pow(cf.mult);
                        break;
                    case detail::ClassifiedFactor::Survivor: {
                        std::string kf = format_poly(cf.f), km = format_poly(cf.refl.poly);
                        bool reflected = km < kf;  // canonical representative
                        std::string key = reflected ? km : kf;
                        auto& grp = classes[key];
                        if (grp.rep.is_zero()) grp.rep = reflected ? cf.refl.poly : cf.f;
                        (side == 0 ? grp.r_mult : grp.s_mult) += cf.mult;
                        grp.fragile = grp.fragile || cf.fragile;
                        if (reflected) {
                            // |f| = |unit| * |rep| on the torus, so this side
                            // carries an excess constant modulus; balance it
                            // on the other side's multiplier.
                            cross *= Polynomial(pow(cf.refl.unit, cf.mult));
                        }
                        break;
                    }
                }
            }
        };
        process(fr, 0);
        process(fs, 1);

        for (auto& [key, grp] : classes) {
            if (grp.r_mult != grp.s_mult) {
                if (grp.fragile) {
                    out.status = VerdictStatus::Undecided;
                    out.reason = "unmatched factor class " + format_poly(grp.rep) +
                                 " admits refinements over C not visible to exact-coefficient "
                                 "factorization";
                    return out;
                }
                out.status = VerdictStatus::No;
                out.obstruction =
                    "factor class " + format_poly(grp.rep) + " has multiplicity " +
                    std::to_string(grp.r_mult) + " on the left but " + std::to_string(grp.s_mult) +
                    " on the right; a factor with zeros in the open polydisk whose reflection "
                    "also has zeros there can divide neither a stable multiplier nor the "
                    "reflection of one";
                return out;
            }
        }

        out.status = VerdictStatus::Yes;
        out.u = u;
        out.v = v;
        out.has_certificate = true;
        return out;
    } catch (const UndecidedStabilityError& e) {
        out.status = VerdictStatus::Undecided;
        out.reason = e.what();
        return out;
    }
}

// Theorem 3.1-style decision for submodules presented as Beurling forms
// M = [p*K], N = [q*L].
inline EquivalenceVerdict unitarily_equivalent(const BeurlingForm& M, const BeurlingForm& N,
                                               const WeightSignature& sig, double eps = 1e-6,
                                               unsigned long seed = 0) {
    validate_beurling_form(M);
    validate_beurling_form(N);
    EquivalenceVerdict out;
    if (!ideal_equal(M.cofactor, N.cofactor)) {
        out.status = VerdictStatus::No;
        out.obstruction = "cofactor ideals differ (reduced Groebner bases are not equal)";
        return out;
    }
    Polynomial phi = poly_gcd(M.gcd_part, N.gcd_part);
    Polynomial r = M.gcd_part.div_exact(phi);
    Polynomial s = N.gcd_part.div_exact(phi);
    for (int var : r.support_vars())
        if (!sig.is_hardy(var)) {
            out.status = VerdictStatus::No;
            out.obstruction = "cofactor r = " + format_poly(r) +
                              " of the gcd parts involves Bergman variable z" +
                              std::to_string(var);
            return out;
        }
    for (int var : s.support_vars())
        if (!sig.is_hardy(var)) {
            out.status = VerdictStatus::No;
            out.obstruction = "cofactor s = " + format_poly(s) +
                              " of the gcd parts involves Bergman variable z" +
                              std::to_string(var);
            return out;
        }
    EquivalenceVerdict mv = modulus_equivalent(r, s, eps, seed);
    out.assumptions = mv.assumptions;
    if (mv.status != VerdictStatus::Yes) {
        out.status = mv.status;
        out.obstruction = mv.obstruction;
        out.reason = mv.reason;
        return out;
    }
    out.status = VerdictStatus::Yes;
    out.has_certificate = true;
    out.u = mv.u;
    out.v = mv.v;
    out.p_tilde = r * mv.u;
    out.q_tilde = s * mv.v;
    std::vector<Polynomial> gens;
    for (auto& k : M.cofactor.generators) gens.push_back(phi * k);
    out.G = IdealGens{std::move(gens)};
    return out;
}

// Theorem 4.1: principal submodules [p], [q] via stable-free parts.
inline EquivalenceVerdict unitarily_equivalent_principal(const Polynomial& p, const Polynomial& q,
                                                         const WeightSignature& sig,
                                                         double eps = 1e-6,
                                                         unsigned long seed = 0) {
    if (p.is_zero() || q.is_zero()) throw ZeroPolynomialError();
    EquivalenceVerdict out;
    try {
        auto [p_star, p_stable] = stable_free_part(p, eps, seed);
        auto [q_star, q_stable] = stable_free_part(q, eps, seed);
        BeurlingForm M{p_star, IdealGens{{Polynomial(1)}}};
        BeurlingForm N{q_star, IdealGens{{Polynomial(1)}}};
        return unitarily_equivalent(M, N, sig, eps, seed);
    } catch (const UndecidedStabilityError& e) {
        out.status = VerdictStatus::Undecided;
        out.reason = e.what();
        return out;
    }
}

// Theorem 4.2: the unitary orbit of [zeta^gamma] is determined by gamma with
// the Hardy coordinates zeroed.
inline Exponent monomial_orbit_exponent(const Exponent& gamma, const WeightSignature& sig) {
    Exponent out;
    for (auto& [v, a] : gamma.entries())
        if (sig.is_bergman(v)) out.set(v, a);
    return out;
}

}  // namespace bergmod
