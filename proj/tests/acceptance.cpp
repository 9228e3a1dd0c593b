// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "bergmod/equivalence.hpp"
#include "bergmod/json_io.hpp"

using namespace bergmod;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int n, bool ok, const char* desc, const Timer& t, const std::string& detail = "") {
    std::printf("criterion %2d: %s - %s (%.1fs)%s%s\n", n, ok ? "PASS" : "FAIL", desc, t.secs(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

Polynomial random_poly(std::mt19937_64& rng, int max_vars, long max_deg, int terms,
                       int coeff_range = 3) {
    std::uniform_int_distribution<int> num(-coeff_range, coeff_range), den(1, 3), var(1, max_vars);
    std::uniform_int_distribution<long> deg(0, max_deg);
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
        Exponent e;
        long d = deg(rng);
        for (long j = 0; j < d; ++j) {
            int v = var(rng);
            e.set(v, e.get(v) + 1);
        }
        p.add_term(e, GaussianRational(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))));
    }
    return p;
}

// ---------------------------------------------------------------- criterion 1
void criterion_weights() {
    Timer t;
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> den(1, 6);
    std::uniform_int_distribution<long> deg(0, 6);
    bool ok = true;
    std::string detail;
    WeightSignature hardy{mpq_class(-1)};
    for (int k = 0; k < 1000 && ok; ++k) {
        int d1 = den(rng), d2 = den(rng);
        mpq_class b1(std::uniform_int_distribution<int>(-d1, 5 * d1)(rng), d1);
        mpq_class b2(std::uniform_int_distribution<int>(-d2, 5 * d2)(rng), d2);
        Exponent a;
        a.set(1, deg(rng));
        a.set(2, deg(rng));
        WeightValue w = weight(a, WeightSignature(mpq_class(0), {{1, b1}, {2, b2}}));
        double ex = w.exact.get_d();
        if (!(w.exact > 0 && w.exact <= 1) ||
            std::abs(w.approx - ex) > 1e-10 * std::max(std::abs(ex), 1e-300)) {
            ok = false;
            detail = "gamma-ratio mismatch at trial " + std::to_string(k);
        }
        if (weight(a, hardy).exact != 1) {
            ok = false;
            detail = "Hardy weight differs from 1";
        }
    }
    report(1, ok && t.secs() < 5.0, "exact weights agree with the floating Gamma-ratio (1000 trials)",
           t, detail);
}

// ---------------------------------------------------------------- criterion 2
void criterion_norms() {
    Timer t;
    std::mt19937_64 rng(102);
    std::vector<mpq_class> betas = {mpq_class(-1), mpq_class(0), mpq_class(1), mpq_class(3, 2)};
    std::uniform_int_distribution<size_t> pick_beta(0, betas.size() - 1);
    int hits = 0;
    const int trials = 50;
    for (int k = 0; k < trials; ++k) {
        Polynomial p = random_poly(rng, 3, 4, 4);
        WeightSignature sig(betas[pick_beta(rng)],
                            {{2, betas[pick_beta(rng)]}, {3, betas[pick_beta(rng)]}});
        auto [est, se] = mc_norm_estimate(p, sig, 100000, 1000 + k);
        if (std::abs(est - norm_sq(p, sig).get_d()) <= 3.0 * se + 1e-12) ++hits;
    }
    report(2, hits >= 48 && t.secs() < 60.0,
           "Monte-Carlo norms within 3 standard errors of exact (>=95% of 50)", t,
           std::to_string(hits) + "/50 within 3se");
}

// ---------------------------------------------------------------- criterion 3
void criterion_stability() {
    Timer t;
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<int> num(-40, 40), den(41, 60), big(13, 40), deg(1, 8);
    std::uniform_int_distribution<int> coin(0, 1), small(-20, 20);
    bool ok = true;
    std::string detail;
    for (int k = 0; k < 500 && ok; ++k) {
        // random products of factors with roots bounded away from |z| = 1:
        // rational roots and Gaussian-rational roots a+bi with |a+bi| != 1
        int d = deg(rng);
        Polynomial p(GaussianRational(1));
        long expect_inside = 0;
        std::set<std::string> used;
        for (int j = 0; j < d;) {
            GaussianRational root;
            if (coin(rng)) {
                mpq_class a = coin(rng) ? mpq_class(num(rng), den(rng))
                                        : mpq_class(big(rng) * (coin(rng) ? 1 : -1), 12);
                root = GaussianRational(a);
            } else {
                root = GaussianRational(mpq_class(small(rng), 41), mpq_class(small(rng), 41));
                if (coin(rng)) root = GaussianRational(2) * root + GaussianRational(1, 1);
            }
            mpq_class n2 = root.norm();
            if (n2 > mpq_class(9, 10) && n2 < mpq_class(11, 10)) continue;  // too close
            std::string key = n2.get_str() + "|" + root.re.get_str() + "|" + root.im.get_str();
            if (!used.insert(key).second) continue;
            p *= Polynomial::variable(1) - Polynomial(root);
            if (n2 < 1) ++expect_inside;
            ++j;
        }
        DiskCounts dc = count_roots_unit_disk(UniPoly::from_poly(p, 1));
        StabilityVerdict v = has_zero_in_open_polydisk(p);
        long numeric_inside = 0;
        for (auto& r : durand_kerner_roots(UniPoly::from_poly(p, 1)))
            if (std::abs(r) < 1.0 - 1e-9) ++numeric_inside;
        if (dc.inside != expect_inside || numeric_inside != expect_inside ||
            dc.inside + dc.on_circle + dc.outside != d ||
            (v.status == StabilityStatus::ZeroInOpen) != (expect_inside > 0) ||
            v.status == StabilityStatus::Undecided) {
            ok = false;
            detail = "univariate disagreement at trial " + std::to_string(k) + ": " + format_poly(p);
        }
    }

    const std::vector<std::pair<const char*, StabilityStatus>> bivariate = {
        {"z1*z2 - 1", StabilityStatus::ZeroFree},
        {"z1*z2 - 1/2", StabilityStatus::ZeroInOpen},
        {"z1 - z2", StabilityStatus::ZeroInOpen},
        {"(z1 - 2)*(z2 - 3)", StabilityStatus::ZeroFree},
        {"z1 + z2 - 4", StabilityStatus::ZeroFree},
        {"z1*z2 + 2", StabilityStatus::ZeroFree},
        {"z1^2*z2 - 1/8", StabilityStatus::ZeroInOpen},
        {"z1^2*z2 - 2", StabilityStatus::ZeroFree},
        {"(z1 - 1/2)*(z2 - 1/2)", StabilityStatus::ZeroInOpen},
        {"(z1*z2 - 1/2)*(z1 + 3)", StabilityStatus::ZeroInOpen},
        {"1 + (1/2)*z1 + (1/3)*z2", StabilityStatus::ZeroFree},
        {"z1*z2", StabilityStatus::ZeroInOpen},
        {"(z1*z2 - 1)^2", StabilityStatus::ZeroFree},
        {"(z1*z2 - 1)*(z1 - 1/3)", StabilityStatus::ZeroInOpen},
        {"z1^2 - z2^3", StabilityStatus::ZeroInOpen},
        {"3 - z1 - z2", StabilityStatus::ZeroFree},
        {"(z1 - 5)*(z1*z2 + 1)", StabilityStatus::ZeroFree},
        {"z1*z2^2 - 1/4", StabilityStatus::ZeroInOpen},
        {"z1*z2^2 + 5", StabilityStatus::ZeroFree},
        {"(z1 - 1/2)*(z1*z2 - 1)", StabilityStatus::ZeroInOpen}};
    for (auto& [src, want] : bivariate) {
        StabilityVerdict v = has_zero_in_open_polydisk(parse_poly(src));
        if (v.status != want) {
            ok = false;
            detail = std::string("bivariate case misdecided: ") + src + " via " + v.method;
        } else if (want == StabilityStatus::ZeroInOpen && !v.witness.in_open_polydisk()) {
            ok = false;
            detail = std::string("witness outside the open polydisk: ") + src;
        }
    }
    report(3, ok && t.secs() < 60.0,
           "stability oracle: 500 exact univariate counts + 20 bivariate cases", t, detail);
}

// ---------------------------------------------------------------- criterion 4
void criterion_hardy_totality() {
    Timer t;
    std::mt19937_64 rng(104);
    WeightSignature hardy{mpq_class(-1)};
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), kind(0, 2), nfac(1, 3);
    // factor pool whose irreducible parts never have roots on both sides of
    // the unit circle: linears, and z^k - c (all roots share modulus |c|^{1/k})
    std::vector<GaussianRational> cs = {
        GaussianRational(2),  GaussianRational(-2), GaussianRational(mpq_class(1, 2)),
        GaussianRational(3),  GaussianRational(mpq_class(-1, 3)),
        GaussianRational(mpq_class(0), mpq_class(2)), GaussianRational(mpq_class(0), mpq_class(1, 2))};
    std::uniform_int_distribution<size_t> pick_c(0, cs.size() - 1);
    bool ok = true;
    std::string detail;
    for (int k = 0; k < 100 && ok; ++k) {
        auto random_side = [&]() {
            Polynomial p(GaussianRational(mpq_class(den(rng)), mpq_class(num(rng))));
            if (p.is_zero()) p = Polynomial(1);
            int n = nfac(rng);
            long total = 0;
            for (int j = 0; j < n && total < 6; ++j) {
                int kd = kind(rng);
                Polynomial f;
                if (kd == 0) {
                    mpq_class a(num(rng), den(rng));
                    if (abs(a) == 1) a /= 2;
                    f = Polynomial::variable(1) - Polynomial(GaussianRational(a));
                } else {
                    long e = kd + 1;  // z^2 - c or z^3 - c
                    f = Polynomial::variable(1, e) - Polynomial(cs[pick_c(rng)]);
                }
                if (total + f.total_degree() > 6) break;
                p *= f;
                total += f.total_degree();
            }
            return p;
        };
        Polynomial p = random_side(), q = random_side();
        EquivalenceVerdict v = unitarily_equivalent_principal(p, q, hardy);
        if (v.status != VerdictStatus::Yes) {
            ok = false;
            detail = "not Yes for (" + format_poly(p) + ", " + format_poly(q) + ")";
            break;
        }
        std::string why;
        if (!certificate_check(v.p_tilde, v.q_tilde, v.G, hardy, 10, 500 + k, &why)) {
            ok = false;
            detail = "certificate rejected: " + why;
        }
    }
    report(4, ok && t.secs() < 60.0,
           "one Hardy variable: 100 random principal pairs all Yes with exact certificates", t,
           detail);
}

// ---------------------------------------------------------------- criterion 5
void criterion_bergman_rigidity() {
    Timer t;
    std::mt19937_64 rng(105);
    WeightSignature bergman{mpq_class(0)};
    std::vector<Polynomial> unstable = {parse_poly("z1 - 1/2"), parse_poly("z2"),
                                        parse_poly("z1*z2 - 1/2"), parse_poly("z2 - 1/4"),
                                        parse_poly("z1 + 1/3")};
    std::vector<Polynomial> stable = {parse_poly("z1 - 2"), parse_poly("z2 - 3"),
                                      parse_poly("z1*z2 - 1")};
    std::uniform_int_distribution<int> nfac(0, 2), coin(0, 1);
    std::uniform_int_distribution<size_t> pu(0, unstable.size() - 1), ps(0, stable.size() - 1);
    bool ok = true;
    std::string detail;
    for (int k = 0; k < 100 && ok; ++k) {
        auto random_side = [&](std::multiset<std::string>& star) {
            Polynomial p(GaussianRational(coin(rng) ? 2 : 1, 1));
            long total = 0;
            for (int j = 0, n = nfac(rng) + 1; j < n; ++j) {
                bool uns = coin(rng);
                const Polynomial& f = uns ? unstable[pu(rng)] : stable[ps(rng)];
                if (total + f.total_degree() > 5) break;
                p *= f;
                total += f.total_degree();
                if (uns) star.insert(format_poly(f));
            }
            return p;
        };
        std::multiset<std::string> sp, sq;
        Polynomial p = random_side(sp), q = random_side(sq);
        EquivalenceVerdict v = unitarily_equivalent_principal(p, q, bergman);
        bool want_yes = (sp == sq);
        if (v.status == VerdictStatus::Undecided ||
            (v.status == VerdictStatus::Yes) != want_yes) {
            ok = false;
            detail = "wrong verdict for (" + format_poly(p) + ", " + format_poly(q) + ")";
        }
    }
    EquivalenceVerdict no_case =
        unitarily_equivalent_principal(parse_poly("z1"), parse_poly("z1 - 1/2"), bergman);
    if (no_case.status != VerdictStatus::No) {
        ok = false;
        detail = "(z1, z1 - 1/2) not rejected";
    }
    report(5, ok && t.secs() < 60.0,
           "all-Bergman signature: Yes exactly for associate stable-free parts (100 pairs)", t,
           detail);
}

// ---------------------------------------------------------------- criterion 6
void criterion_mixed_signature() {
    Timer t;
    std::mt19937_64 rng(106);
    WeightSignature sig(mpq_class(-1), {{2, mpq_class(0)}});
    std::vector<Polynomial> hardy_factors = {parse_poly("z1"), parse_poly("z1 - 1/2"),
                                             parse_poly("z1 - 1/3"), parse_poly("z1 + 1/4")};
    std::vector<Polynomial> phis = {Polynomial(1), parse_poly("z2 - 3"), parse_poly("z2"),
                                    parse_poly("z1*z2 - 1/2")};
    std::vector<IdealGens> cofactors = {IdealGens{{Polynomial(1)}},
                                        IdealGens{{parse_poly("z1"), parse_poly("z2")}},
                                        IdealGens{{parse_poly("z2"), parse_poly("z1 - z2")}}};
    std::uniform_int_distribution<size_t> ph(0, hardy_factors.size() - 1), pp(0, phis.size() - 1),
        pk(0, cofactors.size() - 1);
    std::uniform_int_distribution<int> nfac(1, 2);
    bool ok = true;
    std::string detail;
    for (int k = 0; k < 20 && ok; ++k) {
        Polynomial r(1), s(1);
        for (int j = 0, n = nfac(rng); j < n; ++j) r *= hardy_factors[ph(rng)];
        for (int j = 0, n = nfac(rng); j < n; ++j) s *= hardy_factors[ph(rng)];
        Polynomial phi = phis[pp(rng)];
        IdealGens K = cofactors[pk(rng)];
        EquivalenceVerdict v = unitarily_equivalent({r * phi, K}, {s * phi, K}, sig);
        if (v.status != VerdictStatus::Yes || !v.has_certificate) {
            ok = false;
            detail = "expected Yes for r=" + format_poly(r) + " s=" + format_poly(s) +
                     " phi=" + format_poly(phi);
            break;
        }
        std::string why;
        // exact norm equality for 20 random ideal elements, per-C_alpha
        // equality, and 1000-point torus modulus agreement
        if (!certificate_check(v.p_tilde, v.q_tilde, v.G, sig, 20, 600 + k, &why)) {
            ok = false;
            detail = "certificate rejected: " + why;
        }
    }
    report(6, ok && t.secs() < 120.0,
           "mixed signature: 20 constructed equivalent pairs with verified certificates", t, detail);
}

// ---------------------------------------------------------------- criterion 7
void criterion_trivial_gcd_rigidity() {
    Timer t;
    std::mt19937_64 rng(107);
    std::uniform_int_distribution<int> cnum(1, 3), coin(0, 1), mode(0, 2);
    WeightSignature sig(mpq_class(-1), {{2, mpq_class(1, 2)}});
    bool ok = true;
    std::string detail;
    for (int k = 0; k < 20 && ok; ++k) {
        Polynomial g1 = parse_poly("z1^2") + Polynomial(GaussianRational(cnum(rng)));
        Polynomial g2 = parse_poly("z2") + Polynomial(GaussianRational(cnum(rng))) * parse_poly("z1");
        IdealGens K{{g1, g2}};
        IdealGens L;
        int m = mode(rng);
        if (m == 0) {
            L = K;  // identical generators
        } else if (m == 1) {
            // same ideal, different generators: unimodular combination
            Polynomial f = coin(rng) ? parse_poly("z1") : parse_poly("z2 - 1");
            L = IdealGens{{g1, g2 + f * g1}};
        } else {
            L = IdealGens{{g1, g2 + Polynomial(GaussianRational(5))}};  // perturbed
        }
        bool same = ideal_equal(K, L);
        EquivalenceVerdict v = unitarily_equivalent({Polynomial(1), K}, {Polynomial(1), L}, sig);
        if ((v.status == VerdictStatus::Yes) != same || v.status == VerdictStatus::Undecided) {
            ok = false;
            detail = "verdict disagrees with ideal equality at trial " + std::to_string(k);
        }
    }
    report(7, ok && t.secs() < 30.0,
           "trivial-gcd ideals: Yes exactly when the ideals are equal (20 pairs)", t, detail);
}

// ---------------------------------------------------------------- criterion 8
void criterion_orbit_exponent() {
    Timer t;
    std::mt19937_64 rng(108);
    std::uniform_int_distribution<long> ex(0, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    bool ok = true;
    std::string detail;
    for (int k = 0; k < 20 && ok; ++k) {
        std::map<int, mpq_class> overrides;
        for (int v = 1; v <= 3; ++v) overrides[v] = coin(rng) ? mpq_class(-1) : mpq_class(coin(rng));
        WeightSignature sig(mpq_class(-1), overrides);
        Exponent gamma;
        for (int v = 1; v <= 3; ++v) gamma.set(v, ex(rng));
        Exponent gt = monomial_orbit_exponent(gamma, sig);
        for (int v = 1; v <= 3; ++v) {
            long want = sig.is_hardy(v) ? 0 : gamma.get(v);
            if (gt.get(v) != want) {
                ok = false;
                detail = "orbit exponent wrong in variable " + std::to_string(v);
            }
        }
        Polynomial m = Polynomial::monomial(gamma, GaussianRational(1));
        Polynomial mt = Polynomial::monomial(gt, GaussianRational(1));
        if (unitarily_equivalent_principal(m, mt, sig).status != VerdictStatus::Yes) {
            ok = false;
            detail = "monomial orbit pair not equivalent at trial " + std::to_string(k);
        }
    }
    report(8, ok && t.secs() < 30.0,
           "orbit exponents zero the Hardy coordinates and give equivalent monomials (20 trials)",
           t, detail);
}

// ---------------------------------------------------------------- criterion 9
void criterion_reflection() {
    Timer t;
    std::mt19937_64 rng(109);
    bool ok = true;
    std::string detail;
    for (int k = 0; k < 1000 && ok; ++k) {
        Polynomial p = random_poly(rng, 3, 4, 4);
        // coefficient sums stay within [-12, 12], so the constant term cannot
        // cancel and p has no monomial factor
        p += Polynomial(GaussianRational(13));
        Reflection r = reflect(p);
        VariableSet vars = p.support_vars();
        if (vars.empty()) vars.insert(1);
        double ratio = -1.0;
        for (auto& pt : torus_sample(vars, 50, 2000 + k)) {
            double ap = std::abs(p.eval(pt));
            if (ap <= 1e-6) continue;
            double cur = std::abs(r.raw().eval(pt)) / ap;
            if (ratio < 0.0) {
                ratio = cur;
            } else if (std::abs(cur - ratio) > 1e-9 * std::max(1.0, ratio)) {
                ok = false;
                detail = "torus ratio drift at trial " + std::to_string(k);
            }
        }
        if (reflect(r.raw()).raw() != p) {
            ok = false;
            detail = "involution broke at trial " + std::to_string(k);
        }
    }
    report(9, ok && t.secs() < 30.0,
           "reflection: constant torus modulus ratio and exact involution (1000 trials)", t,
           detail);
}

// --------------------------------------------------------------- criterion 10
void criterion_parser() {
    Timer t;
    std::mt19937_64 rng(110);
    bool ok = true;
    std::string detail;
    for (int k = 0; k < 1000 && ok; ++k) {
        Polynomial p = random_poly(rng, 4, 6, 6, 6);
        if (parse_poly(format_poly(p)) != p) {
            ok = false;
            detail = "round trip failed: " + format_poly(p);
        }
    }
    report(10, ok && t.secs() < 5.0, "parser round trip on 1000 random polynomials", t, detail);
}

}  // namespace

int main() {
    criterion_weights();
    criterion_norms();
    criterion_stability();
    criterion_hardy_totality();
    criterion_bergman_rigidity();
    criterion_mixed_signature();
    criterion_trivial_gcd_rigidity();
    criterion_orbit_exponent();
    criterion_reflection();
    criterion_parser();
    if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
    else std::printf("all criteria passed\n");
    return g_failures == 0 ? 0 : 1;
}
