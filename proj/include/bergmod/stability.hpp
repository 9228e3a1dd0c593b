#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "bergmod/disk_count.hpp"
#include "bergmod/factor.hpp"
#include "bergmod/interval.hpp"
#include "bergmod/polynomial.hpp"
#include "bergmod/roots.hpp"

namespace bergmod {

enum class StabilityStatus { ZeroFree, ZeroInOpen, Undecided };

// Verdict on whether a polynomial vanishes somewhere in the open unit
// polydisk of its supporting variables.
//
// ZeroInOpen carries an approximate witness together with an exact
// certificate: fixing every variable but `witness_var` at the rational values
// in `line`, the univariate restriction has an exactly counted root in the
// open disk |z - center| < radius, and |center| + radius < 1 exactly.
// A line restriction that is identically zero certifies the witness directly.
struct StabilityVerdict {
    StabilityStatus status = StabilityStatus::Undecided;
    std::string method;

    // ZeroInOpen
    Point witness;
    double isolation_radius = 0.0;
    int witness_var = 0;
    std::map<int, GaussianRational> line;  // fixed rational coordinates
    GaussianRational center;
    mpq_class radius = 0;
    bool line_identically_zero = false;

    // Undecided
    double min_modulus_bound = 0.0;
};

inline std::vector<Point> torus_sample(const VariableSet& vars, long count, unsigned long seed) {
    if (count <= 0) throw std::invalid_argument("torus_sample: count must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.14159265358979323846);
    std::vector<Point> pts(count);
    for (long k = 0; k < count; ++k)
        for (int v : vars) {
            double t = ang(rng);
            pts[k].set(v, {std::cos(t), std::sin(t)});
        }
    return pts;
}

namespace detail {

// Rational approximation with denominator 2^bits, nudged to modulus < 1.
inline GaussianRational rationalize_in_disk(std::complex<double> z, int bits = 24) {
    mpz_class den = mpz_class(1) << bits;
    auto snap = [&](double x) {
        mpq_class q(mpz_class((long)std::llround(x * den.get_d())), den);
        q.canonicalize();
        return q;
    };
    GaussianRational g(snap(z.real()), snap(z.imag()));
    while (g.norm() >= 1) {
        g.re = g.re * mpq_class(99, 100);
        g.im = g.im * mpq_class(99, 100);
    }
    return g;
}

// Certify an open-disk root of f around the numeric location z0: produce an
// exact center and radius with |center| + radius < 1 and a positive exact
// root count in the open disk |z - center| < radius.
inline bool certify_disk_root(const UniPoly& f, std::complex<double> z0, GaussianRational& center,
                              mpq_class& radius) {
    GaussianRational c = rationalize_in_disk(z0, 30);
    for (int k = 3; k <= 40; ++k) {
        mpq_class rho(mpz_class(1), mpz_class(1) << k);
        // |c| + rho < 1  <=>  |c|^2 < (1 - rho)^2
        mpq_class rim = 1 - rho;
        if (!(c.norm() < rim * rim)) continue;
        try {
            if (count_roots_in_disk(f, c, rho) > 0) {
                center = c;
                radius = rho;
                return true;
            }
            return false;  // disk around z0 empty and shrinking will not help
        } catch (const std::exception&) {
            continue;  // degenerate configuration at this radius; shrink
        }
    }
    return false;
}

// Exact univariate decision; fills verdict fields on ZeroInOpen.
inline bool univariate_zero_in_open(const UniPoly& f, int var,
                                    const std::map<int, GaussianRational>& fixed,
                                    StabilityVerdict& out) {
    DiskCounts counts = count_roots_unit_disk(f);
    if (counts.inside == 0) return false;
    // Locate candidates numerically; z = 0 is always certifiable when present.
    std::vector<std::complex<long double>> roots = durand_kerner_roots(f);
    std::vector<std::complex<double>> inside;
    if (f.valuation() > 0) inside.push_back({0.0, 0.0});
    for (auto& r : roots)
        if (std::abs(r) < 0.9999) inside.push_back({(double)r.real(), (double)r.imag()});
    std::sort(inside.begin(), inside.end(),
              [](auto a, auto b) { return std::abs(a) < std::abs(b); });
    for (auto& z0 : inside) {
        GaussianRational c;
        mpq_class rho;
        if (!certify_disk_root(f, z0, c, rho)) continue;
        out.status = StabilityStatus::ZeroInOpen;
        out.method = "exact-univariate";
        out.witness_var = var;
        out.line = fixed;
        out.center = c;
        out.radius = rho;
        out.isolation_radius = rho.get_d();
        for (auto& [v, g] : fixed) out.witness.set(v, g.to_complex());
        out.witness.set(var, z0);
        return true;
    }
    // Counted roots exist but none could be isolated numerically; treat as
    // unresolved rather than claiming ZeroFree.
    throw SingularSchurCase{};
}

// Branch and bound over the product of disks of radius `scale`. Returns true
// when |w| is excluded from zero on every box meeting the closed polydisk;
// lower_bound receives inf over processed boxes of the certified minimum
// (zero when exclusion fails somewhere).
inline bool interval_exclude_zero(const Polynomial& w, const std::vector<int>& vars, double scale,
                                  long box_budget, double& lower_bound) {
    struct Node {
        std::map<int, ComplexBox> boxes;
    };
    std::vector<Node> stack;
    Node root;
    for (int v : vars) root.boxes[v] = ComplexBox{Interval(-scale, scale), Interval(-scale, scale)};
    stack.push_back(std::move(root));
    lower_bound = std::numeric_limits<double>::infinity();
    bool clean = true;
    long processed = 0;
    double s2 = scale * scale;

    while (!stack.empty()) {
        if (++processed > box_budget) {
            lower_bound = 0.0;
            return false;
        }
        Node nd = std::move(stack.back());
        stack.pop_back();

        // Prune boxes that miss every point with all |z_v| <= scale.
        bool misses = false;
        for (auto& [v, b] : nd.boxes) {
            auto dist0 = [](const Interval& I) {
                if (I.contains_zero()) return 0.0;
                return std::min(std::abs(I.lo), std::abs(I.hi));
            };
            double dre = dist0(b.re), dim = dist0(b.im);
            if (dre * dre + dim * dim > s2) {
                misses = true;
                break;
            }
        }
        if (misses) continue;

        Interval m = eval_box(w, nd.boxes).abs_sq();
        if (m.lo > 0.0) {
            lower_bound = std::min(lower_bound, std::sqrt(m.lo));
            continue;
        }

        // Split the widest interval dimension.
        int best_v = 0;
        bool split_re = true;
        double best_w = -1.0;
        for (auto& [v, b] : nd.boxes) {
            if (b.re.width() > best_w) best_w = b.re.width(), best_v = v, split_re = true;
            if (b.im.width() > best_w) best_w = b.im.width(), best_v = v, split_re = false;
        }
        if (best_w < 1e-9) {
            // Resolution floor reached without exclusion.
            clean = false;
            lower_bound = 0.0;
            continue;
        }
        Node a = nd, b = nd;
        Interval& ia = split_re ? a.boxes[best_v].re : a.boxes[best_v].im;
        Interval& ib = split_re ? b.boxes[best_v].re : b.boxes[best_v].im;
        double mid = ia.mid();
        ia = Interval(ia.lo, mid);
        ib = Interval(mid, ib.hi);
        stack.push_back(std::move(a));
        stack.push_back(std::move(b));
    }
    if (!clean) lower_bound = 0.0;
    return clean;
}

}  // namespace detail

inline StabilityVerdict has_zero_in_open_polydisk(const Polynomial& w, double eps = 1e-6,
                                                  unsigned long seed = 0) {
    if (w.is_zero()) throw ZeroPolynomialError();
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    StabilityVerdict out;
    VariableSet vars = w.support_vars();

    if (vars.empty()) {
        out.status = StabilityStatus::ZeroFree;
        out.method = "nonzero-constant";
        return out;
    }

    // w(0) = 0 puts a zero at the origin of the open polydisk.
    if (w.constant_term().is_zero()) {
        out.status = StabilityStatus::ZeroInOpen;
        out.method = "vanishes-at-origin";
        out.line_identically_zero = (w.term_count() == 0);
        out.witness_var = *vars.begin();
        for (int v : vars)
            if (v != out.witness_var) out.line[v] = GaussianRational(0);
        // The restriction to the witness axis has an exact root at 0 or is
        // identically zero; either way the origin is certified directly.
        for (int v : vars) out.witness.set(v, {0.0, 0.0});
        out.center = GaussianRational(0);
        out.radius = mpq_class(1, 1024);
        out.isolation_radius = out.radius.get_d();
        return out;
    }

    if (vars.size() == 1) {
        int var = *vars.begin();
        UniPoly f = UniPoly::from_poly(w, var);
        if (detail::univariate_zero_in_open(f, var, {}, out)) return out;
        out.status = StabilityStatus::ZeroFree;
        out.method = "exact-univariate";
        return out;
    }

    // (a) constant-term dominance: |c_0| >= sum of the other |c_alpha| forces
    // |w| > 0 strictly on the open polydisk. Compared through exact rational
    // bounds |c| >= max(|Re c|, |Im c|) and |c| <= |Re c| + |Im c|.
    {
        GaussianRational c0 = w.constant_term();
        mpq_class lo0 = std::max(abs(c0.re), abs(c0.im));
        mpq_class rest = 0;
        for (auto& [e, c] : w.terms())
            if (!e.is_zero()) rest += abs(c.re) + abs(c.im);
        if (lo0 >= rest) {
            out.status = StabilityStatus::ZeroFree;
            out.method = "constant-dominance";
            return out;
        }
    }

    // Multiplicative reduction: a product vanishes in the open polydisk iff
    // some factor does, and the factors are simpler objects. Recursion is
    // guarded: a single factor equal to w (up to the unit) falls through.
    {
        FactoredPoly fw = factor(w);
        Polynomial monic_w = w;
        monic_w.make_monic();
        bool proper = fw.factors.size() > 1 ||
                      (fw.factors.size() == 1 && (fw.factors[0].multiplicity > 1 ||
                                                  fw.factors[0].poly != monic_w));
        if (proper) {
            bool all_free = true;
            for (auto& f : fw.factors) {
                StabilityVerdict sub = has_zero_in_open_polydisk(f.poly, eps, seed);
                if (sub.status == StabilityStatus::ZeroInOpen) {
                    // A zero of the factor is a zero of w; extend the witness
                    // by 0 on the variables the factor does not involve.
                    for (int v : vars)
                        if (sub.witness.coords.find(v) == sub.witness.coords.end()) {
                            sub.witness.set(v, {0.0, 0.0});
                            if (v != sub.witness_var) sub.line[v] = GaussianRational(0);
                        }
                    sub.method = "factor: " + sub.method;
                    return sub;
                }
                if (sub.status != StabilityStatus::ZeroFree) all_free = false;
            }
            if (all_free) {
                out.status = StabilityStatus::ZeroFree;
                out.method = "factor-product";
                return out;
            }
        }
    }

    std::vector<int> var_list(vars.begin(), vars.end());

    // (b) ZeroInOpen search: random points, then exact line restrictions
    // through the most promising ones.
    {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.14159265358979323846);
        std::uniform_real_distribution<double> rad(0.0, 1.0);
        std::vector<Point> pts;
        // Deterministic seeds points near the origin and mid-radius first.
        for (double r : {0.0, 0.5, 0.9}) {
            Point p;
            for (int v : var_list) p.set(v, {r, 0.0});
            pts.push_back(p);
        }
        for (int k = 0; k < 400; ++k) {
            Point p;
            for (int v : var_list) {
                double t = ang(rng), r = 0.999 * std::sqrt(rad(rng));
                p.set(v, {r * std::cos(t), r * std::sin(t)});
            }
            pts.push_back(p);
        }
        std::stable_sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
            return std::abs(w.eval(a)) < std::abs(w.eval(b));
        });
        size_t tries = std::min<size_t>(pts.size(), 40);
        for (size_t k = 0; k < tries; ++k) {
            for (int free_v : var_list) {
                std::map<int, GaussianRational> fixed;
                Polynomial restricted = w;
                for (int v : var_list) {
                    if (v == free_v) continue;
                    GaussianRational g = detail::rationalize_in_disk(pts[k].get(v));
                    fixed[v] = g;
                    restricted = restricted.substitute(v, Polynomial(g));
                }
                if (restricted.is_zero()) {
                    out.status = StabilityStatus::ZeroInOpen;
                    out.method = "zero-line";
                    out.line_identically_zero = true;
                    out.witness_var = free_v;
                    out.line = fixed;
                    for (auto& [v, g] : fixed) out.witness.set(v, g.to_complex());
                    out.witness.set(free_v, {0.0, 0.0});
                    return out;
                }
                if (restricted.is_constant()) continue;
                UniPoly f = UniPoly::from_poly(restricted, free_v);
                // Cheap numeric prefilter before the exact count.
                bool maybe = f.valuation() > 0;
                if (!maybe)
                    for (auto& r : durand_kerner_roots(f))
                        if (std::abs(r) < 0.995) {
                            maybe = true;
                            break;
                        }
                if (!maybe) continue;
                try {
                    if (detail::univariate_zero_in_open(f, free_v, fixed, out)) {
                        out.method = "line-restriction";
                        return out;
                    }
                } catch (const std::exception&) {
                    continue;
                }
            }
        }
    }

    // (c) ZeroFree by interval exclusion over the full closed polydisk.
    double bound_full = 0.0;
    if (detail::interval_exclude_zero(w, var_list, 1.0, 1000000, bound_full)) {
        out.status = StabilityStatus::ZeroFree;
        out.method = "interval-exclusion";
        return out;
    }

    // (d) Undecided; report the certified lower bound over the shrunken disk.
    double bound = 0.0;
    detail::interval_exclude_zero(w, var_list, 1.0 - eps, 1000000, bound);
    out.status = StabilityStatus::Undecided;
    out.method = "budget-exhausted";
    out.min_modulus_bound = std::isfinite(bound) ? bound : 0.0;
    return out;
}

}  // namespace bergmod
