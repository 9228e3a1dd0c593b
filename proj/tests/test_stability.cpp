#include <catch2/catch_amalgamated.hpp>
#include <complex>
#include <random>
#include <set>

#include "bergmod/parser.hpp"
#include "bergmod/roots.hpp"
#include "bergmod/stability.hpp"

using namespace bergmod;

namespace {

// Independent univariate oracle: count numerically isolated roots with
// |root| < 1 - 1e-9. Only used on inputs whose roots are constructed to be
// bounded away from the unit circle.
int numeric_inside_count(const Polynomial& p, int var) {
    UniPoly u = UniPoly::from_poly(p, var);
    int n = 0;
    for (auto& r : durand_kerner_roots(u))
        if (std::abs(r) < 1.0 - 1e-9) ++n;
    return n;
}

}  // namespace

TEST_CASE("univariate examples") {
    StabilityVerdict v1 = has_zero_in_open_polydisk(parse_poly("z1 - 2"));
    CHECK(v1.status == StabilityStatus::ZeroFree);

    StabilityVerdict v2 = has_zero_in_open_polydisk(parse_poly("z1 - 1/2"));
    REQUIRE(v2.status == StabilityStatus::ZeroInOpen);
    CHECK(std::abs(v2.witness.get(1) - std::complex<double>(0.5, 0.0)) < 1e-6);
    CHECK(v2.witness.in_open_polydisk());

    // roots exactly on |z| = 1 do not count
    CHECK(has_zero_in_open_polydisk(parse_poly("z1 - 1")).status == StabilityStatus::ZeroFree);
    CHECK(has_zero_in_open_polydisk(parse_poly("z1^2 + 1")).status == StabilityStatus::ZeroFree);

    CHECK(has_zero_in_open_polydisk(parse_poly("5")).status == StabilityStatus::ZeroFree);
    CHECK_THROWS_AS(has_zero_in_open_polydisk(Polynomial()), ZeroPolynomialError);
}

TEST_CASE("bivariate examples") {
    CHECK(has_zero_in_open_polydisk(parse_poly("z1*z2 - 1")).status == StabilityStatus::ZeroFree);

    StabilityVerdict v = has_zero_in_open_polydisk(parse_poly("z1*z2 - 1/2"));
    REQUIRE(v.status == StabilityStatus::ZeroInOpen);
    CHECK(v.witness.in_open_polydisk());
    auto prod = v.witness.get(1) * v.witness.get(2);
    CHECK(std::abs(prod - std::complex<double>(0.5, 0.0)) < 1e-6);
}

TEST_CASE("univariate agreement with an independent root count") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> num(-40, 40), den(41, 60), big(13, 40), deg(1, 8);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int t = 0; t < 120; ++t) {
        // product of linear factors with rational roots, each bounded away
        // from the unit circle (inside: |a| <= 40/41, outside: |a| >= 13/12)
        int d = deg(rng);
        Polynomial p(GaussianRational(1));
        int expect_inside = 0;
        std::set<std::string> used;  // distinct roots keep the numeric oracle sharp
        for (int k = 0; k < d;) {
            mpq_class a = coin(rng) ? mpq_class(num(rng), den(rng))
                                    : mpq_class(big(rng) * (coin(rng) ? 1 : -1), 12);
            a.canonicalize();
            if (!used.insert(a.get_str()).second) continue;
            p *= Polynomial::variable(1) - Polynomial(GaussianRational(a));
            if (abs(a) < 1) ++expect_inside;
            ++k;
        }
        StabilityVerdict v = has_zero_in_open_polydisk(p);
        CHECK((v.status == StabilityStatus::ZeroInOpen) == (expect_inside > 0));
        CHECK(numeric_inside_count(p, 1) == expect_inside);
        DiskCounts dc = count_roots_unit_disk(UniPoly::from_poly(p, 1));
        CHECK(dc.inside == expect_inside);
        CHECK(dc.inside + dc.outside + dc.on_circle == d);
    }
}

TEST_CASE("multiplicativity of verdicts") {
    std::vector<Polynomial> stable = {parse_poly("z1 - 2"), parse_poly("z1*z2 - 1"),
                                      parse_poly("z2 + 5/4")};
    std::vector<Polynomial> unstable = {parse_poly("z1 - 1/2"), parse_poly("z1*z2 - 1/2"),
                                        parse_poly("z2")};
    for (auto& a : stable)
        for (auto& b : stable)
            CHECK(has_zero_in_open_polydisk(a * b).status == StabilityStatus::ZeroFree);
    for (auto& a : unstable)
        for (auto& b : stable)
            CHECK(has_zero_in_open_polydisk(a * b).status == StabilityStatus::ZeroInOpen);
    for (auto& a : unstable)
        for (auto& b : unstable)
            CHECK(has_zero_in_open_polydisk(a * b).status == StabilityStatus::ZeroInOpen);
}

TEST_CASE("dilation consistency for stable polynomials") {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    for (auto* src : {"z1 - 2", "z1*z2 - 1", "2 - (1/2)*z1 - (1/2)*z2"}) {
        Polynomial w = parse_poly(src);
        REQUIRE(has_zero_in_open_polydisk(w).status == StabilityStatus::ZeroFree);
        double min_mod = 1e300;
        for (int k = 0; k < 2000; ++k) {
            Point pt;
            for (int v : w.support_vars()) {
                double th = angle(rng);
                pt.set(v, {0.5 * std::cos(th), 0.5 * std::sin(th)});
            }
            min_mod = std::min(min_mod, std::abs(w.eval(pt)));
        }
        CHECK(min_mod > 0.0);
    }
}

TEST_CASE("witness soundness") {
    for (auto* src : {"z1 - 1/2", "z1*z2 - 1/2", "z1^2*z2 - 1/8", "(z1 - 1/2)*(z2 - 2)"}) {
        Polynomial w = parse_poly(src);
        StabilityVerdict v = has_zero_in_open_polydisk(w);
        REQUIRE(v.status == StabilityStatus::ZeroInOpen);
        CHECK(v.witness.in_open_polydisk());
        CHECK(v.isolation_radius > 0.0);
        double bound = (double)w.total_degree() * 10.0 * v.isolation_radius + 1e-9;
        CHECK(std::abs(w.eval(v.witness)) <= std::max(bound, 1e-6));
    }
}

TEST_CASE("torus_sample examples") {
    auto pts = torus_sample({1}, 1, 0);
    REQUIRE(pts.size() == 1);
    CHECK(std::abs(std::abs(pts[0].get(1)) - 1.0) < 1e-12);

    auto a = torus_sample({1, 3}, 50, 7);
    auto b = torus_sample({1, 3}, 50, 7);
    REQUIRE(a.size() == 50);
    for (size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].get(1) == b[k].get(1));
        CHECK(a[k].get(3) == b[k].get(3));
        CHECK(std::abs(std::abs(a[k].get(1)) - 1.0) < 1e-12);
        CHECK(std::abs(std::abs(a[k].get(3)) - 1.0) < 1e-12);
    }

    // empirical mean of a uniform-angle unit sample is near 0
    auto big = torus_sample({1}, 100000, 3);
    std::complex<double> mean = 0.0;
    for (auto& p : big) mean += p.get(1);
    mean /= (double)big.size();
    CHECK(std::abs(mean) < 3.0 / std::sqrt(100000.0) * 3.0);
}
