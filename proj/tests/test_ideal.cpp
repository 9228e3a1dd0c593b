#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "bergmod/groebner.hpp"
#include "bergmod/parser.hpp"

using namespace bergmod;

namespace {

IdealGens ideal(std::initializer_list<const char*> gens) {
    std::vector<Polynomial> ps;
    for (auto* g : gens) ps.push_back(parse_poly(g));
    return IdealGens{std::move(ps)};
}

}  // namespace

TEST_CASE("gcd_many examples") {
    Polynomial g = gcd_many({parse_poly("(z1-1/2)*z2"), parse_poly("(z1-1/2)*z1")});
    CHECK(g == parse_poly("z1 - 1/2"));
    // cross-check: the gcd divides both inputs exactly
    CHECK_NOTHROW(parse_poly("(z1-1/2)*z2").div_exact(g));
    CHECK_NOTHROW(parse_poly("(z1-1/2)*z1").div_exact(g));

    CHECK(gcd_many({parse_poly("z1"), parse_poly("z2")}) == Polynomial(1));
    // single element: normalized to graded-lex leading coefficient 1
    CHECK(gcd_many({parse_poly("2*z1 + 1")}) == parse_poly("z1 + 1/2"));
    CHECK_THROWS_AS(gcd_many({Polynomial(), Polynomial()}), AllZeroError);
}

TEST_CASE("gcd divides every input") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pick(0, 4);
    std::vector<Polynomial> pool = {parse_poly("z1 - 1/2"), parse_poly("z2 + 1"),
                                    parse_poly("z1*z2 - 1"), parse_poly("z1 + z2"),
                                    parse_poly("z3 - 2")};
    for (int t = 0; t < 25; ++t) {
        Polynomial common = pool[pick(rng)] * pool[pick(rng)];
        std::vector<Polynomial> inputs = {common * pool[pick(rng)], common * pool[pick(rng)],
                                          common * pool[pick(rng)]};
        Polynomial g = gcd_many(inputs);
        for (auto& p : inputs) CHECK_NOTHROW(p.div_exact(g));
        CHECK_NOTHROW(common.div_exact(gcd_many({common})));
        // the constructed common part divides the gcd
        CHECK_NOTHROW(g.div_exact(gcd_many({common})));
    }
}

TEST_CASE("beurling_form examples") {
    BeurlingForm bf = beurling_form(ideal({"z1*z2", "z1*z3"}));
    CHECK(bf.gcd_part == parse_poly("z1"));
    REQUIRE(bf.cofactor.generators.size() == 2);
    CHECK(bf.cofactor.generators[0] == parse_poly("z2"));
    CHECK(bf.cofactor.generators[1] == parse_poly("z3"));

    BeurlingForm principal = beurling_form(ideal({"z1"}));
    CHECK(principal.gcd_part == parse_poly("z1"));
    REQUIRE(principal.cofactor.generators.size() == 1);
    CHECK(principal.cofactor.generators[0].is_constant());

    BeurlingForm bf2 = beurling_form(ideal({"z1^2", "z1*z2"}));
    CHECK(bf2.gcd_part == parse_poly("z1"));
    CHECK(gcd_many(bf2.cofactor.generators).is_constant());
    // reconstruction: gcd_part * cofactor_i = generator_i
    CHECK(bf2.gcd_part * bf2.cofactor.generators[0] == parse_poly("z1^2"));
    CHECK(bf2.gcd_part * bf2.cofactor.generators[1] == parse_poly("z1*z2"));
}

TEST_CASE("groebner examples") {
    IdealGens g1 = groebner(ideal({"z1+z2", "z1-z2"}));
    REQUIRE(g1.generators.size() == 2);
    CHECK(g1.generators[0] == parse_poly("z2"));
    CHECK(g1.generators[1] == parse_poly("z1"));

    IdealGens g2 = groebner(ideal({"z1"}));
    REQUIRE(g2.generators.size() == 1);
    CHECK(g2.generators[0] == parse_poly("z1"));

    IdealGens g3 = groebner(ideal({"z1^2", "z1*z2", "z2^2"}));
    REQUIRE(g3.generators.size() == 3);
    CHECK(g3.generators[0] == parse_poly("z2^2"));
    CHECK(g3.generators[1] == parse_poly("z1*z2"));
    CHECK(g3.generators[2] == parse_poly("z1^2"));
}

TEST_CASE("groebner is idempotent") {
    for (auto gens : {ideal({"z1+z2", "z1-z2"}), ideal({"z1^2 - z2", "z1*z2 - 1"}),
                      ideal({"z1*z2 + z3", "z2^2 - 1", "z1 + z2 + z3"})}) {
        IdealGens g = groebner(gens);
        CHECK(groebner(g).generators == g.generators);
    }
}

TEST_CASE("ideal_equal and ideal_member examples") {
    CHECK(ideal_equal(ideal({"z1", "z2"}), ideal({"z1+z2", "z1-z2"})));
    CHECK_FALSE(ideal_member(parse_poly("z1*z2"), ideal({"z1^2", "z2^2"})));
    CHECK(ideal_member(parse_poly("z1^2*z2"), ideal({"z1^2", "z2^2"})));
    IdealGens a = ideal({"z1^2 - z2", "z1*z2"});
    CHECK(ideal_equal(a, a));
    CHECK_FALSE(ideal_equal(ideal({"z1"}), ideal({"z1^2"})));
}

TEST_CASE("ideal_equal on regenerated generating sets") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> num(-2, 2);
    for (int t = 0; t < 15; ++t) {
        Polynomial g1 = parse_poly("z1^2 - z2") + Polynomial(GaussianRational(num(rng)));
        Polynomial g2 = parse_poly("z1*z2") + Polynomial(GaussianRational(num(rng))) * parse_poly("z1");
        IdealGens a{{g1, g2}};
        // unimodular change of generators: (g1, g2 + f*g1)
        Polynomial f = parse_poly("z2") * Polynomial(GaussianRational(num(rng))) +
                       Polynomial(GaussianRational(num(rng)));
        IdealGens b{{g1, g2 + f * g1}};
        CHECK(ideal_equal(a, b));
    }
}

TEST_CASE("ideal_equal is stable under fresh unused variables") {
    IdealGens a = ideal({"z1^2 - z2", "z1*z2 - 1"});
    IdealGens b = ideal({"z1^2 - z2", "z1*z2 - 1", "0"});
    // adjoin a generator mentioning a fresh variable times a member: same ideal
    IdealGens c{{parse_poly("z1^2 - z2"), parse_poly("z1*z2 - 1"),
                 parse_poly("z7") * parse_poly("z1^2 - z2")}};
    CHECK(ideal_equal(a, b));
    CHECK(ideal_equal(a, c));
    CHECK_FALSE(ideal_equal(a, ideal({"z1^2 - z2", "z1*z2 - 1", "z7"})));
}

TEST_CASE("beurling_form validation") {
    CHECK_THROWS_AS(beurling_form(IdealGens{{Polynomial()}}), AllZeroError);
    BeurlingForm bad{parse_poly("z1"), IdealGens{{parse_poly("z2"), parse_poly("z2*z3")}}};
    CHECK_THROWS_AS(validate_beurling_form(bad), InvalidBeurlingFormError);
    BeurlingForm good{parse_poly("z1"), IdealGens{{parse_poly("z2"), parse_poly("z3")}}};
    CHECK_NOTHROW(validate_beurling_form(good));
}
