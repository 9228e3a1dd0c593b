#pragma once

#include <algorithm>
#include <vector>

#include "bergmod/gcd.hpp"
#include "bergmod/parser.hpp"
#include "bergmod/polynomial.hpp"

namespace bergmod {

// Finite generating set of an ideal of the polynomial ring. Zero generators
// are dropped on construction.
struct IdealGens {
    std::vector<Polynomial> generators;

    IdealGens() = default;
    explicit IdealGens(std::vector<Polynomial> gens) {
        for (auto& g : gens)
            if (!g.is_zero()) generators.push_back(std::move(g));
    }

    bool is_zero_ideal() const { return generators.empty(); }

    VariableSet variable_universe() const {
        VariableSet s;
        for (auto& g : generators) s = set_union(s, g.support_vars());
        return s;
    }
};

struct InvalidBeurlingFormError : std::domain_error {
    InvalidBeurlingFormError(const std::string& m) : std::domain_error(m) {}
};

// Presentation of an ideal as p * K with gcd(K) constant.
struct BeurlingForm {
    Polynomial gcd_part;
    IdealGens cofactor;
};

namespace detail {

// Reduce f modulo G: repeatedly cancel the leading term by any g whose
// leading monomial divides it; put irreducible leading terms into the tail.
inline Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& G) {
    Polynomial tail;
    while (!f.is_zero()) {
        bool reduced = false;
        const Exponent& le = f.leading_exponent();
        for (auto& g : G) {
            if (g.is_zero()) continue;
            if (g.leading_exponent().divides(le)) {
                GaussianRational c = f.leading_coeff() / g.leading_coeff();
                f -= c * Polynomial::monomial(le - g.leading_exponent(), GaussianRational(1)) * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Polynomial lt = Polynomial::monomial(le, f.leading_coeff());
            tail += lt;
            f -= lt;
        }
    }
    return tail;
}

inline Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
    Exponent l = Exponent::lcm(f.leading_exponent(), g.leading_exponent());
    Polynomial tf = Polynomial::monomial(l - f.leading_exponent(), inv(f.leading_coeff()));
    Polynomial tg = Polynomial::monomial(l - g.leading_exponent(), inv(g.leading_coeff()));
    return tf * f - tg * g;
}

}  // namespace detail

// Reduced Groebner basis under graded-lex (Buchberger with the coprime-
// leading-monomial criterion). Output is monic, inter-reduced, and sorted,
// hence canonical for the ideal.
inline IdealGens groebner(const IdealGens& gens) {
    std::vector<Polynomial> G;
    for (auto& g : gens.generators)
        if (!g.is_zero()) G.push_back(g);
    if (G.empty()) return IdealGens{};

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const Exponent &ei = G[i].leading_exponent(), &ej = G[j].leading_exponent();
        if (Exponent::gcd(ei, ej).is_zero()) continue;  // Buchberger's first criterion
        Polynomial r = detail::normal_form(detail::s_poly(G[i], G[j]), G);
        if (!r.is_zero()) {
            for (size_t k = 0; k < G.size(); ++k) pairs.emplace_back(k, G.size());
            G.push_back(std::move(r));
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            if (G[j].leading_exponent().divides(G[i].leading_exponent()) &&
                !(G[j].leading_exponent() == G[i].leading_exponent() && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // Inter-reduce tails and normalize monic.
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = detail::normal_form(minimal[i], others);
        if (!r.is_zero()) {
            r.make_monic();
            reduced.push_back(std::move(r));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return grlex_less(a.leading_exponent(), b.leading_exponent());
    });
    return IdealGens{std::move(reduced)};
}

inline bool ideal_member(const Polynomial& f, const IdealGens& a) {
    if (f.is_zero()) return true;
    IdealGens G = groebner(a);
    if (G.is_zero_ideal()) return false;
    return detail::normal_form(f, G.generators).is_zero();
}

// Equality of the generated ideals, decided inside the finite polynomial ring
// on the union of occurring variables (a faithful extension of P_infinity).
inline bool ideal_equal(const IdealGens& a, const IdealGens& b) {
    IdealGens ga = groebner(a), gb = groebner(b);
    return ga.generators == gb.generators;
}

// Beurling form I = p * K: p = gcd of the generators, K their exact quotients.
inline BeurlingForm beurling_form(const IdealGens& gens) {
    if (gens.is_zero_ideal()) throw AllZeroError();
    Polynomial p = gcd_many(gens.generators);
    std::vector<Polynomial> cof;
    for (auto& g : gens.generators) cof.push_back(g.div_exact(p));
    BeurlingForm bf{std::move(p), IdealGens{std::move(cof)}};
    if (!gcd_many(bf.cofactor.generators).is_constant())
        throw InvalidBeurlingFormError("cofactor gcd is not constant");
    return bf;
}

// Validates an externally supplied Beurling form.
inline void validate_beurling_form(const BeurlingForm& bf) {
    if (bf.gcd_part.is_zero()) throw InvalidBeurlingFormError("gcd part is zero");
    if (bf.cofactor.is_zero_ideal()) throw InvalidBeurlingFormError("cofactor ideal is zero");
    if (!gcd_many(bf.cofactor.generators).is_constant())
        throw InvalidBeurlingFormError("cofactor generators have a nontrivial common divisor");
}

}  // namespace bergmod
