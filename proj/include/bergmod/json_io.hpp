#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "bergmod/equivalence.hpp"
#include "bergmod/factor.hpp"
#include "bergmod/parser.hpp"
#include "bergmod/weights.hpp"

namespace bergmod {

using nlohmann::json;

// {"default_beta": "-1", "overrides": {"2": "0"}}
inline WeightSignature signature_from_json(const json& j) {
    mpq_class def = -1;
    std::map<int, mpq_class> ov;
    if (j.contains("default_beta")) def = rational_from_string(j.at("default_beta").get<std::string>());
    if (j.contains("overrides"))
        for (auto& [k, v] : j.at("overrides").items()) {
            int idx = std::stoi(k);
            if (idx <= 0) throw std::invalid_argument("signature override index must be positive");
            ov[idx] = rational_from_string(v.get<std::string>());
        }
    return WeightSignature(def, std::move(ov));
}

inline json signature_to_json(const WeightSignature& sig) {
    json j;
    j["default_beta"] = to_string(sig.default_beta);
    json ov = json::object();
    for (auto& [v, b] : sig.overrides) ov[std::to_string(v)] = to_string(b);
    j["overrides"] = ov;
    return j;
}

inline std::string coeff_to_string(const GaussianRational& c) {
    return format_poly(Polynomial(c));
}

// "{p1, p2, ...}" — commas never occur inside the polynomial grammar.
inline IdealGens parse_ideal(const std::string& s) {
    size_t a = s.find('{'), b = s.rfind('}');
    if (a == std::string::npos || b == std::string::npos || b < a)
        throw std::invalid_argument("ideal must be written as {p1, p2, ...}");
    std::string body = s.substr(a + 1, b - a - 1);
    std::vector<Polynomial> gens;
    size_t start = 0;
    while (start <= body.size()) {
        size_t comma = body.find(',', start);
        std::string piece =
            comma == std::string::npos ? body.substr(start) : body.substr(start, comma - start);
        bool blank = piece.find_first_not_of(" \t\r\n") == std::string::npos;
        if (!blank) gens.push_back(parse_poly(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (gens.empty()) throw std::invalid_argument("ideal needs at least one generator");
    return IdealGens{std::move(gens)};
}

inline json ideal_to_json(const IdealGens& g) {
    json a = json::array();
    for (auto& p : g.generators) a.push_back(format_poly(p));
    return a;
}

// {"1": [0.5, 0.0], "2": [-0.1, 0.2]}
inline Point point_from_json(const json& j) {
    Point p;
    for (auto& [k, v] : j.items()) {
        int idx = std::stoi(k);
        if (idx <= 0) throw std::invalid_argument("point variable index must be positive");
        p.set(idx, {v.at(0).get<double>(), v.at(1).get<double>()});
    }
    return p;
}

inline json point_to_json(const Point& p) {
    json j = json::object();
    for (auto& [v, z] : p.coords) j[std::to_string(v)] = {z.real(), z.imag()};
    return j;
}

// "2,3" -> alpha_1 = 2, alpha_2 = 3;  "z1^2*z2^3" also accepted.
inline Exponent exponent_from_string(const std::string& s) {
    Exponent e;
    if (s.find('z') != std::string::npos) {
        Polynomial p = parse_poly(s);
        if (p.term_count() != 1 || !p.leading_coeff().is_one())
            throw std::invalid_argument("exponent monomial must have coefficient 1");
        return p.leading_exponent();
    }
    int var = 1;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string piece =
            comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
        long v = std::stol(piece);
        if (v < 0) throw std::invalid_argument("exponent entries must be nonnegative");
        e.set(var++, v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return e;
}

inline json exponent_to_json(const Exponent& e) {
    json j = json::object();
    for (auto& [v, a] : e.entries()) j[std::to_string(v)] = a;
    return j;
}

inline json factored_to_json(const FactoredPoly& f) {
    json j;
    j["unit"] = coeff_to_string(f.unit);
    json fs = json::array();
    for (auto& fa : f.factors)
        fs.push_back({{"poly", format_poly(fa.poly)},
                      {"mult", fa.multiplicity},
                      {"certified_irreducible", fa.certified_irreducible}});
    j["factors"] = fs;
    j["warnings"] = f.warnings;
    return j;
}

// CLI factored-input format: JSON list of {"poly": "...", "mult": n}.
inline std::vector<std::pair<Polynomial, long>> trusted_factors_from_json(const json& j) {
    std::vector<std::pair<Polynomial, long>> out;
    for (auto& entry : j)
        out.emplace_back(parse_poly(entry.at("poly").get<std::string>()),
                         entry.at("mult").get<long>());
    return out;
}

inline const char* status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Yes: return "Yes";
        case VerdictStatus::No: return "No";
        default: return "Undecided";
    }
}

inline json verdict_to_json(const EquivalenceVerdict& v) {
    json j;
    j["status"] = status_name(v.status);
    if (v.has_certificate) {
        json cert;
        if (!v.p_tilde.is_zero()) {
            cert["p_tilde"] = format_poly(v.p_tilde);
            cert["q_tilde"] = format_poly(v.q_tilde);
            cert["G"] = ideal_to_json(v.G);
        }
        cert["u"] = format_poly(v.u);
        cert["v"] = format_poly(v.v);
        j["certificate"] = cert;
    }
    if (!v.obstruction.empty()) j["obstruction"] = v.obstruction;
    if (!v.reason.empty()) j["reason"] = v.reason;
    j["assumptions"] = v.assumptions;
    return j;
}

inline json stability_to_json(const StabilityVerdict& v) {
    json j;
    switch (v.status) {
        case StabilityStatus::ZeroFree:
            j["status"] = "ZeroFree";
            break;
        case StabilityStatus::ZeroInOpen:
            j["status"] = "ZeroInOpen";
            j["witness"] = point_to_json(v.witness);
            j["isolation_radius"] = v.isolation_radius;
            break;
        case StabilityStatus::Undecided:
            j["status"] = "Undecided";
            j["min_modulus_bound"] = v.min_modulus_bound;
            break;
    }
    j["method"] = v.method;
    return j;
}

}  // namespace bergmod
