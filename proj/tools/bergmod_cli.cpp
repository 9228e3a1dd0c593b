#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "bergmod/json_io.hpp"

using namespace bergmod;

namespace {

// --sig accepts inline JSON or a path to a JSON file.
WeightSignature load_signature(const std::string& arg) {
    if (arg.empty()) return WeightSignature(mpq_class(-1));
    std::string text = arg;
    if (arg.find('{') == std::string::npos) {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("cannot open signature file: " + arg);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return signature_from_json(json::parse(text));
}

json load_json_arg(const std::string& arg) {
    std::string text = arg;
    if (arg.find('{') == std::string::npos && arg.find('[') == std::string::npos) {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("cannot open file: " + arg);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return json::parse(text);
}

int emit(const json& j) {
    std::cout << j.dump(2) << "\n";
    return 0;
}

int verdict_exit(const EquivalenceVerdict& v) {
    return v.status == VerdictStatus::Undecided ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decision engine for polynomially generated submodules of weighted "
                 "Bergman spaces"};
    app.require_subcommand(1);

    std::string sig_arg;
    unsigned long seed = 0;
    bool seed_given = false;
    double eps = 1e-6;
    long samples = 100000, trials = 20;
    std::string trusted_arg;
    bool verify = false, deterministic = false, json_flag = false;
    app.add_option("--sig", sig_arg, "weight signature (inline JSON or file)")->capture_default_str();
    app.add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_given = true; });
    app.add_option("--eps", eps, "stability resolution floor");
    app.add_option("--samples", samples, "Monte-Carlo sample count");
    app.add_option("--trials", trials, "certificate-check trial count");
    app.add_option("--trusted-factors", trusted_arg, "asserted factor list (JSON or file)");
    app.add_flag("--verify", verify, "re-verify Yes certificates; mismatch exits 3");
    app.add_flag("--deterministic", deterministic, "require an explicit --seed for randomized work");
    app.add_flag("--json", json_flag, "JSON output (always on; accepted for compatibility)");

    std::vector<std::string> args;
    auto add_cmd = [&](const char* name, const char* desc, size_t min_args, size_t max_args) {
        auto* c = app.add_subcommand(name, desc);
        c->fallthrough();
        c->add_option("args", args, "arguments")->expected((int)min_args, (int)max_args);
        return c;
    };
    auto* c_norm = add_cmd("norm", "exact squared norm of a polynomial", 1, 1);
    auto* c_inner = add_cmd("inner", "exact inner product of two polynomials", 2, 2);
    auto* c_weight = add_cmd("weight", "weight of a multi-index, e.g. alpha=2,3", 1, 1);
    auto* c_kernel = add_cmd("kernel", "reproducing kernel K_lambda(zeta); two point JSONs", 2, 2);
    auto* c_beurling = add_cmd("beurling", "Beurling form of an ideal {p1, p2, ...}", 1, 1);
    auto* c_groebner = add_cmd("groebner", "reduced Groebner basis of an ideal", 1, 1);
    auto* c_gcd = add_cmd("gcd", "gcd of two or more polynomials", 2, 64);
    auto* c_factor = add_cmd("factor", "irreducible factorization", 1, 1);
    auto* c_pstar = add_cmd("pstar", "stable-free part decomposition", 1, 1);
    auto* c_stable = add_cmd("stable", "open-polydisk zero certification", 1, 1);
    auto* c_modeq = add_cmd("modeq", "modulus equivalence of two polynomials", 2, 2);
    auto* c_equiv = add_cmd("equiv", "unitary equivalence of Beurling forms: p {K} q {L}", 4, 4);
    auto* c_eqp = add_cmd("equiv-principal", "unitary equivalence of principal submodules", 2, 2);
    auto* c_orbit = add_cmd("orbit-exponent", "Hardy-zeroed orbit exponent, e.g. gamma=2,3", 1, 1);
    auto* c_mc = add_cmd("mc-check", "Monte-Carlo norm check of a polynomial", 1, 1);
    auto* c_cert = add_cmd("cert-check", "verify a certificate: p_tilde q_tilde {G}", 3, 3);

    CLI11_PARSE(app, argc, argv);

    try {
        WeightSignature sig = load_signature(sig_arg);
        bool randomized = c_mc->parsed() || c_cert->parsed() || c_modeq->parsed() ||
                          c_equiv->parsed() || c_eqp->parsed() || c_pstar->parsed() ||
                          c_stable->parsed();
        if (deterministic && randomized && !seed_given) {
            std::cerr << "error: --deterministic requires an explicit --seed for this command\n";
            return 1;
        }

        if (c_norm->parsed()) {
            mpq_class n = norm_sq(parse_poly(args[0]), sig);
            return emit({{"exact", to_string(n)}, {"approx", n.get_d()}});
        }
        if (c_inner->parsed()) {
            GaussianRational v = inner_product(parse_poly(args[0]), parse_poly(args[1]), sig);
            return emit({{"re", to_string(v.re)},
                         {"im", to_string(v.im)},
                         {"value", coeff_to_string(v)}});
        }
        if (c_weight->parsed()) {
            std::string a = args[0];
            if (a.rfind("alpha=", 0) == 0) a = a.substr(6);
            WeightValue w = weight(exponent_from_string(a), sig);
            return emit({{"exact", to_string(w.exact)}, {"approx", w.approx}});
        }
        if (c_kernel->parsed()) {
            auto z = kernel_eval(point_from_json(load_json_arg(args[0])),
                                 point_from_json(load_json_arg(args[1])), sig);
            return emit({{"re", z.real()}, {"im", z.imag()}});
        }
        if (c_beurling->parsed()) {
            BeurlingForm bf = beurling_form(parse_ideal(args[0]));
            return emit({{"gcd_part", format_poly(bf.gcd_part)},
                         {"cofactor", ideal_to_json(bf.cofactor)}});
        }
        if (c_groebner->parsed()) {
            return emit({{"basis", ideal_to_json(groebner(parse_ideal(args[0])))}});
        }
        if (c_gcd->parsed()) {
            std::vector<Polynomial> ps;
            for (auto& a : args) ps.push_back(parse_poly(a));
            return emit({{"gcd", format_poly(gcd_many(ps))}});
        }
        if (c_factor->parsed()) {
            Polynomial p = parse_poly(args[0]);
            FactoredPoly f = trusted_arg.empty()
                                 ? factor(p)
                                 : factor_trusted(p, trusted_factors_from_json(
                                                         load_json_arg(trusted_arg)));
            return emit(factored_to_json(f));
        }
        if (c_pstar->parsed()) {
            try {
                auto [p_star, stable] = stable_free_part(parse_poly(args[0]), eps, seed);
                return emit(
                    {{"p_star", format_poly(p_star)}, {"stable_part", format_poly(stable)}});
            } catch (const UndecidedStabilityError& e) {
                emit({{"status", "Undecided"}, {"reason", e.what()}});
                return 2;
            }
        }
        if (c_stable->parsed()) {
            StabilityVerdict v = has_zero_in_open_polydisk(parse_poly(args[0]), eps, seed);
            emit(stability_to_json(v));
            return v.status == StabilityStatus::Undecided ? 2 : 0;
        }
        if (c_modeq->parsed()) {
            EquivalenceVerdict v =
                modulus_equivalent(parse_poly(args[0]), parse_poly(args[1]), eps, seed);
            emit(verdict_to_json(v));
            return verdict_exit(v);
        }
        if (c_equiv->parsed() || c_eqp->parsed()) {
            EquivalenceVerdict v;
            if (c_equiv->parsed()) {
                BeurlingForm M{parse_poly(args[0]), parse_ideal(args[1])};
                BeurlingForm N{parse_poly(args[2]), parse_ideal(args[3])};
                v = unitarily_equivalent(M, N, sig, eps, seed);
            } else {
                v = unitarily_equivalent_principal(parse_poly(args[0]), parse_poly(args[1]), sig,
                                                   eps, seed);
            }
            json j = verdict_to_json(v);
            if (verify && v.status == VerdictStatus::Yes) {
                std::string why;
                bool ok = certificate_check(v.p_tilde, v.q_tilde, v.G, sig, trials, seed, &why);
                j["verified"] = ok;
                if (!ok) {
                    j["verification_failure"] = why;
                    emit(j);
                    return 3;
                }
            }
            emit(j);
            return verdict_exit(v);
        }
        if (c_orbit->parsed()) {
            std::string a = args[0];
            if (a.rfind("gamma=", 0) == 0) a = a.substr(6);
            Exponent g = monomial_orbit_exponent(exponent_from_string(a), sig);
            return emit({{"gamma_tilde", exponent_to_json(g)},
                         {"monomial", format_poly(Polynomial::monomial(g, GaussianRational(1)))}});
        }
        if (c_mc->parsed()) {
            Polynomial p = parse_poly(args[0]);
            auto [est, se] = mc_norm_estimate(p, sig, samples, seed);
            mpq_class exact = norm_sq(p, sig);
            bool within = std::abs(est - exact.get_d()) <= 3.0 * se + 1e-12;
            return emit({{"estimate", est},
                         {"std_error", se},
                         {"exact", to_string(exact)},
                         {"within_3se", within}});
        }
        if (c_cert->parsed()) {
            std::string why;
            bool ok = certificate_check(parse_poly(args[0]), parse_poly(args[1]),
                                        parse_ideal(args[2]), sig, trials, seed, &why);
            json j = {{"ok", ok}};
            if (!ok) j["failure"] = why;
            emit(j);
            return ok ? 0 : 3;
        }
        std::cerr << "error: no command\n";
        return 1;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error at position " << e.position << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
