#pragma once

#include <complex>
#include <vector>

#include "bergmod/univariate.hpp"

namespace bergmod {

// Numeric roots of a univariate polynomial by the Durand-Kerner iteration in
// extended precision, with Newton polishing. Results are approximations only;
// every consumer re-verifies conclusions with exact arithmetic.
inline std::vector<std::complex<long double>> durand_kerner_roots(const UniPoly& p,
                                                                 int iterations = 400) {
    using C = std::complex<long double>;
    long n = p.degree();
    std::vector<C> cs(n + 1);
    for (long k = 0; k <= n; ++k) {
        cs[k] = C((long double)p.coeff(k).re.get_d(), (long double)p.coeff(k).im.get_d());
    }
    for (long k = 0; k <= n; ++k) cs[k] /= cs[n];
    auto eval = [&](C z) {
        C s = 0;
        for (long k = n; k >= 0; --k) s = s * z + cs[k];
        return s;
    };
    auto deriv = [&](C z) {
        C s = 0;
        for (long k = n; k >= 1; --k) s = s * z + cs[k] * (long double)k;
        return s;
    };
    if (n <= 0) return {};

    // Cauchy bound for initial radius.
    long double bound = 0;
    for (long k = 0; k < n; ++k) bound = std::max(bound, std::abs(cs[k]));
    bound += 1.0L;

    std::vector<C> z(n);
    C seed = std::polar<long double>(std::min(bound, 1.3L) * 0.7L, 0.41L);
    C rot = std::polar<long double>(1.0L, 2.0L * 3.14159265358979323846L / n + 0.003L);
    z[0] = seed;
    for (long k = 1; k < n; ++k) z[k] = z[k - 1] * rot;

    for (int it = 0; it < iterations; ++it) {
        long double move = 0;
        for (long k = 0; k < n; ++k) {
            C num = eval(z[k]);
            C den = 1;
            for (long j = 0; j < n; ++j)
                if (j != k) den *= (z[k] - z[j]);
            if (std::abs(den) == 0) continue;
            C step = num / den;
            z[k] -= step;
            move = std::max(move, std::abs(step));
        }
        if (move < 1e-30L) break;
    }
    // Newton polish.
    for (long k = 0; k < n; ++k) {
        for (int it = 0; it < 12; ++it) {
            C d = deriv(z[k]);
            if (std::abs(d) < 1e-40L) break;
            C step = eval(z[k]) / d;
            z[k] -= step;
            if (std::abs(step) < 1e-32L) break;
        }
    }
    return z;
}

}  // namespace bergmod
