#pragma once

#include <cmath>
#include <limits>

#include "bergmod/polynomial.hpp"

namespace bergmod {

// Closed real interval with outward widening after every operation.
// Widening by one ulp per endpoint is a sound substitute for directed
// rounding on IEEE doubles.
struct Interval {
    double lo = 0.0, hi = 0.0;

    Interval() = default;
    Interval(double x) : lo(x), hi(x) {}
    Interval(double l, double h) : lo(l), hi(h) {}

    static Interval widened(double l, double h) {
        return Interval(std::nextafter(l, -std::numeric_limits<double>::infinity()),
                        std::nextafter(h, std::numeric_limits<double>::infinity()));
    }

    bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }
    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return widened(a.lo + b.lo, a.hi + b.hi);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return widened(a.lo - b.hi, a.hi - b.lo);
    }
    friend Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }
    friend Interval operator*(const Interval& a, const Interval& b) {
        double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return widened(std::min(std::min(p1, p2), std::min(p3, p4)),
                       std::max(std::max(p1, p2), std::max(p3, p4)));
    }

    // Enclosure of x^2 (tighter than x*x around zero).
    Interval square() const {
        double a = std::abs(lo), b = std::abs(hi);
        double m = std::max(a, b);
        double lo2 = contains_zero() ? 0.0 : std::min(a, b);
        return widened(lo2 * lo2, m * m);
    }
};

// Axis-aligned rectangle in C.
struct ComplexBox {
    Interval re, im;

    // Enclosure of |z|^2 over the box.
    Interval abs_sq() const { return re.square() + im.square(); }

    double min_abs() const {
        double m = abs_sq().lo;
        return m <= 0 ? 0.0 : std::sqrt(m);
    }
    double max_abs() const { return std::sqrt(std::max(0.0, abs_sq().hi)); }

    friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

// Enclosure of p over a box assignment per variable (missing variables are 0).
inline ComplexBox eval_box(const Polynomial& p, const std::map<int, ComplexBox>& boxes) {
    ComplexBox sum{};
    for (auto& [e, c] : p.terms()) {
        ComplexBox t{Interval(c.re.get_d()), Interval(c.im.get_d())};
        // coefficient conversion may round; widen.
        t.re = Interval::widened(t.re.lo, t.re.hi);
        t.im = Interval::widened(t.im.lo, t.im.hi);
        bool zero = false;
        for (auto& [v, k] : e.entries()) {
            auto it = boxes.find(v);
            if (it == boxes.end()) {
                zero = true;
                break;
            }
            for (long j = 0; j < k; ++j) t = t * it->second;
        }
        if (zero) continue;
        sum = sum + t;
    }
    return sum;
}

}  // namespace bergmod
