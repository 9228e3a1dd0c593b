#pragma once

#include <map>
#include <set>
#include <stdexcept>

namespace bergmod {

using VariableSet = std::set<int>;

// Finitely supported multi-index over variables z1, z2, ...
// Canonical form: no zero entries stored, indices are positive.
class Exponent {
  public:
    Exponent() = default;
    Exponent(std::initializer_list<std::pair<const int, long>> init) {
        for (auto& [v, e] : init) set(v, e);
    }

    long get(int var) const {
        auto it = entries_.find(var);
        return it == entries_.end() ? 0 : it->second;
    }

    void set(int var, long e) {
        if (var <= 0) throw std::invalid_argument("Exponent: variable index must be positive");
        if (e < 0) throw std::invalid_argument("Exponent: negative exponent");
        if (e == 0)
            entries_.erase(var);
        else
            entries_[var] = e;
    }

    bool is_zero() const { return entries_.empty(); }

    long total_degree() const {
        long d = 0;
        for (auto& [v, e] : entries_) d += e;
        return d;
    }

    VariableSet variables() const {
        VariableSet s;
        for (auto& [v, e] : entries_) s.insert(v);
        return s;
    }

    const std::map<int, long>& entries() const { return entries_; }

    Exponent operator+(const Exponent& o) const {
        Exponent r = *this;
        for (auto& [v, e] : o.entries_) r.set(v, r.get(v) + e);
        return r;
    }

    // Componentwise subtraction; throws if the result would be negative.
    Exponent operator-(const Exponent& o) const {
        Exponent r = *this;
        for (auto& [v, e] : o.entries_) {
            long d = r.get(v) - e;
            if (d < 0) throw std::domain_error("Exponent: not divisible");
            r.set(v, d);
        }
        return r;
    }

    bool divides(const Exponent& o) const {
        for (auto& [v, e] : entries_)
            if (o.get(v) < e) return false;
        return true;
    }

    static Exponent lcm(const Exponent& a, const Exponent& b) {
        Exponent r = a;
        for (auto& [v, e] : b.entries_)
            if (e > r.get(v)) r.set(v, e);
        return r;
    }

    static Exponent gcd(const Exponent& a, const Exponent& b) {
        Exponent r;
        for (auto& [v, e] : a.entries_) {
            long m = std::min(e, b.get(v));
            if (m > 0) r.set(v, m);
        }
        return r;
    }

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

  private:
    std::map<int, long> entries_;
};

// Graded lexicographic order: compare by total degree, then lexicographically
// with z1 heaviest. Returns true when a < b.
inline bool grlex_less(const Exponent& a, const Exponent& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea && ib != eb) {
        if (ia->first != ib->first) {
            // Lower index present on one side only: that side is lex-greater.
            return ia->first > ib->first;
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    // Equal prefixes with equal total degree: both must be exhausted.
    return false;
}

struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const { return grlex_less(a, b); }
};

}  // namespace bergmod
