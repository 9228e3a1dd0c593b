#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "bergmod/polynomial.hpp"

namespace bergmod {

struct SyntaxError : std::runtime_error {
    size_t position;
    SyntaxError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};
struct IndexError : std::runtime_error {
    IndexError(const std::string& msg) : std::runtime_error(msg) {}
};

// Recursive-descent parser for the polynomial grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := atom ('^' natural)?
//   atom   := rational | rational 'i' | 'i' | variable | '(' expr ')'
//   variable := 'z' positive-integer
// Whitespace-insensitive; implicit multiplication and unary minus allowed.
class PolyParser {
  public:
    explicit PolyParser(const std::string& src) : s_(src) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return p;
    }

  private:
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = (c == '-');
            ++pos_;
        }
        Polynomial p = term();
        if (neg) p = -p;
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Polynomial t = term();
                if (c == '+')
                    p += t;
                else
                    p -= t;
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                p *= factor();
            } else if (c == '(' || c == 'z' || c == 'i' || std::isdigit((unsigned char)c)) {
                p *= factor();  // implicit multiplication
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial factor() {
        Polynomial p = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
            if (pos_ == start) throw SyntaxError("expected exponent", pos_);
            long e = std::stol(s_.substr(start, pos_ - start));
            p = p.pow(e);
        }
        return p;
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (c == 'z') {
            ++pos_;
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
            if (pos_ == start) throw IndexError("variable needs a numeric index");
            long idx = std::stol(s_.substr(start, pos_ - start));
            if (idx <= 0) throw IndexError("variable index must be positive: z" + std::to_string(idx));
            return Polynomial::variable((int)idx);
        }
        if (c == 'i') {
            ++pos_;
            return Polynomial(GaussianRational::i());
        }
        if (std::isdigit((unsigned char)c)) {
            mpq_class q = read_rational();
            if (pos_ < s_.size() && s_[pos_] == 'i') {
                ++pos_;
                return Polynomial(GaussianRational(0, q));
            }
            return Polynomial(GaussianRational(q));
        }
        throw SyntaxError("expected atom", pos_);
    }

    mpq_class read_rational() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        std::string num = s_.substr(start, pos_ - start);
        if (pos_ < s_.size() && s_[pos_] == '/') {
            size_t save = pos_++;
            size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
            if (pos_ == dstart) {
                pos_ = save;  // trailing '/' is not part of the rational
            } else {
                std::string den = s_.substr(dstart, pos_ - dstart);
                if (mpq_class(den) == 0) throw SyntaxError("zero denominator", dstart);
                mpq_class q(num + "/" + den);
                q.canonicalize();
                return q;
            }
        }
        return mpq_class(num);
    }
};

inline Polynomial parse_poly(const std::string& s) { return PolyParser(s).parse(); }

namespace detail {

inline std::string format_rational(const mpq_class& q) { return q.get_str(); }

// Coefficient rendering: real -> "3/2"; pure imaginary -> "2i";
// mixed -> "(1/2+1i)". Sign handling for joining is done by the caller.
inline std::string format_coeff(const GaussianRational& c) {
    if (c.im == 0) return format_rational(c.re);
    if (c.re == 0) return format_rational(c.im) + "i";
    std::string s = "(" + format_rational(c.re);
    if (c.im > 0) s += "+";
    s += format_rational(c.im) + "i)";
    return s;
}

inline std::string format_monomial(const Exponent& e) {
    std::string s;
    for (auto& [v, k] : e.entries()) {
        if (!s.empty()) s += "*";
        s += "z" + std::to_string(v);
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

}  // namespace detail

// Canonical text form: terms in descending graded-lex order, exact
// coefficients, deterministic. parse_poly(format_poly(p)) == p.
inline std::string format_poly(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Exponent& e = it->first;
        GaussianRational c = it->second;
        bool lead = out.empty();
        // Pull a leading '-' out of real or pure-imaginary coefficients.
        bool neg = (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
        if (neg) c = -c;
        if (lead) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = detail::format_monomial(e);
        bool unit_coeff = c.is_one();
        if (mono.empty()) {
            out += detail::format_coeff(c);
        } else if (unit_coeff) {
            out += mono;
        } else {
            out += detail::format_coeff(c) + "*" + mono;
        }
    }
    return out;
}

}  // namespace bergmod
