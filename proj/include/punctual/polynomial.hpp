#ifndef PUNCTUAL_POLYNOMIAL_HPP
#define PUNCTUAL_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "punctual/monomial.hpp"
#include "punctual/rational.hpp"

namespace punctual {

// Sparse polynomial with exact rational coefficients. Terms are kept in
// grevlex-descending order and no zero coefficient is ever stored, so two
// polynomials are equal iff their term maps are equal.
struct Polynomial {
    int nvars = 0;
    std::map<Monomial, Rational, GrevlexGreater> terms;

    Polynomial() = default;
    explicit Polynomial(int n) : nvars(n) {
        if (n < 1) throw std::invalid_argument("Polynomial: need n >= 1");
    }

    static Polynomial monomial(const Monomial& m, Rational c = 1) {
        Polynomial p(m.n());
        if (c != 0) p.terms.emplace(m, std::move(c));
        return p;
    }
    static Polynomial constant(int n, const Rational& c) {
        return monomial(Monomial(n), c);
    }

    bool is_zero() const { return terms.empty(); }

    // Max term degree; throws on 0 (degree of the zero polynomial is undefined).
    int degree() const {
        if (terms.empty()) throw std::domain_error("degree of zero polynomial");
        int d = 0;
        for (const auto& [m, c] : terms) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms.empty()) return true;
        int d = terms.begin()->first.degree();
        for (const auto& [m, c] : terms)
            if (m.degree() != d) return false;
        return true;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    bool operator==(const Polynomial& o) const { return nvars == o.nvars && terms == o.terms; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
};

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("polynomial +: mismatched n");
    Polynomial r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
}

inline Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("polynomial -: mismatched n");
    Polynomial r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, -c);
    return r;
}

inline Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.nvars);
    if (c == 0) return r;
    for (const auto& [m, q] : p.terms) r.terms.emplace(m, c * q);
    return r;
}

inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("polynomial *: mismatched n");
    Polynomial r(a.nvars);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) r.add_term(mul(ma, mb), ca * cb);
    return r;
}

// Contraction of a single dual monomial by a ring monomial:
// x^a acts on y^b giving y^(b-a) when b >= a componentwise, else 0.
inline std::optional<Monomial> contract(const Monomial& a, const Monomial& b) {
    if (a.n() != b.n()) throw std::invalid_argument("contract: mismatched n");
    if (!divides(a, b)) return std::nullopt;
    return div(b, a);
}

// Bilinear extension: g in R acts on f in S. This is contraction, not
// differentiation; no factorial coefficients appear.
inline Polynomial contract(const Polynomial& g, const Polynomial& f) {
    if (g.nvars != f.nvars) throw std::invalid_argument("contract: mismatched variable counts");
    Polynomial r(f.nvars);
    for (const auto& [mg, cg] : g.terms)
        for (const auto& [mf, cf] : f.terms)
            if (auto m = contract(mg, mf)) r.add_term(*m, cg * cf);
    return r;
}

// ---------------------------------------------------------------------------
// Text grammar. Terms look like "3/2*x1^2*x3 - x2"; variables are x1..xn in
// the ring and y1..yn in the dual ring; whitespace is ignored everywhere.
// Printing is canonical (grevlex-descending terms), so parse/print round-trips
// exactly.
// ---------------------------------------------------------------------------

namespace detail {

struct PolyLexer {
    const std::string& s;
    size_t i = 0;
    explicit PolyLexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) + ": " + msg);
    }
    Integer read_integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == start) fail("expected digits");
        return Integer(s.substr(start, i - start));
    }
};

}  // namespace detail

// Parses the grammar above. `alphabet` must be 'x' or 'y' and every variable
// in the text must use it; n bounds the variable indices.
inline Polynomial parse_polynomial(const std::string& text, int n, char alphabet) {
    if (alphabet != 'x' && alphabet != 'y')
        throw std::invalid_argument("parse_polynomial: alphabet must be 'x' or 'y'");
    detail::PolyLexer lx(text);
    Polynomial out(n);
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++lx.i;
        } else if (!first) {
            lx.fail("expected '+' or '-' between terms");
        }
        if (lx.eof()) lx.fail("dangling sign");
        first = false;

        Rational coeff = sign;
        bool saw_factor = false;
        c = lx.peek();
        if (c >= '0' && c <= '9') {
            Integer num = lx.read_integer();
            Integer den = 1;
            if (lx.peek() == '/') {
                ++lx.i;
                den = lx.read_integer();
                if (den == 0) lx.fail("zero denominator");
            }
            coeff *= Rational(num, den);
            saw_factor = true;
            if (lx.peek() == '*') ++lx.i;
            else if (lx.peek() == alphabet) lx.fail("expected '*' between coefficient and variable");
        }

        Monomial m(n);
        while (lx.peek() == alphabet) {
            ++lx.i;
            Integer idx = lx.read_integer();
            if (idx < 1 || idx > n) lx.fail("variable index out of range 1..n");
            int exp = 1;
            if (lx.peek() == '^') {
                ++lx.i;
                Integer e = lx.read_integer();
                if (e < 1 || e > 1'000'000) lx.fail("exponent out of range");
                exp = static_cast<int>(e);
            }
            m.e[static_cast<size_t>(static_cast<int>(idx) - 1)] += exp;
            saw_factor = true;
            if (lx.peek() == '*') {
                ++lx.i;
                if (lx.peek() != alphabet && !(lx.peek() >= '0' && lx.peek() <= '9'))
                    lx.fail("dangling '*'");
            }
        }
        if (!saw_factor) lx.fail("empty term");
        out.add_term(m, coeff);
    }
    return out;
}

inline std::string polynomial_to_string(const Polynomial& p, char alphabet = 'x') {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms) {
        Rational a = c;
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (m.is_one()) {
            s += to_string(a);
        } else {
            if (a != 1) s += to_string(a) + "*";
            s += monomial_to_string(m, alphabet);
        }
    }
    return s;
}

// Comma-separated list of polynomials, e.g. the CLI's --dual argument.
inline std::vector<Polynomial> parse_polynomial_list(const std::string& text, int n, char alphabet) {
    std::vector<Polynomial> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        bool blank = piece.find_first_not_of(" \t\r\n") == std::string::npos;
        if (!blank) out.push_back(parse_polynomial(piece, n, alphabet));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace punctual

#endif
