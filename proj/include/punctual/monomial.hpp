#ifndef PUNCTUAL_MONOMIAL_HPP
#define PUNCTUAL_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "punctual/rational.hpp"

namespace punctual {

// A monomial in n variables, stored as its exponent vector.
// The fixed term order for every sorted output is graded reverse
// lexicographic with x1 > x2 > ... > xn.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int n) : e(static_cast<size_t>(n), 0) {
        if (n < 1) throw std::invalid_argument("Monomial: need n >= 1");
    }
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {
        for (int v : e)
            if (v < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    int n() const { return static_cast<int>(e.size()); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const { return degree() == 0; }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

// Strict grevlex "a > b": higher degree wins; on equal degree the rightmost
// nonzero entry of a-b decides, and a is larger when that entry is negative.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (int i = a.n() - 1; i >= 0; --i) {
        int diff = a.e[static_cast<size_t>(i)] - b.e[static_cast<size_t>(i)];
        if (diff != 0) return diff < 0;
    }
    return false;
}

inline bool grevlex_less(const Monomial& a, const Monomial& b) { return grevlex_greater(b, a); }

// Pure lex with x1 > ... > xn (used for lex-segment staircases only).
inline bool lex_greater(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.n(); ++i) {
        int diff = a.e[static_cast<size_t>(i)] - b.e[static_cast<size_t>(i)];
        if (diff != 0) return diff > 0;
    }
    return false;
}

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

inline bool divides(const Monomial& a, const Monomial& b) {
    if (a.n() != b.n()) return false;
    for (int i = 0; i < a.n(); ++i)
        if (a.e[static_cast<size_t>(i)] > b.e[static_cast<size_t>(i)]) return false;
    return true;
}

inline Monomial mul(const Monomial& a, const Monomial& b) {
    if (a.n() != b.n()) throw std::invalid_argument("Monomial mul: mismatched n");
    Monomial r = a;
    for (int i = 0; i < a.n(); ++i) r.e[static_cast<size_t>(i)] += b.e[static_cast<size_t>(i)];
    return r;
}

// b / a, requiring a | b.
inline Monomial div(const Monomial& b, const Monomial& a) {
    if (!divides(a, b)) throw std::invalid_argument("Monomial div: not divisible");
    Monomial r = b;
    for (int i = 0; i < a.n(); ++i) r.e[static_cast<size_t>(i)] -= a.e[static_cast<size_t>(i)];
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.n() != b.n()) throw std::invalid_argument("Monomial lcm: mismatched n");
    Monomial r = a;
    for (int i = 0; i < a.n(); ++i)
        r.e[static_cast<size_t>(i)] = std::max(a.e[static_cast<size_t>(i)], b.e[static_cast<size_t>(i)]);
    return r;
}

inline Monomial variable(int n, int i) {
    Monomial m(n);
    if (i < 1 || i > n) throw std::invalid_argument("variable: index out of range");
    m.e[static_cast<size_t>(i - 1)] = 1;
    return m;
}

inline Monomial pure_power(int n, int i, int a) {
    Monomial m(n);
    if (i < 1 || i > n) throw std::invalid_argument("pure_power: index out of range");
    m.e[static_cast<size_t>(i - 1)] = a;
    return m;
}

// All monomials of degree exactly d in n variables, sorted grevlex-descending.
// Length C(n+d-1, d).
inline std::vector<Monomial> monomial_basis(int n, int d) {
    if (n < 1) throw std::invalid_argument("monomial_basis: need n >= 1");
    if (d < 0) return {};
    std::vector<Monomial> out;
    Monomial cur(n);
    // Recursive descent over exponent vectors; sorted afterwards for clarity.
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n - 1) {
            cur.e[static_cast<size_t>(pos)] = rem;
            out.push_back(cur);
            return;
        }
        for (int a = rem; a >= 0; --a) {
            cur.e[static_cast<size_t>(pos)] = a;
            rec(pos + 1, rem - a);
        }
        cur.e[static_cast<size_t>(pos)] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

// Text form without coefficient: "1", "x2", "x1^2*x3". The alphabet letter is
// 'x' for the ring and 'y' for the dual ring.
inline std::string monomial_to_string(const Monomial& m, char alphabet = 'x') {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.n(); ++i) {
        int a = m.e[static_cast<size_t>(i)];
        if (a == 0) continue;
        if (!s.empty()) s += "*";
        s += alphabet;
        s += std::to_string(i + 1);
        if (a > 1) s += "^" + std::to_string(a);
    }
    return s;
}

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        size_t h = static_cast<size_t>(m.n()) * 1099511628211ull;
        for (int v : m.e) h = (h ^ static_cast<size_t>(v + 1)) * 1099511628211ull;
        return h;
    }
};

}  // namespace punctual

#endif
