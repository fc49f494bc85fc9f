#ifndef PUNCTUAL_MONOMIAL_IDEAL_HPP
#define PUNCTUAL_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "punctual/errors.hpp"
#include "punctual/hilbert.hpp"
#include "punctual/monomial.hpp"

namespace punctual {

using MonomialSet = std::unordered_set<Monomial, MonomialHash>;

// A monomial ideal given by its minimal generators (grevlex-descending).
// When the colength is finite the staircase (standard monomials, grevlex-
// ascending) and the quotient Hilbert function are computed eagerly and
// cached, so instances are immutable afterwards and safe to share across
// threads.
class MonomialIdeal {
public:
    int n = 0;
    std::vector<Monomial> gens;

    MonomialIdeal() = default;

    // True iff some generator divides m.
    bool contains(const Monomial& m) const {
        for (const auto& g : gens)
            if (divides(g, m)) return true;
        return false;
    }

    bool finite_colength() const { return finite_; }

    // Number of standard monomials; nullopt = infinite.
    std::optional<long> colength() const {
        if (!finite_) return std::nullopt;
        return static_cast<long>(staircase_.size());
    }

    // Standard monomials, grevlex-ascending. Errors on infinite colength.
    const std::vector<Monomial>& staircase() const {
        if (!finite_) throw std::invalid_argument("staircase: ideal has infinite colength");
        return staircase_;
    }

    const HilbertFunction& hilbert_function() const {
        if (!finite_) throw std::invalid_argument("hilbert_function: ideal has infinite colength");
        if (!hilbert_) throw std::invalid_argument("hilbert_function: unit ideal has empty quotient");
        return *hilbert_;
    }

    bool operator==(const MonomialIdeal& o) const { return n == o.n && gens == o.gens; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    // Canonical total order: grevlex-greater generators first, then shorter
    // generator lists first. Used to fix enumeration output order.
    bool operator<(const MonomialIdeal& o) const {
        size_t m = std::min(gens.size(), o.gens.size());
        for (size_t i = 0; i < m; ++i) {
            if (gens[i] != o.gens[i]) return grevlex_greater(gens[i], o.gens[i]);
        }
        return gens.size() < o.gens.size();
    }

    friend MonomialIdeal minimal_generators(int n, const std::vector<Monomial>& raw);
    friend MonomialIdeal ideal_from_staircase(int n, const std::vector<Monomial>& stairs);

private:
    bool finite_ = false;
    std::vector<Monomial> staircase_;
    std::optional<HilbertFunction> hilbert_;

    void fill_hilbert() {
        if (!finite_ || staircase_.empty()) return;
        int s = 0;
        for (const auto& m : staircase_) s = std::max(s, m.degree());
        std::vector<long> h(static_cast<size_t>(s) + 1, 0);
        for (const auto& m : staircase_) ++h[static_cast<size_t>(m.degree())];
        hilbert_ = HilbertFunction(h);
    }
};

namespace detail {

// BFS over standard monomials starting at 1. Caller guarantees finiteness.
inline std::vector<Monomial> staircase_bfs(const MonomialIdeal& I, size_t cap = 5'000'000) {
    std::vector<Monomial> out;
    if (I.contains(Monomial(I.n))) return out;
    MonomialSet seen;
    std::deque<Monomial> queue;
    queue.push_back(Monomial(I.n));
    seen.insert(queue.front());
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        out.push_back(m);
        if (out.size() > cap) throw ResourceLimitError("staircase exceeds node cap");
        for (int i = 1; i <= I.n; ++i) {
            Monomial next = mul(m, variable(I.n, i));
            if (seen.count(next) || I.contains(next)) continue;
            seen.insert(next);
            queue.push_back(next);
        }
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_less(a, b); });
    return out;
}

}  // namespace detail

// Build an ideal from an arbitrary generating set, keeping only the
// divisibility-minimal generators.
inline MonomialIdeal minimal_generators(int n, const std::vector<Monomial>& raw) {
    if (n < 1) throw std::invalid_argument("minimal_generators: need n >= 1");
    if (raw.empty()) throw std::invalid_argument("minimal_generators: empty generating set");
    MonomialIdeal I;
    I.n = n;
    for (const auto& g : raw) {
        if (g.n() != n) throw std::invalid_argument("minimal_generators: generator has wrong variable count");
        bool minimal = true;
        for (const auto& h : raw)
            if (h != g && divides(h, g)) {
                minimal = false;
                break;
            }
        // Duplicate monomials: keep one copy.
        if (minimal && std::find(I.gens.begin(), I.gens.end(), g) == I.gens.end()) I.gens.push_back(g);
    }
    std::sort(I.gens.begin(), I.gens.end(), GrevlexGreater{});

    // Finite colength iff every variable has a pure power among the
    // generators (equivalently, in the ideal).
    I.finite_ = true;
    for (int i = 1; i <= n && I.finite_; ++i) {
        bool found = false;
        for (const auto& g : I.gens) {
            bool pure = true;
            for (int j = 0; j < n; ++j)
                if (j != i - 1 && g.e[static_cast<size_t>(j)] > 0) {
                    pure = false;
                    break;
                }
            if (pure) {
                found = true;
                break;
            }
        }
        I.finite_ = found;
    }
    if (I.finite_) {
        I.staircase_ = detail::staircase_bfs(I);
        I.fill_hilbert();
    }
    return I;
}

// Build the ideal whose standard monomials are exactly `stairs` (must be a
// nonempty division-closed set). Minimal generators are the monomials outside
// the staircase all of whose maximal proper divisors lie inside it.
inline MonomialIdeal ideal_from_staircase(int n, const std::vector<Monomial>& stairs) {
    if (n < 1) throw std::invalid_argument("ideal_from_staircase: need n >= 1");
    MonomialSet set(stairs.begin(), stairs.end());
    if (!set.count(Monomial(n)))
        throw std::invalid_argument("ideal_from_staircase: staircase must contain 1");
    for (const auto& m : stairs)
        for (int i = 0; i < n; ++i)
            if (m.e[static_cast<size_t>(i)] > 0 && !set.count(div(m, variable(n, i + 1))))
                throw std::invalid_argument("ideal_from_staircase: set not closed under division");

    MonomialIdeal I;
    I.n = n;
    MonomialSet border;
    for (const auto& s : stairs)
        for (int i = 1; i <= n; ++i) {
            Monomial c = mul(s, variable(n, i));
            if (set.count(c) || border.count(c)) continue;
            bool all_in = true;
            for (int j = 0; j < n && all_in; ++j)
                if (c.e[static_cast<size_t>(j)] > 0) all_in = set.count(div(c, variable(n, j + 1)));
            if (all_in) border.insert(c);
        }
    I.gens.assign(border.begin(), border.end());
    std::sort(I.gens.begin(), I.gens.end(), GrevlexGreater{});
    I.finite_ = true;
    I.staircase_ = stairs;
    std::sort(I.staircase_.begin(), I.staircase_.end(),
              [](const Monomial& a, const Monomial& b) { return grevlex_less(a, b); });
    I.fill_hilbert();
    return I;
}

// Strong stability with x1 dominant: for each generator u, each j with
// x_j | u, and each i < j, the moved monomial u*x_i/x_j must lie in I.
inline bool is_strongly_stable(const MonomialIdeal& I) {
    for (const auto& u : I.gens)
        for (int j = 2; j <= I.n; ++j) {
            if (u.e[static_cast<size_t>(j - 1)] == 0) continue;
            for (int i = 1; i < j; ++i) {
                Monomial moved = mul(div(u, variable(I.n, j)), variable(I.n, i));
                if (!I.contains(moved)) return false;
            }
        }
    return true;
}

// All monomial ideals of colength exactly k in n variables, canonically
// ordered. DFS over staircases: members are appended in strictly grevlex-
// ascending order, so every prefix is division-closed and each staircase is
// produced exactly once. Throws ResourceLimitError past `node_cap` DFS nodes.
inline std::vector<MonomialIdeal> enumerate_monomial_ideals(int n, long k, size_t node_cap = 10'000'000) {
    if (n < 1 || k < 1) throw std::invalid_argument("enumerate_monomial_ideals: need n, k >= 1");
    std::vector<MonomialIdeal> out;
    std::vector<Monomial> cur{Monomial(n)};
    MonomialSet in_cur{Monomial(n)};
    size_t nodes = 0;

    std::function<void()> rec = [&]() {
        if (++nodes > node_cap) throw ResourceLimitError("enumerate_monomial_ideals: node cap exceeded");
        if (static_cast<long>(cur.size()) == k) {
            out.push_back(ideal_from_staircase(n, cur));
            return;
        }
        const Monomial& last = cur.back();
        std::vector<Monomial> cands;
        MonomialSet seen_cand;
        for (const auto& s : cur)
            for (int i = 1; i <= n; ++i) {
                Monomial c = mul(s, variable(n, i));
                if (in_cur.count(c) || seen_cand.count(c)) continue;
                if (!grevlex_greater(c, last)) continue;
                bool ok = true;
                for (int j = 0; j < n && ok; ++j)
                    if (c.e[static_cast<size_t>(j)] > 0) ok = in_cur.count(div(c, variable(n, j + 1))) > 0;
                if (!ok) continue;
                seen_cand.insert(c);
                cands.push_back(c);
            }
        std::sort(cands.begin(), cands.end(),
                  [](const Monomial& a, const Monomial& b) { return grevlex_less(a, b); });
        for (const auto& c : cands) {
            cur.push_back(c);
            in_cur.insert(c);
            rec();
            in_cur.erase(c);
            cur.pop_back();
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Single Borel moves toward larger indices applied to m: m*x_j/x_i for
// x_i | m, i < j. Staircases of strongly stable ideals are closed under these.
inline std::vector<Monomial> staircase_moves(const Monomial& m) {
    std::vector<Monomial> out;
    int n = m.n();
    for (int i = 1; i <= n; ++i) {
        if (m.e[static_cast<size_t>(i - 1)] == 0) continue;
        for (int j = i + 1; j <= n; ++j) out.push_back(mul(div(m, variable(n, i)), variable(n, j)));
    }
    return out;
}

// Nonempty move-closed subsets of `cands` with at most `budget` elements.
// Elements are processed grevlex-ascending; every single-move image of a
// candidate is grevlex-smaller and again a candidate, so inclusion only needs
// to check already-decided elements.
inline void move_closed_subsets(const std::vector<Monomial>& cands, long budget,
                                const std::function<void(const std::vector<Monomial>&)>& emit) {
    std::vector<Monomial> sorted = cands;
    std::sort(sorted.begin(), sorted.end(),
              [](const Monomial& a, const Monomial& b) { return grevlex_less(a, b); });
    std::vector<Monomial> chosen;
    MonomialSet chosen_set;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == sorted.size()) {
            if (!chosen.empty()) emit(chosen);
            return;
        }
        rec(idx + 1);  // exclude sorted[idx]
        if (static_cast<long>(chosen.size()) < budget) {
            bool closed = true;
            for (const auto& img : staircase_moves(sorted[idx]))
                if (!chosen_set.count(img)) {
                    closed = false;
                    break;
                }
            if (closed) {
                chosen.push_back(sorted[idx]);
                chosen_set.insert(sorted[idx]);
                rec(idx + 1);
                chosen_set.erase(sorted[idx]);
                chosen.pop_back();
            }
        }
    };
    rec(0);
}

}  // namespace detail

// All strongly stable ideals of colength k in n variables. The staircase is
// grown one degree slice at a time; each slice is a move-closed subset of the
// monomials whose maximal divisors all lie in the previous slice, so no
// non-stable staircase is ever materialized.
inline std::vector<MonomialIdeal> enumerate_strongly_stable(int n, long k) {
    if (n < 1 || k < 1) throw std::invalid_argument("enumerate_strongly_stable: need n, k >= 1");
    std::vector<MonomialIdeal> out;
    std::vector<Monomial> stairs{Monomial(n)};

    std::function<void(const std::vector<Monomial>&, long)> rec = [&](const std::vector<Monomial>& prev_slice,
                                                                      long remaining) {
        if (remaining == 0) {
            out.push_back(ideal_from_staircase(n, stairs));
            return;
        }
        MonomialSet prev(prev_slice.begin(), prev_slice.end());
        std::vector<Monomial> cands;
        MonomialSet seen;
        for (const auto& s : prev_slice)
            for (int i = 1; i <= n; ++i) {
                Monomial c = mul(s, variable(n, i));
                if (seen.count(c)) continue;
                bool ok = true;
                for (int j = 0; j < n && ok; ++j)
                    if (c.e[static_cast<size_t>(j)] > 0) ok = prev.count(div(c, variable(n, j + 1))) > 0;
                if (!ok) continue;
                seen.insert(c);
                cands.push_back(c);
            }
        detail::move_closed_subsets(cands, remaining, [&](const std::vector<Monomial>& slice) {
            size_t before = stairs.size();
            stairs.insert(stairs.end(), slice.begin(), slice.end());
            rec(slice, remaining - static_cast<long>(slice.size()));
            stairs.resize(before);
        });
    };
    rec(stairs, k - 1);
    std::sort(out.begin(), out.end());
    return out;
}

// The lex-segment ideal realizing H in n variables: the staircase keeps the
// H(d) lex-smallest monomials in each degree. Macaulay's theorem guarantees
// division closure exactly when H is an O-sequence; closure is still verified
// here so inadmissible input fails loudly.
inline MonomialIdeal lex_segment_ideal(const HilbertFunction& H, int n) {
    if (!is_o_sequence(H)) throw std::invalid_argument("lex_segment_ideal: H is not an O-sequence");
    if (H(1) > n) throw std::invalid_argument("lex_segment_ideal: H(1) exceeds variable count");
    std::vector<Monomial> stairs;
    for (int d = 0; d <= H.socle_degree(); ++d) {
        std::vector<Monomial> basis = monomial_basis(n, d);
        std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
            return lex_greater(b, a);  // lex-ascending
        });
        long want = H(static_cast<size_t>(d));
        if (want > static_cast<long>(basis.size()))
            throw std::invalid_argument("lex_segment_ideal: H exceeds ring dimension");
        stairs.insert(stairs.end(), basis.begin(), basis.begin() + want);
    }
    return ideal_from_staircase(n, stairs);  // validates division closure
}

}  // namespace punctual

#endif
