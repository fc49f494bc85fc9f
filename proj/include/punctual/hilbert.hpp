#ifndef PUNCTUAL_HILBERT_HPP
#define PUNCTUAL_HILBERT_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "punctual/rational.hpp"

namespace punctual {

// Hilbert function of a length-k algebra, written (1, H(1), ..., H(s)) with
// every entry positive and trailing zeros trimmed. s is the socle degree.
struct HilbertFunction {
    std::vector<long> h;

    HilbertFunction() = default;
    explicit HilbertFunction(std::vector<long> values) : h(std::move(values)) {
        while (!h.empty() && h.back() == 0) h.pop_back();
        if (h.empty() || h[0] != 1) throw std::invalid_argument("HilbertFunction: H(0) must be 1");
        for (long v : h)
            if (v <= 0) throw std::invalid_argument("HilbertFunction: interior entries must be positive");
    }

    long operator()(size_t d) const { return d < h.size() ? h[d] : 0; }
    int socle_degree() const { return static_cast<int>(h.size()) - 1; }
    long sum() const {
        long s = 0;
        for (long v : h) s += v;
        return s;
    }
    bool operator==(const HilbertFunction& o) const { return h == o.h; }
    bool operator!=(const HilbertFunction& o) const { return h != o.h; }
    bool operator<(const HilbertFunction& o) const {
        return std::lexicographical_compare(h.begin(), h.end(), o.h.begin(), o.h.end());
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < h.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(h[i]);
        }
        return s + ")";
    }
};

// The d-th Macaulay representation of h: unique a_d > a_{d-1} > ... > a_j >= j >= 1
// with h = sum C(a_i, i). Returned as pairs (a_i, i), i descending from d.
inline std::vector<std::pair<long, long>> macaulay_representation(long h, long d) {
    if (h < 0 || d < 1) throw std::invalid_argument("macaulay_representation: need h >= 0, d >= 1");
    std::vector<std::pair<long, long>> rep;
    long rem = h;
    long i = d;
    while (rem > 0 && i >= 1) {
        // Greedy: the largest a with C(a, i) <= rem.
        long a = i - 1;  // C(i-1, i) = 0
        while (binomial(a + 1, i) <= rem) ++a;
        rep.emplace_back(a, i);
        rem -= binomial_l(a, i);
        --i;
    }
    return rep;
}

// Maximum admissible H(d+1) given H(d) = h: replace each C(a_i, i) in the
// d-th Macaulay representation by C(a_i + 1, i + 1).
inline long macaulay_growth_bound(long h, long d) {
    long bound = 0;
    for (auto [a, i] : macaulay_representation(h, d)) bound += binomial_l(a + 1, i + 1);
    return bound;
}

// Macaulay's criterion: H is an O-sequence iff every consecutive growth obeys
// the bound. Growth from H(0)=1 to H(1) is unconstrained.
inline bool is_o_sequence(const HilbertFunction& H) {
    for (int d = 1; d < static_cast<int>(H.h.size()) - 1; ++d)
        if (H.h[static_cast<size_t>(d + 1)] > macaulay_growth_bound(H.h[static_cast<size_t>(d)], d))
            return false;
    return true;
}

// Filters for enumeration: exact H(1), per-index lower/upper bounds, and a
// socle-type cap on the trailing value H(s).
struct HFConstraints {
    std::optional<long> exact_h1;
    std::vector<long> min_at;  // indexed by degree; missing entries mean 0
    std::vector<long> max_at;  // indexed by degree; missing entries mean unbounded
    std::optional<long> max_trailing;

    long min_bound(size_t d) const { return d < min_at.size() ? min_at[d] : 0; }
    std::optional<long> max_bound(size_t d) const {
        if (d < max_at.size()) return max_at[d];
        return std::nullopt;
    }
};

// All O-sequences with sum exactly k meeting the constraints, in lexicographic
// (elementwise, ascending) order. Depth-first with Macaulay growth and
// remaining-sum pruning.
inline std::vector<HilbertFunction> enumerate_o_sequences(long k, const HFConstraints& c = {}) {
    if (k < 1) throw std::invalid_argument("enumerate_o_sequences: need k >= 1");
    std::vector<HilbertFunction> out;
    std::vector<long> cur{1};

    auto trailing_ok = [&](long last) {
        return !c.max_trailing || last <= *c.max_trailing;
    };
    auto close_here = [&](long remaining) {
        if (remaining != 0) return;
        // Closing is only allowed if no pending minimum at a later index.
        for (size_t d = cur.size(); d < c.min_at.size(); ++d)
            if (c.min_at[d] > 0) return;
        if (!trailing_ok(cur.back())) return;
        out.emplace_back(HilbertFunction(cur));
    };

    std::function<void(long)> rec = [&](long remaining) {
        close_here(remaining);
        if (remaining == 0) return;
        size_t d = cur.size();  // degree being chosen
        long lo = std::max<long>(1, c.min_bound(d));
        long growth = (d == 1) ? remaining : macaulay_growth_bound(cur.back(), static_cast<long>(d) - 1);
        long hi = std::min(remaining, growth);
        if (d == 1 && c.exact_h1) {
            lo = std::max(lo, *c.exact_h1);
            hi = std::min(hi, *c.exact_h1);
        }
        if (auto mx = c.max_bound(d)) hi = std::min(hi, *mx);
        for (long v = lo; v <= hi; ++v) {
            cur.push_back(v);
            rec(remaining - v);
            cur.pop_back();
        }
    };
    rec(k - 1);
    return out;
}

// Dimension of the curvilinear locus: (n-1)(k-1).
inline long expected_dimension(long n, long k) {
    if (n < 1 || k < 1) throw std::invalid_argument("expected_dimension: need n, k >= 1");
    return (n - 1) * (k - 1);
}

}  // namespace punctual

#endif
