#ifndef PUNCTUAL_LOCI_HPP
#define PUNCTUAL_LOCI_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "punctual/hilbert.hpp"
#include "punctual/rational.hpp"

namespace punctual {

// Locus dimension against the expected dimension (n-1)(k-1); a locus is
// negligible when its dimension does not exceed the expected one.
struct MarginReport {
    std::string label;
    long locus = 0;
    long expected = 0;
    long margin = 0;  // locus - expected
    bool violating = false;

    const char* verdict() const { return violating ? "violating" : "negligible"; }
};

inline MarginReport make_margin(std::string label, long locus, long expected) {
    MarginReport r;
    r.label = std::move(label);
    r.locus = locus;
    r.expected = expected;
    r.margin = locus - expected;
    r.violating = r.margin > 0;
    return r;
}

// Dimension of the locus of graded Gorenstein quotients with Hilbert
// function (1, n, b, 1, ..., 1) of socle degree s, inside the punctual
// Hilbert scheme (cell dimension plus the fiber bookkeeping terms).
inline long gorenstein_locus_dim(int n, long b, int s) {
    if (s < 3) throw std::invalid_argument("gorenstein_locus_dim: need s >= 3");
    if (b < 1 || b > n) throw std::invalid_argument("gorenstein_locus_dim: need 1 <= b <= n");
    return (n - 1) * static_cast<long>(s - 3) + (n - b) * b + binomial_l(b + 2, 3) - 1 +
           binomial_l(n + 2, 2) - (1 + n + b);
}

// Upper bound for the locus with Hilbert function H = (1, n, b, 1, ..., 1)
// and at most two socle generators: the quotient either has a minimal
// generator in degree two on top of a Gorenstein one (first branch) or is
// Gorenstein with the full H (second branch).
inline long h3eq1_bound(const HilbertFunction& H, int n) {
    int s = H.socle_degree();
    if (s < 3) throw std::invalid_argument("h3eq1_bound: need socle degree >= 3");
    if (H(0) != 1 || H(1) != n) throw std::invalid_argument("h3eq1_bound: H must start (1, n, ...)");
    for (int i = 3; i <= s; ++i)
        if (H(static_cast<size_t>(i)) != 1)
            throw std::invalid_argument("h3eq1_bound: H must be (1, n, b, 1, ..., 1)");
    long b = H(2);
    std::optional<long> best;
    if (b >= 2 && b - 1 <= n) {
        long v = gorenstein_locus_dim(n, b - 1, s) + binomial_l(n + 1, 2) - b - 1;
        best = v;
    }
    if (b <= n) {
        long v = gorenstein_locus_dim(n, b, s);
        if (!best || v > *best) best = v;
    }
    if (!best) throw std::invalid_argument("h3eq1_bound: H(2) out of range, need H(2) <= n + 1");
    return *best;
}

// Every H = (1, n, b, 1, ..., 1) with total at most sum_cap, checked for
// negligibility of the tau <= 2 locus. Reductions to b <= n + 1 and socle
// degree >= 3 keep the sweep finite without losing cases.
inline std::vector<MarginReport> check_h3eq1_negligible(long sum_cap = 12) {
    std::vector<MarginReport> out;
    for (int n = 1; 1 + n + 1 + 1 <= sum_cap; ++n)
        for (long b = 1; b <= n + 1 && 1 + n + b + 1 <= sum_cap; ++b)
            for (int s = 3; 1 + n + b + (s - 2) <= sum_cap; ++s) {
                std::vector<long> h{1, n, b};
                for (int i = 3; i <= s; ++i) h.push_back(1);
                HilbertFunction H(h);
                if (!is_o_sequence(H)) continue;
                long expected = (H.sum() - 1) * (n - 1);
                out.push_back(make_margin(H.str(), h3eq1_bound(H, n), expected));
            }
    return out;
}

// Coefficients of the nonnegative-degree tangent series for the Borel-fixed
// point with H(2) = 2 and parameters (n, s, t): entry [d] is the coefficient
// of T^d, d = 0..s-2; contributions at negative powers vanish.
inline std::vector<long> h2eq2_tangent_series(int n, int s, int t) {
    if (n < 2) throw std::invalid_argument("h2eq2_tangent_series: need n >= 2");
    if (t < 1 || t > s) throw std::invalid_argument("h2eq2_tangent_series: need 1 <= t <= s");
    std::vector<long> c(static_cast<size_t>(std::max(s - 1, 1)), 0);
    auto add = [&](int expo, long v) {
        if (expo >= 0) c[static_cast<size_t>(expo)] += v;
    };
    add(s - t - 1, 1);
    long q = binomial_l(n + 1, 2) - 2 - (n - 1);
    add(t - 2, q);
    add(s - 2, q);
    for (int i = 2; i <= s; ++i) add(i - 2, static_cast<long>(n - 1) * (i <= t ? 2 : 1));
    return c;
}

// Colength of the (n, s, t) algebra the series above belongs to.
inline long h2eq2_colength(int n, int s, int t) { return n + s + t - 1; }

// Fibers over the associated-graded locus for H = (1, n, a, b): the degree
// two generators move freely into degree three.
inline long fiber_dim(int n, long a, long b) { return (binomial_l(n + 1, 2) - a) * b; }

// The certified interpolation bound N(tau, k, n).
inline long N_bound(long tau, long k, int n) {
    if (tau < 1 || k < 1 || n < 1) throw std::invalid_argument("N_bound: need tau, k, n >= 1");
    if (k <= 8 || (tau <= 2 && k <= 11)) return (n - 1) * (k - 1) + tau * k;
    return k * n - 1 + tau * k;
}

// max_i { tau*i - 1 + dims[i] } over i = 1..k, dims[i-1] = dim of the i-th
// punctual stratum.
inline long areole_bound(long tau, long k, const std::vector<long>& dims) {
    if (static_cast<long>(dims.size()) != k)
        throw std::invalid_argument("areole_bound: dims must have k entries");
    long best = 0;
    bool first = true;
    for (long i = 1; i <= k; ++i) {
        long v = tau * i - 1 + dims[static_cast<size_t>(i - 1)];
        if (first || v > best) best = v;
        first = false;
    }
    return best;
}

enum class CounterexampleKind { tau_geq_3, tau_1, tau_2 };

// Margins of the three non-negligible-locus constructions, computed by
// direct subtraction of the locus formula from the expected dimension.
inline MarginReport counterexample_margin(CounterexampleKind kind, int n) {
    switch (kind) {
        case CounterexampleKind::tau_geq_3: {
            if (n < 2) throw std::invalid_argument("counterexample_margin: need n >= 2");
            long locus = 3 * (binomial_l(n + 1, 2) - 3);
            long expected = static_cast<long>(n - 1) * (n + 3);
            return make_margin("tau>=3 net of quadrics, n=" + std::to_string(n), locus, expected);
        }
        case CounterexampleKind::tau_1: {
            if (n < 3) throw std::invalid_argument("counterexample_margin: need n >= 3");
            long locus = gorenstein_locus_dim(n, n, 3);
            long expected = static_cast<long>(n - 1) * (2 * n + 1);
            return make_margin("tau=1 Gorenstein (1,n,n,1), n=" + std::to_string(n), locus, expected);
        }
        case CounterexampleKind::tau_2: {
            if (n < 4) throw std::invalid_argument("counterexample_margin: need n >= 4");
            std::vector<long> h{1, n, n + 1, 1};
            HilbertFunction H(h);
            long locus = h3eq1_bound(H, n);
            long expected = static_cast<long>(n - 1) * (2 * n + 2);
            return make_margin("tau=2 with H=" + H.str(), locus, expected);
        }
    }
    throw std::invalid_argument("counterexample_margin: unknown kind");
}

// The four upper estimates for a cell dimension; whichever inputs exist
// produce bounds, and the minimum of those is the usable one.
struct DimensionEstimate {
    long T0 = 0;
    long T_pos = 0;
    std::optional<long> base_dim, fiber_dim;
    std::optional<long> tangent;            // T0 + T_pos
    std::optional<long> base_tangent_fiber; // base_dim + T_pos
    std::optional<long> tangent_base_fiber; // T0 + fiber_dim
    std::optional<long> base_fiber;         // base_dim + fiber_dim
    long best = 0;
};

inline DimensionEstimate dimension_estimates(long T0, long T_pos, std::optional<long> base_dim = {},
                                             std::optional<long> fiber_dim = {}) {
    DimensionEstimate e;
    e.T0 = T0;
    e.T_pos = T_pos;
    e.base_dim = base_dim;
    e.fiber_dim = fiber_dim;
    e.tangent = T0 + T_pos;
    if (base_dim) e.base_tangent_fiber = *base_dim + T_pos;
    if (fiber_dim) e.tangent_base_fiber = T0 + *fiber_dim;
    if (base_dim && fiber_dim) e.base_fiber = *base_dim + *fiber_dim;
    e.best = *e.tangent;
    for (const auto& b : {e.base_tangent_fiber, e.tangent_base_fiber, e.base_fiber})
        if (b && *b < e.best) e.best = *b;
    return e;
}

}  // namespace punctual

#endif
