#ifndef PUNCTUAL_REGULAR_HPP
#define PUNCTUAL_REGULAR_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "punctual/matrix.hpp"
#include "punctual/polynomial.hpp"
#include "punctual/rng.hpp"

namespace punctual {

// Projective morphism given by N coordinate polynomials in n variables.
struct PolyMap {
    int n = 0;
    std::vector<Polynomial> coordinates;

    size_t N() const { return coordinates.size(); }
};

// The tau-fold lift of a map: at each point, the span of tau shifted copies
// of the value vector inside an ambient space of dimension tau * N.
struct BlockMap {
    PolyMap base;
    long tau = 1;

    size_t ambient() const { return base.N() * static_cast<size_t>(tau); }
};

struct RegularVerdict {
    bool pass = true;
    long trials_run = 0;
    std::vector<std::vector<Rational>> witness;  // the offending k points, sorted
};

struct SocleReduction {
    std::vector<Rational> lambda;
    bool verification = false;
};

namespace detail {

inline Rational eval_poly(const Polynomial& f, const std::vector<Rational>& x) {
    if (x.size() != static_cast<size_t>(f.nvars))
        throw std::invalid_argument("eval_poly: point dimension mismatch");
    Rational total = 0;
    for (const auto& [m, c] : f.terms) {
        Rational v = c;
        for (size_t i = 0; i < x.size(); ++i)
            for (int e = 0; e < m.e[i]; ++e) v *= x[i];
        total += v;
    }
    return total;
}

inline Polynomial compose_univariate(const Polynomial& f, const std::vector<Polynomial>& gamma) {
    Polynomial out = Polynomial::constant(1, 0);
    for (const auto& [m, c] : f.terms) {
        Polynomial term = Polynomial::constant(1, c);
        for (size_t i = 0; i < gamma.size(); ++i)
            for (int e = 0; e < m.e[i]; ++e) term = term * gamma[i];
        out = out + term;
    }
    return out;
}

inline Polynomial derivative_univariate(const Polynomial& f) {
    if (f.nvars != 1) throw std::invalid_argument("derivative_univariate: univariate only");
    Polynomial out = Polynomial::constant(1, 0);
    for (const auto& [m, c] : f.terms)
        if (m.e[0] > 0) out.add_term(Monomial(std::vector<int>{m.e[0] - 1}), c * m.e[0]);
    return out;
}

}  // namespace detail

// All monomials of degree < k as coordinates: a degree-k scheme imposes
// independent conditions on polynomials of degree at most k - 1.
inline PolyMap monomial_regular_map(int n, long k) {
    if (n < 1 || k < 1) throw std::invalid_argument("monomial_regular_map: need n, k >= 1");
    PolyMap f;
    f.n = n;
    for (long d = 0; d < k; ++d)
        for (const auto& m : monomial_basis(n, static_cast<int>(d)))
            f.coordinates.push_back(Polynomial::monomial(m));
    return f;
}

inline BlockMap tau_power(PolyMap f, long tau) {
    if (tau < 1) throw std::invalid_argument("tau_power: need tau >= 1");
    BlockMap F;
    F.base = std::move(f);
    F.tau = tau;
    return F;
}

inline QMatrix random_projection(size_t rows, size_t cols, std::uint64_t seed) {
    Rng rng(seed);
    QMatrix P(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) P.a[r][c] = Rational(rng.uniform(-9, 9));
    return P;
}

// Sampled k-regularity: draw k distinct rational points with coordinates in
// [-20, 20], stack the tau block rows per point (optionally pushed through a
// projection), and demand rank k*tau. Deterministic for a fixed seed; the
// first failing tuple is returned as witness.
inline RegularVerdict check_k_regular(const BlockMap& F, long k, long trials, std::uint64_t seed,
                                      const std::optional<QMatrix>& projection = {}) {
    if (k < 1 || trials < 1) throw std::invalid_argument("check_k_regular: need k, trials >= 1");
    const size_t N = F.base.N();
    const size_t amb = F.ambient();
    if (projection && projection->cols != amb)
        throw std::invalid_argument("check_k_regular: projection width must equal tau * N");
    const size_t width = projection ? projection->rows : amb;
    Rng rng(seed);
    RegularVerdict verdict;
    for (long trial = 0; trial < trials; ++trial) {
        std::vector<std::vector<Rational>> pts;
        while (pts.size() < static_cast<size_t>(k)) {
            std::vector<Rational> p;
            for (int i = 0; i < F.base.n; ++i) p.push_back(Rational(rng.uniform(-20, 20)));
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
        }
        QMatrix M(static_cast<size_t>(k * F.tau), width);
        size_t rix = 0;
        for (const auto& p : pts) {
            std::vector<Rational> vals(N);
            for (size_t c = 0; c < N; ++c) vals[c] = detail::eval_poly(F.base.coordinates[c], p);
            for (long j = 0; j < F.tau; ++j, ++rix) {
                if (!projection) {
                    for (size_t c = 0; c < N; ++c) M.a[rix][static_cast<size_t>(j) * N + c] = vals[c];
                } else {
                    for (size_t r = 0; r < width; ++r) {
                        Rational acc = 0;
                        for (size_t c = 0; c < N; ++c)
                            acc += projection->a[r][static_cast<size_t>(j) * N + c] * vals[c];
                        M.a[rix][r] = acc;
                    }
                }
            }
        }
        ++verdict.trials_run;
        if (rank(M) != static_cast<size_t>(k * F.tau)) {
            verdict.pass = false;
            std::sort(pts.begin(), pts.end());
            verdict.witness = std::move(pts);
            return verdict;
        }
    }
    return verdict;
}

// Rank of the k-jet of f along the curve gamma at parameter p: rows are the
// 0th..(k-1)th derivatives of each composite coordinate, evaluated at p.
inline long curvilinear_span_dim(const PolyMap& f, const std::vector<Polynomial>& gamma,
                                 const Rational& p, long k) {
    if (static_cast<int>(gamma.size()) != f.n)
        throw std::invalid_argument("curvilinear_span_dim: gamma needs one component per variable");
    for (const auto& g : gamma)
        if (g.nvars != 1) throw std::invalid_argument("curvilinear_span_dim: gamma must be univariate");
    if (k < 1) throw std::invalid_argument("curvilinear_span_dim: need k >= 1");
    QMatrix M(static_cast<size_t>(k), f.N());
    for (size_t c = 0; c < f.N(); ++c) {
        Polynomial comp = detail::compose_univariate(f.coordinates[c], gamma);
        for (long r = 0; r < k; ++r) {
            M.a[static_cast<size_t>(r)][c] = detail::eval_poly(comp, {p});
            comp = detail::derivative_univariate(comp);
        }
    }
    return static_cast<long>(rank(M));
}

// The length-4 socle-reduction instance: lambda spans the joint orthogonal
// complement of alpha and beta, the subscheme cut by lambda has a 6-dim
// span in k^8, and the point determined by (alpha, beta) must lie inside.
inline SocleReduction socle_reduction_example(const std::vector<Rational>& alpha,
                                              const std::vector<Rational>& beta) {
    if (alpha.size() != 3 || beta.size() != 3)
        throw std::invalid_argument("socle_reduction_example: alpha, beta must be 3-vectors");
    auto zero = [](const std::vector<Rational>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
    };
    if (zero(alpha) && zero(beta))
        throw std::invalid_argument("socle_reduction_example: alpha and beta are both zero");

    SocleReduction out;
    out.lambda = kernel_basis(QMatrix::from_rows({alpha, beta})).front();
    size_t j = 0;
    while (out.lambda[j] == 0) ++j;
    std::vector<size_t> rest;
    for (size_t i = 0; i < 3; ++i)
        if (i != j) rest.push_back(i);
    std::vector<Rational> a(3, Rational(0)), b(3, Rational(0));
    a[rest[0]] = 1;
    a[j] = -out.lambda[rest[0]] / out.lambda[j];
    b[rest[1]] = 1;
    b[j] = -out.lambda[rest[1]] / out.lambda[j];

    // Basis of <Z'>: e1, f1, and the a- and b-combinations in each block.
    std::vector<std::vector<Rational>> rows(6, std::vector<Rational>(8, Rational(0)));
    rows[0][0] = 1;
    rows[1][4] = 1;
    for (size_t i = 0; i < 3; ++i) {
        rows[2][1 + i] = a[i];
        rows[3][1 + i] = b[i];
        rows[4][5 + i] = a[i];
        rows[5][5 + i] = b[i];
    }
    std::vector<Rational> point(8, Rational(0));
    for (size_t i = 0; i < 3; ++i) {
        point[1 + i] = alpha[i];
        point[5 + i] = beta[i];
    }
    out.verification = in_row_space(QMatrix::from_rows(std::move(rows)), point);
    return out;
}

}  // namespace punctual

#endif
