#ifndef PUNCTUAL_GRADED_IDEAL_HPP
#define PUNCTUAL_GRADED_IDEAL_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "punctual/errors.hpp"
#include "punctual/hilbert.hpp"
#include "punctual/matrix.hpp"
#include "punctual/monomial_ideal.hpp"
#include "punctual/polynomial.hpp"

namespace punctual {

// A homogeneous ideal of finite colength, stored degreewise: for each degree
// e = 0..s+1 a reduced echelon basis of I_e in the coordinates of
// monomial_basis(n, e) (grevlex-descending columns). Everything downstream
// (quotient reduction, tangent computations) reads these bases.
struct GradedIdeal {
    int n = 0;
    int s = 0;  // socle degree of R/I
    HilbertFunction quotient_hf;
    std::vector<Rref> basis;                 // index e = 0..s+1
    std::vector<Polynomial> gens;            // minimal generators, ascending degree
    std::vector<long> min_gens_by_degree;    // index e = 0..s+1
    std::optional<MonomialIdeal> monomial_source;

    long colength() const { return quotient_hf.sum(); }

    long dim_ideal(int e) const {
        if (e < 0) return 0;
        if (e <= s + 1) return static_cast<long>(basis[static_cast<size_t>(e)].rank());
        return binomial_l(n + e - 1, e);
    }

    long quotient_dim(int e) const {
        if (e < 0 || e > s) return 0;
        return quotient_hf(static_cast<size_t>(e));
    }

    // Monomials of R_e whose classes form the standard basis of (R/I)_e:
    // the non-pivot columns of the degree-e echelon basis.
    std::vector<Monomial> quotient_basis(int e) const {
        std::vector<Monomial> out;
        if (e < 0 || e > s) return out;
        const Rref& b = basis[static_cast<size_t>(e)];
        std::vector<Monomial> all = monomial_basis(n, e);
        std::vector<bool> is_pivot(all.size(), false);
        for (size_t c : b.pivot_cols) is_pivot[c] = true;
        for (size_t c = 0; c < all.size(); ++c)
            if (!is_pivot[c]) out.push_back(all[c]);
        return out;
    }

    // Coordinates of v + I_e in the standard basis of (R/I)_e: subtract the
    // echelon rows to clear every pivot column, then read off the rest.
    std::vector<Rational> reduce(int e, const std::vector<Rational>& v) const {
        if (e < 0 || e > s) return {};
        const Rref& b = basis[static_cast<size_t>(e)];
        if (v.size() != b.m.cols && !(b.m.rows == 0 && v.size() == static_cast<size_t>(binomial_l(n + e - 1, e))))
            throw std::invalid_argument("GradedIdeal::reduce: wrong coordinate length");
        std::vector<Rational> w = v;
        for (size_t r = 0; r < b.pivot_cols.size(); ++r) {
            const Rational f = w[b.pivot_cols[r]];
            if (f == 0) continue;
            for (size_t c = 0; c < w.size(); ++c)
                if (b.m.a[r][c] != 0) w[c] -= f * b.m.a[r][c];
        }
        std::vector<bool> is_pivot(w.size(), false);
        for (size_t c : b.pivot_cols) is_pivot[c] = true;
        std::vector<Rational> out;
        for (size_t c = 0; c < w.size(); ++c)
            if (!is_pivot[c]) out.push_back(w[c]);
        return out;
    }

    // Reduction of a single monomial class (degree read off the monomial).
    std::vector<Rational> reduce_monomial(const Monomial& m) const {
        int e = m.degree();
        if (e > s) return {};
        std::vector<Monomial> all = monomial_basis(n, e);
        std::vector<Rational> v(all.size(), Rational(0));
        auto it = std::find(all.begin(), all.end(), m);
        v[static_cast<size_t>(it - all.begin())] = 1;
        return reduce(e, v);
    }
};

namespace detail {

// Coordinates of a homogeneous polynomial in monomial_basis(n, deg) order.
inline std::vector<Rational> poly_coords(const Polynomial& p, const std::vector<Monomial>& cols) {
    std::vector<Rational> v(cols.size(), Rational(0));
    for (const auto& [m, c] : p.terms) {
        auto it = std::find(cols.begin(), cols.end(), m);
        if (it == cols.end()) throw std::invalid_argument("poly_coords: monomial outside basis");
        v[static_cast<size_t>(it - cols.begin())] = c;
    }
    return v;
}

}  // namespace detail

// Degreewise view of a finite-colength monomial ideal. The echelon bases are
// the ideal's monomials as unit rows, so no elimination happens here.
inline GradedIdeal graded_ideal_from_monomial(const MonomialIdeal& I) {
    if (!I.finite_colength())
        throw std::invalid_argument("graded_ideal_from_monomial: infinite colength");
    GradedIdeal G;
    G.n = I.n;
    G.quotient_hf = I.hilbert_function();
    G.s = G.quotient_hf.socle_degree();
    MonomialSet stairs(I.staircase().begin(), I.staircase().end());
    for (int e = 0; e <= G.s + 1; ++e) {
        std::vector<Monomial> cols = monomial_basis(I.n, e);
        Rref b;
        b.m = QMatrix(0, cols.size());
        b.m.cols = cols.size();
        for (size_t c = 0; c < cols.size(); ++c) {
            if (stairs.count(cols[c])) continue;
            std::vector<Rational> row(cols.size(), Rational(0));
            row[c] = 1;
            b.m.append_row(std::move(row));
            b.pivot_cols.push_back(c);
        }
        G.basis.push_back(std::move(b));
    }
    G.min_gens_by_degree.assign(static_cast<size_t>(G.s) + 2, 0);
    std::vector<Monomial> sorted_gens = I.gens;
    std::sort(sorted_gens.begin(), sorted_gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return grevlex_greater(a, b);
    });
    for (const auto& g : sorted_gens) {
        G.gens.push_back(Polynomial::monomial(g));
        ++G.min_gens_by_degree[static_cast<size_t>(g.degree())];
    }
    G.monomial_source = I;
    return G;
}

// Build the degreewise bases from arbitrary homogeneous generators:
// I_e = R_1 * I_(e-1) + span of the degree-e inputs. Stops at the first
// degree where I_e fills R_e; a cap bounds the search so an input of
// infinite colength fails loudly instead of looping.
inline GradedIdeal graded_ideal_from_generators(const std::vector<Polynomial>& polys, int n,
                                                int degree_cap = 64) {
    if (n < 1) throw std::invalid_argument("graded_ideal_from_generators: need n >= 1");
    for (const auto& p : polys) {
        if (p.nvars != n) throw std::invalid_argument("graded_ideal_from_generators: wrong variable count");
        if (p.is_zero()) throw std::invalid_argument("graded_ideal_from_generators: zero generator");
        if (!p.is_homogeneous())
            throw std::invalid_argument("graded_ideal_from_generators: generators must be homogeneous");
    }

    GradedIdeal G;
    G.n = n;
    std::vector<long> hf;
    std::vector<std::vector<Polynomial>> gens_by_deg;  // selected minimal generators
    std::vector<Rref> bases;
    int full_at = -1;

    for (int e = 0; full_at < 0; ++e) {
        if (e > degree_cap)
            throw ResourceLimitError("graded_ideal_from_generators: colength not finite within degree cap");
        std::vector<Monomial> cols = monomial_basis(n, e);
        QMatrix span(0, cols.size());
        span.cols = cols.size();
        // Carry R_1 * I_(e-1) forward from the previous echelon basis.
        if (e > 0) {
            const Rref& prev = bases[static_cast<size_t>(e - 1)];
            std::vector<Monomial> prev_cols = monomial_basis(n, e - 1);
            for (size_t r = 0; r < prev.m.rows; ++r)
                for (int i = 1; i <= n; ++i) {
                    std::vector<Rational> row(cols.size(), Rational(0));
                    for (size_t c = 0; c < prev_cols.size(); ++c) {
                        if (prev.m.a[r][c] == 0) continue;
                        Monomial m = mul(prev_cols[c], variable(n, i));
                        auto it = std::find(cols.begin(), cols.end(), m);
                        row[static_cast<size_t>(it - cols.begin())] = prev.m.a[r][c];
                    }
                    span.append_row(std::move(row));
                }
        }
        Rref carried = rref(span);
        size_t carried_rank = carried.rank();

        // Degree-e inputs that add a new pivot become minimal generators.
        gens_by_deg.emplace_back();
        QMatrix work = std::move(carried.m);
        work.a.resize(carried_rank);
        work.rows = carried_rank;
        for (const auto& p : polys) {
            if (p.degree() != e) continue;
            std::vector<Rational> row = detail::poly_coords(p, cols);
            QMatrix ext = work;
            ext.append_row(row);
            Rref r2 = rref(ext);
            if (r2.rank() > work.rows) {
                gens_by_deg.back().push_back(p);
                work = std::move(r2.m);
                work.a.resize(r2.rank());
                work.rows = r2.rank();
            }
        }
        Rref be = rref(work);
        be.m.a.resize(be.rank());
        be.m.rows = be.rank();
        long dim_full = static_cast<long>(cols.size());
        long dim_ideal = static_cast<long>(be.rank());
        hf.push_back(dim_full - dim_ideal);
        bases.push_back(std::move(be));
        if (dim_ideal == dim_full) full_at = e;
    }

    if (full_at == 0) throw std::invalid_argument("graded_ideal_from_generators: unit ideal");
    G.s = full_at - 1;
    hf.resize(static_cast<size_t>(G.s) + 1);
    G.quotient_hf = HilbertFunction(hf);
    G.basis = std::move(bases);
    G.min_gens_by_degree.assign(static_cast<size_t>(G.s) + 2, 0);
    for (size_t e = 0; e < gens_by_deg.size() && e < G.min_gens_by_degree.size(); ++e) {
        G.min_gens_by_degree[e] = static_cast<long>(gens_by_deg[e].size());
        for (const auto& p : gens_by_deg[e]) G.gens.push_back(p);
    }
    return G;
}

}  // namespace punctual

#endif
