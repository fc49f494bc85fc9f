#ifndef PUNCTUAL_APOLARITY_HPP
#define PUNCTUAL_APOLARITY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "punctual/graded_ideal.hpp"
#include "punctual/hilbert.hpp"
#include "punctual/matrix.hpp"
#include "punctual/polynomial.hpp"
#include "punctual/rng.hpp"

namespace punctual {

// Finite set of dual-variable polynomials generating a Macaulay inverse
// system; contraction by R turns their span into the module of partials.
struct InverseSystem {
    int n = 0;
    std::vector<Polynomial> generators;

    InverseSystem(int nvars, std::vector<Polynomial> gens) : n(nvars), generators(std::move(gens)) {
        if (n < 1) throw std::invalid_argument("InverseSystem: need at least one variable");
        if (generators.empty()) throw std::invalid_argument("InverseSystem: no generators");
        for (const auto& g : generators) {
            if (g.nvars != n)
                throw std::invalid_argument("InverseSystem: generator variable count mismatch");
            if (g.is_zero()) throw std::invalid_argument("InverseSystem: zero generator");
        }
    }

    int max_degree() const {
        int d = 0;
        for (const auto& g : generators) d = std::max(d, g.degree());
        return d;
    }
    bool graded() const {
        return std::all_of(generators.begin(), generators.end(),
                           [](const Polynomial& g) { return g.is_homogeneous(); });
    }
};

// Invariants of the (local) apolar algebra A = R / Ann(generators).
struct ApolarReport {
    long k = 0;               // dim_k A
    HilbertFunction local_hf; // Hilbert function of the associated graded algebra
    long tau = 0;             // socle dimension = minimal generator count of the partials module
    bool graded = false;      // all dual generators homogeneous
};

namespace detail {

// Dual monomials of degree max_deg down to 0, with an index lookup. The
// descending-degree layout makes leading partials come first in rref bases.
struct DualCoords {
    std::vector<Monomial> cols;
    std::unordered_map<Monomial, size_t, MonomialHash> index;

    DualCoords(int n, int max_deg) {
        for (int d = max_deg; d >= 0; --d)
            for (const auto& m : monomial_basis(n, d)) {
                index.emplace(m, cols.size());
                cols.push_back(m);
            }
    }
    std::vector<Rational> coords(const Polynomial& p) const {
        std::vector<Rational> v(cols.size(), Rational(0));
        for (const auto& [m, c] : p.terms) v[index.at(m)] = c;
        return v;
    }
};

}  // namespace detail

// Annihilator of a homogeneous inverse system, assembled degree by degree:
// Ann_e is the joint kernel of g -> g o f_i on R_e, and degree max+1 is all
// of R there, so the generated ideal is Artinian by construction.
inline GradedIdeal apolar_ideal(const InverseSystem& fs) {
    for (const auto& g : fs.generators)
        if (!g.is_homogeneous())
            throw std::invalid_argument(
                "apolar_ideal: inhomogeneous generator; use apolar_local_invariants");
    const int n = fs.n;
    const int D = fs.max_degree();
    std::vector<Polynomial> found;
    for (int e = 0; e <= D + 1; ++e) {
        std::vector<Monomial> re = monomial_basis(n, e);
        if (e == D + 1) {
            for (const auto& m : re) found.push_back(Polynomial::monomial(m));
            break;
        }
        std::vector<std::vector<Monomial>> tgt;
        size_t height = 0;
        for (const auto& f : fs.generators) {
            int td = f.degree() - e;
            tgt.push_back(td < 0 ? std::vector<Monomial>{} : monomial_basis(n, td));
            height += tgt.back().size();
        }
        QMatrix A(height, re.size());
        for (size_t c = 0; c < re.size(); ++c) {
            size_t off = 0;
            for (size_t i = 0; i < fs.generators.size(); ++i) {
                if (tgt[i].empty()) continue;
                Polynomial img = contract(Polynomial::monomial(re[c]), fs.generators[i]);
                for (const auto& [m, coef] : img.terms) {
                    auto it = std::find(tgt[i].begin(), tgt[i].end(), m);
                    A.a[off + static_cast<size_t>(it - tgt[i].begin())][c] = coef;
                }
                off += tgt[i].size();
            }
        }
        for (const auto& kv : kernel_basis(A)) {
            Polynomial p = Polynomial::constant(n, 0);
            for (size_t c = 0; c < re.size(); ++c)
                if (kv[c] != 0) p.add_term(re[c], kv[c]);
            found.push_back(std::move(p));
        }
    }
    return graded_ideal_from_generators(found, n);
}

// Deterministic basis of M = R o {f_i} inside the dual space: the rref of all
// monomial contractions of all generators, coordinates in descending degree.
inline std::vector<Polynomial> partials_module(const InverseSystem& fs) {
    const int n = fs.n;
    detail::DualCoords coords(n, fs.max_degree());
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : fs.generators)
        for (int gd = 0; gd <= f.degree(); ++gd)
            for (const auto& g : monomial_basis(n, gd)) {
                Polynomial img = contract(Polynomial::monomial(g), f);
                if (!img.is_zero()) rows.push_back(coords.coords(img));
            }
    Rref rr = rref(QMatrix::from_rows(std::move(rows)));
    std::vector<Polynomial> basis;
    for (size_t r = 0; r < rr.rank(); ++r) {
        Polynomial p = Polynomial::constant(n, 0);
        for (size_t c = 0; c < coords.cols.size(); ++c)
            if (rr.m.a[r][c] != 0) p.add_term(coords.cols[c], rr.m.a[r][c]);
        basis.push_back(std::move(p));
    }
    return basis;
}

// Local invariants of A = R / Ann(f_1..f_t), inhomogeneous generators
// allowed. A acts faithfully on generator tuples (g o f_1, ..., g o f_t), so
// k and the filtration dims m^j A are ranks of contraction tuples; tau is
// Nakayama on the partials module M itself: dim M - dim(m o M).
inline ApolarReport apolar_local_invariants(const InverseSystem& fs) {
    const int n = fs.n;
    const int D = fs.max_degree();
    const size_t t = fs.generators.size();

    std::vector<detail::DualCoords> comp;
    std::vector<size_t> offset(t);
    size_t width = 0;
    for (size_t i = 0; i < t; ++i) {
        comp.emplace_back(n, fs.generators[i].degree());
        offset[i] = width;
        width += comp[i].cols.size();
    }

    detail::IncrementalSpan tuples(width);
    std::vector<long> filt(static_cast<size_t>(D) + 2, 0);  // filt[j] = dim m^j A
    for (int j = D; j >= 0; --j) {
        for (const auto& g : monomial_basis(n, j)) {
            Polynomial gp = Polynomial::monomial(g);
            std::vector<Rational> v(width, Rational(0));
            bool nz = false;
            for (size_t i = 0; i < t; ++i) {
                Polynomial img = contract(gp, fs.generators[i]);
                for (const auto& [m, c] : img.terms) {
                    v[offset[i] + comp[i].index.at(m)] = c;
                    nz = true;
                }
            }
            if (nz) tuples.insert(std::move(v));
        }
        filt[static_cast<size_t>(j)] = static_cast<long>(tuples.dim());
    }

    ApolarReport rep;
    rep.k = filt[0];
    std::vector<long> h(static_cast<size_t>(D) + 1);
    for (int j = 0; j <= D; ++j) h[static_cast<size_t>(j)] = filt[j] - filt[j + 1];
    rep.local_hf = HilbertFunction(h);
    rep.graded = fs.graded();

    detail::DualCoords dual(n, D);
    detail::IncrementalSpan partials(dual.cols.size());
    long dim_mM = 0;
    for (int j = D; j >= 0; --j) {
        if (j == 0) dim_mM = static_cast<long>(partials.dim());  // m o M is complete here
        for (const auto& g : monomial_basis(n, j))
            for (const auto& f : fs.generators) {
                Polynomial img = contract(Polynomial::monomial(g), f);
                if (!img.is_zero()) partials.insert(dual.coords(img));
            }
    }
    rep.tau = static_cast<long>(partials.dim()) - dim_mM;
    return rep;
}

// Deterministic random system with one generator per entry of shape, dense
// supports, integer coefficients in [-9, 9]; all-zero draws are retried.
inline InverseSystem random_inverse_system(const std::vector<int>& shape, int n, std::uint64_t seed) {
    if (shape.empty()) throw std::invalid_argument("random_inverse_system: empty shape");
    Rng rng(seed);
    std::vector<Polynomial> gens;
    for (int d : shape) {
        if (d < 0) throw std::invalid_argument("random_inverse_system: negative degree");
        for (;;) {
            Polynomial p = Polynomial::constant(n, 0);
            for (const auto& m : monomial_basis(n, d)) {
                long c = rng.uniform(-9, 9);
                if (c != 0) p.add_term(m, Rational(c));
            }
            if (!p.is_zero()) {
                gens.push_back(std::move(p));
                break;
            }
        }
    }
    return InverseSystem(n, std::move(gens));
}

// Sample from the standard form y1^4 + a*y1^2*y3 + F3(y1,y2) + F<=2(y1,y2,y3)
// with a != 0: an inhomogeneous dual generator whose local Hilbert function
// is (1,3,2,1,1) for non-degenerate draws.
inline InverseSystem standard_form_sample(std::uint64_t seed) {
    Rng rng(seed);
    const int n = 3;
    Polynomial f = Polynomial::monomial(Monomial({4, 0, 0}));
    long a = 0;
    while (a == 0) a = rng.uniform(-9, 9);
    f.add_term(Monomial({2, 0, 1}), Rational(a));
    for (int i = 0; i <= 3; ++i) {
        long c = rng.uniform(-9, 9);
        if (c != 0) f.add_term(Monomial({i, 3 - i, 0}), Rational(c));
    }
    for (int d = 0; d <= 2; ++d)
        for (const auto& m : monomial_basis(n, d)) {
            long c = rng.uniform(-9, 9);
            if (c != 0) f.add_term(m, Rational(c));
        }
    return InverseSystem(n, {std::move(f)});
}

}  // namespace punctual

#endif
