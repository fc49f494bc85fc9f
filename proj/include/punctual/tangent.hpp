#ifndef PUNCTUAL_TANGENT_HPP
#define PUNCTUAL_TANGENT_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "punctual/graded_ideal.hpp"
#include "punctual/matrix.hpp"
#include "punctual/monomial_ideal.hpp"

namespace punctual {

// Graded tangent dimensions dim Hom_R(I, R/I)_d over a degree window, plus
// the statistics the dimension estimates consume.
struct TangentSeries {
    int d_min = 0, d_max = 0;
    std::map<int, long> dims;  // every degree in [d_min, d_max] present
    long k = 0;                // colength of R/I

    long sum_range(int lo, int hi) const {
        long t = 0;
        for (const auto& [d, v] : dims)
            if (d >= lo && d <= hi) t += v;
        return t;
    }
    long t_nonneg() const { return sum_range(0, d_max); }
    long t_pos() const { return sum_range(1, d_max); }
    long t_zero() const { return dims.count(0) ? dims.at(0) : 0; }
    long total() const { return sum_range(d_min, d_max); }
};

struct TangentReport {
    TangentSeries series;
    long T_nonneg = 0;
    long T_pos = 0;
    long T_zero = 0;
    long expected = 0;
    long D = 0;  // T_nonneg - expected
};

namespace detail {

// Union-find over the unknowns of the syzygy-backend linear system. Every
// constraint row has at most two nonzero entries, both units, so the rank is
// graph-theoretic: join for a two-entry row, ground for a one-entry row.
class UnionFind {
public:
    explicit UnionFind(size_t n) : parent_(n), grounded_(n, false) {
        std::iota(parent_.begin(), parent_.end(), size_t{0});
    }
    size_t find(size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void join(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        parent_[a] = b;
        grounded_[b] = grounded_[b] || grounded_[a];
    }
    void ground(size_t a) { grounded_[find(a)] = true; }

    // Number of components not containing a grounded unknown: that is the
    // solution-space dimension for this constraint shape.
    long free_components() {
        long free = 0;
        for (size_t i = 0; i < parent_.size(); ++i)
            if (find(i) == i && !grounded_[i]) ++free;
        return free;
    }

private:
    std::vector<size_t> parent_;
    std::vector<bool> grounded_;
};

// Plain connectivity union-find; unite reports whether the edge was new.
class Components {
public:
    explicit Components(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), size_t{0}); }
    size_t find(size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<size_t> parent_;
};

template <typename First>
struct PairMonomialLess {
    bool operator()(const std::pair<First, Monomial>& a, const std::pair<First, Monomial>& b) const {
        if (a.first != b.first) return a.first < b.first;
        if (a.second.e.size() != b.second.e.size()) return a.second.e.size() < b.second.e.size();
        return a.second.e < b.second.e;
    }
};

}  // namespace detail

// Degree-d homomorphisms I -> R/I for a monomial ideal, by the syzygy route:
// unknowns are the standard-monomial coordinates of each phi(m_i), and for
// every generator pair the syzygy (lcm/m_i) e_i - (lcm/m_j) e_j must map into
// I. Both nonzero entries of any constraint are +-1 on monomials, so the
// whole system reduces to union-find connectivity.
inline long hom_dim_syzygy(const MonomialIdeal& I, int d) {
    if (!I.finite_colength()) throw std::invalid_argument("hom_dim_syzygy: infinite colength");
    const auto& stairs = I.staircase();
    if (stairs.empty()) return 0;
    int s = I.hilbert_function().socle_degree();

    std::vector<std::vector<Monomial>> std_by_deg(static_cast<size_t>(s) + 1);
    for (const auto& m : stairs) std_by_deg[static_cast<size_t>(m.degree())].push_back(m);

    // Unknown ids, densely numbered per generator.
    size_t ngens = I.gens.size();
    std::vector<std::vector<std::pair<Monomial, size_t>>> unk(ngens);
    size_t next_id = 0;
    for (size_t i = 0; i < ngens; ++i) {
        int target = I.gens[i].degree() + d;
        if (target < 0 || target > s) continue;
        for (const auto& u : std_by_deg[static_cast<size_t>(target)]) unk[i].emplace_back(u, next_id++);
    }
    if (next_id == 0) return 0;

    std::vector<std::unordered_map<Monomial, size_t, MonomialHash>> unk_lookup(ngens);
    for (size_t i = 0; i < ngens; ++i)
        for (const auto& [u, id] : unk[i]) unk_lookup[i].emplace(u, id);

    detail::UnionFind uf(next_id);

    auto slot = [&](size_t i, const Monomial& f, const Monomial& w) -> std::optional<size_t> {
        // The unknown of phi(m_i) that f carries onto w, if any.
        if (!divides(f, w)) return std::nullopt;
        auto it = unk_lookup[i].find(div(w, f));
        if (it == unk_lookup[i].end()) return std::nullopt;
        return it->second;
    };

    for (size_t i = 0; i < ngens; ++i)
        for (size_t j = i + 1; j < ngens; ++j) {
            if (unk[i].empty() && unk[j].empty()) continue;
            Monomial l = lcm(I.gens[i], I.gens[j]);
            int wdeg = l.degree() + d;
            if (wdeg < 0 || wdeg > s) continue;
            Monomial fi = div(l, I.gens[i]);
            Monomial fj = div(l, I.gens[j]);
            for (const auto& w : std_by_deg[static_cast<size_t>(wdeg)]) {
                auto a = slot(i, fi, w);
                auto b = slot(j, fj, w);
                if (a && b)
                    uf.join(*a, *b);
                else if (a)
                    uf.ground(*a);
                else if (b)
                    uf.ground(*b);
            }
        }
    return uf.free_components();
}

// Kernel-route backend for arbitrary homogeneous ideals. For each source
// degree e it takes the linear relations among the generator multiples that
// span I_e; each relation forces the matching combination of phi-images to
// vanish in (R/I)_(e+d). Relations that are variable-shifts of lower-degree
// ones are implied by them (multiply the enforced identity by the variable),
// so only the genuinely new ones per degree are turned into rows. Relation
// sets are cached across degrees d, so share one instance per ideal.
class HomKernelBackend {
public:
    explicit HomKernelBackend(const GradedIdeal& I) : I_(I) {
        monomial_gens_ = true;
        min_gen_deg_ = I_.gens.empty() ? 0 : I_.gens.front().degree();
        for (const auto& g : I_.gens) {
            min_gen_deg_ = std::min(min_gen_deg_, g.degree());
            if (g.terms.size() != 1) monomial_gens_ = false;
        }
    }

    long dim(int d) {
        const int s = I_.s;
        size_t ngens = I_.gens.size();

        // Unknown layout: a block per generator whose image degree is alive.
        std::vector<long> offset(ngens, -1);
        long nunk = 0;
        std::vector<int> gen_deg(ngens);
        for (size_t t = 0; t < ngens; ++t) {
            gen_deg[t] = I_.gens[t].degree();
            int target = gen_deg[t] + d;
            if (target < 0 || target > s) continue;
            offset[t] = nunk;
            nunk += I_.quotient_dim(target);
        }
        if (nunk == 0) return 0;

        QMatrix constraints(0, static_cast<size_t>(nunk));
        for (int e = min_gen_deg_; e + d <= s; ++e) {
            long tdim = I_.quotient_dim(e + d);
            if (tdim == 0) continue;
            const RelationSet& rel = relations(e);
            for (const auto& kv : rel.kernel_new) {
                std::vector<Rational> row_block(static_cast<size_t>(nunk) * static_cast<size_t>(tdim),
                                                Rational(0));
                for (const auto& [c, coef] : kv) {
                    const auto& [t, m] = rel.columns[c];
                    if (offset[t] < 0) continue;
                    // Image of m * phi(g_t): multiply each standard basis
                    // class of degree gen_deg[t]+d by m, reduce mod I.
                    const QMatrix& act = action(e + d, gen_deg[t] + d, m);
                    for (size_t r = 0; r < act.rows; ++r)
                        for (size_t cc = 0; cc < act.cols; ++cc) {
                            if (act.a[r][cc] == 0) continue;
                            row_block[r * static_cast<size_t>(nunk) + static_cast<size_t>(offset[t]) +
                                      cc] += coef * act.a[r][cc];
                        }
                }
                for (long r = 0; r < tdim; ++r) {
                    std::vector<Rational> row(row_block.begin() + r * nunk,
                                              row_block.begin() + (r + 1) * nunk);
                    bool nz = false;
                    for (const auto& x : row)
                        if (x != 0) {
                            nz = true;
                            break;
                        }
                    if (nz) constraints.append_row(std::move(row));
                }
            }
        }
        if (constraints.rows == 0) return nunk;
        return nunk - static_cast<long>(rank(constraints));
    }

private:
    struct DiffPair {
        size_t a, b;
        Rational ca, cb;
    };
    struct RelationSet {
        std::vector<std::pair<size_t, Monomial>> columns;  // (generator index, multiplier)
        std::map<std::pair<size_t, Monomial>, size_t, detail::PairMonomialLess<size_t>> col_index;
        // Spanning description of the full relation space, consumed by the
        // next degree when it builds the implied-relation span:
        std::vector<DiffPair> diff_pairs;              // proportional-class tree edges
        std::vector<std::vector<Rational>> dense_vecs; // class-representative kernel lifts
        // Relations not implied by shifts of lower degrees, sparse form:
        std::vector<std::vector<std::pair<size_t, Rational>>> kernel_new;
    };

    const GradedIdeal& I_;
    bool monomial_gens_ = true;
    int min_gen_deg_ = 0;
    std::map<int, RelationSet> rel_cache_;
    std::map<std::pair<int, Monomial>, QMatrix, detail::PairMonomialLess<int>> action_cache_;

    // Relations among { m * g_t : deg(m) = e - deg(g_t) } as vectors in R_e.
    // Proportional columns are grouped first: their pairwise differences are
    // relations for free, and elimination only runs on one column per class.
    // With single-term generators every column is a unit vector, so classes
    // are keyed by the product monomial, the representative matrix has full
    // column rank, and the implied-relation span is pure connectivity.
    const RelationSet& relations(int e) {
        auto it = rel_cache_.find(e);
        if (it != rel_cache_.end()) return it->second;
        RelationSet rs;
        for (size_t t = 0; t < I_.gens.size(); ++t) {
            int md = e - I_.gens[t].degree();
            if (md < 0) continue;
            for (const auto& m : monomial_basis(I_.n, md)) {
                rs.col_index.emplace(std::make_pair(t, m), rs.columns.size());
                rs.columns.emplace_back(t, m);
            }
        }
        size_t ncols = rs.columns.size();
        const RelationSet* prev = (ncols > 0 && e > min_gen_deg_) ? &relations(e - 1) : nullptr;
        auto shifted = [&](size_t c, int i) {
            const auto& [t, m] = prev->columns[c];
            return rs.col_index.at(std::make_pair(t, mul(m, variable(I_.n, i))));
        };

        if (monomial_gens_) {
            detail::Components implied(ncols);
            if (prev)
                for (const auto& dp : prev->diff_pairs)
                    for (int i = 1; i <= I_.n; ++i) implied.unite(shifted(dp.a, i), shifted(dp.b, i));
            std::map<Monomial, std::vector<size_t>, GrevlexGreater> classes;
            for (size_t c = 0; c < ncols; ++c) {
                const auto& [t, m] = rs.columns[c];
                classes[mul(m, I_.gens[t].terms.begin()->first)].push_back(c);
            }
            auto lead = [&](size_t c) { return I_.gens[rs.columns[c].first].terms.begin()->second; };
            for (const auto& [key, members] : classes)
                for (size_t j = 1; j < members.size(); ++j) {
                    size_t c0 = members[0], cj = members[j];
                    Rational f0 = Rational(1) / lead(c0), fj = Rational(-1) / lead(cj);
                    rs.diff_pairs.push_back({c0, cj, f0, fj});
                    if (implied.unite(c0, cj))
                        rs.kernel_new.push_back({{c0, f0}, {cj, fj}});
                }
            return rel_cache_.emplace(e, std::move(rs)).first->second;
        }

        std::vector<Monomial> cols_basis = monomial_basis(I_.n, e);
        std::vector<std::vector<Rational>> colvecs(ncols);
        for (size_t c = 0; c < ncols; ++c) {
            const auto& [t, m] = rs.columns[c];
            colvecs[c] = detail::poly_coords(Polynomial::monomial(m) * I_.gens[t], cols_basis);
        }
        detail::IncrementalSpan implied(ncols);
        if (prev) {
            for (const auto& dp : prev->diff_pairs)
                for (int i = 1; i <= I_.n; ++i) {
                    std::vector<Rational> v(ncols, Rational(0));
                    v[shifted(dp.a, i)] += dp.ca;
                    v[shifted(dp.b, i)] += dp.cb;
                    implied.insert(std::move(v));
                }
            for (const auto& dv : prev->dense_vecs)
                for (int i = 1; i <= I_.n; ++i) {
                    std::vector<Rational> v(ncols, Rational(0));
                    for (size_t c = 0; c < dv.size(); ++c)
                        if (dv[c] != 0) v[shifted(c, i)] += dv[c];
                    implied.insert(std::move(v));
                }
        }

        // Group proportional columns; normalize by first nonzero entry.
        std::map<std::vector<Rational>, std::vector<std::pair<size_t, Rational>>> classes;
        for (size_t c = 0; c < ncols; ++c) {
            Rational lead = 0;
            for (const auto& x : colvecs[c])
                if (x != 0) {
                    lead = x;
                    break;
                }
            if (lead == 0) continue;  // zero column: impossible for nonzero gens
            std::vector<Rational> norm = colvecs[c];
            for (auto& x : norm) x /= lead;
            classes[std::move(norm)].emplace_back(c, lead);
        }
        std::vector<size_t> reps;
        for (const auto& [norm, members] : classes) {
            size_t c0 = members[0].first;
            const Rational& l0 = members[0].second;
            for (size_t idx = 1; idx < members.size(); ++idx) {
                const auto& [cj, lj] = members[idx];
                Rational f0 = Rational(1) / l0, fj = Rational(-1) / lj;
                rs.diff_pairs.push_back({c0, cj, f0, fj});
                std::vector<Rational> v(ncols, Rational(0));
                v[c0] = f0;
                v[cj] = fj;
                if (implied.insert(std::move(v)))
                    rs.kernel_new.push_back({{c0, f0}, {cj, fj}});
            }
            reps.push_back(c0);
        }
        if (!reps.empty()) {
            QMatrix A(cols_basis.size(), reps.size());
            for (size_t rc = 0; rc < reps.size(); ++rc)
                for (size_t r = 0; r < cols_basis.size(); ++r) A.a[r][rc] = colvecs[reps[rc]][r];
            for (const auto& kv : kernel_basis(A)) {
                std::vector<Rational> v(ncols, Rational(0));
                std::vector<std::pair<size_t, Rational>> sv;
                for (size_t rc = 0; rc < reps.size(); ++rc)
                    if (kv[rc] != 0) {
                        v[reps[rc]] = kv[rc];
                        sv.emplace_back(reps[rc], kv[rc]);
                    }
                rs.dense_vecs.push_back(v);
                if (implied.insert(std::move(v))) rs.kernel_new.push_back(std::move(sv));
            }
        }
        return rel_cache_.emplace(e, std::move(rs)).first->second;
    }

    // Matrix of multiplication by m : (R/I)_src -> (R/I)_(src + deg m) in the
    // standard bases (quotient_basis coordinates).
    const QMatrix& action(int dst, int src, const Monomial& m) {
        auto key = std::make_pair(src, m);
        auto it = action_cache_.find(key);
        if (it != action_cache_.end()) return it->second;
        std::vector<Monomial> src_basis = I_.quotient_basis(src);
        long tdim = I_.quotient_dim(dst);
        QMatrix act(static_cast<size_t>(tdim), src_basis.size());
        for (size_t c = 0; c < src_basis.size(); ++c) {
            std::vector<Rational> img = I_.reduce_monomial(mul(m, src_basis[c]));
            for (size_t r = 0; r < img.size(); ++r) act.a[r][c] = img[r];
        }
        return action_cache_.emplace(key, std::move(act)).first->second;
    }
};

inline long hom_dim_kernel(const GradedIdeal& I, int d) {
    HomKernelBackend backend(I);
    return backend.dim(d);
}

// Full tangent series over [-(s+1), s] plus statistics, syzygy route.
inline TangentReport tangent_report(const MonomialIdeal& I, long expected) {
    TangentReport rep;
    int s = I.hilbert_function().socle_degree();
    rep.series.d_min = -(s + 1);
    rep.series.d_max = s;
    rep.series.k = *I.colength();
    for (int d = rep.series.d_min; d <= rep.series.d_max; ++d) rep.series.dims[d] = hom_dim_syzygy(I, d);
    rep.T_nonneg = rep.series.t_nonneg();
    rep.T_pos = rep.series.t_pos();
    rep.T_zero = rep.series.t_zero();
    rep.expected = expected;
    rep.D = rep.T_nonneg - expected;
    return rep;
}

// Same report through the kernel backend; works for non-monomial ideals.
inline TangentReport tangent_report(const GradedIdeal& I, long expected) {
    TangentReport rep;
    int s = I.s;
    rep.series.d_min = -(s + 1);
    rep.series.d_max = s;
    rep.series.k = I.colength();
    HomKernelBackend backend(I);
    for (int d = rep.series.d_min; d <= rep.series.d_max; ++d) rep.series.dims[d] = backend.dim(d);
    rep.T_nonneg = rep.series.t_nonneg();
    rep.T_pos = rep.series.t_pos();
    rep.T_zero = rep.series.t_zero();
    rep.expected = expected;
    rep.D = rep.T_nonneg - expected;
    return rep;
}

// tau(R/I) = total dimension of the annihilator of the maximal ideal in R/I,
// degree by degree: classes killed by every variable.
inline long graded_socle_dimension(const GradedIdeal& I) {
    long tau = 0;
    for (int e = 0; e <= I.s; ++e) {
        long he = I.quotient_dim(e);
        if (he == 0) continue;
        if (e == I.s) {
            tau += he;  // top degree is all socle
            continue;
        }
        std::vector<Monomial> basis_e = I.quotient_basis(e);
        long he1 = I.quotient_dim(e + 1);
        QMatrix M(static_cast<size_t>(he1) * static_cast<size_t>(I.n), static_cast<size_t>(he));
        for (int j = 1; j <= I.n; ++j)
            for (size_t c = 0; c < basis_e.size(); ++c) {
                std::vector<Rational> img = I.reduce_monomial(mul(basis_e[c], variable(I.n, j)));
                for (size_t r = 0; r < img.size(); ++r)
                    M.a[static_cast<size_t>(j - 1) * static_cast<size_t>(he1) + r][c] = img[r];
            }
        tau += he - static_cast<long>(rank(M));
    }
    return tau;
}

// Staircase-corner count: socle dimension of a monomial quotient.
inline long graded_socle_dimension(const MonomialIdeal& I) {
    if (!I.finite_colength()) throw std::invalid_argument("graded_socle_dimension: infinite colength");
    long tau = 0;
    for (const auto& m : I.staircase()) {
        bool corner = true;
        for (int j = 1; j <= I.n && corner; ++j) corner = I.contains(mul(m, variable(I.n, j)));
        if (corner) ++tau;
    }
    return tau;
}

}  // namespace punctual

#endif
