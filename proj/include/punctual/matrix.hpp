#ifndef PUNCTUAL_MATRIX_HPP
#define PUNCTUAL_MATRIX_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "punctual/rational.hpp"

namespace punctual {

// Dense matrix over the rationals. All reductions are exact and
// deterministic: pivots are chosen leftmost-column-first and, within a
// column, the first row (top to bottom) with a nonzero entry.
struct QMatrix {
    size_t rows = 0, cols = 0;
    std::vector<std::vector<Rational>> a;

    QMatrix() = default;
    QMatrix(size_t r, size_t c) : rows(r), cols(c), a(r, std::vector<Rational>(c, Rational(0))) {}
    static QMatrix from_rows(std::vector<std::vector<Rational>> rws) {
        QMatrix m;
        m.rows = rws.size();
        m.cols = rws.empty() ? 0 : rws[0].size();
        for (const auto& r : rws)
            if (r.size() != m.cols) throw std::invalid_argument("from_rows: ragged rows");
        m.a = std::move(rws);
        return m;
    }
    static QMatrix identity(size_t n) {
        QMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.a[i][i] = 1;
        return m;
    }

    Rational& at(size_t r, size_t c) { return a[r][c]; }
    const Rational& at(size_t r, size_t c) const { return a[r][c]; }

    void append_row(std::vector<Rational> row) {
        if (rows == 0 && cols == 0) cols = row.size();
        if (row.size() != cols) throw std::invalid_argument("append_row: wrong length");
        a.push_back(std::move(row));
        ++rows;
    }
};

// Result of reduced row echelon form: the reduced matrix plus the pivot
// column of each pivot row, in row order.
struct Rref {
    QMatrix m;
    std::vector<size_t> pivot_cols;
    size_t rank() const { return pivot_cols.size(); }
};

inline Rref rref(QMatrix m) {
    Rref out;
    size_t pr = 0;  // next pivot row
    for (size_t c = 0; c < m.cols && pr < m.rows; ++c) {
        size_t sel = pr;
        while (sel < m.rows && m.a[sel][c] == 0) ++sel;
        if (sel == m.rows) continue;
        std::swap(m.a[pr], m.a[sel]);
        // Normalize the pivot row, then clear the column everywhere else.
        {
            Rational inv = m.a[pr][c];
            for (size_t j = c; j < m.cols; ++j)
                if (m.a[pr][j] != 0) m.a[pr][j] /= inv;
        }
        for (size_t r = 0; r < m.rows; ++r) {
            if (r == pr) continue;
            const Rational f = m.a[r][c];
            if (f == 0) continue;
            m.a[r][c] = 0;
            for (size_t j = c + 1; j < m.cols; ++j)
                if (m.a[pr][j] != 0) m.a[r][j] -= f * m.a[pr][j];
        }
        out.pivot_cols.push_back(c);
        ++pr;
    }
    out.m = std::move(m);
    return out;
}

// Exact rank via fraction-free (Bareiss) forward elimination on an integer
// copy; each row is scaled by the lcm of its denominators first, which does
// not change the rank.
inline size_t rank(const QMatrix& q) {
    std::vector<std::vector<Integer>> m(q.rows, std::vector<Integer>(q.cols));
    for (size_t r = 0; r < q.rows; ++r) {
        Integer l = 1;
        for (size_t c = 0; c < q.cols; ++c) {
            Integer d = denominator(q.a[r][c]);
            l = boost::multiprecision::lcm(l, d);
        }
        for (size_t c = 0; c < q.cols; ++c) {
            const Rational& v = q.a[r][c];
            m[r][c] = numerator(v) * (l / denominator(v));
        }
    }
    size_t rk = 0;
    Integer prev = 1;
    for (size_t c = 0; c < q.cols && rk < q.rows; ++c) {
        size_t sel = rk;
        while (sel < q.rows && m[sel][c] == 0) ++sel;
        if (sel == q.rows) continue;
        std::swap(m[rk], m[sel]);
        for (size_t r = rk + 1; r < q.rows; ++r) {
            if (m[r][c] == 0) {
                // Still rescale so the shared division below stays exact.
                for (size_t j = c + 1; j < q.cols; ++j)
                    if (m[r][j] != 0) m[r][j] = m[r][j] * m[rk][c] / prev;
                continue;
            }
            for (size_t j = c + 1; j < q.cols; ++j)
                m[r][j] = (m[r][j] * m[rk][c] - m[r][c] * m[rk][j]) / prev;
            m[r][c] = 0;
        }
        prev = m[rk][c];
        ++rk;
    }
    return rk;
}

// Canonical basis of the right null space, derived from the reduced echelon
// form: one vector per free column (ascending), with entry 1 at the free
// column and the negated reduced column at the pivot positions.
inline std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> out;
    for (size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols, Rational(0));
        v[f] = 1;
        for (size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.m.a[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<Rational> mat_vec(const QMatrix& m, const std::vector<Rational>& v) {
    if (v.size() != m.cols) throw std::invalid_argument("mat_vec: size mismatch");
    std::vector<Rational> out(m.rows, Rational(0));
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c)
            if (m.a[r][c] != 0 && v[c] != 0) out[r] += m.a[r][c] * v[c];
    return out;
}

// True iff v lies in the row space of m.
inline bool in_row_space(const QMatrix& m, const std::vector<Rational>& v) {
    if (v.size() != m.cols) throw std::invalid_argument("in_row_space: size mismatch");
    QMatrix ext = m;
    ext.append_row(v);
    return rank(m) == rank(ext);
}

namespace detail {

// Exact incremental row span; insert reports whether the vector enlarged it.
// Rows are kept fully inter-reduced so membership tests stay one pass.
class IncrementalSpan {
public:
    explicit IncrementalSpan(size_t ncols) : ncols_(ncols) {}

    bool insert(std::vector<Rational> v) {
        if (v.size() != ncols_) throw std::invalid_argument("IncrementalSpan::insert: size mismatch");
        for (const auto& [p, row] : rows_) {
            if (v[p] == 0) continue;
            const Rational f = v[p];
            for (size_t j = 0; j < ncols_; ++j)
                if (row[j] != 0) v[j] -= f * row[j];
        }
        size_t p = ncols_;
        for (size_t j = 0; j < ncols_; ++j)
            if (v[j] != 0) {
                p = j;
                break;
            }
        if (p == ncols_) return false;
        const Rational inv = Rational(1) / v[p];
        for (auto& x : v) x *= inv;
        for (auto& [q, row] : rows_) {
            if (row[p] == 0) continue;
            const Rational f = row[p];
            for (size_t j = 0; j < ncols_; ++j)
                if (v[j] != 0) row[j] -= f * v[j];
        }
        rows_.emplace(p, std::move(v));
        return true;
    }

    size_t dim() const { return rows_.size(); }

private:
    size_t ncols_;
    std::map<size_t, std::vector<Rational>> rows_;  // pivot column -> unit-pivot row
};

}  // namespace detail

}  // namespace punctual

#endif
