#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyquot/rational.hpp"

namespace cyquot {

// Dense integer matrix. All lattice data in the artifact is exact; no
// floating point anywhere.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<i64> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

    i64& at(int i, int j) { return a[(size_t)i * cols + j]; }
    i64 at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        if (x.cols != y.rows) throw std::invalid_argument("IntMatrix: dimension mismatch");
        IntMatrix r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                i64 v = x.at(i, k);
                if (!v) continue;
                for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
            }
        return r;
    }
};

// Fraction-free determinant (Bareiss).
inline i64 det_bareiss(IntMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    int n = m.rows;
    i64 sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// Row-style Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot). Zero rows sink to the bottom. Canonical.
inline IntMatrix hnf_rows(IntMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        // Euclidean elimination in column c among rows >= r
        while (true) {
            int piv = -1;
            i64 best = 0;
            for (int i = r; i < m.rows; ++i) {
                i64 v = std::abs(m.at(i, c));
                if (v != 0 && (piv < 0 || v < best)) { piv = i; best = v; }
            }
            if (piv < 0) break;
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
            bool done = true;
            i64 p = m.at(r, c);
            for (int i = r + 1; i < m.rows; ++i) {
                if (m.at(i, c) == 0) continue;
                i64 q = m.at(i, c) / p;
                for (int j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(r, j);
                if (m.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (r < m.rows && m.at(r, c) != 0) {
            if (m.at(r, c) < 0)
                for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
            i64 p = m.at(r, c);
            for (int i = 0; i < r; ++i) {
                i64 q = m.at(i, c) / p;
                if (m.at(i, c) % p < 0) --q; // floor
                if (q)
                    for (int j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(r, j);
            }
            ++r;
        }
    }
    return m;
}

namespace detail {

// Bring m to diagonal form via row/col ops; row ops are mirrored on *rowT
// when given, so that diag = rowT * m * (col ops).
inline void smithify(IntMatrix& m, IntMatrix* rowT) {
    int n = std::min(m.rows, m.cols);
    auto swap_rows = [&](int i, int j) {
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
        if (rowT)
            for (int c = 0; c < rowT->cols; ++c) std::swap(rowT->at(i, c), rowT->at(j, c));
    };
    auto addmul_row = [&](int i, int j, i64 q) { // row i -= q * row j
        for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(j, c);
        if (rowT)
            for (int c = 0; c < rowT->cols; ++c) rowT->at(i, c) -= q * rowT->at(j, c);
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    };
    auto addmul_col = [&](int i, int j, i64 q) { // col i -= q * col j
        for (int r = 0; r < m.rows; ++r) m.at(r, i) -= q * m.at(r, j);
    };

    for (int k = 0; k < n; ++k) {
        while (true) {
            // pick smallest nonzero entry in the remaining block as pivot
            int pi = -1, pj = -1;
            i64 best = 0;
            for (int i = k; i < m.rows; ++i)
                for (int j = k; j < m.cols; ++j) {
                    i64 v = std::abs(m.at(i, j));
                    if (v != 0 && (pi < 0 || v < best)) { pi = i; pj = j; best = v; }
                }
            if (pi < 0) return; // all remaining entries zero
            if (pi != k) swap_rows(k, pi);
            if (pj != k) swap_cols(k, pj);

            bool clean = true;
            for (int i = k + 1; i < m.rows; ++i)
                if (m.at(i, k) != 0) { addmul_row(i, k, m.at(i, k) / m.at(k, k)); clean = clean && m.at(i, k) == 0; }
            for (int j = k + 1; j < m.cols; ++j)
                if (m.at(k, j) != 0) { addmul_col(j, k, m.at(k, j) / m.at(k, k)); clean = clean && m.at(k, j) == 0; }
            if (!clean) continue;

            // divisibility: pivot must divide the rest of the block
            bool divides = true;
            for (int i = k + 1; i < m.rows && divides; ++i)
                for (int j = k + 1; j < m.cols && divides; ++j)
                    if (m.at(i, j) % m.at(k, k) != 0) {
                        addmul_row(k, i, -1); // row k += row i, then restart block
                        divides = false;
                    }
            if (divides) break;
        }
        if (m.at(k, k) < 0) {
            for (int c = 0; c < m.cols; ++c) m.at(k, c) = -m.at(k, c);
            if (rowT)
                for (int c = 0; c < rowT->cols; ++c) rowT->at(k, c) = -rowT->at(k, c);
        }
    }
}

} // namespace detail

// Smith normal form invariant factors d1 | d2 | ..., nonzero ones first,
// trailing zeros for rank deficiency.
inline std::vector<i64> snf(IntMatrix m) {
    detail::smithify(m, nullptr);
    std::vector<i64> d;
    int n = std::min(m.rows, m.cols);
    for (int k = 0; k < n; ++k) d.push_back(m.at(k, k));
    return d;
}

struct SnfRowTransform {
    std::vector<i64> diag; // length min(rows, cols)
    IntMatrix rowT;        // diag = rowT * m * (unimodular col ops)
};

inline SnfRowTransform snf_row_transform(IntMatrix m) {
    SnfRowTransform out;
    out.rowT = IntMatrix::identity(m.rows);
    detail::smithify(m, &out.rowT);
    int n = std::min(m.rows, m.cols);
    for (int k = 0; k < n; ++k) out.diag.push_back(m.at(k, k));
    return out;
}

// One integral solution x of M x = v, if any. Deterministic: column-HNF
// back-substitution with free coordinates set to zero.
inline std::optional<std::vector<i64>> solve_integral(const IntMatrix& m, const std::vector<i64>& v) {
    if ((int)v.size() != m.rows) throw std::invalid_argument("solve_integral: size mismatch");
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.cols); // h = m * u throughout
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < h.rows; ++r) std::swap(h.at(r, i), h.at(r, j));
        for (int r = 0; r < u.rows; ++r) std::swap(u.at(r, i), u.at(r, j));
    };
    auto addmul_col = [&](int i, int j, i64 q) {
        for (int r = 0; r < h.rows; ++r) h.at(r, i) -= q * h.at(r, j);
        for (int r = 0; r < u.rows; ++r) u.at(r, i) -= q * u.at(r, j);
    };

    std::vector<int> pivot_col_of_row(m.rows, -1);
    int c = 0;
    for (int r = 0; r < m.rows && c < m.cols; ++r) {
        while (true) {
            int pc = -1;
            i64 best = 0;
            for (int j = c; j < m.cols; ++j) {
                i64 w = std::abs(h.at(r, j));
                if (w != 0 && (pc < 0 || w < best)) { pc = j; best = w; }
            }
            if (pc < 0) break;
            if (pc != c) swap_cols(c, pc);
            bool done = true;
            for (int j = c + 1; j < m.cols; ++j) {
                if (h.at(r, j) == 0) continue;
                addmul_col(j, c, h.at(r, j) / h.at(r, c));
                if (h.at(r, j) != 0) done = false;
            }
            if (done) break;
        }
        if (c < m.cols && h.at(r, c) != 0) { pivot_col_of_row[r] = c; ++c; }
    }

    // forward substitution on the lower-triangular-by-pivots system h y = v
    std::vector<i64> y(m.cols, 0);
    for (int r = 0; r < m.rows; ++r) {
        i64 rhs = v[r];
        for (int j = 0; j < m.cols; ++j)
            if (j != pivot_col_of_row[r]) rhs -= h.at(r, j) * y[j];
        int pc = pivot_col_of_row[r];
        if (pc < 0) {
            if (rhs != 0) return std::nullopt;
            continue;
        }
        if (rhs % h.at(r, pc) != 0) return std::nullopt;
        y[pc] = rhs / h.at(r, pc);
    }

    std::vector<i64> x(m.cols, 0);
    for (int i = 0; i < m.cols; ++i)
        for (int j = 0; j < m.cols; ++j) x[i] += u.at(i, j) * y[j];
    // verify
    for (int r = 0; r < m.rows; ++r) {
        i64 s = 0;
        for (int j = 0; j < m.cols; ++j) s += m.at(r, j) * x[j];
        if (s != v[r]) return std::nullopt;
    }
    return x;
}

} // namespace cyquot
