#pragma once

#include <utility>
#include <vector>

#include "torfan/rational.hpp"

namespace torfan {

/// Raised by solve_square / inverse when the system is degenerate
/// (a cone whose generators are linearly dependent).
struct SingularMatrixError : Error {
    SingularMatrixError() : Error("singular matrix: degenerate cone or dependent generators") {}
};

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> entries;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(std::size_t(r) * c) {}

    Int& at(int r, int c) { return entries[std::size_t(r) * cols + c]; }
    const Int& at(int r, int c) const { return entries[std::size_t(r) * cols + c]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    /// Columns are the given vectors.
    static IntMatrix from_columns(const std::vector<IntVec>& cols_in) {
        if (cols_in.empty()) throw Error("from_columns: no vectors");
        IntMatrix m(int(cols_in[0].size()), int(cols_in.size()));
        for (int c = 0; c < m.cols; ++c) {
            if (int(cols_in[c].size()) != m.rows) throw Error("from_columns: ragged input");
            for (int r = 0; r < m.rows; ++r) m.at(r, c) = cols_in[c][r];
        }
        return m;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    IntVec apply(const IntVec& v) const {
        if (int(v.size()) != cols) throw Error("apply: dimension mismatch");
        IntVec out(rows);
        for (int r = 0; r < rows; ++r) {
            Int s = 0;
            for (int c = 0; c < cols; ++c) s += at(r, c) * v[c];
            out[r] = s;
        }
        return out;
    }

    RatVec apply(const RatVec& v) const {
        if (int(v.size()) != cols) throw Error("apply: dimension mismatch");
        RatVec out(rows);
        for (int r = 0; r < rows; ++r) {
            Rat s = 0;
            for (int c = 0; c < cols; ++c) s += Rat(at(r, c)) * v[c];
            out[r] = s;
        }
        return out;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols != b.rows) throw Error("matrix product: dimension mismatch");
        IntMatrix m(a.rows, b.cols);
        for (int r = 0; r < a.rows; ++r)
            for (int k = 0; k < a.cols; ++k) {
                const Int& ark = a.at(r, k);
                if (ark == 0) continue;
                for (int c = 0; c < b.cols; ++c) m.at(r, c) += ark * b.at(k, c);
            }
        return m;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }

    /// Lexicographic on (rows, cols, row-major entries); canonical element order.
    friend bool operator<(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows != b.rows) return a.rows < b.rows;
        if (a.cols != b.cols) return a.cols < b.cols;
        return std::lexicographical_compare(a.entries.begin(), a.entries.end(),
                                            b.entries.begin(), b.entries.end());
    }
};

struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> entries;  // row-major

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), entries(std::size_t(r) * c) {}

    Rat& at(int r, int c) { return entries[std::size_t(r) * cols + c]; }
    const Rat& at(int r, int c) const { return entries[std::size_t(r) * cols + c]; }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static RatMatrix from_rows(const std::vector<RatVec>& rows_in) {
        if (rows_in.empty()) throw Error("from_rows: no vectors");
        RatMatrix m(int(rows_in.size()), int(rows_in[0].size()));
        for (int r = 0; r < m.rows; ++r) {
            if (int(rows_in[r].size()) != m.cols) throw Error("from_rows: ragged input");
            for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows_in[r][c];
        }
        return m;
    }

    static RatMatrix from_int(const IntMatrix& m) {
        RatMatrix q(m.rows, m.cols);
        for (std::size_t i = 0; i < m.entries.size(); ++i) q.entries[i] = Rat(m.entries[i]);
        return q;
    }

    /// Entries must all be integral.
    IntMatrix to_int() const {
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (!is_integral(entries[i])) throw Error("to_int: non-integral entry");
            m.entries[i] = numerator(entries[i]);
        }
        return m;
    }

    bool is_integral_matrix() const {
        return std::all_of(entries.begin(), entries.end(),
                           [](const Rat& q) { return is_integral(q); });
    }

    RatMatrix transposed() const {
        RatMatrix t(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    RatVec apply(const RatVec& v) const {
        if (int(v.size()) != cols) throw Error("apply: dimension mismatch");
        RatVec out(rows);
        for (int r = 0; r < rows; ++r) {
            Rat s = 0;
            for (int c = 0; c < cols; ++c) s += at(r, c) * v[c];
            out[r] = s;
        }
        return out;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols != b.rows) throw Error("matrix product: dimension mismatch");
        RatMatrix m(a.rows, b.cols);
        for (int r = 0; r < a.rows; ++r)
            for (int k = 0; k < a.cols; ++k) {
                const Rat& ark = a.at(r, k);
                if (ark == 0) continue;
                for (int c = 0; c < b.cols; ++c) m.at(r, c) += ark * b.at(k, c);
            }
        return m;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(const IntMatrix& m_in) {
    if (m_in.rows != m_in.cols) throw Error("det: non-square matrix");
    const int n = m_in.rows;
    if (n == 0) return 1;
    IntMatrix m = m_in;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

namespace detail {

/// In-place reduced row echelon form; returns pivot column per pivot row.
inline std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(p, c));
        Rat inv = m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) /= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

inline int rank(RatMatrix m) { return int(detail::rref(m).size()); }

/// Basis of the right null space, cleared to primitive integer coordinates,
/// ordered by ascending free column of the reduced echelon form.
inline std::vector<RatVec> kernel_basis(RatMatrix m) {
    const int ncols = m.cols;
    std::vector<int> pivots = detail::rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<RatVec> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(ncols, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(int(r), f);
        basis.push_back(to_rat(to_primitive_integer(v)));
    }
    return basis;
}

/// Exact solution of a nonsingular square system.
inline RatVec solve_square(const RatMatrix& m_in, const RatVec& rhs) {
    if (m_in.rows != m_in.cols) throw Error("solve_square: non-square matrix");
    if (int(rhs.size()) != m_in.rows) throw Error("solve_square: rhs dimension mismatch");
    const int n = m_in.rows;
    RatMatrix m(n, n + 1);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m.at(r, c) = m_in.at(r, c);
        m.at(r, n) = rhs[r];
    }
    std::vector<int> pivots = detail::rref(m);
    if (int(pivots.size()) != n || pivots.back() == n) throw SingularMatrixError();
    RatVec x(n);
    for (int r = 0; r < n; ++r) x[r] = m.at(r, n);
    return x;
}

inline RatMatrix inverse(const RatMatrix& m_in) {
    if (m_in.rows != m_in.cols) throw Error("inverse: non-square matrix");
    const int n = m_in.rows;
    RatMatrix m(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m.at(r, c) = m_in.at(r, c);
        m.at(r, n + r) = 1;
    }
    std::vector<int> pivots = detail::rref(m);
    if (int(pivots.size()) != n || pivots.back() >= n) throw SingularMatrixError();
    RatMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = m.at(r, n + c);
    return inv;
}

/// Inverse of a unimodular integer matrix, exact and integral.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
    return inverse(RatMatrix::from_int(m)).to_int();
}

/// True iff the n given n-dimensional vectors form a Z-basis of the lattice.
inline bool is_unimodular(const std::vector<IntVec>& generators) {
    if (generators.empty()) throw Error("is_unimodular: no generators");
    const int n = int(generators[0].size());
    if (int(generators.size()) != n)
        throw Error("is_unimodular: need exactly as many generators as the dimension");
    Int d = det(IntMatrix::from_columns(generators));
    return d == 1 || d == -1;
}

}  // namespace torfan
