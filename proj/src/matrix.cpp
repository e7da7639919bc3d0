#include "matrix.hpp"

#include <algorithm>

#include "errors.hpp"

namespace leibniz {

Vec Mat::row(int r) const {
    Vec v(cols);
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
}

void Mat::set_row(int r, const Vec& v) {
    for (int c = 0; c < cols; ++c) at(r, c) = v[c];
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
    Mat m(static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw ArgError("row length does not match column count");
        m.set_row(static_cast<int>(r), rows[r]);
    }
    return m;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    if (static_cast<int>(v.size()) != m.cols)
        throw ArgError("matrix-vector dimension mismatch");
    Vec out(m.rows);
    for (int r = 0; r < m.rows; ++r) {
        Rational sum = 0;
        for (int c = 0; c < m.cols; ++c) {
            const Rational& x = m.at(r, c);
            if (x != 0) sum += x * v[c];
        }
        out[r] = sum;
    }
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw ArgError("matrix-matrix dimension mismatch");
    Mat out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int k = 0; k < a.cols; ++k) {
            const Rational& x = a.at(r, k);
            if (x == 0) continue;
            for (int c = 0; c < b.cols; ++c) {
                const Rational& y = b.at(k, c);
                if (y != 0) out.at(r, c) += x * y;
            }
        }
    return out;
}

Mat mat_transpose(const Mat& m) {
    Mat out(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out.at(c, r) = m.at(r, c);
    return out;
}

bool mat_is_zero(const Mat& m) {
    for (const Rational& x : m.a)
        if (x != 0) return false;
    return true;
}

bool RowReducer::add_row(Vec row) {
    if (static_cast<int>(row.size()) != m_cols)
        throw ArgError("row length does not match reducer width");
    row = reduce(std::move(row));
    int pivot = -1;
    for (int c = 0; c < m_cols; ++c)
        if (row[c] != 0) { pivot = c; break; }
    if (pivot < 0) return false;

    if (row[pivot] != 1) {
        const Rational inv = Rational(1) / row[pivot];
        for (int c = pivot; c < m_cols; ++c)
            if (row[c] != 0) row[c] *= inv;
    }
    // Clear the new pivot column from the rows already stored.
    for (size_t i = 0; i < m_rows.size(); ++i) {
        Rational& coeff = m_rows[i][pivot];
        if (coeff == 0) continue;
        const Rational f = coeff;
        for (int c = pivot; c < m_cols; ++c)
            if (row[c] != 0) m_rows[i][c] -= f * row[c];
    }
    const auto where = std::upper_bound(m_pivots.begin(), m_pivots.end(), pivot);
    const size_t idx = static_cast<size_t>(where - m_pivots.begin());
    m_pivots.insert(where, pivot);
    m_rows.insert(m_rows.begin() + idx, std::move(row));
    return true;
}

Vec RowReducer::reduce(Vec row) const {
    for (size_t i = 0; i < m_rows.size(); ++i) {
        const int p = m_pivots[i];
        Rational& coeff = row[p];
        if (coeff == 0) continue;
        const Rational f = coeff;
        const Vec& pivot_row = m_rows[i];
        for (int c = p; c < m_cols; ++c)
            if (pivot_row[c] != 0) row[c] -= f * pivot_row[c];
    }
    return row;
}

bool RowReducer::reduces_to_zero(const Vec& row) const {
    return vec_is_zero(reduce(row));
}

Mat RowReducer::to_matrix() const {
    return Mat::from_rows(m_rows, m_cols);
}

Mat rref(const Mat& m) {
    RowReducer red(m.cols);
    for (int r = 0; r < m.rows; ++r) red.add_row(m.row(r));
    Mat out(m.rows, m.cols);
    const auto& rows = red.rows();
    for (size_t r = 0; r < rows.size(); ++r) out.set_row(static_cast<int>(r), rows[r]);
    return out;
}

int rank(const Mat& m) {
    RowReducer red(m.cols);
    for (int r = 0; r < m.rows; ++r) red.add_row(m.row(r));
    return red.rank();
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows)
        throw ArgError("right-hand side length does not match row count");
    RowReducer red(m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        Vec row(m.cols + 1);
        for (int c = 0; c < m.cols; ++c) row[c] = m.at(r, c);
        row[m.cols] = b[r];
        red.add_row(std::move(row));
    }
    Vec x(m.cols, Rational(0));
    const auto& rows = red.rows();
    const auto& pivots = red.pivot_cols();
    for (size_t i = 0; i < rows.size(); ++i) {
        if (pivots[i] == m.cols) return std::nullopt; // pivot in the augmented column
        // Free variables stay zero, so each pivot variable is just the
        // augmented entry of its row.
        x[pivots[i]] = rows[i][m.cols];
    }
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows != m.cols) throw ArgError("only square matrices can be inverted");
    const int n = m.rows;
    RowReducer red(2 * n);
    for (int r = 0; r < n; ++r) {
        Vec row(2 * n);
        for (int c = 0; c < n; ++c) row[c] = m.at(r, c);
        row[n + r] = 1;
        red.add_row(std::move(row));
    }
    if (red.rank() < n) return std::nullopt;
    const auto& pivots = red.pivot_cols();
    for (int i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    Mat inv(n, n);
    const auto& rows = red.rows();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = rows[r][n + c];
    return inv;
}

} // namespace leibniz
