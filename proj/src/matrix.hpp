#ifndef LEIBNIZ_MATRIX_HPP
#define LEIBNIZ_MATRIX_HPP

#include <optional>
#include <vector>

#include "rational.hpp"

namespace leibniz {

// Dense row-major matrix over the rationals. All operations are exact; the
// only pivot rule used anywhere is "leftmost nonzero column", so every
// reduced form is canonical and reproducible.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a; // rows * cols entries, row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    Vec row(int r) const;
    void set_row(int r, const Vec& v);

    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows, int cols);

    bool operator==(const Mat& other) const = default;
};

Vec mat_apply(const Mat& m, const Vec& v);          // m * v
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& m);
bool mat_is_zero(const Mat& m);

// Row-major entry list, for treating matrix families as vectors.
inline Vec mat_flatten(const Mat& m) { return m.a; }

// Incremental reduced-row-echelon accumulator. Rows are inserted one at a
// time and kept mutually reduced with unit pivots, so at every moment the
// stored rows are the canonical RREF basis of the span of everything added.
// Insertion exploits sparsity: a row only pays for the pivots its nonzero
// entries actually meet.
class RowReducer {
public:
    explicit RowReducer(int cols) : m_cols(cols) {}

    // Returns true when the row enlarged the span (i.e. became a new pivot row).
    bool add_row(Vec row);

    // Reduces a copy of the row against the current pivots.
    Vec reduce(Vec row) const;

    bool reduces_to_zero(const Vec& row) const;

    int rank() const { return static_cast<int>(m_rows.size()); }
    int cols() const { return m_cols; }
    const std::vector<Vec>& rows() const { return m_rows; }
    const std::vector<int>& pivot_cols() const { return m_pivots; }

    Mat to_matrix() const; // rank x cols, rows in pivot-column order

private:
    int m_cols;
    std::vector<Vec> m_rows;   // kept sorted by pivot column
    std::vector<int> m_pivots; // pivot column of each stored row
};

// Unique reduced row echelon form (same row count as the input; zero rows
// are kept at the bottom so rref is shape-preserving and idempotent).
Mat rref(const Mat& m);

int rank(const Mat& m);

// Some x with m*x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

} // namespace leibniz

#endif
