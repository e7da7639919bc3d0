#ifndef LEIBNIZ_SUBSPACE_HPP
#define LEIBNIZ_SUBSPACE_HPP

#include <vector>

#include "matrix.hpp"

namespace leibniz {

// Subspace of Q^n held by its canonical RREF basis (no zero rows, pivot
// columns strictly increasing). Two subspaces are equal exactly when their
// stored bases are identical, so == is structural equality.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace from_rows(int ambient, const std::vector<Vec>& rows);
    static Subspace from_reducer(const RowReducer& reducer);

    int ambient() const { return m_ambient; }
    int dim() const { return m_basis.rows; }
    const Mat& basis() const { return m_basis; }
    Vec basis_row(int r) const { return m_basis.row(r); }
    const std::vector<int>& pivot_cols() const { return m_pivots; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    // Reduces v against the basis; the result is the canonical coset
    // representative of v modulo this subspace.
    Vec reduce(const Vec& v) const;

    bool operator==(const Subspace& other) const = default;

private:
    int m_ambient = 0;
    Mat m_basis;              // dim x ambient, canonical RREF
    std::vector<int> m_pivots;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// Complement of `part` inside `whole`, spanned by the rows of `whole`'s
// canonical basis whose pivot columns are not pivot columns of `part`
// (lowest index first). Requires part to be contained in whole.
Subspace quotient_complement(const Subspace& whole, const Subspace& part);

// Kernel {v : m v = 0} with the canonical free-column basis.
Subspace nullspace(const Mat& m);

} // namespace leibniz

#endif
