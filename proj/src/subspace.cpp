#include "subspace.hpp"

#include <algorithm>

#include "errors.hpp"

namespace leibniz {

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.m_ambient = ambient;
    s.m_basis = Mat(0, ambient);
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s;
    s.m_ambient = ambient;
    s.m_basis = Mat::identity(ambient);
    s.m_pivots.resize(ambient);
    for (int i = 0; i < ambient; ++i) s.m_pivots[i] = i;
    return s;
}

Subspace Subspace::from_rows(int ambient, const std::vector<Vec>& rows) {
    RowReducer red(ambient);
    for (const Vec& r : rows) red.add_row(r);
    return from_reducer(red);
}

Subspace Subspace::from_reducer(const RowReducer& reducer) {
    Subspace s;
    s.m_ambient = reducer.cols();
    s.m_basis = reducer.to_matrix();
    s.m_pivots = reducer.pivot_cols();
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != m_ambient)
        throw ArgError("vector does not live in this ambient space");
    Vec out = v;
    for (int r = 0; r < m_basis.rows; ++r) {
        const int p = m_pivots[r];
        if (out[p] == 0) continue;
        const Rational f = out[p];
        for (int c = p; c < m_ambient; ++c) {
            const Rational& x = m_basis.at(r, c);
            if (x != 0) out[c] -= f * x;
        }
    }
    return out;
}

bool Subspace::contains(const Vec& v) const {
    return vec_is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
    if (other.m_ambient != m_ambient)
        throw ArgError("ambient dimension mismatch");
    for (int r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_row(r))) return false;
    return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw ArgError("ambient dimension mismatch");
    RowReducer red(a.ambient());
    for (int r = 0; r < a.dim(); ++r) red.add_row(a.basis_row(r));
    for (int r = 0; r < b.dim(); ++r) red.add_row(b.basis_row(r));
    return Subspace::from_reducer(red);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw ArgError("ambient dimension mismatch");
    const int n = a.ambient();
    const int p = a.dim();
    const int q = b.dim();
    // v is in the intersection iff v = s^T A = t^T B; the pairs (s, t) form
    // the kernel of [A^T | -B^T].
    Mat sys(n, p + q);
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < n; ++c) sys.at(c, r) = a.basis().at(r, c);
    for (int r = 0; r < q; ++r)
        for (int c = 0; c < n; ++c) sys.at(c, p + r) = -b.basis().at(r, c);
    const Subspace pairs = nullspace(sys);
    RowReducer red(n);
    for (int r = 0; r < pairs.dim(); ++r) {
        const Vec st = pairs.basis_row(r);
        Vec v(n, Rational(0));
        for (int i = 0; i < p; ++i) {
            if (st[i] == 0) continue;
            for (int c = 0; c < n; ++c) {
                const Rational& x = a.basis().at(i, c);
                if (x != 0) v[c] += st[i] * x;
            }
        }
        red.add_row(std::move(v));
    }
    return Subspace::from_reducer(red);
}

Subspace quotient_complement(const Subspace& whole, const Subspace& part) {
    if (whole.ambient() != part.ambient()) throw ArgError("ambient dimension mismatch");
    if (!whole.contains(part)) throw ArgError("part is not contained in whole");
    RowReducer red(whole.ambient());
    const auto& part_pivots = part.pivot_cols();
    for (int r = 0; r < whole.dim(); ++r) {
        const int p = whole.pivot_cols()[r];
        if (!std::binary_search(part_pivots.begin(), part_pivots.end(), p))
            red.add_row(whole.basis_row(r));
    }
    return Subspace::from_reducer(red);
}

Subspace nullspace(const Mat& m) {
    RowReducer red(m.cols);
    for (int r = 0; r < m.rows; ++r) red.add_row(m.row(r));
    const auto& pivots = red.pivot_cols();
    const auto& rows = red.rows();
    RowReducer basis(m.cols);
    int next_pivot = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (next_pivot < static_cast<int>(pivots.size()) && pivots[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        // Free column c: set v[c] = 1 and solve the pivot variables.
        Vec v(m.cols, Rational(0));
        v[c] = 1;
        for (size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = -rows[r][c];
        basis.add_row(std::move(v));
    }
    return Subspace::from_reducer(basis);
}

} // namespace leibniz
