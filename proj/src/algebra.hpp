#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subspace.hpp"

namespace leibniz {

// Sparse list of (basis index, coefficient) pairs, sorted by index, with no
// zero coefficients. This is the normal form used for structural equality.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& s, int n);

// Structure-constant table of an n-dimensional algebra: [b_i, b_j] =
// sum_t gamma[{i,j}][t] b_t. Pairs with zero product are absent. Two tables
// are structurally equal when their dimensions and normalized gamma maps
// coincide; basis labels are presentation only.
struct AlgebraTable {
    int n = 0;
    std::vector<std::string> labels;
    std::map<std::pair<int, int>, SparseVec> gamma;

    // Normalizes and stores a product; empty/zero products are erased.
    void set_product(int i, int j, SparseVec terms);
    const SparseVec* product(int i, int j) const;

    int index_of(const std::string& label) const; // -1 when absent
    void check_index(int i) const;
};

bool tables_equal(const AlgebraTable& a, const AlgebraTable& b);

// Human-readable rendering of a coordinate vector as a linear combination
// of the given labels, e.g. "2 e1 - 1/2 e3"; the zero vector prints "0".
std::string format_combo(const Vec& v, const std::vector<std::string>& labels);

// Bilinear bracket of two coordinate vectors.
Vec bracket(const AlgebraTable& a, const Vec& u, const Vec& v);

// One failed instance of the identity
//   L(x,y,z) = [[x,y],z] - [[x,z],y] - [x,[y,z]]
// on a basis triple, together with the nonzero defect vector.
struct LeibnizViolation {
    int i, j, k;
    Vec defect;
};

std::vector<LeibnizViolation> check_leibniz(const AlgebraTable& a);

// True when the table is antisymmetric (which, for a Leibniz table, is
// equivalent to being a Lie algebra). Requires the table to pass
// check_leibniz and throws DomainError otherwise.
bool is_lie(const AlgebraTable& a);

// Rewrites the table in the basis b'_i = sum_j P[i][j] b_j. P must be an
// invertible n x n matrix.
AlgebraTable basis_change(const AlgebraTable& a, const Mat& p);

// Block direct sum; cross products are zero and colliding labels from b are
// disambiguated with a numeric suffix.
AlgebraTable direct_sum(const AlgebraTable& a, const AlgebraTable& b);

// span{ [u, v] : u in U, v in V }.
Subspace subspace_product(const AlgebraTable& a, const Subspace& u, const Subspace& v);

bool is_ideal(const AlgebraTable& a, const Subspace& j);

struct Quotient {
    AlgebraTable table;
    Mat projection;                // (n - dim J) x n coordinate projection
    std::vector<int> rep_columns;  // ambient columns of the representatives
};

// Quotient by a two-sided ideal, over the deterministic pivot-completion
// complement. Throws DomainError when J is not a two-sided ideal.
Quotient quotient_algebra(const AlgebraTable& a, const Subspace& j);

} // namespace leibniz

#endif
