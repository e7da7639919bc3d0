#ifndef LEIBNIZ_STRUCTURE_HPP
#define LEIBNIZ_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "algebra.hpp"
#include "subspace.hpp"

namespace leibniz {

// Dimensions along the lower central series A = L^1 ⊇ L^2 ⊇ ... with
// L^{m+1} = [L^m, A], and the derived series with L^{[s+1]} = [L^[s], L^[s]].
// Each list starts at dim A, strictly decreases, and ends at the first
// stable value (0 exactly when the algebra is nilpotent resp. solvable).
struct SeriesProfile {
    std::vector<int> lower_central_dims;
    std::vector<int> derived_dims;
    bool nilpotent = false;
    bool solvable = false;
    // Present iff nilpotent: the index t with L^{t-1} != 0 and L^t = 0.
    std::optional<int> nilindex;
};

// Generator bookkeeping for a nilpotent algebra N with an adapted basis:
// every basis vector lies either in N^2 or projects to a basis vector of
// N/N^2.  The latter are the generators; k1 of them act nontrivially on
// the right (are outside Ann_r(N)).
struct GeneratorData {
    int k = 0;
    std::vector<int> generator_indices;
    int k1 = 0;
    std::vector<int> ann_r_generator_indices;
};

std::vector<Subspace> lower_central_series(const AlgebraTable& a);
std::vector<Subspace> derived_series(const AlgebraTable& a);
SeriesProfile series_profile(const AlgebraTable& a);

// Ann_r(A) = {a : [x,a] = 0 for all x}, Ann_l(A) = {a : [a,x] = 0 for all x},
// center = intersection of the two.
Subspace right_annihilator(const AlgebraTable& a);
Subspace left_annihilator(const AlgebraTable& a);
Subspace center(const AlgebraTable& a);

// Smallest two-sided ideal containing s: fixed point of
// U -> U + [U,A] + [A,U].
Subspace ideal_closure(const AlgebraTable& a, const Subspace& s);

// Two-sided ideal generated by all squares [x,x]; spanned by the diagonal
// squares [b_i,b_i] together with the polarizations [b_i,b_j]+[b_j,b_i].
Subspace squares_ideal(const AlgebraTable& a);

// Throws DomainError if n is not nilpotent or the basis is not adapted.
GeneratorData generator_data(const AlgebraTable& n);

// True iff n is a two-sided ideal of r, nilpotent as a subalgebra, and
// contains [r,r].
bool verify_nilradical(const AlgebraTable& r, const Subspace& n);

} // namespace leibniz

#endif
