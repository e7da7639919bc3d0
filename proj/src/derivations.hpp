#ifndef LEIBNIZ_DERIVATIONS_HPP
#define LEIBNIZ_DERIVATIONS_HPP

#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"
#include "subspace.hpp"

namespace leibniz {

// Basis of the space of derivations: matrices D acting by column
// convention (Dv)_c = sum_s D_{c,s} v_s and satisfying
// D[x,y] = [Dx,y] + [x,Dy] exactly on all basis pairs.
struct DerivationSpace {
    int algebra_dim = 0;
    std::vector<Mat> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

// Span of the right multiplication operators R_x(y) = [y,x]; the basis
// keeps a maximal independent subset of the operators R_{b_i}.
struct InnerSpace {
    int algebra_dim = 0;
    std::vector<Mat> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

struct CompletenessReport {
    int center_dim = 0;
    int der_dim = 0;
    int inner_dim = 0;
    bool complete_def22 = false;   // center = 0 and dim Der = dim Inner
    int i_dim = 0;                 // dim of the squares ideal I
    bool i_equals_annr = false;    // I = Ann_r as subspaces
    int center_mod_i_dim = 0;      // dim of the image of Center(A) in A/I
    bool ernie_complete = false;   // that image is 0 and every derivation
                                   // is congruent to some R_x modulo I
};

DerivationSpace derivation_space(const AlgebraTable& a);
InnerSpace inner_derivations(const AlgebraTable& a);

// Exact check of the derivation law for a single matrix.
bool is_derivation(const AlgebraTable& a, const Mat& d);

// The matrix of R_{b_j}: entry (c,s) is the coefficient of b_c in [b_s,b_j].
Mat right_multiplication(const AlgebraTable& a, int j);

bool is_complete(const AlgebraTable& a);
bool is_ernie_complete(const AlgebraTable& a);
CompletenessReport completeness_report(const AlgebraTable& a);

} // namespace leibniz

#endif
