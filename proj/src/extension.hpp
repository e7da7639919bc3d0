#ifndef LEIBNIZ_EXTENSION_HPP
#define LEIBNIZ_EXTENSION_HPP

#include <map>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"
#include "structure.hpp"

namespace leibniz {

// A nilpotent algebra together with one right-normed word per
// non-generator basis element.  A word ["g1","g2","g3"] is read left to
// right as the left-nested bracket [[g1,g2],g3]; its letters are
// generator labels and its value must be exactly the basis element the
// word is attached to.  abelian_flags assigns b in {0,1} to the
// generators that form 1-dimensional abelian direct summands.
struct WordPresentation {
    AlgebraTable algebra;
    std::vector<std::string> generators;
    std::map<std::string, std::vector<std::string>> words;
    std::map<std::string, int> abelian_flags;
};

enum class DefectSeverity { Warning, Error };

struct PresDefect {
    DefectSeverity severity;
    std::string message;
};

// Partition of the basis under the product-support graph: components
// carrying a nonzero product are the non-abelian ideals; the remaining
// singletons are the 1-dimensional abelian summands.
struct ComponentSplit {
    std::vector<std::vector<int>> nonabelian;
    std::vector<int> abelian;
};

struct ExtensionResult {
    AlgebraTable table;        // R on basis (N-basis, then one partner per generator)
    Mat alpha;                 // n x k letter multiplicities; indicator rows on generators
    // beta[j][i] = [x_j, e_i] as an element of N, for generator j and any
    // basis index i of N.
    std::vector<std::vector<SparseVec>> beta;
    std::vector<int> generator_indices;       // basis indices, increasing
    std::vector<int> b_flags;                 // resolved flag per generator
    std::vector<std::string> partner_labels;  // one per generator, same order
    ComponentSplit components;
    std::vector<PresDefect> defects;          // warnings recorded while building
};

// Empty result iff: the table is Leibniz and nilpotent, the basis is
// adapted with generators exactly as listed, every non-generator has a
// word of length >= 2 evaluating to it, and abelian_flags covers exactly
// the abelian-summand generators.  Flag-coverage problems are warnings;
// everything else is an error.
std::vector<PresDefect> validate_presentation(const WordPresentation& p);

bool has_errors(const std::vector<PresDefect>& defects);

// Throws DomainError when a component is abelian of dimension > 1.
ComponentSplit detect_components(const AlgebraTable& n);

// alpha_{i,j} = multiplicity of generator j in word(i); generators get
// indicator rows.  Column order follows generator_indices (increasing
// basis order).
Mat compute_alpha(const WordPresentation& p, const GeneratorData& gd);

// [x_j, e_i] by structural recursion on word(i), using
// [x, [w,e_g]] = [[x,w],e_g] - [[x,e_g],w] with both right-hand brackets
// evaluated inside N.  Base case on generators: [x_j,e_g] = -d_{jg}(1-b_g)e_g.
std::vector<std::vector<SparseVec>> compute_beta(const WordPresentation& p,
                                                 const GeneratorData& gd,
                                                 const std::vector<int>& b_flags);

// The maximal solvable extension R = N + Q, dim Q = dim(N/N^2).
// Throws DomainError when validation reports errors or the constructed
// table fails its final Leibniz / beta-constraint check.
ExtensionResult build_extension(const WordPresentation& p);

// Extensions for the flag vectors (1^j 0^(p-j)), j = 0..p, where p is the
// number of abelian generators (in increasing basis order).
std::vector<ExtensionResult> enumerate_flag_family(const WordPresentation& p);

// True iff the result table is antisymmetric (a Lie algebra).
bool lie_specialize_check(const ExtensionResult& r);

// True iff basis_change(a, p) equals b structurally.
bool verify_isomorphism(const AlgebraTable& a, const AlgebraTable& b, const Mat& p);

} // namespace leibniz

#endif
