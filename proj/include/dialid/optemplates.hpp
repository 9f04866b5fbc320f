#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dialid/linalg.hpp"
#include "dialid/poly.hpp"

namespace dialid {

/// Multilinear n-ary operation in an associative algebra: an element of the
/// group algebra, omega(a_1..a_n) = sum_sigma x_sigma a_{sigma(1)}...a_{sigma(n)}.
struct GroupAlgebraOp {
  int arity = 0;
  std::map<Permutation, std::int64_t> terms;
};

/// Multilinear n-ary operation in an associative dialgebra, given by its
/// expansion into normal-form monomials: each term is an argument permutation
/// together with the slot carrying the hat.
struct DiOpTemplate {
  int arity = 0;
  std::map<std::pair<Permutation, int>, std::int64_t> terms;
};

/// Multilinear n-ary operation defined by an expansion into monomials of a
/// free (multioperator) algebra; leaves of the body are argument slots 0..n-1.
struct TreeOpTemplate {
  int arity = 0;
  TreePoly body;
};

// ---- substitution ----------------------------------------------------------

/// Composition in the free dialgebra: plug dialgebra polynomials into the
/// template's argument slots.  Within one normal-form term the factor words
/// concatenate and only the hatted slot keeps its center.
DiPoly substitute_di(const DiOpTemplate& op, const std::vector<DiPoly>& args);

/// Composition in a free multioperator algebra (tree grafting).
TreePoly substitute_tree(const TreeOpTemplate& op, const std::vector<TreePoly>& args);

/// Composition in the free associative algebra (word concatenation).
WordPoly substitute_word(const GroupAlgebraOp& op, const std::vector<WordPoly>& args);

/// Forgets the centers: the quotient onto the free associative algebra.
WordPoly erase_centers(const DiPoly& p);

// ---- full expansion of tree monomials --------------------------------------

DiPoly expand_dialgebra(const LabeledTree& m, const std::vector<DiOpTemplate>& binds);
TreePoly expand_trees(const LabeledTree& m, const std::vector<TreeOpTemplate>& binds);
WordPoly expand_words(const LabeledTree& m, const std::vector<GroupAlgebraOp>& binds);

DiPoly expand_dialgebra(const TreePoly& p, const std::vector<DiOpTemplate>& binds);
TreePoly expand_trees(const TreePoly& p, const std::vector<TreeOpTemplate>& binds);
WordPoly expand_words(const TreePoly& p, const std::vector<GroupAlgebraOp>& binds);

// ---- coordinate vectors ----------------------------------------------------

long word_index(const Word& w);
std::vector<std::int64_t> di_poly_vector(const DiPoly& p, const DiBasis& basis);
std::vector<std::int64_t> tree_poly_vector(const TreePoly& p, const TypeBasis& basis);
std::vector<std::int64_t> word_poly_vector(const WordPoly& p, int degree);

// ---- expansion matrices ----------------------------------------------------

/// Expansion matrix: entry (i, j) is the coefficient of the i-th target
/// monomial in the expansion of the j-th source monomial.  Zero columns are
/// kept; they mark identically vanishing sources.
IntMatrix expansion_matrix_dialgebra(const TypeBasis& source, const std::vector<DiOpTemplate>& binds);
IntMatrix expansion_matrix_trees(const TypeBasis& source, const TypeBasis& target,
                                 const std::vector<TreeOpTemplate>& binds);
IntMatrix expansion_matrix_words(const TypeBasis& source, const std::vector<GroupAlgebraOp>& binds);

}  // namespace dialid
