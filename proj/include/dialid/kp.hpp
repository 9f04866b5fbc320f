#pragma once

#include <vector>

#include "dialid/poly.hpp"

namespace dialid {

/// Relabels a TreePoly's variables through sigma.
TreePoly relabel(const TreePoly& p, const Permutation& sigma);

/// KP rewriting of one monomial for a given central argument: every operation
/// symbol becomes the subscripted operation determined by where the central
/// argument sits (inside argument j -> op j; strictly left -> op 1; strictly
/// right -> op n).  Input trees use op id 0 of arity n; output op ids are
/// 0..n-1 for subscripts 1..n.
LabeledTree kp_transform(const LabeledTree& m, int center_var, int arity);

/// Part 1 of the KP algorithm: one identity of degree d for a single n-ary
/// operation becomes d identities for n subscripted n-ary operations, one per
/// choice of central argument.
std::vector<TreePoly> kp_part1(const TreePoly& identity, int arity);

/// Part 2: the interchange identities at degree 2n-1, stating that the n
/// operations agree in the i-th argument of the j-th operation for i != j.
/// Emitted per (j, i) with consecutive operation pairs (k, k+1).
std::vector<TreePoly> kp_part2(int arity);

/// Eliminates operation `op` by substituting op_1 with arguments permuted by
/// sigma ({x_1..x_n}_op -> {x_sigma(1)..x_sigma(n)}_1).  Requires that the
/// defining identity (op = permuted op_1) is present among ids; identities
/// that collapse to zero are dropped.
std::vector<TreePoly> kp_reduce_opposite(const std::vector<TreePoly>& ids, int op,
                                         const Permutation& sigma);

}  // namespace dialid
