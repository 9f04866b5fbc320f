#pragma once

#include <vector>

#include "dialid/optemplates.hpp"

namespace dialid {

/// omega-hat_i relabeled through tau: (a_1,..,a_n) -> omega-hat_i(a_tau(1),..).
DiOpTemplate di_template_relabel(const DiOpTemplate& t, const Permutation& tau);

struct BsoRelation {
  int op_a = 0;      // 0-based operation indices with op_b = op_a relabeled
  int op_b = 0;
  Permutation tau;   // omega-hat_{op_b} (args) == omega-hat_{op_a} (args o tau)
};

/// The BSO lift: omega-hat_i places the hat on the slot holding argument i in
/// each term of omega.  Output is indexed by argument, 1..n.
std::vector<DiOpTemplate> bso(const GroupAlgebraOp& omega);

/// Coincidences among the lifted operations under argument relabeling
/// (e.g. the third Jordan triple diproduct is the reversal of the first).
/// Reported with op_a < op_b and tau != id excluded only for op_a == op_b.
std::vector<BsoRelation> bso_relations(const std::vector<DiOpTemplate>& lifted);

}  // namespace dialid
