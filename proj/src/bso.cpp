#include "dialid/bso.hpp"

namespace dialid {

DiOpTemplate di_template_relabel(const DiOpTemplate& t, const Permutation& tau) {
  DiOpTemplate out;
  out.arity = t.arity;
  for (const auto& [term, c] : t.terms) {
    const auto& [sigma, hat] = term;
    out.terms[{tau * sigma, hat}] += c;
    if (out.terms[{tau * sigma, hat}] == 0) out.terms.erase({tau * sigma, hat});
  }
  return out;
}

std::vector<DiOpTemplate> bso(const GroupAlgebraOp& omega) {
  const int n = omega.arity;
  std::vector<DiOpTemplate> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)].arity = n;
  for (const auto& [sigma, x] : omega.terms) {
    for (int j = 0; j < n; ++j) {
      const int i = sigma[j];  // argument in slot j gets the hat in omega-hat_i
      out[static_cast<std::size_t>(i)].terms[{sigma, j}] += x;
    }
  }
  return out;
}

std::vector<BsoRelation> bso_relations(const std::vector<DiOpTemplate>& lifted) {
  std::vector<BsoRelation> rels;
  if (lifted.empty()) return rels;
  const int n = lifted[0].arity;
  for (int a = 0; a < static_cast<int>(lifted.size()); ++a)
    for (int b = a + 1; b < static_cast<int>(lifted.size()); ++b)
      for (const Permutation& tau : all_permutations(n)) {
        if (di_template_relabel(lifted[static_cast<std::size_t>(a)], tau).terms ==
            lifted[static_cast<std::size_t>(b)].terms)
          rels.push_back(BsoRelation{a, b, tau});
      }
  return rels;
}

}  // namespace dialid
