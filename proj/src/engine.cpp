#include "dialid/engine.hpp"

#include <functional>

namespace dialid {

std::vector<std::vector<long>> action_tables(const TypeBasis& basis) {
  std::vector<std::vector<long>> out;
  for (const Permutation& sigma : all_permutations(basis.degree()))
    out.push_back(basis.act_table(sigma));
  return out;
}

namespace {

/// Replaces the leaf labeled `var` by a node: op(old leaf, new vars...).
LabeledTree substitute_leaf(const LabeledTree& m, int var, int op, int arity) {
  struct Walk {
    int var, op, arity, degree;

    std::pair<TypeTree, std::vector<std::uint8_t>> go(const TypeTree& shape,
                                                      const std::vector<std::uint8_t>& leaves,
                                                      int lo) {
      if (shape.is_leaf()) {
        std::uint8_t v = leaves[static_cast<std::size_t>(lo)];
        if (v != var) return {shape, {v}};
        std::vector<TypeTree> kids(static_cast<std::size_t>(arity), TypeTree::leaf());
        std::vector<std::uint8_t> lv{v};
        for (int k = 1; k < arity; ++k) lv.push_back(static_cast<std::uint8_t>(degree + k - 1));
        return {TypeTree::node(op, std::move(kids)), std::move(lv)};
      }
      std::vector<TypeTree> shapes;
      std::vector<std::uint8_t> lv;
      int acc = lo;
      for (const TypeTree& k : shape.kids) {
        auto [ks, kl] = go(k, leaves, acc);
        acc += k.degree();
        shapes.push_back(std::move(ks));
        lv.insert(lv.end(), kl.begin(), kl.end());
      }
      return {TypeTree::node(shape.op, std::move(shapes)), std::move(lv)};
    }
  };
  Walk w{var, op, arity, m.degree()};
  auto [shape, leaves] = w.go(m.shape, m.leaves, 0);
  return LabeledTree{std::move(shape), std::move(leaves)};
}

/// Wraps the whole monomial into slot q of a fresh operation node, the other
/// slots taking new variables in order.
LabeledTree wrap_monomial(const LabeledTree& m, int q, int op, int arity) {
  const int d = m.degree();
  std::vector<TypeTree> kids;
  std::vector<std::uint8_t> leaves;
  int next = d;
  for (int s = 0; s < arity; ++s) {
    if (s == q) {
      kids.push_back(m.shape);
      leaves.insert(leaves.end(), m.leaves.begin(), m.leaves.end());
    } else {
      kids.push_back(TypeTree::leaf());
      leaves.push_back(static_cast<std::uint8_t>(next++));
    }
  }
  return LabeledTree{TypeTree::node(op, std::move(kids)), std::move(leaves)};
}

TreePoly map_terms(const TreePoly& p, const std::function<LabeledTree(const LabeledTree&)>& f) {
  TreePoly out;
  for (const auto& [m, c] : p.terms()) out.add(f(m), c);
  return out;
}

int poly_degree(const TreePoly& p) {
  if (p.is_zero()) return 0;
  return p.terms().begin()->first.degree();
}

}  // namespace

std::vector<TreePoly> consequences_binary(const TreePoly& id) {
  const int m = poly_degree(id);
  std::vector<TreePoly> out;
  for (int i = 0; i < m; ++i)
    out.push_back(map_terms(id, [&](const LabeledTree& t) { return substitute_leaf(t, i, 0, 2); }));
  out.push_back(map_terms(id, [&](const LabeledTree& t) { return wrap_monomial(t, 0, 0, 2); }));
  out.push_back(map_terms(id, [&](const LabeledTree& t) { return wrap_monomial(t, 1, 0, 2); }));
  return out;
}

std::vector<TreePoly> consequences_nary(const TreePoly& id, int ops_count, int arity) {
  const int m = poly_degree(id);
  std::vector<TreePoly> out;
  for (int op = 0; op < ops_count; ++op)
    for (int i = 0; i < m; ++i)
      out.push_back(
          map_terms(id, [&](const LabeledTree& t) { return substitute_leaf(t, i, op, arity); }));
  for (int op = 0; op < ops_count; ++op)
    for (int q = 0; q < arity; ++q)
      out.push_back(
          map_terms(id, [&](const LabeledTree& t) { return wrap_monomial(t, q, op, arity); }));
  return out;
}

IntMatrix permuted_identity_rows(const std::vector<TreePoly>& ids, const TypeBasis& basis) {
  const std::vector<Permutation> perms = all_permutations(basis.degree());
  IntMatrix out = IntMatrix::Zero(static_cast<Index>(ids.size() * perms.size()), basis.size());
  Index r = 0;
  for (const TreePoly& id : ids)
    for (const Permutation& sigma : perms) {
      std::vector<std::int64_t> v = tree_poly_vector(relabel(id, sigma), basis);
      for (long j = 0; j < basis.size(); ++j) out(r, j) = v[static_cast<std::size_t>(j)];
      ++r;
    }
  return out;
}

std::vector<TreePoly> consequences_to_degree(const std::vector<TreePoly>& ids, int target_degree) {
  std::vector<TreePoly> out;
  for (const TreePoly& id : ids) {
    const int d = poly_degree(id);
    if (d == target_degree) {
      out.push_back(id);
    } else if (d < target_degree) {
      std::vector<TreePoly> step = consequences_binary(id);
      std::vector<TreePoly> deeper = consequences_to_degree(step, target_degree);
      out.insert(out.end(), deeper.begin(), deeper.end());
    }
  }
  return out;
}

}  // namespace dialid
