#include "dialid/kp.hpp"

#include <algorithm>
#include <stdexcept>

namespace dialid {

TreePoly relabel(const TreePoly& p, const Permutation& sigma) {
  TreePoly out;
  for (const auto& [m, c] : p.terms()) {
    LabeledTree t = m;
    for (std::uint8_t& v : t.leaves) v = sigma[v];
    out.add(std::move(t), c);
  }
  return out;
}

namespace {

/// Rewrites op labels given the leaf position of the central argument.
/// span [lo, hi) is the leaf range of this subtree.
TypeTree kp_rewrite(const TypeTree& shape, int lo, int center_pos, int arity) {
  if (shape.is_leaf()) return shape;
  int new_op;
  int acc = lo;
  int child_of_center = -1;
  std::vector<int> child_lo;
  for (const TypeTree& k : shape.kids) {
    child_lo.push_back(acc);
    acc += k.degree();
  }
  const int hi = acc;
  if (center_pos < lo)
    new_op = 0;  // central argument to the left: subscript 1
  else if (center_pos >= hi)
    new_op = arity - 1;  // to the right: subscript n
  else {
    for (int c = 0; c < static_cast<int>(shape.kids.size()); ++c) {
      int clo = child_lo[static_cast<std::size_t>(c)];
      int chi = clo + shape.kids[static_cast<std::size_t>(c)].degree();
      if (center_pos >= clo && center_pos < chi) {
        child_of_center = c;
        break;
      }
    }
    new_op = child_of_center;
  }
  std::vector<TypeTree> kids;
  for (int c = 0; c < static_cast<int>(shape.kids.size()); ++c)
    kids.push_back(kp_rewrite(shape.kids[static_cast<std::size_t>(c)],
                              child_lo[static_cast<std::size_t>(c)], center_pos, arity));
  return TypeTree::node(new_op, std::move(kids));
}

}  // namespace

LabeledTree kp_transform(const LabeledTree& m, int center_var, int arity) {
  int center_pos = -1;
  for (int i = 0; i < m.degree(); ++i)
    if (m.leaves[static_cast<std::size_t>(i)] == center_var) {
      center_pos = i;
      break;
    }
  if (center_pos < 0) throw std::invalid_argument("kp_transform: central argument not present");
  LabeledTree out;
  out.shape = kp_rewrite(m.shape, 0, center_pos, arity);
  out.leaves = m.leaves;
  return out;
}

std::vector<TreePoly> kp_part1(const TreePoly& identity, int arity) {
  int degree = -1;
  for (const auto& [m, c] : identity.terms()) {
    (void)c;
    if (degree < 0) degree = m.degree();
    if (m.degree() != degree) throw std::invalid_argument("kp_part1: input not homogeneous");
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    for (std::uint8_t v : m.leaves) {
      if (v >= degree || seen[v]) throw std::invalid_argument("kp_part1: input not multilinear");
      seen[v] = true;
    }
  }
  if (degree < 0) throw std::invalid_argument("kp_part1: zero identity");
  std::vector<TreePoly> out;
  for (int v = 0; v < degree; ++v) {
    TreePoly id_v;
    for (const auto& [m, c] : identity.terms()) id_v.add(kp_transform(m, v, arity), c);
    out.push_back(std::move(id_v));
  }
  return out;
}

std::vector<TreePoly> kp_part2(int arity) {
  const int n = arity;
  std::vector<TreePoly> out;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      for (int k = 0; k + 1 < n; ++k) {
        TreePoly id;
        for (int which = 0; which < 2; ++which) {
          std::vector<TypeTree> kids;
          for (int s = 0; s < n; ++s)
            kids.push_back(s == i ? TypeTree::node(k + which, std::vector<TypeTree>(
                                                                  static_cast<std::size_t>(n), TypeTree::leaf()))
                                  : TypeTree::leaf());
          LabeledTree m;
          m.shape = TypeTree::node(j, std::move(kids));
          for (int v = 0; v < 2 * n - 1; ++v) m.leaves.push_back(static_cast<std::uint8_t>(v));
          id.add(std::move(m), which == 0 ? 1 : -1);
        }
        out.push_back(std::move(id));
      }
    }
  return out;
}

namespace {

TypeTree replace_op(const TypeTree& shape, int op, const Permutation& sigma) {
  if (shape.is_leaf()) return shape;
  std::vector<TypeTree> kids;
  for (const TypeTree& k : shape.kids) kids.push_back(replace_op(k, op, sigma));
  if (shape.op == op) {
    std::vector<TypeTree> permuted;
    for (int s = 0; s < static_cast<int>(kids.size()); ++s)
      permuted.push_back(kids[sigma[s]]);
    return TypeTree::node(0, std::move(permuted));
  }
  return TypeTree::node(shape.op, std::move(kids));
}

/// Rebuilds the leaf sequence to match the permuted shape.
LabeledTree replace_op_labeled(const LabeledTree& m, int op, const Permutation& sigma) {
  struct Walk {
    int op;
    const Permutation& sigma;
    const std::vector<std::uint8_t>& leaves;

    std::pair<TypeTree, std::vector<std::uint8_t>> go(const TypeTree& shape, int lo) {
      if (shape.is_leaf()) return {shape, {leaves[static_cast<std::size_t>(lo)]}};
      std::vector<std::pair<TypeTree, std::vector<std::uint8_t>>> kids;
      int acc = lo;
      for (const TypeTree& k : shape.kids) {
        kids.push_back(go(k, acc));
        acc += k.degree();
      }
      TypeTree out_shape;
      std::vector<std::uint8_t> out_leaves;
      std::vector<TypeTree> shapes;
      if (shape.op == op) {
        for (int s = 0; s < static_cast<int>(kids.size()); ++s) {
          auto& [ks, kl] = kids[sigma[s]];
          shapes.push_back(ks);
          out_leaves.insert(out_leaves.end(), kl.begin(), kl.end());
        }
        out_shape = TypeTree::node(0, std::move(shapes));
      } else {
        for (auto& [ks, kl] : kids) {
          shapes.push_back(ks);
          out_leaves.insert(out_leaves.end(), kl.begin(), kl.end());
        }
        out_shape = TypeTree::node(shape.op, std::move(shapes));
      }
      return {std::move(out_shape), std::move(out_leaves)};
    }
  };
  Walk w{op, sigma, m.leaves};
  auto [shape, leaves] = w.go(m.shape, 0);
  return LabeledTree{std::move(shape), std::move(leaves)};
}

bool mentions_op(const TypeTree& shape, int op) {
  if (shape.is_leaf()) return false;
  if (shape.op == op) return true;
  for (const TypeTree& k : shape.kids)
    if (mentions_op(k, op)) return true;
  return false;
}

}  // namespace

std::vector<TreePoly> kp_reduce_opposite(const std::vector<TreePoly>& ids, int op,
                                         const Permutation& sigma) {
  // the defining identity: a two-term identity equating op with a sigma-
  // permuted copy of op_1, in either orientation
  bool defined = false;
  for (const TreePoly& id : ids) {
    if (id.term_count() != 2) continue;
    const auto& t0 = *id.terms().begin();
    const auto& t1 = *std::next(id.terms().begin());
    if (t0.second + t1.second != 0) continue;
    for (const auto* a : {&t0, &t1}) {
      const auto* b = (a == &t0) ? &t1 : &t0;
      const LabeledTree& ma = a->first;
      const LabeledTree& mb = b->first;
      if (ma.shape.is_leaf() || mb.shape.is_leaf()) continue;
      if (ma.shape.op != op || mb.shape.op != 0) continue;
      bool single_a = true, single_b = true;
      for (const TypeTree& k : ma.shape.kids) single_a &= k.is_leaf();
      for (const TypeTree& k : mb.shape.kids) single_b &= k.is_leaf();
      if (!single_a || !single_b) continue;
      bool match = true;
      for (int s = 0; s < static_cast<int>(ma.leaves.size()); ++s)
        if (mb.leaves[static_cast<std::size_t>(s)] != ma.leaves[sigma[s]]) match = false;
      if (match) defined = true;
    }
  }
  if (!defined)
    throw std::invalid_argument("kp_reduce_opposite: no defining identity for the operation");

  std::vector<TreePoly> out;
  for (const TreePoly& id : ids) {
    bool touches = false;
    for (const auto& [m, c] : id.terms()) {
      (void)c;
      if (mentions_op(m.shape, op)) touches = true;
    }
    if (!touches) {
      out.push_back(id);
      continue;
    }
    TreePoly rewritten;
    for (const auto& [m, c] : id.terms()) rewritten.add(replace_op_labeled(m, op, sigma), c);
    if (!rewritten.is_zero()) out.push_back(std::move(rewritten));
  }
  return out;
}

}  // namespace dialid
