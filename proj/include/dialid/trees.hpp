#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dialid/permutation.hpp"

namespace dialid {

/// A multilinear operation symbol.  symmetric_args lists pairs of argument
/// positions (0-based) in which the operation is known to be symmetric;
/// monomial enumeration and canonical forms factor these out.
struct OpSpec {
  std::string name;
  int arity = 2;
  std::vector<std::pair<int, int>> symmetric_args;
};

/// Association type: a planar rooted tree with operation labels at internal
/// nodes.  Leaves are unlabeled here; argument assignments live in
/// LabeledTree.
struct TypeTree {
  int op = -1;  // -1 for a leaf
  std::vector<TypeTree> kids;

  bool is_leaf() const { return op < 0; }

  static TypeTree leaf() { return TypeTree{}; }
  static TypeTree node(int op, std::vector<TypeTree> kids) {
    TypeTree t;
    t.op = op;
    t.kids = std::move(kids);
    return t;
  }

  int degree() const {
    if (is_leaf()) return 1;
    int d = 0;
    for (const TypeTree& k : kids) d += k.degree();
    return d;
  }

  /// Unambiguous preorder encoding (arity is fixed per operation).
  std::string encode() const {
    if (is_leaf()) return ".";
    std::string s;
    s += static_cast<char>('A' + op);
    for (const TypeTree& k : kids) s += k.encode();
    return s;
  }

  friend bool operator==(const TypeTree& a, const TypeTree& b) { return a.encode() == b.encode(); }
};

/// A multilinear monomial: an association type plus the sequence of variable
/// ids at its leaves, left to right.
struct LabeledTree {
  TypeTree shape;
  std::vector<std::uint8_t> leaves;

  int degree() const { return static_cast<int>(leaves.size()); }

  std::string key() const {
    std::string s = shape.encode();
    s += '|';
    for (std::uint8_t v : leaves) s += static_cast<char>('a' + v);
    return s;
  }

  friend bool operator<(const LabeledTree& a, const LabeledTree& b) { return a.key() < b.key(); }
  friend bool operator==(const LabeledTree& a, const LabeledTree& b) { return a.key() == b.key(); }
};

inline std::string labeled_tree_str(const TypeTree& shape, const std::vector<std::uint8_t>& leaves,
                                    const std::vector<OpSpec>& ops, std::size_t& pos) {
  if (shape.is_leaf()) {
    std::string s(1, static_cast<char>('a' + leaves[pos]));
    ++pos;
    return s;
  }
  std::string s = ops[static_cast<std::size_t>(shape.op)].name;
  s += '(';
  for (std::size_t i = 0; i < shape.kids.size(); ++i) {
    if (i) s += ',';
    s += labeled_tree_str(shape.kids[i], leaves, ops, pos);
  }
  s += ')';
  return s;
}

inline std::string labeled_tree_str(const LabeledTree& m, const std::vector<OpSpec>& ops) {
  std::size_t pos = 0;
  return labeled_tree_str(m.shape, m.leaves, ops, pos);
}

/// All association types of the given degree over the given operations, in
/// deterministic order: operation at the root, then child-degree composition
/// in decreasing lexicographic order, then children recursively.  For one
/// binary operation this reproduces the usual Catalan ordering
/// (((ab)c)d)e, ((a(bc))d)e, ... , a(b(c(de))).
std::vector<TypeTree> enumerate_association_types(const std::vector<OpSpec>& ops, int degree);

/// Ordered basis of symmetry-reduced multilinear monomials over a fixed list
/// of association types.  Each type carries a group of leaf-position
/// permutations (generated by operation argument symmetries that fix the
/// shape, plus any extra declared identifications); one lexicographically
/// least representative per orbit enters the basis.
class TypeBasis {
public:
  TypeBasis(std::vector<OpSpec> ops, std::vector<TypeTree> types,
            std::vector<std::vector<Permutation>> extra_syms = {});

  int degree() const { return degree_; }
  long size() const { return total_; }
  int type_count() const { return static_cast<int>(types_.size()); }
  const std::vector<OpSpec>& ops() const { return ops_; }
  const std::vector<TypeTree>& types() const { return types_; }
  const std::vector<Permutation>& leaf_group(int t) const {
    return groups_[static_cast<std::size_t>(t)];
  }
  long type_offset(int t) const { return offsets_[static_cast<std::size_t>(t)]; }
  long type_size(int t) const {
    return static_cast<long>(reps_[static_cast<std::size_t>(t)].size());
  }

  /// Canonical index of a monomial; applies operation argument symmetries
  /// (which may move between association types) and the per-type leaf group.
  /// Throws when the monomial's orbit meets none of the basis types.
  long index_of(const LabeledTree& m) const;

  std::pair<int, Permutation> decode(long idx) const;
  LabeledTree monomial(long idx) const;
  std::string label(long idx) const;

  /// Relabels arguments by sigma and returns the canonical representative.
  long act(const Permutation& sigma, long idx) const;

  /// act as a table: out[i] = act(sigma, i).
  std::vector<long> act_table(const Permutation& sigma) const;

private:
  Permutation orbit_min(int type, const Permutation& p) const;

  std::vector<OpSpec> ops_;
  std::vector<TypeTree> types_;
  std::vector<std::vector<Permutation>> groups_;
  std::vector<std::vector<Permutation>> reps_;
  std::vector<std::vector<long>> g_index_;  // (type, perm lex rank) -> basis index
  std::vector<long> offsets_;
  std::map<std::string, int> type_index_;
  int degree_ = 0;
  long total_ = 0;
};

/// Expands a labeled monomial into all equivalent forms under the operations'
/// argument symmetries (shapes may change).
std::vector<LabeledTree> symmetry_variants(const LabeledTree& m, const std::vector<OpSpec>& ops);

}  // namespace dialid
