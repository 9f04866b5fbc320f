#include "dialid/trees.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dialid {

namespace {

bool degree_feasible(const std::vector<OpSpec>& ops, int degree, std::map<int, bool>& memo) {
  if (degree == 1) return true;
  auto it = memo.find(degree);
  if (it != memo.end()) return it->second;
  memo[degree] = false;
  bool ok = false;
  for (const OpSpec& op : ops) {
    if (op.arity > degree) continue;
    std::function<bool(int, int)> split = [&](int parts, int left) {
      if (parts == 1) return degree_feasible(ops, left, memo);
      for (int d = 1; d <= left - (parts - 1); ++d)
        if (degree_feasible(ops, d, memo) && split(parts - 1, left - d)) return true;
      return false;
    };
    if (split(op.arity, degree)) {
      ok = true;
      break;
    }
  }
  memo[degree] = ok;
  return ok;
}

void compositions_desc(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int d = total - (parts - 1); d >= 1; --d) {
    cur.push_back(d);
    compositions_desc(total - d, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<TypeTree> enumerate_association_types(const std::vector<OpSpec>& ops, int degree) {
  std::map<int, bool> memo;
  if (degree < 1 || !degree_feasible(ops, degree, memo))
    throw std::invalid_argument("enumerate_association_types: degree incompatible with arities");
  if (degree == 1) return {TypeTree::leaf()};
  std::vector<TypeTree> out;
  for (int o = 0; o < static_cast<int>(ops.size()); ++o) {
    const int arity = ops[static_cast<std::size_t>(o)].arity;
    if (arity > degree) continue;
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions_desc(degree, arity, cur, comps);
    for (const std::vector<int>& comp : comps) {
      bool ok = true;
      for (int d : comp)
        if (!degree_feasible(ops, d, memo)) ok = false;
      if (!ok) continue;
      std::vector<std::vector<TypeTree>> child_lists;
      for (int d : comp) child_lists.push_back(enumerate_association_types(ops, d));
      std::vector<std::size_t> pick(comp.size(), 0);
      while (true) {
        std::vector<TypeTree> kids;
        for (std::size_t i = 0; i < comp.size(); ++i) kids.push_back(child_lists[i][pick[i]]);
        out.push_back(TypeTree::node(o, std::move(kids)));
        int i = static_cast<int>(comp.size()) - 1;
        while (i >= 0 &&
               ++pick[static_cast<std::size_t>(i)] == child_lists[static_cast<std::size_t>(i)].size()) {
          pick[static_cast<std::size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
      }
    }
  }
  return out;
}

namespace {

std::vector<int> leaf_offsets(const TypeTree& t) {
  std::vector<int> off;
  int acc = 0;
  for (const TypeTree& k : t.kids) {
    off.push_back(acc);
    acc += k.degree();
  }
  off.push_back(acc);
  return off;
}

/// Leaf-position permutations induced by argument symmetries whose swap fixes
/// the shape (equal child subtrees), collected over the whole tree.
void shape_fixing_swaps(const TypeTree& t, int base, const std::vector<OpSpec>& ops,
                        std::vector<Permutation>& out, int degree) {
  if (t.is_leaf()) return;
  std::vector<int> off = leaf_offsets(t);
  const OpSpec& op = ops[static_cast<std::size_t>(t.op)];
  for (auto [i, j] : op.symmetric_args) {
    if (!(t.kids[static_cast<std::size_t>(i)] == t.kids[static_cast<std::size_t>(j)])) continue;
    const int di = t.kids[static_cast<std::size_t>(i)].degree();
    std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
    for (int k = 0; k < degree; ++k) img[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k);
    for (int k = 0; k < di; ++k)
      std::swap(img[static_cast<std::size_t>(base + off[static_cast<std::size_t>(i)] + k)],
                img[static_cast<std::size_t>(base + off[static_cast<std::size_t>(j)] + k)]);
    out.push_back(Permutation(std::move(img)));
  }
  for (std::size_t c = 0; c < t.kids.size(); ++c)
    shape_fixing_swaps(t.kids[c], base + off[c], ops, out, degree);
}

}  // namespace

std::vector<LabeledTree> symmetry_variants(const LabeledTree& m, const std::vector<OpSpec>& ops) {
  if (m.shape.is_leaf()) return {m};
  const TypeTree& t = m.shape;
  std::vector<int> off = leaf_offsets(t);

  std::vector<std::vector<LabeledTree>> child_vars;
  for (std::size_t c = 0; c < t.kids.size(); ++c) {
    LabeledTree sub;
    sub.shape = t.kids[c];
    sub.leaves.assign(m.leaves.begin() + off[c], m.leaves.begin() + off[c + 1]);
    child_vars.push_back(symmetry_variants(sub, ops));
  }

  std::vector<std::vector<LabeledTree>> combos;
  std::vector<std::size_t> pick(t.kids.size(), 0);
  while (true) {
    std::vector<LabeledTree> combo;
    for (std::size_t c = 0; c < t.kids.size(); ++c) combo.push_back(child_vars[c][pick[c]]);
    combos.push_back(std::move(combo));
    int i = static_cast<int>(t.kids.size()) - 1;
    while (i >= 0 && ++pick[static_cast<std::size_t>(i)] == child_vars[static_cast<std::size_t>(i)].size()) {
      pick[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }

  const OpSpec& op = ops[static_cast<std::size_t>(t.op)];
  std::set<std::string> seen;
  std::vector<LabeledTree> out;
  for (const std::vector<LabeledTree>& combo : combos) {
    const std::size_t nsym = op.symmetric_args.size();
    for (std::size_t mask = 0; mask < (1u << nsym); ++mask) {
      std::vector<LabeledTree> kids = combo;
      for (std::size_t s = 0; s < nsym; ++s)
        if (mask & (1u << s))
          std::swap(kids[static_cast<std::size_t>(op.symmetric_args[s].first)],
                    kids[static_cast<std::size_t>(op.symmetric_args[s].second)]);
      LabeledTree full;
      std::vector<TypeTree> shapes;
      for (const LabeledTree& k : kids) {
        shapes.push_back(k.shape);
        full.leaves.insert(full.leaves.end(), k.leaves.begin(), k.leaves.end());
      }
      full.shape = TypeTree::node(t.op, std::move(shapes));
      if (seen.insert(full.key()).second) out.push_back(std::move(full));
    }
  }
  return out;
}

TypeBasis::TypeBasis(std::vector<OpSpec> ops, std::vector<TypeTree> types,
                     std::vector<std::vector<Permutation>> extra_syms)
    : ops_(std::move(ops)), types_(std::move(types)) {
  if (types_.empty()) throw std::invalid_argument("TypeBasis: no types");
  degree_ = types_[0].degree();
  for (const TypeTree& t : types_)
    if (t.degree() != degree_) throw std::invalid_argument("TypeBasis: mixed degrees");
  if (extra_syms.empty()) extra_syms.resize(types_.size());
  if (extra_syms.size() != types_.size())
    throw std::invalid_argument("TypeBasis: extra_syms size mismatch");

  const long nfact = factorial(degree_);
  const std::vector<Permutation> all = all_permutations(degree_);
  const int ntypes = static_cast<int>(types_.size());

  for (int t = 0; t < ntypes; ++t) {
    type_index_.emplace(types_[static_cast<std::size_t>(t)].encode(), t);
    std::vector<Permutation> gens = extra_syms[static_cast<std::size_t>(t)];
    shape_fixing_swaps(types_[static_cast<std::size_t>(t)], 0, ops_, gens, degree_);
    groups_.push_back(generate_group(degree_, gens));
  }

  // global canonical representative of (type, leaf-minimal perm): the least
  // (type index, perm) over the monomial's orbit under all operation
  // argument symmetries, restricted to shapes present in this basis
  auto global_canon = [&](int t, const Permutation& p) {
    std::pair<int, Permutation> best{-1, p};
    LabeledTree m{types_[static_cast<std::size_t>(t)], p.images()};
    for (const LabeledTree& v : symmetry_variants(m, ops_)) {
      auto it = type_index_.find(v.shape.encode());
      if (it == type_index_.end()) continue;
      const int tc = it->second;
      Permutation pc = orbit_min(tc, Permutation(v.leaves));
      if (best.first < 0 || std::make_pair(tc, pc.lex_rank()) <
                                std::make_pair(best.first, best.second.lex_rank()))
        best = {tc, pc};
    }
    return best;
  };

  reps_.resize(static_cast<std::size_t>(ntypes));
  for (int t = 0; t < ntypes; ++t)
    for (const Permutation& p : all) {
      if (!(orbit_min(t, p) == p)) continue;
      auto [tc, pc] = global_canon(t, p);
      if (tc == t && pc == p) reps_[static_cast<std::size_t>(t)].push_back(p);
    }

  std::vector<std::vector<long>> local(static_cast<std::size_t>(ntypes));
  for (int t = 0; t < ntypes; ++t) {
    offsets_.push_back(total_);
    total_ += static_cast<long>(reps_[static_cast<std::size_t>(t)].size());
    local[static_cast<std::size_t>(t)].assign(static_cast<std::size_t>(nfact), -1);
    for (long i = 0; i < static_cast<long>(reps_[static_cast<std::size_t>(t)].size()); ++i)
      local[static_cast<std::size_t>(t)]
           [static_cast<std::size_t>(reps_[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)].lex_rank())] = i;
  }

  g_index_.resize(static_cast<std::size_t>(ntypes));
  for (int t = 0; t < ntypes; ++t) {
    g_index_[static_cast<std::size_t>(t)].assign(static_cast<std::size_t>(nfact), -1);
    for (const Permutation& p : all) {
      auto [tc, pc] = global_canon(t, orbit_min(t, p));
      const long loc = local[static_cast<std::size_t>(tc)][static_cast<std::size_t>(pc.lex_rank())];
      g_index_[static_cast<std::size_t>(t)][static_cast<std::size_t>(p.lex_rank())] =
          offsets_[static_cast<std::size_t>(tc)] + loc;
    }
  }
}

Permutation TypeBasis::orbit_min(int type, const Permutation& p) const {
  Permutation best = p;
  for (const Permutation& g : groups_[static_cast<std::size_t>(type)]) {
    Permutation q = p * g;  // leaves permuted by g
    if (q < best) best = q;
  }
  return best;
}

long TypeBasis::index_of(const LabeledTree& m) const {
  if (m.degree() != degree_) throw std::invalid_argument("TypeBasis: degree mismatch");
  for (const LabeledTree& v : symmetry_variants(m, ops_)) {
    auto it = type_index_.find(v.shape.encode());
    if (it == type_index_.end()) continue;
    return g_index_[static_cast<std::size_t>(it->second)]
                   [static_cast<std::size_t>(Permutation(v.leaves).lex_rank())];
  }
  throw std::invalid_argument("TypeBasis: monomial not representable in this basis");
}

std::pair<int, Permutation> TypeBasis::decode(long idx) const {
  if (idx < 0 || idx >= total_) throw std::out_of_range("TypeBasis: index out of range");
  for (int t = static_cast<int>(types_.size()) - 1; t >= 0; --t) {
    if (idx >= offsets_[static_cast<std::size_t>(t)]) {
      long local = idx - offsets_[static_cast<std::size_t>(t)];
      return {t, reps_[static_cast<std::size_t>(t)][static_cast<std::size_t>(local)]};
    }
  }
  throw std::out_of_range("TypeBasis: index out of range");
}

LabeledTree TypeBasis::monomial(long idx) const {
  auto [t, p] = decode(idx);
  return LabeledTree{types_[static_cast<std::size_t>(t)], p.images()};
}

std::string TypeBasis::label(long idx) const { return labeled_tree_str(monomial(idx), ops_); }

long TypeBasis::act(const Permutation& sigma, long idx) const {
  auto [t, p] = decode(idx);
  Permutation q = sigma * p;
  return g_index_[static_cast<std::size_t>(t)][static_cast<std::size_t>(q.lex_rank())];
}

std::vector<long> TypeBasis::act_table(const Permutation& sigma) const {
  std::vector<long> out(static_cast<std::size_t>(total_));
  for (long i = 0; i < total_; ++i) out[static_cast<std::size_t>(i)] = act(sigma, i);
  return out;
}

}  // namespace dialid
