#include "dialid/optemplates.hpp"

#include <cstdlib>
#include <functional>
#include <thread>

namespace dialid {

namespace {

/// Runs f(j) for j in [0, n); splits across DIALID_THREADS workers when set.
/// Each j writes disjoint state, so the result does not depend on the split.
void for_each_index(long n, const std::function<void(long)>& f) {
  long nthreads = 1;
  if (const char* env = std::getenv("DIALID_THREADS")) {
    nthreads = std::strtol(env, nullptr, 10);
    if (nthreads < 1) nthreads = 1;
  }
  nthreads = std::min<long>(nthreads, n);
  if (nthreads <= 1) {
    for (long j = 0; j < n; ++j) f(j);
    return;
  }
  std::vector<std::thread> workers;
  for (long t = 0; t < nthreads; ++t) {
    workers.emplace_back([&, t] {
      for (long j = t; j < n; j += nthreads) f(j);
    });
  }
  for (auto& w : workers) w.join();
}

template <class M, class Fn>
void product_over_args(const std::vector<Poly<M>>& args, const Fn& emit) {
  for (const Poly<M>& a : args)
    if (a.is_zero()) return;
  std::vector<typename Poly<M>::Terms::const_iterator> pick;
  for (const Poly<M>& a : args) pick.push_back(a.terms().begin());
  while (true) {
    std::int64_t coeff = 1;
    std::vector<const M*> monos;
    for (std::size_t s = 0; s < args.size(); ++s) {
      coeff *= pick[s]->second;
      monos.push_back(&pick[s]->first);
    }
    emit(monos, coeff);
    int i = static_cast<int>(args.size()) - 1;
    while (i >= 0) {
      if (++pick[static_cast<std::size_t>(i)] != args[static_cast<std::size_t>(i)].terms().end()) break;
      pick[static_cast<std::size_t>(i)] = args[static_cast<std::size_t>(i)].terms().begin();
      --i;
    }
    if (i < 0) break;
  }
}

}  // namespace

DiPoly substitute_di(const DiOpTemplate& op, const std::vector<DiPoly>& args) {
  if (static_cast<int>(args.size()) != op.arity)
    throw std::invalid_argument("substitute_di: arity mismatch");
  DiPoly out;
  product_over_args(args, [&](const std::vector<const DiMonomial*>& monos, std::int64_t c) {
    for (const auto& [term, x] : op.terms) {
      const auto& [sigma, hat_slot] = term;
      std::vector<DiMonomial> factors;
      factors.reserve(monos.size());
      for (int s = 0; s < op.arity; ++s) factors.push_back(*monos[sigma[s]]);
      out.add(di_concat(factors, hat_slot), c * x);
    }
  });
  return out;
}

namespace {

/// Replaces slot leaves of the template body by argument monomials.
LabeledTree graft(const TypeTree& shape, const std::vector<std::uint8_t>& slots, std::size_t& pos,
                  const std::vector<const LabeledTree*>& args) {
  if (shape.is_leaf()) {
    const LabeledTree& a = *args[slots[pos]];
    ++pos;
    return a;
  }
  LabeledTree out;
  std::vector<TypeTree> kid_shapes;
  for (const TypeTree& k : shape.kids) {
    LabeledTree sub = graft(k, slots, pos, args);
    kid_shapes.push_back(sub.shape);
    out.leaves.insert(out.leaves.end(), sub.leaves.begin(), sub.leaves.end());
  }
  out.shape = TypeTree::node(shape.op, std::move(kid_shapes));
  return out;
}

}  // namespace

TreePoly substitute_tree(const TreeOpTemplate& op, const std::vector<TreePoly>& args) {
  if (static_cast<int>(args.size()) != op.arity)
    throw std::invalid_argument("substitute_tree: arity mismatch");
  TreePoly out;
  product_over_args(args, [&](const std::vector<const LabeledTree*>& monos, std::int64_t c) {
    for (const auto& [body, x] : op.body.terms()) {
      std::size_t pos = 0;
      out.add(graft(body.shape, body.leaves, pos, monos), c * x);
    }
  });
  return out;
}

WordPoly substitute_word(const GroupAlgebraOp& op, const std::vector<WordPoly>& args) {
  if (static_cast<int>(args.size()) != op.arity)
    throw std::invalid_argument("substitute_word: arity mismatch");
  WordPoly out;
  product_over_args(args, [&](const std::vector<const Word*>& monos, std::int64_t c) {
    for (const auto& [sigma, x] : op.terms) {
      Word w;
      for (int s = 0; s < op.arity; ++s)
        w.letters.insert(w.letters.end(), monos[sigma[s]]->letters.begin(),
                         monos[sigma[s]]->letters.end());
      out.add(std::move(w), c * x);
    }
  });
  return out;
}

WordPoly erase_centers(const DiPoly& p) {
  WordPoly out;
  for (const auto& [m, c] : p.terms()) out.add(Word{m.word}, c);
  return out;
}

namespace {

template <class PolyT, class Binds, class Subst>
PolyT expand_rec(const TypeTree& shape, const std::vector<std::uint8_t>& leaves, std::size_t& pos,
                 const Binds& binds, const Subst& subst, PolyT (*leaf_poly)(std::uint8_t)) {
  if (shape.is_leaf()) {
    PolyT p = leaf_poly(leaves[pos]);
    ++pos;
    return p;
  }
  std::vector<PolyT> args;
  for (const TypeTree& k : shape.kids)
    args.push_back(expand_rec<PolyT>(k, leaves, pos, binds, subst, leaf_poly));
  if (shape.op >= static_cast<int>(binds.size()))
    throw std::invalid_argument("expand: unbound operation");
  return subst(binds[static_cast<std::size_t>(shape.op)], args);
}

DiPoly di_leaf(std::uint8_t v) { return DiPoly(DiMonomial{{v}, 0}, 1); }
TreePoly tree_leaf(std::uint8_t v) { return TreePoly(LabeledTree{TypeTree::leaf(), {v}}, 1); }
WordPoly word_leaf(std::uint8_t v) { return WordPoly(Word{{v}}, 1); }

}  // namespace

DiPoly expand_dialgebra(const LabeledTree& m, const std::vector<DiOpTemplate>& binds) {
  std::size_t pos = 0;
  return expand_rec<DiPoly>(m.shape, m.leaves, pos, binds,
                            [](const DiOpTemplate& t, const std::vector<DiPoly>& a) { return substitute_di(t, a); },
                            &di_leaf);
}

TreePoly expand_trees(const LabeledTree& m, const std::vector<TreeOpTemplate>& binds) {
  std::size_t pos = 0;
  return expand_rec<TreePoly>(m.shape, m.leaves, pos, binds,
                              [](const TreeOpTemplate& t, const std::vector<TreePoly>& a) { return substitute_tree(t, a); },
                              &tree_leaf);
}

WordPoly expand_words(const LabeledTree& m, const std::vector<GroupAlgebraOp>& binds) {
  std::size_t pos = 0;
  return expand_rec<WordPoly>(m.shape, m.leaves, pos, binds,
                              [](const GroupAlgebraOp& t, const std::vector<WordPoly>& a) { return substitute_word(t, a); },
                              &word_leaf);
}

DiPoly expand_dialgebra(const TreePoly& p, const std::vector<DiOpTemplate>& binds) {
  DiPoly out;
  for (const auto& [m, c] : p.terms()) out.add(expand_dialgebra(m, binds) * c);
  return out;
}

TreePoly expand_trees(const TreePoly& p, const std::vector<TreeOpTemplate>& binds) {
  TreePoly out;
  for (const auto& [m, c] : p.terms()) out.add(expand_trees(m, binds) * c);
  return out;
}

WordPoly expand_words(const TreePoly& p, const std::vector<GroupAlgebraOp>& binds) {
  WordPoly out;
  for (const auto& [m, c] : p.terms()) out.add(expand_words(m, binds) * c);
  return out;
}

long word_index(const Word& w) { return Permutation(w.letters).lex_rank(); }

std::vector<std::int64_t> di_poly_vector(const DiPoly& p, const DiBasis& basis) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(basis.size()), 0);
  for (const auto& [m, c] : p.terms()) v[static_cast<std::size_t>(basis.index_of(m))] += c;
  return v;
}

std::vector<std::int64_t> tree_poly_vector(const TreePoly& p, const TypeBasis& basis) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(basis.size()), 0);
  for (const auto& [m, c] : p.terms()) v[static_cast<std::size_t>(basis.index_of(m))] += c;
  return v;
}

std::vector<std::int64_t> word_poly_vector(const WordPoly& p, int degree) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(factorial(degree)), 0);
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != degree) throw std::invalid_argument("word_poly_vector: degree mismatch");
    v[static_cast<std::size_t>(word_index(m))] += c;
  }
  return v;
}

namespace {

template <class Expand>
IntMatrix expansion_matrix(long target_size, const TypeBasis& source, const Expand& column) {
  IntMatrix e = IntMatrix::Zero(target_size, source.size());
  for_each_index(source.size(), [&](long j) {
    std::vector<std::int64_t> col = column(source.monomial(j));
    for (long i = 0; i < target_size; ++i) e(i, j) = col[static_cast<std::size_t>(i)];
  });
  return e;
}

}  // namespace

IntMatrix expansion_matrix_dialgebra(const TypeBasis& source, const std::vector<DiOpTemplate>& binds) {
  DiBasis target(source.degree());
  return expansion_matrix(target.size(), source, [&](const LabeledTree& m) {
    return di_poly_vector(expand_dialgebra(m, binds), target);
  });
}

IntMatrix expansion_matrix_trees(const TypeBasis& source, const TypeBasis& target,
                                 const std::vector<TreeOpTemplate>& binds) {
  return expansion_matrix(target.size(), source, [&](const LabeledTree& m) {
    return tree_poly_vector(expand_trees(m, binds), target);
  });
}

IntMatrix expansion_matrix_words(const TypeBasis& source, const std::vector<GroupAlgebraOp>& binds) {
  return expansion_matrix(factorial(source.degree()), source, [&](const LabeledTree& m) {
    return word_poly_vector(expand_words(m, binds), source.degree());
  });
}

}  // namespace dialid
