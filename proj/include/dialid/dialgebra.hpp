#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dialid/permutation.hpp"

namespace dialid {

/// Normal-form monomial of the free associative dialgebra: a word of distinct
/// letters with one distinguished position, the center (hat notation).
/// Letters are 0-based variable ids.
struct DiMonomial {
  std::vector<std::uint8_t> word;
  int center = 0;  // 0-based position of the hat within word

  int degree() const { return static_cast<int>(word.size()); }

  friend bool operator==(const DiMonomial& a, const DiMonomial& b) {
    return a.center == b.center && a.word == b.word;
  }
  friend bool operator<(const DiMonomial& a, const DiMonomial& b) {
    if (a.center != b.center) return a.center < b.center;
    return a.word < b.word;
  }

  /// "c b ^a d e": letters space-separated, caret on the center.
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (!s.empty()) s += ' ';
      if (static_cast<int>(i) == center) s += '^';
      s += static_cast<char>('a' + word[i]);
    }
    return s;
  }
};

/// Product of dialgebra monomials in normal form: words concatenate and the
/// center is inherited from the designated factor (all products to its left
/// collapse to |- and to its right to -|).
inline DiMonomial di_concat(const std::vector<DiMonomial>& factors, int center_slot) {
  DiMonomial out;
  int offset = 0;
  for (int s = 0; s < static_cast<int>(factors.size()); ++s) {
    const DiMonomial& f = factors[static_cast<std::size_t>(s)];
    if (s == center_slot) out.center = offset + f.center;
    out.word.insert(out.word.end(), f.word.begin(), f.word.end());
    offset += f.degree();
  }
  return out;
}

/// Fully parenthesized dialgebra product over the two operations; used to
/// state and test the normal-form map, not for bulk computation.
struct DiTree {
  enum class Op { Leaf, LeftProd /* -| */, RightProd /* |- */ };
  Op op = Op::Leaf;
  std::uint8_t letter = 0;
  std::unique_ptr<DiTree> lhs, rhs;

  static DiTree leaf(std::uint8_t v) {
    DiTree t;
    t.op = Op::Leaf;
    t.letter = v;
    return t;
  }
  static DiTree node(Op o, DiTree l, DiTree r) {
    DiTree t;
    t.op = o;
    t.lhs = std::make_unique<DiTree>(std::move(l));
    t.rhs = std::make_unique<DiTree>(std::move(r));
    return t;
  }
  DiTree clone() const {
    if (op == Op::Leaf) return leaf(letter);
    return node(op, lhs->clone(), rhs->clone());
  }
  int degree() const {
    if (op == Op::Leaf) return 1;
    return lhs->degree() + rhs->degree();
  }
};

/// The center letter: descend left at -| and right at |-.
inline std::uint8_t center(const DiTree& t) {
  const DiTree* cur = &t;
  while (cur->op != DiTree::Op::Leaf)
    cur = (cur->op == DiTree::Op::LeftProd) ? cur->lhs.get() : cur->rhs.get();
  return cur->letter;
}

inline void collect_word(const DiTree& t, std::vector<std::uint8_t>& out) {
  if (t.op == DiTree::Op::Leaf) {
    out.push_back(t.letter);
    return;
  }
  collect_word(*t.lhs, out);
  collect_word(*t.rhs, out);
}

/// Loday normal form: the monomial is determined by its factor order and the
/// position of its center.
inline DiMonomial normal_form(const DiTree& t) {
  DiMonomial m;
  collect_word(t, m.word);
  std::uint8_t c = center(t);
  for (std::size_t i = 0; i < m.word.size(); ++i)
    if (m.word[i] == c) {
      m.center = static_cast<int>(i);
      break;
    }
  return m;
}

/// The n * n! multilinear dialgebra monomials of degree n, ordered by center
/// position, then lexicographically by word.
class DiBasis {
public:
  explicit DiBasis(int n) : n_(n), fact_(factorial(n)) {}

  int degree() const { return n_; }
  long size() const { return n_ * fact_; }

  long index_of(const DiMonomial& m) const {
    if (m.degree() != n_) throw std::invalid_argument("DiBasis: degree mismatch");
    return m.center * fact_ + Permutation(m.word).lex_rank();
  }

  DiMonomial monomial(long idx) const {
    DiMonomial m;
    m.center = static_cast<int>(idx / fact_);
    m.word = Permutation::from_lex_rank(n_, idx % fact_).images();
    return m;
  }

  std::string label(long idx) const { return monomial(idx).str(); }

private:
  int n_;
  long fact_;
};

inline std::vector<DiMonomial> enumerate_di_monomials(int n) {
  DiBasis basis(n);
  std::vector<DiMonomial> out;
  out.reserve(static_cast<std::size_t>(basis.size()));
  for (long i = 0; i < basis.size(); ++i) out.push_back(basis.monomial(i));
  return out;
}

}  // namespace dialid
