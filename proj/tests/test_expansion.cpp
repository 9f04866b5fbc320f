#include <doctest.h>

#include <random>

#include "dialid/bso.hpp"
#include "dialid/optemplates.hpp"
#include "dialid/serialize.hpp"
#include "dialid/varieties.hpp"

using namespace dialid;

namespace {

DiPoly letter(int v) { return DiPoly(DiMonomial{{static_cast<std::uint8_t>(v)}, 0}, 1); }

std::vector<DiPoly> letters(int n) {
  std::vector<DiPoly> out;
  for (int v = 0; v < n; ++v) out.push_back(letter(v));
  return out;
}

/// Brute-force oracle for dialgebra substitution: realize each factor and the
/// whole template term as parenthesized DiTree products and reduce through
/// the normal-form map.  Independent of di_concat.
DiTree tree_of_monomial(const DiMonomial& m) {
  // x_1 |- (... |- (x_center -| (... -| x_n)))
  DiTree t = DiTree::leaf(m.word.back());
  for (int i = m.degree() - 2; i >= 0; --i) {
    auto op = (i >= m.center) ? DiTree::Op::LeftProd : DiTree::Op::RightProd;
    t = DiTree::node(op, DiTree::leaf(m.word[static_cast<std::size_t>(i)]), std::move(t));
  }
  return t;
}

DiMonomial oracle_term(const std::vector<DiMonomial>& factors, int hat_slot) {
  // chain the factor trees with -| to the right of the hatted slot and |- to
  // its left, then take the normal form of the whole tree
  DiTree t = tree_of_monomial(factors[static_cast<std::size_t>(hat_slot)]);
  for (int s = hat_slot + 1; s < static_cast<int>(factors.size()); ++s)
    t = DiTree::node(DiTree::Op::LeftProd, std::move(t),
                     tree_of_monomial(factors[static_cast<std::size_t>(s)]));
  for (int s = hat_slot - 1; s >= 0; --s)
    t = DiTree::node(DiTree::Op::RightProd, tree_of_monomial(factors[static_cast<std::size_t>(s)]),
                     std::move(t));
  return normal_form(t);
}

}  // namespace

TEST_CASE("diproduct templates on letters") {
  std::vector<DiOpTemplate> dip = jordan_triple_diproducts();
  CHECK(di_poly_str(substitute_di(dip[0], letters(3))) == "^a b c + c b ^a");
  CHECK(di_poly_str(substitute_di(dip[1], letters(3))) == "a ^b c + c ^b a");
  CHECK(di_poly_str(substitute_di(dip[2], letters(3))) == "^c b a + a b ^c");
}

TEST_CASE("nested diproduct expansions match the reference displays") {
  std::vector<DiOpTemplate> dip = jordan_triple_diproducts();
  TypeBasis both = diproduct_deg5_both_basis();
  auto expand_label = [&](int type_index) {
    return di_poly_str(expand_dialgebra(both.monomial(both.type_offset(type_index)), {dip[0], dip[1]}));
  };
  // ((a,b,c)_1,d,e)_1, (a,(b,c,d)_1,e)_1, (a,b,(c,d,e)_1)_1
  CHECK(expand_label(0) == "^a b c d e + c b ^a d e + e d ^a b c + e d c b ^a");
  CHECK(expand_label(1) == "^a b c d e + ^a d c b e + e b c d ^a + e d c b ^a");
  CHECK(expand_label(2) == "^a b c d e + ^a b e d c + c d e b ^a + e d c b ^a");
  // ((a,b,c)_2,d,e)_2 and (a,(b,c,d)_2,e)_2
  CHECK(expand_label(3) == "e ^d a b c + e ^d c b a + a b c ^d e + c b a ^d e");
  CHECK(expand_label(4) == "a b ^c d e + a d ^c b e + e b ^c d a + e d ^c b a");
}

TEST_CASE("substitute_di agrees with the normal-form oracle on random templates") {
  std::mt19937_64 rng(20110517);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    // random 2-argument template, random monomial arguments of degree <= 2
    DiOpTemplate t;
    t.arity = 2;
    std::vector<Permutation> s2 = all_permutations(2);
    for (const Permutation& sigma : s2)
      for (int hat = 0; hat < 2; ++hat)
        if (coin(rng)) t.terms[{sigma, hat}] = coin(rng) ? 1 : -1;
    if (t.terms.empty()) continue;

    DiMonomial arg0{{0, 1}, coin(rng)};
    DiMonomial arg1{{2, 3}, coin(rng)};
    DiPoly out =
        substitute_di(t, {DiPoly(arg0, 1), DiPoly(arg1, 1)});
    DiPoly expected;
    for (const auto& [term, c] : t.terms) {
      const auto& [sigma, hat] = term;
      std::vector<DiMonomial> factors;
      factors.push_back(sigma[0] == 0 ? arg0 : arg1);
      factors.push_back(sigma[1] == 0 ? arg0 : arg1);
      expected.add(oracle_term(factors, hat), c);
    }
    CHECK(out == expected);
  }
}

TEST_CASE("expansion is linear in each argument") {
  std::vector<DiOpTemplate> dip = jordan_triple_diproducts();
  DiPoly x = letter(0) + letter(1) * 3;
  DiPoly out = substitute_di(dip[1], {x, letter(2), letter(3)});
  DiPoly split = substitute_di(dip[1], {letter(0), letter(2), letter(3)}) +
                 substitute_di(dip[1], {letter(1), letter(2), letter(3)}) * 3;
  CHECK(out == split);
}

TEST_CASE("tree substitution matches an independent grafting route") {
  std::vector<TreeOpTemplate> q = jordan_di_triple_templates();
  CHECK(identity_str(q[0].body, {{"m", 2, {}}}) == "m(a,m(b,c)) + m(m(a,b),c) - m(m(a,c),b)");
  CHECK(identity_str(q[1].body, {{"m", 2, {}}}) == "-m(b,m(a,c)) + m(m(b,a),c) + m(m(b,c),a)");

  // <<a,b,c>_1,d,e>_1 grafts to 3 x 3 = 9 signed terms
  TypeBasis basis = jordan_ditriple_deg5_basis();
  TreePoly expanded = expand_trees(basis.monomial(0), q);
  std::int64_t total_terms = 0;
  for (const auto& [m, c] : expanded.terms()) total_terms += (c < 0 ? -c : c);
  CHECK(total_terms == 9);

  // independent oracle: substitute the three leaves of the outer template by
  // the inner expansion, using string surgery over the serialized body
  TreePoly inner = q[0].body;  // slots 0,1,2 = a,b,c
  // rename inner slots to a,b,c then graft into outer slot 0, with d,e for
  // slots 1,2 of the outer body
  TreePoly expected;
  for (const auto& [outer_m, outer_c] : q[0].body.terms()) {
    // graft: leaf 0 -> inner monomials, leaf 1 -> d (3), leaf 2 -> e (4)
    for (const auto& [inner_m, inner_c] : inner.terms()) {
      struct Build {
        const LabeledTree& inner;
        std::pair<TypeTree, std::vector<std::uint8_t>> go(const TypeTree& shape,
                                                          const std::vector<std::uint8_t>& lv,
                                                          int lo) {
          if (shape.is_leaf()) {
            std::uint8_t v = lv[static_cast<std::size_t>(lo)];
            if (v == 0) return {inner.shape, inner.leaves};
            return {TypeTree::leaf(), {static_cast<std::uint8_t>(v + 2)}};
          }
          std::vector<TypeTree> shapes;
          std::vector<std::uint8_t> leaves;
          int acc = lo;
          for (const TypeTree& k : shape.kids) {
            auto [ks, kl] = go(k, lv, acc);
            acc += k.degree();
            shapes.push_back(std::move(ks));
            leaves.insert(leaves.end(), kl.begin(), kl.end());
          }
          return {TypeTree::node(shape.op, std::move(shapes)), std::move(leaves)};
        }
      };
      Build b{inner_m};
      auto [shape, leaves] = b.go(outer_m.shape, outer_m.leaves, 0);
      expected.add(LabeledTree{std::move(shape), std::move(leaves)}, outer_c * inner_c);
    }
  }
  CHECK(expanded == expected);
}

TEST_CASE("erase_centers") {
  DiPoly p;
  p.add(DiMonomial{{0, 1, 2}, 0}, 1);  // ^a b c
  p.add(DiMonomial{{2, 1, 0}, 2}, 1);  // c b ^a
  WordPoly w = erase_centers(p);
  CHECK(word_poly_str(w) == "abc + cba");
  CHECK(erase_centers(DiPoly()).is_zero());

  // the lift of any omega collapses back to omega under center erasure
  std::mt19937_64 rng(77);
  for (int n : {3, 4}) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    GroupAlgebraOp omega;
    omega.arity = n;
    for (const Permutation& sigma : all_permutations(n)) {
      int c = coeff(rng);
      if (c != 0) omega.terms[sigma] = c;
    }
    if (omega.terms.empty()) continue;
    std::vector<DiOpTemplate> lifted = bso(omega);
    for (const DiOpTemplate& t : lifted) {
      std::vector<DiPoly> args = letters(n);
      WordPoly collapsed = erase_centers(substitute_di(t, args));
      WordPoly direct;
      for (const auto& [sigma, c] : omega.terms) {
        Word word;
        for (int s = 0; s < n; ++s) word.letters.push_back(sigma[s]);
        direct.add(std::move(word), c);
      }
      CHECK(collapsed == direct);
    }
  }
}

TEST_CASE("expansion matrices keep zero columns") {
  // a template that annihilates one argument order: t(a,b) = ^a b - ^a b = 0
  DiOpTemplate zero;
  zero.arity = 2;
  TypeBasis basis({OpSpec{"z", 2, {}}}, enumerate_association_types({OpSpec{"z", 2, {}}}, 2));
  IntMatrix e = expansion_matrix_dialgebra(basis, {zero});
  CHECK(e.rows() == 4);
  CHECK(e.cols() == 2);
  CHECK(e.isZero());
}
