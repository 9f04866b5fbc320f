#include <doctest.h>

#include <random>
#include <set>

#include "dialid/dialgebra.hpp"
#include "dialid/trees.hpp"
#include "dialid/varieties.hpp"

using namespace dialid;

namespace {

DiTree leaf(int v) { return DiTree::leaf(static_cast<std::uint8_t>(v)); }
DiTree L(DiTree a, DiTree b) { return DiTree::node(DiTree::Op::LeftProd, std::move(a), std::move(b)); }
DiTree R(DiTree a, DiTree b) { return DiTree::node(DiTree::Op::RightProd, std::move(a), std::move(b)); }

/// All fully parenthesized dialgebra products with the given leaf labels.
std::vector<DiTree> all_di_trees(const std::vector<std::uint8_t>& word) {
  std::vector<DiTree> out;
  if (word.size() == 1) {
    out.push_back(leaf(word[0]));
    return out;
  }
  for (std::size_t split = 1; split < word.size(); ++split) {
    std::vector<std::uint8_t> lw(word.begin(), word.begin() + split);
    std::vector<std::uint8_t> rw(word.begin() + split, word.end());
    for (const DiTree& lt : all_di_trees(lw))
      for (const DiTree& rt : all_di_trees(rw)) {
        out.push_back(L(lt.clone(), rt.clone()));
        out.push_back(R(lt.clone(), rt.clone()));
      }
  }
  return out;
}

}  // namespace

TEST_CASE("center of a dialgebra monomial") {
  // a -| b: center a
  CHECK(center(L(leaf(0), leaf(1))) == 0);
  // (a |- b) -| c: center b
  CHECK(center(L(R(leaf(0), leaf(1)), leaf(2))) == 1);
  // (a -| b) |- (c -| d): center c
  CHECK(center(R(L(leaf(0), leaf(1)), L(leaf(2), leaf(3)))) == 2);
}

TEST_CASE("normal form") {
  // (a |- b) -| c  ->  a ^b c
  DiMonomial m = normal_form(L(R(leaf(0), leaf(1)), leaf(2)));
  CHECK(m.word == std::vector<std::uint8_t>{0, 1, 2});
  CHECK(m.center == 1);
  CHECK(m.str() == "a ^b c");

  // a -| (b -| c) and a -| (b |- c) share a normal form
  DiMonomial m1 = normal_form(L(leaf(0), L(leaf(1), leaf(2))));
  DiMonomial m2 = normal_form(L(leaf(0), R(leaf(1), leaf(2))));
  CHECK(m1 == m2);
  CHECK(m1.str() == "^a b c");
}

TEST_CASE("normal form is constant on axiom-equivalence classes (exhaustive, degree <= 4)") {
  // the five axioms say the normal form depends only on factor order and
  // center: every tree maps to the monomial predicted by its own word and
  // center, and all n distinct forms per word arise
  for (int n : {2, 3, 4}) {
    std::vector<std::uint8_t> word(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    std::set<std::string> forms;
    std::vector<DiTree> trees = all_di_trees(word);
    for (const DiTree& t : trees) {
      DiMonomial m = normal_form(t);
      CHECK(m.word == word);
      CHECK(m.word[static_cast<std::size_t>(m.center)] == center(t));
      forms.insert(m.str());
    }
    CHECK(forms.size() == static_cast<std::size_t>(n));  // one per center position
  }
  // degree 3: per word, 2 shapes x 4 operation labelings collapse to 3 forms
  CHECK(all_di_trees({0, 1, 2}).size() == 8);
}

TEST_CASE("dialgebra monomial enumeration") {
  CHECK(enumerate_di_monomials(1).size() == 1);
  CHECK(enumerate_di_monomials(1)[0].str() == "^a");
  CHECK(enumerate_di_monomials(5).size() == 600);

  // the reference degree-3 order
  const char* expected[] = {"^a b c", "^a c b", "^b a c", "^b c a", "^c a b", "^c b a",
                            "a ^b c", "a ^c b", "b ^a c", "b ^c a", "c ^a b", "c ^b a",
                            "a b ^c", "a c ^b", "b a ^c", "b c ^a", "c a ^b", "c b ^a"};
  std::vector<DiMonomial> deg3 = enumerate_di_monomials(3);
  REQUIRE(deg3.size() == 18);
  for (int i = 0; i < 18; ++i) CHECK(deg3[static_cast<std::size_t>(i)].str() == expected[i]);

  // index round trip
  DiBasis basis(4);
  for (long i = 0; i < basis.size(); ++i) CHECK(basis.index_of(basis.monomial(i)) == i);
}

TEST_CASE("association type enumeration") {
  OpSpec binary{"m", 2, {}};
  SUBCASE("binary Catalan counts and reference degree-5 order") {
    CHECK(enumerate_association_types({binary}, 3).size() == 2);
    CHECK(enumerate_association_types({binary}, 4).size() == 5);
    std::vector<TypeTree> t5 = enumerate_association_types({binary}, 5);
    REQUIRE(t5.size() == 14);
    auto label = [&](const TypeTree& t) {
      LabeledTree m{t, {0, 1, 2, 3, 4}};
      return labeled_tree_str(m, {binary});
    };
    CHECK(label(t5[0]) == "m(m(m(m(a,b),c),d),e)");
    CHECK(label(t5[1]) == "m(m(m(a,m(b,c)),d),e)");
    CHECK(label(t5[2]) == "m(m(m(a,b),m(c,d)),e)");
    CHECK(label(t5[5]) == "m(m(m(a,b),c),m(d,e))");
    CHECK(label(t5[9]) == "m(a,m(m(m(b,c),d),e))");
    CHECK(label(t5[13]) == "m(a,m(b,m(c,m(d,e))))");
  }
  SUBCASE("one ternary operation") {
    OpSpec tri{"t", 3, {}};
    CHECK(enumerate_association_types({tri}, 3).size() == 1);
    CHECK(enumerate_association_types({tri}, 5).size() == 3);
    CHECK_THROWS(enumerate_association_types({tri}, 4));
  }
  SUBCASE("two ternary operations, degree 5") {
    std::vector<OpSpec> ops{{"t1", 3, {}}, {"t2", 3, {}}};
    CHECK(enumerate_association_types(ops, 5).size() == 12);
  }
}

TEST_CASE("symmetry-reduced monomial counts match the reference tables") {
  SUBCASE("combined diproduct basis: 690") {
    TypeBasis b = diproduct_deg5_both_basis();
    const long expected[10] = {120, 60, 60, 60, 30, 60, 60, 60, 120, 60};
    REQUIRE(b.type_count() == 10);
    for (int t = 0; t < 10; ++t) CHECK(b.type_size(t) == expected[t]);
    CHECK(b.size() == 690);
  }
  SUBCASE("Jordan dialgebra triple operations: 810") {
    TypeBasis b = jordan_ditriple_deg5_basis();
    const long expected[10] = {120, 120, 120, 60, 30, 60, 60, 60, 120, 60};
    REQUIRE(b.type_count() == 10);
    for (int t = 0; t < 10; ++t) CHECK(b.type_size(t) == expected[t]);
    CHECK(b.size() == 810);
  }
  SUBCASE("second diproduct alone: 90, absorbed third shape") {
    TypeBasis b = diproduct2_deg5_basis();
    CHECK(b.size() == 90);
    CHECK(b.type_size(0) == 60);
    CHECK(b.type_size(1) == 30);
    CHECK(b.type_size(2) == 0);
  }
  SUBCASE("binary nonassociative: 1680") { CHECK(binary_nonassoc_basis(5).size() == 1680); }
}

TEST_CASE("the group action on basis monomials") {
  TypeBasis b = diproduct_deg5_both_basis();
  std::mt19937_64 rng(4242);
  std::vector<Permutation> s5 = all_permutations(5);
  std::uniform_int_distribution<std::size_t> pick_perm(0, s5.size() - 1);
  std::uniform_int_distribution<long> pick_mono(0, b.size() - 1);

  SUBCASE("identity acts trivially") {
    for (long i = 0; i < b.size(); ++i) CHECK(b.act(Permutation::identity(5), i) == i);
  }
  SUBCASE("act is a group action (random spot checks)") {
    for (int trial = 0; trial < 200; ++trial) {
      const Permutation& s = s5[pick_perm(rng)];
      const Permutation& t = s5[pick_perm(rng)];
      long m = pick_mono(rng);
      CHECK(b.act(s * t, m) == b.act(s, b.act(t, m)));
    }
  }
  SUBCASE("symmetric argument transpositions fix type-4 monomials") {
    // ((a,b,c)_2,d,e)_2 is symmetric in its inner first/third arguments
    long idx = b.type_offset(3);
    Permutation swap_ac = Permutation::transposition(5, 0, 2);
    CHECK(b.act(swap_ac, idx) == idx);
  }
  SUBCASE("orbit sizes divide 120") {
    for (int trial = 0; trial < 20; ++trial) {
      long m = pick_mono(rng);
      std::set<long> orbit;
      for (const Permutation& s : s5) orbit.insert(b.act(s, m));
      CHECK(120 % orbit.size() == 0);
    }
  }
}

TEST_CASE("cross-type canonicalization uses the declared operation symmetries") {
  // in the 90-element basis the third shape is absorbed into the first
  TypeBasis b = diproduct2_deg5_basis();
  TypeTree inner = TypeTree::node(0, {TypeTree::leaf(), TypeTree::leaf(), TypeTree::leaf()});
  TypeTree t3 = TypeTree::node(0, {TypeTree::leaf(), TypeTree::leaf(), inner});
  LabeledTree m{t3, {0, 1, 2, 3, 4}};
  long idx = b.index_of(m);
  // (a,b,(c,d,e)) rewrites through the outer symmetry to ((c,d,e),b,a)
  TypeTree t1 = TypeTree::node(0, {inner, TypeTree::leaf(), TypeTree::leaf()});
  LabeledTree m2{t1, {2, 3, 4, 1, 0}};
  CHECK(b.index_of(m2) == idx);
}
