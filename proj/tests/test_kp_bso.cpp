#include <doctest.h>

#include "dialid/bso.hpp"
#include "dialid/engine.hpp"
#include "dialid/kp.hpp"
#include "dialid/serialize.hpp"
#include "dialid/varieties.hpp"

using namespace dialid;

namespace {

std::vector<OpSpec> subscripted(const std::string& base, int n) {
  std::vector<OpSpec> out;
  for (int i = 1; i <= n; ++i) out.push_back(OpSpec{base + std::to_string(i), n, {}});
  return out;
}

TreePoly strip_subscripts(const TreePoly& p) {
  struct Walk {
    static TypeTree go(const TypeTree& t) {
      if (t.is_leaf()) return t;
      std::vector<TypeTree> kids;
      for (const TypeTree& k : t.kids) kids.push_back(go(k));
      return TypeTree::node(0, std::move(kids));
    }
  };
  TreePoly out;
  for (const auto& [m, c] : p.terms()) out.add(LabeledTree{Walk::go(m.shape), m.leaves}, c);
  return out;
}

}  // namespace

TEST_CASE("KP on associativity produces the dialgebra axioms") {
  Variety assoc{"assoc", {OpSpec{"b", 2, {}}}, {}};
  TreePoly a = parse_identity("+b(b(a,b),c) -b(a,b(b,c))", assoc.ops);
  std::vector<TreePoly> part1 = kp_part1(a, 2);
  std::vector<OpSpec> ops2 = subscripted("b", 2);
  REQUIRE(part1.size() == 3);
  CHECK(identity_str(part1[0], ops2) == identity_str(parse_identity(
            "+b1(b1(a,b),c) -b1(a,b1(b,c))", ops2), ops2));
  CHECK(part1[1] == parse_identity("+b1(b2(a,b),c) -b2(a,b1(b,c))", ops2));
  CHECK(part1[2] == parse_identity("+b2(b2(a,b),c) -b2(a,b2(b,c))", ops2));

  std::vector<TreePoly> part2 = kp_part2(2);
  REQUIRE(part2.size() == 2);
  CHECK(part2[0] == parse_identity("+b1(a,b1(b,c)) -b1(a,b2(b,c))", ops2));
  CHECK(part2[1] == parse_identity("+b2(b1(a,b),c) -b2(b2(a,b),c)", ops2));
}

TEST_CASE("KP on commutativity identifies the opposite operation") {
  std::vector<OpSpec> ops1{OpSpec{"b", 2, {}}};
  TreePoly comm = parse_identity("+b(a,b) -b(b,a)", ops1);
  std::vector<TreePoly> out = kp_part1(comm, 2);
  std::vector<OpSpec> ops2 = subscripted("b", 2);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == parse_identity("+b1(a,b) -b2(b,a)", ops2));
  CHECK(out[1] == parse_identity("+b2(a,b) -b1(b,a)", ops2));
}

TEST_CASE("KP on the Jordan algebra identities reproduces the reference reduction") {
  Variety ja = builtin_variety("jordan-algebra-linearized");
  std::vector<TreePoly> all;
  for (const TreePoly& id : ja.identities)
    for (TreePoly& out : kp_part1(id, 2)) all.push_back(std::move(out));
  REQUIRE(all.size() == 2 + 4);

  std::vector<TreePoly> reduced = kp_reduce_opposite(all, 1, Permutation::reversal(2));
  std::vector<OpSpec> ops1{OpSpec{"m", 2, {}}};
  REQUIRE(reduced.size() == 4);  // the degree-2 identities collapse
  CHECK(reduced[0] ==
        parse_identity("+m(m(m(a,c),b),d) +m(m(m(a,d),b),c) +m(a,m(b,m(d,c))) "
                       "-m(m(a,c),m(b,d)) -m(m(a,d),m(b,c)) -m(m(a,b),m(d,c))", ops1));
  CHECK(reduced[1] ==
        parse_identity("+m(m(b,m(c,a)),d) +m(m(b,m(d,a)),c) +m(m(b,m(d,c)),a) "
                       "-m(m(b,d),m(c,a)) -m(m(b,c),m(d,a)) -m(m(b,a),m(d,c))", ops1));
  CHECK(reduced[2] ==
        parse_identity("+m(m(m(c,a),b),d) +m(c,m(b,m(d,a))) +m(m(m(c,d),b),a) "
                       "-m(m(c,a),m(b,d)) -m(m(c,b),m(d,a)) -m(m(c,d),m(b,a))", ops1));
  CHECK(reduced[3] ==
        parse_identity("+m(d,m(b,m(c,a))) +m(m(m(d,a),b),c) +m(m(m(d,c),b),a) "
                       "-m(m(d,b),m(c,a)) -m(m(d,a),m(b,c)) -m(m(d,c),m(b,a))", ops1));
}

TEST_CASE("KP on the triple-system symmetry") {
  Variety jts = builtin_variety("jts");
  std::vector<TreePoly> out = kp_part1(jts.identities[0], 3);
  std::vector<OpSpec> ops3 = subscripted("t", 3);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == parse_identity("+t1(a,b,c) -t3(c,b,a)", ops3));
  CHECK(out[1] == parse_identity("+t2(a,b,c) -t2(c,b,a)", ops3));
  CHECK(out[2] == parse_identity("+t3(a,b,c) -t1(c,b,a)", ops3));
}

TEST_CASE("KP degree-5 output after eliminating the opposite operation") {
  Variety jts = builtin_variety("jts");
  std::vector<TreePoly> all;
  for (const TreePoly& id : jts.identities)
    for (TreePoly& out : kp_part1(id, 3)) all.push_back(std::move(out));
  REQUIRE(all.size() == 8);
  std::vector<TreePoly> reduced = kp_reduce_opposite(all, 2, Permutation::reversal(3));
  std::vector<OpSpec> ops3 = subscripted("t", 3);
  REQUIRE(reduced.size() == 6);  // the symmetry keeps one identity, degree 5 keeps five

  CHECK(reduced[0] == parse_identity("+t2(a,b,c) -t2(c,b,a)", ops3));
  CHECK(reduced[1] == parse_identity(
            "+t1(a,b,t1(c,d,e)) -t1(t1(a,b,c),d,e) +t2(c,t2(b,a,d),e) -t1(t1(a,b,e),d,c)", ops3));
  CHECK(reduced[2] == parse_identity(
            "+t2(a,b,t1(c,d,e)) -t1(t2(a,b,c),d,e) +t2(c,t1(b,a,d),e) -t1(t2(a,b,e),d,c)", ops3));
  CHECK(reduced[3] == parse_identity(
            "+t1(t1(c,d,e),b,a) -t1(t1(c,b,a),d,e) +t1(c,t1(b,a,d),e) -t1(c,d,t1(a,b,e))", ops3));
  CHECK(reduced[4] == parse_identity(
            "+t1(t2(c,d,e),b,a) -t2(t1(c,b,a),d,e) +t2(c,t1(d,a,b),e) -t2(c,d,t1(a,b,e))", ops3));
  CHECK(reduced[5] == parse_identity(
            "+t1(t1(e,d,c),b,a) -t1(e,d,t1(c,b,a)) +t1(e,t1(d,a,b),c) -t1(t1(e,b,a),d,c)", ops3));
}

TEST_CASE("KP part 2 counts and window") {
  CHECK(kp_part2(1).empty());
  CHECK(kp_part2(2).size() == 2);
  CHECK(kp_part2(3).size() == 12);  // the twelve interchange identities
  for (const TreePoly& id : kp_part2(3)) CHECK(id.terms().begin()->first.degree() == 5);
}

TEST_CASE("erasing subscripts recovers the input identity") {
  for (const std::string& name : {"jts", "jordan-algebra-linearized"}) {
    Variety v = builtin_variety(name);
    const int n = v.ops[0].arity;
    for (const TreePoly& id : v.identities)
      for (const TreePoly& out : kp_part1(id, n)) CHECK(strip_subscripts(out) == id);
  }
}

TEST_CASE("reduce_opposite requires the defining identity") {
  std::vector<OpSpec> ops3 = subscripted("t", 3);
  std::vector<TreePoly> ids{parse_identity("+t1(a,b,c) -t2(a,b,c)", ops3)};
  CHECK_THROWS(kp_reduce_opposite(ids, 2, Permutation::reversal(3)));
  // a set not mentioning the operation passes through unchanged
  std::vector<TreePoly> ids2{parse_identity("+t3(a,b,c) -t1(c,b,a)", ops3),
                             parse_identity("+t1(a,b,c) -t2(a,b,c)", ops3)};
  std::vector<TreePoly> out = kp_reduce_opposite(ids2, 2, Permutation::reversal(3));
  REQUIRE(out.size() == 1);
  CHECK(out[0] == ids2[1]);
}

TEST_CASE("the KP output spans the same identity space as the reference axioms") {
  // full KP output of the triple-system axioms, opposite eliminated, against
  // J1..J8, compared degreewise over the two-operation monomial spaces
  ModField f(101);
  Variety jts = builtin_variety("jts");
  Variety jtd = builtin_variety("jtd");
  std::vector<TreePoly> all;
  for (const TreePoly& id : jts.identities)
    for (TreePoly& out : kp_part1(id, 3)) all.push_back(std::move(out));
  for (TreePoly& out : kp_part2(3)) all.push_back(std::move(out));
  std::vector<TreePoly> kp_set = kp_reduce_opposite(all, 2, Permutation::reversal(3));

  auto split_by_degree = [](const std::vector<TreePoly>& ids, int degree) {
    std::vector<TreePoly> out;
    for (const TreePoly& id : ids)
      if (!id.is_zero() && id.terms().begin()->first.degree() == degree) out.push_back(id);
    return out;
  };

  for (int degree : {3, 5}) {
    TypeBasis basis = jtd_pair_basis(degree);
    auto span_of = [&](const std::vector<TreePoly>& ids) {
      RowSpan<ModField> span(f, basis.size());
      const std::vector<Permutation> taus = all_permutations(degree);
      auto add_poly = [&](const TreePoly& p) {
        for (const Permutation& tau : taus) {
          std::vector<std::int64_t> v = tree_poly_vector(relabel(p, tau), basis);
          std::vector<ModField::Scalar> row(v.size());
          for (std::size_t k = 0; k < v.size(); ++k) row[k] = f.from_int(v[k]);
          span.add(std::move(row));
        }
      };
      for (const TreePoly& id : split_by_degree(ids, degree)) add_poly(id);
      if (degree == 5)
        for (const TreePoly& id3 : split_by_degree(ids, 3))
          for (const TreePoly& cons : consequences_nary(id3, 2, 3)) add_poly(cons);
      return span;
    };
    RowSpan<ModField> a = span_of(kp_set);
    RowSpan<ModField> b = span_of(jtd.identities);
    CHECK(a.rank() == b.rank());
    CHECK(matrices_equal(a.canonical(), b.canonical()));
  }
}

TEST_CASE("BSO lift of the Jordan triple product") {
  std::vector<DiOpTemplate> lifted = bso(jordan_triple_product());
  std::vector<DiOpTemplate> expected = jordan_triple_diproducts();
  REQUIRE(lifted.size() == 3);
  for (int i = 0; i < 3; ++i)
    CHECK(lifted[static_cast<std::size_t>(i)].terms == expected[static_cast<std::size_t>(i)].terms);
  CHECK(di_template_str(lifted[0]) == "^abc + cb^a");
  CHECK(di_template_str(lifted[1]) == "a^bc + c^ba");
  CHECK(di_template_str(lifted[2]) == "ab^c + ^cba");
}

TEST_CASE("BSO on a single word and on the Lie bracket") {
  GroupAlgebraOp word = parse_group_algebra_op("abc");
  std::vector<DiOpTemplate> lifted = bso(word);
  CHECK(di_template_str(lifted[0]) == "^abc");
  CHECK(di_template_str(lifted[1]) == "a^bc");
  CHECK(di_template_str(lifted[2]) == "ab^c");

  GroupAlgebraOp lie = parse_group_algebra_op("ab-ba");
  std::vector<DiOpTemplate> bracket = bso(lie);
  // the Leibniz bracket shape a -| b - b |- a
  CHECK(di_template_str(bracket[0]) == "^ab - b^a");
  CHECK(di_template_str(bracket[1]) == "a^b - ^ba");
}

TEST_CASE("the reversed first diproduct coincides with the third") {
  std::vector<BsoRelation> rels = bso_relations(jordan_triple_diproducts());
  bool found = false;
  for (const BsoRelation& r : rels)
    if (r.op_a == 0 && r.op_b == 2 && r.tau == Permutation::reversal(3)) found = true;
  CHECK(found);
}
