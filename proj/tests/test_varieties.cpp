#include <doctest.h>

#include "dialid/serialize.hpp"
#include "dialid/varieties.hpp"

using namespace dialid;

TEST_CASE("builtin variety catalogue") {
  for (const std::string& name : builtin_variety_names()) {
    Variety v = builtin_variety(name);
    CHECK(!v.identities.empty());
    CHECK(!v.ops.empty());
  }
  CHECK(builtin_variety("jtd").identities.size() == 8);
  CHECK(builtin_variety("jtd-bso").identities.size() == 8);
  CHECK(builtin_variety("jordan-dialgebra").identities.size() == 3);
  CHECK_THROWS(builtin_variety("no-such-variety"));
}

TEST_CASE("axioms of the free-dialgebra varieties expand to zero") {
  std::vector<DiOpTemplate> dip = jordan_triple_diproducts();
  std::vector<DiOpTemplate> binds{dip[0], dip[1]};
  for (const std::string& name : {"jtd", "jtd-bso"}) {
    Variety v = builtin_variety(name);
    for (bool ok : identities_vanish_in_dialgebra(v.identities, binds)) CHECK(ok);
  }
}

TEST_CASE("differential dialgebras") {
  ModField f(101);
  SUBCASE("matrices with a square-zero element: dimension 8") {
    ConcreteDialgebra d = make_differential_dialgebra(f, m2_theta_assoc_table(f), m2_theta_differential(f));
    CHECK(d.dim == 8);
    CHECK(dialgebra_axioms_hold(d));
  }
  SUBCASE("truncated polynomials: dimension 2") {
    ConcreteDialgebra d = make_differential_dialgebra(f, poly_theta_assoc_table(f), poly_theta_differential(f));
    CHECK(d.dim == 2);
    CHECK(dialgebra_axioms_hold(d));
  }
  SUBCASE("zero differential gives the zero dialgebra") {
    ModMatrix zero_d = ModMatrix::Zero(8, 8);
    ConcreteDialgebra d = make_differential_dialgebra(f, m2_theta_assoc_table(f), zero_d);
    CHECK(d.left.isZero());
    CHECK(d.right.isZero());
    CHECK(dialgebra_axioms_hold(d));
  }
  SUBCASE("a non-derivation is rejected") {
    ModMatrix bad = ModMatrix::Zero(8, 8);
    bad(0, 0) = 1;  // d(E11) = E11 violates d^2 = 0
    CHECK_THROWS(make_differential_dialgebra(f, m2_theta_assoc_table(f), bad));
  }
}

TEST_CASE("instance verification") {
  ModField f(101);
  Variety jtd = builtin_variety("jtd");
  std::vector<DiOpTemplate> dip = jordan_triple_diproducts();

  SUBCASE("every associative algebra: both triple products equal abc + cba") {
    // an associative algebra is a dialgebra with both products equal
    ModMatrix assoc = m2_theta_assoc_table(f);
    ConcreteDialgebra d{f, 8, assoc, assoc};
    CHECK(dialgebra_axioms_hold(d));
    InstanceOp t1 = op_from_di_template(d, dip[0]);
    InstanceOp t2 = op_from_di_template(d, dip[1]);
    InstanceReport rep = verify_on_instance(f, 8, {t1, t2}, jtd.identities, 25, 99);
    CHECK(rep.violations == 0);
  }

  SUBCASE("a corrupted axiom is caught") {
    ConcreteDialgebra d = make_differential_dialgebra(f, m2_theta_assoc_table(f), m2_theta_differential(f));
    InstanceOp t1 = op_from_di_template(d, dip[0]);
    InstanceOp t2 = op_from_di_template(d, dip[1]);
    TreePoly corrupted = jtd.identities[4];
    auto first = corrupted.terms().begin();
    corrupted.add(first->first, -2 * first->second);
    InstanceReport rep = verify_on_instance(f, 8, {t1, t2}, {corrupted}, 25, 99);
    CHECK(rep.violations > 0);
  }

  SUBCASE("reports are reproducible for a fixed seed") {
    ConcreteDialgebra d = make_differential_dialgebra(f, m2_theta_assoc_table(f), m2_theta_differential(f));
    InstanceOp t1 = op_from_di_template(d, dip[0]);
    InstanceOp t2 = op_from_di_template(d, dip[1]);
    InstanceReport r1 = verify_on_instance(f, 8, {t1, t2}, jtd.identities, 10, 1234);
    InstanceReport r2 = verify_on_instance(f, 8, {t1, t2}, jtd.identities, 10, 1234);
    CHECK(r1.violations == r2.violations);
    CHECK(r1.per_identity_violations == r2.per_identity_violations);
  }
}

TEST_CASE("derived triple operations in a special Jordan dialgebra") {
  ModField f(103);
  ConcreteDialgebra d = make_differential_dialgebra(f, poly_theta_assoc_table(f), poly_theta_differential(f));
  ModMatrix bin = special_jordan_product_table(d);
  std::vector<TreeOpTemplate> q = jordan_di_triple_templates();
  std::vector<DiOpTemplate> dip = jordan_triple_diproducts();
  for (int i = 0; i < 2; ++i) {
    InstanceOp qi = op_from_tree_template(f, d.dim, bin, q[static_cast<std::size_t>(i)]);
    InstanceOp ti = op_from_di_template(d, dip[static_cast<std::size_t>(i)]);
    bool doubled = true;
    for (Index r = 0; r < qi.table.rows(); ++r)
      for (Index c = 0; c < qi.table.cols(); ++c)
        if (!f.is_zero(f.sub(qi.table(r, c), f.mul(2, ti.table(r, c))))) doubled = false;
    CHECK(doubled);
  }
}

TEST_CASE("structure constants round-trip through TSV") {
  ModField f(101);
  ConcreteDialgebra d = make_differential_dialgebra(f, poly_theta_assoc_table(f), poly_theta_differential(f));
  ConcreteDialgebra back = parse_dialgebra_tsv(dialgebra_tsv(d));
  CHECK(back.dim == d.dim);
  CHECK(back.field.modulus() == d.field.modulus());
  CHECK(matrices_equal(back.left, d.left));
  CHECK(matrices_equal(back.right, d.right));
}

TEST_CASE("serialization round trips") {
  SUBCASE("identities") {
    Variety jtd = builtin_variety("jtd");
    for (const TreePoly& id : jtd.identities) {
      std::string text = identity_str(id, jtd.ops);
      CHECK(parse_identity(text, jtd.ops) == id);
    }
  }
  SUBCASE("group algebra operations") {
    for (const std::string& text : {"abc+cba", "ab-ba", "2abc-acb+bca"}) {
      GroupAlgebraOp op = parse_group_algebra_op(text);
      CHECK(parse_group_algebra_op(group_algebra_op_str(op)).terms == op.terms);
    }
  }
  SUBCASE("dialgebra templates") {
    for (const DiOpTemplate& t : jordan_triple_diproducts())
      CHECK(parse_di_template(di_template_str(t), 3).terms == t.terms);
  }
  SUBCASE("variety files") {
    Variety jd = builtin_variety("jordan-dialgebra");
    Variety back = parse_variety_file(variety_file_str(jd));
    CHECK(back.name == jd.name);
    REQUIRE(back.identities.size() == jd.identities.size());
    for (std::size_t i = 0; i < jd.identities.size(); ++i)
      CHECK(back.identities[i] == jd.identities[i]);
  }
}
