#include "dialid/varieties.hpp"

#include <random>
#include <stdexcept>

namespace dialid {

namespace {

constexpr int a = 0, b = 1, c = 2, d = 3, e = 4;

LabeledTree V(int v) { return LabeledTree{TypeTree::leaf(), {static_cast<std::uint8_t>(v)}}; }

LabeledTree N(int op, std::vector<LabeledTree> kids) {
  LabeledTree out;
  std::vector<TypeTree> shapes;
  for (LabeledTree& k : kids) {
    shapes.push_back(k.shape);
    out.leaves.insert(out.leaves.end(), k.leaves.begin(), k.leaves.end());
  }
  out.shape = TypeTree::node(op, std::move(shapes));
  return out;
}

TreePoly sum(std::vector<std::pair<std::int64_t, LabeledTree>> terms) {
  TreePoly p;
  for (auto& [coeff, m] : terms) p.add(std::move(m), coeff);
  return p;
}

const OpSpec kBinary{"m", 2, {}};
const OpSpec kTri1{"t1", 3, {}};
const OpSpec kTri2{"t2", 3, {}};
const OpSpec kTri2Sym{"t2", 3, {{0, 2}}};
const OpSpec kTriSingle{"t", 3, {}};

TypeTree tri_node(int op) {
  return TypeTree::node(op, {TypeTree::leaf(), TypeTree::leaf(), TypeTree::leaf()});
}

/// inner operation nested at the given argument of the outer operation
TypeTree tri_nested(int outer, int pos, int inner) {
  std::vector<TypeTree> kids;
  for (int s = 0; s < 3; ++s) kids.push_back(s == pos ? tri_node(inner) : TypeTree::leaf());
  return TypeTree::node(outer, std::move(kids));
}

/// The ten association types of the combined degree-5 computations, in the
/// standard numbering: pure first operation (inner argument 1..3), pure
/// second, then the mixed ones.
std::vector<TypeTree> ten_types() {
  return {
      tri_nested(0, 0, 0), tri_nested(0, 1, 0), tri_nested(0, 2, 0),  // 1..3
      tri_nested(1, 0, 1), tri_nested(1, 1, 1),                       // 4..5
      tri_nested(0, 0, 1), tri_nested(0, 1, 1), tri_nested(0, 2, 1),  // 6..8
      tri_nested(1, 0, 0), tri_nested(1, 1, 0),                       // 9..10
  };
}

}  // namespace

GroupAlgebraOp jordan_triple_product() {
  GroupAlgebraOp w;
  w.arity = 3;
  w.terms[Permutation({0, 1, 2})] = 1;
  w.terms[Permutation({2, 1, 0})] = 1;
  return w;
}

std::vector<DiOpTemplate> jordan_triple_diproducts() {
  std::vector<DiOpTemplate> out(3);
  for (auto& t : out) t.arity = 3;
  out[0].terms[{Permutation({0, 1, 2}), 0}] = 1;  // ^a b c
  out[0].terms[{Permutation({2, 1, 0}), 2}] = 1;  // c b ^a
  out[1].terms[{Permutation({0, 1, 2}), 1}] = 1;  // a ^b c
  out[1].terms[{Permutation({2, 1, 0}), 1}] = 1;  // c ^b a
  out[2].terms[{Permutation({0, 1, 2}), 2}] = 1;  // a b ^c
  out[2].terms[{Permutation({2, 1, 0}), 0}] = 1;  // ^c b a
  return out;
}

std::vector<TreeOpTemplate> jordan_di_triple_templates() {
  // slot ids double as variable names inside the template body
  TreeOpTemplate q1, q2;
  q1.arity = q2.arity = 3;
  q1.body = sum({{+1, N(0, {N(0, {V(0), V(1)}), V(2)})},
                 {-1, N(0, {N(0, {V(0), V(2)}), V(1)})},
                 {+1, N(0, {V(0), N(0, {V(1), V(2)})})}});
  q2.body = sum({{+1, N(0, {N(0, {V(1), V(0)}), V(2)})},
                 {+1, N(0, {N(0, {V(1), V(2)}), V(0)})},
                 {-1, N(0, {V(1), N(0, {V(0), V(2)})})}});
  return {q1, q2};
}

Variety builtin_variety(const std::string& name) {
  Variety v;
  v.name = name;
  if (name == "jts") {
    v.ops = {kTriSingle};
    v.identities = {
        sum({{+1, N(0, {V(a), V(b), V(c)})}, {-1, N(0, {V(c), V(b), V(a)})}}),
        sum({{+1, N(0, {V(a), V(b), N(0, {V(c), V(d), V(e)})})},
             {-1, N(0, {N(0, {V(a), V(b), V(c)}), V(d), V(e)})},
             {+1, N(0, {V(c), N(0, {V(b), V(a), V(d)}), V(e)})},
             {-1, N(0, {V(c), V(d), N(0, {V(a), V(b), V(e)})})}}),
    };
  } else if (name == "jtd") {
    v.ops = {kTri1, kTri2};
    v.identities = {
        // J1
        sum({{+1, N(1, {V(a), V(b), V(c)})}, {-1, N(1, {V(c), V(b), V(a)})}}),
        // J2
        sum({{+1, N(0, {V(a), N(0, {V(b), V(c), V(d)}), V(e)})},
             {-1, N(0, {V(a), N(1, {V(b), V(c), V(d)}), V(e)})}}),
        // J3
        sum({{+1, N(0, {V(a), V(b), N(0, {V(c), V(d), V(e)})})},
             {-1, N(0, {V(a), V(b), N(1, {V(c), V(d), V(e)})})}}),
        // J4
        sum({{+1, N(1, {N(0, {V(a), V(b), V(c)}), V(d), V(e)})},
             {-1, N(1, {N(1, {V(a), V(b), V(c)}), V(d), V(e)})}}),
        // J5
        sum({{+1, N(0, {N(0, {V(e), V(d), V(c)}), V(b), V(a)})},
             {-1, N(0, {N(0, {V(e), V(b), V(a)}), V(d), V(c)})},
             {+1, N(0, {V(e), N(0, {V(d), V(a), V(b)}), V(c)})},
             {-1, N(0, {V(e), V(d), N(0, {V(c), V(b), V(a)})})}}),
        // J6
        sum({{+1, N(0, {N(1, {V(e), V(d), V(c)}), V(b), V(a)})},
             {-1, N(1, {N(0, {V(e), V(b), V(a)}), V(d), V(c)})},
             {+1, N(1, {V(e), N(0, {V(d), V(a), V(b)}), V(c)})},
             {-1, N(1, {V(e), V(d), N(0, {V(c), V(b), V(a)})})}}),
        // J7
        sum({{+1, N(0, {V(a), V(b), N(0, {V(c), V(d), V(e)})})},
             {-1, N(0, {N(0, {V(a), V(b), V(c)}), V(d), V(e)})},
             {+1, N(1, {V(c), N(1, {V(b), V(a), V(d)}), V(e)})},
             {-1, N(0, {N(0, {V(a), V(b), V(e)}), V(d), V(c)})}}),
        // J8
        sum({{+1, N(1, {V(a), V(b), N(0, {V(c), V(d), V(e)})})},
             {-1, N(0, {N(1, {V(a), V(b), V(c)}), V(d), V(e)})},
             {+1, N(1, {V(c), N(0, {V(b), V(a), V(d)}), V(e)})},
             {-1, N(0, {N(1, {V(a), V(b), V(e)}), V(d), V(c)})}}),
    };
  } else if (name == "jtd-bso") {
    v.ops = {kTri1, kTri2};
    v.identities = {
        sum({{+1, N(1, {V(a), V(b), V(c)})}, {-1, N(1, {V(c), V(b), V(a)})}}),
        sum({{+1, N(0, {V(a), N(0, {V(b), V(c), V(d)}), V(e)})},
             {-1, N(0, {V(a), N(1, {V(b), V(c), V(d)}), V(e)})}}),
        sum({{+1, N(0, {V(a), V(b), N(0, {V(c), V(d), V(e)})})},
             {-1, N(0, {V(a), V(b), N(1, {V(c), V(d), V(e)})})}}),
        sum({{+1, N(1, {N(0, {V(a), V(b), V(c)}), V(d), V(e)})},
             {-1, N(1, {N(1, {V(a), V(b), V(c)}), V(d), V(e)})}}),
        sum({{+1, N(0, {N(0, {V(e), V(d), V(c)}), V(b), V(a)})},
             {-1, N(0, {N(0, {V(e), V(b), V(a)}), V(d), V(c)})},
             {+1, N(0, {V(e), N(0, {V(d), V(a), V(b)}), V(c)})},
             {-1, N(0, {V(e), V(d), N(0, {V(c), V(b), V(a)})})}}),
        sum({{+1, N(0, {N(1, {V(e), V(d), V(c)}), V(b), V(a)})},
             {-1, N(1, {N(0, {V(e), V(b), V(a)}), V(d), V(c)})},
             {+1, N(1, {V(e), N(0, {V(d), V(a), V(b)}), V(c)})},
             {-1, N(1, {V(e), V(d), N(0, {V(c), V(b), V(a)})})}}),
        sum({{+1, N(1, {N(0, {V(e), V(d), V(c)}), V(b), V(a)})},
             {-1, N(0, {N(1, {V(e), V(b), V(a)}), V(d), V(c)})},
             {+1, N(1, {V(e), N(0, {V(b), V(a), V(d)}), V(c)})},
             {-1, N(0, {N(1, {V(c), V(b), V(a)}), V(d), V(e)})}}),
        sum({{+1, N(1, {V(a), N(1, {V(b), V(c), V(d)}), V(e)})},
             {-1, N(0, {N(0, {V(c), V(b), V(a)}), V(d), V(e)})},
             {-1, N(0, {N(0, {V(c), V(d), V(a)}), V(b), V(e)})},
             {+1, N(0, {V(c), N(0, {V(b), V(a), V(d)}), V(e)})}}),
    };
  } else if (name == "jordan-dialgebra") {
    v.ops = {kBinary};
    v.identities = {
        // right commutativity
        sum({{+1, N(0, {V(a), N(0, {V(b), V(c)})})}, {-1, N(0, {V(a), N(0, {V(c), V(b)})})}}),
        // linearized Osborn identity
        sum({{+1, N(0, {N(0, {N(0, {V(b), V(a)}), V(c)}), V(d)})},
             {+1, N(0, {N(0, {N(0, {V(b), V(d)}), V(c)}), V(a)})},
             {-1, N(0, {N(0, {V(b), N(0, {V(a), V(c)})}), V(d)})},
             {-1, N(0, {N(0, {V(b), N(0, {V(c), V(d)})}), V(a)})},
             {-1, N(0, {N(0, {V(b), N(0, {V(a), V(d)})}), V(c)})},
             {+1, N(0, {V(b), N(0, {N(0, {V(a), V(d)}), V(c)})})}}),
        // linearized right Jordan identity
        sum({{+1, N(0, {N(0, {V(b), N(0, {V(a), V(c)})}), V(d)})},
             {+1, N(0, {N(0, {V(b), N(0, {V(a), V(d)})}), V(c)})},
             {+1, N(0, {N(0, {V(b), N(0, {V(c), V(d)})}), V(a)})},
             {-1, N(0, {N(0, {V(b), V(d)}), N(0, {V(a), V(c)})})},
             {-1, N(0, {N(0, {V(b), V(c)}), N(0, {V(a), V(d)})})},
             {-1, N(0, {N(0, {V(b), V(a)}), N(0, {V(c), V(d)})})}}),
    };
  } else if (name == "jordan-algebra-linearized") {
    v.ops = {kBinary};
    v.identities = {
        sum({{+1, N(0, {V(a), V(b)})}, {-1, N(0, {V(b), V(a)})}}),
        sum({{+1, N(0, {N(0, {N(0, {V(a), V(c)}), V(b)}), V(d)})},
             {+1, N(0, {N(0, {N(0, {V(a), V(d)}), V(b)}), V(c)})},
             {+1, N(0, {N(0, {N(0, {V(c), V(d)}), V(b)}), V(a)})},
             {-1, N(0, {N(0, {V(a), V(c)}), N(0, {V(b), V(d)})})},
             {-1, N(0, {N(0, {V(a), V(d)}), N(0, {V(b), V(c)})})},
             {-1, N(0, {N(0, {V(c), V(d)}), N(0, {V(b), V(a)})})}}),
    };
  } else {
    throw std::invalid_argument("builtin_variety: unknown name '" + name + "'");
  }
  return v;
}

std::vector<std::string> builtin_variety_names() {
  return {"jts", "jtd", "jtd-bso", "jordan-dialgebra", "jordan-algebra-linearized"};
}

TreePoly osborn_linearized_o2() {
  return sum({{+1, N(0, {N(0, {N(0, {V(a), V(c)}), V(b)}), V(d)})},
              {+1, N(0, {N(0, {N(0, {V(a), V(d)}), V(b)}), V(c)})},
              {-1, N(0, {N(0, {V(a), V(b)}), N(0, {V(c), V(d)})})},
              {-1, N(0, {N(0, {V(a), V(c)}), N(0, {V(b), V(d)})})},
              {-1, N(0, {N(0, {V(a), V(d)}), N(0, {V(b), V(c)})})},
              {+1, N(0, {V(a), N(0, {N(0, {V(c), V(d)}), V(b)})})}});
}

std::vector<TreePoly> diproduct1_deg5_identities() {
  return {
      sum({{+1, N(0, {V(a), N(0, {V(b), V(c), V(d)}), V(e)})},
           {-1, N(0, {V(a), N(0, {V(d), V(c), V(b)}), V(e)})}}),
      sum({{+1, N(0, {V(a), V(b), N(0, {V(c), V(d), V(e)})})},
           {-1, N(0, {V(a), V(b), N(0, {V(e), V(d), V(c)})})}}),
      sum({{+1, N(0, {N(0, {V(e), V(d), V(c)}), V(b), V(a)})},
           {-1, N(0, {N(0, {V(e), V(b), V(a)}), V(d), V(c)})},
           {+1, N(0, {V(e), N(0, {V(d), V(a), V(b)}), V(c)})},
           {-1, N(0, {V(e), V(d), N(0, {V(c), V(b), V(a)})})}}),
  };
}

TreePoly diproduct1_deg5_rewritten_third() {
  return sum({{+1, N(0, {N(0, {V(a), V(b), V(c)}), V(d), V(e)})},
              {-1, N(0, {N(0, {V(a), V(d), V(e)}), V(b), V(c)})},
              {+1, N(0, {V(a), N(0, {V(b), V(e), V(d)}), V(c)})},
              {-1, N(0, {V(a), V(b), N(0, {V(c), V(d), V(e)})})}});
}

TypeBasis diproduct_deg3_basis(int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("diproduct_deg3_basis: which must be 1 or 2");
  OpSpec op = (which == 1) ? kTri1 : kTri2;
  return TypeBasis({op}, {tri_node(0)});
}

TypeBasis diproduct1_deg5_basis() {
  return TypeBasis({kTri1}, enumerate_association_types({kTri1}, 5));
}

TypeBasis diproduct2_deg5_basis() {
  std::vector<OpSpec> ops{kTri2Sym};
  return TypeBasis(ops, enumerate_association_types(ops, 5));
}

TypeBasis diproduct_deg5_both_basis() {
  std::vector<OpSpec> ops{kTri1, kTri2Sym};
  std::vector<std::vector<Permutation>> extras(10);
  extras[1] = {Permutation::transposition(5, 1, 3)};  // middle-argument reversal of type 2
  extras[2] = {Permutation::transposition(5, 2, 4)};  // third-argument reversal of type 3
  return TypeBasis(ops, ten_types(), extras);
}

TypeBasis jordan_ditriple_deg3_basis() {
  std::vector<OpSpec> ops{{"q1", 3, {}}, {"q2", 3, {}}};
  return TypeBasis(ops, enumerate_association_types(ops, 3));
}

TypeBasis jordan_ditriple_deg5_basis() {
  std::vector<OpSpec> ops{{"q1", 3, {}}, {"q2", 3, {{0, 2}}}};
  return TypeBasis(ops, ten_types());
}

TypeBasis jordan_ditriple_deg5_processing_basis() {
  std::vector<OpSpec> ops{{"q1", 3, {}}, {"q2", 3, {{0, 2}}}};
  const std::vector<TypeTree> numbered = ten_types();
  const int order[10] = {2, 3, 4, 6, 7, 5, 8, 9, 10, 1};
  std::vector<TypeTree> types;
  for (int t : order) types.push_back(numbered[static_cast<std::size_t>(t - 1)]);
  return TypeBasis(ops, types);
}

TypeBasis binary_nonassoc_basis(int degree) {
  return TypeBasis({kBinary}, enumerate_association_types({kBinary}, degree));
}

TypeBasis jtd_pair_basis(int degree) {
  std::vector<OpSpec> ops{kTri1, kTri2};
  return TypeBasis(ops, enumerate_association_types(ops, degree));
}

// ---- concrete instances ------------------------------------------------------

namespace {

using Vec = std::vector<std::int32_t>;

Vec table_mul(const ModField& F, const ModMatrix& table, int dim, const Vec& x, const Vec& y) {
  Vec out(static_cast<std::size_t>(dim), 0);
  for (int i = 0; i < dim; ++i) {
    if (F.is_zero(x[static_cast<std::size_t>(i)])) continue;
    for (int j = 0; j < dim; ++j) {
      if (F.is_zero(y[static_cast<std::size_t>(j)])) continue;
      const std::int32_t xy = F.mul(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]);
      const Index row = static_cast<Index>(i) * dim + j;
      for (int k = 0; k < dim; ++k)
        out[static_cast<std::size_t>(k)] =
            F.add(out[static_cast<std::size_t>(k)], F.mul(xy, table(row, k)));
    }
  }
  return out;
}

Vec apply_linear(const ModField& F, const ModMatrix& map, int dim, const Vec& x) {
  Vec out(static_cast<std::size_t>(dim), 0);
  for (int i = 0; i < dim; ++i) {
    if (F.is_zero(x[static_cast<std::size_t>(i)])) continue;
    for (int k = 0; k < dim; ++k)
      out[static_cast<std::size_t>(k)] = F.add(
          out[static_cast<std::size_t>(k)], F.mul(x[static_cast<std::size_t>(i)], map(i, k)));
  }
  return out;
}

Vec basis_vec(int dim, int i) {
  Vec v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

bool all_zero(const ModField& F, const Vec& v) {
  for (std::int32_t x : v)
    if (!F.is_zero(x)) return false;
  return true;
}

Vec vec_sub(const ModField& F, const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = F.sub(x[i], y[i]);
  return out;
}

}  // namespace

bool dialgebra_axioms_hold(const ConcreteDialgebra& d, std::string* why) {
  const ModField& F = d.field;
  const int n = d.dim;
  auto L = [&](const Vec& x, const Vec& y) { return table_mul(F, d.left, n, x, y); };
  auto R = [&](const Vec& x, const Vec& y) { return table_mul(F, d.right, n, x, y); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
        struct Case {
          const char* name;
          Vec lhs, rhs;
        };
        const Case cases[] = {
            {"(x-|y)|-z = (x|-y)|-z", R(L(x, y), z), R(R(x, y), z)},
            {"x-|(y-|z) = x-|(y|-z)", L(x, L(y, z)), L(x, R(y, z))},
            {"(x-|y)-|z = x-|(y-|z)", L(L(x, y), z), L(x, L(y, z))},
            {"(x|-y)|-z = x|-(y|-z)", R(R(x, y), z), R(x, R(y, z))},
            {"(x|-y)-|z = x|-(y-|z)", L(R(x, y), z), R(x, L(y, z))},
        };
        for (const Case& cs : cases)
          if (!all_zero(F, vec_sub(F, cs.lhs, cs.rhs))) {
            if (why)
              *why = std::string(cs.name) + " fails on basis triple (" + std::to_string(i) + "," +
                     std::to_string(j) + "," + std::to_string(k) + ")";
            return false;
          }
      }
  return true;
}

ConcreteDialgebra make_differential_dialgebra(const ModField& field, const ModMatrix& assoc,
                                              const ModMatrix& dmap) {
  const int n = static_cast<int>(dmap.rows());
  if (assoc.rows() != static_cast<Index>(n) * n || assoc.cols() != n || dmap.cols() != n)
    throw std::invalid_argument("make_differential_dialgebra: shape mismatch");
  // d^2 = 0
  for (int i = 0; i < n; ++i) {
    Vec di = apply_linear(field, dmap, n, basis_vec(n, i));
    if (!all_zero(field, apply_linear(field, dmap, n, di)))
      throw std::invalid_argument("make_differential_dialgebra: d^2 != 0");
  }
  // Leibniz rule on basis pairs, in the form the construction uses:
  // d(x d(y)) = d(x) d(y) = d(d(x) y).  (The truncated-polynomial examples
  // satisfy these although d is not a derivation of the full product.)
  auto mul = [&](const Vec& x, const Vec& y) { return table_mul(field, assoc, n, x, y); };
  auto dd = [&](const Vec& x) { return apply_linear(field, dmap, n, x); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec x = basis_vec(n, i), y = basis_vec(n, j);
      Vec want = mul(dd(x), dd(y));
      if (!all_zero(field, vec_sub(field, dd(mul(x, dd(y))), want)) ||
          !all_zero(field, vec_sub(field, dd(mul(dd(x), y)), want)))
        throw std::invalid_argument(
            "make_differential_dialgebra: d fails the differential Leibniz conditions");
    }
  // associativity of the base product (on basis triples)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
        if (!all_zero(field, vec_sub(field, mul(mul(x, y), z), mul(x, mul(y, z)))))
          throw std::invalid_argument("make_differential_dialgebra: base product not associative");
      }

  ConcreteDialgebra out{field, n, ModMatrix::Zero(static_cast<Index>(n) * n, n),
                        ModMatrix::Zero(static_cast<Index>(n) * n, n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec x = basis_vec(n, i), y = basis_vec(n, j);
      Vec lv = mul(x, dd(y));  // a -| b = a d(b)
      Vec rv = mul(dd(x), y);  // a |- b = d(a) b
      for (int k = 0; k < n; ++k) {
        out.left(static_cast<Index>(i) * n + j, k) = lv[static_cast<std::size_t>(k)];
        out.right(static_cast<Index>(i) * n + j, k) = rv[static_cast<std::size_t>(k)];
      }
    }
  std::string why;
  if (!dialgebra_axioms_hold(out, &why))
    throw std::logic_error("make_differential_dialgebra: axioms fail: " + why);
  return out;
}

ModMatrix m2_theta_assoc_table(const ModField& field) {
  // basis: E11, E12, E21, E22, tE11, tE12, tE21, tE22 with t^2 = 0, t central
  const int n = 8;
  ModMatrix table = ModMatrix::Zero(n * n, n);
  auto unit = [&](int x) { return std::make_pair(x / 4, x % 4); };  // (theta power, E index)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [tx, ex] = unit(x);
      auto [ty, ey] = unit(y);
      if (tx + ty >= 2) continue;  // theta^2 = 0
      const int xi = ex / 2, xj = ex % 2;  // E_{xi xj}
      const int yi = ey / 2, yj = ey % 2;
      if (xj != yi) continue;  // E_{ij} E_{kl} = delta_{jk} E_{il}
      const int prod = (tx + ty) * 4 + (xi * 2 + yj);
      table(static_cast<Index>(x) * n + y, prod) = 1;
    }
  (void)field;
  return table;
}

ModMatrix m2_theta_differential(const ModField& field) {
  const int n = 8;
  ModMatrix d = ModMatrix::Zero(n, n);
  for (int e4 = 0; e4 < 4; ++e4) d(4 + e4, e4) = 1;  // d(theta E) = E, d(E) = 0
  (void)field;
  return d;
}

ModMatrix poly_theta_assoc_table(const ModField& field) {
  // basis: 1, theta
  ModMatrix table = ModMatrix::Zero(4, 2);
  table(0 * 2 + 0, 0) = 1;  // 1*1
  table(0 * 2 + 1, 1) = 1;  // 1*theta
  table(1 * 2 + 0, 1) = 1;  // theta*1
  (void)field;
  return table;
}

ModMatrix poly_theta_differential(const ModField& field) {
  ModMatrix d = ModMatrix::Zero(2, 2);
  d(1, 0) = 1;
  (void)field;
  return d;
}

InstanceOp op_from_di_template(const ConcreteDialgebra& d, const DiOpTemplate& t) {
  const ModField& F = d.field;
  const int n = d.dim;
  const int r = t.arity;
  long rows = 1;
  for (int i = 0; i < r; ++i) rows *= n;
  InstanceOp op{r, n, ModMatrix::Zero(rows, n)};
  std::vector<int> tuple(static_cast<std::size_t>(r), 0);
  for (long flat = 0; flat < rows; ++flat) {
    long rem = flat;
    for (int i = r - 1; i >= 0; --i) {
      tuple[static_cast<std::size_t>(i)] = static_cast<int>(rem % n);
      rem /= n;
    }
    Vec acc_out(static_cast<std::size_t>(n), 0);
    for (const auto& [term, coeff] : t.terms) {
      const auto& [sigma, hat] = term;
      // normal form evaluates as x_0 |- ... |- x_hat -| ... -| x_last
      Vec val = basis_vec(n, tuple[static_cast<std::size_t>(sigma[hat])]);
      for (int s = hat + 1; s < r; ++s)
        val = table_mul(F, d.left, n, val, basis_vec(n, tuple[static_cast<std::size_t>(sigma[s])]));
      for (int s = hat - 1; s >= 0; --s)
        val = table_mul(F, d.right, n, basis_vec(n, tuple[static_cast<std::size_t>(sigma[s])]), val);
      const std::int32_t cf = F.from_int(coeff);
      for (int k = 0; k < n; ++k)
        acc_out[static_cast<std::size_t>(k)] =
            F.add(acc_out[static_cast<std::size_t>(k)], F.mul(cf, val[static_cast<std::size_t>(k)]));
    }
    for (int k = 0; k < n; ++k) op.table(flat, k) = acc_out[static_cast<std::size_t>(k)];
  }
  return op;
}

namespace {

Vec eval_tree_on(const ModField& F, int dim, const ModMatrix& binary_table, const TypeTree& shape,
                 const std::vector<Vec>& args, std::size_t& pos,
                 const std::vector<std::uint8_t>& slots) {
  if (shape.is_leaf()) {
    return args[slots[pos++]];
  }
  std::vector<Vec> kid_vals;
  for (const TypeTree& k : shape.kids)
    kid_vals.push_back(eval_tree_on(F, dim, binary_table, k, args, pos, slots));
  return table_mul(F, binary_table, dim, kid_vals[0], kid_vals[1]);
}

}  // namespace

InstanceOp op_from_tree_template(const ModField& field, int dim, const ModMatrix& binary_table,
                                 const TreeOpTemplate& t) {
  const int r = t.arity;
  long rows = 1;
  for (int i = 0; i < r; ++i) rows *= dim;
  InstanceOp op{r, dim, ModMatrix::Zero(rows, dim)};
  std::vector<int> tuple(static_cast<std::size_t>(r), 0);
  for (long flat = 0; flat < rows; ++flat) {
    long rem = flat;
    for (int i = r - 1; i >= 0; --i) {
      tuple[static_cast<std::size_t>(i)] = static_cast<int>(rem % dim);
      rem /= dim;
    }
    std::vector<Vec> args;
    for (int i = 0; i < r; ++i) args.push_back(basis_vec(dim, tuple[static_cast<std::size_t>(i)]));
    Vec acc(static_cast<std::size_t>(dim), 0);
    for (const auto& [m, coeff] : t.body.terms()) {
      std::size_t pos = 0;
      Vec val = eval_tree_on(field, dim, binary_table, m.shape, args, pos, m.leaves);
      const std::int32_t cf = field.from_int(coeff);
      for (int k = 0; k < dim; ++k)
        acc[static_cast<std::size_t>(k)] =
            field.add(acc[static_cast<std::size_t>(k)], field.mul(cf, val[static_cast<std::size_t>(k)]));
    }
    for (int k = 0; k < dim; ++k) op.table(flat, k) = acc[static_cast<std::size_t>(k)];
  }
  return op;
}

ModMatrix special_jordan_product_table(const ConcreteDialgebra& d) {
  const int n = d.dim;
  ModMatrix table = ModMatrix::Zero(static_cast<Index>(n) * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        table(static_cast<Index>(i) * n + j, k) =
            d.field.add(d.left(static_cast<Index>(i) * n + j, k),
                        d.right(static_cast<Index>(j) * n + i, k));
  return table;
}

namespace {

Vec eval_instance_tree(const ModField& F, const std::vector<InstanceOp>& ops, const TypeTree& shape,
                       const std::vector<Vec>& assignment, std::size_t& pos,
                       const std::vector<std::uint8_t>& leaves, int dim) {
  if (shape.is_leaf()) return assignment[leaves[pos++]];
  std::vector<Vec> kid_vals;
  for (const TypeTree& k : shape.kids)
    kid_vals.push_back(eval_instance_tree(F, ops, k, assignment, pos, leaves, dim));
  const InstanceOp& op = ops[static_cast<std::size_t>(shape.op)];
  // contract the operation table multilinearly against the child values
  Vec out(static_cast<std::size_t>(dim), 0);
  std::vector<int> idx(kid_vals.size(), 0);
  while (true) {
    std::int32_t coeff = 1;
    long flat = 0;
    for (std::size_t s = 0; s < kid_vals.size(); ++s) {
      coeff = F.mul(coeff, kid_vals[s][static_cast<std::size_t>(idx[s])]);
      flat = flat * dim + idx[s];
    }
    if (!F.is_zero(coeff))
      for (int k = 0; k < dim; ++k)
        out[static_cast<std::size_t>(k)] =
            F.add(out[static_cast<std::size_t>(k)], F.mul(coeff, op.table(flat, k)));
    int s = static_cast<int>(kid_vals.size()) - 1;
    while (s >= 0 && ++idx[static_cast<std::size_t>(s)] == dim) {
      idx[static_cast<std::size_t>(s)] = 0;
      --s;
    }
    if (s < 0) break;
  }
  return out;
}

}  // namespace

InstanceReport verify_on_instance(const ModField& field, int dim, const std::vector<InstanceOp>& ops,
                                  const std::vector<TreePoly>& identities, long trials,
                                  std::uint64_t seed) {
  InstanceReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.per_identity_violations.assign(identities.size(), 0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int32_t> dist(0, field.modulus() - 1);
  for (long t = 0; t < trials; ++t) {
    for (std::size_t which = 0; which < identities.size(); ++which) {
      const TreePoly& id = identities[which];
      int degree = id.is_zero() ? 0 : id.terms().begin()->first.degree();
      std::vector<Vec> assignment;
      for (int v = 0; v < degree; ++v) {
        Vec x(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k) x[static_cast<std::size_t>(k)] = dist(rng);
        assignment.push_back(std::move(x));
      }
      Vec acc(static_cast<std::size_t>(dim), 0);
      for (const auto& [m, coeff] : id.terms()) {
        std::size_t pos = 0;
        Vec val = eval_instance_tree(field, ops, m.shape, assignment, pos, m.leaves, dim);
        const std::int32_t cf = field.from_int(coeff);
        for (int k = 0; k < dim; ++k)
          acc[static_cast<std::size_t>(k)] =
              field.add(acc[static_cast<std::size_t>(k)], field.mul(cf, val[static_cast<std::size_t>(k)]));
      }
      if (!all_zero(field, acc)) {
        ++rep.violations;
        ++rep.per_identity_violations[which];
      }
    }
  }
  return rep;
}

std::vector<bool> identities_vanish_in_dialgebra(const std::vector<TreePoly>& ids,
                                                 const std::vector<DiOpTemplate>& binds) {
  std::vector<bool> out;
  for (const TreePoly& id : ids) out.push_back(expand_dialgebra(id, binds).is_zero());
  return out;
}

}  // namespace dialid
