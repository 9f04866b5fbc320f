#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dialid/kp.hpp"
#include "dialid/linalg.hpp"
#include "dialid/optemplates.hpp"

namespace dialid {

struct Variety {
  std::string name;
  std::vector<OpSpec> ops;
  std::vector<TreePoly> identities;
};

/// Built-in identity sets:
///   jts                       Jordan triple system axioms
///   jtd                       Jordan triple disystem axioms J1..J8
///   jtd-bso                   the eight identities of the diproduct computation
///   jordan-dialgebra          right commutativity + linearized Osborn + right Jordan
///   jordan-algebra-linearized commutativity + linearized Jordan identity
Variety builtin_variety(const std::string& name);
std::vector<std::string> builtin_variety_names();

GroupAlgebraOp jordan_triple_product();                  // abc + cba
std::vector<DiOpTemplate> jordan_triple_diproducts();    // hats on slots 1..3
std::vector<TreeOpTemplate> jordan_di_triple_templates();  // (ab)c - (ac)b + a(bc), (ba)c + (bc)a - b(ac)
TreePoly osborn_linearized_o2();                         // companion linearization of the Osborn identity

std::vector<TreePoly> diproduct1_deg5_identities();      // the three generators for the first diproduct
TreePoly diproduct1_deg5_rewritten_third();              // seed identity of the combined degree-5 run

// ---- monomial bases of the reference computations ---------------------------

TypeBasis diproduct_deg3_basis(int which);     // one trilinear op, degree 3 (which = 1 or 2)
TypeBasis diproduct1_deg5_basis();             // 3 types, 360 monomials
TypeBasis diproduct2_deg5_basis();             // symmetry-reduced, 90 monomials
TypeBasis diproduct_deg5_both_basis();         // 10 types, 690 monomials
TypeBasis jordan_ditriple_deg3_basis();        // 2 types, 12 monomials
TypeBasis jordan_ditriple_deg5_basis();        // 10 types, 810 monomials
/// Same 810 monomials in the degree-5 processing order: the reference fill-
/// and-reduce trajectory pins the column order only partially, and this is
/// the least order that reproduces it (interchange-pivot types first, the
/// pure first-operation type last).
TypeBasis jordan_ditriple_deg5_processing_basis();
TypeBasis binary_nonassoc_basis(int degree);   // one binary op, Catalan types
TypeBasis jtd_pair_basis(int degree);          // two trilinear ops, no symmetry

// ---- concrete instances ------------------------------------------------------

/// Finite-dimensional dialgebra over a prime field, given by structure
/// constants: row i*dim+j of `left` is the coordinate vector of e_i -| e_j.
struct ConcreteDialgebra {
  ModField field;
  int dim = 0;
  ModMatrix left, right;
};

/// Verifies the five dialgebra axioms on all basis triples.
bool dialgebra_axioms_hold(const ConcreteDialgebra& d, std::string* why = nullptr);

/// Differential dialgebra a -| b = a d(b), a |- b = d(a) b.  Requires d^2 = 0
/// and the Leibniz rule for d on basis pairs.
ConcreteDialgebra make_differential_dialgebra(const ModField& field, const ModMatrix& assoc,
                                              const ModMatrix& dmap);

/// 2x2 matrices over F_p with an adjoined square-zero element theta,
/// differential d = d/d theta; an 8-dimensional differential algebra.
ModMatrix m2_theta_assoc_table(const ModField& field);
ModMatrix m2_theta_differential(const ModField& field);
/// F[theta]/(theta^2): the 2-dimensional version.
ModMatrix poly_theta_assoc_table(const ModField& field);
ModMatrix poly_theta_differential(const ModField& field);

/// A multilinear operation on a concrete algebra as a full value table:
/// row of `table` at flat index (i1*dim + i2)*dim + ... is the value on the
/// basis tuple (e_i1, e_i2, ...).
struct InstanceOp {
  int arity = 0;
  int dim = 0;
  ModMatrix table;
};

InstanceOp op_from_di_template(const ConcreteDialgebra& d, const DiOpTemplate& t);
InstanceOp op_from_tree_template(const ModField& field, int dim, const ModMatrix& binary_table,
                                 const TreeOpTemplate& t);
ModMatrix special_jordan_product_table(const ConcreteDialgebra& d);  // ab = a -| b + b |- a

struct InstanceReport {
  long trials = 0;
  std::uint64_t seed = 0;
  long violations = 0;
  std::vector<long> per_identity_violations;
};

/// Evaluates each identity on pseudo-random tuples; exact arithmetic, so any
/// nonzero value counts as a violation.
InstanceReport verify_on_instance(const ModField& field, int dim, const std::vector<InstanceOp>& ops,
                                  const std::vector<TreePoly>& identities, long trials,
                                  std::uint64_t seed);

/// True per identity iff its expansion through the dialgebra templates is the
/// zero element of the free dialgebra.
std::vector<bool> identities_vanish_in_dialgebra(const std::vector<TreePoly>& ids,
                                                 const std::vector<DiOpTemplate>& binds);

}  // namespace dialid
