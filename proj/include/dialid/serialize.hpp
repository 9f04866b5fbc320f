#pragma once

#include <string>
#include <vector>

#include "dialid/linalg.hpp"
#include "dialid/optemplates.hpp"
#include "dialid/varieties.hpp"

namespace dialid {

// ---- identities --------------------------------------------------------------

/// "+t1(a,t2(b,c,d),e) -2 t1(e,d,c)" style signed term list.
std::string identity_str(const TreePoly& p, const std::vector<OpSpec>& ops);
TreePoly parse_identity(const std::string& text, const std::vector<OpSpec>& ops);

std::string di_poly_str(const DiPoly& p);
std::string word_poly_str(const WordPoly& p);

// ---- operations --------------------------------------------------------------

/// Signed word list with letters for arguments: "abc+cba", "ab-ba".
GroupAlgebraOp parse_group_algebra_op(const std::string& text);
std::string group_algebra_op_str(const GroupAlgebraOp& op);

/// Signed hat-word list: "^abc+cb^a".
DiOpTemplate parse_di_template(const std::string& text, int arity);
std::string di_template_str(const DiOpTemplate& t);

// ---- variety / ops files ------------------------------------------------------

/// Text format, one declaration per line:
///   # comment
///   ops m/2 q/3
///   sym q 1 3
///   identity +m(a,m(b,c)) -m(a,m(c,b))
Variety parse_variety_file(const std::string& text);
std::string variety_file_str(const Variety& v);

/// Dialgebra operation templates:
///   diop p1/3 ^abc+cb^a
std::vector<std::pair<std::string, DiOpTemplate>> parse_di_ops_file(const std::string& text);

// ---- TSV ----------------------------------------------------------------------

std::string tsv_matrix(const IntMatrix& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels);
template <class F>
std::string tsv_matrix_field(const F& field, const Matrix<typename F::Scalar>& m,
                             const std::vector<std::string>& row_labels,
                             const std::vector<std::string>& col_labels) {
  std::string out;
  for (const std::string& c : col_labels) {
    out += '\t';
    out += c;
  }
  out += '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    out += row_labels.empty() ? std::to_string(i + 1) : row_labels[static_cast<std::size_t>(i)];
    for (Index j = 0; j < m.cols(); ++j) {
      out += '\t';
      out += field.scalar_str(m(i, j));
    }
    out += '\n';
  }
  return out;
}

/// Structure-constant table of a concrete dialgebra (round-trippable).
std::string dialgebra_tsv(const ConcreteDialgebra& d);
ConcreteDialgebra parse_dialgebra_tsv(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dialid
