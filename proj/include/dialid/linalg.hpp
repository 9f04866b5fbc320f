#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dialid/field.hpp"

namespace dialid {

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using IntMatrix = Matrix<std::int64_t>;
using ModMatrix = Matrix<std::int32_t>;
using RatMatrix = Matrix<Rational>;

template <class F>
Matrix<typename F::Scalar> matrix_from_int(const F& field, const IntMatrix& m) {
  Matrix<typename F::Scalar> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = field.from_int(m(i, j));
  return out;
}

template <class Scalar>
bool matrices_equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class Scalar>
struct RcfResult {
  Index rank = 0;
  Matrix<Scalar> rcf;
  std::vector<Index> pivot_cols;
};

/// Row canonical form (reduced row echelon form) by Gauss-Jordan elimination.
/// Pivot selection: first row with a nonzero entry, in column order.
template <class F>
RcfResult<typename F::Scalar> rcf(const F& field, Matrix<typename F::Scalar> a) {
  using Scalar = typename F::Scalar;
  const Index rows = a.rows(), cols = a.cols();
  const long limit = field.lazy_limit();
  std::vector<long> dirty(static_cast<std::size_t>(rows), 0);
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i)
      if (!field.is_zero(a(i, c))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r) {
      a.row(sel).swap(a.row(r));
      std::swap(dirty[static_cast<std::size_t>(sel)], dirty[static_cast<std::size_t>(r)]);
    }
    Scalar* prow = a.row(r).data();
    field.canon_row(prow + c, cols - c);
    dirty[static_cast<std::size_t>(r)] = 0;
    field.scale_row(prow + c, field.inv(prow[c]), cols - c);
    for (Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar x = field.canon(a(i, c));
      if (field.is_zero(x)) {
        a(i, c) = Scalar(0);
        continue;
      }
      field.row_submul(a.row(i).data() + c, prow + c, x, cols - c);
      a(i, c) = Scalar(0);
      if (++dirty[static_cast<std::size_t>(i)] >= limit) {
        field.canon_row(a.row(i).data() + c, cols - c);
        dirty[static_cast<std::size_t>(i)] = 0;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  for (Index i = 0; i < rows; ++i) field.canon_row(a.row(i).data(), cols);
  return RcfResult<Scalar>{r, std::move(a), std::move(pivots)};
}

/// Canonical nullspace basis: one vector per free column, with 1 in that
/// column, 0 in the other free columns, and the pivot entries solved from
/// the row canonical form.  Returned as rows of a (cols - rank) x cols matrix,
/// ordered by free column.
template <class F>
Matrix<typename F::Scalar> nullspace_basis(const F& field,
                                           const RcfResult<typename F::Scalar>& r, Index cols) {
  using Scalar = typename F::Scalar;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  const Index nfree = cols - r.rank;
  Matrix<Scalar> out = Matrix<Scalar>::Constant(nfree, cols, Scalar(0));
  Index row = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    out(row, f) = field.from_int(1);
    for (Index k = 0; k < r.rank; ++k)
      out(row, r.pivot_cols[static_cast<std::size_t>(k)]) = field.neg(r.rcf(k, f));
    ++row;
  }
  return out;
}

template <class F>
RcfResult<typename F::Scalar> rcf_int(const F& field, const IntMatrix& m) {
  return rcf(field, matrix_from_int(field, m));
}

/// Incrementally maintained row canonical form of a growing set of rows.
/// Supports rank queries, membership tests, and extraction of the canonical
/// basis; this is the working structure for module spans and subspaces.
template <class F>
class RowSpan {
public:
  using Scalar = typename F::Scalar;

  RowSpan(const F& field, Index cols)
      : field_(field), cols_(cols), col_to_row_(static_cast<std::size_t>(cols), -1) {}

  Index cols() const { return cols_; }
  Index rank() const { return static_cast<Index>(pivot_cols_.size()); }

  /// Reduces v against the span and inserts the remainder if nonzero.
  /// Returns true when the rank grew.
  bool add(std::vector<Scalar> v) {
    Index lead = reduce_in_place(v.data());
    if (lead < 0) return false;
    insert_row(std::move(v), lead);
    return true;
  }

  bool contains(std::vector<Scalar> v) const { return reduce_copy(v.data()) < 0; }

  /// Reduces v in place against every pivot; returns the leading column of
  /// the remainder, or -1 when v lies in the span.
  Index reduce_in_place(Scalar* v) const {
    long updates = 0;
    const long limit = field_.lazy_limit();
    Index lead = -1;
    for (Index c = 0; c < cols_; ++c) {
      Scalar x = field_.canon(v[c]);
      if (field_.is_zero(x)) {
        v[c] = Scalar(0);
        continue;
      }
      Index r = col_to_row_[static_cast<std::size_t>(c)];
      if (r < 0) {
        if (lead < 0) lead = c;
        v[c] = x;
        continue;
      }
      field_.row_submul(v + c, rows_[static_cast<std::size_t>(r)].data() + c, x, cols_ - c);
      v[c] = Scalar(0);
      if (++updates >= limit) {
        field_.canon_row(v + c, cols_ - c);
        updates = 0;
      }
    }
    if (lead >= 0) field_.canon_row(v + lead, cols_ - lead);
    return lead;
  }

  /// Canonical matrix: rows sorted by pivot column (the row canonical form
  /// of all added rows).
  Matrix<Scalar> canonical() const {
    Matrix<Scalar> out(rank(), cols_);
    Index r = 0;
    for (Index c = 0; c < cols_; ++c) {
      Index i = col_to_row_[static_cast<std::size_t>(c)];
      if (i < 0) continue;
      for (Index j = 0; j < cols_; ++j) out(r, j) = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      ++r;
    }
    return out;
  }

  std::vector<Index> pivot_columns() const {
    std::vector<Index> p;
    for (Index c = 0; c < cols_; ++c)
      if (col_to_row_[static_cast<std::size_t>(c)] >= 0) p.push_back(c);
    return p;
  }

private:
  Index reduce_copy(Scalar* v) const { return reduce_in_place(v); }

  void insert_row(std::vector<Scalar> v, Index lead) {
    field_.scale_row(v.data() + lead, field_.inv(v[lead]), cols_ - lead);
    // clear the new pivot column from the stored rows
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Scalar x = field_.canon(rows_[i][static_cast<std::size_t>(lead)]);
      if (field_.is_zero(x)) continue;
      field_.row_submul(rows_[i].data() + lead, v.data() + lead, x, cols_ - lead);
      field_.canon_row(rows_[i].data() + lead, cols_ - lead);
    }
    col_to_row_[static_cast<std::size_t>(lead)] = static_cast<Index>(rows_.size());
    pivot_cols_.push_back(lead);
    rows_.push_back(std::move(v));
  }

  F field_;
  Index cols_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<Index> pivot_cols_;       // in insertion order
  std::vector<Index> col_to_row_;
};

/// A subspace of a fixed coordinate space, stored as the row canonical form
/// of its spanning vectors.  Two subspaces are equal iff their canonical
/// matrices are identical.
template <class F>
class Subspace {
public:
  using Scalar = typename F::Scalar;

  Subspace(const F& field, Index cols) : span_(field, cols) {}

  static Subspace from_rows(const F& field, const std::vector<std::vector<Scalar>>& rows, Index cols) {
    Subspace s(field, cols);
    for (const auto& r : rows) {
      if (static_cast<Index>(r.size()) != cols)
        throw std::invalid_argument("Subspace: vector length mismatch");
      s.span_.add(r);
    }
    return s;
  }

  Index dim() const { return span_.rank(); }
  Index cols() const { return span_.cols(); }
  bool contains(std::vector<Scalar> v) const {
    if (static_cast<Index>(v.size()) != span_.cols())
      throw std::invalid_argument("Subspace: vector length mismatch");
    return span_.contains(std::move(v));
  }
  void add(std::vector<Scalar> v) { span_.add(std::move(v)); }
  Matrix<Scalar> canonical() const { return span_.canonical(); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.cols() != b.cols() || a.dim() != b.dim()) return false;
    return matrices_equal(a.canonical(), b.canonical());
  }

private:
  RowSpan<F> span_;
};

}  // namespace dialid
