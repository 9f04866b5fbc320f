#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "dialid/bso.hpp"
#include "dialid/kp.hpp"
#include "dialid/linalg.hpp"
#include "dialid/optemplates.hpp"

namespace dialid {

// ---- nullspace identity search ----------------------------------------------

template <class F>
struct IdentitySearch {
  Index rows = 0, cols = 0, rank = 0, nullity = 0;
  Matrix<typename F::Scalar> nullspace;  // canonical basis, sorted by support size
  std::vector<int> supports;
};

template <class F>
int vector_support(const F& field, const typename F::Scalar* v, Index n) {
  int s = 0;
  for (Index j = 0; j < n; ++j)
    if (!field.is_zero(v[j])) ++s;
  return s;
}

/// Rank and canonical nullspace of an expansion matrix; nullspace vectors are
/// sorted by increasing support size.  Ties keep the canonical free-column
/// order, which reproduces the reference generator extraction runs.
template <class F>
IdentitySearch<F> find_identities(const F& field, const IntMatrix& expansion) {
  IdentitySearch<F> out;
  out.rows = expansion.rows();
  out.cols = expansion.cols();
  auto r = rcf_int(field, expansion);
  out.rank = r.rank;
  out.nullity = out.cols - r.rank;
  Matrix<typename F::Scalar> ns = nullspace_basis(field, r, out.cols);
  std::vector<int> support(static_cast<std::size_t>(ns.rows()));
  std::vector<Index> order(static_cast<std::size_t>(ns.rows()));
  for (Index i = 0; i < ns.rows(); ++i) {
    support[static_cast<std::size_t>(i)] = vector_support(field, ns.row(i).data(), ns.cols());
    order[static_cast<std::size_t>(i)] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return support[static_cast<std::size_t>(a)] < support[static_cast<std::size_t>(b)];
  });
  out.nullspace.resize(ns.rows(), ns.cols());
  for (Index i = 0; i < ns.rows(); ++i) {
    out.nullspace.row(i) = ns.row(order[static_cast<std::size_t>(i)]);
    out.supports.push_back(support[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
  }
  return out;
}

// ---- symmetric group action on coordinate vectors ---------------------------

/// act_tables[s][j]: index of sigma_s applied to basis monomial j, for all
/// degree! permutations in lexicographic order.
std::vector<std::vector<long>> action_tables(const TypeBasis& basis);

template <class Scalar>
std::vector<Scalar> permute_vector(const std::vector<long>& table, const Scalar* v, Index n) {
  std::vector<Scalar> out(static_cast<std::size_t>(n), Scalar(0));
  for (Index j = 0; j < n; ++j) out[static_cast<std::size_t>(table[static_cast<std::size_t>(j)])] = v[j];
  return out;
}

/// Pushes a vector through an injective index map between bases of different
/// sizes (images accumulate, so non-injective maps are also handled).
template <class F>
std::vector<typename F::Scalar> map_vector(const F& field, const std::vector<long>& table,
                                           const typename F::Scalar* v, Index src_n, Index dst_n) {
  std::vector<typename F::Scalar> out(static_cast<std::size_t>(dst_n), typename F::Scalar(0));
  for (Index j = 0; j < src_n; ++j)
    out[static_cast<std::size_t>(table[static_cast<std::size_t>(j)])] =
        field.add(out[static_cast<std::size_t>(table[static_cast<std::size_t>(j)])], field.canon(v[j]));
  return out;
}

/// Dimension of the S_d-module generated by the given rows.
template <class F>
Index module_span_dim(const F& field, const std::vector<std::vector<long>>& acts,
                      const Matrix<typename F::Scalar>& rows) {
  RowSpan<F> span(field, rows.cols());
  for (Index i = 0; i < rows.rows(); ++i)
    for (const auto& t : acts) span.add(permute_vector(t, rows.row(i).data(), rows.cols()));
  return span.rank();
}

// ---- fill-and-reduce generator extraction -----------------------------------

struct GeneratorReport {
  Index seed_dim = 0;                  // module span of the seeds alone
  std::vector<long> accepted;          // 1-based positions in the candidate list
  std::vector<Index> rank_trajectory;  // span dimension after each accepted candidate
  Index final_dim = 0;
  long candidates_processed = 0;
};

/// Processes candidates in order; for each, all degree! permutations are
/// folded into the span, and the candidate is recorded as a generator iff the
/// span dimension grew.  Stops once stop_dim (the nullspace dimension) is
/// reached.
template <class F>
GeneratorReport extract_generators(const F& field, const std::vector<std::vector<long>>& acts,
                                   const Matrix<typename F::Scalar>& candidates,
                                   const Matrix<typename F::Scalar>& seeds, Index stop_dim) {
  const Index cols = candidates.cols();
  RowSpan<F> span(field, cols);
  GeneratorReport rep;
  for (Index i = 0; i < seeds.rows(); ++i)
    for (const auto& t : acts) span.add(permute_vector(t, seeds.row(i).data(), cols));
  rep.seed_dim = span.rank();
  for (Index i = 0; i < candidates.rows(); ++i) {
    const Index before = span.rank();
    for (const auto& t : acts) span.add(permute_vector(t, candidates.row(i).data(), cols));
    ++rep.candidates_processed;
    if (span.rank() > before) {
      rep.accepted.push_back(static_cast<long>(i) + 1);
      rep.rank_trajectory.push_back(span.rank());
    }
    if (stop_dim > 0 && span.rank() >= stop_dim) break;
  }
  rep.final_dim = span.rank();
  return rep;
}

/// Which accepted generators are superfluous: dropping the generator (keeping
/// the seeds and the other generators) still spans target_dim.
template <class F>
std::vector<bool> removable_generators(const F& field, const std::vector<std::vector<long>>& acts,
                                       const Matrix<typename F::Scalar>& generators,
                                       const Matrix<typename F::Scalar>& seeds, Index target_dim) {
  std::vector<bool> removable;
  for (Index g = 0; g < generators.rows(); ++g) {
    RowSpan<F> span(field, generators.cols());
    for (Index i = 0; i < seeds.rows(); ++i)
      for (const auto& t : acts) span.add(permute_vector(t, seeds.row(i).data(), seeds.cols()));
    for (Index i = 0; i < generators.rows(); ++i) {
      if (i == g) continue;
      for (const auto& t : acts)
        span.add(permute_vector(t, generators.row(i).data(), generators.cols()));
    }
    removable.push_back(span.rank() >= target_dim);
  }
  return removable;
}

/// Greedy prune to a minimal generating subset: drops generators one at a
/// time (in order) whenever the rest, with the seeds, still spans target_dim.
/// Returns the kept row indices.
template <class F>
std::vector<Index> prune_generators(const F& field, const std::vector<std::vector<long>>& acts,
                                    const Matrix<typename F::Scalar>& generators,
                                    const Matrix<typename F::Scalar>& seeds, Index target_dim) {
  std::vector<Index> kept;
  for (Index g = 0; g < generators.rows(); ++g) kept.push_back(g);
  for (Index g = 0; g < generators.rows(); ++g) {
    RowSpan<F> span(field, generators.cols());
    for (Index i = 0; i < seeds.rows(); ++i)
      for (const auto& t : acts) span.add(permute_vector(t, seeds.row(i).data(), seeds.cols()));
    for (Index k : kept) {
      if (k == g) continue;
      for (const auto& t : acts)
        span.add(permute_vector(t, generators.row(k).data(), generators.cols()));
    }
    if (span.rank() >= target_dim) kept.erase(std::find(kept.begin(), kept.end(), g));
  }
  return kept;
}

// ---- consequences ------------------------------------------------------------

/// Degree m identity over one binary operation -> the m+2 identities of degree
/// m+1: the m substitutions a_i -> a_i a_{m+1}, then I * a_{m+1}, then
/// a_{m+1} * I.
std::vector<TreePoly> consequences_binary(const TreePoly& id);

/// The same closure step for k operations of the given arity (degree grows by
/// arity - 1): substitutions into each argument for every operation, then the
/// identity wrapped into every slot of every operation.
std::vector<TreePoly> consequences_nary(const TreePoly& id, int ops_count, int arity);

/// Iterates consequences_binary until every identity reaches target_degree.
std::vector<TreePoly> consequences_to_degree(const std::vector<TreePoly>& ids, int target_degree);

/// Coordinate rows of the identities under every relabeling: identity-major,
/// relabelings in lexicographic order.
IntMatrix permuted_identity_rows(const std::vector<TreePoly>& ids, const TypeBasis& basis);

// ---- identities modulo a variety ---------------------------------------------

template <class F>
struct ModuloSplit {
  Index total_rank = 0;
  Index left_leading = 0;
  Matrix<typename F::Scalar> right_rows;  // identities over the right basis
};

/// Row canonical form of the block matrix [C 0; X I]: C holds the consequence
/// identities over the left basis, X the expansions of the right-basis
/// monomials.  Rows leading in the right part are the identities of the
/// operations modulo the variety.
template <class F>
ModuloSplit<F> identities_modulo(const F& field, const IntMatrix& cons, const IntMatrix& expansions) {
  using Scalar = typename F::Scalar;
  if (cons.rows() > 0 && cons.cols() != expansions.cols())
    throw std::invalid_argument("identities_modulo: left basis size mismatch");
  const Index L = expansions.cols();
  const Index R = expansions.rows();
  Matrix<Scalar> block = Matrix<Scalar>::Constant(cons.rows() + R, L + R, Scalar(0));
  for (Index i = 0; i < cons.rows(); ++i)
    for (Index j = 0; j < L; ++j) block(i, j) = field.from_int(cons(i, j));
  for (Index i = 0; i < R; ++i) {
    for (Index j = 0; j < L; ++j) block(cons.rows() + i, j) = field.from_int(expansions(i, j));
    block(cons.rows() + i, L + i) = field.from_int(1);
  }
  auto r = rcf(field, std::move(block));
  ModuloSplit<F> out;
  out.total_rank = r.rank;
  for (Index k = 0; k < r.rank; ++k)
    if (r.pivot_cols[static_cast<std::size_t>(k)] < L) ++out.left_leading;
  const Index nright = r.rank - out.left_leading;
  out.right_rows.resize(nright, R);
  for (Index k = 0; k < nright; ++k)
    for (Index j = 0; j < R; ++j) out.right_rows(k, j) = r.rcf(out.left_leading + k, L + j);
  return out;
}

// ---- the KP = BSO conjecture comparator --------------------------------------

struct ConjectureDegree {
  int degree = 0;
  Index monomials = 0;      // dim of the multioperator space B_e
  Index dim_identities = 0; // dim I_e of the source operation
  Index dim_kp_native = 0;
  Index dim_kp_cumulative = 0;
  Index dim_j = 0;          // nullity of the lifted operations
  bool equal_native = false;
  bool equal_cumulative = false;
};

struct ConjectureReport {
  int arity = 0;
  int max_degree = 0;
  std::vector<ConjectureDegree> degrees;
  bool holds_native = true;
  bool holds_cumulative = true;
};

/// Compares KP_d(omega) with J_d(omega_1..omega_n) degree by degree.
/// "native" uses the KP images of I_e plus the Part 2 identities at their own
/// degree; "cumulative" also closes lower-degree KP output under consequences.
/// Both readings are reported.
template <class F>
ConjectureReport check_conjecture(const F& field, const GroupAlgebraOp& omega, int max_degree) {
  using Scalar = typename F::Scalar;
  const int n = omega.arity;
  if (n < 2) throw std::invalid_argument("check_conjecture: arity must be at least 2");
  if ((max_degree - 1) % (n - 1) != 0)
    throw std::invalid_argument("check_conjecture: degree incompatible with the arity");

  std::vector<OpSpec> ops1{OpSpec{"t", n, {}}};
  std::vector<OpSpec> opsN;
  for (int i = 0; i < n; ++i) opsN.push_back(OpSpec{"t" + std::to_string(i + 1), n, {}});
  const std::vector<DiOpTemplate> lifted = bso(omega);

  ConjectureReport rep;
  rep.arity = n;
  rep.max_degree = max_degree;

  std::optional<RowSpan<F>> prev_cumulative;  // over B_{e-(n-1)}
  std::optional<TypeBasis> prev_basis;

  for (int e = n; e <= max_degree; e += n - 1) {
    ConjectureDegree row;
    row.degree = e;

    TypeBasis a_basis(ops1, enumerate_association_types(ops1, e));
    TypeBasis b_basis(opsN, enumerate_association_types(opsN, e));
    row.monomials = b_basis.size();

    // identities of omega in the free associative algebra
    IntMatrix ea = expansion_matrix_words(a_basis, {omega});
    IdentitySearch<F> ia = find_identities(field, ea);
    row.dim_identities = ia.nullity;

    // identities of the lifted operations in the free dialgebra
    IntMatrix eb = expansion_matrix_dialgebra(b_basis, lifted);
    auto rb = rcf_int(field, eb);
    row.dim_j = b_basis.size() - rb.rank;

    // KP images of I_e: index maps per central argument
    RowSpan<F> kp_span(field, b_basis.size());
    std::vector<std::vector<long>> kp_map(static_cast<std::size_t>(e));
    for (int v = 0; v < e; ++v) {
      kp_map[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(a_basis.size()));
      for (long j = 0; j < a_basis.size(); ++j)
        kp_map[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] =
            b_basis.index_of(kp_transform(a_basis.monomial(j), v, n));
    }
    for (Index i = 0; i < ia.nullspace.rows(); ++i)
      for (int v = 0; v < e; ++v)
        kp_span.add(map_vector(field, kp_map[static_cast<std::size_t>(v)],
                               ia.nullspace.row(i).data(), a_basis.size(), b_basis.size()));

    // Part 2 identities live at degree 2n-1
    if (e == 2 * n - 1) {
      for (const TreePoly& id : kp_part2(n))
        for (const Permutation& tau : all_permutations(e)) {
          std::vector<std::int64_t> vec = tree_poly_vector(relabel(id, tau), b_basis);
          std::vector<Scalar> frow(vec.size());
          for (std::size_t k = 0; k < vec.size(); ++k) frow[k] = field.from_int(vec[k]);
          kp_span.add(std::move(frow));
        }
    }
    row.dim_kp_native = kp_span.rank();

    // sparse triplets of the dialgebra expansion, for membership tests
    struct Triplet {
      Index r, c;
      std::int64_t v;
    };
    std::vector<Triplet> eb_nz;
    for (Index r2 = 0; r2 < eb.rows(); ++r2)
      for (Index j = 0; j < eb.cols(); ++j)
        if (eb(r2, j) != 0) eb_nz.push_back({r2, j, eb(r2, j)});

    auto contained_in_j = [&](const Matrix<Scalar>& rows) {
      // v is an identity of the lifted operations iff E * v = 0
      std::vector<Scalar> acc(static_cast<std::size_t>(eb.rows()));
      for (Index i = 0; i < rows.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), field.from_int(0));
        for (const Triplet& t : eb_nz)
          acc[static_cast<std::size_t>(t.r)] = field.add(
              acc[static_cast<std::size_t>(t.r)], field.mul(field.from_int(t.v), rows(i, t.c)));
        for (const Scalar& s : acc)
          if (!field.is_zero(s)) return false;
      }
      return true;
    };

    Matrix<Scalar> kp_basis = kp_span.canonical();
    row.equal_native = (row.dim_kp_native == row.dim_j) && contained_in_j(kp_basis);

    // cumulative: add consequences of the previous cumulative span
    RowSpan<F> cum_span = kp_span;
    if (prev_cumulative) {
      Matrix<Scalar> prev_rows = prev_cumulative->canonical();
      const int pe = e - (n - 1);
      std::vector<std::vector<long>> cons_maps;
      {
        // elementary consequence monomial maps, composed with every relabeling
        std::vector<LabeledTree> prev_monos;
        for (long j = 0; j < prev_basis->size(); ++j) prev_monos.push_back(prev_basis->monomial(j));
        std::vector<TreePoly> images;
        for (long j = 0; j < prev_basis->size(); ++j) {
          TreePoly p(prev_monos[static_cast<std::size_t>(j)], 1);
          std::vector<TreePoly> cs = consequences_nary(p, n, n);
          images.insert(images.end(), cs.begin(), cs.end());
        }
        const std::size_t per = images.size() / static_cast<std::size_t>(prev_basis->size());
        for (std::size_t c = 0; c < per; ++c)
          for (const Permutation& tau : all_permutations(e)) {
            std::vector<long> map(static_cast<std::size_t>(prev_basis->size()));
            for (long j = 0; j < prev_basis->size(); ++j) {
              const TreePoly& img = images[static_cast<std::size_t>(j) * per + c];
              map[static_cast<std::size_t>(j)] =
                  b_basis.index_of(relabel(img, tau).terms().begin()->first);
            }
            cons_maps.push_back(std::move(map));
          }
      }
      for (Index i = 0; i < prev_rows.rows(); ++i)
        for (const auto& map : cons_maps) {
          std::vector<Scalar> out(static_cast<std::size_t>(b_basis.size()), Scalar(0));
          for (long j = 0; j < prev_basis->size(); ++j)
            out[static_cast<std::size_t>(map[static_cast<std::size_t>(j)])] = prev_rows(i, j);
          cum_span.add(std::move(out));
        }
      (void)pe;
    }
    row.dim_kp_cumulative = cum_span.rank();
    row.equal_cumulative =
        (row.dim_kp_cumulative == row.dim_j) && contained_in_j(cum_span.canonical());

    rep.holds_native = rep.holds_native && row.equal_native;
    rep.holds_cumulative = rep.holds_cumulative && row.equal_cumulative;
    rep.degrees.push_back(row);
    prev_cumulative = std::move(cum_span);
    prev_basis = std::move(b_basis);
  }
  return rep;
}

}  // namespace dialid
