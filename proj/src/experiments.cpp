#include "dialid/experiments.hpp"

#include <chrono>
#include <stdexcept>

#include "dialid/engine.hpp"
#include "dialid/serialize.hpp"
#include "dialid/varieties.hpp"

namespace dialid {

namespace {

void check(ExperimentReport& rep, const std::string& name, const std::string& expected,
           const std::string& actual) {
  rep.checks.push_back({name, expected, actual, expected == actual});
}

void check_eq(ExperimentReport& rep, const std::string& name, long expected, long actual) {
  check(rep, name, std::to_string(expected), std::to_string(actual));
}

void check_true(ExperimentReport& rep, const std::string& name, bool pass) {
  rep.checks.push_back({name, "true", pass ? "true" : "false", pass});
}

template <class F>
std::string vector_identity_str(const F& field, const TypeBasis& basis,
                                const typename F::Scalar* v) {
  std::string out;
  for (long j = 0; j < basis.size(); ++j) {
    if (field.is_zero(v[j])) continue;
    std::string c = field.scalar_str(field.canon(v[j]));
    std::string term;
    if (c == "1")
      term = basis.label(j);
    else if (c == "-1")
      term = "-" + basis.label(j);
    else
      term = c + " " + basis.label(j);
    if (out.empty())
      out = term;
    else if (!term.empty() && term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix out(m.cols(), m.rows());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

template <class F>
Matrix<typename F::Scalar> rows_from_polys(const F& field, const std::vector<TreePoly>& ids,
                                           const TypeBasis& basis) {
  Matrix<typename F::Scalar> out(static_cast<Index>(ids.size()), basis.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    std::vector<std::int64_t> v = tree_poly_vector(ids[i], basis);
    for (long j = 0; j < basis.size(); ++j)
      out(static_cast<Index>(i), j) = field.from_int(v[static_cast<std::size_t>(j)]);
  }
  return out;
}

std::vector<std::string> basis_labels(const TypeBasis& b) {
  std::vector<std::string> out;
  for (long i = 0; i < b.size(); ++i) out.push_back(b.label(i));
  return out;
}

std::vector<std::string> di_labels(int degree) {
  DiBasis b(degree);
  std::vector<std::string> out;
  for (long i = 0; i < b.size(); ++i) out.push_back(b.label(i));
  return out;
}

// ---- reference matrices ------------------------------------------------------

// 6 x 18 transpose of the degree-3 expansion matrix of the first diproduct:
// row j lists the dialgebra monomials of the j-th permuted diproduct.
const int kDeg3Op1Cols[6][2] = {{0, 17}, {1, 15}, {2, 16}, {3, 13}, {4, 14}, {5, 12}};
// and of the second diproduct
const int kDeg3Op2Cols[6][2] = {{6, 11}, {7, 9}, {8, 10}, {9, 7}, {10, 8}, {11, 6}};

IntMatrix deg3_expected_matrix(const int cols[6][2]) {
  IntMatrix e = IntMatrix::Zero(18, 6);
  for (int j = 0; j < 6; ++j) {
    e(cols[j][0], j) = 1;
    e(cols[j][1], j) = 1;
  }
  return e;
}

// The 18 x 24 stacked matrix of the degree-3 computation in a Jordan
// dialgebra, and its row canonical form ('*' prints one half).
const char* const kFig2[18] = {
    "......+-................",
    "......-+................",
    "........+-..............",
    "........-+..............",
    "..........+-............",
    "..........-+............",
    "+-....+.....+...........",
    "-+.....+.....+..........",
    "..+-....+.....+.........",
    "..-+.....+.....+........",
    "....+-....+.....+.......",
    "....-+.....+.....+......",
    "..++....-.........+.....",
    "....++....-........+....",
    "++....-.............+...",
    "....++.....-.........+..",
    "++.....-..............+.",
    "..++.....-.............+",
};

const char* const kFig3[15] = {
    "+...........*.........*.",
    ".+...........*........*.",
    "..+...........*........*",
    "...+...........*.......*",
    "....+...........*....*..",
    ".....+...........*...*..",
    "......+.....**..........",
    ".......+....**..........",
    "........+.....**........",
    ".........+....**........",
    "..........+.....**......",
    "...........+....**......",
    "..................+....-",
    "...................+.-..",
    "....................+.-.",
};

IntMatrix parse_sign_matrix(const char* const* rows, int nrows, int ncols) {
  IntMatrix m = IntMatrix::Zero(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) {
      char ch = rows[i][j];
      m(i, j) = (ch == '+') ? 1 : (ch == '-') ? -1 : 0;
    }
  return m;
}

RatMatrix parse_half_matrix(const char* const* rows, int nrows, int ncols) {
  RatMatrix m(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) {
      char ch = rows[i][j];
      m(i, j) = (ch == '+')   ? Rational(1)
                : (ch == '-') ? Rational(-1)
                : (ch == '*') ? Rational(1, 2)
                              : Rational(0);
    }
  return m;
}

// ---- individual experiments ----------------------------------------------------

template <class F>
void diproduct_deg3(const F& field, int which, ExperimentReport& rep) {
  TypeBasis basis = diproduct_deg3_basis(which);
  std::vector<DiOpTemplate> binds{jordan_triple_diproducts()[static_cast<std::size_t>(which - 1)]};
  IntMatrix e = expansion_matrix_dialgebra(basis, binds);
  rep.rows = e.rows();
  rep.cols = e.cols();
  check_eq(rep, "matrix rows", 18, e.rows());
  check_eq(rep, "matrix cols", 6, e.cols());
  IntMatrix expected = deg3_expected_matrix(which == 1 ? kDeg3Op1Cols : kDeg3Op2Cols);
  check_true(rep, "matrix matches the reference transpose", matrices_equal(e, expected));
  IdentitySearch<F> search = find_identities(field, e);
  rep.rank = search.rank;
  rep.nullity = search.nullity;
  if (which == 1) {
    check_eq(rep, "rank", 6, search.rank);
    check_eq(rep, "nullity", 0, search.nullity);
  } else {
    check_eq(rep, "rank", 3, search.rank);
    check_eq(rep, "nullity", 3, search.nullity);
    const std::int64_t expected_ns[3][6] = {
        {0, -1, 0, 1, 0, 0}, {0, 0, -1, 0, 1, 0}, {-1, 0, 0, 0, 0, 1}};
    bool ns_ok = search.nullspace.rows() == 3;
    for (Index i = 0; i < search.nullspace.rows() && ns_ok; ++i)
      for (Index j = 0; j < 6; ++j)
        if (!(search.nullspace(i, j) == field.from_int(expected_ns[i][j]))) ns_ok = false;
    check_true(rep, "nullspace equals the reference basis", ns_ok);
    for (Index i = 0; i < search.nullspace.rows(); ++i)
      rep.generators.push_back(vector_identity_str(field, basis, search.nullspace.row(i).data()));
  }
  rep.extra["tsv"] = tsv_matrix(e, di_labels(3), basis_labels(basis));
}

template <class F>
void diproduct1_deg5(const F& field, const ExperimentOptions& opt, ExperimentReport& rep) {
  TypeBasis basis = diproduct1_deg5_basis();
  check_eq(rep, "monomials", 360, basis.size());
  IntMatrix e = expansion_matrix_dialgebra(basis, {jordan_triple_diproducts()[0]});
  rep.rows = e.rows();
  rep.cols = e.cols();
  check_eq(rep, "matrix rows", 600, e.rows());
  check_eq(rep, "matrix cols", 360, e.cols());
  IdentitySearch<F> search = find_identities(field, e);
  rep.rank = search.rank;
  rep.nullity = search.nullity;
  check_eq(rep, "rank", 150, search.rank);
  check_eq(rep, "nullity", 210, search.nullity);

  bool all_pm1 = true;
  long census2 = 0, census4 = 0, census6 = 0, census_other = 0;
  const auto one = field.from_int(1), minus_one = field.from_int(-1);
  for (Index i = 0; i < search.nullspace.rows(); ++i) {
    for (Index j = 0; j < search.nullspace.cols(); ++j) {
      auto v = field.canon(search.nullspace(i, j));
      if (field.is_zero(v)) continue;
      if (!(v == one || v == minus_one)) all_pm1 = false;
    }
    switch (search.supports[static_cast<std::size_t>(i)]) {
      case 2: ++census2; break;
      case 4: ++census4; break;
      case 6: ++census6; break;
      default: ++census_other; break;
    }
  }
  check_true(rep, "all nullspace components are +-1", all_pm1);
  check_eq(rep, "vectors with support 2", 30, census2);
  check_eq(rep, "vectors with support 4", 120, census4);
  check_eq(rep, "vectors with support 6", 60, census6);
  check_eq(rep, "vectors with other support", 0, census_other);

  if (!opt.skip_generators) {
    std::vector<std::vector<long>> acts = action_tables(basis);
    Matrix<typename F::Scalar> no_seeds(0, basis.size());
    GeneratorReport gen = extract_generators(field, acts, search.nullspace, no_seeds, search.nullity);
    check_eq(rep, "generators", 3, static_cast<long>(gen.accepted.size()));
    check_eq(rep, "module span", 210, gen.final_dim);
    rep.rank_trajectory.assign(gen.rank_trajectory.begin(), gen.rank_trajectory.end());
    for (long idx : gen.accepted)
      rep.generators.push_back(
          vector_identity_str(field, basis, search.nullspace.row(idx - 1).data()));
    // the reference generator set spans the same module
    Matrix<typename F::Scalar> reference = rows_from_polys(field, diproduct1_deg5_identities(), basis);
    check_eq(rep, "reference generators span", 210, module_span_dim(field, acts, reference));
  }
}

template <class F>
void diproduct2_deg5(const F& field, ExperimentReport& rep) {
  TypeBasis basis = diproduct2_deg5_basis();
  check_eq(rep, "monomials", 90, basis.size());
  IntMatrix e = expansion_matrix_dialgebra(basis, {jordan_triple_diproducts()[1]});
  rep.rows = e.rows();
  rep.cols = e.cols();
  check_eq(rep, "matrix rows", 600, e.rows());
  check_eq(rep, "matrix cols", 90, e.cols());
  IdentitySearch<F> search = find_identities(field, e);
  rep.rank = search.rank;
  rep.nullity = search.nullity;
  check_eq(rep, "rank", 90, search.rank);
  check_eq(rep, "nullity", 0, search.nullity);
}

template <class F>
void diproducts_deg5_both(const F& field, const ExperimentOptions& opt, ExperimentReport& rep) {
  TypeBasis basis = diproduct_deg5_both_basis();
  const long expected_sizes[10] = {120, 60, 60, 60, 30, 60, 60, 60, 120, 60};
  bool sizes_ok = basis.type_count() == 10;
  for (int t = 0; t < basis.type_count() && sizes_ok; ++t)
    if (basis.type_size(t) != expected_sizes[t]) sizes_ok = false;
  check_true(rep, "monomials per type match the reference table", sizes_ok);
  check_eq(rep, "monomials", 690, basis.size());

  std::vector<DiOpTemplate> dip = jordan_triple_diproducts();
  IntMatrix e = expansion_matrix_dialgebra(basis, {dip[0], dip[1]});
  rep.rows = e.rows();
  rep.cols = e.cols();
  check_eq(rep, "matrix rows", 600, e.rows());
  check_eq(rep, "matrix cols", 690, e.cols());
  IdentitySearch<F> search = find_identities(field, e);
  rep.rank = search.rank;
  rep.nullity = search.nullity;
  check_eq(rep, "rank", 250, search.rank);
  check_eq(rep, "nullity", 440, search.nullity);

  if (!opt.skip_generators) {
    std::vector<std::vector<long>> acts = action_tables(basis);
    Matrix<typename F::Scalar> seeds =
        rows_from_polys(field, {diproduct1_deg5_rewritten_third()}, basis);
    GeneratorReport gen = extract_generators(field, acts, search.nullspace, seeds, search.nullity);
    check_eq(rep, "seed identity spans", 90, gen.seed_dim);
    check_eq(rep, "additional generators", 6, static_cast<long>(gen.accepted.size()));
    check_eq(rep, "module span", 440, gen.final_dim);
    rep.rank_trajectory.assign(gen.rank_trajectory.begin(), gen.rank_trajectory.end());

    Matrix<typename F::Scalar> gens(static_cast<Index>(gen.accepted.size()), basis.size());
    for (std::size_t i = 0; i < gen.accepted.size(); ++i) {
      gens.row(static_cast<Index>(i)) = search.nullspace.row(gen.accepted[i] - 1);
      rep.generators.push_back(
          vector_identity_str(field, basis, search.nullspace.row(gen.accepted[i] - 1).data()));
    }
    std::vector<bool> removable = removable_generators(field, acts, gens, seeds, 440);
    bool none_removable = true;
    for (bool r : removable) none_removable = none_removable && !r;
    check_true(rep, "no proper subset of the six spans", none_removable);
  }
}

template <class F>
void jtd_equivalence(const F& field, ExperimentReport& rep) {
  Variety jtd = builtin_variety("jtd");
  Variety bso_set = builtin_variety("jtd-bso");

  // degree 3: the one degree-3 identity on each side
  {
    TypeBasis b3 = jtd_pair_basis(3);
    std::vector<std::vector<long>> acts = action_tables(b3);
    auto span_of = [&](const TreePoly& id) {
      RowSpan<F> span(field, b3.size());
      Matrix<typename F::Scalar> row = rows_from_polys(field, {id}, b3);
      for (const auto& t : acts) span.add(permute_vector(t, row.row(0).data(), b3.size()));
      return span;
    };
    RowSpan<F> a = span_of(jtd.identities[0]);
    RowSpan<F> b = span_of(bso_set.identities[0]);
    rep.extra["dim_degree3"] = static_cast<long>(a.rank());
    check_eq(rep, "degree-3 span (KP set)", 3, a.rank());
    check_true(rep, "degree-3 spans equal", a.rank() == b.rank() &&
                                                matrices_equal(a.canonical(), b.canonical()));
  }

  // degree 5: the degree-5 identities plus consequences of the degree-3 one
  {
    TypeBasis b5 = jtd_pair_basis(5);
    check_eq(rep, "degree-5 monomials", 1440, b5.size());
    const std::vector<Permutation> taus = all_permutations(5);
    auto span_of = [&](const Variety& v) {
      RowSpan<F> span(field, b5.size());
      for (std::size_t i = 1; i < v.identities.size(); ++i) {
        for (const Permutation& tau : taus) {
          std::vector<std::int64_t> vec = tree_poly_vector(relabel(v.identities[i], tau), b5);
          std::vector<typename F::Scalar> row(vec.size());
          for (std::size_t k = 0; k < vec.size(); ++k) row[k] = field.from_int(vec[k]);
          span.add(std::move(row));
        }
      }
      for (const TreePoly& cons : consequences_nary(v.identities[0], 2, 3))
        for (const Permutation& tau : taus) {
          std::vector<std::int64_t> vec = tree_poly_vector(relabel(cons, tau), b5);
          std::vector<typename F::Scalar> row(vec.size());
          for (std::size_t k = 0; k < vec.size(); ++k) row[k] = field.from_int(vec[k]);
          span.add(std::move(row));
        }
      return span;
    };
    RowSpan<F> a = span_of(jtd);
    RowSpan<F> b = span_of(bso_set);
    rep.extra["dim_degree5"] = static_cast<long>(a.rank());
    check_eq(rep, "degree-5 span dims equal", a.rank(), b.rank());
    check_true(rep, "degree-5 spans equal", matrices_equal(a.canonical(), b.canonical()));
  }
}

template <class F>
void jordan_dialgebra_deg3(const F& field, ExperimentReport& rep) {
  Variety jd = builtin_variety("jordan-dialgebra");
  TypeBasis left = binary_nonassoc_basis(3);
  TypeBasis right = jordan_ditriple_deg3_basis();
  std::vector<TreeOpTemplate> q = jordan_di_triple_templates();

  IntMatrix cons = permuted_identity_rows({jd.identities[0]}, left);  // right commutativity
  IntMatrix x = transpose(expansion_matrix_trees(right, left, q));
  rep.rows = cons.rows() + x.rows();
  rep.cols = left.size() + right.size();
  check_eq(rep, "matrix rows", 18, rep.rows);
  check_eq(rep, "matrix cols", 24, rep.cols);

  // the stacked matrix, bit for bit
  IntMatrix block = IntMatrix::Zero(18, 24);
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 12; ++j) block(i, j) = cons(i, j);
  for (Index i = 0; i < 12; ++i) {
    for (Index j = 0; j < 12; ++j) block(6 + i, j) = x(i, j);
    block(6 + i, 12 + i) = 1;
  }
  check_true(rep, "stacked matrix matches the reference figure",
             matrices_equal(block, parse_sign_matrix(kFig2, 18, 24)));

  auto r = rcf_int(field, block);
  rep.rank = r.rank;
  check_eq(rep, "rank", 15, r.rank);
  if constexpr (std::is_same_v<F, RationalField>) {
    check_true(rep, "row canonical form matches the reference figure",
               matrices_equal(r.rcf.topRows(r.rank).eval(), parse_half_matrix(kFig3, 15, 24)));
    rep.extra["tsv"] = tsv_matrix(block, {}, {}) + "\n" +
                       tsv_matrix_field(field, r.rcf.topRows(r.rank).eval(), {}, {});
  }

  ModuloSplit<F> split = identities_modulo(field, cons, x);
  check_eq(rep, "total rank", 15, split.total_rank);
  check_eq(rep, "rows leading in the left part", 12, split.left_leading);
  check_eq(rep, "identities found", 3, split.right_rows.rows());
  // the permutations of q2(a,b,c) - q2(c,b,a)
  const std::int64_t expected_rows[3][12] = {
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1},
      {0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0},
  };
  bool rows_ok = split.right_rows.rows() == 3;
  for (Index i = 0; i < split.right_rows.rows() && rows_ok; ++i)
    for (Index j = 0; j < 12; ++j)
      if (!(split.right_rows(i, j) == field.from_int(expected_rows[i][j]))) rows_ok = false;
  check_true(rep, "identities are the symmetry of the second operation", rows_ok);
  for (Index i = 0; i < split.right_rows.rows(); ++i)
    rep.generators.push_back(vector_identity_str(field, right, split.right_rows.row(i).data()));
  rep.nullity = split.right_rows.rows();
}

template <class F>
void jordan_dialgebra_deg5(const F& field, const ExperimentOptions& opt, ExperimentReport& rep) {
  Variety jd = builtin_variety("jordan-dialgebra");
  TypeBasis left = binary_nonassoc_basis(5);
  {
    TypeBasis numbered = jordan_ditriple_deg5_basis();
    const long expected_sizes[10] = {120, 120, 120, 60, 30, 60, 60, 60, 120, 60};
    bool sizes_ok = numbered.type_count() == 10;
    for (int t = 0; t < numbered.type_count() && sizes_ok; ++t)
      if (numbered.type_size(t) != expected_sizes[t]) sizes_ok = false;
    check_true(rep, "monomials per type match the reference table", sizes_ok);
  }
  TypeBasis right = jordan_ditriple_deg5_processing_basis();
  check_eq(rep, "left monomials", 1680, left.size());
  check_eq(rep, "right monomials", 810, right.size());

  std::vector<TreePoly> cons_ids = consequences_to_degree(jd.identities, 5);
  check_eq(rep, "consequence identities", 42, static_cast<long>(cons_ids.size()));
  IntMatrix cons = permuted_identity_rows(cons_ids, left);
  check_eq(rep, "permuted consequence rows", 5040, cons.rows());
  IntMatrix x = transpose(expansion_matrix_trees(right, left, jordan_di_triple_templates()));
  rep.rows = cons.rows() + x.rows();
  rep.cols = left.size() + right.size();
  check_eq(rep, "matrix rows", 5850, rep.rows);
  check_eq(rep, "matrix cols", 2490, rep.cols);

  ModuloSplit<F> split = identities_modulo(field, cons, x);
  rep.rank = split.total_rank;
  check_eq(rep, "total rank", 2215, split.total_rank);
  check_eq(rep, "rows leading in the left part", 1655, split.left_leading);
  check_eq(rep, "rows leading in the right part", 560, split.right_rows.rows());
  rep.nullity = split.right_rows.rows();

  if (!opt.skip_generators) {
    // sort the 560 identities by support size (stable)
    std::vector<int> support;
    std::vector<Index> order;
    for (Index i = 0; i < split.right_rows.rows(); ++i) {
      support.push_back(vector_support(field, split.right_rows.row(i).data(), right.size()));
      order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](Index u, Index v) { return support[static_cast<std::size_t>(u)] <
                                                    support[static_cast<std::size_t>(v)]; });
    Matrix<typename F::Scalar> candidates(split.right_rows.rows(), right.size());
    for (Index i = 0; i < split.right_rows.rows(); ++i)
      candidates.row(i) = split.right_rows.row(order[static_cast<std::size_t>(i)]);

    std::vector<std::vector<long>> acts = action_tables(right);
    Matrix<typename F::Scalar> no_seeds(0, right.size());
    GeneratorReport gen = extract_generators(field, acts, candidates, no_seeds, 560);
    check_eq(rep, "accepted generators", 8, static_cast<long>(gen.accepted.size()));
    rep.rank_trajectory.assign(gen.rank_trajectory.begin(), gen.rank_trajectory.end());
    const long expected_traj[8] = {120, 240, 360, 390, 450, 470, 530, 560};
    bool traj_ok = gen.rank_trajectory.size() == 8;
    for (std::size_t i = 0; i < gen.rank_trajectory.size() && traj_ok; ++i)
      if (gen.rank_trajectory[i] != expected_traj[i]) traj_ok = false;
    check_true(rep, "rank trajectory 120 240 360 390 450 470 530 560", traj_ok);
    check_eq(rep, "module span", 560, gen.final_dim);

    Matrix<typename F::Scalar> gens(static_cast<Index>(gen.accepted.size()), right.size());
    for (std::size_t i = 0; i < gen.accepted.size(); ++i) {
      gens.row(static_cast<Index>(i)) = candidates.row(gen.accepted[i] - 1);
      rep.generators.push_back(
          vector_identity_str(field, right, candidates.row(gen.accepted[i] - 1).data()));
    }
    Matrix<typename F::Scalar> no_seed_rows(0, right.size());
    std::vector<Index> kept = prune_generators(field, acts, gens, no_seed_rows, 560);
    check_eq(rep, "generators kept after the superfluity prune", 7,
             static_cast<long>(kept.size()));
    Matrix<typename F::Scalar> kept_rows(static_cast<Index>(kept.size()), right.size());
    for (std::size_t i = 0; i < kept.size(); ++i) kept_rows.row(static_cast<Index>(i)) = gens.row(kept[i]);
    check_eq(rep, "pruned set spans", 560, module_span_dim(field, acts, kept_rows));
    rep.extra["kept_generators"] = kept;
  }
}

template <class F>
void jtd_verify(const F& field, ExperimentReport& rep) {
  Variety jtd = builtin_variety("jtd");
  std::vector<DiOpTemplate> dip = jordan_triple_diproducts();
  std::vector<DiOpTemplate> binds{dip[0], dip[1]};

  // free-dialgebra check: every axiom expands to zero
  std::vector<bool> vanish = identities_vanish_in_dialgebra(jtd.identities, binds);
  bool all_vanish = true;
  for (bool v : vanish) all_vanish = all_vanish && v;
  check_true(rep, "axioms hold for the diproducts in the free dialgebra", all_vanish);

  // a corrupted axiom must fail
  TreePoly corrupted = jtd.identities[4];  // J5
  {
    auto first = corrupted.terms().begin();
    corrupted.add(first->first, -2 * first->second);
  }
  check_true(rep, "sign-corrupted axiom fails the free-dialgebra check",
             !identities_vanish_in_dialgebra({corrupted}, binds)[0]);

  // Jordan-dialgebra check: expansions lie in the consequence space
  Variety jd = builtin_variety("jordan-dialgebra");
  std::vector<TreeOpTemplate> q = jordan_di_triple_templates();

  TypeBasis left3 = binary_nonassoc_basis(3);
  RowSpan<F> span3(field, left3.size());
  {
    IntMatrix cons3 = permuted_identity_rows({jd.identities[0]}, left3);
    for (Index i = 0; i < cons3.rows(); ++i) {
      std::vector<typename F::Scalar> row(static_cast<std::size_t>(cons3.cols()));
      for (Index j = 0; j < cons3.cols(); ++j) row[static_cast<std::size_t>(j)] = field.from_int(cons3(i, j));
      span3.add(std::move(row));
    }
  }
  TypeBasis left5 = binary_nonassoc_basis(5);
  RowSpan<F> span5(field, left5.size());
  {
    IntMatrix cons5 = permuted_identity_rows(consequences_to_degree(jd.identities, 5), left5);
    for (Index i = 0; i < cons5.rows(); ++i) {
      std::vector<typename F::Scalar> row(static_cast<std::size_t>(cons5.cols()));
      for (Index j = 0; j < cons5.cols(); ++j) row[static_cast<std::size_t>(j)] = field.from_int(cons5(i, j));
      span5.add(std::move(row));
    }
  }
  auto member = [&](const TreePoly& id) {
    TreePoly expanded = expand_trees(id, q);
    const int deg = id.terms().begin()->first.degree();
    const TypeBasis& basis = (deg == 3) ? left3 : left5;
    RowSpan<F>& span = (deg == 3) ? span3 : span5;
    std::vector<std::int64_t> vec = tree_poly_vector(expanded, basis);
    std::vector<typename F::Scalar> row(vec.size());
    for (std::size_t k = 0; k < vec.size(); ++k) row[k] = field.from_int(vec[k]);
    return span.contains(std::move(row));
  };
  bool all_member = true;
  for (const TreePoly& id : jtd.identities) all_member = all_member && member(id);
  check_true(rep, "axioms hold modulo the Jordan dialgebra consequences", all_member);
  check_true(rep, "sign-corrupted axiom fails the membership check", !member(corrupted));
}

void special_reduction(ExperimentReport& rep) {
  // the special Jordan dialgebra product ab = a -| b + b |- a
  DiOpTemplate special;
  special.arity = 2;
  special.terms[{Permutation({0, 1}), 0}] = 1;
  special.terms[{Permutation({1, 0}), 1}] = 1;

  std::vector<TreeOpTemplate> q = jordan_di_triple_templates();
  std::vector<DiOpTemplate> dip = jordan_triple_diproducts();
  for (int i = 0; i < 2; ++i) {
    DiPoly lhs = expand_dialgebra(q[static_cast<std::size_t>(i)].body, {special});
    std::vector<DiPoly> letters;
    for (int v = 0; v < 3; ++v) letters.push_back(DiPoly(DiMonomial{{static_cast<std::uint8_t>(v)}, 0}, 1));
    DiPoly rhs = substitute_di(dip[static_cast<std::size_t>(i)], letters) * 2;
    check_true(rep, "triple operation " + std::to_string(i + 1) + " reduces to twice the diproduct",
               lhs == rhs);
    rep.extra["expansion_" + std::to_string(i + 1)] = di_poly_str(lhs);
  }
}

void differential_instance(const ExperimentOptions& opt, ExperimentReport& rep) {
  if (opt.rational) throw std::invalid_argument("differential-instance runs over a prime field");
  if (opt.modulus <= 5)
    throw std::invalid_argument("differential-instance needs characteristic > 5");
  ModField field(opt.modulus);
  rep.field_name = field.name();

  ConcreteDialgebra dial =
      make_differential_dialgebra(field, m2_theta_assoc_table(field), m2_theta_differential(field));
  check_eq(rep, "dimension", 8, dial.dim);
  std::string why;
  check_true(rep, "dialgebra axioms hold on basis triples", dialgebra_axioms_hold(dial, &why));

  std::vector<DiOpTemplate> dip = jordan_triple_diproducts();
  InstanceOp t1 = op_from_di_template(dial, dip[0]);
  InstanceOp t2 = op_from_di_template(dial, dip[1]);

  // cross-check against the closed formulas a d(b) d(c) + d(c) d(b) a and
  // d(a) b d(c) + d(c) b d(a)
  {
    const ModMatrix assoc = m2_theta_assoc_table(field);
    const ModMatrix dmap = m2_theta_differential(field);
    const int n = dial.dim;
    auto mul = [&](const std::vector<std::int32_t>& x, const std::vector<std::int32_t>& y) {
      std::vector<std::int32_t> out(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (field.is_zero(x[static_cast<std::size_t>(i)]) ||
              field.is_zero(y[static_cast<std::size_t>(j)]))
            continue;
          const std::int32_t xy =
              field.mul(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]);
          for (int k = 0; k < n; ++k)
            out[static_cast<std::size_t>(k)] =
                field.add(out[static_cast<std::size_t>(k)],
                          field.mul(xy, assoc(static_cast<Index>(i) * n + j, k)));
        }
      return out;
    };
    auto dd = [&](const std::vector<std::int32_t>& x) {
      std::vector<std::int32_t> out(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          out[static_cast<std::size_t>(k)] = field.add(
              out[static_cast<std::size_t>(k)],
              field.mul(x[static_cast<std::size_t>(i)], dmap(i, k)));
      return out;
    };
    auto basis_vec = [&](int i) {
      std::vector<std::int32_t> v(static_cast<std::size_t>(n), 0);
      v[static_cast<std::size_t>(i)] = 1;
      return v;
    };
    bool tables_match = true;
    for (int i = 0; i < n && tables_match; ++i)
      for (int j = 0; j < n && tables_match; ++j)
        for (int k = 0; k < n && tables_match; ++k) {
          auto x = basis_vec(i), y = basis_vec(j), z = basis_vec(k);
          auto f1 = mul(mul(x, dd(y)), dd(z));
          auto g1 = mul(mul(dd(z), dd(y)), x);
          auto f2 = mul(mul(dd(x), y), dd(z));
          auto g2 = mul(mul(dd(z), y), dd(x));
          const long row = (static_cast<long>(i) * n + j) * n + k;
          for (int m = 0; m < n; ++m) {
            if (!field.is_zero(field.sub(field.add(f1[static_cast<std::size_t>(m)],
                                                   g1[static_cast<std::size_t>(m)]),
                                         t1.table(row, m))))
              tables_match = false;
            if (!field.is_zero(field.sub(field.add(f2[static_cast<std::size_t>(m)],
                                                   g2[static_cast<std::size_t>(m)]),
                                         t2.table(row, m))))
              tables_match = false;
          }
        }
    check_true(rep, "operations match the closed differential formulas", tables_match);
  }

  Variety jtd = builtin_variety("jtd");
  InstanceReport ir = verify_on_instance(field, dial.dim, {t1, t2}, jtd.identities, opt.trials, opt.seed);
  check_eq(rep, "trials", opt.trials, ir.trials);
  check_eq(rep, "violations", 0, ir.violations);
  rep.extra["seed"] = ir.seed;
  rep.extra["per_identity_violations"] = ir.per_identity_violations;

  // the special Jordan dialgebra route: the triple operations of the derived
  // Jordan dialgebra equal twice the diproducts
  {
    ModMatrix bin = special_jordan_product_table(dial);
    std::vector<TreeOpTemplate> q = jordan_di_triple_templates();
    InstanceOp q1 = op_from_tree_template(field, dial.dim, bin, q[0]);
    InstanceOp q2 = op_from_tree_template(field, dial.dim, bin, q[1]);
    bool doubled = true;
    for (Index r = 0; r < q1.table.rows() && doubled; ++r)
      for (Index c2 = 0; c2 < q1.table.cols(); ++c2) {
        if (!field.is_zero(field.sub(q1.table(r, c2), field.mul(2, t1.table(r, c2))))) doubled = false;
        if (!field.is_zero(field.sub(q2.table(r, c2), field.mul(2, t2.table(r, c2))))) doubled = false;
      }
    check_true(rep, "derived triple operations equal twice the diproducts", doubled);
    InstanceReport ir2 = verify_on_instance(field, dial.dim, {q1, q2}, jtd.identities,
                                            std::min<long>(opt.trials, 50), opt.seed + 1);
    check_eq(rep, "violations (special Jordan route)", 0, ir2.violations);
  }
}

ExperimentReport run_single(const std::string& name, const ExperimentOptions& opt);

void field_agnosticism(const ExperimentOptions& opt, ExperimentReport& rep) {
  auto ranks_of = [](const ExperimentReport& r) {
    return std::to_string(r.rank) + "/" + std::to_string(r.nullity);
  };
  const std::vector<std::string> deg3 = {"diproduct1-deg3", "diproduct2-deg3",
                                         "jordan-dialgebra-deg3"};
  const std::vector<std::string> deg5 = {"diproduct1-deg5", "diproduct2-deg5",
                                         "diproducts-deg5-both", "jordan-dialgebra-deg5"};
  for (const std::string& name : deg3) {
    ExperimentOptions o = opt;
    o.skip_generators = true;
    o.rational = false;
    o.modulus = 101;
    ExperimentReport r101 = run_single(name, o);
    o.modulus = 103;
    ExperimentReport r103 = run_single(name, o);
    o.rational = true;
    ExperimentReport rq = run_single(name, o);
    check(rep, name + ": rank over F103 matches F101", ranks_of(r101), ranks_of(r103));
    check(rep, name + ": rank over Q matches F101", ranks_of(r101), ranks_of(rq));
  }
  for (const std::string& name : deg5) {
    ExperimentOptions o = opt;
    o.skip_generators = true;
    o.rational = false;
    o.modulus = 101;
    ExperimentReport r101 = run_single(name, o);
    o.modulus = 103;
    ExperimentReport r103 = run_single(name, o);
    check(rep, name + ": rank over F103 matches F101", ranks_of(r101), ranks_of(r103));
  }
  {
    ExperimentOptions o = opt;
    o.rational = false;
    o.modulus = 101;
    ExperimentReport r101 = run_single("jtd-equivalence", o);
    o.modulus = 103;
    ExperimentReport r103 = run_single("jtd-equivalence", o);
    check(rep, "jtd-equivalence: dims over F103 match F101",
          r101.extra.dump(), r103.extra.dump());
  }
}

ExperimentReport run_single(const std::string& name, const ExperimentOptions& opt) {
  ExperimentReport rep;
  rep.experiment = name;
  if (opt.rational)
    rep.field_name = RationalField().name();
  else
    rep.field_name = ModField(opt.modulus).name();

  auto dispatch = [&](auto&& body) {
    if (opt.rational) {
      RationalField f;
      body(f);
    } else {
      ModField f(opt.modulus);
      body(f);
    }
  };

  const auto start = std::chrono::steady_clock::now();
  if (name == "diproduct1-deg3") {
    rep.degree = 3;
    dispatch([&](auto& f) { diproduct_deg3(f, 1, rep); });
  } else if (name == "diproduct2-deg3") {
    rep.degree = 3;
    dispatch([&](auto& f) { diproduct_deg3(f, 2, rep); });
  } else if (name == "diproduct1-deg5") {
    rep.degree = 5;
    dispatch([&](auto& f) { diproduct1_deg5(f, opt, rep); });
  } else if (name == "diproduct2-deg5") {
    rep.degree = 5;
    dispatch([&](auto& f) { diproduct2_deg5(f, rep); });
  } else if (name == "diproducts-deg5-both") {
    rep.degree = 5;
    dispatch([&](auto& f) { diproducts_deg5_both(f, opt, rep); });
  } else if (name == "jtd-equivalence") {
    rep.degree = 5;
    dispatch([&](auto& f) { jtd_equivalence(f, rep); });
  } else if (name == "jordan-dialgebra-deg3") {
    rep.degree = 3;
    dispatch([&](auto& f) { jordan_dialgebra_deg3(f, rep); });
  } else if (name == "jordan-dialgebra-deg5") {
    rep.degree = 5;
    dispatch([&](auto& f) { jordan_dialgebra_deg5(f, opt, rep); });
  } else if (name == "jtd-verify") {
    rep.degree = 5;
    dispatch([&](auto& f) { jtd_verify(f, rep); });
  } else if (name == "special-reduction") {
    rep.degree = 3;
    special_reduction(rep);
  } else if (name == "differential-instance") {
    rep.degree = 5;
    differential_instance(opt, rep);
  } else if (name == "field-agnosticism") {
    rep.degree = 5;
    field_agnosticism(opt, rep);
  } else {
    throw std::invalid_argument("unknown experiment '" + name + "'");
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

std::vector<std::string> experiment_names() {
  return {"diproduct1-deg3",   "diproduct2-deg3",      "diproduct1-deg5",
          "diproduct2-deg5",   "diproducts-deg5-both", "jtd-equivalence",
          "jordan-dialgebra-deg3", "jordan-dialgebra-deg5", "jtd-verify",
          "special-reduction", "differential-instance", "field-agnosticism"};
}

ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& opt) {
  return run_single(name, opt);
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["experiment"] = experiment;
  j["degree"] = degree;
  j["field"] = field_name;
  if (!field_name.empty() && field_name[0] == 'F')
    j["modulus"] = std::stoi(field_name.substr(1));
  else
    j["modulus"] = nullptr;
  j["matrix_shape"] = {rows, cols};
  j["rank"] = rank;
  j["nullity"] = nullity;
  j["generators"] = generators;
  j["rank_trajectory"] = rank_trajectory;
  nlohmann::json checks_json = nlohmann::json::array();
  for (const ExperimentCheck& c : checks)
    checks_json.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual},
                           {"pass", c.pass}});
  j["checks"] = checks_json;
  j["ok"] = ok();
  j["extra"] = extra;
  return j;
}

std::string ExperimentReport::summary() const {
  std::string out = experiment + " (" + field_name + ")\n";
  for (const ExperimentCheck& c : checks) {
    out += std::string("  [") + (c.pass ? "pass" : "FAIL") + "] " + c.name;
    if (!c.pass) out += " (expected " + c.expected + ", got " + c.actual + ")";
    out += "\n";
  }
  return out;
}

}  // namespace dialid
