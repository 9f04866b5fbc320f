#include <doctest.h>

#include <random>

#include "dialid/linalg.hpp"

using namespace dialid;

namespace {

IntMatrix random_int_matrix(Index rows, Index cols, std::uint64_t seed, int lo = -4, int hi = 4) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

template <class F>
bool is_row_canonical(const F& field, const RcfResult<typename F::Scalar>& r) {
  // unit pivots, only nonzero entry in their column, strictly increasing
  Index prev = -1;
  for (Index i = 0; i < r.rank; ++i) {
    Index p = r.pivot_cols[static_cast<std::size_t>(i)];
    if (p <= prev) return false;
    prev = p;
    if (!field.is_one(r.rcf(i, p))) return false;
    for (Index k = 0; k < r.rcf.rows(); ++k)
      if (k != i && !field.is_zero(r.rcf(k, p))) return false;
    for (Index j = 0; j < p; ++j)
      if (!field.is_zero(r.rcf(i, j))) return false;
  }
  for (Index i = r.rank; i < r.rcf.rows(); ++i)
    for (Index j = 0; j < r.rcf.cols(); ++j)
      if (!field.is_zero(r.rcf(i, j))) return false;
  return true;
}

}  // namespace

TEST_CASE("identity matrix has full rank and is its own canonical form") {
  ModField f(101);
  IntMatrix eye = IntMatrix::Identity(7, 7);
  auto r = rcf_int(f, eye);
  CHECK(r.rank == 7);
  CHECK(matrices_equal(r.rcf, matrix_from_int(f, eye)));
  CHECK(nullspace_basis(f, r, 7).rows() == 0);
}

TEST_CASE("row canonical form is idempotent and canonical (both fields)") {
  for (std::uint64_t seed : {11u, 22u, 33u}) {
    IntMatrix m = random_int_matrix(12, 17, seed);
    {
      ModField f(101);
      auto r = rcf_int(f, m);
      CHECK(is_row_canonical(f, r));
      auto r2 = rcf(f, r.rcf);
      CHECK(r2.rank == r.rank);
      CHECK(matrices_equal(r2.rcf, r.rcf));
    }
    {
      RationalField f;
      auto r = rcf_int(f, m);
      CHECK(is_row_canonical(f, r));
      auto r2 = rcf(f, r.rcf);
      CHECK(r2.rank == r.rank);
      CHECK(matrices_equal(r2.rcf, r.rcf));
    }
  }
}

TEST_CASE("rank agrees over the rationals, F101 and F103; nullspace is annihilated") {
  IntMatrix m = random_int_matrix(20, 30, 987654321);
  RationalField q;
  ModField f101(101), f103(103);
  auto rq = rcf_int(q, m);
  auto r101 = rcf_int(f101, m);
  auto r103 = rcf_int(f103, m);
  CHECK(rq.rank == r101.rank);
  CHECK(rq.rank == r103.rank);
  CHECK(rq.rank + nullspace_basis(q, rq, 30).rows() == 30);

  // exact annihilation over both fields
  {
    RatMatrix ns = nullspace_basis(q, rq, 30);
    for (Index v = 0; v < ns.rows(); ++v)
      for (Index i = 0; i < m.rows(); ++i) {
        Rational acc = 0;
        for (Index j = 0; j < m.cols(); ++j) acc += Rational(static_cast<long>(m(i, j))) * ns(v, j);
        CHECK(sgn(acc) == 0);
      }
    // and the rcf annihilates the rational nullspace vectors too
    for (Index v = 0; v < ns.rows(); ++v)
      for (Index i = 0; i < rq.rank; ++i) {
        Rational acc = 0;
        for (Index j = 0; j < m.cols(); ++j) acc += rq.rcf(i, j) * ns(v, j);
        CHECK(sgn(acc) == 0);
      }
  }
  {
    ModMatrix ns = nullspace_basis(f101, r101, 30);
    for (Index v = 0; v < ns.rows(); ++v)
      for (Index i = 0; i < m.rows(); ++i) {
        std::int64_t acc = 0;
        for (Index j = 0; j < m.cols(); ++j) acc += m(i, j) * ns(v, j);
        CHECK(f101.is_zero(f101.from_int(acc)));
      }
  }
}

TEST_CASE("subspace operations") {
  ModField f(101);
  auto vec = [&](std::initializer_list<int> xs) {
    std::vector<ModField::Scalar> v;
    for (int x : xs) v.push_back(f.from_int(x));
    return v;
  };

  SUBCASE("same span in different generator order") {
    auto s1 = Subspace<ModField>::from_rows(f, {vec({1, 2, 0, 1}), vec({0, 1, 1, 0})}, 4);
    auto s2 = Subspace<ModField>::from_rows(f, {vec({0, 1, 1, 0}), vec({1, 3, 1, 1})}, 4);
    CHECK(s1.dim() == 2);
    CHECK(s1 == s2);
  }

  SUBCASE("membership by basis extension") {
    // a vector outside a proper subspace: extend a basis by a fresh direction
    auto s = Subspace<ModField>::from_rows(f, {vec({1, 0, 2, 0}), vec({0, 1, 5, 0})}, 4);
    CHECK(s.contains(vec({1, 1, 7, 0})));
    CHECK(!s.contains(vec({0, 0, 0, 1})));
    CHECK(!s.contains(vec({1, 1, 8, 0})));
  }

  SUBCASE("dimension mismatch is rejected") {
    auto s = Subspace<ModField>::from_rows(f, {vec({1, 0})}, 2);
    CHECK_THROWS(s.contains(vec({1, 0, 0})));
  }
}

TEST_CASE("row span matches one-shot elimination") {
  IntMatrix m = random_int_matrix(25, 18, 5150);
  {
    ModField f(103);
    auto r = rcf_int(f, m);
    RowSpan<ModField> span(f, 18);
    for (Index i = 0; i < m.rows(); ++i) {
      std::vector<ModField::Scalar> row(18);
      for (Index j = 0; j < 18; ++j) row[static_cast<std::size_t>(j)] = f.from_int(m(i, j));
      span.add(std::move(row));
    }
    CHECK(span.rank() == r.rank);
    CHECK(matrices_equal(span.canonical(), Matrix<ModField::Scalar>(r.rcf.topRows(r.rank))));
  }
  {
    RationalField q;
    auto r = rcf_int(q, m);
    RowSpan<RationalField> span(q, 18);
    for (Index i = 0; i < m.rows(); ++i) {
      std::vector<Rational> row(18);
      for (Index j = 0; j < 18; ++j) row[static_cast<std::size_t>(j)] = q.from_int(m(i, j));
      span.add(std::move(row));
    }
    CHECK(span.rank() == r.rank);
    CHECK(matrices_equal(span.canonical(), Matrix<Rational>(r.rcf.topRows(r.rank))));
  }
}

TEST_CASE("modulus guardrails") {
  CHECK_THROWS(ModField(100));   // not prime
  CHECK_THROWS(ModField(40009)); // beyond the int32 kernel bound
  CHECK(ModField(101).inv(2) == 51);
  CHECK(ModField(101).lazy_limit() > 1000);
}
