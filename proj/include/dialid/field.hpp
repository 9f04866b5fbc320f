#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dialid {

using Rational = mpq_class;

/// Residue-class field F_p for a prime p.
///
/// Scalars are nonnegative int32 values congruent to the residue they
/// represent; canonical form lies in [0, p).  The elimination kernels keep
/// values lazily unreduced (see lazy_limit) so the inner loops are plain
/// integer multiply-adds.
class ModField {
public:
  using Scalar = std::int32_t;

  explicit ModField(std::int32_t p) : p_(p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("ModField: modulus must be prime");
    if (p > kMaxModulus)
      throw std::invalid_argument("ModField: modulus too large for the int32 kernels (max " +
                                  std::to_string(kMaxModulus) + ")");
  }

  static constexpr std::int32_t kMaxModulus = 30000;

  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  std::int32_t modulus() const { return p_; }

  Scalar from_int(std::int64_t v) const {
    std::int64_t r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Scalar>(r);
  }

  Scalar canon(Scalar a) const { return static_cast<Scalar>(a % p_); }  // a >= 0
  bool is_zero(Scalar a) const { return a % p_ == 0; }
  bool is_one(Scalar a) const { return a % p_ == 1; }

  Scalar add(Scalar a, Scalar b) const { return canon(static_cast<Scalar>(a + b)); }
  Scalar sub(Scalar a, Scalar b) const { return from_int(static_cast<std::int64_t>(a) - b); }
  Scalar neg(Scalar a) const { return canon(static_cast<Scalar>(p_ - canon(a))); }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<std::int64_t>(canon(a)) * canon(b)) % p_);
  }

  Scalar inv(Scalar a) const {
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = canon(a);
    if (nr == 0) throw std::domain_error("ModField: inverse of zero");
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Scalar>(t);
  }

  /// How many lazy axpy updates a row tolerates before it must be reduced.
  long lazy_limit() const {
    const std::int64_t grow = static_cast<std::int64_t>(p_ - 1) * (p_ - 1);
    return static_cast<long>((std::numeric_limits<std::int32_t>::max() - p_) / grow);
  }

  /// dst -= c * src on [0, n), implemented as dst += (p - c) * src to keep
  /// values nonnegative.  src must be canonical; c must be canonical.
  void row_submul(Scalar* dst, const Scalar* src, Scalar c, long n) const {
    const std::int32_t f = p_ - c;
    for (long k = 0; k < n; ++k) dst[k] += f * src[k];
  }

  void canon_row(Scalar* row, long n) const {
    for (long k = 0; k < n; ++k) row[k] %= p_;
  }

  void scale_row(Scalar* row, Scalar c, long n) const {
    const std::int64_t f = canon(c);
    for (long k = 0; k < n; ++k) row[k] = static_cast<Scalar>((f * row[k]) % p_);
  }

  std::string scalar_str(Scalar a) const {
    Scalar c = canon(a);
    // print small negatives as such; matrices in this domain are mostly 0, +-1
    if (c > p_ / 2) return "-" + std::to_string(p_ - c);
    return std::to_string(c);
  }

  std::string name() const { return "F" + std::to_string(p_); }

private:
  std::int32_t p_;
};

/// The field of rationals, backed by GMP.  Canonical form (lowest terms,
/// positive denominator) is maintained by mpq_class itself.
class RationalField {
public:
  using Scalar = Rational;

  Scalar from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  Scalar canon(const Scalar& a) const { return a; }
  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool is_one(const Scalar& a) const { return a == 1; }

  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar inv(const Scalar& a) const {
    if (sgn(a) == 0) throw std::domain_error("RationalField: inverse of zero");
    return 1 / a;
  }

  long lazy_limit() const { return std::numeric_limits<long>::max(); }

  void row_submul(Scalar* dst, const Scalar* src, const Scalar& c, long n) const {
    for (long k = 0; k < n; ++k)
      if (sgn(src[k]) != 0) dst[k] -= c * src[k];
  }

  void canon_row(Scalar*, long) const {}

  void scale_row(Scalar* row, const Scalar& c, long n) const {
    for (long k = 0; k < n; ++k)
      if (sgn(row[k]) != 0) row[k] *= c;
  }

  std::string scalar_str(const Scalar& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
};

}  // namespace dialid

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
