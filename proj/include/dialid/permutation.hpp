#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dialid {

/// Permutation of {0, ..., n-1}, stored as the image sequence.
/// perm[i] is the value placed at position i.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    if (!is_valid()) throw std::invalid_argument("Permutation: images are not a bijection");
  }

  static Permutation identity(int n) {
    std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return Permutation(std::move(v));
  }

  static Permutation reversal(int n) {
    std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(n - 1 - i);
    return Permutation(std::move(v));
  }

  static Permutation transposition(int n, int i, int j) {
    Permutation p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(i)], p.img_[static_cast<std::size_t>(j)]);
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  std::uint8_t operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& images() const { return img_; }

  /// (a * b)[i] = a[b[i]]  (apply b first, then a).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<std::uint8_t> v(a.img_.size());
    for (int i = 0; i < a.degree(); ++i) v[static_cast<std::size_t>(i)] = a[b[i]];
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<std::uint8_t> v(img_.size());
    for (int i = 0; i < degree(); ++i) v[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

  /// Rank in lexicographic order among all degree() ! permutations (Lehmer code).
  long lex_rank() const {
    const int n = degree();
    long rank = 0;
    for (int i = 0; i < n; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n; ++j)
        if (img_[static_cast<std::size_t>(j)] < img_[static_cast<std::size_t>(i)]) ++smaller;
      rank = rank * (n - i) + smaller;
    }
    return rank;
  }

  static Permutation from_lex_rank(int n, long rank) {
    std::vector<std::uint8_t> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    std::vector<std::uint8_t> v;
    v.reserve(static_cast<std::size_t>(n));
    long f = 1;
    for (int i = 2; i < n; ++i) f *= i;  // (n-1)!
    for (int i = n - 1; i >= 1; --i) {
      long q = rank / f;
      rank %= f;
      v.push_back(pool[static_cast<std::size_t>(q)]);
      pool.erase(pool.begin() + q);
      f /= i;
    }
    v.push_back(pool[0]);
    return Permutation(std::move(v));
  }

  std::string str() const {
    std::string s;
    for (std::uint8_t x : img_) s += static_cast<char>('a' + x);
    return s;
  }

private:
  std::vector<std::uint8_t> img_;

  bool is_valid() const {
    std::vector<bool> seen(img_.size(), false);
    for (std::uint8_t x : img_) {
      if (x >= img_.size() || seen[x]) return false;
      seen[x] = true;
    }
    return true;
  }
};

inline long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Closure of a generating set under composition (the generated subgroup).
/// Result is sorted lexicographically; always contains the identity.
inline std::vector<Permutation> generate_group(int n, const std::vector<Permutation>& gens) {
  std::vector<Permutation> elems{Permutation::identity(n)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (const Permutation& g : gens) {
        Permutation h = g * elems[i];
        if (std::find(elems.begin(), elems.end(), h) == elems.end()) {
          elems.push_back(h);
          grew = true;
        }
      }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace dialid
