#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dialid/dialgebra.hpp"
#include "dialid/trees.hpp"

namespace dialid {

/// Sparse multilinear polynomial with integer coefficients over an ordered
/// monomial type.  All identity and template coefficients in this domain are
/// small integers; fields enter only when monomials are turned into
/// coordinate vectors.
template <class Mono>
class Poly {
public:
  using Terms = std::map<Mono, std::int64_t>;

  Poly() = default;
  Poly(Mono m, std::int64_t c) { add(std::move(m), c); }

  void add(Mono m, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const Poly& other, std::int64_t scale = 1) {
    for (const auto& [m, c] : other.terms_) add(m, c * scale);
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  friend Poly operator+(Poly a, const Poly& b) {
    a.add(b);
    return a;
  }
  friend Poly operator-(Poly a, const Poly& b) {
    a.add(b, -1);
    return a;
  }
  friend Poly operator*(Poly a, std::int64_t c) {
    if (c == 0) return Poly();
    for (auto& [m, v] : a.terms_) v *= c;
    return a;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
  Terms terms_;
};

using DiPoly = Poly<DiMonomial>;
using TreePoly = Poly<LabeledTree>;

/// Multilinear associative word (all letters distinct).
struct Word {
  std::vector<std::uint8_t> letters;

  int degree() const { return static_cast<int>(letters.size()); }
  friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }
  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }

  std::string str() const {
    std::string s;
    for (std::uint8_t v : letters) s += static_cast<char>('a' + v);
    return s;
  }
};

using WordPoly = Poly<Word>;

}  // namespace dialid
