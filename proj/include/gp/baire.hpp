#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gp/rational.hpp"

namespace gp {

/// A finite initial segment of a point of Baire space.
using Prefix = std::vector<uint32_t>;

std::string str(const Prefix& p);

/// An eventually constant point of Baire space: a finite prefix followed by a
/// constant tail. Canonical form never ends the prefix with the tail value,
/// so equality of representations is equality of points.
///
/// The ordering is length-lex on the (prefix, tail) encoding; it is the total
/// vertex order used by word canonicalization.
class VertexPath {
 public:
  VertexPath() = default;
  explicit VertexPath(uint32_t tail) : tail_(tail) {}
  VertexPath(Prefix prefix, uint32_t tail);

  uint32_t at(size_t n) const { return n < prefix_.size() ? prefix_[n] : tail_; }
  const Prefix& prefix() const { return prefix_; }
  uint32_t tail() const { return tail_; }
  // Number of entries in the canonical encoding (prefix plus tail slot).
  size_t encoding_length() const { return prefix_.size() + 1; }

  std::string str() const;

  friend bool operator==(const VertexPath&, const VertexPath&) = default;
  friend std::strong_ordering operator<=>(const VertexPath& a, const VertexPath& b);

 private:
  Prefix prefix_;
  uint32_t tail_ = 0;
};

/// First n values of the path.
Prefix truncate(const VertexPath& v, size_t n);

/// Length of the longest common prefix of two distinct paths.
/// Throws UndefinedMeetError when u == v.
size_t meet_length(const VertexPath& u, const VertexPath& v);

/// Exact value that is either 0 or 2^{-n} for some n >= 1. Ordered by value:
/// zero below everything, larger exponents smaller.
class UltraValue {
 public:
  static UltraValue zero() { return UltraValue{}; }
  static UltraValue exp(uint32_t n);

  bool is_zero() const { return n_ == 0; }
  uint32_t exponent() const;

  Rational to_rational() const;
  std::string decimal() const;
  std::string str() const;

  friend bool operator==(const UltraValue&, const UltraValue&) = default;
  friend std::strong_ordering operator<=>(const UltraValue& a, const UltraValue& b);

 private:
  uint32_t n_ = 0;  // 0 encodes the zero value
};

/// 0 when u == v, else 2^{-(lg(u ∧ v) + 1)}.
UltraValue baire_distance(const VertexPath& u, const VertexPath& v);

}  // namespace gp
