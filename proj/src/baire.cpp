#include "gp/baire.hpp"

#include <algorithm>

#include "gp/errors.hpp"

namespace gp {

std::string str(const Prefix& p) {
  std::string out = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  out += "]";
  return out;
}

VertexPath::VertexPath(Prefix prefix, uint32_t tail) : prefix_(std::move(prefix)), tail_(tail) {
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

std::string VertexPath::str() const {
  std::string out = "[";
  for (size_t i = 0; i < prefix_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(prefix_[i]);
  }
  out += "|";
  out += std::to_string(tail_);
  out += "]";
  return out;
}

std::strong_ordering operator<=>(const VertexPath& a, const VertexPath& b) {
  if (a.encoding_length() != b.encoding_length())
    return a.encoding_length() <=> b.encoding_length();
  for (size_t i = 0; i < a.prefix_.size(); ++i) {
    if (a.prefix_[i] != b.prefix_[i]) return a.prefix_[i] <=> b.prefix_[i];
  }
  return a.tail_ <=> b.tail_;
}

Prefix truncate(const VertexPath& v, size_t n) {
  Prefix out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(v.at(i));
  return out;
}

size_t meet_length(const VertexPath& u, const VertexPath& v) {
  if (u == v) throw UndefinedMeetError("meet_length: paths are equal (" + u.str() + ")");
  // Distinct eventually constant paths must differ within one slot past the
  // longer prefix.
  const size_t bound = std::max(u.prefix().size(), v.prefix().size()) + 1;
  for (size_t i = 0; i < bound; ++i) {
    if (u.at(i) != v.at(i)) return i;
  }
  throw InternalError("meet_length: no disagreement found for distinct paths");
}

UltraValue UltraValue::exp(uint32_t n) {
  if (n == 0) throw PreconditionError("UltraValue::exp: exponent must be positive");
  UltraValue v;
  v.n_ = n;
  return v;
}

uint32_t UltraValue::exponent() const {
  if (n_ == 0) throw PreconditionError("UltraValue: zero value has no exponent");
  return n_;
}

Rational UltraValue::to_rational() const {
  if (n_ == 0) return Rational(0);
  if (n_ > 62) throw InternalError("UltraValue: exponent too large for exact rational");
  return Rational(1, 1LL << n_);
}

std::string UltraValue::decimal() const {
  if (n_ == 0) return "0";
  return *to_rational().decimal();
}

std::string UltraValue::str() const {
  if (n_ == 0) return "0";
  return "2^-" + std::to_string(n_);
}

std::strong_ordering operator<=>(const UltraValue& a, const UltraValue& b) {
  if (a.n_ == b.n_) return std::strong_ordering::equal;
  if (a.n_ == 0) return std::strong_ordering::less;
  if (b.n_ == 0) return std::strong_ordering::greater;
  // Larger exponent means smaller value.
  return b.n_ <=> a.n_;
}

UltraValue baire_distance(const VertexPath& u, const VertexPath& v) {
  if (u == v) return UltraValue::zero();
  return UltraValue::exp(static_cast<uint32_t>(meet_length(u, v)) + 1);
}

}  // namespace gp
