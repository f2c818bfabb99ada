#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gp/baire.hpp"
#include "gp/graphspec.hpp"
#include "gp/rational.hpp"
#include "gp/words.hpp"

namespace gp {

/// Result of the ultranorm: the minimal depth whose truncation is nontrivial
/// (absent for the identity), its value 2^{-n}, and the certificate — the
/// canonical nonempty truncated word at that depth (empty for the identity).
struct NormResult {
  std::optional<uint32_t> depth;
  UltraValue value;
  TruncatedWord certificate;

  bool is_identity() const { return !depth.has_value(); }
};

/// d(g) = 2^{-n(g)} with n(g) the least depth at which the canonical form
/// survives truncation; d(e) = 0. The search is a linear scan up to the
/// stabilization bound derived from meets and nonadjacency depths of the
/// canonical form's vertices; failure to find a depth within the bound is an
/// InternalError, never patched over.
NormResult ultranorm(const Word& w, const GraphInstance& g);

/// Left-invariant ultrametric d(g, h) = d(g^{-1} h).
UltraValue distance(const Word& a, const Word& b, const GraphInstance& g);

/// Two-sided metric D(g, h) = d(g, h) + d(g^{-1}, h^{-1}), exact.
Rational two_sided(const Word& a, const Word& b, const GraphInstance& g);

/// Finite fingerprint of the canonical form at depth n: the sequence of
/// (vertex truncated to n, exponent). Equal keys witness the R_n relation.
struct RnKey {
  uint32_t depth = 0;
  std::vector<std::pair<Prefix, long long>> entries;

  friend bool operator==(const RnKey&, const RnKey&) = default;
  std::string str() const;
};

RnKey rn_key(const Word& w, const GraphInstance& g, uint32_t n);

}  // namespace gp
