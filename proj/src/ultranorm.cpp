#include "gp/ultranorm.hpp"

#include <algorithm>

#include "gp/errors.hpp"

namespace gp {

NormResult ultranorm(const Word& w, const GraphInstance& g) {
  const NormalForm c = canonical(w, g);
  if (c.word.empty()) return NormResult{std::nullopt, UltraValue::zero(), {}};

  std::vector<VertexPath> verts;
  for (const auto& s : c.word) {
    if (std::find(verts.begin(), verts.end(), s.vertex) == verts.end()) verts.push_back(s.vertex);
  }

  // Depth bound m: past it, distinct vertices stay distinct and the adjacency
  // pattern of the canonical form is the full-graph one, so the truncated
  // word is still reduced and nonempty. Hence n(g) <= m.
  uint32_t m = 1;
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j) {
      m = std::max(m, static_cast<uint32_t>(meet_length(verts[i], verts[j])) + 1);
      if (!adjacent(g, verts[i], verts[j]))
        m = std::max(m, nonadjacency_depth(g, verts[i], verts[j]));
    }
  }

  for (uint32_t n = 1; n <= m; ++n) {
    TruncatedWord t = canonical_at_depth(truncate_word(c.word, n, g), n, g);
    if (!t.empty()) return NormResult{n, UltraValue::exp(n), std::move(t)};
  }
  throw InternalError("ultranorm: no nontrivial truncation within the proof bound " +
                      std::to_string(m) + " for " + str(c.word));
}

UltraValue distance(const Word& a, const Word& b, const GraphInstance& g) {
  return ultranorm(concat(invert(a, g), b, g), g).value;
}

Rational two_sided(const Word& a, const Word& b, const GraphInstance& g) {
  const UltraValue d1 = distance(a, b, g);
  const UltraValue d2 = distance(invert(a, g), invert(b, g), g);
  return d1.to_rational() + d2.to_rational();
}

RnKey rn_key(const Word& w, const GraphInstance& g, uint32_t n) {
  if (n == 0) throw PreconditionError("rn_key: depth must be at least 1");
  const NormalForm c = canonical(w, g);
  RnKey key;
  key.depth = n;
  key.entries.reserve(c.word.size());
  for (const auto& s : c.word) key.entries.emplace_back(truncate(s.vertex, n), s.exponent);
  return key;
}

std::string RnKey::str() const {
  std::string out = "n" + std::to_string(depth) + ":";
  for (const auto& [p, e] : entries) {
    out += gp::str(p);
    out += "^";
    out += std::to_string(e);
    out += ";";
  }
  return out;
}

}  // namespace gp
