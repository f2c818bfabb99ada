#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gp/baire.hpp"
#include "gp/errors.hpp"
#include "gp/graphspec.hpp"
#include "gp/rng.hpp"

namespace gp {

template <class V>
struct BasicSyllable {
  V vertex;
  long long exponent = 0;
  friend bool operator==(const BasicSyllable&, const BasicSyllable&) = default;
  friend auto operator<=>(const BasicSyllable&, const BasicSyllable&) = default;
};

/// Alternating sequence of syllables; consecutive syllables carry distinct
/// vertices and every exponent sits in the canonical range for its order
/// ({1..m-1} for finite m, any nonzero integer for infinite order).
template <class V>
using BasicWord = std::vector<BasicSyllable<V>>;

using Syllable = BasicSyllable<VertexPath>;
using Word = BasicWord<VertexPath>;
using TruncatedSyllable = BasicSyllable<Prefix>;
using TruncatedWord = BasicWord<Prefix>;

/// Word operations run against a context that answers adjacency, orders and
/// the total vertex order. FullContext works in G(Γ,𝔭); DepthContext works in
/// the truncation quotient G_n over length-n prefixes.
struct FullContext {
  using Vertex = VertexPath;
  const GraphInstance* graph;

  bool adjacent(const VertexPath& a, const VertexPath& b) const { return gp::adjacent(*graph, a, b); }
  const Order& order_of(const VertexPath& v) const { return graph->coloring.order_of(v); }
  static bool vertex_less(const VertexPath& a, const VertexPath& b) { return a < b; }
};

struct DepthContext {
  using Vertex = Prefix;
  const GraphInstance* graph;
  uint32_t depth = 1;

  bool adjacent(const Prefix& a, const Prefix& b) const { return edge_at_depth(*graph, a, b); }
  const Order& order_of(const Prefix& p) const { return graph->coloring.order_at(p.at(0)); }
  static bool vertex_less(const Prefix& a, const Prefix& b) { return a < b; }
};

namespace detail {

// Canonical exponent, or nullopt when the syllable vanishes.
std::optional<long long> normalize_exponent(const Order& o, long long e);

template <class Ctx>
void push_syllable(const Ctx& ctx, BasicWord<typename Ctx::Vertex>& w,
                   const typename Ctx::Vertex& v, long long e) {
  if (!w.empty() && w.back().vertex == v) {
    e += w.back().exponent;
    w.pop_back();
  }
  if (auto ne = normalize_exponent(ctx.order_of(v), e)) w.push_back({v, *ne});
}

template <class Ctx>
BasicWord<typename Ctx::Vertex> rebuild(const Ctx& ctx, const BasicWord<typename Ctx::Vertex>& in) {
  BasicWord<typename Ctx::Vertex> out;
  out.reserve(in.size());
  for (const auto& s : in) push_syllable(ctx, out, s.vertex, s.exponent);
  return out;
}

// All merge opportunities: positions p < q with equal vertices such that
// every syllable strictly between is adjacent to w[p].vertex. A word with no
// such pair is reduced.
template <class Ctx>
std::vector<std::pair<size_t, size_t>> merge_pairs(const Ctx& ctx,
                                                   const BasicWord<typename Ctx::Vertex>& w) {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t p = 0; p < w.size(); ++p) {
    for (size_t q = p + 1; q < w.size(); ++q) {
      if (w[q].vertex == w[p].vertex) {
        out.emplace_back(p, q);
        continue;  // an equal vertex is adjacent to itself, keep scanning
      }
      if (!ctx.adjacent(w[q].vertex, w[p].vertex)) break;
    }
  }
  return out;
}

// Select picks the merge pair to apply among the available ones; the word
// shrinks at every step, so any selection order terminates with a reduced
// word spelling the same element.
template <class Ctx, class Select>
BasicWord<typename Ctx::Vertex> reduce_impl(const Ctx& ctx, BasicWord<typename Ctx::Vertex> w,
                                            Select&& select) {
  w = rebuild(ctx, w);
  for (;;) {
    auto pairs = merge_pairs(ctx, w);
    if (pairs.empty()) return w;
    auto [p, q] = pairs[select(pairs.size())];
    w[p].exponent += w[q].exponent;
    w.erase(w.begin() + static_cast<long>(q));
    w = rebuild(ctx, w);
  }
}

template <class Ctx>
bool syllable_less(const BasicSyllable<typename Ctx::Vertex>& a,
                   const BasicSyllable<typename Ctx::Vertex>& b) {
  if (a.vertex != b.vertex) return Ctx::vertex_less(a.vertex, b.vertex);
  return a.exponent < b.exponent;
}

// Lexicographically least word in the shuffle class of the reduced form:
// repeatedly move to the front the least syllable whose vertex is adjacent
// to, and distinct from, every vertex before it.
template <class Ctx>
BasicWord<typename Ctx::Vertex> canonical_impl(const Ctx& ctx,
                                               const BasicWord<typename Ctx::Vertex>& w) {
  auto rem = reduce_impl(ctx, w, [](size_t) { return size_t{0}; });
  BasicWord<typename Ctx::Vertex> out;
  out.reserve(rem.size());
  while (!rem.empty()) {
    size_t best = rem.size();
    for (size_t i = 0; i < rem.size(); ++i) {
      bool movable = true;
      for (size_t j = 0; j < i && movable; ++j)
        movable = rem[j].vertex != rem[i].vertex && ctx.adjacent(rem[j].vertex, rem[i].vertex);
      if (movable && (best == rem.size() || syllable_less<Ctx>(rem[i], rem[best]))) best = i;
    }
    out.push_back(rem[best]);
    rem.erase(rem.begin() + static_cast<long>(best));
  }
  return out;
}

}  // namespace detail

/// Builds a normalized word from raw (vertex, exponent) pairs; zero exponents
/// and vanishing merges drop out.
Word make_word(const std::vector<std::pair<VertexPath, long long>>& raw, const GraphInstance& g);

/// Juxtaposition with boundary merges; spells the product.
Word concat(const Word& a, const Word& b, const GraphInstance& g);

/// Group inverse of the spelled element.
Word invert(const Word& w, const GraphInstance& g);

/// Reduced word (minimal syllable count) spelling the same element.
Word reduce(const Word& w, const GraphInstance& g);

/// Same result set as reduce but applies merge pairs in random order; the
/// confluence suite runs it to confirm the reduced length is selection-free.
Word reduce_randomized(const Word& w, const GraphInstance& g, Rng& rng);

/// Reduced word in canonical (lex-least shuffle) form, tied to its graph.
/// Two words spell the same element iff their canonical forms are identical.
struct NormalForm {
  Word word;
  const GraphInstance* graph = nullptr;

  bool is_identity() const { return word.empty(); }
  bool operator==(const NormalForm& other) const {
    if (graph != other.graph)
      throw MixedGraphError("NormalForm: comparing forms over different graph instances");
    return word == other.word;
  }
};

NormalForm canonical(const Word& w, const GraphInstance& g);

bool equal(const Word& a, const Word& b, const GraphInstance& g);

/// Image of the word in G_n: vertices truncated to length n (n >= 1), with
/// boundary merges against the depth-n coloring.
TruncatedWord truncate_word(const Word& w, uint32_t n, const GraphInstance& g);

TruncatedWord reduce_at_depth(const TruncatedWord& w, uint32_t n, const GraphInstance& g);
TruncatedWord canonical_at_depth(const TruncatedWord& w, uint32_t n, const GraphInstance& g);
bool equal_at_depth(const TruncatedWord& a, const TruncatedWord& b, uint32_t n,
                    const GraphInstance& g);

std::string str(const Word& w);
std::string str(const TruncatedWord& w);

}  // namespace gp
