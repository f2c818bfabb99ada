#include "gp/words.hpp"

namespace gp {

namespace detail {

std::optional<long long> normalize_exponent(const Order& o, long long e) {
  if (o.is_infinite()) {
    if (e == 0) return std::nullopt;
    return e;
  }
  const long long m = o.value();
  long long r = e % m;
  if (r < 0) r += m;
  if (r == 0) return std::nullopt;
  return r;
}

}  // namespace detail

Word make_word(const std::vector<std::pair<VertexPath, long long>>& raw, const GraphInstance& g) {
  FullContext ctx{&g};
  Word out;
  out.reserve(raw.size());
  for (const auto& [v, e] : raw) detail::push_syllable(ctx, out, v, e);
  return out;
}

Word concat(const Word& a, const Word& b, const GraphInstance& g) {
  FullContext ctx{&g};
  Word out;
  out.reserve(a.size() + b.size());
  for (const auto& s : a) detail::push_syllable(ctx, out, s.vertex, s.exponent);
  for (const auto& s : b) detail::push_syllable(ctx, out, s.vertex, s.exponent);
  return out;
}

Word invert(const Word& w, const GraphInstance& g) {
  FullContext ctx{&g};
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    detail::push_syllable(ctx, out, it->vertex, -it->exponent);
  return out;
}

Word reduce(const Word& w, const GraphInstance& g) {
  FullContext ctx{&g};
  return detail::reduce_impl(ctx, w, [](size_t) { return size_t{0}; });
}

Word reduce_randomized(const Word& w, const GraphInstance& g, Rng& rng) {
  FullContext ctx{&g};
  return detail::reduce_impl(ctx, w, [&rng](size_t n) { return static_cast<size_t>(rng.below(n)); });
}

NormalForm canonical(const Word& w, const GraphInstance& g) {
  FullContext ctx{&g};
  return NormalForm{detail::canonical_impl(ctx, w), &g};
}

bool equal(const Word& a, const Word& b, const GraphInstance& g) {
  FullContext ctx{&g};
  return detail::canonical_impl(ctx, a) == detail::canonical_impl(ctx, b);
}

TruncatedWord truncate_word(const Word& w, uint32_t n, const GraphInstance& g) {
  if (n == 0) throw PreconditionError("truncate_word: depth must be at least 1");
  DepthContext ctx{&g, n};
  TruncatedWord out;
  out.reserve(w.size());
  for (const auto& s : w) detail::push_syllable(ctx, out, truncate(s.vertex, n), s.exponent);
  return out;
}

TruncatedWord reduce_at_depth(const TruncatedWord& w, uint32_t n, const GraphInstance& g) {
  DepthContext ctx{&g, n};
  return detail::reduce_impl(ctx, w, [](size_t) { return size_t{0}; });
}

TruncatedWord canonical_at_depth(const TruncatedWord& w, uint32_t n, const GraphInstance& g) {
  DepthContext ctx{&g, n};
  return detail::canonical_impl(ctx, w);
}

bool equal_at_depth(const TruncatedWord& a, const TruncatedWord& b, uint32_t n,
                    const GraphInstance& g) {
  DepthContext ctx{&g, n};
  return detail::canonical_impl(ctx, a) == detail::canonical_impl(ctx, b);
}

namespace {

std::string vertex_str(const VertexPath& v) { return v.str(); }
std::string vertex_str(const Prefix& p) { return str(p); }

template <class V>
std::string render(const BasicWord<V>& w) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += vertex_str(w[i].vertex);
    out += "^";
    out += std::to_string(w[i].exponent);
  }
  return out;
}

}  // namespace

std::string str(const Word& w) { return render(w); }
std::string str(const TruncatedWord& w) { return render(w); }

}  // namespace gp
