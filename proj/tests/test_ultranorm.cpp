#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gp/errors.hpp"
#include "gp/fixtures.hpp"
#include "gp/rng.hpp"
#include "gp/ultranorm.hpp"
#include "test_util.hpp"

using namespace gp;
using gptest::cv;
using gptest::vp;
using gptest::w;

TEST_CASE("ultranorm of the identity") {
  const GraphInstance g = gptest::free_graph();
  const NormResult n = ultranorm(Word{}, g);
  CHECK(n.is_identity());
  CHECK(n.value == UltraValue::zero());
  CHECK(n.certificate.empty());
  // A spelled identity too.
  const Word word = w(g, {{cv(0), 1}, {cv(1), 1}});
  CHECK(ultranorm(concat(word, invert(word, g), g), g).is_identity());
}

TEST_CASE("ultranorm survives exactly past the meet") {
  const GraphInstance g = gptest::free_graph();
  const VertexPath eta = vp({0, 0}, 0);  // canonical form: the constant 0 path
  const VertexPath nu = vp({0, 1}, 0);
  const NormResult n = ultranorm(w(g, {{eta, -1}, {nu, 1}}), g);
  REQUIRE(n.depth.has_value());
  CHECK(*n.depth == 2);
  CHECK(n.value == UltraValue::exp(2));
  CHECK(n.value.to_rational() == Rational(1, 4));
  REQUIRE(n.certificate.size() == 2);
  // Below the norm depth every truncation collapses.
  CHECK(canonical_at_depth(truncate_word(w(g, {{eta, -1}, {nu, 1}}), 1, g), 1, g).empty());
}

TEST_CASE("single syllables have norm depth 1") {
  for (const Fixture& f : acceptance_fixtures()) {
    const Word word = w(f.graph, {{f.sample_vertices.front(), 1}});
    const NormResult n = ultranorm(word, f.graph);
    REQUIRE(n.depth.has_value());
    CHECK(*n.depth == 1);
    CHECK(n.value == UltraValue::exp(1));
    CHECK_FALSE(n.certificate.empty());
  }
}

TEST_CASE("distance basics") {
  const GraphInstance g = gptest::free_graph();
  const Word word = w(g, {{cv(0), 1}, {cv(1), -2}});
  CHECK(distance(word, word, g) == UltraValue::zero());
  CHECK(distance(Word{}, word, g) == ultranorm(word, g).value);

  const VertexPath eta = vp({2, 5}, 0);
  const VertexPath nu = vp({2, 7}, 0);
  CHECK(distance(w(g, {{eta, 1}}), w(g, {{nu, 1}}), g) == baire_distance(eta, nu));
}

TEST_CASE("two sided metric") {
  const GraphInstance g = gptest::free_graph();
  const Word a = w(g, {{cv(0), 1}});
  const Word b = w(g, {{cv(1), 1}});
  CHECK(two_sided(a, a, g) == Rational(0));
  CHECK(two_sided(a, b, g) == Rational(1));  // 1/2 + 1/2, meet at depth 0 both ways
  const Word word = w(g, {{cv(0), 1}, {cv(1), 1}});
  const Rational d = two_sided(Word{}, word, g);
  CHECK(d >= distance(Word{}, word, g).to_rational());
  CHECK(d < Rational(2));
}

TEST_CASE("rn keys") {
  const GraphInstance g = gptest::free_graph();
  const VertexPath deep1 = vp({0, 0, 0}, 1);
  const VertexPath deep2 = vp({0, 0, 0}, 2);
  // Agreeing to depth 3 means equal keys at depth 2.
  CHECK(rn_key(w(g, {{deep1, 1}}), g, 2) == rn_key(w(g, {{deep2, 1}}), g, 2));
  CHECK_FALSE(rn_key(w(g, {{deep1, 1}}), g, 4) == rn_key(w(g, {{deep2, 1}}), g, 4));
  // Different canonical lengths give different keys.
  CHECK_FALSE(rn_key(w(g, {{deep1, 1}}), g, 2) ==
              rn_key(w(g, {{deep1, 1}, {cv(5), 1}}), g, 2));
  CHECK_THROWS_AS(rn_key(Word{}, g, 0), PreconditionError);

  // Perturbing vertices beyond depth n preserves the key and keeps the words
  // 2^{-(n+1)}-close.
  const Word word = w(g, {{vp({1, 2, 3}, 0), 1}, {vp({2, 2}, 1), -2}});
  for (uint32_t n = 1; n <= 4; ++n) {
    std::vector<std::pair<VertexPath, long long>> raw;
    for (const auto& s : word) {
      Prefix p = truncate(s.vertex, n);
      p.push_back(s.vertex.at(n) + 1);
      raw.emplace_back(VertexPath(std::move(p), s.vertex.at(n) + 1), s.exponent);
    }
    const Word moved = make_word(raw, g);
    REQUIRE(rn_key(word, g, n) == rn_key(moved, g, n));
    const UltraValue d = distance(word, moved, g);
    CHECK((d.is_zero() || d.exponent() >= n + 1));
  }
}

TEST_CASE("norm axioms on sampled words") {
  for (const Fixture& f : acceptance_fixtures()) {
    Rng rng(19);
    auto sample = [&] {
      std::vector<std::pair<VertexPath, long long>> raw;
      for (size_t i = rng.below(7); i > 0; --i) {
        long long e = rng.range(-3, 3);
        raw.emplace_back(f.sample_vertices[rng.below(f.sample_vertices.size())], e ? e : 1);
      }
      return make_word(raw, f.graph);
    };
    for (int t = 0; t < 60; ++t) {
      const Word g1 = sample();
      const Word g2 = sample();
      const NormResult n1 = ultranorm(g1, f.graph);
      CHECK(n1.value.is_zero() == canonical(g1, f.graph).word.empty());
      CHECK(ultranorm(invert(g1, f.graph), f.graph).value == n1.value);
      CHECK(ultranorm(concat(g1, g2, f.graph), f.graph).value <=
            std::max(n1.value, ultranorm(g2, f.graph).value));
      // Strong triangle for the induced distance.
      const Word g3 = sample();
      CHECK(distance(g1, g3, f.graph) <=
            std::max(distance(g1, g2, f.graph), distance(g2, g3, f.graph)));
    }
  }
}

TEST_CASE("left invariance on sampled triples") {
  const Fixture f = fixture_random_clopen(23, 4, 4);
  Rng rng(29);
  auto sample = [&] {
    std::vector<std::pair<VertexPath, long long>> raw;
    for (size_t i = rng.below(6); i > 0; --i) {
      long long e = rng.range(-2, 2);
      raw.emplace_back(f.sample_vertices[rng.below(f.sample_vertices.size())], e ? e : 1);
    }
    return make_word(raw, f.graph);
  };
  for (int t = 0; t < 80; ++t) {
    const Word k = sample();
    const Word a = sample();
    const Word b = sample();
    CHECK(distance(concat(k, a, f.graph), concat(k, b, f.graph), f.graph) ==
          distance(a, b, f.graph));
  }
}

TEST_CASE("norm certificate is reduced and nonempty at the right depth") {
  const Fixture f = fixture_half_graph(4, Order::infinite());
  const auto& fe = *f.graph.finite();
  const Word word = w(f.graph, {{fe.vertices.at("a0"), 1},
                                {fe.vertices.at("b2"), -1},
                                {fe.vertices.at("a1"), 2}});
  const NormResult n = ultranorm(word, f.graph);
  REQUIRE(n.depth.has_value());
  CHECK_FALSE(n.certificate.empty());
  for (uint32_t d = 1; d < *n.depth; ++d)
    CHECK(canonical_at_depth(truncate_word(canonical(word, f.graph).word, d, f.graph), d,
                             f.graph)
              .empty());
}
