#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gp/errors.hpp"
#include "gp/oracle.hpp"
#include "gp/rng.hpp"
#include "test_util.hpp"

using namespace gp;
using gptest::abc_graph;
using gptest::cv;
using gptest::w;

namespace {

const VertexPath A = cv(0);
const VertexPath B = cv(1);

GraphInstance single_vertex_graph(Order order) {
  FiniteExplicit fe;
  fe.vertices["a"] = cv(0);
  GraphInstance g;
  g.oracle = std::move(fe);
  g.coloring.table[0] = order;
  return g;
}

}  // namespace

TEST_CASE("expansion") {
  const GraphInstance g = abc_graph({}, Order::infinite(), Order::infinite(), Order::infinite());
  const OracleContext ctx(g);
  const Letters letters = ctx.expand(w(g, {{A, 2}, {B, -1}}));
  REQUIRE(letters.size() == 3);
  CHECK(letters[0] == Letter{"a", 1});
  CHECK(letters[1] == Letter{"a", 1});
  CHECK(letters[2] == Letter{"b", -1});
  CHECK_THROWS_AS(ctx.expand(w(g, {{cv(9), 1}})), UnknownVertexError);
}

TEST_CASE("closure contains the expected rewrites") {
  const GraphInstance free = abc_graph({}, Order::infinite(), Order::infinite(), Order::infinite());
  const OracleContext ctx(free);

  // a a^{-1} cancels.
  const ClosureClass cancel = ctx.closure({{"a", 1}, {"a", -1}}, 4);
  CHECK(cancel.contains({}));

  // a b a with a--b joined and order(a) = 2 reaches b.
  const GraphInstance g = abc_graph({{"a", "b"}}, Order::finite(2), Order::infinite(),
                                    Order::infinite());
  const OracleContext ctx2(g);
  const ClosureClass aba = ctx2.closure({{"a", 1}, {"b", 1}, {"a", 1}}, 5);
  CHECK(aba.contains({{"b", 1}}));

  // Without the edge, a b never becomes b a (exhausted at max_len 6).
  const ClosureClass ab = ctx.closure({{"a", 1}, {"b", 1}}, 6);
  CHECK_FALSE(ab.contains({{"b", 1}, {"a", 1}}));
  CHECK(ab.contains({{"a", 1}, {"b", 1}}));
}

TEST_CASE("closure is deterministic and bounded") {
  const GraphInstance g = abc_graph({}, Order::finite(2), Order::infinite(), Order::infinite());
  const OracleContext ctx(g);
  const ClosureClass c1 = ctx.closure({{"a", 1}}, 5);
  const ClosureClass c2 = ctx.closure({{"a", 1}}, 5);
  CHECK(c1.members == c2.members);
  for (const Letters& m : c1.members) CHECK(m.size() <= 5);
  CHECK_THROWS_AS(ctx.closure({{"a", 1}, {"a", 1}, {"a", 1}}, 2), BoundTooSmallError);
  CHECK_THROWS_AS(ctx.closure({{"a", 1}}, 20), ValidationError);
}

TEST_CASE("oracle equality") {
  const GraphInstance edge = abc_graph({{"a", "b"}}, Order::infinite(), Order::infinite(),
                                       Order::infinite());
  CHECK(oracle_equal(w(edge, {{A, 1}, {B, 1}}), w(edge, {{A, 1}, {B, 1}}), edge, 8));
  CHECK(oracle_equal(w(edge, {{A, 1}, {B, 1}}), w(edge, {{B, 1}, {A, 1}}), edge, 8));

  const GraphInstance c3 = single_vertex_graph(Order::finite(3));
  const Word a1 = make_word({{cv(0), 1}}, c3);
  const Word a2 = make_word({{cv(0), 2}}, c3);
  CHECK_FALSE(oracle_equal(a1, a2, c3, 8));
  CHECK(oracle_equal(a2, make_word({{cv(0), -1}}, c3), c3, 8));
}

TEST_CASE("min form is the least reduced string") {
  const GraphInstance g = abc_graph({{"a", "b"}}, Order::finite(2), Order::infinite(),
                                    Order::infinite());
  const OracleContext ctx(g);
  CHECK(ctx.min_form({{"a", 1}, {"b", 1}, {"a", 1}}) == Letters{{"b", 1}});
  CHECK(ctx.min_form({{"b", 1}, {"a", 1}}) == Letters{{"a", 1}, {"b", 1}});
  CHECK(ctx.min_form({}) == Letters{});

  // The min form never depends on the spelling within a class: check against
  // the closure members directly.
  const ClosureClass clazz = ctx.closure({{"a", 1}, {"b", -2}}, 7);
  const Letters key = ctx.min_form({{"a", 1}, {"b", -2}});
  for (const Letters& member : clazz.members) {
    if (member.size() <= 5) CHECK(ctx.min_form(member) == key);
  }
}

TEST_CASE("closure intersection at the full length bound 12") {
  const GraphInstance c2 = single_vertex_graph(Order::finite(2));
  const OracleContext ctx(c2);
  CHECK(ctx.equal({{"a", 1}}, {{"a", 1}, {"a", 1}, {"a", 1}}, 12));
  CHECK_FALSE(ctx.equal({{"a", 1}}, {}, 12));
  CHECK(ctx.equal({{"a", 1}, {"a", 1}}, {}, 12));
}

TEST_CASE("closure ignores argument order and seed spelling") {
  const GraphInstance g = abc_graph({{"a", "b"}}, Order::finite(2), Order::infinite(),
                                    Order::infinite());
  const OracleContext ctx(g);
  const Word w1 = w(g, {{A, 1}, {B, 1}, {A, 1}});
  const Word w2 = w(g, {{B, 1}});
  CHECK(oracle_equal(w1, w2, g, 6) == oracle_equal(w2, w1, g, 6));
  // Canonicalizing the seed first leaves the class unchanged.
  const ClosureClass raw = ctx.closure(ctx.expand(w1), 6);
  const ClosureClass canon = ctx.closure(ctx.expand(canonical(w1, g).word), 6);
  CHECK(raw.members == canon.members);
}

TEST_CASE("min form normalizes negative finite-order letters") {
  const GraphInstance c3 = single_vertex_graph(Order::finite(3));
  const OracleContext ctx(c3);
  // a^{-1} = a^2, so both spell the same two-letter minimum.
  CHECK(ctx.min_form({{"a", -1}}) == Letters{{"a", 1}, {"a", 1}});
  CHECK(ctx.min_form({{"a", 1}, {"a", 1}}) == ctx.min_form({{"a", -1}}));
  CHECK(ctx.min_form({{"a", -1}, {"a", -1}}) == Letters{{"a", 1}});
}

// The oracle agrees with words.equal over a random slice of the corpus the
// acceptance suite exhausts.
TEST_CASE("agreement with word rewriting on sampled pairs") {
  Rng rng(3);
  for (uint32_t mask = 0; mask < 8; ++mask) {
    std::vector<std::pair<std::string, std::string>> edges;
    if (mask & 1) edges.emplace_back("a", "b");
    if (mask & 2) edges.emplace_back("a", "c");
    if (mask & 4) edges.emplace_back("b", "c");
    const GraphInstance g = abc_graph(edges, Order::finite(2), Order::finite(3),
                                      Order::infinite());
    const OracleContext ctx(g);
    auto sample = [&] {
      std::vector<std::pair<VertexPath, long long>> raw;
      for (size_t i = rng.below(4); i > 0; --i) {
        long long e = rng.range(-2, 2);
        raw.emplace_back(cv(static_cast<uint32_t>(rng.below(3))), e ? e : 1);
      }
      return make_word(raw, g);
    };
    for (int t = 0; t < 30; ++t) {
      const Word w1 = sample();
      const Word w2 = sample();
      const bool via_words = equal(w1, w2, g);
      CHECK(via_words == (ctx.min_form(ctx.expand(w1)) == ctx.min_form(ctx.expand(w2))));
      const size_t len1 = ctx.expand(w1).size();
      const size_t len2 = ctx.expand(w2).size();
      if (len1 + len2 <= 5) {
        // Complete already at max(len) + max finite order: a connecting path
        // runs through a common reduced string with at most one order fold.
        const uint32_t bound = static_cast<uint32_t>(std::max(len1, len2)) + 3;
        CHECK(via_words == ctx.equal(ctx.expand(w1), ctx.expand(w2), bound));
      }
    }
  }
}
