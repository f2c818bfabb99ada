#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gp/errors.hpp"
#include "gp/fixtures.hpp"
#include "gp/graphspec.hpp"
#include "test_util.hpp"

using namespace gp;
using gptest::cv;
using gptest::vp;

namespace {

GraphInstance box_graph(std::vector<std::pair<Prefix, Prefix>> boxes,
                        Order fallback = Order::infinite()) {
  GraphInstance g;
  g.oracle = CloPenBoxes{std::move(boxes)};
  g.coloring.fallback = fallback;
  return g;
}

}  // namespace

TEST_CASE("prime powers") {
  for (uint32_t m : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 27u, 31u, 121u}) CHECK(is_prime_power(m));
  for (uint32_t m : {0u, 1u, 6u, 10u, 12u, 15u, 100u}) CHECK_FALSE(is_prime_power(m));
}

TEST_CASE("order parsing and rendering") {
  CHECK(Order::parse("inf").is_infinite());
  CHECK(Order::parse("8").value() == 8);
  CHECK(Order::parse("2^3").value() == 8);
  CHECK(Order::parse("3^2").str() == "9");
  CHECK(Order::parse("inf").str() == "inf");
  CHECK_THROWS_AS(Order::parse("eight"), ParseError);
  CHECK_THROWS_AS(Order::parse(""), ParseError);
  CHECK_THROWS_AS(Order::parse("2^"), ParseError);
  CHECK_THROWS_AS(Order::parse("0"), ParseError);
  CHECK_THROWS_AS(Order::finite(0), PreconditionError);
  CHECK(Order::finite(6).valid() == false);
  CHECK(Order::finite(9).valid());
  CHECK(Order::infinite().valid());
}

TEST_CASE("adjacency in clopen boxes") {
  const GraphInstance g = box_graph({{Prefix{0}, Prefix{1}}});
  CHECK(adjacent(g, vp({0, 7}, 0), vp({1}, 3)));
  CHECK_FALSE(adjacent(g, vp({2}, 0), vp({1}, 0)));
  CHECK(adjacent(g, vp({2}, 0), vp({2}, 0)));  // diagonal, always
  // Symmetry.
  CHECK(adjacent(g, vp({1}, 3), vp({0, 7}, 0)));
}

TEST_CASE("adjacency in finite explicit graphs") {
  const GraphInstance g = gptest::abc_graph({{"a", "b"}}, Order::infinite(), Order::infinite(),
                                            Order::infinite());
  CHECK(adjacent(g, cv(0), cv(1)));
  CHECK(adjacent(g, cv(1), cv(0)));
  CHECK_FALSE(adjacent(g, cv(0), cv(2)));
  CHECK(adjacent(g, cv(2), cv(2)));
  CHECK(adjacent(g, cv(9), cv(9)));  // unnamed but diagonal
  CHECK_THROWS_AS(adjacent(g, cv(9), cv(0)), UnknownVertexError);
}

TEST_CASE("edges at depth") {
  const GraphInstance g = box_graph({{Prefix{0}, Prefix{1}}});
  CHECK(edge_at_depth(g, Prefix{0, 4}, Prefix{1, 9}));
  CHECK_FALSE(edge_at_depth(g, Prefix{2}, Prefix{1}));
  CHECK(edge_at_depth(g, Prefix{2, 2}, Prefix{2, 2}));  // diagonal
  CHECK_THROWS_AS(edge_at_depth(g, Prefix{0}, Prefix{0, 0}), PreconditionError);
  CHECK_THROWS_AS(edge_at_depth(g, Prefix{}, Prefix{}), PreconditionError);

  const GraphInstance fe = gptest::abc_graph({{"a", "b"}}, Order::infinite(), Order::infinite(),
                                             Order::infinite());
  CHECK(edge_at_depth(fe, Prefix{0}, Prefix{1}));
  CHECK(edge_at_depth(fe, Prefix{0, 0, 0}, Prefix{1, 1, 1}));
  CHECK_FALSE(edge_at_depth(fe, Prefix{0}, Prefix{2}));
}

TEST_CASE("nonadjacency depth") {
  const GraphInstance g1 = box_graph({{Prefix{0}, Prefix{1}}});
  CHECK(nonadjacency_depth(g1, vp({0}, 0), vp({2}, 0)) == 1);

  // Truncations sit inside E_1 through the diagonal, then separate at 2.
  const GraphInstance g2 = box_graph({{Prefix{0, 0}, Prefix{0, 1}}});
  const VertexPath u = vp({0, 0}, 0);
  const VertexPath v = vp({0, 2}, 0);
  CHECK_FALSE(adjacent(g2, u, v));
  CHECK(edge_at_depth(g2, truncate(u, 1), truncate(v, 1)));
  CHECK(nonadjacency_depth(g2, u, v) == 2);

  const GraphInstance g3 = gptest::abc_graph({}, Order::infinite(), Order::infinite(),
                                             Order::infinite());
  CHECK(nonadjacency_depth(g3, cv(0), cv(1)) == 1);

  CHECK_THROWS_AS(nonadjacency_depth(g1, vp({0}, 0), vp({1}, 0)), PreconditionError);
}

TEST_CASE("validation reports") {
  GraphInstance g = gptest::abc_graph({{"a", "b"}}, Order::finite(6), Order::infinite(),
                                      Order::infinite());
  auto violations = validate(g);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].message.find("6") != std::string::npos);

  GraphInstance asym = gptest::abc_graph({}, Order::infinite(), Order::infinite(),
                                         Order::infinite());
  std::get<FiniteExplicit>(asym.oracle).edges.emplace_back("a", "b");  // reverse missing
  violations = validate(asym);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].where == "oracle.edges");

  GraphInstance dup = gptest::abc_graph({}, Order::infinite(), Order::infinite(),
                                        Order::infinite());
  std::get<FiniteExplicit>(dup.oracle).vertices["d"] = cv(0);  // collides with a
  CHECK_FALSE(validate(dup).empty());

  GraphInstance unknown = gptest::abc_graph({}, Order::infinite(), Order::infinite(),
                                            Order::infinite());
  std::get<FiniteExplicit>(unknown.oracle).edges.emplace_back("a", "zz");
  CHECK_FALSE(validate(unknown).empty());

  const GraphInstance ok = gptest::abc_graph({{"a", "c"}}, Order::finite(4), Order::finite(9),
                                             Order::infinite());
  CHECK(validate(ok).empty());
}

TEST_CASE("fixtures") {
  const Fixture free = fixture_free(2, Order::infinite());
  CHECK(free.graph.boxes() != nullptr);
  CHECK(free.graph.boxes()->boxes.empty());
  CHECK_FALSE(adjacent(free.graph, cv(0), cv(1)));
  CHECK(validate(free.graph).empty());

  const Fixture klein = fixture_complete({Order::finite(2), Order::finite(2)});
  CHECK(adjacent(klein.graph, cv(0), cv(1)));
  CHECK(klein.graph.coloring.order_of(cv(0)).value() == 2);
  CHECK(klein.graph.coloring.order_of(cv(1)).value() == 2);

  const Fixture half = fixture_half_graph(4, Order::infinite());
  const auto& fe = *half.graph.finite();
  CHECK(fe.vertices.size() == 8);
  for (uint32_t i = 0; i < 4; ++i) {
    for (uint32_t j = 0; j < 4; ++j) {
      const VertexPath& ai = fe.vertices.at("a" + std::to_string(i));
      const VertexPath& bj = fe.vertices.at("b" + std::to_string(j));
      CHECK(adjacent(half.graph, ai, bj) == (i < j));
    }
  }
  CHECK(validate(half.graph).empty());

  // Same seed, same instance; different seed, different name at least.
  const Fixture r1 = fixture_random_clopen(5, 4, 4);
  const Fixture r2 = fixture_random_clopen(5, 4, 4);
  CHECK(r1.graph.boxes()->boxes == r2.graph.boxes()->boxes);
  CHECK(validate(r1.graph).empty());
  CHECK_FALSE(r1.sample_vertices.empty());

  CHECK_THROWS_AS(make_fixture("nope", FixtureOptions{}), PreconditionError);
  CHECK_THROWS_AS(fixture_free(0, Order::infinite()), PreconditionError);
}

TEST_CASE("edge relation projects down one depth") {
  for (uint64_t seed : {31ull, 32ull}) {
    const Fixture f = fixture_random_clopen(seed, 4, 4);
    for (uint32_t len = 2; len <= 4; ++len) {
      // Exhaust prefixes over {0,1,2}.
      std::vector<Prefix> level{Prefix{}};
      for (uint32_t i = 0; i < len; ++i) {
        std::vector<Prefix> next;
        for (const Prefix& p : level) {
          for (uint32_t x = 0; x < 3; ++x) {
            Prefix q = p;
            q.push_back(x);
            next.push_back(std::move(q));
          }
        }
        level = std::move(next);
      }
      for (const Prefix& a : level) {
        for (const Prefix& b : level) {
          if (!edge_at_depth(f.graph, a, b)) continue;
          const Prefix a0(a.begin(), a.end() - 1);
          const Prefix b0(b.begin(), b.end() - 1);
          CHECK(edge_at_depth(f.graph, a0, b0));
        }
      }
    }
  }
}
