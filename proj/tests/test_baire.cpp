#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gp/baire.hpp"
#include "gp/errors.hpp"
#include "gp/rng.hpp"
#include "gp/ultranorm.hpp"
#include "test_util.hpp"

using namespace gp;
using gptest::cv;
using gptest::vp;

TEST_CASE("canonical representation") {
  CHECK(vp({3, 3}, 3) == cv(3));
  CHECK(vp({0, 1, 2, 2}, 2) == vp({0, 1}, 2));
  CHECK(vp({0, 1}, 2).prefix() == Prefix{0, 1});
  CHECK(cv(5).prefix().empty());
  CHECK(vp({0, 1}, 2) != vp({0, 1}, 3));
}

TEST_CASE("truncate") {
  CHECK(truncate(vp({0, 1}, 2), 4) == Prefix{0, 1, 2, 2});
  CHECK(truncate(cv(9), 0) == Prefix{});
  CHECK(truncate(cv(5), 3) == Prefix{5, 5, 5});
}

TEST_CASE("meet_length") {
  CHECK(meet_length(vp({0, 1, 2}, 0), vp({0, 1, 5}, 0)) == 2);
  CHECK(meet_length(cv(0), vp({1}, 0)) == 0);
  CHECK_THROWS_AS(meet_length(vp({3, 3}, 3), cv(3)), UndefinedMeetError);
  // The meet is where truncations stop agreeing.
  const VertexPath u = vp({4, 7, 1}, 0);
  const VertexPath v = vp({4, 7}, 2);
  const size_t lg = meet_length(u, v);
  CHECK(truncate(u, lg) == truncate(v, lg));
  CHECK(truncate(u, lg + 1) != truncate(v, lg + 1));
}

TEST_CASE("vertex order is length-lex on encodings") {
  CHECK(cv(0) < cv(1));
  CHECK(cv(9) < vp({0, 1}, 0));       // shorter encoding first
  CHECK(vp({0, 1}, 0) < vp({0, 2}, 0));
  CHECK(vp({0, 1}, 0) < vp({0, 1}, 5));
  std::vector<VertexPath> sorted{cv(2), vp({0, 1}, 0), cv(0)};
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted.front() == cv(0));
  CHECK(sorted.back() == vp({0, 1}, 0));
}

TEST_CASE("ultra value ordering and rendering") {
  CHECK(UltraValue::zero() < UltraValue::exp(5));
  CHECK(UltraValue::exp(5) < UltraValue::exp(2));
  CHECK(UltraValue::exp(2) == UltraValue::exp(2));
  CHECK(UltraValue::exp(2).to_rational() == Rational(1, 4));
  CHECK(UltraValue::zero().to_rational() == Rational(0));
  CHECK(UltraValue::exp(1).decimal() == "0.5");
  CHECK(UltraValue::exp(2).decimal() == "0.25");
  CHECK(UltraValue::zero().decimal() == "0");
  CHECK_THROWS_AS(UltraValue::exp(0), PreconditionError);
  CHECK_THROWS_AS(UltraValue::zero().exponent(), PreconditionError);
  CHECK_THROWS_AS(UltraValue::exp(63).to_rational(), InternalError);
}

TEST_CASE("baire distance basics") {
  CHECK(baire_distance(cv(3), cv(3)) == UltraValue::zero());
  CHECK(baire_distance(vp({0, 1}, 0), vp({0, 2}, 0)) == UltraValue::exp(2));
  CHECK(baire_distance(cv(0), cv(1)) == UltraValue::exp(1));
}

// The values 2^{-(lg+1)} must coincide with the group ultranorm of u^{-1} v
// over the edge-free graph on the whole space; this pins the metric
// convention against an independent computation.
TEST_CASE("baire distance matches the edge-free group distance") {
  const GraphInstance g = gptest::free_graph();
  const std::vector<VertexPath> pts{cv(0),           cv(1),          vp({0, 1}, 0),
                                    vp({0, 2}, 0),   vp({0, 1}, 2),  vp({1, 0, 0, 5}, 1),
                                    vp({1, 0, 0}, 1)};
  for (const auto& u : pts) {
    for (const auto& v : pts) {
      const UltraValue lhs = baire_distance(u, v);
      const UltraValue rhs =
          distance(gptest::w(g, {{u, 1}}), gptest::w(g, {{v, 1}}), g);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("ultrametric tree property on sampled triples") {
  Rng rng(7);
  auto random_path = [&rng] {
    Prefix p(rng.below(5));
    for (auto& x : p) x = static_cast<uint32_t>(rng.below(3));
    return VertexPath(std::move(p), static_cast<uint32_t>(rng.below(3)));
  };
  for (int t = 0; t < 2000; ++t) {
    const VertexPath u = random_path();
    const VertexPath v = random_path();
    const VertexPath x = random_path();
    if (u == v || v == x || u == x) continue;
    CHECK(meet_length(u, x) >= std::min(meet_length(u, v), meet_length(v, x)));
    // Strong triangle inequality for the induced distance.
    CHECK(baire_distance(u, x) <= std::max(baire_distance(u, v), baire_distance(v, x)));
    // Order compatibility.
    CHECK((baire_distance(u, v) <= baire_distance(u, x)) ==
          (meet_length(u, v) >= meet_length(u, x)));
  }
}
