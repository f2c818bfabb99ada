#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gp/embed.hpp"
#include "gp/graphspec.hpp"

namespace gp {

/// A graph instance bundled with deterministic sample vertices for the
/// randomized suites. Finite-explicit fixtures sample only named vertices.
struct Fixture {
  std::string name;
  GraphInstance graph;
  std::vector<VertexPath> sample_vertices;
};

/// Edge-free relation on the whole space (free product); `count` sample
/// generators, all of the given order.
Fixture fixture_free(uint32_t count, Order order);

/// Complete relation (direct sum); one order per sampled generator, keyed by
/// first coordinate.
Fixture fixture_complete(const std::vector<Order>& orders);

/// Finite explicit half graph: a_i joined to b_j exactly when i < j. Paths
/// are 0^i 1^ω and 1^j 0^ω, so the two families interleave in the prefix
/// tree.
Fixture fixture_half_graph(uint32_t size, Order order);

/// Seeded clopen-box relation with a random coloring and random sample
/// vertices; prefixes bounded by max_depth, box count bounded by max_boxes.
Fixture fixture_random_clopen(uint64_t seed, uint32_t max_depth, uint32_t max_boxes);

struct FixtureOptions {
  uint32_t count = 2;
  std::vector<Order> orders;  // empty means all infinite
  uint64_t seed = 1;
  uint32_t depth = 4;
  uint32_t boxes = 4;
};

/// CLI-facing dispatcher; kinds: free, complete, half-graph, random-clopen.
Fixture make_fixture(const std::string& kind, const FixtureOptions& opts);

/// The fixture family the acceptance suites run over: free, complete,
/// half-graph(6) and three seeded clopen instances at depth 6.
std::vector<Fixture> acceptance_fixtures();

/// Deterministic corpus of 20+ finite metric instances (2–32 points) for the
/// embedding suites: the 1/10 two-point pair, unit edge-free/complete
/// extremes, the half-graph(4) metric, chains, clusters, and seeded random
/// sum-radius metrics.
std::vector<MetricGraphInstance> embed_corpus();

}  // namespace gp
