#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gp/baire.hpp"
#include "gp/graphspec.hpp"
#include "gp/rational.hpp"

namespace gp {

/// Finite enumerated metric space with a per-point order and a symmetric
/// reflexive edge list; the enumeration stands in for the well-ordered dense
/// set of the construction.
struct MetricGraphInstance {
  std::vector<std::string> points;
  std::vector<std::vector<Rational>> metric;
  std::vector<Order> colors;
  std::vector<std::pair<size_t, size_t>> edges;
  std::string label;  // in-memory only, not serialized

  size_t size() const { return points.size(); }
  bool has_edge(size_t a, size_t b) const;
};

/// Exhaustive structural check (metric axioms, symmetric reflexive edges,
/// valid orders); empty report means valid.
std::vector<std::string> validate(const MetricGraphInstance& inst);

/// Color code embedded into the first coordinate: infinite ↦ 0, p^k ↦ p^k.
/// Collision-free since 0 is never a prime power.
uint32_t color_code(const Order& o);

/// The path η_a: color code at 0, then at each n >= 1 the least point within
/// 1/4^n of a; eventually constant at index(a).
VertexPath eta_of(const MetricGraphInstance& inst, size_t a);

std::vector<VertexPath> eta_table(const MetricGraphInstance& inst);

/// The ultrametric d'(a, b) = 1 / (lg(η_a ∧ η_b) + 2), 0 on the diagonal.
Rational dprime(const MetricGraphInstance& inst, size_t a, size_t b);

/// Least-index point whose η extends nu, when one exists. Callers needing a
/// total assignment may fall back to point 0; nothing in this library does.
std::optional<size_t> dense_witness(const MetricGraphInstance& inst, const Prefix& nu);

/// η(0) when some point carries that color code, 1 otherwise.
uint32_t pstar(const MetricGraphInstance& inst, const VertexPath& eta);

/// Exhaustive verification of the construction on the instance:
///   ultrametric        — strong triangle inequality for d' on all triples
///   dense_witness      — prefix witnesses land within 1/(n+2)
///   edge_closedness    — every non-edge has a depth with clean d'-balls,
///                        including the 2/4^n pullback into the input metric
///   injectivity        — a ↦ η_a is one-to-one
///   color_preservation — pstar(η_a) equals the color code of a
///   pstar_coherence    — first coordinates agree iff pstar agrees, over the
///                        eta table
struct LemmaReport {
  struct Clause {
    std::string name;
    bool passed = true;
    std::string detail;
  };
  std::vector<Clause> clauses;
  // (a, b, n): least depth with clean balls around the non-edge (a, b).
  std::vector<std::tuple<size_t, size_t, uint32_t>> closedness_witnesses;

  bool all_passed() const;
  const Clause* find(const std::string& name) const;
};

LemmaReport verify_lemma(const MetricGraphInstance& inst);

/// Finite explicit graph instance on the η_a with the image edges and the
/// color-code coloring; requires verify_lemma to pass. Feeds the ultranorm.
GraphInstance to_graph_instance(const MetricGraphInstance& inst);

}  // namespace gp
