#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gp/baire.hpp"

namespace gp {

bool is_prime_power(uint32_t m);

/// Generator order: infinite, or a finite value which must be a prime power
/// to be valid. Kept as a distinct variant, never as a sentinel number.
class Order {
 public:
  static Order infinite() { return Order{}; }
  // m >= 1; validity as a prime power is checked separately by valid().
  static Order finite(uint32_t m);
  static Order parse(std::string_view text);

  bool is_infinite() const { return !m_.has_value(); }
  uint32_t value() const;
  bool valid() const { return is_infinite() || is_prime_power(*m_); }
  std::string str() const;

  friend bool operator==(const Order&, const Order&) = default;

 private:
  std::optional<uint32_t> m_;
};

/// Vertex coloring; the order of a path depends only on its first value.
struct Coloring {
  std::map<uint32_t, Order> table;
  Order fallback = Order::infinite();

  const Order& order_at(uint32_t first) const {
    auto it = table.find(first);
    return it == table.end() ? fallback : it->second;
  }
  const Order& order_of(const VertexPath& v) const { return order_at(v.at(0)); }
};

/// Union of clopen boxes {(η,ν) : u ◁ η, v ◁ ν}, symmetrized, plus the
/// diagonal.
struct CloPenBoxes {
  std::vector<std::pair<Prefix, Prefix>> boxes;
};

/// Finitely many named vertices with an explicit symmetric edge list; the
/// relation is exactly those pairs plus the diagonal of the whole space.
struct FiniteExplicit {
  std::map<std::string, VertexPath> vertices;
  std::vector<std::pair<std::string, std::string>> edges;

  // Name of a canonical path, or nullptr when not named.
  const std::string* name_of(const VertexPath& v) const;
  bool has_edge(const std::string& a, const std::string& b) const;
};

struct GraphInstance {
  std::variant<CloPenBoxes, FiniteExplicit> oracle;
  Coloring coloring;

  const CloPenBoxes* boxes() const { return std::get_if<CloPenBoxes>(&oracle); }
  const FiniteExplicit* finite() const { return std::get_if<FiniteExplicit>(&oracle); }
};

/// Exact membership of {u, v} in the closed relation; always true on the
/// diagonal. FiniteExplicit raises UnknownVertexError for distinct unnamed
/// vertices.
bool adjacent(const GraphInstance& g, const VertexPath& u, const VertexPath& v);

/// (a, b) ∈ E_n for equal-length prefixes (n >= 1): some pair of the relation
/// extends both. Throws on length mismatch or empty prefixes.
bool edge_at_depth(const GraphInstance& g, const Prefix& a, const Prefix& b);

/// Least n >= 1 whose truncations fall outside E_n; requires the pair to be
/// non-adjacent. Finite for both oracle kinds.
uint32_t nonadjacency_depth(const GraphInstance& g, const VertexPath& u, const VertexPath& v);

struct Violation {
  std::string where;
  std::string message;
};

/// Structural check of coloring and oracle; empty report means valid.
std::vector<Violation> validate(const GraphInstance& g);

}  // namespace gp
