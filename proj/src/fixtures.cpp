#include "gp/fixtures.hpp"

#include <algorithm>

#include "gp/errors.hpp"
#include "gp/rng.hpp"

namespace gp {

Fixture fixture_free(uint32_t count, Order order) {
  if (count == 0) throw PreconditionError("fixture free: count must be positive");
  Fixture f;
  f.name = "free-" + std::to_string(count) + "-" + order.str();
  f.graph.oracle = CloPenBoxes{};
  f.graph.coloring.fallback = order;
  for (uint32_t i = 0; i < count; ++i) f.sample_vertices.emplace_back(i);
  // Deeper paths sharing prefixes, for nontrivial meets.
  f.sample_vertices.emplace_back(Prefix{0, 1}, 0);
  f.sample_vertices.emplace_back(Prefix{0, 2}, 0);
  f.sample_vertices.emplace_back(Prefix{0, 1, 1}, 0);
  f.sample_vertices.emplace_back(Prefix{1, 0}, 1);
  return f;
}

Fixture fixture_complete(const std::vector<Order>& orders) {
  if (orders.empty()) throw PreconditionError("fixture complete: at least one order required");
  Fixture f;
  f.name = "complete-" + std::to_string(orders.size());
  f.graph.oracle = CloPenBoxes{{{Prefix{}, Prefix{}}}};  // one all-pairs box
  for (uint32_t i = 0; i < orders.size(); ++i) {
    f.graph.coloring.table[i] = orders[i];
    f.sample_vertices.emplace_back(i);
  }
  f.graph.coloring.fallback = orders.back();
  f.sample_vertices.emplace_back(Prefix{0, 1}, 0);
  f.sample_vertices.emplace_back(Prefix{1, 0}, 1);
  return f;
}

Fixture fixture_half_graph(uint32_t size, Order order) {
  if (size == 0) throw PreconditionError("fixture half-graph: size must be positive");
  Fixture f;
  f.name = "half-graph-" + std::to_string(size);
  FiniteExplicit fe;
  std::vector<std::string> a_names, b_names;
  for (uint32_t i = 0; i < size; ++i) {
    a_names.push_back("a" + std::to_string(i));
    b_names.push_back("b" + std::to_string(i));
    fe.vertices[a_names[i]] = VertexPath(Prefix(i, 0), 1);  // 0^i 1 1 1 ...
    fe.vertices[b_names[i]] = VertexPath(Prefix(i, 1), 0);  // 1^j 0 0 0 ...
  }
  for (uint32_t i = 0; i < size; ++i) {
    for (uint32_t j = 0; j < size; ++j) {
      if (i < j) {
        fe.edges.emplace_back(a_names[i], b_names[j]);
        fe.edges.emplace_back(b_names[j], a_names[i]);
      }
    }
  }
  f.graph.oracle = std::move(fe);
  f.graph.coloring.fallback = order;
  for (const auto& [name, path] : f.graph.finite()->vertices) f.sample_vertices.push_back(path);
  return f;
}

Fixture fixture_random_clopen(uint64_t seed, uint32_t max_depth, uint32_t max_boxes) {
  if (max_depth == 0 || max_boxes == 0)
    throw PreconditionError("fixture random-clopen: depth and box count must be positive");
  static const Order kOrders[] = {Order::infinite(), Order::finite(2), Order::finite(3),
                                  Order::finite(4),  Order::finite(5), Order::finite(8),
                                  Order::finite(9)};
  Rng rng(seed);
  Fixture f;
  f.name = "clopen-" + std::to_string(seed);
  CloPenBoxes cb;
  const uint32_t alphabet = 4;
  const size_t box_count = 2 + rng.below(max_boxes > 2 ? max_boxes - 1 : 1);
  for (size_t b = 0; b < box_count; ++b) {
    auto random_prefix = [&] {
      Prefix p(1 + rng.below(std::min<uint32_t>(max_depth, 3)));
      for (auto& x : p) x = static_cast<uint32_t>(rng.below(alphabet));
      return p;
    };
    cb.boxes.emplace_back(random_prefix(), random_prefix());
  }
  f.graph.oracle = std::move(cb);
  for (uint32_t first = 0; first < alphabet; ++first)
    f.graph.coloring.table[first] = kOrders[rng.below(std::size(kOrders))];
  f.graph.coloring.fallback = kOrders[rng.below(std::size(kOrders))];
  for (int i = 0; i < 10; ++i) {
    Prefix p(rng.below(max_depth + 1));
    for (auto& x : p) x = static_cast<uint32_t>(rng.below(alphabet));
    VertexPath v(std::move(p), static_cast<uint32_t>(rng.below(alphabet)));
    if (std::find(f.sample_vertices.begin(), f.sample_vertices.end(), v) == f.sample_vertices.end())
      f.sample_vertices.push_back(v);
  }
  return f;
}

Fixture make_fixture(const std::string& kind, const FixtureOptions& opts) {
  const Order fallback = opts.orders.empty() ? Order::infinite() : opts.orders.front();
  if (kind == "free") return fixture_free(opts.count, fallback);
  if (kind == "complete") {
    std::vector<Order> orders = opts.orders;
    if (orders.empty()) orders.assign(opts.count, Order::infinite());
    while (orders.size() < opts.count) orders.push_back(orders.back());
    return fixture_complete(orders);
  }
  if (kind == "half-graph") return fixture_half_graph(opts.count, fallback);
  if (kind == "random-clopen") return fixture_random_clopen(opts.seed, opts.depth, opts.boxes);
  throw PreconditionError("unknown fixture kind '" + kind +
                          "' (expected free, complete, half-graph, random-clopen)");
}

std::vector<Fixture> acceptance_fixtures() {
  std::vector<Fixture> out;
  out.push_back(fixture_free(4, Order::infinite()));
  out.push_back(fixture_complete({Order::finite(2), Order::finite(3), Order::finite(4), Order::infinite()}));
  out.push_back(fixture_half_graph(6, Order::infinite()));
  out.push_back(fixture_random_clopen(101, 6, 5));
  out.push_back(fixture_random_clopen(102, 6, 5));
  out.push_back(fixture_random_clopen(103, 6, 5));
  return out;
}

namespace {

MetricGraphInstance unit_instance(const std::string& label, size_t count,
                                  const std::vector<Order>& colors, bool complete) {
  MetricGraphInstance inst;
  inst.label = label;
  for (size_t i = 0; i < count; ++i) {
    inst.points.push_back("p" + std::to_string(i));
    inst.colors.push_back(colors[i % colors.size()]);
    inst.edges.emplace_back(i, i);
  }
  inst.metric.assign(count, std::vector<Rational>(count, Rational(1)));
  for (size_t i = 0; i < count; ++i) inst.metric[i][i] = Rational(0);
  if (complete) {
    for (size_t i = 0; i < count; ++i) {
      for (size_t j = 0; j < count; ++j) {
        if (i != j) inst.edges.emplace_back(i, j);
      }
    }
  }
  return inst;
}

MetricGraphInstance sum_radius_instance(const std::string& label, size_t count, uint64_t seed) {
  static const Order kOrders[] = {Order::infinite(), Order::finite(2), Order::finite(3),
                                  Order::finite(4),  Order::finite(5), Order::finite(7),
                                  Order::finite(8),  Order::finite(9), Order::finite(16),
                                  Order::finite(27)};
  Rng rng(seed);
  MetricGraphInstance inst;
  inst.label = label;
  std::vector<Rational> radius;
  for (size_t i = 0; i < count; ++i) {
    inst.points.push_back("p" + std::to_string(i));
    inst.colors.push_back(kOrders[rng.below(std::size(kOrders))]);
    radius.push_back(Rational(1 + static_cast<long long>(rng.below(40)), 20));
    inst.edges.emplace_back(i, i);
  }
  // d(i, j) = r_i + r_j is always a metric with positive distinct distances.
  inst.metric.assign(count, std::vector<Rational>(count));
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = 0; j < count; ++j) {
      if (i != j) inst.metric[i][j] = radius[i] + radius[j];
    }
  }
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = i + 1; j < count; ++j) {
      if (rng.below(10) < 3) {
        inst.edges.emplace_back(i, j);
        inst.edges.emplace_back(j, i);
      }
    }
  }
  return inst;
}

}  // namespace

std::vector<MetricGraphInstance> embed_corpus() {
  std::vector<MetricGraphInstance> out;

  {
    // Two points at 1/10 with colors 2, 2, joined: the image group is C2 ⊕ C2.
    MetricGraphInstance inst;
    inst.label = "two-point-tenth";
    inst.points = {"p0", "p1"};
    inst.metric = {{Rational(0), Rational(1, 10)}, {Rational(1, 10), Rational(0)}};
    inst.colors = {Order::finite(2), Order::finite(2)};
    inst.edges = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    out.push_back(std::move(inst));
  }
  {
    MetricGraphInstance inst;
    inst.label = "two-point-tenth-free";
    inst.points = {"p0", "p1"};
    inst.metric = {{Rational(0), Rational(1, 10)}, {Rational(1, 10), Rational(0)}};
    inst.colors = {Order::finite(2), Order::finite(3)};
    inst.edges = {{0, 0}, {1, 1}};
    out.push_back(std::move(inst));
  }

  out.push_back(unit_instance("edge-free-2", 2, {Order::infinite()}, false));
  out.push_back(unit_instance("edge-free-5", 5, {Order::infinite(), Order::finite(2)}, false));
  out.push_back(unit_instance("edge-free-9", 9,
                              {Order::finite(2), Order::finite(3), Order::finite(4)}, false));
  out.push_back(unit_instance("complete-3", 3, {Order::finite(2)}, true));
  out.push_back(unit_instance("complete-4", 4, {Order::finite(2), Order::finite(3)}, true));
  out.push_back(unit_instance("complete-8", 8, {Order::infinite(), Order::finite(2)}, true));

  {
    // Half graph on 4 + 4 points, unit distances, a-side C2 and b-side C3.
    MetricGraphInstance inst = unit_instance("half-graph-4", 8, {Order::finite(2)}, false);
    for (size_t i = 0; i < 4; ++i) {
      inst.points[i] = "a" + std::to_string(i);
      inst.points[4 + i] = "b" + std::to_string(i);
      inst.colors[i] = Order::finite(2);
      inst.colors[4 + i] = Order::finite(3);
    }
    for (size_t i = 0; i < 4; ++i) {
      for (size_t j = 0; j < 4; ++j) {
        if (i < j) {
          inst.edges.emplace_back(i, 4 + j);
          inst.edges.emplace_back(4 + j, i);
        }
      }
    }
    out.push_back(std::move(inst));
  }

  for (size_t count : {6, 12}) {
    MetricGraphInstance inst;
    inst.label = "chain-" + std::to_string(count);
    for (size_t i = 0; i < count; ++i) {
      inst.points.push_back("p" + std::to_string(i));
      inst.colors.push_back(i % 2 == 0 ? Order::finite(2) : Order::infinite());
      inst.edges.emplace_back(i, i);
    }
    inst.metric.assign(count, std::vector<Rational>(count));
    for (size_t i = 0; i < count; ++i) {
      for (size_t j = 0; j < count; ++j) {
        if (i != j)
          inst.metric[i][j] = Rational(static_cast<long long>(i > j ? i - j : j - i), 7);
      }
    }
    for (size_t i = 0; i + 1 < count; ++i) {
      inst.edges.emplace_back(i, i + 1);
      inst.edges.emplace_back(i + 1, i);
    }
    out.push_back(std::move(inst));
  }

  {
    // Two tight clusters far apart; deep shared eta prefixes inside clusters.
    MetricGraphInstance inst;
    inst.label = "two-clusters";
    const size_t count = 8;
    for (size_t i = 0; i < count; ++i) {
      inst.points.push_back("p" + std::to_string(i));
      inst.colors.push_back(i < 4 ? Order::finite(2) : Order::finite(3));
      inst.edges.emplace_back(i, i);
    }
    inst.metric.assign(count, std::vector<Rational>(count));
    for (size_t i = 0; i < count; ++i) {
      for (size_t j = 0; j < count; ++j) {
        if (i == j) continue;
        inst.metric[i][j] = (i < 4) == (j < 4) ? Rational(1, 100) : Rational(1);
      }
    }
    for (size_t i = 0; i < 4; ++i) {
      for (size_t j = 4; j < count; ++j) {
        if ((i + j) % 2 == 0) {
          inst.edges.emplace_back(i, j);
          inst.edges.emplace_back(j, i);
        }
      }
    }
    out.push_back(std::move(inst));
  }

  {
    // Every point a different color; neighbors joined.
    MetricGraphInstance inst;
    inst.label = "colorful-7";
    static const Order kColors[] = {Order::infinite(), Order::finite(2), Order::finite(3),
                                    Order::finite(4),  Order::finite(5), Order::finite(7),
                                    Order::finite(8)};
    const size_t count = 7;
    for (size_t i = 0; i < count; ++i) {
      inst.points.push_back("p" + std::to_string(i));
      inst.colors.push_back(kColors[i]);
      inst.edges.emplace_back(i, i);
    }
    inst.metric.assign(count, std::vector<Rational>(count));
    for (size_t i = 0; i < count; ++i) {
      for (size_t j = 0; j < count; ++j) {
        if (i != j)
          inst.metric[i][j] = Rational(static_cast<long long>(i + 1), 10) +
                              Rational(static_cast<long long>(j + 1), 10);
      }
    }
    for (size_t i = 0; i + 1 < count; ++i) {
      inst.edges.emplace_back(i, i + 1);
      inst.edges.emplace_back(i + 1, i);
    }
    out.push_back(std::move(inst));
  }

  {
    // Three far-apart points with a single edge; the lone non-edge pair gets
    // a clean ball at depth 1.
    MetricGraphInstance inst = unit_instance("far-non-edge-3", 3, {Order::infinite()}, false);
    inst.edges.emplace_back(0, 1);
    inst.edges.emplace_back(1, 0);
    out.push_back(std::move(inst));
  }

  {
    // Distances sitting exactly on the 1/4^n grid; the open balls of the
    // construction exclude them.
    MetricGraphInstance inst;
    inst.label = "quarter-boundary";
    inst.points = {"h", "x", "y"};
    inst.metric = {{Rational(0), Rational(1, 4), Rational(1, 4)},
                   {Rational(1, 4), Rational(0), Rational(1, 2)},
                   {Rational(1, 4), Rational(1, 2), Rational(0)}};
    inst.colors = {Order::finite(2), Order::finite(2), Order::finite(2)};
    inst.edges = {{0, 0}, {1, 1}, {2, 2}};
    out.push_back(std::move(inst));
  }

  size_t index = 0;
  for (size_t count : {3, 6, 10, 16, 24, 32}) {
    out.push_back(sum_radius_instance("sum-radius-" + std::to_string(count), count,
                                      900 + 7 * index++));
  }

  return out;
}

}  // namespace gp
