#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "gp/errors.hpp"
#include "gp/fixtures.hpp"
#include "gp/io.hpp"
#include "test_util.hpp"

using namespace gp;
using gptest::cv;
using gptest::vp;

TEST_CASE("vertex paths canonicalize on load") {
  const Json j = Json::parse(R"({"prefix":[3,3],"tail":3})");
  CHECK(vertex_path_from_json(j) == cv(3));
  const VertexPath v = vp({0, 1}, 2);
  CHECK(vertex_path_from_json(to_json(v)) == v);
  CHECK_THROWS_AS(vertex_path_from_json(Json::parse(R"({"prefix":[-1],"tail":0})")), ParseError);
  CHECK_THROWS_AS(vertex_path_from_json(Json::parse(R"({"tail":0})")), ParseError);
}

TEST_CASE("graph instances round trip") {
  for (const Fixture& f : acceptance_fixtures()) {
    const Json j = to_json(f.graph);
    const GraphInstance back = graph_from_json(j);
    CHECK(validate(back).empty());
    CHECK(to_json(back) == j);
    // Stable bytes for stable inputs.
    CHECK(j.dump() == to_json(f.graph).dump());
  }
}

TEST_CASE("graph parse errors") {
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(
                      R"({"coloring":{"table":{},"default":"inf"},"oracle":{"kind":"mystery"}})")),
                  ParseError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(
                      R"({"coloring":{"table":{"x":"2"},"default":"inf"},
                          "oracle":{"kind":"clopen_boxes","boxes":[]}})")),
                  ParseError);
}

TEST_CASE("orders in files") {
  const Json j = Json::parse(
      R"({"coloring":{"table":{"0":"2^3","1":"inf"},"default":"5"},
          "oracle":{"kind":"clopen_boxes","boxes":[[[0],[1]]]}})");
  const GraphInstance g = graph_from_json(j);
  CHECK(g.coloring.order_at(0).value() == 8);
  CHECK(g.coloring.order_at(1).is_infinite());
  CHECK(g.coloring.order_at(7).value() == 5);
  CHECK(to_json(g)["coloring"]["table"]["0"] == "8");
}

TEST_CASE("words round trip") {
  const GraphInstance g = gptest::free_graph();
  const Word w = gptest::w(g, {{vp({0, 1}, 0), 2}, {cv(3), -1}});
  const auto raw = word_pairs_from_json(to_json(w));
  CHECK(make_word(raw, g) == w);
  CHECK_THROWS_AS(word_pairs_from_json(Json::parse(R"([[{"prefix":[],"tail":0},0]])")), ParseError);
  CHECK_THROWS_AS(word_pairs_from_json(Json::parse(R"([["x",1]])")), ParseError);
}

TEST_CASE("ultravalue rendering") {
  const Json zero = to_json(UltraValue::zero());
  CHECK(zero["kind"] == "zero");
  CHECK(zero["decimal"] == "0");
  const Json quarter = to_json(UltraValue::exp(2));
  CHECK(quarter["kind"] == "exp");
  CHECK(quarter["n"] == 2);
  CHECK(quarter["decimal"] == "0.25");
}

TEST_CASE("metric instances round trip") {
  for (const auto& inst : embed_corpus()) {
    if (inst.size() > 12) continue;
    const Json j = to_json(inst);
    const MetricGraphInstance back = metric_from_json(j);
    CHECK(validate(back).empty());
    CHECK(to_json(back) == j);
  }
  CHECK_THROWS_AS(metric_from_json(Json::parse(R"({"points":[]})")), ParseError);
  CHECK_THROWS_AS(
      metric_from_json(Json::parse(
          R"({"points":["p"],"metric":[[0.5]],"colors":["2"],"edges":[[0,0]]})")),
      ParseError);
}

TEST_CASE("file helpers validate") {
  const std::string dir = "io_test_tmp";
  std::filesystem::create_directories(dir);
  const std::string good = dir + "/good.json";
  const std::string bad = dir + "/bad.json";
  write_json_file(good, to_json(fixture_half_graph(3, Order::infinite()).graph));
  CHECK(validate(load_graph_file(good)).empty());

  Json j = to_json(fixture_half_graph(3, Order::infinite()).graph);
  j["coloring"]["default"] = "6";  // not a prime power
  write_json_file(bad, j);
  CHECK_THROWS_AS(load_graph_file(bad), ValidationError);
  CHECK_THROWS_AS(load_graph_file(dir + "/missing.json"), ParseError);
  std::filesystem::remove_all(dir);
}
