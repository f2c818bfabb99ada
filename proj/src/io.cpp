#include "gp/io.hpp"

#include <fstream>

#include "gp/errors.hpp"

namespace gp {

namespace {

uint32_t natural_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > UINT32_MAX)
    throw ParseError(std::string(what) + ": expected a natural number");
  return j.get<uint32_t>();
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(what) + ": missing field '" + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Prefix& p) {
  Json j = Json::array();
  for (uint32_t x : p) j.push_back(x);
  return j;
}

Prefix prefix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("prefix: expected an array of naturals");
  Prefix p;
  p.reserve(j.size());
  for (const auto& e : j) p.push_back(natural_from_json(e, "prefix entry"));
  return p;
}

Json to_json(const VertexPath& v) {
  Json j;
  j["prefix"] = to_json(v.prefix());
  j["tail"] = v.tail();
  return j;
}

VertexPath vertex_path_from_json(const Json& j) {
  Prefix p = prefix_from_json(field(j, "prefix", "vertex path"));
  const uint32_t tail = natural_from_json(field(j, "tail", "vertex path"), "vertex path tail");
  return VertexPath(std::move(p), tail);
}

Json to_json(const UltraValue& v) {
  Json j;
  if (v.is_zero()) {
    j["kind"] = "zero";
  } else {
    j["kind"] = "exp";
    j["n"] = v.exponent();
  }
  j["decimal"] = v.decimal();
  return j;
}

Json to_json(const GraphInstance& g) {
  Json coloring;
  Json table = Json::object();
  for (const auto& [first, o] : g.coloring.table) table[std::to_string(first)] = o.str();
  coloring["table"] = std::move(table);
  coloring["default"] = g.coloring.fallback.str();

  Json oracle;
  if (const auto* cb = g.boxes()) {
    oracle["kind"] = "clopen_boxes";
    Json boxes = Json::array();
    for (const auto& [p, q] : cb->boxes) boxes.push_back(Json::array({to_json(p), to_json(q)}));
    oracle["boxes"] = std::move(boxes);
  } else {
    const auto& fe = *g.finite();
    oracle["kind"] = "finite";
    Json vertices = Json::object();
    for (const auto& [name, path] : fe.vertices) vertices[name] = to_json(path);
    oracle["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (const auto& [s, t] : fe.edges) edges.push_back(Json::array({s, t}));
    oracle["edges"] = std::move(edges);
  }

  Json j;
  j["coloring"] = std::move(coloring);
  j["oracle"] = std::move(oracle);
  return j;
}

GraphInstance graph_from_json(const Json& j) {
  GraphInstance g;
  const Json& coloring = field(j, "coloring", "graph instance");
  const Json& table = field(coloring, "table", "coloring");
  if (!table.is_object()) throw ParseError("coloring.table: expected an object");
  for (const auto& [key, value] : table.items()) {
    uint32_t first = 0;
    try {
      size_t used = 0;
      const unsigned long parsed = std::stoul(key, &used);
      if (used != key.size() || parsed > UINT32_MAX) throw std::invalid_argument(key);
      first = static_cast<uint32_t>(parsed);
    } catch (const std::exception&) {
      throw ParseError("coloring.table: key '" + key + "' is not a natural number");
    }
    if (!value.is_string()) throw ParseError("coloring.table: order must be a string");
    g.coloring.table[first] = Order::parse(value.get<std::string>());
  }
  const Json& fallback = field(coloring, "default", "coloring");
  if (!fallback.is_string()) throw ParseError("coloring.default: order must be a string");
  g.coloring.fallback = Order::parse(fallback.get<std::string>());

  const Json& oracle = field(j, "oracle", "graph instance");
  const Json& kind = field(oracle, "kind", "oracle");
  if (kind == "clopen_boxes") {
    CloPenBoxes cb;
    const Json& boxes = field(oracle, "boxes", "oracle");
    if (!boxes.is_array()) throw ParseError("oracle.boxes: expected an array");
    for (const auto& box : boxes) {
      if (!box.is_array() || box.size() != 2) throw ParseError("oracle.boxes: each box is a pair of prefixes");
      cb.boxes.emplace_back(prefix_from_json(box[0]), prefix_from_json(box[1]));
    }
    g.oracle = std::move(cb);
  } else if (kind == "finite") {
    FiniteExplicit fe;
    const Json& vertices = field(oracle, "vertices", "oracle");
    if (!vertices.is_object()) throw ParseError("oracle.vertices: expected an object");
    for (const auto& [name, path] : vertices.items()) fe.vertices[name] = vertex_path_from_json(path);
    const Json& edges = field(oracle, "edges", "oracle");
    if (!edges.is_array()) throw ParseError("oracle.edges: expected an array");
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw ParseError("oracle.edges: each edge is a pair of names");
      fe.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    g.oracle = std::move(fe);
  } else {
    throw ParseError("oracle.kind: expected 'clopen_boxes' or 'finite'");
  }
  return g;
}

namespace {

template <class W>
Json word_to_json(const W& w) {
  Json j = Json::array();
  for (const auto& s : w) j.push_back(Json::array({to_json(s.vertex), s.exponent}));
  return j;
}

}  // namespace

Json to_json(const Word& w) { return word_to_json(w); }
Json to_json(const TruncatedWord& w) { return word_to_json(w); }

std::vector<std::pair<VertexPath, long long>> word_pairs_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("word: expected an array of [vertex, exponent] pairs");
  std::vector<std::pair<VertexPath, long long>> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw ParseError("word: each entry is [vertex, exponent]");
    if (!e[1].is_number_integer()) throw ParseError("word: exponent must be an integer");
    const long long exp = e[1].get<long long>();
    if (exp == 0) throw ParseError("word: exponent must be nonzero");
    out.emplace_back(vertex_path_from_json(e[0]), exp);
  }
  return out;
}

Json to_json(const MetricGraphInstance& inst) {
  Json j;
  j["points"] = inst.points;
  Json metric = Json::array();
  for (const auto& row : inst.metric) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.str());
    metric.push_back(std::move(r));
  }
  j["metric"] = std::move(metric);
  Json colors = Json::array();
  for (const auto& o : inst.colors) colors.push_back(o.str());
  j["colors"] = std::move(colors);
  Json edges = Json::array();
  for (const auto& [a, b] : inst.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

MetricGraphInstance metric_from_json(const Json& j) {
  MetricGraphInstance inst;
  const Json& points = field(j, "points", "metric instance");
  if (!points.is_array()) throw ParseError("points: expected an array of names");
  for (const auto& p : points) {
    if (!p.is_string()) throw ParseError("points: names must be strings");
    inst.points.push_back(p.get<std::string>());
  }
  const Json& metric = field(j, "metric", "metric instance");
  if (!metric.is_array()) throw ParseError("metric: expected a matrix");
  for (const auto& row : metric) {
    if (!row.is_array()) throw ParseError("metric: expected a matrix of rationals");
    std::vector<Rational> r;
    for (const auto& v : row) {
      if (v.is_number_integer()) {
        r.push_back(Rational(v.get<long long>()));
      } else if (v.is_string()) {
        r.push_back(Rational::parse(v.get<std::string>()));
      } else {
        throw ParseError("metric: entries are rational strings like \"1/10\"");
      }
    }
    inst.metric.push_back(std::move(r));
  }
  const Json& colors = field(j, "colors", "metric instance");
  if (!colors.is_array()) throw ParseError("colors: expected an array");
  for (const auto& c : colors) {
    if (!c.is_string()) throw ParseError("colors: orders must be strings");
    inst.colors.push_back(Order::parse(c.get<std::string>()));
  }
  const Json& edges = field(j, "edges", "metric instance");
  if (!edges.is_array()) throw ParseError("edges: expected an array of index pairs");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edges: each entry is an index pair");
    inst.edges.emplace_back(natural_from_json(e[0], "edge index"), natural_from_json(e[1], "edge index"));
  }
  return inst;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

GraphInstance load_graph_file(const std::string& path) {
  GraphInstance g = graph_from_json(read_json_file(path));
  const auto violations = validate(g);
  if (!violations.empty()) {
    std::string msg = "'" + path + "' is not a valid graph instance:";
    for (const auto& v : violations) msg += "\n  " + v.where + ": " + v.message;
    throw ValidationError(msg);
  }
  return g;
}

std::vector<std::pair<VertexPath, long long>> load_word_file(const std::string& path) {
  return word_pairs_from_json(read_json_file(path));
}

MetricGraphInstance load_metric_file(const std::string& path) {
  MetricGraphInstance inst = metric_from_json(read_json_file(path));
  const auto violations = validate(inst);
  if (!violations.empty()) {
    std::string msg = "'" + path + "' is not a valid metric instance:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw ValidationError(msg);
  }
  return inst;
}

}  // namespace gp
