#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gp/baire.hpp"
#include "gp/embed.hpp"
#include "gp/graphspec.hpp"
#include "gp/ultranorm.hpp"
#include "gp/words.hpp"

namespace gp {

// Field order is part of the structured-output contract, so everything goes
// through ordered_json.
using Json = nlohmann::ordered_json;

Json to_json(const Prefix& p);
Prefix prefix_from_json(const Json& j);

Json to_json(const VertexPath& v);
VertexPath vertex_path_from_json(const Json& j);  // canonicalizes on load

Json to_json(const UltraValue& v);  // {"kind":"zero"} or {"kind":"exp","n":k} plus decimal

Json to_json(const GraphInstance& g);
GraphInstance graph_from_json(const Json& j);  // structural parse, no validation

Json to_json(const Word& w);
Json to_json(const TruncatedWord& w);
std::vector<std::pair<VertexPath, long long>> word_pairs_from_json(const Json& j);

Json to_json(const MetricGraphInstance& inst);
MetricGraphInstance metric_from_json(const Json& j);

// File helpers. Loaders parse then validate and throw ValidationError with
// the collected violations.
GraphInstance load_graph_file(const std::string& path);
std::vector<std::pair<VertexPath, long long>> load_word_file(const std::string& path);
MetricGraphInstance load_metric_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace gp
