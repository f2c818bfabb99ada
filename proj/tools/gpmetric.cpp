// Command-line surface: load graph/word/metric files, reduce words, compute
// norms and distances, run the embedding pipeline, and execute the seeded
// property suites.
//
// Exit codes: 0 success, 1 property violation, 2 input/validation error,
// 3 oracle-resolution error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gp/embed.hpp"
#include "gp/errors.hpp"
#include "gp/fixtures.hpp"
#include "gp/io.hpp"
#include "gp/oracle.hpp"
#include "gp/suites.hpp"
#include "gp/ultranorm.hpp"
#include "gp/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitOracle = 3;

struct Options {
  std::string graph_path;
  std::vector<std::string> word_paths;
  std::string metric_path;
  std::string out_path;
  std::string suite;
  std::string kind;
  std::string format = "human";
  uint32_t samples = 0;
  uint64_t seed = 42;
  uint32_t depth = 0;
  uint32_t max_len = 8;
  uint32_t count = 2;
  uint32_t boxes = 4;
  std::vector<std::string> orders;
};

bool structured(const Options& o) { return o.format == "structured"; }

// Word rendering for humans: generator names when the oracle names them,
// paths otherwise.
std::string human_word(const gp::Word& w, const gp::GraphInstance& g) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    const std::string* name = g.finite() ? g.finite()->name_of(w[i].vertex) : nullptr;
    out += name ? *name : w[i].vertex.str();
    out += "^";
    out += std::to_string(w[i].exponent);
  }
  return out;
}

gp::Word load_word(const std::string& path, const gp::GraphInstance& g) {
  return gp::make_word(gp::load_word_file(path), g);
}

int cmd_reduce(const Options& o) {
  const gp::GraphInstance g = gp::load_graph_file(o.graph_path);
  const gp::Word w = load_word(o.word_paths.at(0), g);
  const gp::NormalForm c = gp::canonical(w, g);
  if (structured(o)) {
    gp::Json rec;
    rec["command"] = "reduce";
    rec["canonical"] = gp::to_json(c.word);
    rec["syllables"] = c.word.size();
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << human_word(c.word, g) << "\n";
  }
  if (!o.out_path.empty()) gp::write_json_file(o.out_path, gp::to_json(c.word));
  return kExitOk;
}

int cmd_norm(const Options& o) {
  const gp::GraphInstance g = gp::load_graph_file(o.graph_path);
  const gp::Word w = load_word(o.word_paths.at(0), g);
  const gp::NormResult n = gp::ultranorm(w, g);
  if (structured(o)) {
    gp::Json rec;
    rec["command"] = "norm";
    rec["value"] = gp::to_json(n.value);
    if (n.depth) rec["depth"] = *n.depth;
    rec["certificate"] = gp::to_json(n.certificate);
    std::cout << rec.dump() << "\n";
  } else if (n.is_identity()) {
    std::cout << "d(g) = 0 (identity)\n";
  } else {
    std::cout << "d(g) = " << n.value.str() << " = " << n.value.decimal() << "  (n(g) = " << *n.depth
              << ", certificate " << gp::str(n.certificate) << ")\n";
  }
  return kExitOk;
}

int cmd_dist(const Options& o) {
  const gp::GraphInstance g = gp::load_graph_file(o.graph_path);
  const gp::Word w1 = load_word(o.word_paths.at(0), g);
  const gp::Word w2 = load_word(o.word_paths.at(1), g);
  const gp::UltraValue d = gp::distance(w1, w2, g);
  const gp::Rational dd = gp::two_sided(w1, w2, g);
  if (structured(o)) {
    gp::Json rec;
    rec["command"] = "dist";
    rec["distance"] = gp::to_json(d);
    rec["two_sided"] = dd.str();
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "d = " << d.str() << " = " << d.decimal() << "\n";
    std::cout << "D = " << dd.str() << (dd.decimal() ? " = " + *dd.decimal() : "") << "\n";
  }
  return kExitOk;
}

int cmd_embed(const Options& o) {
  const gp::MetricGraphInstance inst = gp::load_metric_file(o.metric_path);
  const gp::LemmaReport report = gp::verify_lemma(inst);
  for (const auto& clause : report.clauses) {
    if (structured(o)) {
      gp::Json rec;
      rec["command"] = "embed";
      rec["clause"] = clause.name;
      rec["pass"] = clause.passed;
      if (!clause.detail.empty()) rec["detail"] = clause.detail;
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << (clause.passed ? "PASS " : "FAIL ") << clause.name
                << (clause.detail.empty() ? "" : "  (" + clause.detail + ")") << "\n";
    }
  }
  if (!report.all_passed()) return kExitViolation;
  const gp::GraphInstance image = gp::to_graph_instance(inst);
  if (!o.out_path.empty()) {
    gp::write_json_file(o.out_path, gp::to_json(image));
    if (!structured(o))
      std::cout << "wrote " << image.finite()->vertices.size() << "-vertex graph to " << o.out_path
                << "\n";
  }
  return kExitOk;
}

int cmd_oracle_compare(const Options& o) {
  const gp::GraphInstance g = gp::load_graph_file(o.graph_path);
  const gp::Word w1 = load_word(o.word_paths.at(0), g);
  const gp::Word w2 = load_word(o.word_paths.at(1), g);
  const bool via_words = gp::equal(w1, w2, g);
  const bool via_oracle = gp::oracle_equal(w1, w2, g, o.max_len);
  if (structured(o)) {
    gp::Json rec;
    rec["command"] = "oracle-compare";
    rec["words_equal"] = via_words;
    rec["oracle_equal"] = via_oracle;
    rec["agree"] = via_words == via_oracle;
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "words.equal:  " << (via_words ? "true" : "false") << "\n"
              << "oracle_equal: " << (via_oracle ? "true" : "false") << "\n";
  }
  return via_words == via_oracle ? kExitOk : kExitViolation;
}

int cmd_fixture(const Options& o) {
  gp::FixtureOptions fo;
  fo.count = o.count;
  fo.seed = o.seed;
  fo.depth = o.depth ? o.depth : 4;
  fo.boxes = o.boxes;
  for (const auto& s : o.orders) fo.orders.push_back(gp::Order::parse(s));
  const gp::Fixture f = gp::make_fixture(o.kind, fo);
  if (o.out_path.empty()) throw gp::PreconditionError("fixture: --out is required");
  gp::write_json_file(o.out_path, gp::to_json(f.graph));
  if (structured(o)) {
    gp::Json rec;
    rec["command"] = "fixture";
    rec["name"] = f.name;
    rec["out"] = o.out_path;
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "wrote fixture " << f.name << " to " << o.out_path << "\n";
  }
  return kExitOk;
}

int report_suite(const gp::SuiteResult& result, const Options& o) {
  if (structured(o)) {
    gp::Json rec;
    rec["command"] = "check";
    rec["suite"] = result.suite;
    rec["pass"] = result.passed;
    rec["checks"] = result.checks;
    rec["violations"] = result.violations;
    rec["summary"] = result.summary;
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << (result.passed ? "PASS " : "FAIL ") << result.suite << "  (" << result.summary
              << ")\n";
    for (const auto& v : result.violations) std::cout << "  counterexample: " << v << "\n";
  }
  return result.passed ? kExitOk : kExitViolation;
}

int cmd_check(const Options& o) {
  gp::SuiteParams params;
  params.seed = o.seed;
  params.samples = o.samples;
  params.depth = o.depth;
  params.max_len = o.max_len == 8 ? 0 : o.max_len;
  if (o.suite == "all") {
    int worst = kExitOk;
    for (const auto& [name, description] : gp::suite_catalog())
      worst = std::max(worst, report_suite(gp::run_suite(name, params), o));
    return worst;
  }
  if (!gp::is_suite(o.suite)) {
    std::cerr << "unknown suite '" << o.suite << "'; available:\n";
    for (const auto& [name, description] : gp::suite_catalog())
      std::cerr << "  " << name << " — " << description << "\n";
    return kExitInput;
  }
  return report_suite(gp::run_suite(o.suite, params), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph products of cyclic groups over Baire-space vertex sets"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "human or structured")
        ->check(CLI::IsMember({"human", "structured"}));
  };

  auto* reduce = app.add_subcommand("reduce", "print the canonical form of a word");
  reduce->add_option("--graph", o.graph_path, "graph instance file")->required();
  reduce->add_option("--word", o.word_paths, "word file")->required()->expected(1);
  reduce->add_option("--out", o.out_path, "also write the canonical word as JSON");
  add_format(reduce);

  auto* norm = app.add_subcommand("norm", "ultranorm d(g) of a word");
  norm->add_option("--graph", o.graph_path, "graph instance file")->required();
  norm->add_option("--word", o.word_paths, "word file")->required()->expected(1);
  add_format(norm);

  auto* dist = app.add_subcommand("dist", "distance between two words");
  dist->add_option("--graph", o.graph_path, "graph instance file")->required();
  dist->add_option("--word", o.word_paths, "word files (exactly two)")->required()->expected(2);
  add_format(dist);

  auto* embed = app.add_subcommand("embed", "verify a metric instance and emit its graph");
  embed->add_option("--metric", o.metric_path, "metric instance file")->required();
  embed->add_option("--out", o.out_path, "output graph instance file");
  add_format(embed);

  auto* oracle = app.add_subcommand("oracle-compare", "word problem via rewriting and via closure");
  oracle->add_option("--graph", o.graph_path, "graph instance file")->required();
  oracle->add_option("--word", o.word_paths, "word files (exactly two)")->required()->expected(2);
  oracle->add_option("--max-len", o.max_len, "closure length bound (default 8)");
  add_format(oracle);

  auto* fixture = app.add_subcommand("fixture", "write a deterministic graph instance");
  fixture->add_option("--kind", o.kind, "free | complete | half-graph | random-clopen")->required();
  fixture->add_option("--count", o.count, "vertex count / half-graph size");
  fixture->add_option("--order", o.orders, "generator order(s), e.g. inf, 2, 3, 2^3");
  fixture->add_option("--seed", o.seed, "seed for random-clopen");
  fixture->add_option("--depth", o.depth, "max prefix depth for random-clopen");
  fixture->add_option("--boxes", o.boxes, "box count bound for random-clopen");
  fixture->add_option("--out", o.out_path, "output file")->required();
  add_format(fixture);

  auto* check = app.add_subcommand("check", "run a property suite");
  check->add_option("--suite", o.suite, "suite name or 'all'")->required();
  check->add_option("--samples", o.samples, "sample count override");
  check->add_option("--seed", o.seed, "suite seed (default 42)");
  check->add_option("--depth", o.depth, "depth override");
  check->add_option("--max-len", o.max_len, "oracle length bound override");
  add_format(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*reduce) return cmd_reduce(o);
    if (*norm) return cmd_norm(o);
    if (*dist) return cmd_dist(o);
    if (*embed) return cmd_embed(o);
    if (*oracle) return cmd_oracle_compare(o);
    if (*fixture) return cmd_fixture(o);
    if (*check) return cmd_check(o);
  } catch (const gp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gp::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gp::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gp::UndefinedMeetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gp::UnknownVertexError& e) {
    std::cerr << "oracle error: " << e.what() << "\n";
    return kExitOracle;
  } catch (const gp::BoundTooSmallError& e) {
    std::cerr << "oracle error: " << e.what() << "\n";
    return kExitOracle;
  } catch (const gp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOracle;
  }
  return kExitInput;
}
