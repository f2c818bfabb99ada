#include "gp/suites.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>

#include "gp/embed.hpp"
#include "gp/errors.hpp"
#include "gp/fixtures.hpp"
#include "gp/oracle.hpp"
#include "gp/rng.hpp"
#include "gp/ultranorm.hpp"
#include "gp/words.hpp"

namespace gp {

void SuiteResult::fail(std::string message) {
  passed = false;
  if (violations.size() < 12) violations.push_back(std::move(message));
}

namespace {

Word random_word(Rng& rng, const Fixture& f, uint32_t max_syllables) {
  std::vector<std::pair<VertexPath, long long>> raw;
  const size_t len = rng.below(max_syllables + 1);
  for (size_t i = 0; i < len; ++i) {
    const VertexPath& v = f.sample_vertices[rng.below(f.sample_vertices.size())];
    long long e = rng.range(-3, 3);
    if (e == 0) e = 1;
    raw.emplace_back(v, e);
  }
  return make_word(raw, f.graph);
}

// ---------------------------------------------------------------------------
// Criterion 1: words.equal vs the letter oracle over the exhaustive corpus of
// 3-vertex graphs (8 edge subsets x orders {2,3,inf}^3) and all words of at
// most 4 syllables with exponents {1,2,-1,-2}.
//
// Checking every pair directly is equivalent to checking that the partition
// by canonical form coincides with the partition by the oracle's minimal
// letter form, which is what runs here; a seeded subsample additionally runs
// the literal closure-intersection oracle per pair.
// ---------------------------------------------------------------------------

GraphInstance three_vertex_graph(uint32_t edge_mask, const std::array<Order, 3>& orders) {
  static const char* kNames[3] = {"a", "b", "c"};
  FiniteExplicit fe;
  for (uint32_t i = 0; i < 3; ++i) fe.vertices[kNames[i]] = VertexPath(i);
  const std::pair<int, int> slots[3] = {{0, 1}, {0, 2}, {1, 2}};
  for (int s = 0; s < 3; ++s) {
    if (edge_mask & (1u << s)) {
      fe.edges.emplace_back(kNames[slots[s].first], kNames[slots[s].second]);
      fe.edges.emplace_back(kNames[slots[s].second], kNames[slots[s].first]);
    }
  }
  GraphInstance g;
  g.oracle = std::move(fe);
  for (uint32_t i = 0; i < 3; ++i) g.coloring.table[i] = orders[i];
  return g;
}

using RawWord = std::vector<std::pair<int, int>>;  // (vertex index, exponent)

void enumerate_raw_words(int prev, uint32_t remaining, RawWord& current,
                         std::vector<RawWord>& out) {
  out.push_back(current);
  if (remaining == 0) return;
  static const int kExps[4] = {1, 2, -1, -2};
  for (int v = 0; v < 3; ++v) {
    if (v == prev) continue;
    for (int e : kExps) {
      current.emplace_back(v, e);
      enumerate_raw_words(v, remaining - 1, current, out);
      current.pop_back();
    }
  }
}

SuiteResult suite_oracle_compare(const SuiteParams& params) {
  SuiteResult r;
  r.suite = "oracle-compare";
  const uint32_t spot_max_len = params.max_len ? params.max_len : 8;

  std::vector<RawWord> raws;
  RawWord scratch;
  enumerate_raw_words(-1, 4, scratch, raws);

  static const Order kOrderChoices[3] = {Order::finite(2), Order::finite(3), Order::infinite()};
  Rng rng(params.seed);
  uint64_t graph_index = 0;

  for (uint32_t edge_mask = 0; edge_mask < 8; ++edge_mask) {
    for (int o0 = 0; o0 < 3; ++o0) {
      for (int o1 = 0; o1 < 3; ++o1) {
        for (int o2 = 0; o2 < 3; ++o2, ++graph_index) {
          const GraphInstance g = three_vertex_graph(
              edge_mask, {kOrderChoices[o0], kOrderChoices[o1], kOrderChoices[o2]});
          const OracleContext oracle(g);

          std::vector<Word> words;
          words.reserve(raws.size());
          for (const auto& raw : raws) {
            std::vector<std::pair<VertexPath, long long>> pairs;
            pairs.reserve(raw.size());
            for (auto [v, e] : raw) pairs.emplace_back(VertexPath(static_cast<uint32_t>(v)), e);
            words.push_back(make_word(pairs, g));
          }

          // Partition agreement: same canonical form iff same oracle key.
          std::unordered_map<std::string, std::string> canon_to_oracle;
          std::unordered_map<std::string, std::string> oracle_to_canon;
          std::vector<std::string> canon_keys(words.size());
          for (size_t i = 0; i < words.size(); ++i) {
            const std::string ck = str(canonical(words[i], g).word);
            const std::string ok = str(oracle.min_form(oracle.expand(words[i])));
            canon_keys[i] = ck;
            auto [it1, fresh1] = canon_to_oracle.emplace(ck, ok);
            if (!fresh1 && it1->second != ok)
              r.fail("graph#" + std::to_string(graph_index) + ": canonical class '" + ck +
                     "' splits under the oracle ('" + it1->second + "' vs '" + ok + "')");
            auto [it2, fresh2] = oracle_to_canon.emplace(ok, ck);
            if (!fresh2 && it2->second != ck)
              r.fail("graph#" + std::to_string(graph_index) + ": oracle class '" + ok +
                     "' splits under words.equal ('" + it2->second + "' vs '" + ck + "')");
            ++r.checks;
          }

          // Literal closure-intersection oracle on short pairs.
          if (graph_index % 27 == 5) {
            std::vector<size_t> short_ids;
            for (size_t i = 0; i < raws.size(); ++i) {
              int letters = 0;
              for (auto [v, e] : raws[i]) letters += e < 0 ? -e : e;
              if (letters <= 3) short_ids.push_back(i);
            }
            for (int t = 0; t < 25; ++t) {
              const size_t i = short_ids[rng.below(short_ids.size())];
              const size_t j = short_ids[rng.below(short_ids.size())];
              const bool want = canon_keys[i] == canon_keys[j];
              const bool got =
                  oracle.equal(oracle.expand(words[i]), oracle.expand(words[j]), spot_max_len);
              if (want != got)
                r.fail("graph#" + std::to_string(graph_index) + ": oracle_equal(" + str(words[i]) +
                       ", " + str(words[j]) + ") = " + (got ? "true" : "false") +
                       " but words.equal says " + (want ? "true" : "false"));
              ++r.checks;
            }
          }
        }
      }
    }
  }
  r.summary = std::to_string(graph_index) + " graphs, " + std::to_string(raws.size()) +
              " words each, " + std::to_string(r.violations.size()) + " disagreements";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 2: ultranorm axioms on seeded random pairs per fixture.
// ---------------------------------------------------------------------------

SuiteResult suite_ultranorm_axioms(const SuiteParams& params) {
  SuiteResult r;
  r.suite = "ultranorm-axioms";
  const uint32_t samples = params.samples ? params.samples : 1000;
  for (const Fixture& f : acceptance_fixtures()) {
    Rng rng(params.seed ^ std::hash<std::string>{}(f.name));
    for (uint32_t i = 0; i < samples; ++i) {
      Word w1 = random_word(rng, f, 8);
      const Word w2 = random_word(rng, f, 8);
      if (i % 10 == 0) w1 = concat(w2, invert(w2, f.graph), f.graph);  // known identity

      const NormResult n1 = ultranorm(w1, f.graph);
      const NormResult n2 = ultranorm(w2, f.graph);
      const bool empty1 = canonical(w1, f.graph).word.empty();
      if (n1.value.is_zero() != empty1)
        r.fail(f.name + ": d(g)=0 mismatch with g=e for " + str(w1));
      const NormResult n12 = ultranorm(concat(w1, w2, f.graph), f.graph);
      if (n12.value > std::max(n1.value, n2.value))
        r.fail(f.name + ": d(gh) > max(d(g), d(h)) for " + str(w1) + " ; " + str(w2));
      if (!(ultranorm(invert(w1, f.graph), f.graph).value == n1.value))
        r.fail(f.name + ": d(g) != d(g^-1) for " + str(w1));
      r.checks += 3;
    }
  }
  r.summary = std::to_string(r.checks) + " axiom checks across " +
              std::to_string(acceptance_fixtures().size()) + " fixtures";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 3: left-invariance, both sides through canonical forms.
// ---------------------------------------------------------------------------

SuiteResult suite_left_invariance(const SuiteParams& params) {
  SuiteResult r;
  r.suite = "left-invariance";
  const uint32_t samples = params.samples ? params.samples : 500;
  for (const Fixture& f : acceptance_fixtures()) {
    Rng rng(params.seed ^ std::hash<std::string>{}("li:" + f.name));
    for (uint32_t i = 0; i < samples; ++i) {
      const Word k = random_word(rng, f, 6);
      const Word g = random_word(rng, f, 6);
      const Word h = random_word(rng, f, 6);
      const UltraValue lhs = distance(concat(k, g, f.graph), concat(k, h, f.graph), f.graph);
      const UltraValue rhs = distance(g, h, f.graph);
      if (!(lhs == rhs))
        r.fail(f.name + ": distance(kg,kh)=" + lhs.str() + " but distance(g,h)=" + rhs.str() +
               " for k=" + str(k) + " g=" + str(g) + " h=" + str(h));
      ++r.checks;
    }
  }
  r.summary = std::to_string(r.checks) + " triples";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 4: the group distance on generators extends the prefix metric.
// ---------------------------------------------------------------------------

SuiteResult suite_baire_extension(const SuiteParams& params) {
  SuiteResult r;
  r.suite = "baire-extension";
  const uint32_t samples = params.samples ? params.samples : 200;
  for (const Fixture& f : acceptance_fixtures()) {
    Rng rng(params.seed ^ std::hash<std::string>{}("be:" + f.name));
    for (uint32_t i = 0; i < samples; ++i) {
      const VertexPath& u = f.sample_vertices[rng.below(f.sample_vertices.size())];
      const VertexPath& v = f.sample_vertices[rng.below(f.sample_vertices.size())];
      const Word wu = make_word({{u, 1}}, f.graph);
      const Word wv = make_word({{v, 1}}, f.graph);
      const UltraValue got = distance(wu, wv, f.graph);
      const UltraValue want = baire_distance(u, v);
      if (!(got == want))
        r.fail(f.name + ": distance(" + u.str() + "," + v.str() + ")=" + got.str() +
               " but the prefix metric gives " + want.str());
      ++r.checks;
    }
  }
  r.summary = std::to_string(r.checks) + " generator pairs";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 5: equal depth-n fingerprints force distance <= 2^{-(n+1)}.
// ---------------------------------------------------------------------------

bool distance_within(const UltraValue& v, uint32_t n) {
  return v.is_zero() || v.exponent() >= n + 1;
}

VertexPath perturb_beyond(const VertexPath& v, uint32_t n) {
  Prefix p = truncate(v, n);
  p.push_back(v.at(n) + 1);
  return VertexPath(std::move(p), v.at(n) + 1);
}

SuiteResult suite_rn_density(const SuiteParams& params) {
  SuiteResult r;
  r.suite = "rn-density";
  const uint32_t samples = params.samples ? params.samples : 200;
  const uint32_t max_depth = params.depth ? params.depth : 5;
  uint64_t equal_key_pairs = 0;
  for (const Fixture& f : acceptance_fixtures()) {
    Rng rng(params.seed ^ std::hash<std::string>{}("rn:" + f.name));
    std::vector<Word> words;
    for (uint32_t i = 0; i < samples; ++i) words.push_back(random_word(rng, f, 5));

    for (uint32_t n = 1; n <= max_depth; ++n) {
      std::map<std::string, std::vector<size_t>> buckets;
      for (size_t i = 0; i < words.size(); ++i)
        buckets[rn_key(words[i], f.graph, n).str()].push_back(i);
      for (const auto& [key, ids] : buckets) {
        for (size_t t = 1; t < ids.size(); ++t) {
          const UltraValue d = distance(words[ids[0]], words[ids[t]], f.graph);
          ++equal_key_pairs;
          if (!distance_within(d, n))
            r.fail(f.name + ": equal R_" + std::to_string(n) + " keys but distance " + d.str() +
                   " for " + str(words[ids[0]]) + " ; " + str(words[ids[t]]));
          ++r.checks;
        }
      }
      // Constructed perturbations beyond depth n (clopen oracles only; the
      // perturbed vertices are unnamed in finite-explicit fixtures).
      if (f.graph.boxes()) {
        for (size_t i = 0; i < words.size() && i < 50; ++i) {
          std::vector<std::pair<VertexPath, long long>> raw;
          for (const auto& s : words[i]) raw.emplace_back(perturb_beyond(s.vertex, n), s.exponent);
          const Word moved = make_word(raw, f.graph);
          if (!(rn_key(words[i], f.graph, n) == rn_key(moved, f.graph, n))) continue;
          ++equal_key_pairs;
          const UltraValue d = distance(words[i], moved, f.graph);
          if (!distance_within(d, n))
            r.fail(f.name + ": perturbed word at depth " + std::to_string(n) +
                   " has distance " + d.str() + " for " + str(words[i]));
          ++r.checks;
        }
      }
    }
  }
  if (equal_key_pairs == 0) r.fail("no equal-key pairs were exercised; the suite is vacuous");
  r.summary = std::to_string(equal_key_pairs) + " equal-key pairs checked";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 6: the metric-to-ultrametric construction verifies exhaustively
// on every corpus instance.
// ---------------------------------------------------------------------------

SuiteResult suite_embed_lemma(const SuiteParams&) {
  SuiteResult r;
  r.suite = "embed-lemma";
  const auto corpus = embed_corpus();
  for (const auto& inst : corpus) {
    const auto violations = validate(inst);
    if (!violations.empty()) {
      r.fail(inst.label + ": instance invalid: " + violations.front());
      continue;
    }
    const LemmaReport report = verify_lemma(inst);
    for (const auto& clause : report.clauses) {
      if (!clause.passed) r.fail(inst.label + ": clause " + clause.name + ": " + clause.detail);
      ++r.checks;
    }
  }
  r.summary = std::to_string(corpus.size()) + " instances, all clauses exhaustive";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 7: E_{n+1} projects into E_n; nonadjacency depths are finite and
// stable up to depth 8.
// ---------------------------------------------------------------------------

SuiteResult suite_en_exactness(const SuiteParams& params) {
  SuiteResult r;
  r.suite = "en-exactness";
  const uint32_t max_depth = params.depth ? params.depth : 6;

  std::vector<Fixture> fixtures = acceptance_fixtures();
  for (uint64_t seed : {211, 212, 213, 214, 215}) fixtures.push_back(fixture_random_clopen(seed, 6, 5));

  for (const Fixture& f : fixtures) {
    Rng rng(params.seed ^ std::hash<std::string>{}("en:" + f.name));
    // Exhaustive monotonicity over the alphabet {0,1,2}.
    std::vector<Prefix> level{Prefix{}};
    for (uint32_t len = 1; len <= max_depth; ++len) {
      std::vector<Prefix> next;
      for (const Prefix& p : level) {
        for (uint32_t x = 0; x < 3; ++x) {
          Prefix q = p;
          q.push_back(x);
          next.push_back(std::move(q));
        }
      }
      level = std::move(next);
      if (len < 2) continue;
      for (const Prefix& a : level) {
        for (const Prefix& b : level) {
          if (!edge_at_depth(f.graph, a, b)) continue;
          Prefix a0(a.begin(), a.end() - 1);
          Prefix b0(b.begin(), b.end() - 1);
          if (!edge_at_depth(f.graph, a0, b0))
            r.fail(f.name + ": (" + str(a) + "," + str(b) + ") in E_" + std::to_string(len) +
                   " but truncations leave E_" + std::to_string(len - 1));
          ++r.checks;
        }
      }
    }
    // Seeded pairs over the alphabet {0..3} for the wider entries.
    for (int t = 0; t < 4000; ++t) {
      const uint32_t len = 2 + static_cast<uint32_t>(rng.below(max_depth - 1));
      Prefix a(len), b(len);
      for (uint32_t i = 0; i < len; ++i) {
        a[i] = static_cast<uint32_t>(rng.below(4));
        b[i] = static_cast<uint32_t>(rng.below(4));
      }
      if (!edge_at_depth(f.graph, a, b)) continue;
      Prefix a0(a.begin(), a.end() - 1);
      Prefix b0(b.begin(), b.end() - 1);
      if (!edge_at_depth(f.graph, a0, b0))
        r.fail(f.name + ": sampled (" + str(a) + "," + str(b) + ") breaks monotonicity");
      ++r.checks;
    }
    // Concrete pairs: finite nonadjacency depth, then stably outside E_n.
    for (size_t i = 0; i < f.sample_vertices.size(); ++i) {
      for (size_t j = i + 1; j < f.sample_vertices.size(); ++j) {
        const VertexPath& u = f.sample_vertices[i];
        const VertexPath& v = f.sample_vertices[j];
        if (adjacent(f.graph, u, v)) {
          for (uint32_t n = 1; n <= 8; ++n) {
            if (!edge_at_depth(f.graph, truncate(u, n), truncate(v, n)))
              r.fail(f.name + ": adjacent pair leaves E_" + std::to_string(n));
            ++r.checks;
          }
        } else {
          const uint32_t d0 = nonadjacency_depth(f.graph, u, v);
          for (uint32_t n = d0; n <= 8; ++n) {
            if (edge_at_depth(f.graph, truncate(u, n), truncate(v, n)))
              r.fail(f.name + ": non-adjacent pair re-enters E_" + std::to_string(n) +
                     " past depth " + std::to_string(d0));
            ++r.checks;
          }
        }
      }
    }
  }
  r.summary = std::to_string(r.checks) + " projections and stability checks";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 8: embedded instances feed the ultranorm; the image distance
// extends the prefix metric and D = d(g,h) + d(g^{-1},h^{-1}) is a metric.
// ---------------------------------------------------------------------------

SuiteResult suite_pipeline_coherence(const SuiteParams& params) {
  SuiteResult r;
  r.suite = "pipeline-coherence";
  const uint32_t samples = params.samples ? params.samples : 200;
  for (const auto& inst : embed_corpus()) {
    const GraphInstance image = to_graph_instance(inst);
    const auto& vertices = image.finite()->vertices;
    std::vector<VertexPath> gens;
    for (const auto& [name, path] : vertices) gens.push_back(path);

    for (size_t i = 0; i < gens.size(); ++i) {
      for (size_t j = i + 1; j < gens.size(); ++j) {
        const UltraValue got = distance(make_word({{gens[i], 1}}, image),
                                        make_word({{gens[j], 1}}, image), image);
        const UltraValue want = baire_distance(gens[i], gens[j]);
        if (!(got == want))
          r.fail(inst.label + ": image distance " + got.str() + " differs from prefix metric " +
                 want.str());
        ++r.checks;
      }
    }

    Rng rng(params.seed ^ std::hash<std::string>{}("pc:" + inst.label));
    auto random_image_word = [&] {
      std::vector<std::pair<VertexPath, long long>> raw;
      const size_t len = rng.below(4);
      for (size_t t = 0; t < len; ++t) {
        long long e = rng.range(-2, 2);
        if (e == 0) e = 1;
        raw.emplace_back(gens[rng.below(gens.size())], e);
      }
      return make_word(raw, image);
    };
    for (uint32_t t = 0; t < samples; ++t) {
      const Word g = random_image_word();
      const Word h = random_image_word();
      const Word k = random_image_word();
      const Rational dgh = two_sided(g, h, image);
      if (!(dgh == two_sided(h, g, image))) r.fail(inst.label + ": D is asymmetric");
      if (dgh.is_zero() != equal(g, h, image))
        r.fail(inst.label + ": D(g,h)=0 does not match g=h for " + str(g) + " ; " + str(h));
      if (two_sided(g, k, image) > dgh + two_sided(h, k, image))
        r.fail(inst.label + ": D violates the triangle inequality");
      r.checks += 3;
    }
  }
  r.summary = std::to_string(r.checks) + " pipeline checks";
  return r;
}

// ---------------------------------------------------------------------------
// Module suites beyond the acceptance criteria.
// ---------------------------------------------------------------------------

SuiteResult suite_words_confluence(const SuiteParams& params) {
  SuiteResult r;
  r.suite = "words-confluence";
  const uint32_t samples = params.samples ? params.samples : 1000;
  for (const Fixture& f : acceptance_fixtures()) {
    Rng rng(params.seed ^ std::hash<std::string>{}("wc:" + f.name));
    for (uint32_t i = 0; i < samples; ++i) {
      const Word w = random_word(rng, f, 8);
      const Word base = reduce(w, f.graph);
      const NormalForm c0 = canonical(w, f.graph);
      for (int t = 0; t < 4; ++t) {
        const Word alt = reduce_randomized(w, f.graph, rng);
        if (alt.size() != base.size())
          r.fail(f.name + ": reduction length depends on selection order for " + str(w));
        if (!(canonical(alt, f.graph) == c0))
          r.fail(f.name + ": canonical form depends on selection order for " + str(w));
        r.checks += 2;
      }
    }
  }
  r.summary = std::to_string(r.checks) + " selection-order checks";
  return r;
}

SuiteResult suite_truncation_homomorphism(const SuiteParams& params) {
  SuiteResult r;
  r.suite = "truncation-homomorphism";
  const uint32_t max_depth = params.depth ? params.depth : 6;

  // Exhaustive: all 3-vertex graphs at orders (2,3,inf), words of <=3
  // syllables with exponents +-1, grouped by canonical form.
  std::vector<RawWord> raws;
  RawWord scratch;
  enumerate_raw_words(-1, 3, scratch, raws);
  std::vector<RawWord> small;
  for (const auto& raw : raws) {
    bool ok = true;
    for (auto [v, e] : raw) ok = ok && (e == 1 || e == -1);
    if (ok) small.push_back(raw);
  }
  for (uint32_t edge_mask = 0; edge_mask < 8; ++edge_mask) {
    const GraphInstance g =
        three_vertex_graph(edge_mask, {Order::finite(2), Order::finite(3), Order::infinite()});
    std::map<std::string, std::vector<Word>> classes;
    for (const auto& raw : small) {
      std::vector<std::pair<VertexPath, long long>> pairs;
      for (auto [v, e] : raw) pairs.emplace_back(VertexPath(static_cast<uint32_t>(v)), e);
      Word w = make_word(pairs, g);
      classes[str(canonical(w, g).word)].push_back(std::move(w));
    }
    for (const auto& [key, members] : classes) {
      for (size_t i = 1; i < members.size(); ++i) {
        for (uint32_t n = 1; n <= max_depth; ++n) {
          if (!equal_at_depth(truncate_word(members[0], n, g), truncate_word(members[i], n, g), n, g))
            r.fail("edges#" + std::to_string(edge_mask) + ": equal words separate in G_" +
                   std::to_string(n) + ": " + str(members[0]) + " ; " + str(members[i]));
          ++r.checks;
        }
      }
    }
  }

  // Sampled: equal pairs built as w and w * (u u^{-1}) over every fixture.
  for (const Fixture& f : acceptance_fixtures()) {
    Rng rng(params.seed ^ std::hash<std::string>{}("th:" + f.name));
    for (int i = 0; i < 200; ++i) {
      const Word w1 = random_word(rng, f, 5);
      const Word u = random_word(rng, f, 3);
      const Word w2 = concat(w1, concat(u, invert(u, f.graph), f.graph), f.graph);
      for (uint32_t n = 1; n <= max_depth; ++n) {
        if (!equal_at_depth(truncate_word(w1, n, f.graph), truncate_word(w2, n, f.graph), n, f.graph))
          r.fail(f.name + ": padded word separates in G_" + std::to_string(n) + " from " + str(w1));
        ++r.checks;
      }
    }
  }
  r.summary = std::to_string(r.checks) + " quotient comparisons";
  return r;
}

using SuiteFn = SuiteResult (*)(const SuiteParams&);

const std::vector<std::tuple<std::string, std::string, SuiteFn>>& registry() {
  static const std::vector<std::tuple<std::string, std::string, SuiteFn>> kSuites = {
      {"oracle-compare",
       "word problem agrees with the letter-rewriting oracle on the exhaustive 3-vertex corpus",
       &suite_oracle_compare},
      {"ultranorm-axioms", "d(g)=0 iff g=e, d(gh) <= max(d(g),d(h)), d(g)=d(g^-1) on seeded samples",
       &suite_ultranorm_axioms},
      {"left-invariance", "distance(kg,kh) = distance(g,h) exactly on seeded triples",
       &suite_left_invariance},
      {"baire-extension", "generator distance equals the prefix metric 2^-(lg+1)",
       &suite_baire_extension},
      {"rn-density", "equal depth-n fingerprints force distance <= 2^-(n+1)", &suite_rn_density},
      {"embed-lemma", "metric-to-ultrametric construction passes every clause on the corpus",
       &suite_embed_lemma},
      {"en-exactness", "E_(n+1) projects into E_n; nonadjacency depths finite and stable",
       &suite_en_exactness},
      {"pipeline-coherence", "embedded instances extend the prefix metric; D = d + d∘inv is a metric",
       &suite_pipeline_coherence},
      {"words-confluence", "reduction length and canonical form are selection-order independent",
       &suite_words_confluence},
      {"truncation-homomorphism", "equal words stay equal in every truncation quotient",
       &suite_truncation_homomorphism},
  };
  return kSuites;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& suite_catalog() {
  static const std::vector<std::pair<std::string, std::string>> kCatalog = [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [name, description, fn] : registry()) out.emplace_back(name, description);
    return out;
  }();
  return kCatalog;
}

bool is_suite(const std::string& name) {
  for (const auto& [n, d, fn] : registry()) {
    if (n == name) return true;
  }
  return false;
}

SuiteResult run_suite(const std::string& name, const SuiteParams& params) {
  for (const auto& [n, d, fn] : registry()) {
    if (n == name) return fn(params);
  }
  throw PreconditionError("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_acceptance(uint64_t seed) {
  SuiteParams params;
  params.seed = seed;
  std::vector<SuiteResult> out;
  for (size_t i = 0; i < 8; ++i) {
    const auto& [name, description, fn] = registry()[i];
    out.push_back(fn(params));
  }
  return out;
}

}  // namespace gp
