#include "gp/embed.hpp"

#include <algorithm>

#include "gp/errors.hpp"

namespace gp {

bool MetricGraphInstance::has_edge(size_t a, size_t b) const {
  for (const auto& [i, j] : edges) {
    if ((i == a && j == b) || (i == b && j == a)) return true;
  }
  return false;
}

std::vector<std::string> validate(const MetricGraphInstance& inst) {
  std::vector<std::string> out;
  const size_t n = inst.size();
  if (inst.metric.size() != n) out.push_back("metric: row count differs from point count");
  for (size_t i = 0; i < inst.metric.size(); ++i) {
    if (inst.metric[i].size() != n)
      out.push_back("metric: row " + std::to_string(i) + " has wrong length");
  }
  if (inst.colors.size() != n) out.push_back("colors: count differs from point count");
  if (!out.empty()) return out;  // shape is broken, skip value checks

  for (size_t i = 0; i < n; ++i) {
    if (!inst.metric[i][i].is_zero()) out.push_back("metric: nonzero diagonal at " + std::to_string(i));
    for (size_t j = 0; j < n; ++j) {
      if (inst.metric[i][j].negative())
        out.push_back("metric: negative entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (inst.metric[i][j] != inst.metric[j][i])
        out.push_back("metric: asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (i != j && inst.metric[i][j].is_zero())
        out.push_back("metric: zero distance between distinct points " + std::to_string(i) + "," +
                      std::to_string(j));
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      for (size_t k = 0; k < n; ++k) {
        if (inst.metric[i][k] > inst.metric[i][j] + inst.metric[j][k]) {
          out.push_back("metric: triangle inequality fails on (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  for (const auto& o : inst.colors) {
    if (!o.valid()) out.push_back("colors: " + o.str() + " is not a prime power or inf");
  }
  bool diag_missing = false;
  for (size_t i = 0; i < n; ++i) {
    if (!inst.has_edge(i, i)) diag_missing = true;
  }
  if (diag_missing) out.push_back("edges: diagonal pairs must be listed");
  for (const auto& [i, j] : inst.edges) {
    if (i >= n || j >= n) {
      out.push_back("edges: index out of range (" + std::to_string(i) + "," + std::to_string(j) + ")");
      continue;
    }
    if (i != j) {
      bool reversed = false;
      for (const auto& [i2, j2] : inst.edges) {
        if (i2 == j && j2 == i) {
          reversed = true;
          break;
        }
      }
      if (!reversed)
        out.push_back("edges: [" + std::to_string(i) + "," + std::to_string(j) +
                      "] has no reverse entry");
    }
  }
  return out;
}

uint32_t color_code(const Order& o) { return o.is_infinite() ? 0 : o.value(); }

VertexPath eta_of(const MetricGraphInstance& inst, size_t a) {
  Prefix prefix{color_code(inst.colors[a])};
  for (uint32_t n = 1; n <= 64; ++n) {
    // Least point strictly within 1/4^n of a; a itself always qualifies, so
    // the value is monotone in n and stabilizes exactly at index(a).
    size_t least = a;
    for (size_t b = 0; b < inst.size(); ++b) {
      if (inst.metric[a][b].less_than_inv_pow2(2 * n)) {
        least = b;
        break;
      }
    }
    if (least == a) return VertexPath(std::move(prefix), static_cast<uint32_t>(a));
    prefix.push_back(static_cast<uint32_t>(least));
  }
  throw InternalError("eta_of: no stabilization within depth 64");
}

std::vector<VertexPath> eta_table(const MetricGraphInstance& inst) {
  std::vector<VertexPath> out;
  out.reserve(inst.size());
  for (size_t a = 0; a < inst.size(); ++a) out.push_back(eta_of(inst, a));
  return out;
}

Rational dprime(const MetricGraphInstance& inst, size_t a, size_t b) {
  if (a == b) return Rational(0);
  const size_t lg = meet_length(eta_of(inst, a), eta_of(inst, b));
  return Rational(1, static_cast<long long>(lg) + 2);
}

std::optional<size_t> dense_witness(const MetricGraphInstance& inst, const Prefix& nu) {
  for (size_t a = 0; a < inst.size(); ++a) {
    const VertexPath eta = eta_of(inst, a);
    bool ok = true;
    for (size_t i = 0; i < nu.size() && ok; ++i) ok = eta.at(i) == nu[i];
    if (ok) return a;
  }
  return std::nullopt;
}

uint32_t pstar(const MetricGraphInstance& inst, const VertexPath& eta) {
  for (size_t a = 0; a < inst.size(); ++a) {
    if (color_code(inst.colors[a]) == eta.at(0)) return eta.at(0);
  }
  return 1;
}

bool LemmaReport::all_passed() const {
  for (const auto& c : clauses) {
    if (!c.passed) return false;
  }
  return true;
}

const LemmaReport::Clause* LemmaReport::find(const std::string& name) const {
  for (const auto& c : clauses) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

LemmaReport verify_lemma(const MetricGraphInstance& inst) {
  LemmaReport report;
  const size_t n = inst.size();
  const std::vector<VertexPath> eta = eta_table(inst);

  // Meet lengths of the eta table; distinct points always have distinct
  // paths (the tails are the indices), so meets are defined everywhere.
  std::vector<std::vector<size_t>> lg(n, std::vector<size_t>(n, 0));
  size_t max_lg = 0;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      lg[a][b] = lg[b][a] = meet_length(eta[a], eta[b]);
      max_lg = std::max(max_lg, lg[a][b]);
    }
  }
  // d'(a, b) < 1/(k+2) for distinct points means lg > k.
  auto dprime_below = [&](size_t a, size_t b, uint32_t k) {
    return a == b || lg[a][b] > k;
  };
  std::vector<std::vector<Rational>> dp(n, std::vector<Rational>(n));
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      if (a != b) dp[a][b] = Rational(1, static_cast<long long>(lg[a][b]) + 2);
    }
  }

  {
    LemmaReport::Clause c{"ultrametric", true, ""};
    for (size_t a = 0; a < n && c.passed; ++a) {
      for (size_t b = 0; b < n && c.passed; ++b) {
        for (size_t k = 0; k < n && c.passed; ++k) {
          if (dp[a][k] > std::max(dp[a][b], dp[b][k])) {
            c.passed = false;
            c.detail = "strong triangle fails on (" + std::to_string(a) + "," + std::to_string(b) +
                       "," + std::to_string(k) + ")";
          }
        }
      }
    }
    report.clauses.push_back(std::move(c));
  }

  {
    LemmaReport::Clause c{"dense_witness", true, ""};
    for (size_t b = 0; b < n && c.passed; ++b) {
      const uint32_t stab = static_cast<uint32_t>(eta[b].encoding_length()) + 1;
      for (uint32_t depth = 1; depth <= stab && c.passed; ++depth) {
        const Prefix nu = truncate(eta[b], depth);
        const auto witness = dense_witness(inst, nu);
        if (!witness) {
          c.passed = false;
          c.detail = "no witness for " + str(nu) + " though point " + std::to_string(b) + " extends it";
          break;
        }
        if (dp[*witness][b] > Rational(1, static_cast<long long>(depth) + 2)) {
          c.passed = false;
          c.detail = "witness for " + str(nu) + " is farther than 1/(n+2)";
        }
      }
    }
    report.clauses.push_back(std::move(c));
  }

  {
    LemmaReport::Clause c{"edge_closedness", true, ""};
    for (size_t a = 0; a < n && c.passed; ++a) {
      for (size_t b = a + 1; b < n && c.passed; ++b) {
        if (inst.has_edge(a, b)) continue;
        bool found = false;
        for (uint32_t depth = 1; depth <= static_cast<uint32_t>(max_lg) + 2 && !found; ++depth) {
          bool clean = true;
          for (size_t a2 = 0; a2 < n && clean; ++a2) {
            if (!dprime_below(a, a2, depth)) continue;
            for (size_t b2 = 0; b2 < n && clean; ++b2) {
              if (!dprime_below(b, b2, depth)) continue;
              if (inst.has_edge(a2, b2)) clean = false;
            }
          }
          if (!clean) continue;
          // Pullback into the input metric: members of the d'-ball sit
          // strictly within 2/4^depth of the center.
          bool pullback = true;
          for (size_t target : {a, b}) {
            for (size_t x = 0; x < n && pullback; ++x) {
              if (x == target || !dprime_below(target, x, depth)) continue;
              // d(target, x) < 2/4^depth  <=>  d/2 < 2^{-2 depth}
              const Rational half = inst.metric[target][x] * Rational(1, 2);
              if (!half.less_than_inv_pow2(2 * depth)) pullback = false;
            }
          }
          if (!pullback) {
            c.passed = false;
            c.detail = "pullback bound 2/4^n fails for non-edge (" + std::to_string(a) + "," +
                       std::to_string(b) + ") at n=" + std::to_string(depth);
            break;
          }
          found = true;
          report.closedness_witnesses.emplace_back(a, b, depth);
        }
        if (!found && c.passed) {
          c.passed = false;
          c.detail = "no clean depth for non-edge (" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
      }
    }
    report.clauses.push_back(std::move(c));
  }

  {
    LemmaReport::Clause c{"injectivity", true, ""};
    for (size_t a = 0; a < n && c.passed; ++a) {
      for (size_t b = a + 1; b < n && c.passed; ++b) {
        if (eta[a] == eta[b]) {
          c.passed = false;
          c.detail = "points " + std::to_string(a) + " and " + std::to_string(b) + " share an eta";
        }
      }
    }
    report.clauses.push_back(std::move(c));
  }

  {
    LemmaReport::Clause c{"color_preservation", true, ""};
    for (size_t a = 0; a < n && c.passed; ++a) {
      if (pstar(inst, eta[a]) != color_code(inst.colors[a])) {
        c.passed = false;
        c.detail = "pstar(eta_" + std::to_string(a) + ") differs from the point's color code";
      }
    }
    report.clauses.push_back(std::move(c));
  }

  {
    LemmaReport::Clause c{"pstar_coherence", true, ""};
    for (size_t a = 0; a < n && c.passed; ++a) {
      for (size_t b = 0; b < n && c.passed; ++b) {
        const bool same_first = eta[a].at(0) == eta[b].at(0);
        const bool same_pstar = pstar(inst, eta[a]) == pstar(inst, eta[b]);
        if (same_first != same_pstar) {
          c.passed = false;
          c.detail = "first-coordinate/pstar mismatch on (" + std::to_string(a) + "," +
                     std::to_string(b) + ")";
        }
      }
    }
    report.clauses.push_back(std::move(c));
  }

  return report;
}

GraphInstance to_graph_instance(const MetricGraphInstance& inst) {
  const LemmaReport report = verify_lemma(inst);
  if (!report.all_passed()) {
    std::string why;
    for (const auto& c : report.clauses) {
      if (!c.passed) why += " " + c.name;
    }
    throw PreconditionError("to_graph_instance: verification failed on:" + why);
  }
  FiniteExplicit fe;
  const std::vector<VertexPath> eta = eta_table(inst);
  for (size_t a = 0; a < inst.size(); ++a) fe.vertices[inst.points[a]] = eta[a];
  for (const auto& [i, j] : inst.edges) {
    if (i == j) continue;  // the finite-explicit relation carries the diagonal itself
    fe.edges.emplace_back(inst.points[i], inst.points[j]);
  }
  Coloring coloring;
  for (size_t a = 0; a < inst.size(); ++a) {
    const uint32_t code = color_code(inst.colors[a]);
    auto [it, inserted] = coloring.table.emplace(code, inst.colors[a]);
    if (!inserted && !(it->second == inst.colors[a]))
      throw InternalError("to_graph_instance: color code collision at " + std::to_string(code));
  }
  return GraphInstance{std::move(fe), std::move(coloring)};
}

}  // namespace gp
