#include "gp/graphspec.hpp"

#include <algorithm>
#include <cctype>

#include "gp/errors.hpp"

namespace gp {

bool is_prime_power(uint32_t m) {
  if (m < 2) return false;
  uint32_t p = 0;
  for (uint32_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return true;  // m itself prime
  while (m % p == 0) m /= p;
  return m == 1;
}

Order Order::finite(uint32_t m) {
  if (m == 0) throw PreconditionError("Order: a finite order must be positive");
  Order o;
  o.m_ = m;
  return o;
}

uint32_t Order::value() const {
  if (!m_) throw PreconditionError("Order: infinite order has no finite value");
  return *m_;
}

std::string Order::str() const { return m_ ? std::to_string(*m_) : "inf"; }

Order Order::parse(std::string_view text) {
  if (text == "inf") return infinite();
  uint64_t base = 0;
  uint64_t exp = 0;
  bool in_exp = false;
  bool any = false;
  for (char c : text) {
    if (c == '^' && !in_exp && any) {
      in_exp = true;
      any = false;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("order: expected 'inf', a number, or p^k, got '" + std::string(text) + "'");
    (in_exp ? exp : base) = (in_exp ? exp : base) * 10 + static_cast<uint64_t>(c - '0');
    any = true;
    if (base > UINT32_MAX || exp > 32) throw OverflowError("order: value too large");
  }
  if (!any) throw ParseError("order: empty or trailing '^' in '" + std::string(text) + "'");
  if (base == 0) throw ParseError("order: 0 is not a valid order");
  if (!in_exp) return finite(static_cast<uint32_t>(base));
  uint64_t v = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > UINT32_MAX) throw OverflowError("order: p^k too large");
  }
  return finite(static_cast<uint32_t>(v));
}

const std::string* FiniteExplicit::name_of(const VertexPath& v) const {
  for (const auto& [name, path] : vertices) {
    if (path == v) return &name;
  }
  return nullptr;
}

bool FiniteExplicit::has_edge(const std::string& a, const std::string& b) const {
  for (const auto& [s, t] : edges) {
    if ((s == a && t == b) || (s == b && t == a)) return true;
  }
  return false;
}

namespace {

// p is an initial segment of some extension of x (equivalently, the shorter
// of the two is a prefix of the other).
bool compatible(const Prefix& p, const Prefix& x) {
  const size_t m = std::min(p.size(), x.size());
  return std::equal(p.begin(), p.begin() + static_cast<long>(m), x.begin());
}

bool extends(const VertexPath& v, const Prefix& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (v.at(i) != p[i]) return false;
  }
  return true;
}

}  // namespace

bool adjacent(const GraphInstance& g, const VertexPath& u, const VertexPath& v) {
  if (u == v) return true;
  if (const auto* cb = g.boxes()) {
    for (const auto& [p, q] : cb->boxes) {
      if ((extends(u, p) && extends(v, q)) || (extends(v, p) && extends(u, q))) return true;
    }
    return false;
  }
  const auto& fe = *g.finite();
  const std::string* nu = fe.name_of(u);
  const std::string* nv = fe.name_of(v);
  if (!nu) throw UnknownVertexError("adjacent: vertex " + u.str() + " is not named by the oracle");
  if (!nv) throw UnknownVertexError("adjacent: vertex " + v.str() + " is not named by the oracle");
  return fe.has_edge(*nu, *nv);
}

bool edge_at_depth(const GraphInstance& g, const Prefix& a, const Prefix& b) {
  if (a.size() != b.size())
    throw PreconditionError("edge_at_depth: prefixes of different lengths " + str(a) + ", " + str(b));
  if (a.empty()) throw PreconditionError("edge_at_depth: depth must be at least 1");
  if (a == b) return true;  // diagonal pairs extend to the diagonal
  const size_t n = a.size();
  if (const auto* cb = g.boxes()) {
    for (const auto& [p, q] : cb->boxes) {
      if ((compatible(p, a) && compatible(q, b)) || (compatible(p, b) && compatible(q, a))) return true;
    }
    return false;
  }
  const auto& fe = *g.finite();
  for (const auto& [s, t] : fe.edges) {
    const VertexPath& vs = fe.vertices.at(s);
    const VertexPath& vt = fe.vertices.at(t);
    if ((truncate(vs, n) == a && truncate(vt, n) == b) ||
        (truncate(vs, n) == b && truncate(vt, n) == a))
      return true;
  }
  return false;
}

uint32_t nonadjacency_depth(const GraphInstance& g, const VertexPath& u, const VertexPath& v) {
  if (adjacent(g, u, v))
    throw PreconditionError("nonadjacency_depth: pair is adjacent (" + u.str() + ", " + v.str() + ")");
  // u != v here since the diagonal is adjacent. Past the bound below every
  // compatibility test stabilizes, so edge_at_depth equals adjacency.
  size_t bound = meet_length(u, v) + 1;
  if (const auto* cb = g.boxes()) {
    for (const auto& [p, q] : cb->boxes) bound = std::max({bound, p.size() + 1, q.size() + 1});
  } else {
    for (const auto& [name, w] : g.finite()->vertices) {
      if (w != u) bound = std::max(bound, meet_length(w, u) + 1);
      if (w != v) bound = std::max(bound, meet_length(w, v) + 1);
    }
  }
  for (size_t n = 1; n <= bound; ++n) {
    if (!edge_at_depth(g, truncate(u, n), truncate(v, n))) return static_cast<uint32_t>(n);
  }
  throw InternalError("nonadjacency_depth: not separated within the stabilization bound");
}

std::vector<Violation> validate(const GraphInstance& g) {
  std::vector<Violation> out;
  auto check_order = [&](const std::string& where, const Order& o) {
    if (!o.valid())
      out.push_back({where, "order " + o.str() + " is not a prime power or inf"});
  };
  for (const auto& [first, o] : g.coloring.table)
    check_order("coloring.table[" + std::to_string(first) + "]", o);
  check_order("coloring.default", g.coloring.fallback);

  if (const auto* fe = g.finite()) {
    // Injectivity of the name map on canonical paths.
    for (auto it = fe->vertices.begin(); it != fe->vertices.end(); ++it) {
      for (auto jt = std::next(it); jt != fe->vertices.end(); ++jt) {
        if (it->second == jt->second)
          out.push_back({"oracle.vertices",
                         "names '" + it->first + "' and '" + jt->first + "' map to the same path"});
      }
    }
    for (const auto& [s, t] : fe->edges) {
      if (!fe->vertices.count(s))
        out.push_back({"oracle.edges", "edge references unknown vertex '" + s + "'"});
      if (!fe->vertices.count(t))
        out.push_back({"oracle.edges", "edge references unknown vertex '" + t + "'"});
    }
    // The list itself must be symmetric, not just its induced relation.
    for (const auto& [s, t] : fe->edges) {
      if (s == t) continue;
      bool reversed = false;
      for (const auto& [s2, t2] : fe->edges) {
        if (s2 == t && t2 == s) {
          reversed = true;
          break;
        }
      }
      if (!reversed)
        out.push_back({"oracle.edges", "edge [" + s + "," + t + "] has no reverse entry"});
    }
  }
  return out;
}

}  // namespace gp
