#include "gp/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "gp/errors.hpp"

namespace gp {

namespace {

// Strings pack into one uint64: length in the top 4 bits, letters in 5-bit
// slots from the low end. Caps the oracle at 15 vertices and 12 letters.
constexpr uint32_t kMaxLetters = 12;
constexpr uint32_t kMaxVertices = 15;
constexpr size_t kStateBudget = 5'000'000;

using Codes = std::vector<uint8_t>;  // code = 2 * vertex id + (sign < 0)

uint64_t pack(const Codes& c) {
  uint64_t bits = static_cast<uint64_t>(c.size()) << 60;
  for (size_t i = 0; i < c.size(); ++i) bits |= static_cast<uint64_t>(c[i]) << (5 * i);
  return bits;
}

Codes unpack(uint64_t bits) {
  Codes c(bits >> 60);
  for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<uint8_t>((bits >> (5 * i)) & 0x1f);
  return c;
}

}  // namespace

std::string str(const Letters& w) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += w[i].vertex;
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

bool ClosureClass::contains(const Letters& w) const {
  return std::find(members.begin(), members.end(), w) != members.end();
}

OracleContext::OracleContext(const GraphInstance& g) : graph_(&g) {
  const auto* fe = g.finite();
  if (!fe) throw PreconditionError("oracle: requires a finite explicit graph instance");
  for (const auto& [name, path] : fe->vertices) names_.push_back(name);
  if (names_.size() > kMaxVertices)
    throw ValidationError("oracle: supports at most 15 named vertices");
  adj_.assign(names_.size(), std::vector<bool>(names_.size(), false));
  for (size_t i = 0; i < names_.size(); ++i) {
    const VertexPath& vi = fe->vertices.at(names_[i]);
    const Order& o = g.coloring.order_of(vi);
    finite_orders_.push_back(o.is_infinite() ? 0 : o.value());
    for (size_t j = 0; j < names_.size(); ++j)
      adj_[i][j] = adjacent(g, vi, fe->vertices.at(names_[j]));
  }
}

size_t OracleContext::id_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw UnknownVertexError("oracle: vertex '" + name + "' is not named");
  return static_cast<size_t>(it - names_.begin());
}

Letters OracleContext::expand(const Word& w) const {
  const auto* fe = graph_->finite();
  Letters out;
  for (const auto& s : w) {
    const std::string* name = fe->name_of(s.vertex);
    if (!name)
      throw UnknownVertexError("oracle: vertex " + s.vertex.str() + " is not named");
    const long long count = s.exponent < 0 ? -s.exponent : s.exponent;
    for (long long i = 0; i < count; ++i) out.push_back({*name, s.exponent < 0 ? -1 : 1});
  }
  return out;
}

namespace {

struct MoveSet {
  const std::vector<std::vector<bool>>* adj;
  const std::vector<uint32_t>* orders;
  uint32_t max_len;     // 0 disables insertions
  size_t vertex_count;
};

template <class Visit>
void neighbors(const Codes& c, const MoveSet& ms, Visit&& visit) {
  // Swaps of adjacent letters whose vertices are adjacent (equal vertices
  // included by the reflexivity convention; identical letters skipped).
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i] == c[i + 1]) continue;
    if ((*ms.adj)[c[i] >> 1][c[i + 1] >> 1]) {
      Codes n = c;
      std::swap(n[i], n[i + 1]);
      visit(n);
    }
  }
  // Inverse-pair deletions.
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    if ((c[i] >> 1) == (c[i + 1] >> 1) && (c[i] & 1) != (c[i + 1] & 1)) {
      Codes n = c;
      n.erase(n.begin() + static_cast<long>(i), n.begin() + static_cast<long>(i) + 2);
      visit(n);
    }
  }
  // Order-run deletions.
  for (size_t i = 0; i < c.size(); ++i) {
    const uint32_t m = (*ms.orders)[c[i] >> 1];
    if (m == 0 || i + m > c.size()) continue;
    bool run = true;
    for (size_t k = 1; k < m && run; ++k) run = c[i + k] == c[i];
    if (run) {
      Codes n = c;
      n.erase(n.begin() + static_cast<long>(i), n.begin() + static_cast<long>(i + m));
      visit(n);
    }
  }
  if (ms.max_len == 0) return;
  // Inverse-pair insertions.
  if (c.size() + 2 <= ms.max_len) {
    for (size_t pos = 0; pos <= c.size(); ++pos) {
      for (size_t id = 0; id < ms.vertex_count; ++id) {
        for (int first_neg = 0; first_neg < 2; ++first_neg) {
          Codes n = c;
          const uint8_t plus = static_cast<uint8_t>(2 * id);
          const uint8_t minus = static_cast<uint8_t>(2 * id + 1);
          n.insert(n.begin() + static_cast<long>(pos),
                   {first_neg ? minus : plus, first_neg ? plus : minus});
          visit(n);
        }
      }
    }
  }
  // Order-run insertions.
  for (size_t id = 0; id < ms.vertex_count; ++id) {
    const uint32_t m = (*ms.orders)[id];
    if (m == 0 || c.size() + m > ms.max_len) continue;
    for (size_t pos = 0; pos <= c.size(); ++pos) {
      for (int neg = 0; neg < 2; ++neg) {
        Codes n = c;
        n.insert(n.begin() + static_cast<long>(pos), m, static_cast<uint8_t>(2 * id + neg));
        visit(n);
      }
    }
  }
}

std::unordered_set<uint64_t> bfs(const Codes& seed, const MoveSet& ms,
                                 const std::unordered_set<uint64_t>* stop_set, bool* hit) {
  std::unordered_set<uint64_t> visited;
  std::vector<uint64_t> frontier{pack(seed)};
  visited.insert(frontier[0]);
  if (hit) *hit = stop_set && stop_set->count(frontier[0]) > 0;
  while (!frontier.empty() && !(hit && *hit)) {
    std::vector<uint64_t> next;
    for (uint64_t state : frontier) {
      if (hit && *hit) break;
      neighbors(unpack(state), ms, [&](const Codes& n) {
        const uint64_t key = pack(n);
        if (visited.insert(key).second) {
          if (visited.size() > kStateBudget)
            throw InternalError("oracle: closure exceeded the state budget; lower max_len");
          next.push_back(key);
          if (hit && stop_set->count(key)) *hit = true;
        }
      });
    }
    frontier = std::move(next);
  }
  return visited;
}

}  // namespace

ClosureClass OracleContext::closure(const Letters& seed, uint32_t max_len) const {
  if (max_len > kMaxLetters) throw ValidationError("oracle: max_len is capped at 12");
  if (seed.size() > max_len)
    throw BoundTooSmallError("oracle: seed expands to " + std::to_string(seed.size()) +
                             " letters, above max_len " + std::to_string(max_len));
  Codes c;
  for (const auto& l : seed)
    c.push_back(static_cast<uint8_t>(2 * id_of(l.vertex) + (l.sign < 0 ? 1 : 0)));
  const MoveSet ms{&adj_, &finite_orders_, max_len, names_.size()};
  auto visited = bfs(c, ms, nullptr, nullptr);

  std::vector<Codes> all;
  all.reserve(visited.size());
  for (uint64_t v : visited) all.push_back(unpack(v));
  std::sort(all.begin(), all.end(), [](const Codes& a, const Codes& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  ClosureClass out;
  out.seed = seed;
  out.max_len = max_len;
  out.members.reserve(all.size());
  for (const auto& codes : all) {
    Letters w;
    w.reserve(codes.size());
    for (uint8_t code : codes) w.push_back({names_[code >> 1], (code & 1) ? -1 : 1});
    out.members.push_back(std::move(w));
  }
  return out;
}

bool OracleContext::equal(const Letters& a, const Letters& b, uint32_t max_len) const {
  if (max_len > kMaxLetters) throw ValidationError("oracle: max_len is capped at 12");
  auto to_codes = [&](const Letters& w) {
    if (w.size() > max_len)
      throw BoundTooSmallError("oracle: word expands to " + std::to_string(w.size()) +
                               " letters, above max_len " + std::to_string(max_len));
    Codes c;
    for (const auto& l : w)
      c.push_back(static_cast<uint8_t>(2 * id_of(l.vertex) + (l.sign < 0 ? 1 : 0)));
    return c;
  };
  const Codes ca = to_codes(a);
  const Codes cb = to_codes(b);
  const MoveSet ms{&adj_, &finite_orders_, max_len, names_.size()};
  auto first = bfs(ca, ms, nullptr, nullptr);
  bool hit = false;
  bfs(cb, ms, &first, &hit);
  return hit;
}

Letters OracleContext::min_form(const Letters& seed) const {
  // Sign-normalize first: a negative letter of finite order m equals m-1
  // positive ones, and the downward moves never flip signs.
  Codes c;
  for (const auto& l : seed) {
    const size_t id = id_of(l.vertex);
    const uint32_t m = finite_orders_[id];
    if (m != 0 && l.sign < 0) {
      for (uint32_t k = 0; k + 1 < m; ++k) c.push_back(static_cast<uint8_t>(2 * id));
    } else {
      c.push_back(static_cast<uint8_t>(2 * id + (l.sign < 0 ? 1 : 0)));
    }
  }
  if (c.size() > kMaxLetters)
    throw BoundTooSmallError("oracle: seed normalizes beyond 12 letters");
  // Downward moves only: insertions disabled.
  const MoveSet ms{&adj_, &finite_orders_, 0, names_.size()};
  auto visited = bfs(c, ms, nullptr, nullptr);
  Codes best = c;
  bool have = false;
  for (uint64_t v : visited) {
    Codes cand = unpack(v);
    if (!have || cand.size() < best.size() || (cand.size() == best.size() && cand < best)) {
      best = std::move(cand);
      have = true;
    }
  }
  Letters out;
  out.reserve(best.size());
  for (uint8_t code : best) out.push_back({names_[code >> 1], (code & 1) ? -1 : 1});
  return out;
}

ClosureClass closure(const Word& w, const GraphInstance& g, uint32_t max_len) {
  OracleContext ctx(g);
  return ctx.closure(ctx.expand(w), max_len);
}

bool oracle_equal(const Word& a, const Word& b, const GraphInstance& g, uint32_t max_len) {
  OracleContext ctx(g);
  return ctx.equal(ctx.expand(a), ctx.expand(b), max_len);
}

Letters oracle_min_form(const Word& w, const GraphInstance& g) {
  OracleContext ctx(g);
  return ctx.min_form(ctx.expand(w));
}

}  // namespace gp
