#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gp/graphspec.hpp"
#include "gp/words.hpp"

namespace gp {

/// Single generator occurrence with sign; the oracle works on flat letter
/// strings, never on syllables, so that every rewrite move is purely local.
struct Letter {
  std::string vertex;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Letters = std::vector<Letter>;

std::string str(const Letters& w);

/// All letter strings reachable from the seed within the length bound under
/// the three moves: swapping adjacent letters with adjacent vertices,
/// deleting/inserting inverse pairs, and deleting/inserting order-many equal
/// letters for finite-order vertices. Members are sorted (length, then code
/// sequence) so the class is deterministic.
struct ClosureClass {
  Letters seed;
  uint32_t max_len = 0;
  std::vector<Letters> members;

  bool contains(const Letters& w) const;
};

/// Ground-truth word problem on finite explicit graphs with at most 15 named
/// vertices. Precomputes the letter alphabet and its adjacency once.
class OracleContext {
 public:
  explicit OracleContext(const GraphInstance& g);

  /// Exponent expansion of a word into letters. Unknown vertices throw.
  Letters expand(const Word& w) const;

  ClosureClass closure(const Letters& seed, uint32_t max_len) const;

  /// Closure intersection. Sound always; complete when both classes fit
  /// within max_len.
  bool equal(const Letters& a, const Letters& b, uint32_t max_len) const;

  /// Lex-least minimal-length string reachable by the downward moves only
  /// (swaps and the two deletions), after rewriting negative finite-order
  /// letters as positive runs. Equivalent strings share it, so it serves as
  /// an exact class key without any length headroom.
  Letters min_form(const Letters& seed) const;

 private:
  const GraphInstance* graph_;
  std::vector<std::string> names_;
  std::vector<uint32_t> finite_orders_;  // 0 for infinite
  std::vector<std::vector<bool>> adj_;

  size_t id_of(const std::string& name) const;
};

ClosureClass closure(const Word& w, const GraphInstance& g, uint32_t max_len);
bool oracle_equal(const Word& a, const Word& b, const GraphInstance& g, uint32_t max_len);
Letters oracle_min_form(const Word& w, const GraphInstance& g);

}  // namespace gp
