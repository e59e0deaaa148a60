#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

// Replace vertex `from` by vertex `to` in the edge with the given 0-based
// index into the stored (lexicographically sorted) edge list.
struct Move {
  int edge = 0;
  int from = 0;
  int to = 0;

  bool operator==(const Move& o) const = default;
};

// A batch of single-edge moves applied simultaneously to distinct edges.
struct EdgeMove {
  std::vector<Move> moves;
};

struct MoveResult {
  Hypergraph graph;
  bool isolated_created = false;  // source vertex lost its last edge
};

// Applies all moves at once and renormalizes.  Fails with SourceNotInEdge /
// TargetInsideEdge / ResultNotSimple / BadParameters as appropriate.  When a
// vertex becomes isolated it is dropped by normalization and the flag is set.
MoveResult apply_move(const Hypergraph& h, const EdgeMove& mv);

// h(after) - h(before) for a single move under the given convention.
double move_delta_h(const Hypergraph& h, const Move& mv,
                    AdjacencyConvention conv);

// Lexicographically first qualifying legal move, scanning (edge index,
// source vertex in edge order, target vertex ascending).  A move is legal
// when the result stays simple, connected, and drops no vertex.
//
// Decreasing rule: source in edge, target outside, and
//   delta(source) >= delta(target) + 2*(k-1); guarantees h strictly drops.
// Increasing rule: source in edge, target outside, and
//   delta(target) >= delta(source) >= 2*(k-1); guarantees h strictly rises.
std::optional<Move> find_h_decreasing_move(const Hypergraph& h,
                                           AdjacencyConvention conv);
std::optional<Move> find_h_increasing_move(const Hypergraph& h,
                                           AdjacencyConvention conv);

// All qualifying legal moves, in the same scan order.
std::vector<Move> all_h_decreasing_moves(const Hypergraph& h,
                                         AdjacencyConvention conv);
std::vector<Move> all_h_increasing_moves(const Hypergraph& h,
                                         AdjacencyConvention conv);

enum class MajorizationOrder { Strict, Equal, MajorizesNonstrict, Incomparable };

const char* majorization_name(MajorizationOrder order);

// Prefix-sum dominance of gamma over beta after sorting both non-increasing.
// Requires equal lengths (LengthMismatch) and equal sums (SumMismatch).
MajorizationOrder majorizes(std::span<const int> gamma,
                            std::span<const int> beta);

}  // namespace hyperent
