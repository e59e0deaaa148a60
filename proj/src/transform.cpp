#include "hyperent/transform.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hyperent/entropy.hpp"

namespace hyperent {

MoveResult apply_move(const Hypergraph& h, const EdgeMove& mv) {
  if (mv.moves.empty())
    fail(Errc::BadParameters, "edge move contains no moves");

  std::set<int> touched;
  for (const Move& one : mv.moves) {
    if (one.edge < 0 || one.edge >= h.m())
      fail(Errc::BadParameters,
           "edge index " + std::to_string(one.edge) + " out of range");
    if (!touched.insert(one.edge).second)
      fail(Errc::BadParameters, "moves must touch distinct edges");
    if (one.to < 1 || one.to > h.n())
      fail(Errc::BadParameters,
           "target vertex " + std::to_string(one.to) + " is not a vertex");
  }

  EdgeList edges = h.edges();
  for (const Move& one : mv.moves) {
    Edge& e = edges[static_cast<size_t>(one.edge)];
    auto at = std::find(e.begin(), e.end(), one.from);
    if (at == e.end())
      fail(Errc::SourceNotInEdge, "vertex " + std::to_string(one.from) +
                                      " is not in edge " +
                                      std::to_string(one.edge));
    if (std::find(e.begin(), e.end(), one.to) != e.end())
      fail(Errc::TargetInsideEdge, "vertex " + std::to_string(one.to) +
                                       " is already in edge " +
                                       std::to_string(one.edge));
    *at = one.to;
    std::sort(e.begin(), e.end());
  }

  {
    EdgeList sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::ResultNotSimple, "move produces a duplicate edge");
  }

  std::vector<char> seen(static_cast<size_t>(h.n()) + 1, 0);
  for (const Edge& e : edges)
    for (int v : e) seen[static_cast<size_t>(v)] = 1;
  bool isolated = false;
  for (int v = 1; v <= h.n(); ++v)
    if (!seen[static_cast<size_t>(v)]) isolated = true;

  return MoveResult{Hypergraph::build(h.k(), std::move(edges)), isolated};
}

double move_delta_h(const Hypergraph& h, const Move& mv,
                    AdjacencyConvention conv) {
  MoveResult r = apply_move(h, EdgeMove{{mv}});
  return h_value(r.graph, conv) - h_value(h, conv);
}

namespace {

enum class Rule { Decreasing, Increasing };

bool legal(const Hypergraph& h, const Move& mv) {
  try {
    MoveResult r = apply_move(h, EdgeMove{{mv}});
    return !r.isolated_created && is_connected(r.graph);
  } catch (const Error&) {
    return false;
  }
}

std::vector<Move> scan_moves(const Hypergraph& h, AdjacencyConvention conv,
                             Rule rule, bool first_only) {
  std::vector<Move> out;
  LaplacianDegrees ld = laplacian_degrees(h, conv);
  const std::vector<int>& delta = ld.per_vertex;
  int gap = 2 * (h.k() - 1);

  for (int ei = 0; ei < h.m(); ++ei) {
    const Edge& e = h.edges()[static_cast<size_t>(ei)];
    std::vector<char> inside(static_cast<size_t>(h.n()) + 1, 0);
    for (int v : e) inside[static_cast<size_t>(v)] = 1;
    for (int src : e) {
      for (int dst = 1; dst <= h.n(); ++dst) {
        if (inside[static_cast<size_t>(dst)]) continue;
        int ds = delta[static_cast<size_t>(src - 1)];
        int dt = delta[static_cast<size_t>(dst - 1)];
        bool qualifies = rule == Rule::Decreasing ? ds >= dt + gap
                                                  : dt >= ds && ds >= gap;
        if (!qualifies) continue;
        Move mv{ei, src, dst};
        if (!legal(h, mv)) continue;
        out.push_back(mv);
        if (first_only) return out;
      }
    }
  }
  return out;
}

}  // namespace

std::optional<Move> find_h_decreasing_move(const Hypergraph& h,
                                           AdjacencyConvention conv) {
  auto v = scan_moves(h, conv, Rule::Decreasing, true);
  if (v.empty()) return std::nullopt;
  return v.front();
}

std::optional<Move> find_h_increasing_move(const Hypergraph& h,
                                           AdjacencyConvention conv) {
  auto v = scan_moves(h, conv, Rule::Increasing, true);
  if (v.empty()) return std::nullopt;
  return v.front();
}

std::vector<Move> all_h_decreasing_moves(const Hypergraph& h,
                                         AdjacencyConvention conv) {
  return scan_moves(h, conv, Rule::Decreasing, false);
}

std::vector<Move> all_h_increasing_moves(const Hypergraph& h,
                                         AdjacencyConvention conv) {
  return scan_moves(h, conv, Rule::Increasing, false);
}

const char* majorization_name(MajorizationOrder order) {
  switch (order) {
    case MajorizationOrder::Strict: return "STRICT";
    case MajorizationOrder::Equal: return "EQUAL";
    case MajorizationOrder::MajorizesNonstrict: return "MAJORIZES_NONSTRICT";
    case MajorizationOrder::Incomparable: return "INCOMPARABLE";
  }
  return "UNKNOWN";
}

MajorizationOrder majorizes(std::span<const int> gamma,
                            std::span<const int> beta) {
  if (gamma.size() != beta.size())
    fail(Errc::LengthMismatch, "sequences have different lengths");
  if (gamma.empty()) fail(Errc::LengthMismatch, "sequences are empty");
  for (int x : gamma)
    if (x < 0) fail(Errc::BadParameters, "sequence values must be nonnegative");
  for (int x : beta)
    if (x < 0) fail(Errc::BadParameters, "sequence values must be nonnegative");

  std::vector<int> g(gamma.begin(), gamma.end());
  std::vector<int> b(beta.begin(), beta.end());
  std::sort(g.begin(), g.end(), std::greater<int>());
  std::sort(b.begin(), b.end(), std::greater<int>());

  long long gs = std::accumulate(g.begin(), g.end(), 0LL);
  long long bs = std::accumulate(b.begin(), b.end(), 0LL);
  if (gs != bs) fail(Errc::SumMismatch, "sequences have different sums");

  if (g == b) return MajorizationOrder::Equal;

  long long pg = 0, pb = 0;
  bool dominates = true;
  bool strictly_somewhere = false;
  for (size_t i = 0; i < g.size(); ++i) {
    pg += g[i];
    pb += b[i];
    if (pg < pb) {
      dominates = false;
      break;
    }
    if (pg > pb) strictly_somewhere = true;
  }
  if (!dominates) return MajorizationOrder::Incomparable;
  return strictly_somewhere ? MajorizationOrder::Strict
                            : MajorizationOrder::MajorizesNonstrict;
}

}  // namespace hyperent
