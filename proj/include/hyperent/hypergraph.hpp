#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "hyperent/error.hpp"

namespace hyperent {

// How pairwise adjacency counts parallel co-occurrences.
//   Multiplicity: a_uv = number of edges containing both u and v.
//   Binary:       a_uv = 1 if some edge contains both, else 0.
enum class AdjacencyConvention { Multiplicity, Binary };

const char* convention_name(AdjacencyConvention conv);
AdjacencyConvention convention_from_string(const std::string& s);

using Edge = std::vector<int>;       // k distinct vertex ids, sorted ascending
using EdgeList = std::vector<Edge>;  // sorted lexicographically

// A simple connected-or-not k-uniform hypergraph with vertex ids 1..n and no
// isolated vertices (every vertex appears in some edge).  Instances are
// immutable; construct via build(), which normalizes and validates.
class Hypergraph {
 public:
  // Validates (uniformity, simplicity, nonempty) and normalizes: edges are
  // sorted internally and as a list.  If the union of ids is exactly
  // {1..n} the labels are kept; otherwise vertices are relabeled 1..n by
  // first appearance in the given edge order.
  static Hypergraph build(int k, EdgeList edges);

  int k() const { return k_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const EdgeList& edges() const { return edges_; }

  // indexed by vertex id (entry 0 unused): indices of incident edges,
  // ascending
  std::vector<std::vector<int>> incidence() const;

  bool operator==(const Hypergraph& o) const = default;

 private:
  Hypergraph() = default;
  int k_ = 0;
  int n_ = 0;
  EdgeList edges_;
};

int connected_components(const Hypergraph& h);
bool is_connected(const Hypergraph& h);

// m(k-1) - n + l where l is the number of connected components.
// 0, 1, 2 pick out hypertrees, unicyclic and bicyclic hypergraphs.
int cyclomatic_number(const Hypergraph& h);

// Ordinary degrees d_v (number of incident edges), indexed by vertex-1.
std::vector<int> vertex_degrees(const Hypergraph& h);

using Matrix = std::vector<std::vector<long long>>;

// n x n symmetric matrix with zero diagonal under the given convention.
Matrix adjacency_matrix(const Hypergraph& h, AdjacencyConvention conv);

// A multiset of degrees kept in non-increasing order.
struct DegreeSequence {
  std::vector<int> values;

  static DegreeSequence of(std::vector<int> values);

  long long sum() const;
  // (value, count) pairs in non-increasing value order, e.g. [[4,2],[2,3]].
  std::vector<std::pair<int, int>> runs() const;
  std::string to_string() const;  // "[4,4,2,2,2]"

  bool operator==(const DegreeSequence& o) const = default;
};

struct LaplacianDegrees {
  std::vector<int> per_vertex;  // delta(v), indexed by vertex-1
  DegreeSequence sequence;      // same values, non-increasing
};

// Row sums of the adjacency matrix.  Under Multiplicity this equals
// d_v * (k-1) exactly for every vertex.
LaplacianDegrees laplacian_degrees(const Hypergraph& h,
                                   AdjacencyConvention conv);

inline constexpr int kDefaultCanonicalLimit = 14;

// Isomorphism-invariant normal form: two hypergraphs have equal canonical
// forms iff they are isomorphic.
struct CanonicalForm {
  int k = 0;
  int n = 0;
  EdgeList edges;

  std::string key() const;  // compact string, usable as a map key

  auto operator<=>(const CanonicalForm& o) const = default;
};

// Computes the canonical form by iterated degree/neighborhood refinement
// followed by exhaustive search over label permutations within refinement
// blocks (per connected component).  Throws TooLarge when n exceeds
// vertex_limit.
CanonicalForm canonical_form(const Hypergraph& h,
                             int vertex_limit = kDefaultCanonicalLimit);

}  // namespace hyperent
