#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

enum class FamilyId {
  Hyperstar,       // m edges through one center
  LoosePath,       // consecutive edges share one vertex
  TreePower,       // k-th power of an ordinary tree
  LooseCycle,      // cycle of m >= 3 edges, consecutive intersections single
  UniNoPendant,    // unicyclic, every vertex degree <= 2 (loose cycle shape)
  UniTightPair,    // two edges sharing exactly two vertices (m = 2 only)
  BiMaxDeg2,       // bicyclic with maximum ordinary degree 2
  BiHub,           // bicyclic with one hub on all edges
  ChemTStar,       // chemical hypertree: degrees in {1,2,3,4}, hubs chained
};

const char* family_name(FamilyId id);
FamilyId family_from_string(const std::string& s);

struct FamilyDescriptor {
  FamilyId family = FamilyId::Hyperstar;
  int k = 3;
  int m = 1;
  // only for TreePower: ordinary tree as (u, v) pairs
  std::vector<std::pair<int, int>> tree_edges;
};

Hypergraph generate(const FamilyDescriptor& desc);

Hypergraph gen_hyperstar(int k, int m);
Hypergraph gen_loose_path(int k, int m);
Hypergraph gen_loose_cycle(int k, int m);
Hypergraph gen_tree_power(const std::vector<std::pair<int, int>>& tree_edges,
                          int k);

enum class UnicyclicVariant { NoPendant, TightPair };
Hypergraph gen_unicyclic(int k, int m, UnicyclicVariant variant);

enum class BicyclicVariant { MaxDeg2, Hub };
Hypergraph gen_bicyclic(int k, int m, BicyclicVariant variant);

Hypergraph gen_chemical_tstar(int k, int m);

// Vertex counts by ordinary degree (a: degree 4, b: degree 3, c: degree 2,
// d: degree 1) for the chemical extremal hypertree with m = 3a + i + 1 edges,
// i in {0,1,2}; satisfies 4a + 3b + 2c + d = km and a + b + c + d = n.
struct ChemicalCounts {
  long long a = 0;
  long long b = 0;
  long long c = 0;
  long long d = 0;
  int i = 0;

  bool operator==(const ChemicalCounts& o) const = default;
};

ChemicalCounts chemical_counts(int k, int m);

enum class GraphClass { Hypertree, Unicyclic, Bicyclic, Chemical };

const char* class_name(GraphClass c);
GraphClass class_from_string(const std::string& s);

// Published extremal-entropy window for a class at given (k, m), with the
// extremal degree sequences the closed forms are evaluated on.  For the
// bicyclic class the lower bound has two readings of the hub degree (the
// printed mk-k versus the definitional mk-m); i_lower carries the printed
// reading and both are also exposed separately.  Bounds are reported as
// published even where enumeration shows a bound does not actually hold.
struct BoundsResult {
  GraphClass graph_class = GraphClass::Hypertree;
  int k = 0;
  int m = 0;
  int n = 0;
  double i_lower = 0;
  double i_upper = 0;
  DegreeSequence lower_witness_sequence;
  DegreeSequence upper_witness_sequence;
  std::optional<double> i_lower_printed;       // bicyclic only
  std::optional<double> i_lower_definitional;  // bicyclic only
  std::optional<ChemicalCounts> chem_counts;   // chemical only
};

BoundsResult bounds(GraphClass c, int k, int m);

}  // namespace hyperent
