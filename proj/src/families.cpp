#include "hyperent/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hyperent/entropy.hpp"

namespace hyperent {

const char* family_name(FamilyId id) {
  switch (id) {
    case FamilyId::Hyperstar: return "HYPERSTAR";
    case FamilyId::LoosePath: return "LOOSE_PATH";
    case FamilyId::TreePower: return "TREE_POWER";
    case FamilyId::LooseCycle: return "LOOSE_CYCLE";
    case FamilyId::UniNoPendant: return "UNI_NOPENDANT";
    case FamilyId::UniTightPair: return "UNI_TIGHTPAIR";
    case FamilyId::BiMaxDeg2: return "BI_MAXDEG2";
    case FamilyId::BiHub: return "BI_HUB";
    case FamilyId::ChemTStar: return "CHEM_TSTAR";
  }
  return "UNKNOWN";
}

FamilyId family_from_string(const std::string& s) {
  static const std::map<std::string, FamilyId> table = {
      {"HYPERSTAR", FamilyId::Hyperstar},
      {"LOOSE_PATH", FamilyId::LoosePath},
      {"TREE_POWER", FamilyId::TreePower},
      {"LOOSE_CYCLE", FamilyId::LooseCycle},
      {"UNI_NOPENDANT", FamilyId::UniNoPendant},
      {"UNI_TIGHTPAIR", FamilyId::UniTightPair},
      {"BI_MAXDEG2", FamilyId::BiMaxDeg2},
      {"BI_HUB", FamilyId::BiHub},
      {"CHEM_TSTAR", FamilyId::ChemTStar},
  };
  auto it = table.find(s);
  if (it == table.end()) fail(Errc::BadParameters, "unknown family: " + s);
  return it->second;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(Errc::BadParameters, what);
}

// {start, start+1, ..., start+count-1}
Edge fresh_block(int start, int count) {
  Edge e;
  e.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) e.push_back(start + i);
  return e;
}

}  // namespace

Hypergraph gen_hyperstar(int k, int m) {
  require(k >= 3, "hyperstar needs k >= 3");
  require(m >= 1, "hyperstar needs m >= 1");
  EdgeList edges;
  for (int i = 0; i < m; ++i) {
    Edge e{1};
    Edge rest = fresh_block(2 + i * (k - 1), k - 1);
    e.insert(e.end(), rest.begin(), rest.end());
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(k, std::move(edges));
}

Hypergraph gen_loose_path(int k, int m) {
  require(k >= 3, "loose path needs k >= 3");
  require(m >= 1, "loose path needs m >= 1");
  EdgeList edges;
  for (int i = 0; i < m; ++i)
    edges.push_back(fresh_block(i * (k - 1) + 1, k));
  return Hypergraph::build(k, std::move(edges));
}

Hypergraph gen_unicyclic(int k, int m, UnicyclicVariant variant) {
  require(k >= 3, "unicyclic families need k >= 3");
  if (variant == UnicyclicVariant::TightPair) {
    if (m > 2)
      fail(Errc::UnrealizableFamily,
           "the tight-pair family exists only for m = 2");
    require(m == 2, "the tight-pair family needs m = 2");
    require(k >= 3, "a tight pair needs k >= 3");
    Edge e1 = fresh_block(1, k);
    Edge e2{1, 2};
    Edge rest = fresh_block(k + 1, k - 2);
    e2.insert(e2.end(), rest.begin(), rest.end());
    return Hypergraph::build(k, {e1, e2});
  }

  // NoPendant: loose cycle of m edges; for m = 2 the two edges share their
  // two link vertices.
  require(m >= 2, "a cycle needs m >= 2");
  int n = m * (k - 1);
  EdgeList edges;
  for (int i = 0; i < m - 1; ++i)
    edges.push_back(fresh_block(i * (k - 1) + 1, k));
  Edge last = fresh_block((m - 1) * (k - 1) + 1, k - 1);
  last.push_back(1);
  edges.push_back(std::move(last));
  Hypergraph h = Hypergraph::build(k, std::move(edges));
  require(h.n() == n, "internal: cycle vertex count");
  return h;
}

Hypergraph gen_loose_cycle(int k, int m) {
  require(m >= 3, "a loose cycle needs m >= 3");
  return gen_unicyclic(k, m, UnicyclicVariant::NoPendant);
}

Hypergraph gen_tree_power(const std::vector<std::pair<int, int>>& tree_edges,
                          int k) {
  require(k >= 3, "tree powers need k >= 3");
  if (tree_edges.empty()) fail(Errc::NotATree, "tree has no edges");

  std::map<int, int> label;
  int next = 1;
  for (const auto& [u, v] : tree_edges) {
    if (u == v) fail(Errc::NotATree, "tree edge joins a vertex to itself");
    if (label.emplace(u, next).second) ++next;
    if (label.emplace(v, next).second) ++next;
  }
  int t = next - 1;
  if (static_cast<int>(tree_edges.size()) != t - 1)
    fail(Errc::NotATree, "edge count is not vertex count minus one");

  // connectivity of the tree itself
  std::vector<std::vector<int>> adj(static_cast<size_t>(t) + 1);
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : tree_edges) {
    int a = label[u], b = label[v];
    auto key = std::minmax(a, b);
    if (!seen.insert({key.first, key.second}).second)
      fail(Errc::NotATree, "duplicate tree edge");
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<char> vis(static_cast<size_t>(t) + 1, 0);
  std::vector<int> stack{1};
  vis[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[static_cast<size_t>(v)])
      if (!vis[static_cast<size_t>(u)]) {
        vis[static_cast<size_t>(u)] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  if (reached != t) fail(Errc::NotATree, "tree is not connected");

  EdgeList edges;
  int fresh = t + 1;
  for (const auto& [u, v] : tree_edges) {
    Edge e{label[u], label[v]};
    Edge rest = fresh_block(fresh, k - 2);
    fresh += k - 2;
    e.insert(e.end(), rest.begin(), rest.end());
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(k, std::move(edges));
}

Hypergraph gen_bicyclic(int k, int m, BicyclicVariant variant) {
  require(k >= 3, "bicyclic families need k >= 3");
  if (variant == BicyclicVariant::MaxDeg2) {
    require(m >= 2, "bicyclic families need m >= 2");
    if (m == 2) {
      require(k >= 4, "two distinct edges cannot share three vertices at k = 3");
      // two edges sharing three vertices
      Edge e1 = fresh_block(1, k);
      Edge e2{1, 2, 3};
      Edge rest = fresh_block(k + 1, k - 3);
      e2.insert(e2.end(), rest.begin(), rest.end());
      return Hypergraph::build(k, {e1, e2});
    }
    // loose cycle with the first middles of the first two edges identified
    Hypergraph cycle = gen_unicyclic(k, m, UnicyclicVariant::NoPendant);
    EdgeList edges = cycle.edges();
    for (Edge& e : edges)
      for (int& v : e)
        if (v == k + 1) v = 2;
    return Hypergraph::build(k, std::move(edges));
  }

  // Hub: one vertex on every edge; two extra double-links close two cycles.
  require(m >= 3, "the hub family needs m >= 3");
  EdgeList edges;
  int fresh = 4;
  {
    Edge e{1, 2};
    Edge rest = fresh_block(fresh, k - 2);
    fresh += k - 2;
    e.insert(e.end(), rest.begin(), rest.end());
    edges.push_back(std::move(e));
  }
  {
    Edge e{1, 2, 3};
    Edge rest = fresh_block(fresh, k - 3);
    fresh += k - 3;
    e.insert(e.end(), rest.begin(), rest.end());
    edges.push_back(std::move(e));
  }
  {
    Edge e{1, 3};
    Edge rest = fresh_block(fresh, k - 2);
    fresh += k - 2;
    e.insert(e.end(), rest.begin(), rest.end());
    edges.push_back(std::move(e));
  }
  for (int i = 3; i < m; ++i) {
    Edge e{1};
    Edge rest = fresh_block(fresh, k - 1);
    fresh += k - 1;
    e.insert(e.end(), rest.begin(), rest.end());
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(k, std::move(edges));
}

Hypergraph gen_chemical_tstar(int k, int m) {
  require(k >= 3, "chemical trees need k >= 3");
  require(m >= 1, "chemical trees need m >= 1");
  int a = (m - 1) / 3;
  int i = (m - 1) % 3;

  if (a == 0) return gen_hyperstar(k, m);  // degrees stay within 1..3

  EdgeList edges;
  int fresh = 2;
  int hub = 1;
  int last_edge_mark = 0;  // first fresh vertex of the hub's last edge
  for (int j = 0; j < 4; ++j) {
    Edge e{hub};
    last_edge_mark = fresh;
    Edge rest = fresh_block(fresh, k - 1);
    fresh += k - 1;
    e.insert(e.end(), rest.begin(), rest.end());
    edges.push_back(std::move(e));
  }
  for (int h = 2; h <= a; ++h) {
    hub = last_edge_mark;  // sits in the previous hub's last edge
    for (int j = 0; j < 3; ++j) {
      Edge e{hub};
      last_edge_mark = fresh;
      Edge rest = fresh_block(fresh, k - 1);
      fresh += k - 1;
      e.insert(e.end(), rest.begin(), rest.end());
      edges.push_back(std::move(e));
    }
  }
  if (i > 0) {
    int w = last_edge_mark;  // picks up i extra edges, degree i+1
    for (int j = 0; j < i; ++j) {
      Edge e{w};
      Edge rest = fresh_block(fresh, k - 1);
      fresh += k - 1;
      e.insert(e.end(), rest.begin(), rest.end());
      edges.push_back(std::move(e));
    }
  }
  return Hypergraph::build(k, std::move(edges));
}

Hypergraph generate(const FamilyDescriptor& desc) {
  switch (desc.family) {
    case FamilyId::Hyperstar: return gen_hyperstar(desc.k, desc.m);
    case FamilyId::LoosePath: return gen_loose_path(desc.k, desc.m);
    case FamilyId::TreePower:
      if (desc.tree_edges.empty())
        fail(Errc::BadParameters, "tree power needs a tree edge list");
      return gen_tree_power(desc.tree_edges, desc.k);
    case FamilyId::LooseCycle: return gen_loose_cycle(desc.k, desc.m);
    case FamilyId::UniNoPendant:
      return gen_unicyclic(desc.k, desc.m, UnicyclicVariant::NoPendant);
    case FamilyId::UniTightPair:
      return gen_unicyclic(desc.k, desc.m, UnicyclicVariant::TightPair);
    case FamilyId::BiMaxDeg2:
      return gen_bicyclic(desc.k, desc.m, BicyclicVariant::MaxDeg2);
    case FamilyId::BiHub:
      return gen_bicyclic(desc.k, desc.m, BicyclicVariant::Hub);
    case FamilyId::ChemTStar: return gen_chemical_tstar(desc.k, desc.m);
  }
  fail(Errc::BadParameters, "unknown family");
}

ChemicalCounts chemical_counts(int k, int m) {
  require(k >= 3, "chemical counts need k >= 3");
  require(m >= 1, "chemical counts need m >= 1");
  ChemicalCounts out;
  long long n = static_cast<long long>(m) * (k - 1) + 1;
  out.a = (m - 1) / 3;
  out.i = (m - 1) % 3;
  out.b = out.i == 2 ? 1 : 0;
  out.c = out.i == 1 ? 1 : 0;
  out.d = n - out.a - out.b - out.c;
  return out;
}

const char* class_name(GraphClass c) {
  switch (c) {
    case GraphClass::Hypertree: return "HYPERTREE";
    case GraphClass::Unicyclic: return "UNICYCLIC";
    case GraphClass::Bicyclic: return "BICYCLIC";
    case GraphClass::Chemical: return "CHEMICAL";
  }
  return "UNKNOWN";
}

GraphClass class_from_string(const std::string& s) {
  if (s == "HYPERTREE") return GraphClass::Hypertree;
  if (s == "UNICYCLIC") return GraphClass::Unicyclic;
  if (s == "BICYCLIC") return GraphClass::Bicyclic;
  if (s == "CHEMICAL") return GraphClass::Chemical;
  fail(Errc::BadParameters, "unknown graph class: " + s);
}

namespace {

DegreeSequence sequence_of_runs(
    const std::vector<std::pair<int, long long>>& runs) {
  std::vector<int> values;
  for (const auto& [value, count] : runs)
    for (long long i = 0; i < count; ++i) values.push_back(value);
  return DegreeSequence::of(std::move(values));
}

// log2(S) - (1/S) * sum count * x * log2(x), the published closed form.
// S is always k(k-1)m; the bracket multiset need not sum to S, which is
// exactly what makes some published bounds internally inconsistent.
double closed_form(long long S,
                   const std::vector<std::pair<int, long long>>& runs) {
  double bracket = 0.0;
  for (const auto& [value, count] : runs)
    if (value > 0)
      bracket += static_cast<double>(count) * static_cast<double>(value) *
                 std::log2(static_cast<double>(value));
  return std::log2(static_cast<double>(S)) - bracket / static_cast<double>(S);
}

}  // namespace

BoundsResult bounds(GraphClass c, int k, int m) {
  require(k >= 3, "bounds need k >= 3");
  require(m >= 2, "bounds need m >= 2");

  BoundsResult r;
  r.graph_class = c;
  r.k = k;
  r.m = m;
  long long S = static_cast<long long>(k) * (k - 1) * m;

  switch (c) {
    case GraphClass::Hypertree: {
      r.n = m * (k - 1) + 1;
      std::vector<std::pair<int, long long>> lower = {
          {m * (k - 1), 1}, {k - 1, r.n - 1}};
      std::vector<std::pair<int, long long>> upper = {
          {2 * k - 2, m - 1}, {k - 1, r.n - m + 1}};
      r.i_lower = closed_form(S, lower);
      r.i_upper = closed_form(S, upper);
      r.lower_witness_sequence = sequence_of_runs(lower);
      r.upper_witness_sequence = sequence_of_runs(upper);
      break;
    }
    case GraphClass::Unicyclic: {
      r.n = m * (k - 1);
      std::vector<std::pair<int, long long>> lower = {{2 * k - 3, 2},
                                                      {k - 1, r.n - 2}};
      std::vector<std::pair<int, long long>> upper = {{2 * k - 2, m},
                                                      {k - 1, r.n - m}};
      r.i_lower = closed_form(S, lower);
      r.i_upper = closed_form(S, upper);
      r.lower_witness_sequence = sequence_of_runs(lower);
      r.upper_witness_sequence = sequence_of_runs(upper);
      break;
    }
    case GraphClass::Bicyclic: {
      r.n = m * (k - 1) - 1;
      std::vector<std::pair<int, long long>> lower_printed = {
          {m * k - k, 1}, {2 * k - 3, 2}, {k - 1, r.n - 3}};
      std::vector<std::pair<int, long long>> lower_defn = {
          {m * k - m, 1}, {2 * k - 3, 2}, {k - 1, r.n - 3}};
      std::vector<std::pair<int, long long>> upper = {{2 * k - 2, m + 1},
                                                      {k - 1, r.n - m - 1}};
      r.i_lower_printed = closed_form(S, lower_printed);
      r.i_lower_definitional = closed_form(S, lower_defn);
      r.i_lower = *r.i_lower_printed;
      r.i_upper = closed_form(S, upper);
      r.lower_witness_sequence = sequence_of_runs(lower_printed);
      r.upper_witness_sequence = sequence_of_runs(upper);
      break;
    }
    case GraphClass::Chemical: {
      r.n = m * (k - 1) + 1;
      ChemicalCounts cc = chemical_counts(k, m);
      std::vector<std::pair<int, long long>> lower;
      if (cc.a > 0) lower.push_back({4 * k - 4, cc.a});
      if (cc.i > 0) lower.push_back({(cc.i + 1) * (k - 1), 1});
      lower.push_back({k - 1, cc.d});
      std::vector<std::pair<int, long long>> upper = {
          {2 * k - 2, m - 1}, {k - 1, r.n - m + 1}};
      r.i_lower = closed_form(S, lower);
      r.i_upper = closed_form(S, upper);
      r.lower_witness_sequence = sequence_of_runs(lower);
      r.upper_witness_sequence = sequence_of_runs(upper);
      r.chem_counts = cc;
      break;
    }
  }
  return r;
}

}  // namespace hyperent
