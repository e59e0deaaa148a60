#include "hyperent/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hyperent {

const char* convention_name(AdjacencyConvention conv) {
  return conv == AdjacencyConvention::Multiplicity ? "multiplicity" : "binary";
}

AdjacencyConvention convention_from_string(const std::string& s) {
  if (s == "multiplicity") return AdjacencyConvention::Multiplicity;
  if (s == "binary") return AdjacencyConvention::Binary;
  fail(Errc::BadParameters, "unknown adjacency convention: " + s);
}

Hypergraph Hypergraph::build(int k, EdgeList edges) {
  if (k < 2) fail(Errc::BadParameters, "edge size k must be at least 2");
  if (edges.empty()) fail(Errc::EmptyEdgeList, "hypergraph needs at least one edge");

  for (Edge& e : edges) {
    std::sort(e.begin(), e.end());
    if (!e.empty() && e.front() < 1)
      fail(Errc::BadParameters, "vertex ids must be positive integers");
    bool distinct = std::adjacent_find(e.begin(), e.end()) == e.end();
    if (static_cast<int>(e.size()) != k || !distinct) {
      std::ostringstream os;
      os << "edge has " << (std::set<int>(e.begin(), e.end()).size())
         << " distinct vertices, expected " << k;
      fail(Errc::NonUniformEdge, os.str());
    }
  }

  std::set<int> ids;
  for (const Edge& e : edges) ids.insert(e.begin(), e.end());
  int n = static_cast<int>(ids.size());

  bool contiguous = *ids.rbegin() == n;  // ids are exactly {1..n}
  if (!contiguous) {
    // relabel 1..n by first appearance over the given edge list
    std::map<int, int> order;
    int next = 1;
    for (const Edge& e : edges)
      for (int v : e)
        if (order.emplace(v, next).second) ++next;
    for (Edge& e : edges) {
      for (int& v : e) v = order.at(v);
      std::sort(e.begin(), e.end());
    }
  }

  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(Errc::DuplicateEdge, "duplicate edge in edge list");

  Hypergraph h;
  h.k_ = k;
  h.n_ = n;
  h.edges_ = std::move(edges);
  return h;
}

std::vector<std::vector<int>> Hypergraph::incidence() const {
  std::vector<std::vector<int>> inc(static_cast<size_t>(n_) + 1);
  for (int ei = 0; ei < m(); ++ei)
    for (int v : edges_[static_cast<size_t>(ei)])
      inc[static_cast<size_t>(v)].push_back(ei);
  return inc;
}

int connected_components(const Hypergraph& h) {
  int n = h.n();
  std::vector<int> comp(static_cast<size_t>(n) + 1, 0);
  auto inc = h.incidence();
  int count = 0;
  for (int start = 1; start <= n; ++start) {
    if (comp[static_cast<size_t>(start)] != 0) continue;
    ++count;
    std::vector<int> stack{start};
    comp[static_cast<size_t>(start)] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int ei : inc[static_cast<size_t>(v)])
        for (int u : h.edges()[static_cast<size_t>(ei)])
          if (comp[static_cast<size_t>(u)] == 0) {
            comp[static_cast<size_t>(u)] = count;
            stack.push_back(u);
          }
    }
  }
  return count;
}

bool is_connected(const Hypergraph& h) { return connected_components(h) == 1; }

int cyclomatic_number(const Hypergraph& h) {
  return h.m() * (h.k() - 1) - h.n() + connected_components(h);
}

std::vector<int> vertex_degrees(const Hypergraph& h) {
  std::vector<int> deg(static_cast<size_t>(h.n()), 0);
  for (const Edge& e : h.edges())
    for (int v : e) ++deg[static_cast<size_t>(v - 1)];
  return deg;
}

Matrix adjacency_matrix(const Hypergraph& h, AdjacencyConvention conv) {
  size_t n = static_cast<size_t>(h.n());
  Matrix a(n, std::vector<long long>(n, 0));
  for (const Edge& e : h.edges())
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j) {
        size_t u = static_cast<size_t>(e[i] - 1);
        size_t v = static_cast<size_t>(e[j] - 1);
        ++a[u][v];
        ++a[v][u];
      }
  if (conv == AdjacencyConvention::Binary)
    for (auto& row : a)
      for (long long& x : row)
        if (x > 1) x = 1;
  return a;
}

DegreeSequence DegreeSequence::of(std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<int>());
  return DegreeSequence{std::move(values)};
}

long long DegreeSequence::sum() const {
  return std::accumulate(values.begin(), values.end(), 0LL);
}

std::vector<std::pair<int, int>> DegreeSequence::runs() const {
  std::vector<std::pair<int, int>> out;
  for (int v : values) {
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

std::string DegreeSequence::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << ']';
  return os.str();
}

LaplacianDegrees laplacian_degrees(const Hypergraph& h,
                                   AdjacencyConvention conv) {
  Matrix a = adjacency_matrix(h, conv);
  std::vector<int> per;
  per.reserve(a.size());
  for (const auto& row : a) {
    long long s = std::accumulate(row.begin(), row.end(), 0LL);
    per.push_back(static_cast<int>(s));
  }
  return LaplacianDegrees{per, DegreeSequence::of(per)};
}

std::string CanonicalForm::key() const {
  std::ostringstream os;
  os << k << ':' << n;
  for (const Edge& e : edges) {
    os << ';';
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) os << ',';
      os << e[i];
    }
  }
  return os.str();
}

namespace {

// One connected piece of a hypergraph, vertices relabeled 1..size ascending.
struct Component {
  int size = 0;
  EdgeList edges;
};

std::vector<Component> split_components(const Hypergraph& h) {
  int n = h.n();
  std::vector<int> comp(static_cast<size_t>(n) + 1, 0);
  auto inc = h.incidence();
  int count = 0;
  for (int start = 1; start <= n; ++start) {
    if (comp[static_cast<size_t>(start)] != 0) continue;
    ++count;
    std::vector<int> stack{start};
    comp[static_cast<size_t>(start)] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int ei : inc[static_cast<size_t>(v)])
        for (int u : h.edges()[static_cast<size_t>(ei)])
          if (comp[static_cast<size_t>(u)] == 0) {
            comp[static_cast<size_t>(u)] = count;
            stack.push_back(u);
          }
    }
  }

  // local ids: ascending original id order within each component
  std::vector<int> local(static_cast<size_t>(n) + 1, 0);
  std::vector<int> next(static_cast<size_t>(count) + 1, 0);
  for (int v = 1; v <= n; ++v)
    local[static_cast<size_t>(v)] = ++next[static_cast<size_t>(comp[static_cast<size_t>(v)])];

  std::vector<Component> parts(static_cast<size_t>(count));
  for (int c = 1; c <= count; ++c)
    parts[static_cast<size_t>(c - 1)].size = next[static_cast<size_t>(c)];
  for (const Edge& e : h.edges()) {
    int c = comp[static_cast<size_t>(e.front())];
    Edge mapped;
    mapped.reserve(e.size());
    for (int v : e) mapped.push_back(local[static_cast<size_t>(v)]);
    std::sort(mapped.begin(), mapped.end());
    parts[static_cast<size_t>(c - 1)].edges.push_back(std::move(mapped));
  }
  for (Component& p : parts) std::sort(p.edges.begin(), p.edges.end());
  return parts;
}

// Iterated refinement: start from ordinary degree, then repeatedly fold in
// the sorted color signatures of incident edges until stable.  Returns a
// color per vertex (1-based index), colors numbered by signature rank.
std::vector<int> refine_colors(int n, const EdgeList& edges) {
  std::vector<std::vector<int>> inc(static_cast<size_t>(n) + 1);
  for (size_t ei = 0; ei < edges.size(); ++ei)
    for (int v : edges[ei]) inc[static_cast<size_t>(v)].push_back(static_cast<int>(ei));

  std::vector<int> color(static_cast<size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v)
    color[static_cast<size_t>(v)] = static_cast<int>(inc[static_cast<size_t>(v)].size());

  auto normalize = [&](auto& keyed) {
    std::vector<std::remove_reference_t<decltype(keyed[1])>> sorted(
        keyed.begin() + 1, keyed.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    int classes = static_cast<int>(sorted.size());
    for (int v = 1; v <= n; ++v) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(),
                                 keyed[static_cast<size_t>(v)]);
      color[static_cast<size_t>(v)] =
          static_cast<int>(it - sorted.begin()) + 1;
    }
    return classes;
  };

  int classes = 0;
  {
    std::vector<int> keyed(color);
    classes = normalize(keyed);
  }

  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> edge_sig(edges.size());
    for (size_t ei = 0; ei < edges.size(); ++ei) {
      for (int v : edges[ei]) edge_sig[ei].push_back(color[static_cast<size_t>(v)]);
      std::sort(edge_sig[ei].begin(), edge_sig[ei].end());
    }
    using Sig = std::pair<int, std::vector<std::vector<int>>>;
    std::vector<Sig> sig(static_cast<size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
      Sig s;
      s.first = color[static_cast<size_t>(v)];
      for (int ei : inc[static_cast<size_t>(v)])
        s.second.push_back(edge_sig[static_cast<size_t>(ei)]);
      std::sort(s.second.begin(), s.second.end());
      sig[static_cast<size_t>(v)] = std::move(s);
    }
    int now = normalize(sig);
    if (now == classes) break;
    classes = now;
  }
  return color;
}

EdgeList relabeled_sorted(const EdgeList& edges, const std::vector<int>& perm) {
  EdgeList out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    Edge mapped;
    mapped.reserve(e.size());
    for (int v : e) mapped.push_back(perm[static_cast<size_t>(v)]);
    std::sort(mapped.begin(), mapped.end());
    out.push_back(std::move(mapped));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimum relabeled edge list over all label assignments that respect the
// refinement blocks (block b's vertices get the labels reserved for b).
// Vertices with identical incidence sets are interchangeable: swapping two
// of them maps every edge to itself, so the relabeled edge list depends only
// on which incidence class sits at each label position.  Within a class the
// search therefore keeps vertices in ascending order and permutes class
// positions only, which collapses the factorial blowup on pendant-heavy
// graphs without changing the minimum.
EdgeList min_over_blocks(const Component& part, const std::vector<int>& color) {
  int n = part.size;
  std::map<int, std::vector<int>> blocks;  // color -> vertices, ascending
  for (int v = 1; v <= n; ++v) blocks[color[static_cast<size_t>(v)]].push_back(v);

  std::vector<std::vector<int>> groups;
  groups.reserve(blocks.size());
  for (auto& [c, verts] : blocks) groups.push_back(verts);

  std::map<std::vector<int>, int> class_ids;  // incidence set -> class id
  std::vector<int> cls(static_cast<size_t>(n) + 1, 0);
  {
    std::vector<std::vector<int>> vinc(static_cast<size_t>(n) + 1);
    for (size_t ei = 0; ei < part.edges.size(); ++ei)
      for (int v : part.edges[ei])
        vinc[static_cast<size_t>(v)].push_back(static_cast<int>(ei));
    for (int v = 1; v <= n; ++v)
      cls[static_cast<size_t>(v)] =
          class_ids.emplace(vinc[static_cast<size_t>(v)],
                            static_cast<int>(class_ids.size()))
              .first->second;
  }

  std::vector<int> perm(static_cast<size_t>(n) + 1, 0);
  EdgeList best;
  bool have = false;

  // depth-first product of per-group class arrangements
  std::vector<int> starts;
  {
    int at = 1;
    for (const auto& g : groups) {
      starts.push_back(at);
      at += static_cast<int>(g.size());
    }
  }

  auto rec = [&](auto&& self, size_t gi) -> void {
    if (gi == groups.size()) {
      EdgeList cand = relabeled_sorted(part.edges, perm);
      if (!have || cand < best) {
        best = std::move(cand);
        have = true;
      }
      return;
    }
    const std::vector<int>& verts = groups[gi];  // sorted ascending
    int start = starts[gi];
    std::map<int, std::vector<int>> by_class;  // class id -> vertices ascending
    for (int v : verts) by_class[cls[static_cast<size_t>(v)]].push_back(v);
    std::vector<int> seq;
    seq.reserve(verts.size());
    for (int v : verts) seq.push_back(cls[static_cast<size_t>(v)]);
    std::sort(seq.begin(), seq.end());
    do {
      std::map<int, size_t> cursor;
      for (size_t i = 0; i < seq.size(); ++i) {
        int v = by_class[seq[i]][cursor[seq[i]]++];
        perm[static_cast<size_t>(v)] = start + static_cast<int>(i);
      }
      self(self, gi + 1);
    } while (std::next_permutation(seq.begin(), seq.end()));
  };
  rec(rec, 0);
  return best;
}

}  // namespace

CanonicalForm canonical_form(const Hypergraph& h, int vertex_limit) {
  if (h.n() > vertex_limit) {
    std::ostringstream os;
    os << "canonicalization limited to " << vertex_limit << " vertices, got "
       << h.n();
    fail(Errc::TooLarge, os.str());
  }

  std::vector<Component> parts = split_components(h);

  struct Canon {
    int size;
    EdgeList edges;
    bool operator<(const Canon& o) const {
      return std::tie(size, edges) < std::tie(o.size, o.edges);
    }
  };
  std::vector<Canon> canons;
  canons.reserve(parts.size());
  for (const Component& p : parts) {
    std::vector<int> color = refine_colors(p.size, p.edges);
    canons.push_back(Canon{p.size, min_over_blocks(p, color)});
  }
  std::sort(canons.begin(), canons.end());

  CanonicalForm cf;
  cf.k = h.k();
  cf.n = h.n();
  int offset = 0;
  for (const Canon& c : canons) {
    for (const Edge& e : c.edges) {
      Edge shifted;
      shifted.reserve(e.size());
      for (int v : e) shifted.push_back(v + offset);
      cf.edges.push_back(std::move(shifted));
    }
    offset += c.size;
  }
  std::sort(cf.edges.begin(), cf.edges.end());
  return cf;
}

}  // namespace hyperent
