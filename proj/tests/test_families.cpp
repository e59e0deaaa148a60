#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include <doctest.h>

#include "hyperent/entropy.hpp"
#include "hyperent/families.hpp"

using namespace hyperent;

namespace {

constexpr double kTol = 1e-9;

bool near(double x, double ref, double tol = kTol) {
  return std::abs(x - ref) < tol;
}

DegreeSequence mult_seq(const Hypergraph& h) {
  return laplacian_degrees(h, AdjacencyConvention::Multiplicity).sequence;
}

// [head x head_count, k-1 x rest_count]
DegreeSequence two_run(int head, int head_count, int tail, int tail_count) {
  std::vector<int> v;
  for (int i = 0; i < head_count; ++i) v.push_back(head);
  for (int i = 0; i < tail_count; ++i) v.push_back(tail);
  return DegreeSequence::of(std::move(v));
}

}  // namespace

TEST_CASE("family names round trip") {
  for (FamilyId id :
       {FamilyId::Hyperstar, FamilyId::LoosePath, FamilyId::TreePower,
        FamilyId::LooseCycle, FamilyId::UniNoPendant, FamilyId::UniTightPair,
        FamilyId::BiMaxDeg2, FamilyId::BiHub, FamilyId::ChemTStar}) {
    CHECK(family_from_string(family_name(id)) == id);
  }
  CHECK_THROWS_AS(family_from_string("NO_SUCH_FAMILY"), Error);
}

TEST_CASE("hyperstar has one center and pendant blocks") {
  for (int k = 3; k <= 5; ++k) {
    for (int m = 1; m <= 6; ++m) {
      Hypergraph h = gen_hyperstar(k, m);
      int n = k + (m - 1) * (k - 1);
      CHECK(h.n() == n);
      CHECK(h.m() == m);
      CHECK(is_connected(h));
      CHECK(cyclomatic_number(h) == 0);
      CHECK(mult_seq(h) == two_run(m * (k - 1), 1, k - 1, n - 1));
    }
  }
  CHECK(gen_hyperstar(3, 3).edges() ==
        EdgeList{{1, 2, 3}, {1, 4, 5}, {1, 6, 7}});
}

TEST_CASE("loose path chains single-overlap edges") {
  for (int k = 3; k <= 5; ++k) {
    for (int m = 1; m <= 6; ++m) {
      Hypergraph h = gen_loose_path(k, m);
      int n = k + (m - 1) * (k - 1);
      CHECK(h.n() == n);
      CHECK(is_connected(h));
      CHECK(cyclomatic_number(h) == 0);
      CHECK(mult_seq(h) == two_run(2 * k - 2, m - 1, k - 1, n - m + 1));
    }
  }
  CHECK(gen_loose_path(3, 3).edges() ==
        EdgeList{{1, 2, 3}, {3, 4, 5}, {5, 6, 7}});
}

TEST_CASE("star and path coincide at m = 1 and m = 2") {
  for (int k = 3; k <= 5; ++k) {
    CHECK(canonical_form(gen_hyperstar(k, 1)) ==
          canonical_form(gen_loose_path(k, 1)));
    CHECK(canonical_form(gen_hyperstar(k, 2)) ==
          canonical_form(gen_loose_path(k, 2)));
  }
}

TEST_CASE("tree power of a path is the loose path") {
  std::vector<std::pair<int, int>> path_tree{{1, 2}, {2, 3}, {3, 4}};
  for (int k = 3; k <= 4; ++k) {
    Hypergraph h = gen_tree_power(path_tree, k);
    CHECK(canonical_form(h) == canonical_form(gen_loose_path(k, 3)));
  }
  // vertex ids in the tree are arbitrary
  std::vector<std::pair<int, int>> renamed{{10, 20}, {20, 30}, {30, 40}};
  CHECK(canonical_form(gen_tree_power(renamed, 3)) ==
        canonical_form(gen_loose_path(3, 3)));
}

TEST_CASE("tree power of a star is the hyperstar") {
  std::vector<std::pair<int, int>> star_tree{{1, 2}, {1, 3}, {1, 4}};
  CHECK(canonical_form(gen_tree_power(star_tree, 3)) ==
        canonical_form(gen_hyperstar(3, 3)));
  CHECK(canonical_form(gen_tree_power(star_tree, 5)) ==
        canonical_form(gen_hyperstar(5, 3)));
}

TEST_CASE("tree power rejects non-trees") {
  for (const auto& bad : std::vector<std::vector<std::pair<int, int>>>{
           {{1, 2}, {2, 3}, {3, 1}},  // cycle
           {{1, 2}, {3, 4}},          // disconnected
           {{1, 1}},                  // self-loop
           {{1, 2}, {1, 2}},          // duplicate edge
           {},                        // empty
       }) {
    try {
      gen_tree_power(bad, 3);
      FAIL("expected NotATree");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotATree);
    }
  }
}

TEST_CASE("no-pendant unicyclic matches its template") {
  for (int k = 3; k <= 5; ++k) {
    for (int m = 2; m <= 5; ++m) {
      Hypergraph h = gen_unicyclic(k, m, UnicyclicVariant::NoPendant);
      int n = m * (k - 1);
      CHECK(h.n() == n);
      CHECK(cyclomatic_number(h) == 1);
      CHECK(is_connected(h));
      for (int d : vertex_degrees(h)) CHECK(d <= 2);
      CHECK(mult_seq(h) == two_run(2 * k - 2, m, k - 1, n - m));
    }
  }
  CHECK(gen_loose_cycle(3, 3) == gen_unicyclic(3, 3, UnicyclicVariant::NoPendant));
  CHECK_THROWS_AS(gen_loose_cycle(3, 2), Error);  // a loose cycle needs m >= 3
}

TEST_CASE("tight pair exists only at m = 2") {
  Hypergraph h = gen_unicyclic(3, 2, UnicyclicVariant::TightPair);
  CHECK(h.edges() == EdgeList{{1, 2, 3}, {1, 2, 4}});
  CHECK(cyclomatic_number(h) == 1);
  CHECK(laplacian_degrees(h, AdjacencyConvention::Binary).sequence.values ==
        std::vector<int>{3, 3, 2, 2});
  CHECK(laplacian_degrees(h, AdjacencyConvention::Multiplicity)
            .sequence.values == std::vector<int>{4, 4, 2, 2});

  try {
    gen_unicyclic(3, 4, UnicyclicVariant::TightPair);
    FAIL("expected UnrealizableFamily");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnrealizableFamily);
  }
  try {
    gen_unicyclic(3, 1, UnicyclicVariant::TightPair);
    FAIL("expected BadParameters");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadParameters);
  }
}

TEST_CASE("max-degree-2 bicyclic graphs") {
  for (int k = 3; k <= 5; ++k) {
    for (int m = 3; m <= 5; ++m) {
      Hypergraph h = gen_bicyclic(k, m, BicyclicVariant::MaxDeg2);
      CHECK(h.n() == m * (k - 1) - 1);
      CHECK(cyclomatic_number(h) == 2);
      CHECK(is_connected(h));
      for (int d : vertex_degrees(h)) CHECK(d <= 2);
    }
  }
  // m = 2 needs room for a triple overlap
  Hypergraph two = gen_bicyclic(4, 2, BicyclicVariant::MaxDeg2);
  CHECK(two.n() == 5);
  CHECK(cyclomatic_number(two) == 2);
  try {
    gen_bicyclic(3, 2, BicyclicVariant::MaxDeg2);
    FAIL("expected BadParameters");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadParameters);
  }
}

TEST_CASE("hub bicyclic graphs put one vertex on every edge") {
  Hypergraph h = gen_bicyclic(3, 3, BicyclicVariant::Hub);
  CHECK(h.edges() == EdgeList{{1, 2, 3}, {1, 2, 4}, {1, 3, 5}});
  CHECK(cyclomatic_number(h) == 2);
  for (int k = 3; k <= 4; ++k) {
    for (int m = 3; m <= 6; ++m) {
      Hypergraph g = gen_bicyclic(k, m, BicyclicVariant::Hub);
      CHECK(g.n() == m * (k - 1) - 1);
      CHECK(cyclomatic_number(g) == 2);
      auto deg = vertex_degrees(g);
      CHECK(*std::max_element(deg.begin(), deg.end()) == m);  // the hub
      // hub multiplicity laplacian degree is m(k-1)
      auto lap = laplacian_degrees(g, AdjacencyConvention::Multiplicity);
      CHECK(lap.sequence.values.front() == m * (k - 1));
    }
  }
  CHECK_THROWS_AS(gen_bicyclic(3, 2, BicyclicVariant::Hub), Error);
}

TEST_CASE("chemical extremal trees") {
  // small m: plain hyperstar while degrees stay within four
  CHECK(canonical_form(gen_chemical_tstar(3, 2)) ==
        canonical_form(gen_hyperstar(3, 2)));
  CHECK(canonical_form(gen_chemical_tstar(3, 4)) ==
        canonical_form(gen_hyperstar(3, 4)));

  CHECK(mult_seq(gen_chemical_tstar(3, 4)).values ==
        std::vector<int>{8, 2, 2, 2, 2, 2, 2, 2, 2});
  CHECK(mult_seq(gen_chemical_tstar(3, 5)).values ==
        std::vector<int>{8, 4, 2, 2, 2, 2, 2, 2, 2, 2, 2});
  // two chained hubs at m = 7
  std::vector<int> expect7{8, 8};
  for (int i = 0; i < 13; ++i) expect7.push_back(2);
  CHECK(mult_seq(gen_chemical_tstar(3, 7)).values == expect7);

  for (int k = 3; k <= 4; ++k) {
    for (int m = 1; m <= 10; ++m) {
      Hypergraph h = gen_chemical_tstar(k, m);
      CHECK(h.m() == m);
      CHECK(h.n() == m * (k - 1) + 1);
      CHECK(cyclomatic_number(h) == 0);
      CHECK(is_connected(h));
      // ordinary degree histogram matches the count formulas
      ChemicalCounts cc = chemical_counts(k, m);
      long long hist[5] = {0, 0, 0, 0, 0};
      for (int d : vertex_degrees(h)) {
        REQUIRE(d >= 1);
        REQUIRE(d <= 4);
        ++hist[d];
      }
      CHECK(hist[4] == cc.a);
      CHECK(hist[3] == cc.b);
      CHECK(hist[2] == cc.c);
      CHECK(hist[1] == cc.d);
    }
  }
}

TEST_CASE("chemical count formulas") {
  // published small cases
  ChemicalCounts c4 = chemical_counts(3, 4);
  CHECK(c4 == ChemicalCounts{1, 0, 0, 8, 0});
  ChemicalCounts c5 = chemical_counts(3, 5);
  CHECK(c5 == ChemicalCounts{1, 0, 1, 9, 1});
  ChemicalCounts c6 = chemical_counts(3, 6);
  CHECK(c6 == ChemicalCounts{1, 1, 0, 11, 2});

  for (int k = 3; k <= 5; ++k) {
    for (int m = 2; m <= 20; ++m) {
      ChemicalCounts cc = chemical_counts(k, m);
      long long n = static_cast<long long>(m) * (k - 1) + 1;
      CHECK(cc.a + cc.b + cc.c + cc.d == n);
      CHECK(4 * cc.a + 3 * cc.b + 2 * cc.c + cc.d ==
            static_cast<long long>(k) * m);
      CHECK(3 * cc.a + cc.i + 1 == m);
    }
  }
}

TEST_CASE("generate dispatches on the descriptor") {
  FamilyDescriptor d;
  d.family = FamilyId::LoosePath;
  d.k = 3;
  d.m = 3;
  CHECK(generate(d) == gen_loose_path(3, 3));
  d.family = FamilyId::TreePower;
  d.tree_edges = {{1, 2}, {2, 3}};
  CHECK(generate(d) == gen_tree_power(d.tree_edges, 3));
  d.tree_edges.clear();
  CHECK_THROWS_AS(generate(d), Error);
}

TEST_CASE("published bound windows at reference parameters") {
  BoundsResult t33 = bounds(GraphClass::Hypertree, 3, 3);
  CHECK(t33.n == 7);
  CHECK(near(t33.i_lower, 2.64160416786859));
  CHECK(near(t33.i_upper, 2.72548055699787));
  CHECK(t33.lower_witness_sequence == two_run(6, 1, 2, 6));
  CHECK(t33.upper_witness_sequence == two_run(4, 2, 2, 5));
  CHECK(!t33.i_lower_printed.has_value());
  CHECK(!t33.chem_counts.has_value());

  BoundsResult t32 = bounds(GraphClass::Hypertree, 3, 2);
  CHECK(near(t32.i_lower, 2.25162916738782));
  CHECK(near(t32.i_upper, 2.25162916738782));

  BoundsResult u33 = bounds(GraphClass::Unicyclic, 3, 3);
  CHECK(u33.n == 6);
  CHECK(near(u33.i_upper, 2.50325833477565));
  CHECK(near(u33.i_lower, 3.19715972342415));  // published form, exceeds upper
  CHECK(u33.lower_witness_sequence == two_run(3, 2, 2, 4));
  CHECK(u33.upper_witness_sequence == two_run(4, 3, 2, 3));

  BoundsResult b33 = bounds(GraphClass::Bicyclic, 3, 3);
  CHECK(b33.n == 5);
  REQUIRE(b33.i_lower_printed.has_value());
  REQUIRE(b33.i_lower_definitional.has_value());
  // mk-k and mk-m coincide when m = k
  CHECK(near(*b33.i_lower_printed, 2.55772777873932));
  CHECK(near(*b33.i_lower_definitional, 2.55772777873932));
  CHECK(b33.i_lower == *b33.i_lower_printed);
  CHECK(near(b33.i_upper, 2.28103611255342));

  BoundsResult b34 = bounds(GraphClass::Bicyclic, 3, 4);
  CHECK(near(*b34.i_lower_printed, 2.66666666666667));
  CHECK(near(*b34.i_lower_definitional, 2.85538854220753));
  CHECK(near(b34.i_upper, 2.75162916738782));
  // printed hub degree mk-k = 9; its bracket sums to 23, not S = 24
  CHECK(b34.lower_witness_sequence.values ==
        std::vector<int>{9, 3, 3, 2, 2, 2, 2});

  BoundsResult c35 = bounds(GraphClass::Chemical, 3, 5);
  CHECK(near(c35.i_lower, 3.24022392894185));
  CHECK(near(c35.i_upper, 3.37355726227519));
  CHECK(c35.lower_witness_sequence.values ==
        std::vector<int>{8, 4, 2, 2, 2, 2, 2, 2, 2, 2, 2});
  REQUIRE(c35.chem_counts.has_value());
  CHECK(*c35.chem_counts == ChemicalCounts{1, 0, 1, 9, 1});

  BoundsResult c34 = bounds(GraphClass::Chemical, 3, 4);
  CHECK(near(c34.i_lower, 2.91829583405449));
  CHECK(near(c34.i_upper, 3.08496250072116));
}

TEST_CASE("closed forms agree with direct evaluation on their witnesses") {
  // wherever the published bracket multiset is a genuine delta sequence the
  // closed form equals the Shannon entropy of that sequence
  for (auto [cls, k, m] :
       std::vector<std::tuple<GraphClass, int, int>>{{GraphClass::Hypertree, 3, 3},
                                                     {GraphClass::Hypertree, 4, 5},
                                                     {GraphClass::Chemical, 3, 5},
                                                     {GraphClass::Chemical, 4, 7}}) {
    BoundsResult b = bounds(cls, k, m);
    double lower_direct = shannon_entropy(
        std::span<const int>(b.lower_witness_sequence.values));
    double upper_direct = shannon_entropy(
        std::span<const int>(b.upper_witness_sequence.values));
    CHECK(near(b.i_lower, lower_direct, 1e-12));
    CHECK(near(b.i_upper, upper_direct, 1e-12));
  }
}

TEST_CASE("bound witnesses are realized by the generators") {
  for (int m = 2; m <= 5; ++m) {
    CHECK(mult_seq(gen_hyperstar(3, m)) ==
          bounds(GraphClass::Hypertree, 3, m).lower_witness_sequence);
    CHECK(mult_seq(gen_loose_path(3, m)) ==
          bounds(GraphClass::Hypertree, 3, m).upper_witness_sequence);
    if (m >= 2)
      CHECK(mult_seq(gen_unicyclic(3, m, UnicyclicVariant::NoPendant)) ==
            bounds(GraphClass::Unicyclic, 3, m).upper_witness_sequence);
    if (m >= 3)
      CHECK(mult_seq(gen_bicyclic(3, m, BicyclicVariant::MaxDeg2)) ==
            bounds(GraphClass::Bicyclic, 3, m).upper_witness_sequence);
    CHECK(mult_seq(gen_chemical_tstar(3, m)) ==
          bounds(GraphClass::Chemical, 3, m).lower_witness_sequence);
    CHECK(mult_seq(gen_loose_path(3, m)) ==
          bounds(GraphClass::Chemical, 3, m).upper_witness_sequence);
  }
}

TEST_CASE("bounds parameter validation") {
  CHECK_THROWS_AS(bounds(GraphClass::Hypertree, 2, 3), Error);
  CHECK_THROWS_AS(bounds(GraphClass::Hypertree, 3, 1), Error);
  CHECK(class_from_string("UNICYCLIC") == GraphClass::Unicyclic);
  CHECK_THROWS_AS(class_from_string("RINGS"), Error);
}
