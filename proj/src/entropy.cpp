#include "hyperent/entropy.hpp"

#include <cmath>
#include <numeric>

namespace hyperent {

double shannon_entropy(std::span<const double> weights) {
  if (weights.empty())
    fail(Errc::NonPositiveWeight, "weight list is empty");
  for (double w : weights)
    if (!(w > 0.0))
      fail(Errc::NonPositiveWeight, "weights must be strictly positive");

  bool all_equal = true;
  for (double w : weights)
    if (w != weights[0]) {
      all_equal = false;
      break;
    }
  if (all_equal) return std::log2(static_cast<double>(weights.size()));

  double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  double acc = 0.0;
  for (double w : weights) {
    double p = w / total;
    acc -= p * std::log2(p);
  }
  return acc;
}

double shannon_entropy(std::span<const int> weights) {
  std::vector<double> w(weights.begin(), weights.end());
  return shannon_entropy(std::span<const double>(w));
}

double h_of_values(std::span<const int> degrees) {
  double acc = 0.0;
  for (int d : degrees) {
    if (d < 0) fail(Errc::NonPositiveWeight, "degrees must be nonnegative");
    if (d > 0) acc += static_cast<double>(d) * std::log2(static_cast<double>(d));
  }
  return acc;
}

double h_value(const Hypergraph& h, AdjacencyConvention conv) {
  LaplacianDegrees ld = laplacian_degrees(h, conv);
  return h_of_values(ld.sequence.values);
}

double entropy_laplacian(const Hypergraph& h, AdjacencyConvention conv) {
  LaplacianDegrees ld = laplacian_degrees(h, conv);
  return shannon_entropy(std::span<const int>(ld.sequence.values));
}

double entropy_degree(const Hypergraph& h) {
  DegreeSequence seq = DegreeSequence::of(vertex_degrees(h));
  return shannon_entropy(std::span<const int>(seq.values));
}

EntropyReport full_report(const Hypergraph& h) {
  EntropyReport r;
  r.k = h.k();
  r.m = h.m();
  r.n = h.n();
  LaplacianDegrees mult =
      laplacian_degrees(h, AdjacencyConvention::Multiplicity);
  LaplacianDegrees bin = laplacian_degrees(h, AdjacencyConvention::Binary);
  r.sum_delta_multiplicity = mult.sequence.sum();
  r.sum_delta_binary = bin.sequence.sum();
  r.h_multiplicity = h_of_values(mult.sequence.values);
  r.h_binary = h_of_values(bin.sequence.values);
  r.i_delta_multiplicity =
      shannon_entropy(std::span<const int>(mult.sequence.values));
  r.i_delta_binary = shannon_entropy(std::span<const int>(bin.sequence.values));
  r.i_degree = entropy_degree(h);
  return r;
}

}  // namespace hyperent
