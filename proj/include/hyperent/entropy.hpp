#pragma once

#include <span>
#include <string>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

// Shannon entropy (base 2) of the distribution w_i / sum(w).  All weights
// must be strictly positive and the list nonempty.  When all weights are
// equal the result is exactly log2(count).
double shannon_entropy(std::span<const double> weights);
double shannon_entropy(std::span<const int> weights);

// sum of d * log2(d) over a degree list, with 0 * log2(0) taken as 0.
double h_of_values(std::span<const int> degrees);

// h(H): sum of delta_i * log2(delta_i) over Laplacian degrees.
double h_value(const Hypergraph& h, AdjacencyConvention conv);

// I_delta(H) = log2(sum delta) - h(H) / sum delta, evaluated as the Shannon
// entropy of the delta distribution.
double entropy_laplacian(const Hypergraph& h, AdjacencyConvention conv);

// Same functional over ordinary degrees d_v.
double entropy_degree(const Hypergraph& h);

struct EntropyReport {
  int k = 0;
  int m = 0;
  int n = 0;
  long long sum_delta_multiplicity = 0;
  long long sum_delta_binary = 0;
  double h_multiplicity = 0;
  double h_binary = 0;
  double i_delta_multiplicity = 0;
  double i_delta_binary = 0;
  double i_degree = 0;
};

EntropyReport full_report(const Hypergraph& h);

}  // namespace hyperent
