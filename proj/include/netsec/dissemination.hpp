// Copyright 2026 The netsec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "netsec/graph.hpp"

namespace netsec {

enum class DisseminationMethod { ClosedForm, Enumeration, MonteCarlo };

std::string_view to_string(DisseminationMethod m);
// "closed", "exact" or "mc".
DisseminationMethod parse_method(std::string_view name);

// Reach-probability matrix P and expected-document vector D.
//
// P(i,j) is the probability that j holds i's document after independent
// edge transmission with probability p. P is symmetric with unit diagonal
// (an agent always holds its own document) and D(i) = sum_j P(j,i).
struct Dissemination {
  Eigen::MatrixXd P;
  Eigen::VectorXd D;
  DisseminationMethod method = DisseminationMethod::ClosedForm;
  // Monte Carlo only: standard error of each P entry.
  std::optional<Eigen::MatrixXd> std_err;

  int size() const { return static_cast<int>(D.size()); }
};

// Column sums of P.
Eigen::VectorXd expected_documents(const Eigen::MatrixXd& P);
inline Eigen::VectorXd expected_documents(const Dissemination& d) {
  return expected_documents(d.P);
}

// Exact P by summing over all 2^|E| transmission subgraphs. This is the
// reference every other method is checked against. Throws
// SizeLimitExceeded when |E| > kMaxEnumerationEdges.
Dissemination p_matrix_enumerate(const Graph& g, double p);

// Closed forms for the tagged families:
//   Star:     P(0,leaf) = p, P(leaf,leaf') = p^2
//   Ring:     P(i,j) = p^d + p^(n-d) - p^n,  d = dist(i,j)
//   Complete: sum_{k=2..n} C(n-2,k-2) (1-p)^{k(n-k)} Q^k
// Throws Unsupported for Custom graphs.
Dissemination p_matrix_closed_form(const Graph& g, double p);

// Per-source Monte Carlo estimate with `samples` transmission subgraphs per
// source, pair-averaged so that the estimate is symmetric. Deterministic
// for a fixed seed regardless of the number of OpenMP threads.
Dissemination p_matrix_monte_carlo(const Graph& g, double p, std::int64_t samples,
                                   std::uint64_t seed);

// Dispatch on method; `samples`/`seed` are used by MonteCarlo only.
Dissemination disseminate(const Graph& g, double p, DisseminationMethod method,
                          std::int64_t samples = 100000, std::uint64_t seed = 0);

// Probability that a transmission subgraph of K_k is connected:
// Q^1 = 1, Q^k = 1 - sum_{l=1..k-1} C(k-1,l-1) (1-p)^{l(k-l)} Q^l.
double q_all_reach_complete(int k, double p);
// Q^1..Q^kmax, index 0 unused.
std::vector<double> q_all_reach_table(int kmax, double p);

// Off-diagonal reach probability on K_n: sum_{k=2..n} C(n-2,k-2)
// (1-p)^{k(n-k)} Q^k for n <= 30, the exploration walk above.
double p_pair_complete(int n, double p);
// Same probability as (E|C| - 1) / (n - 1), where |C| is the size of one
// node's component, from a breadth-first exploration with binomial
// offspring. O(n^3) and free of cancellation.
double p_pair_complete_by_exploration(int n, double p);

struct ProbabilityInterval {
  double lower;
  double upper;
};

// Bounds from paths of length <= 2 (lower) and from the last hop into j
// (upper): [1-(1-p)(1-p^2)^(n-2), 1-(1-p)^(n-1)].
ProbabilityInterval p_pair_complete_bounds(int n, double p);

// Expected documents for the tagged families without building P.
// Ring uses the polynomial form, which has no singularity at p = 1.
double ring_documents(int n, double p);
double complete_documents(int n, double p);
double star_center_documents(int n, double p);
double star_leaf_documents(int n, double p);
Eigen::VectorXd documents_closed_form(Topology kind, int n, double p);

// Smallest p with mean(D(p)) = n/2 to within `tolerance`, by bisection on
// the closed form. D is strictly increasing in p so the root is unique.
// For graphs whose D entries differ (Star) the mean of D is the target.
double find_p_for_half_n(const Graph& g, double tolerance = 1e-10);
double find_p_for_half_n(Topology kind, int n, double tolerance = 1e-10);

}  // namespace netsec
