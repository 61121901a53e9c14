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

#include "netsec/dissemination.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>

#include "netsec/error.hpp"
#include "netsec/params.hpp"
#include "netsec/reach_kernels.hpp"

namespace netsec {

namespace {

// Up to this size the Q^k recursion runs in extended precision; above it
// the pair probability comes from the exploration walk.
constexpr int kRecursionMax = 30;
constexpr double kClampWarnTolerance = 1e-12;

// The alternating sum for Q^k amplifies rounding by ~1e11 at k = 30.
#ifdef __SIZEOF_FLOAT128__
__extension__ typedef __float128 Wide;
#else
typedef long double Wide;
#endif

Wide wide_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Wide c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

Wide wide_power(Wide base, std::int64_t e) {
  Wide out = 1;
  for (; e > 0; e >>= 1) {
    if (e & 1) out *= base;
    base *= base;
  }
  return out;
}

double clamp_probability(double x, const char* what) {
  if (x >= 0.0 && x <= 1.0) return x;
  const double excess = x < 0.0 ? -x : x - 1.0;
  if (excess > kClampWarnTolerance) {
    std::clog << "netsec: warning: " << what << " = " << x
              << " left [0,1] by more than rounding; clamped\n";
  }
  return x < 0.0 ? 0.0 : 1.0;
}

Dissemination finish(Eigen::MatrixXd P, DisseminationMethod method) {
  Dissemination d;
  d.D = expected_documents(P);
  d.P = std::move(P);
  d.method = method;
  return d;
}

}  // namespace

std::string_view to_string(DisseminationMethod m) {
  switch (m) {
    case DisseminationMethod::ClosedForm:
      return "closed";
    case DisseminationMethod::Enumeration:
      return "exact";
    case DisseminationMethod::MonteCarlo:
      return "mc";
  }
  return "closed";
}

DisseminationMethod parse_method(std::string_view name) {
  if (name == "closed") return DisseminationMethod::ClosedForm;
  if (name == "exact") return DisseminationMethod::Enumeration;
  if (name == "mc") return DisseminationMethod::MonteCarlo;
  throw InvalidParameter("unknown method '" + std::string(name) +
                         "' (expected exact, closed or mc)");
}

Eigen::VectorXd expected_documents(const Eigen::MatrixXd& P) {
  return P.colwise().sum().transpose();
}

Dissemination p_matrix_enumerate(const Graph& g, double p) {
  check_probability(p);
  return finish(reach_enumerate_parallel(g, p), DisseminationMethod::Enumeration);
}

Dissemination p_matrix_closed_form(const Graph& g, double p) {
  check_probability(p);
  const int n = g.num_nodes();
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n);
  switch (g.topology()) {
    case Topology::Star:
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          P(i, j) = (i == 0 || j == 0) ? p : p * p;
        }
      }
      break;
    case Topology::Ring: {
      const double pn = std::pow(p, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          const int k = std::abs(i - j);
          const int d = std::min(k, n - k);
          P(i, j) = std::pow(p, d) + std::pow(p, n - d) - pn;
        }
      }
      break;
    }
    case Topology::Complete: {
      const double pair = p_pair_complete(n, p);
      P.setConstant(pair);
      P.diagonal().setOnes();
      break;
    }
    case Topology::Custom:
      throw Unsupported("no closed form for custom graphs; use enumeration or Monte Carlo");
  }
  return finish(std::move(P), DisseminationMethod::ClosedForm);
}

Dissemination p_matrix_monte_carlo(const Graph& g, double p, std::int64_t samples,
                                   std::uint64_t seed) {
  check_probability(p);
  const HitMatrix hits = reach_hits_parallel(g, p, samples, seed);
  const int n = g.num_nodes();
  const double s = static_cast<double>(samples);
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd se = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // Two independent binomial estimates of the same probability.
      const double est = static_cast<double>(hits(i, j) + hits(j, i)) / (2.0 * s);
      P(i, j) = P(j, i) = est;
      se(i, j) = se(j, i) = std::sqrt(est * (1.0 - est) / (2.0 * s));
    }
  }
  Dissemination d = finish(std::move(P), DisseminationMethod::MonteCarlo);
  d.std_err = std::move(se);
  return d;
}

Dissemination disseminate(const Graph& g, double p, DisseminationMethod method,
                          std::int64_t samples, std::uint64_t seed) {
  switch (method) {
    case DisseminationMethod::ClosedForm:
      return p_matrix_closed_form(g, p);
    case DisseminationMethod::Enumeration:
      return p_matrix_enumerate(g, p);
    case DisseminationMethod::MonteCarlo:
      return p_matrix_monte_carlo(g, p, samples, seed);
  }
  return p_matrix_closed_form(g, p);
}

namespace {

std::vector<Wide> wide_q_table(int kmax, double p) {
  const Wide miss = 1 - static_cast<Wide>(p);
  std::vector<Wide> Q(kmax + 1, 0);
  Q[1] = 1;
  for (int k = 2; k <= kmax; ++k) {
    // Probability that the component of a fixed node has exactly l nodes.
    Wide split = 0;
    for (int l = 1; l < k; ++l) {
      split += wide_binomial(k - 1, l - 1) * wide_power(miss, std::int64_t{l} * (k - l)) * Q[l];
    }
    Q[k] = 1 - split;
  }
  return Q;
}

}  // namespace

std::vector<double> q_all_reach_table(int kmax, double p) {
  check_probability(p);
  if (kmax < 1) throw InvalidParameter("q_all_reach: k must be >= 1");
  const auto wide = wide_q_table(kmax, p);
  std::vector<double> Q(kmax + 1, 0.0);
  for (int k = 1; k <= kmax; ++k) Q[k] = clamp_probability(static_cast<double>(wide[k]), "Q^k");
  return Q;
}

double q_all_reach_complete(int k, double p) { return q_all_reach_table(k, p)[k]; }

double p_pair_complete_by_exploration(int n, double p) {
  check_probability(p);
  if (n < 2) throw InvalidParameter("p_pair_complete: n must be >= 2");
  // binom[u][j] = Pr(Binomial(u, p) = j), built by Pascal's rule.
  std::vector<std::vector<double>> binom(n);
  binom[0] = {1.0};
  for (int u = 1; u < n; ++u) {
    binom[u].assign(u + 1, 0.0);
    for (int j = 0; j <= u; ++j) {
      if (j < u) binom[u][j] += (1.0 - p) * binom[u - 1][j];
      if (j > 0) binom[u][j] += p * binom[u - 1][j - 1];
    }
  }
  // mass[u]: probability that after t explored nodes, u nodes are unreached.
  // Active nodes number n - u - t; the walk stops when none are left.
  std::vector<double> mass(n, 0.0), next(n);
  mass[n - 1] = 1.0;
  double mean_component = 0.0;
  for (int t = 0; t < n; ++t) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int u = 0; u < n; ++u) {
      if (mass[u] == 0.0) continue;
      if (n - u - t == 0) {
        mean_component += mass[u] * (n - u);
        continue;
      }
      for (int j = 0; j <= u; ++j) next[u - j] += mass[u] * binom[u][j];
    }
    std::swap(mass, next);
  }
  for (int u = 0; u < n; ++u) mean_component += mass[u] * (n - u);
  return std::clamp((mean_component - 1.0) / (n - 1), 0.0, 1.0);
}

double p_pair_complete(int n, double p) {
  check_probability(p);
  if (n < 2) throw InvalidParameter("p_pair_complete: n must be >= 2");
  if (n > kRecursionMax) return p_pair_complete_by_exploration(n, p);
  const auto Q = wide_q_table(n, p);
  const Wide miss = 1 - static_cast<Wide>(p);
  Wide pair = 0;
  for (int k = 2; k <= n; ++k) {
    pair += wide_binomial(n - 2, k - 2) * wide_power(miss, std::int64_t{k} * (n - k)) * Q[k];
  }
  return clamp_probability(static_cast<double>(pair), "P_ij");
}

ProbabilityInterval p_pair_complete_bounds(int n, double p) {
  check_probability(p);
  if (n < 2) throw InvalidParameter("p_pair_complete_bounds: n must be >= 2");
  return {1.0 - (1.0 - p) * std::pow(1.0 - p * p, n - 2), 1.0 - std::pow(1.0 - p, n - 1)};
}

double ring_documents(int n, double p) {
  check_probability(p);
  if (n < 3) throw InvalidParameter("ring needs n >= 3");
  double geometric = 0.0;
  double pl = 1.0;
  for (int l = 1; l < n; ++l) {
    pl *= p;
    geometric += pl;
  }
  return 1.0 + 2.0 * geometric - (n - 1) * std::pow(p, n);
}

double complete_documents(int n, double p) { return 1.0 + (n - 1) * p_pair_complete(n, p); }

double star_center_documents(int n, double p) {
  check_probability(p);
  if (n < 2) throw InvalidParameter("star needs n >= 2");
  return (n - 1) * p + 1.0;
}

double star_leaf_documents(int n, double p) {
  check_probability(p);
  if (n < 2) throw InvalidParameter("star needs n >= 2");
  return (n - 2) * p * p + p + 1.0;
}

Eigen::VectorXd documents_closed_form(Topology kind, int n, double p) {
  switch (kind) {
    case Topology::Ring:
      return Eigen::VectorXd::Constant(n, ring_documents(n, p));
    case Topology::Complete:
      return Eigen::VectorXd::Constant(n, complete_documents(n, p));
    case Topology::Star: {
      Eigen::VectorXd D = Eigen::VectorXd::Constant(n, star_leaf_documents(n, p));
      D(0) = star_center_documents(n, p);
      return D;
    }
    case Topology::Custom:
      break;
  }
  throw Unsupported("no closed form for custom graphs");
}

double find_p_for_half_n(Topology kind, int n, double tolerance) {
  if (!(tolerance > 0.0)) throw InvalidParameter("tolerance must be positive");
  const double target = 0.5 * n;
  auto mean_d = [&](double p) { return documents_closed_form(kind, n, p).mean(); };
  if (mean_d(0.0) >= target - tolerance) return 0.0;
  if (mean_d(1.0) < target - tolerance) {
    throw Error("find_p_for_half_n: D(1) < n/2, impossible on a connected graph");
  }
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = mean_d(mid) - target;
    if (std::abs(f) <= tolerance) return mid;
    (f < 0.0 ? lo : hi) = mid;
    if (hi - lo < 1e-16) break;
  }
  return 0.5 * (lo + hi);
}

double find_p_for_half_n(const Graph& g, double tolerance) {
  if (g.topology() == Topology::Custom) {
    throw Unsupported("find_p_for_half_n needs a ring, star or complete topology");
  }
  return find_p_for_half_n(g.topology(), g.num_nodes(), tolerance);
}

}  // namespace netsec
