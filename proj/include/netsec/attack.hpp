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
#include <utility>
#include <vector>

namespace netsec {

// Optimal strategic attack for a given security vector.
//
// Solves   max_a  sum_i a_i (1-q_i) D_i - (omega/2) sum_i a_i^2
//          s.t.   a on the probability simplex.
// The solution is a_i = max(0, (1-q_i) D_i + lambda) / omega with lambda
// the unique root of sum_i max(0, (1-q_i) D_i + lambda) = omega.
struct AttackSolution {
  Eigen::VectorXd a;
  double lambda = 0.0;
  std::vector<int> active_set;  // ascending agent indices with a_i > 0

  int n_star() const { return static_cast<int>(active_set.size()); }
  bool is_active(int i) const;
};

// Agents' investments, each in [0,1].
class SecurityVector {
 public:
  // Throws InvalidParameter if any entry is outside [0,1].
  explicit SecurityVector(Eigen::VectorXd q);
  static SecurityVector uniform(int n, double level);

  const Eigen::VectorXd& values() const { return q_; }
  int size() const { return static_cast<int>(q_.size()); }
  double operator[](int i) const { return q_(i); }

 private:
  Eigen::VectorXd q_;
};

// Exact active-set solve. Sorts v_i = (1-q_i) D_i in descending order
// (stable by index) and takes the largest k with v_(k) + lambda_k > 1e-12,
// lambda_k = (omega - sum of the top k) / k. Requires omega >= 1 and
// D_i >= 1; throws InvalidParameter otherwise.
AttackSolution optimal_attack(const SecurityVector& q, const Eigen::VectorXd& D, double omega);

// Number of k in 1..n satisfying both acceptance conditions of the
// active-set scan exactly (no tolerance): v_(k) + lambda_k > 0 and
// (k == n or v_(k+1) + lambda_k <= 0). The optimum is unique, so this is 1
// on every instance; exposed for property tests.
int count_admissible_active_sizes(const SecurityVector& q, const Eigen::VectorXd& D, double omega);

// Largest KKT violation of `sol`: |v_i - omega a_i + lambda| over active i
// and max(0, v_i + lambda) over inactive i.
double kkt_residual(const AttackSolution& sol, const SecurityVector& q, const Eigen::VectorXd& D,
                    double omega);

// S(i,j) = d a*_j / d q_i, the response of agent j's attack probability to
// agent i's investment, valid in the interior of the current active-set
// region. For active i, j:
//   S(i,i) = -(n*-1) D_i / (omega n*),   S(i,j) = D_i / (omega n*).
// Rows and columns of inactive agents are zero. Each active row sums to 0.
Eigen::MatrixXd attack_sensitivity(const AttackSolution& sol, const Eigen::VectorXd& D,
                                   double omega);

// Pr{x_i = 1} = sum_j a_j (1-q_j) P(i,j).
double breach_probability(int i, const Eigen::VectorXd& a, const SecurityVector& q,
                          const Eigen::MatrixXd& P);
Eigen::VectorXd breach_probabilities(const Eigen::VectorXd& a, const SecurityVector& q,
                                     const Eigen::MatrixXd& P);

// E|x| = sum_j a_j (1-q_j) D_j.
double expected_stolen(const Eigen::VectorXd& a, const SecurityVector& q, const Eigen::VectorXd& D);

// expected_stolen - (omega/2) |a|^2. Throws InvalidParameter when `a` is
// off the simplex by more than 1e-9.
double attacker_payoff(const Eigen::VectorXd& a, const SecurityVector& q, const Eigen::VectorXd& D,
                       double omega);

struct StarAttack {
  double a_center;
  double a_leaf;
};

// Star with center investment q_center and every leaf at q_leaf. With
// Delta = (1-q_center) D_center - (1-q_leaf) D_leaf the attack is the
// corner (1, 0) when omega <= Delta, the corner (0, 1/(n-1)) when
// omega <= -(n-1) Delta, and otherwise
//   a_center = 1/n + (1-1/n) Delta / omega,  a_leaf = 1/n - Delta / (omega n).
StarAttack star_attack_closed_form(int n, double p, double q_center, double q_leaf, double omega);

}  // namespace netsec
