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

#include <gtest/gtest.h>

#include <random>

#include "netsec/dissemination.hpp"
#include "netsec/error.hpp"
#include "netsec/game.hpp"
#include "netsec/graph.hpp"
#include "oracles.hpp"

namespace netsec {
namespace {

Dissemination closed(Topology kind, int n, double p) {
  return p_matrix_closed_form(build_topology(kind, n), p);
}

TEST(Regime, Names) {
  for (Regime r :
       {Regime::NashRandom, Regime::OptRandom, Regime::NashStrategic, Regime::OptStrategic}) {
    EXPECT_EQ(parse_regime(to_string(r)), r);
  }
  EXPECT_THROW(parse_regime("stackelberg"), InvalidParameter);
}

TEST(Params, Validation) {
  EXPECT_NO_THROW(Params(0.0, 1.0, 1.0));
  EXPECT_THROW(Params(-0.1, 1.0, 1.0), InvalidParameter);
  EXPECT_THROW(Params(0.5, 0.9, 1.0), InvalidParameter);
  EXPECT_THROW(Params(0.5, 1.0, 0.5), InvalidParameter);
  EXPECT_THROW(Params(std::nan(""), 1.0, 1.0), InvalidParameter);
}

TEST(NashRandom, Formula) {
  EXPECT_DOUBLE_EQ(nash_random(5, 1.0)[0], 0.2);
  EXPECT_DOUBLE_EQ(nash_random(4, 2.0)[3], 0.125);
  EXPECT_DOUBLE_EQ(nash_random(1000000, 1.0)[0], 1e-6);
}

TEST(OptRandom, StarFormulas) {
  const int n = 6;
  for (int k = 0; k <= 10; ++k) {
    const double p = k / 10.0;
    const auto q = social_optimum_random(closed(Topology::Star, n, p).D, 1.0);
    EXPECT_NEAR(q[0], ((n - 1) * p + 1) / n, 1e-15);
    EXPECT_NEAR(q[1], ((n - 2) * p * p + p + 1) / n, 1e-15);
  }
  const auto at_zero = social_optimum_random(closed(Topology::Ring, 7, 0.0).D, 2.0);
  EXPECT_EQ(at_zero.values(), nash_random(7, 2.0).values());
}

TEST(OptRandom, CompleteAboveRing) {
  const double complete = social_optimum_random(closed(Topology::Complete, 20, 0.9).D, 1.0)[0];
  const double ring = social_optimum_random(closed(Topology::Ring, 20, 0.9).D, 1.0)[0];
  // P_ij >= the lower pair bound, so D >= 1 + (n-1) * lower.
  const double lower = p_pair_complete_bounds(20, 0.9).lower;
  EXPECT_GE(complete, (1.0 + 19 * lower) / 20 - 1e-12);
  EXPECT_GE(complete, ring);
}

TEST(OptStrategicVt, EqualsRandomOptimum) {
  for (Topology kind : {Topology::Ring, Topology::Complete}) {
    for (int k = 0; k <= 20; ++k) {
      const auto d = closed(kind, 6, k / 20.0);
      EXPECT_LT((social_optimum_strategic_vt(d.D, 1.5).values() -
                 social_optimum_random(d.D, 1.5).values())
                    .cwiseAbs()
                    .maxCoeff(),
                1e-14);
    }
  }
  EXPECT_DOUBLE_EQ(social_optimum_strategic_vt(6.0, 6, 2.0)[0], 0.5);
  EXPECT_NEAR(social_optimum_strategic_vt(ring_documents(5, 0.5), 5, 1.0)[0],
              ring_documents(5, 0.5) / 5, 1e-15);
}

TEST(OptStrategicVt, RejectsUnequalDocuments) {
  EXPECT_THROW(social_optimum_strategic_vt(closed(Topology::Star, 5, 0.5).D, 1.0),
               PreconditionFailed);
  EXPECT_THROW(nash_strategic_vt(closed(Topology::Star, 5, 0.5).D, 1.0, 1.0), PreconditionFailed);
}

TEST(NashStrategicVt, Endpoints) {
  const int n = 7;
  const double alpha = 1.5, omega = 2.0;
  EXPECT_DOUBLE_EQ(nash_strategic_level(n, n, alpha, omega), 1.0 / (alpha * n));
  EXPECT_DOUBLE_EQ(nash_strategic_level(1.0, n, alpha, omega),
                   (n - 1 + omega) / (n - 1 + alpha * n * omega));
}

TEST(NashStrategicVt, LargeRingLimit) {
  const double p = 0.5;
  const double R = (1 + p) / (1 - p);
  // The gap to the limit shrinks like 1/n: about 1.6e-3 at n = 200.
  const double gap200 = R / (R + 1.0) - nash_strategic_vt(ring_documents(200, p), 200, 1.0, 1.0)[0];
  const double gap2000 =
      R / (R + 1.0) - nash_strategic_vt(ring_documents(2000, p), 2000, 1.0, 1.0)[0];
  EXPECT_GT(gap200, 0.0);
  EXPECT_LT(gap200, 2e-3);
  EXPECT_NEAR(gap2000 * 10.0, gap200, 5e-5);
}

TEST(EvaluateOutcome, RewardsAndWelfare) {
  const auto d = closed(Topology::Star, 5, 0.4);
  const Params params(0.4, 1.3, 1.7);
  Eigen::VectorXd qv(5);
  qv << 0.6, 0.1, 0.2, 0.3, 0.4;
  const SecurityVector q(qv);
  for (Regime r : {Regime::NashRandom, Regime::NashStrategic}) {
    const GameOutcome out = evaluate_outcome(q, d, params, r);
    EXPECT_NEAR(out.welfare, out.rewards.sum(), 1e-12);
    for (int i = 0; i < 5; ++i) {
      EXPECT_NEAR(out.rewards(i),
                  1.0 - breach_probability(i, out.attack.a, q, d.P) - 0.65 * qv(i) * qv(i), 1e-14);
    }
  }
  const GameOutcome random = evaluate_outcome(q, d, params, Regime::OptRandom);
  EXPECT_TRUE(random.attack.a.isConstant(0.2));
  EXPECT_TRUE(std::isnan(random.attack.lambda));
}

TEST(Gradients, RewardGradientMatchesFiniteDifference) {
  const auto d = closed(Topology::Star, 6, 0.5);
  const Params params(0.5, 1.0, 1.0);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.2, 0.8);
  int checked = 0;
  for (int t = 0; t < 50; ++t) {
    Eigen::VectorXd q(6);
    for (int i = 0; i < 6; ++i) q(i) = unit(rng);
    const auto sol = optimal_attack(SecurityVector(q), d.D, 1.0);
    for (int i = 0; i < 6; ++i) {
      // Skip points near an active-set boundary.
      auto support = [&](const Eigen::VectorXd& x) {
        return optimal_attack(SecurityVector(x), d.D, 1.0).active_set;
      };
      Eigen::VectorXd lo = q, hi = q;
      lo(i) -= 1e-5;
      hi(i) += 1e-5;
      if (support(lo) != sol.active_set || support(hi) != sol.active_set) continue;
      auto reward = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd r(1);
        r(0) = evaluate_outcome(SecurityVector(x), d, params, Regime::NashStrategic).rewards(i);
        return r;
      };
      const double fd = oracle::central_difference(reward, q, i, 1e-5)(0);
      EXPECT_NEAR(reward_gradient(i, q, d, params), fd, 1e-7);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Gradients, WelfareGradientMatchesFiniteDifference) {
  const auto d = p_matrix_enumerate(load_edge_list("0 1\n1 2\n2 3\n3 0\n0 2\n3 4\n"), 0.6);
  const Params params(0.6, 1.2, 1.0);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> unit(0.1, 0.9);
  for (int t = 0; t < 30; ++t) {
    Eigen::VectorXd q(5);
    for (int i = 0; i < 5; ++i) q(i) = unit(rng);
    const auto active = optimal_attack(SecurityVector(q), d.D, 1.0).active_set;
    const Eigen::VectorXd grad = welfare_gradient(q, d, params);
    auto welfare = [&](const Eigen::VectorXd& x) {
      Eigen::VectorXd r(1);
      r(0) = strategic_welfare(x, d, params);
      return r;
    };
    for (int i = 0; i < 5; ++i) {
      Eigen::VectorXd lo = q, hi = q;
      lo(i) -= 1e-5;
      hi(i) += 1e-5;
      if (optimal_attack(SecurityVector(lo), d.D, 1.0).active_set != active ||
          optimal_attack(SecurityVector(hi), d.D, 1.0).active_set != active) {
        continue;
      }
      EXPECT_NEAR(grad(i), oracle::central_difference(welfare, q, i, 1e-5)(0), 1e-7);
    }
    EXPECT_NEAR(strategic_welfare(q, d, params),
                evaluate_outcome(SecurityVector(q), d, params, Regime::OptStrategic).welfare,
                1e-12);
  }
}

TEST(BestResponse, MatchesClosedFormOnTransitiveGraphs) {
  for (Topology kind : {Topology::Complete, Topology::Ring}) {
    const Graph g = build_topology(kind, 5);
    const auto d = p_matrix_closed_form(g, 0.5);
    const Params params(0.5, 1.0, 1.0);
    const auto out = best_response_dynamics(g, d, params, SecurityVector::uniform(5, 0.5));
    const double expected = nash_strategic_level(d.D(0), 5, 1.0, 1.0);
    EXPECT_LT((out.q.values().array() - expected).abs().maxCoeff(), 1e-6) << to_string(kind);
    EXPECT_EQ(out.regime, Regime::NashStrategic);
    EXPECT_GT(out.iterations, 0);
  }
}

TEST(BestResponse, NoProfitableDeviation) {
  const Graph g = build_topology(Topology::Star, 5);
  for (double p : {0.2, 0.5, 0.8}) {
    const auto d = p_matrix_closed_form(g, p);
    const Params params(p, 1.0, 1.0);
    const auto eq = best_response_dynamics(g, d, params, SecurityVector::uniform(5, 0.5));
    for (int i = 0; i < 5; ++i) {
      for (int k = 0; k < 100; ++k) {
        Eigen::VectorXd dev = eq.q.values();
        dev(i) = k / 99.0;
        const double r =
            evaluate_outcome(SecurityVector(dev), d, params, Regime::NashStrategic).rewards(i);
        EXPECT_LE(r, eq.rewards(i) + 1e-7) << "p=" << p << " i=" << i << " q=" << dev(i);
      }
    }
  }
}

TEST(BestResponse, StarCurveShape) {
  const Graph g = build_topology(Topology::Star, 5);
  std::vector<double> center;
  for (int k = 0; k <= 50; ++k) {
    const double p = k / 50.0;
    const auto d = p_matrix_closed_form(g, p);
    center.push_back(
        best_response_dynamics(g, d, Params(p, 1.0, 1.0), SecurityVector::uniform(5, 0.5)).q[0]);
  }
  EXPECT_NEAR(center.back(), 0.2, 1e-6);
  const auto peak = std::max_element(center.begin(), center.end()) - center.begin();
  EXPECT_GT(peak, 0);
  EXPECT_LT(peak, 50);
  for (long k = 1; k <= peak; ++k) EXPECT_GE(center[k], center[k - 1] - 1e-9);
  for (long k = peak + 1; k <= 50; ++k) EXPECT_LE(center[k], center[k - 1] + 1e-9);
}

TEST(BestResponse, NonConvergenceCarriesIterate) {
  const Graph g = build_topology(Topology::Ring, 5);
  const auto d = p_matrix_closed_form(g, 0.5);
  try {
    best_response_dynamics(g, d, Params(0.5, 1.0, 1.0), SecurityVector::uniform(5, 0.9), 1e-300, 2);
    FAIL() << "expected NonConvergence";
  } catch (const NonConvergence& e) {
    EXPECT_EQ(e.last_iterate().size(), 5);
    EXPECT_EQ(e.iterations(), 2);
  }
}

TEST(SocialOptimumNumeric, MatchesClosedFormOnTransitiveGraphs) {
  for (Topology kind : {Topology::Ring, Topology::Complete}) {
    const Graph g = build_topology(kind, 5);
    const auto d = p_matrix_closed_form(g, 0.5);
    const Params params(0.5, 1.0, 1.0);
    const auto out = social_optimum_numeric(g, d, params);
    const auto ref = social_optimum_strategic_vt(d.D, 1.0);
    EXPECT_LT((out.q.values() - ref.values()).cwiseAbs().maxCoeff(), 1e-5) << to_string(kind);
    const double ref_welfare = evaluate_outcome(ref, d, params, Regime::OptStrategic).welfare;
    EXPECT_NEAR(out.welfare, ref_welfare, 1e-8);
    EXPECT_TRUE(optimal_attack(ref, d.D, 1.0).a.isConstant(0.2, 1e-15));
  }
}

TEST(SocialOptimumNumeric, StarBeatsLambAndFlattensAttack) {
  const Graph g = build_topology(Topology::Star, 5);
  for (double p : {0.3, 0.5, 0.7}) {
    const auto d = p_matrix_closed_form(g, p);
    const auto out = social_optimum_numeric(g, d, Params(p, 1.0, 1.0));
    EXPECT_LT(out.attack.a.maxCoeff() - out.attack.a.minCoeff(), 0.05) << p;
    EXPECT_GT(out.welfare, star_lamb_strategy(5, p, 1.0, 1.0).welfare_bound) << p;
  }
}

TEST(SocialOptimumNumeric, ZeroTransmission) {
  const Graph g = load_edge_list("0 1\n1 2\n2 3\n1 3\n");
  const auto d = p_matrix_enumerate(g, 0.0);
  const auto out = social_optimum_numeric(g, d, Params(0.0, 2.0, 1.0));
  EXPECT_LT((out.q.values().array() - 1.0 / 8).abs().maxCoeff(), 1e-6);
}

TEST(Strengthen, Condition) {
  EXPECT_FALSE(strengthen_condition(1.0, 5, 1.0));
  for (double D : {2.5, 3.0, 4.9, 5.0}) EXPECT_TRUE(strengthen_condition(D, 5, 1.0));
}

TEST(Strengthen, RingIntervalsAreOneRunToTheTop) {
  std::vector<double> grid;
  for (int k = 0; k <= 100; ++k) grid.push_back(k / 100.0);
  const auto runs = strengthen_intervals(Topology::Ring, 5, 1.0, grid);
  ASSERT_EQ(runs.size(), 1U);
  EXPECT_EQ(runs[0].hi, 1.0);
  EXPECT_GT(runs[0].lo, 0.0);
  for (double p : grid) {
    EXPECT_EQ(strengthen_condition(ring_documents(5, p), 5, 1.0), p >= runs[0].lo) << p;
  }
}

TEST(Crossover, EndpointsAndOrdering) {
  for (Topology kind : {Topology::Ring, Topology::Complete}) {
    const auto D0 = documents_closed_form(kind, 5, 0.0)(0);
    EXPECT_GT(nash_strategic_level(D0, 5, 1.0, 1.0), 0.2);
    EXPECT_EQ(social_optimum_strategic_level(5.0, 5, 1.0), 1.0);
    EXPECT_EQ(nash_strategic_level(5.0, 5, 1.0, 1.0), 0.2);
  }
  const auto ring = find_crossover_p(Topology::Ring, 5, 1.0, 1.0);
  const auto complete = find_crossover_p(Topology::Complete, 5, 1.0, 1.0);
  EXPECT_EQ(ring.sign_changes.size(), 1U);
  EXPECT_EQ(complete.sign_changes.size(), 1U);
  EXPECT_LT(complete.p_star, ring.p_star);
  EXPECT_THROW(find_crossover_p(Topology::Star, 5, 1.0, 1.0), Unsupported);
}

TEST(Crossover, RootIsAZeroOfTheGap) {
  const auto c = find_crossover_p(Topology::Complete, 6, 1.5, 2.0);
  const double D = complete_documents(6, c.p_star);
  EXPECT_NEAR(nash_strategic_level(D, 6, 1.5, 2.0), social_optimum_strategic_level(D, 6, 1.5),
              1e-8);
}

TEST(StarUniform, LargeNLimits) {
  const auto s200 = star_uniform_strategy(200, 0.5, 1.0);
  EXPECT_NEAR(s200.q_leaf, 0.25, 0.02);
  EXPECT_NEAR(s200.q_center, 1.0 - 0.5 + 0.125, 0.02);
  EXPECT_FALSE(s200.clamped);
  EXPECT_NEAR(star_uniform_strategy(500, 0.5, 1.0).welfare / 500, 0.78125, 0.01);
}

TEST(StarUniform, InducesUniformAttack) {
  for (int n : {5, 12}) {
    for (double p : {0.3, 0.6}) {
      const auto s = star_uniform_strategy(n, p, 1.0);
      if (s.clamped) continue;
      const auto a = star_attack_closed_form(n, p, s.q_center, s.q_leaf, 1.0);
      EXPECT_NEAR(a.a_center, 1.0 / n, 1e-12);
      EXPECT_NEAR(a.a_leaf, 1.0 / n, 1e-12);
      Eigen::VectorXd q = Eigen::VectorXd::Constant(n, s.q_leaf);
      q(0) = s.q_center;
      const auto d = closed(Topology::Star, n, p);
      EXPECT_NEAR(
          evaluate_outcome(SecurityVector(q), d, Params(p, 1.0, 1.0), Regime::OptStrategic).welfare,
          s.welfare, 1e-9);
    }
  }
}

TEST(StarLamb, LimitsAndComparison) {
  EXPECT_NEAR(star_lamb_strategy(500, 0.5, 1.0, 1.0).welfare_bound / 500, 0.75, 0.01);
  EXPECT_GT(star_uniform_strategy(50, 0.5, 1.0).welfare,
            star_lamb_strategy(50, 0.5, 1.0, 1.0).welfare_bound);
}

TEST(StarLamb, FeasibilityAtSmallP) {
  // With omega = 1 the leaf requirement omega / D2 tends to 1 from below.
  const auto unit = star_lamb_strategy(10, 1e-4, 1.0, 1.0);
  EXPECT_TRUE(unit.feasible);
  EXPECT_NEAR(unit.q_leaf_min, 1.0, 1e-3);
  EXPECT_FALSE(star_lamb_strategy(10, 1e-4, 1.0, 1.5).feasible);
}

TEST(Ordering, RandomAndStrategicChain) {
  for (Topology kind : {Topology::Ring, Topology::Complete}) {
    for (int k = 0; k <= 100; ++k) {
      const double p = k / 100.0;
      const double D = documents_closed_form(kind, 5, p)(0);
      const double nr = nash_random(5, 1.0)[0];
      const double ns = nash_strategic_level(D, 5, 1.0, 1.0);
      const double orand = social_optimum_random(Eigen::VectorXd::Constant(5, D), 1.0)[0];
      if (k < 100) {
        EXPECT_LT(nr, ns) << p;
      }
      if (k > 0) {
        EXPECT_LT(nr, orand) << p;
      }
      EXPECT_LE(nr, ns);
      EXPECT_LE(nr, orand);
    }
  }
}

TEST(Ordering, NashStrategicPeaksAtHalfN) {
  for (Topology kind : {Topology::Ring, Topology::Complete}) {
    const int steps = 2000;
    std::vector<double> q;
    for (int k = 0; k <= steps; ++k) {
      q.push_back(
          nash_strategic_level(documents_closed_form(kind, 6, double(k) / steps)(0), 6, 1.0, 1.0));
    }
    int flips = 0;
    for (int k = 2; k <= steps; ++k) {
      if ((q[k] - q[k - 1] > 0) != (q[k - 1] - q[k - 2] > 0)) ++flips;
    }
    EXPECT_EQ(flips, 1) << to_string(kind);
    const double peak = double(std::max_element(q.begin(), q.end()) - q.begin()) / steps;
    EXPECT_NEAR(peak, find_p_for_half_n(kind, 6), 1.0 / steps);
  }
}

TEST(Jacobian, DiagonalDominance) {
  for (Topology kind : {Topology::Ring, Topology::Complete}) {
    const int n = 6;
    for (int k = 1; k < 20; ++k) {
      const auto d = closed(kind, n, k / 20.0);
      const double D = d.D(0);
      for (double omega : {1.0, 2.0}) {
        for (double alpha : {1.0, 3.0}) {
          for (int i = 0; i < n; ++i) {
            double off = 0.0;
            for (int j = 0; j < n; ++j) {
              if (j != i) off += D / (omega * n) * (1.0 + d.P(i, j));
            }
            EXPECT_GE(2.0 * D * (n - 1) / (omega * n) + alpha, off);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace netsec
