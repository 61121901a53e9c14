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
#include <omp.h>

#include "netsec/graph.hpp"
#include "netsec/reach_kernels.hpp"

namespace netsec {
namespace {

class ThreadCount {
 public:
  explicit ThreadCount(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadCount() { omp_set_num_threads(saved_); }

 private:
  int saved_;
};

std::vector<Graph> sample_graphs() {
  return {build_topology(Topology::Ring, 9), build_topology(Topology::Star, 10),
          build_topology(Topology::Complete, 6),
          load_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n0 4\n2 6\n1 5\n3 7\n")};
}

TEST(EnumerationKernel, ParallelMatchesSerial) {
  for (const Graph& g : sample_graphs()) {
    for (double p : {0.0, 0.2, 0.5, 0.77, 1.0}) {
      const auto serial = reach_enumerate_serial(g, p);
      const auto parallel = reach_enumerate_parallel(g, p);
      EXPECT_LT((serial - parallel).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(EnumerationKernel, IndependentOfThreadCount) {
  const Graph g = build_topology(Topology::Ring, 18);
  Eigen::MatrixXd one, four;
  {
    ThreadCount t(1);
    one = reach_enumerate_parallel(g, 0.6);
  }
  {
    ThreadCount t(4);
    four = reach_enumerate_parallel(g, 0.6);
  }
  EXPECT_EQ(one, four);
}

TEST(MonteCarloKernel, ParallelMatchesSerialExactly) {
  for (const Graph& g : sample_graphs()) {
    // Includes a partial final block.
    const std::int64_t samples = 3 * kMonteCarloBlock + 123;
    EXPECT_EQ(reach_hits_serial(g, 0.45, samples, 5), reach_hits_parallel(g, 0.45, samples, 5));
  }
}

TEST(MonteCarloKernel, IndependentOfThreadCount) {
  const Graph g = build_topology(Topology::Complete, 7);
  HitMatrix one, three;
  {
    ThreadCount t(1);
    one = reach_hits_parallel(g, 0.3, 20000, 42);
  }
  {
    ThreadCount t(3);
    three = reach_hits_parallel(g, 0.3, 20000, 42);
  }
  EXPECT_EQ(one, three);
}

TEST(MonteCarloKernel, DiagonalCountsEverySample) {
  const Graph g = build_topology(Topology::Ring, 5);
  const auto hits = reach_hits_serial(g, 0.5, 1000, 1);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(hits(i, i), 1000);
}

}  // namespace
}  // namespace netsec
