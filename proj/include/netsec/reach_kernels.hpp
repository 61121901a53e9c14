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

// Hot loops behind the dissemination module. Each kernel has a plain serial
// reference and an OpenMP version. The parallel versions split the work
// into fixed-size blocks and reduce them in block order, so their output
// does not depend on the thread count.

#include <Eigen/Core>
#include <cstdint>

#include "netsec/graph.hpp"

namespace netsec {

inline constexpr int kMaxEnumerationEdges = 22;

// Exact reach matrix (unit diagonal) by enumeration of all edge subsets.
Eigen::MatrixXd reach_enumerate_serial(const Graph& g, double p);
Eigen::MatrixXd reach_enumerate_parallel(const Graph& g, double p);

using HitMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// hits(i,j) = number of the `samples` transmission subgraphs drawn for
// source i in which j is connected to i. The random stream for a given
// (seed, source, block) is fixed, so both versions return identical counts.
HitMatrix reach_hits_serial(const Graph& g, double p, std::int64_t samples, std::uint64_t seed);
HitMatrix reach_hits_parallel(const Graph& g, double p, std::int64_t samples, std::uint64_t seed);

// Samples per independent random stream.
inline constexpr std::int64_t kMonteCarloBlock = 4096;

// Reads NETSEC_THREADS and, if it is a positive integer, caps the OpenMP
// thread count. Returns the cap in effect (0 when unset).
int apply_thread_limit_from_env();

}  // namespace netsec
