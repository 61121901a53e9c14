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

#include "netsec/reach_kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "netsec/error.hpp"

namespace netsec {

namespace {

// Union-find over a fixed-size buffer, reset per sample.
struct Components {
  std::vector<int> parent;

  explicit Components(int n) : parent(n) {}

  void reset() {
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

// p^k (1-p)^(m-k) for k = 0..m.
std::vector<double> subset_weights(int m, double p) {
  std::vector<double> w(m + 1);
  for (int k = 0; k <= m; ++k) w[k] = std::pow(p, k) * std::pow(1.0 - p, m - k);
  return w;
}

void check_enumerable(const Graph& g) {
  if (g.num_edges() > kMaxEnumerationEdges) {
    throw SizeLimitExceeded("enumeration needs |E| <= " + std::to_string(kMaxEnumerationEdges) +
                            ", graph has " + std::to_string(g.num_edges()) +
                            " edges; use Monte Carlo instead");
  }
}

// Adds `weight` to acc(i,j), i < j, for every connected pair of the subgraph
// selected by `mask`. acc is the packed upper triangle, row-major.
void accumulate_subset(const Graph& g, std::uint32_t mask, double weight, Components& uf,
                       std::vector<int>& root, double* acc) {
  const int n = g.num_nodes();
  const auto& edges = g.edges();
  uf.reset();
  for (int e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1u) uf.unite(edges[e].first, edges[e].second);
  }
  for (int v = 0; v < n; ++v) root[v] = uf.find(v);
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++idx) {
      if (root[i] == root[j]) acc[idx] += weight;
    }
  }
}

Eigen::MatrixXd unpack_reach(int n, const std::vector<double>& upper) {
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n);
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++idx) P(i, j) = P(j, i) = upper[idx];
  }
  return P;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, int source, std::int64_t block) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ static_cast<std::uint64_t>(source));
  return splitmix64(s ^ static_cast<std::uint64_t>(block));
}

// Runs block `block` of source `source`, adding hit counts into row.
void sample_block(const Graph& g, double p, int source, std::int64_t block, std::int64_t count,
                  std::uint64_t seed, Components& uf, std::int64_t* row) {
  const int n = g.num_nodes();
  const auto& edges = g.edges();
  std::mt19937_64 rng(stream_seed(seed, source, block));
  for (std::int64_t s = 0; s < count; ++s) {
    uf.reset();
    for (const auto& [u, v] : edges) {
      const double u01 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u01 < p) uf.unite(u, v);
    }
    const int r = uf.find(source);
    for (int j = 0; j < n; ++j) row[j] += (uf.find(j) == r);
  }
}

void check_samples(std::int64_t samples) {
  if (samples < 1) throw InvalidParameter("samples must be >= 1");
}

}  // namespace

Eigen::MatrixXd reach_enumerate_serial(const Graph& g, double p) {
  check_enumerable(g);
  const int n = g.num_nodes();
  const int m = g.num_edges();
  const auto weights = subset_weights(m, p);
  std::vector<double> upper(n * (n - 1) / 2, 0.0);
  Components uf(n);
  std::vector<int> root(n);
  const std::uint32_t total = 1u << m;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    accumulate_subset(g, mask, weights[std::popcount(mask)], uf, root, upper.data());
  }
  return unpack_reach(n, upper);
}

Eigen::MatrixXd reach_enumerate_parallel(const Graph& g, double p) {
  check_enumerable(g);
  const int n = g.num_nodes();
  const int m = g.num_edges();
  const auto weights = subset_weights(m, p);
  const int pairs = n * (n - 1) / 2;

  constexpr int kBlockBits = 12;
  const int block_bits = std::min(m, kBlockBits);
  const std::int64_t num_blocks = std::int64_t{1} << (m - block_bits);
  const std::uint32_t block_size = 1u << block_bits;
  std::vector<double> partial(static_cast<size_t>(num_blocks) * pairs, 0.0);

#pragma omp parallel
  {
    Components uf(n);
    std::vector<int> root(n);
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < num_blocks; ++b) {
      double* acc = partial.data() + b * pairs;
      const std::uint32_t first = static_cast<std::uint32_t>(b) * block_size;
      for (std::uint32_t mask = first; mask < first + block_size; ++mask) {
        accumulate_subset(g, mask, weights[std::popcount(mask)], uf, root, acc);
      }
    }
  }

  std::vector<double> upper(pairs, 0.0);
  for (std::int64_t b = 0; b < num_blocks; ++b) {
    const double* acc = partial.data() + b * pairs;
    for (int k = 0; k < pairs; ++k) upper[k] += acc[k];
  }
  return unpack_reach(n, upper);
}

HitMatrix reach_hits_serial(const Graph& g, double p, std::int64_t samples, std::uint64_t seed) {
  check_samples(samples);
  const int n = g.num_nodes();
  HitMatrix hits = HitMatrix::Zero(n, n);
  std::vector<std::int64_t> row(n);
  Components uf(n);
  for (int i = 0; i < n; ++i) {
    std::fill(row.begin(), row.end(), 0);
    for (std::int64_t first = 0, b = 0; first < samples; first += kMonteCarloBlock, ++b) {
      const std::int64_t count = std::min(kMonteCarloBlock, samples - first);
      sample_block(g, p, i, b, count, seed, uf, row.data());
    }
    for (int j = 0; j < n; ++j) hits(i, j) = row[j];
  }
  return hits;
}

HitMatrix reach_hits_parallel(const Graph& g, double p, std::int64_t samples, std::uint64_t seed) {
  check_samples(samples);
  const int n = g.num_nodes();
  const std::int64_t blocks_per_source = (samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
  const std::int64_t work = blocks_per_source * n;
  std::vector<std::int64_t> partial(static_cast<size_t>(work) * n, 0);

#pragma omp parallel
  {
    Components uf(n);
#pragma omp for schedule(dynamic)
    for (std::int64_t w = 0; w < work; ++w) {
      const int source = static_cast<int>(w / blocks_per_source);
      const std::int64_t b = w % blocks_per_source;
      const std::int64_t first = b * kMonteCarloBlock;
      const std::int64_t count = std::min(kMonteCarloBlock, samples - first);
      sample_block(g, p, source, b, count, seed, uf, partial.data() + w * n);
    }
  }

  HitMatrix hits = HitMatrix::Zero(n, n);
  for (std::int64_t w = 0; w < work; ++w) {
    const int source = static_cast<int>(w / blocks_per_source);
    for (int j = 0; j < n; ++j) hits(source, j) += partial[w * n + j];
  }
  return hits;
}

int apply_thread_limit_from_env() {
  const char* env = std::getenv("NETSEC_THREADS");
  if (env == nullptr) return 0;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || cap < 1) return 0;
  omp_set_num_threads(static_cast<int>(cap));
  return static_cast<int>(cap);
}

}  // namespace netsec
