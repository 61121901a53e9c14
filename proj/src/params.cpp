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

#include "netsec/params.hpp"

#include <cmath>
#include <string>

#include "netsec/error.hpp"

namespace netsec {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameter(std::string(name) + " must lie in [0,1], got " + std::to_string(p));
  }
}

void check_cost_coefficient(double c, const char* name) {
  if (!(c >= 1.0) || !std::isfinite(c)) {
    throw InvalidParameter(std::string(name) + " must be a finite value >= 1, got " +
                           std::to_string(c));
  }
}

Params::Params(double p, double alpha, double omega) : p_(p), alpha_(alpha), omega_(omega) {
  check_probability(p);
  check_cost_coefficient(alpha, "alpha");
  check_cost_coefficient(omega, "omega");
}

}  // namespace netsec
