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

namespace netsec {

// Game parameters: transmission probability p in [0,1], defender cost
// coefficient alpha >= 1 and attacker cost coefficient omega >= 1.
class Params {
 public:
  // Throws InvalidParameter on out-of-domain values.
  Params(double p, double alpha, double omega);

  double p() const { return p_; }
  double alpha() const { return alpha_; }
  double omega() const { return omega_; }

 private:
  double p_;
  double alpha_;
  double omega_;
};

// Shared validators, each throwing InvalidParameter.
void check_probability(double p, const char* name = "p");
void check_cost_coefficient(double c, const char* name);

}  // namespace netsec
