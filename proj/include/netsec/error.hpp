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
#include <stdexcept>
#include <string>

namespace netsec {

// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter or argument lies outside its documented domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Malformed edge-list text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The input network has more than one connected component.
class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph(const std::string& what, int components)
      : Error(what), components_(components) {}
  int components() const { return components_; }

 private:
  int components_;
};

// Exact algorithms that refuse inputs beyond their size cap.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// Operation not available for this topology (e.g. closed forms on Custom).
class Unsupported : public Error {
 public:
  using Error::Error;
};

// Caller-asserted precondition does not hold (e.g. unequal D on a
// vertex-transitive-only formula).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// Iterative solver ran out of iterations. Carries the last iterate.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, Eigen::VectorXd last_iterate, double residual,
                 int iterations)
      : Error(what),
        last_iterate_(std::move(last_iterate)),
        residual_(residual),
        iterations_(iterations) {}

  const Eigen::VectorXd& last_iterate() const { return last_iterate_; }
  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  Eigen::VectorXd last_iterate_;
  double residual_;
  int iterations_;
};

}  // namespace netsec
