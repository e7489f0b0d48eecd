// Copyright 2026 The magsteer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace magsteer {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A physical parameter or grid axis violates its invariants.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// An iterative or direct kernel failed (no convergence, singular system,
// negative discriminant beyond tolerance).
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// A steady-state routine was handed an unstable drift matrix.
class StabilityPrecondition : public Error {
 public:
  using Error::Error;
};

// A covariance matrix violates the uncertainty bound or has a nonpositive
// determinant where one is required.
class InvalidState : public Error {
 public:
  using Error::Error;
};

}  // namespace magsteer
