// Copyright 2026 The tgbs Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tgbs {

// Numerical tolerances shared by every module.
inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kPhysicalityTol = 1e-8;
inline constexpr double kProbabilityTol = 1e-12;
inline constexpr double kNormTol = 1e-9;

/// A covariance block that should be positive definite is not (unphysical branch).
class NumericalDomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Accumulated cancellation pushed a probability or trace outside its tolerance band.
/// Callers may retry with the double-double accumulator.
class PrecisionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A forced measurement outcome has (numerically) zero probability.
class ImpossibleOutcomeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string &message);

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace tgbs
