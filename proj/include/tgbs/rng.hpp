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

#include <cstdint>
#include <random>
#include <string_view>

namespace tgbs {

/// Seedable, splittable random stream.
///
/// Child streams are derived from (seed, label, index) by hashing, never by
/// consuming values from the parent, so drawing more from one stream does not
/// perturb any other stream.
class Rng {
  public:
    using engine_type = std::mt19937_64;

    explicit Rng(std::uint64_t seed);

    /// Stream number `index` of the family `label` under the root `seed`.
    static Rng derive(std::uint64_t seed, std::string_view label, std::uint64_t index = 0);

    Rng split(std::string_view label, std::uint64_t index = 0) const;

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();

    engine_type &engine() noexcept { return engine_; }

  private:
    std::uint64_t seed_;
    engine_type engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::string_view label, std::uint64_t index);

}  // namespace tgbs
