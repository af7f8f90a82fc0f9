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
#include <vector>

#include "tgbs/gaussian_state.hpp"
#include "tgbs/rng.hpp"

namespace tgbs::testutil {

/// Squeezed vacuum (per-mode squeezing uniform in [0, max_db] dB) through a
/// Haar interferometer, then uniform loss.
inline GaussianState random_gbs_state(std::size_t modes, std::uint64_t seed, double max_db = 8.0,
                                      double loss_db = 0.0) {
    Rng rng = Rng::derive(seed, "test-state");
    std::vector<double> r(modes);
    for (double &x : r) {
        x = squeezing_from_db(max_db * rng.uniform());
    }
    GaussianState s = apply_interferometer(squeezed_vacuum(r), haar_unitary(modes, rng));
    if (loss_db > 0.0) {
        s = apply_uniform_loss(s, transmission_from_db(loss_db));
    }
    return s;
}

/// Random GBS state with a random displacement added (exercises mean paths).
inline GaussianState random_displaced_state(std::size_t modes, std::uint64_t seed, double max_db = 6.0,
                                            double loss_db = 0.0, double max_shift = 0.8) {
    GaussianState s = random_gbs_state(modes, seed, max_db, loss_db);
    Rng rng = Rng::derive(seed, "test-displacement");
    Vector mean = s.mean();
    for (Eigen::Index i = 0; i < mean.size(); ++i) {
        mean(i) += max_shift * (2.0 * rng.uniform() - 1.0);
    }
    return GaussianState(s.cov(), mean);
}

}  // namespace tgbs::testutil
