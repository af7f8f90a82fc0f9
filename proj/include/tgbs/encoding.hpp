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

#include <vector>

#include "tgbs/gaussian_state.hpp"
#include "tgbs/graph.hpp"

namespace tgbs {

/// How the adjacency matrix is rescaled before it becomes squeezing.
struct EncodingParams {
    enum class Kind { kScale, kMeanPhotons };

    Kind kind = Kind::kMeanPhotons;
    /// Scale c in (0, 1/lambda_max), or the target mean photon number.
    double value = 1.0;

    static EncodingParams scale(double c) { return {Kind::kScale, c}; }
    static EncodingParams mean_photons(double n) { return {Kind::kMeanPhotons, n}; }
};

struct GraphEncoding {
    GaussianState state;
    double scale = 0.0;
    std::vector<double> eigenvalues;
    /// r_i = artanh(c |lambda_i|)
    std::vector<double> squeezing;
    ComplexMatrix unitary;
    double mean_photons = 0.0;
};

/// Pure zero-mean state whose photon statistics follow c * A:
/// A = O diag(lambda) O^T, U = O diag(phase) with phase i on negative
/// eigenvalues so that A = U diag(|lambda|) U^T, squeeze mode i by
/// artanh(c |lambda_i|) and apply U. A target mean photon number is met by
/// bisection on c.
GraphEncoding encode_graph_details(const Graph &graph, const EncodingParams &params);
GaussianState encode_graph(const Graph &graph, const EncodingParams &params);

/// Sum over eigenvalues of sinh^2(artanh(c |lambda|)).
double encoded_mean_photons(const std::vector<double> &eigenvalues, double scale);

}  // namespace tgbs
