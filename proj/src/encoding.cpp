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

#include "tgbs/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace tgbs {
namespace {

double max_abs(const std::vector<double> &values) {
    double m = 0.0;
    for (double v : values) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

}  // namespace

double encoded_mean_photons(const std::vector<double> &eigenvalues, double scale) {
    double total = 0.0;
    for (double lambda : eigenvalues) {
        const double t = scale * std::abs(lambda);
        if (t >= 1.0) {
            return std::numeric_limits<double>::infinity();
        }
        total += t * t / (1.0 - t * t);
    }
    return total;
}

GraphEncoding encode_graph_details(const Graph &graph, const EncodingParams &params) {
    const auto n = static_cast<Eigen::Index>(graph.size());
    if (n == 0) {
        throw std::invalid_argument("cannot encode an empty vertex set");
    }
    Matrix a(n, n);
    const auto adj = graph.adjacency();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = adj[static_cast<std::size_t>(i * n + j)];
        }
    }
    if ((a - a.transpose()).cwiseAbs().maxCoeff() != 0.0) {
        throw std::invalid_argument("adjacency matrix is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(a);
    if (eig.info() != Eigen::Success) {
        throw NumericalDomainError("eigendecomposition of the adjacency matrix failed");
    }

    GraphEncoding out{vacuum_state(graph.size()), 0.0, {}, {}, ComplexMatrix::Identity(n, n), 0.0};
    out.eigenvalues.assign(eig.eigenvalues().data(), eig.eigenvalues().data() + n);
    const double lambda_max = max_abs(out.eigenvalues);

    double c = 0.0;
    if (params.kind == EncodingParams::Kind::kScale) {
        c = params.value;
        if (!(c >= 0.0) || (lambda_max > 0.0 && !(c * lambda_max < 1.0 - 1e-12))) {
            throw std::invalid_argument("encoding scale must satisfy 0 <= c < 1/lambda_max");
        }
    } else {
        if (!(params.value > 0.0) || !std::isfinite(params.value)) {
            throw std::invalid_argument("mean photon target must be positive");
        }
        if (lambda_max > 0.0) {
            double lo = 0.0;
            double hi = 1.0 / lambda_max;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (encoded_mean_photons(out.eigenvalues, mid) < params.value) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            c = lo;
        }
    }
    out.scale = c;

    out.squeezing.resize(static_cast<std::size_t>(n));
    ComplexMatrix u(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double lambda = out.eigenvalues[static_cast<std::size_t>(k)];
        out.squeezing[static_cast<std::size_t>(k)] = std::atanh(c * std::abs(lambda));
        const std::complex<double> phase = lambda < 0.0 ? std::complex<double>(0.0, 1.0) : 1.0;
        u.col(k) = eig.eigenvectors().col(k).cast<std::complex<double>>() * phase;
    }
    out.unitary = u;
    out.state = apply_interferometer(squeezed_vacuum(out.squeezing), u);
    out.mean_photons = encoded_mean_photons(out.eigenvalues, c);
    return out;
}

GaussianState encode_graph(const Graph &graph, const EncodingParams &params) {
    return encode_graph_details(graph, params).state;
}

}  // namespace tgbs
