// Copyright 2026 The sgclone Authors
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

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "sgclone/errors.hpp"

namespace sgclone {

/// Nodes and weights for  integral e^{-t^2} f(t) dt ~= sum_i w_i f(t_i).
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Golub-Welsch for the starting points, then Newton on the orthonormal
/// Hermite recurrence to polish nodes and recompute weights to full precision.
inline GaussHermiteRule gauss_hermite(int n) {
    if (n < 1) {
        throw domain_error("Gauss-Hermite rule needs at least one node");
    }
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(0.5 * k);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);

    // Orthonormal Hermite functions h_j (w.r.t. e^{-t^2}); returns h_n and h_{n-1}.
    const double h0 = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
    auto evaluate = [&](double t, double& hn, double& hn1) {
        double prev = 0.0;
        double cur = h0;
        for (int j = 1; j <= n; ++j) {
            const double next = t * std::sqrt(2.0 / j) * cur - std::sqrt((j - 1.0) / j) * prev;
            prev = cur;
            cur = next;
        }
        hn = cur;
        hn1 = prev;
    };

    GaussHermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = eig.eigenvalues()(i);
        double hn = 0.0;
        double hn1 = 0.0;
        for (int iter = 0; iter < 8; ++iter) {
            evaluate(t, hn, hn1);
            const double step = hn / (std::sqrt(2.0 * n) * hn1);
            t -= step;
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(t))) break;
        }
        evaluate(t, hn, hn1);
        rule.nodes[i] = t;
        rule.weights[i] = 1.0 / (n * hn1 * hn1);
    }
    // Exact symmetry of the rule.
    for (int i = 0; i < n / 2; ++i) {
        const int j = n - 1 - i;
        const double t = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.nodes[i] = -t;
        rule.nodes[j] = t;
        rule.weights[i] = rule.weights[j] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

}  // namespace sgclone
