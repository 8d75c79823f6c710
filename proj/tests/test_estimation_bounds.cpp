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

#include "sgclone/estimation_bounds.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

using namespace sgclone;

TEST(estimation_bounds, arthurs_kelly_margin_examples) {
    EXPECT_EQ(arthurs_kelly_margin(1.0, 1.0), 0.0);
    EXPECT_EQ(arthurs_kelly_margin(2.0, 1.0), 1.0);
    EXPECT_EQ(arthurs_kelly_margin(0.5, 0.5), -0.75);
    EXPECT_THROW(arthurs_kelly_margin(-1.0, 1.0), domain_error);
}

TEST(estimation_bounds, holevo_rhs_examples) {
    EXPECT_DOUBLE_EQ(holevo_rhs({1.0, 1.0}, 0.5, 0.5), 2.0);
    EXPECT_DOUBLE_EQ(holevo_rhs({4.0, 1.0}, 0.5, 0.5), 4.5);
    for (double g : {0.01, 0.3, 7.0, 1e3}) {
        EXPECT_NEAR(holevo_rhs({g, g}, 0.5, 0.5), 2.0 * g, 1e-13 * g);
    }
    EXPECT_THROW(MeasurementWeights(0.0, 1.0), domain_error);
    EXPECT_THROW(MeasurementWeights(1.0, -2.0), domain_error);
    EXPECT_THROW(holevo_rhs({1.0, 1.0}, 0.0, 0.5), domain_error);
}

TEST(estimation_bounds, optimal_measurement_variance_examples) {
    EXPECT_EQ(optimal_measurement_variance(1), Rational(1));
    EXPECT_EQ(optimal_measurement_variance(2), Rational(1, 2));
    EXPECT_LT(to_double(optimal_measurement_variance(1'000'000)), 1e-5);
    EXPECT_THROW(optimal_measurement_variance(0), domain_error);
}

TEST(estimation_bounds, cloning_lower_bound_examples) {
    EXPECT_EQ(cloning_lower_bound(1, 2), Rational(1, 2));
    for (int n = 1; n < 8; ++n) EXPECT_EQ(cloning_lower_bound(n, n), Rational(0));
    EXPECT_EQ(cloning_lower_bound(2, 5), Rational(3, 10));
    EXPECT_EQ(cloning_lower_bound(3, unbounded), Rational(1, 3));
    EXPECT_THROW(cloning_lower_bound(4, 3), domain_error);
    EXPECT_THROW(cloning_lower_bound(0, unbounded), domain_error);
}

TEST(estimation_bounds, lower_bound_equals_optimal_variance) {
    for (int n = 1; n <= 64; ++n) {
        ASSERT_EQ(cloning_lower_bound(n, unbounded), optimal_noise_variance(n, unbounded).var_x());
        for (int m = n; m <= 64; ++m) {
            ASSERT_EQ(cloning_lower_bound(n, m), optimal_noise_variance(n, m).var_x()) << n << "->" << m;
        }
    }
}

TEST(estimation_bounds, chain_bound_1to2_examples) {
    EXPECT_EQ(chain_bound_1to2(0.5, 0.5, 0.5), 0.0);
    EXPECT_EQ(chain_bound_1to2(0.5, 0.5, 1.0), 1.25);
    EXPECT_EQ(chain_bound_1to2(0.5, 0.5, 0.25), -7.0 / 16.0);
    EXPECT_THROW(chain_bound_1to2(0.1, 0.5, 0.5), domain_error);
    EXPECT_THROW(chain_bound_1to2(0.5, 0.5, -0.1), domain_error);
    const SqueezedState s{0.0, 0.9};
    EXPECT_NO_THROW(chain_bound_1to2(s.intrinsic_var_x(), s.intrinsic_var_p(), 0.5));
}

TEST(estimation_bounds, chain_bound_sign_flips_at_half) {
    for (double s = 0.0; s <= 2.0; s += 1.0 / 64.0) {
        const double margin = chain_bound_1to2(0.5, 0.5, s);
        if (s < 0.5) EXPECT_LT(margin, 0.0) << s;
        else EXPECT_GE(margin, 0.0) << s;
    }
}

TEST(estimation_bounds, weight_grid_layout) {
    const auto grid = weight_grid();
    ASSERT_EQ(grid.size(), 61U);
    EXPECT_EQ(grid[30].g_x(), 1.0);
    EXPECT_EQ(grid[30].g_p(), 1.0);
    EXPECT_NEAR(grid.front().g_x(), 1e-3, 1e-18);
    EXPECT_NEAR(grid.back().g_x(), 1e3, 1e-12);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_NEAR(std::log10(grid[i].g_x()), -std::log10(grid[grid.size() - 1 - i].g_x()), 1e-12);
    }
}

TEST(estimation_bounds, symmetric_bound_peaks_at_equal_weights) {
    const auto grid = weight_grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = symmetric_variance_bound(grid[i], 0.5, 0.5);
        if (i == 30) EXPECT_NEAR(v, 1.0, 1e-12);
        else EXPECT_LT(v, 1.0);
    }
}

TEST(estimation_bounds, sample_moments_small_data) {
    const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
    const auto m = sample_moments(xs);
    EXPECT_DOUBLE_EQ(m.mean, 2.5);
    EXPECT_DOUBLE_EQ(m.variance, 5.0 / 3.0);
    // central moments m2 = 1.25, m4 = 2.5625
    EXPECT_DOUBLE_EQ(m.variance_stderr, std::sqrt((2.5625 - 1.5625) / 4.0));
}

TEST(estimation_bounds, joint_measurement_examples) {
    const auto r = simulate_joint_measurement(0.5, CoherentState{}, 1'000'000, 42);
    EXPECT_NEAR(r.var_x_hat, 1.0, 3.0 * r.stderr_x);
    EXPECT_NEAR(r.var_p_hat, 1.0, 3.0 * r.stderr_p);
    EXPECT_NEAR(r.variance_product(), 1.0, 3.0 * r.product_stderr());
    EXPECT_NEAR(r.stderr_x, std::sqrt(2.0) * 1.0 / 1000.0, 1e-4);

    const auto quiet = simulate_joint_measurement(0.0, CoherentState{}, 1'000'000, 42);
    EXPECT_NEAR(quiet.var_x_hat, 0.5, 3.0 * quiet.stderr_x);
    EXPECT_NEAR(quiet.var_p_hat, 0.5, 3.0 * quiet.stderr_p);

    const auto shifted = simulate_joint_measurement(1.0, CoherentState{{2.0, 1.0}}, 1'000'000, 42);
    EXPECT_NEAR(shifted.var_x_hat, 1.5, 3.0 * shifted.stderr_x);
    EXPECT_NEAR(shifted.var_p_hat, 1.5, 3.0 * shifted.stderr_p);
    EXPECT_NEAR(shifted.mean_x_hat, position_of({2.0, 1.0}), 3.0 * shifted.mean_stderr_x());
}

TEST(estimation_bounds, joint_measurement_sanity_across_seeds) {
    struct Scenario {
        double noise;
        ComplexAmplitude alpha;
    };
    for (const Scenario sc : {Scenario{0.5, 0.0}, Scenario{0.0, 0.0}, Scenario{1.0, {2.0, 1.0}}}) {
        for (std::uint64_t seed : {1, 2, 3}) {
            const auto r = simulate_joint_measurement(sc.noise, CoherentState{sc.alpha}, 200'000, seed);
            EXPECT_LT(std::abs(r.var_x_hat - (0.5 + sc.noise)), 5.0 * r.stderr_x);
            EXPECT_LT(std::abs(r.var_p_hat - (0.5 + sc.noise)), 5.0 * r.stderr_p);
        }
    }
}

TEST(estimation_bounds, heterodyne_examples) {
    const ComplexAmplitude alpha{0.7, -1.2};
    const auto one = simulate_heterodyne_estimate(alpha, 1, 1'000'000, 9);
    EXPECT_NEAR(one.var_x_hat, 1.0, 3.0 * one.stderr_x);
    EXPECT_NEAR(one.var_p_hat, 1.0, 3.0 * one.stderr_p);
    const auto four = simulate_heterodyne_estimate(alpha, 4, 1'000'000, 9);
    EXPECT_NEAR(four.var_x_hat, 0.25, 3.0 * four.stderr_x);
    EXPECT_NEAR(four.var_p_hat, 0.25, 3.0 * four.stderr_p);
    for (const auto& r : {one, four}) {
        EXPECT_NEAR(r.mean_x_hat, position_of(alpha), 3.0 * r.mean_stderr_x());
        EXPECT_NEAR(r.mean_p_hat, momentum_of(alpha), 3.0 * r.mean_stderr_p());
    }
}

TEST(estimation_bounds, reports_are_reproducible) {
    const auto a = simulate_joint_measurement(0.5, CoherentState{{1.0, 0.0}}, 300'000, 1234);
    const auto b = simulate_joint_measurement(0.5, CoherentState{{1.0, 0.0}}, 300'000, 1234);
    EXPECT_EQ(a, b);
    const auto c = simulate_joint_measurement(0.5, CoherentState{{1.0, 0.0}}, 300'000, 1235);
    EXPECT_NE(a.var_x_hat, c.var_x_hat);
    EXPECT_EQ(a.seed, 1234U);
    EXPECT_EQ(a.samples, 300'000U);
}

TEST(estimation_bounds, reports_independent_of_worker_count) {
    const auto one = simulate_heterodyne_estimate({0.1, 0.2}, 3, 500'000, 77, 1);
    const auto three = simulate_heterodyne_estimate({0.1, 0.2}, 3, 500'000, 77, 3);
    EXPECT_EQ(one, three);
    const auto j1 = simulate_joint_measurement(0.25, CoherentState{}, 200'000, 5, 1);
    const auto j4 = simulate_joint_measurement(0.25, CoherentState{}, 200'000, 5, 4);
    EXPECT_EQ(j1, j4);
}

TEST(estimation_bounds, simulation_domain_errors) {
    EXPECT_THROW(simulate_joint_measurement(0.5, CoherentState{}, 1, 0), domain_error);
    EXPECT_THROW(simulate_joint_measurement(-0.5, CoherentState{}, 100, 0), domain_error);
    EXPECT_THROW(simulate_heterodyne_estimate(0.0, 0, 100, 0), domain_error);
    EXPECT_THROW(simulate_heterodyne_estimate(0.0, 1, 0, 0), domain_error);
}

TEST(estimation_bounds, simulated_measurement_respects_weighted_bound) {
    const auto r = simulate_heterodyne_estimate(0.0, 1, 400'000, 21);
    for (const auto& w : weight_grid()) {
        const double lhs = holevo_lhs(w, r.var_x_hat, r.var_p_hat);
        const double slack = 5.0 * std::hypot(w.g_x() * r.stderr_x, w.g_p() * r.stderr_p);
        EXPECT_GE(lhs, holevo_rhs(w, 0.5, 0.5) - slack);
    }
}

TEST(estimation_bounds, derived_seeds_differ) {
    EXPECT_NE(derive_seed(42, 0), derive_seed(42, 1));
    EXPECT_NE(derive_seed(42, 0), derive_seed(43, 0));
    EXPECT_EQ(derive_seed(42, 5), derive_seed(42, 5));
}
