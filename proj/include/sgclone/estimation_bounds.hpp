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

// Measurement-theoretic side of the cloning bound.
//
// A joint x/p measurement on one copy obeys var_x * var_p >= 1, and more
// generally g_x var_x + g_p var_p >= g_x dx2 + g_p dp2 + sqrt(g_x g_p) for any
// positive weights. With N copies the right-hand side shrinks by 1/N, so the
// best symmetric joint measurement on N coherent copies has variance 1/N.
// Since cloning followed by measurement cannot beat direct measurement,
// s(N, M) >= 1/N - 1/M = (M - N)/(M N).

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "sgclone/cloner.hpp"
#include "sgclone/errors.hpp"
#include "sgclone/quadrature_core.hpp"
#include "sgclone/random.hpp"
#include "sgclone/rational.hpp"

namespace sgclone {

class MeasurementWeights {
public:
    MeasurementWeights(double g_x, double g_p) : g_x_(g_x), g_p_(g_p) {
        if (!(g_x_ > 0.0) || !(g_p_ > 0.0)) {
            throw domain_error("measurement weights must be strictly positive");
        }
    }
    double g_x() const { return g_x_; }
    double g_p() const { return g_p_; }

private:
    double g_x_;
    double g_p_;
};

/// var_x * var_p - 1; non-negative iff the joint-measurement bound holds.
inline double arthurs_kelly_margin(double var_x, double var_p) {
    if (var_x < 0.0 || var_p < 0.0) {
        throw domain_error("variances must be non-negative");
    }
    return var_x * var_p - 1.0;
}

/// Right-hand side of the weighted joint-estimation bound for one copy.
inline double holevo_rhs(const MeasurementWeights& w, double dx2, double dp2) {
    if (!(dx2 > 0.0) || !(dp2 > 0.0)) {
        throw domain_error("intrinsic variances must be positive");
    }
    return w.g_x() * dx2 + w.g_p() * dp2 + std::sqrt(w.g_x() * w.g_p());
}

inline double holevo_lhs(const MeasurementWeights& w, double var_x, double var_p) {
    return w.g_x() * var_x + w.g_p() * var_p;
}

/// Lower bound on a common variance v = var_x = var_p implied by one weight pair.
inline double symmetric_variance_bound(const MeasurementWeights& w, double dx2, double dp2) {
    return holevo_rhs(w, dx2, dp2) / (w.g_x() + w.g_p());
}

/// Weights g_x/g_p = 10^t, t evenly spaced over [-decades, decades], g_p = 1.
/// With an odd point count the middle entry is exactly g_x = g_p = 1.
inline std::vector<MeasurementWeights> weight_grid(int points = 61, double decades = 3.0) {
    if (points < 2) {
        throw domain_error("weight grid needs at least two points");
    }
    std::vector<MeasurementWeights> grid;
    grid.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double t = decades * (2.0 * i / (points - 1) - 1.0);
        grid.emplace_back(std::pow(10.0, t), 1.0);
    }
    return grid;
}

/// Minimal isotropic measured-value variance for joint x, p estimation on N coherent copies.
inline Rational optimal_measurement_variance(int n_copies) {
    if (n_copies < 1) {
        throw domain_error("need at least one copy");
    }
    return Rational(1, n_copies);
}

/// Noise floor of an N -> M cloner obtained from measurement limits:
/// optimal_measurement_variance(N) - optimal_measurement_variance(M).
inline Rational cloning_lower_bound(int n, CopyCount m) {
    if (n < 1 || (!m.is_unbounded() && m.value() < n)) {
        throw domain_error("cloning bound needs 1 <= N <= M, got " + std::to_string(n) + " -> " +
                           m.to_string());
    }
    const Rational after = m.is_unbounded() ? Rational(0) : optimal_measurement_variance(m.value());
    return optimal_measurement_variance(n) - after;
}

/// (dx2 + s)(dp2 + s) - 1 for measuring x on one clone and p on the other
/// of a 1 -> 2 cloner with noise s. Negative means no such cloner exists.
inline double chain_bound_1to2(double dx2, double dp2, double noise_var) {
    if (!(dx2 > 0.0) || !(dp2 > 0.0) || dx2 * dp2 < 0.25 * (1.0 - 1e-12)) {
        throw domain_error("intrinsic variances violate the uncertainty principle");
    }
    if (noise_var < 0.0) {
        throw domain_error("noise variance must be non-negative");
    }
    return (dx2 + noise_var) * (dp2 + noise_var) - 1.0;
}

struct SampleMoments {
    double mean = 0.0;
    double variance = 0.0;         // unbiased
    double variance_stderr = 0.0;  // from the sample fourth central moment
};

inline SampleMoments sample_moments(std::span<const double> xs) {
    const auto n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double v : xs) sum += v;
    const double mean = sum / n;
    double m2 = 0.0;
    double m4 = 0.0;
    for (double v : xs) {
        const double d2 = (v - mean) * (v - mean);
        m2 += d2;
        m4 += d2 * d2;
    }
    const double var = m2 / (n - 1.0);
    m2 /= n;
    m4 /= n;
    return {mean, var, std::sqrt(std::max(0.0, m4 - m2 * m2) / n)};
}

struct VarianceReport {
    double var_x_hat = 0.0;
    double var_p_hat = 0.0;
    double stderr_x = 0.0;
    double stderr_p = 0.0;
    double mean_x_hat = 0.0;
    double mean_p_hat = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    double mean_stderr_x() const { return std::sqrt(var_x_hat / static_cast<double>(samples)); }
    double mean_stderr_p() const { return std::sqrt(var_p_hat / static_cast<double>(samples)); }
    double variance_product() const { return var_x_hat * var_p_hat; }
    /// First-order propagated standard error of var_x_hat * var_p_hat.
    double product_stderr() const { return std::hypot(var_p_hat * stderr_x, var_x_hat * stderr_p); }

    friend bool operator==(const VarianceReport&, const VarianceReport&) = default;
};

namespace detail {

inline VarianceReport summarize(std::span<const double> xs, std::span<const double> ps,
                                std::uint64_t seed) {
    const SampleMoments mx = sample_moments(xs);
    const SampleMoments mp = sample_moments(ps);
    return VarianceReport{mx.variance, mp.variance, mx.variance_stderr, mp.variance_stderr,
                          mx.mean,     mp.mean,     xs.size(),         seed};
}

inline void check_samples(std::uint64_t samples) {
    if (samples < 2) {
        throw domain_error("need at least two samples");
    }
}

}  // namespace detail

/// Clone `center` with a 1 -> 2 cloner of isotropic noise `noise_var`, then
/// measure x exactly on clone one and p exactly on clone two. The two clones
/// receive independent displacements.
inline VarianceReport simulate_joint_measurement(double noise_var, const CoherentState& center,
                                                 std::uint64_t samples, std::uint64_t seed,
                                                 unsigned workers = 1) {
    if (noise_var < 0.0) {
        throw domain_error("noise variance must be non-negative");
    }
    detail::check_samples(samples);
    const double x0 = position_of(center.alpha);
    const double p0 = momentum_of(center.alpha);
    const double noise_sd = std::sqrt(noise_var);
    const double intrinsic_sd = std::sqrt(CoherentState::intrinsic_var_x());

    std::vector<double> xs(samples);
    std::vector<double> ps(samples);
    for_each_chunk(samples, seed, workers, [&](Engine& engine, std::size_t begin, std::size_t end) {
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (std::size_t i = begin; i < end; ++i) {
            const double bx = noise_sd * gauss(engine);
            xs[i] = x0 + bx + intrinsic_sd * gauss(engine);
            const double bp = noise_sd * gauss(engine);
            ps[i] = p0 + bp + intrinsic_sd * gauss(engine);
        }
    });
    return detail::summarize(xs, ps, seed);
}

/// Repeat the optimal single-copy joint measurement (outcome variance 1 per
/// quadrature) on `n_copies` copies of |alpha> and average; report the spread
/// of the averaged estimates.
inline VarianceReport simulate_heterodyne_estimate(ComplexAmplitude alpha, int n_copies,
                                                   std::uint64_t samples, std::uint64_t seed,
                                                   unsigned workers = 1) {
    if (n_copies < 1) {
        throw domain_error("need at least one copy");
    }
    detail::check_samples(samples);
    const double x0 = position_of(alpha);
    const double p0 = momentum_of(alpha);

    std::vector<double> xs(samples);
    std::vector<double> ps(samples);
    for_each_chunk(samples, seed, workers, [&](Engine& engine, std::size_t begin, std::size_t end) {
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (std::size_t i = begin; i < end; ++i) {
            double sx = 0.0;
            double sp = 0.0;
            for (int c = 0; c < n_copies; ++c) {
                sx += x0 + gauss(engine);
                sp += p0 + gauss(engine);
            }
            xs[i] = sx / n_copies;
            ps[i] = sp / n_copies;
        }
    });
    return detail::summarize(xs, ps, seed);
}

}  // namespace sgclone
