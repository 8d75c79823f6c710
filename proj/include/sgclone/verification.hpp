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

// Self-check suites behind the `verify-*` commands. Each check records the
// expected and observed value with the tolerance it was judged against.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgclone/cloner.hpp"
#include "sgclone/estimation_bounds.hpp"
#include "sgclone/fock_oracle.hpp"
#include "sgclone/quadrature_core.hpp"
#include "sgclone/random.hpp"

namespace sgclone {

struct Check {
    std::string name;
    double expected = 0.0;
    double observed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<Check> checks;

    bool overall() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }

    /// |observed - expected| <= tolerance. `override_tol`, when set, replaces the pinned tolerance.
    void expect_near(std::string name, double expected, double observed, double tolerance,
                     std::optional<double> override_tol = std::nullopt) {
        const double tol = override_tol.value_or(tolerance);
        const bool pass = std::isfinite(observed) && std::abs(observed - expected) <= tol;
        checks.push_back({std::move(name), expected, observed, tol, pass});
    }

    /// observed >= bound - tolerance.
    void expect_at_least(std::string name, double bound, double observed, double tolerance,
                         std::optional<double> override_tol = std::nullopt) {
        const double tol = override_tol.value_or(tolerance);
        checks.push_back({std::move(name), bound, observed, tol, observed >= bound - tol});
    }

    /// Exact count of failing cases; passes iff zero.
    void expect_none(std::string name, long failures) {
        checks.push_back({std::move(name), 0.0, static_cast<double>(failures), 0.0, failures == 0});
    }
};

struct BoundsOptions {
    int n_max = 64;
    int cascade_max = 32;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    double sigmas = 5.0;
    std::optional<double> tolerance;
};

/// Exact identities, measurement-bound algebra and the weight sweep.
inline VerificationReport verify_bounds(const BoundsOptions& opt = {}) {
    VerificationReport report;

    report.expect_none("variance(1,2) == 1/2",
                       optimal_noise_variance(1, 2).var_x() == Rational(1, 2) ? 0 : 1);
    report.expect_none("fidelity(1,2) == 2/3", optimal_fidelity(1, 2).value() == Rational(2, 3) ? 0 : 1);
    report.expect_none("fidelity(1,inf) == 1/2",
                       optimal_fidelity(1, unbounded).value() == Rational(1, 2) ? 0 : 1);
    long limits = 0;
    for (int n = 1; n <= opt.n_max; ++n) {
        limits += optimal_noise_variance(n, n).var_x() != Rational(0);
        limits += optimal_fidelity(n, n).value() != Rational(1);
        limits += optimal_noise_variance(n, unbounded).var_x() != Rational(1, n);
        limits += optimal_fidelity(n, unbounded).value() != Rational(n, n + 1);
    }
    report.expect_none("N->N and N->inf limits", limits);

    long chain = 0;
    long consistency = 0;
    for (int n = 1; n <= opt.n_max; ++n) {
        chain += cloning_lower_bound(n, unbounded) != optimal_noise_variance(n, unbounded).var_x();
        for (int m = n; m <= opt.n_max; ++m) {
            chain += cloning_lower_bound(n, m) != optimal_noise_variance(n, m).var_x();
            consistency += fidelity_from_variance(optimal_noise_variance(n, m)) != optimal_fidelity(n, m);
        }
    }
    report.expect_none("measurement bound == optimal variance", chain);
    report.expect_none("fidelity_from_variance o variance == fidelity", consistency);

    long closure = 0;
    for (int n = 1; n <= opt.cascade_max; ++n) {
        for (int m = n; m <= opt.cascade_max; ++m) {
            for (int l = m; l <= opt.cascade_max; ++l) {
                closure += cascade(optimal_cloner(n, m), optimal_cloner(m, l)).noise() !=
                           optimal_noise_variance(n, l);
            }
        }
    }
    report.expect_none("optimal cascade closure", closure);

    long monotone = 0;
    for (const auto& [n, m] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        for (int k = 1; k < 16; ++k) {
            monotone += !(optimal_fidelity((k + 1) * n, (k + 1) * m) > optimal_fidelity(k * n, k * m));
            monotone += !(optimal_noise_variance((k + 1) * n, (k + 1) * m).var_x() <
                          optimal_noise_variance(k * n, k * m).var_x());
        }
    }
    report.expect_none("monotone in k", monotone);

    report.expect_near("joint measurement margin at (1,1)", 0.0, arthurs_kelly_margin(1.0, 1.0), 0.0,
                       opt.tolerance);
    report.expect_near("1->2 chain margin at noise 1/2", 0.0, chain_bound_1to2(0.5, 0.5, 0.5), 0.0,
                       opt.tolerance);

    const auto grid = weight_grid();
    std::size_t argmax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = symmetric_variance_bound(grid[i], 0.5, 0.5);
        if (v > best) {
            best = v;
            argmax = i;
        }
    }
    report.expect_near("symmetric bound maximum", 1.0, best, 1e-12, opt.tolerance);
    report.expect_none("symmetric bound maximized at g_x = g_p",
                       grid[argmax].g_x() == grid[argmax].g_p() ? 0 : 1);

    const VarianceReport meas = simulate_heterodyne_estimate(0.0, 1, opt.samples, opt.seed);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& w = grid[i];
        const double lhs = holevo_lhs(w, meas.var_x_hat, meas.var_p_hat);
        const double rhs = holevo_rhs(w, 0.5, 0.5);
        const double stderr_lhs = std::hypot(w.g_x() * meas.stderr_x, w.g_p() * meas.stderr_p);
        const std::string label = "weighted bound at g_x/g_p=" + std::to_string(w.g_x());
        if (w.g_x() == w.g_p()) {
            report.expect_near(label + " (saturated)", rhs, lhs, opt.sigmas * stderr_lhs, opt.tolerance);
        } else {
            report.expect_at_least(label, rhs, lhs, opt.sigmas * stderr_lhs, opt.tolerance);
        }
    }
    return report;
}

struct MonteCarloOptions {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    double sigmas = 5.0;
    unsigned workers = 1;
    std::optional<double> tolerance;
};

/// Statistical checks of the joint-measurement and N-copy estimation scalings.
inline VerificationReport verify_monte_carlo(const MonteCarloOptions& opt = {}) {
    VerificationReport report;
    const std::uint64_t seeds[] = {opt.seed, derive_seed(opt.seed, 1), derive_seed(opt.seed, 2)};
    struct Scenario {
        const char* name;
        double noise;
        ComplexAmplitude alpha;
    };
    const Scenario scenarios[] = {{"noise 1/2", 0.5, 0.0}, {"noise 0", 0.0, 0.0}, {"noise 1 at 2+i", 1.0, {2.0, 1.0}}};
    for (const auto& sc : scenarios) {
        for (std::uint64_t seed : seeds) {
            const auto r = simulate_joint_measurement(sc.noise, CoherentState{sc.alpha}, opt.samples, seed, opt.workers);
            const double expected = kVacuumVariance + sc.noise;
            const std::string tag = std::string(sc.name) + " seed " + std::to_string(seed);
            report.expect_near("joint var_x, " + tag, expected, r.var_x_hat, opt.sigmas * r.stderr_x, opt.tolerance);
            report.expect_near("joint var_p, " + tag, expected, r.var_p_hat, opt.sigmas * r.stderr_p, opt.tolerance);
            if (sc.noise == 0.5) {
                report.expect_near("joint variance product, " + tag, 1.0, r.variance_product(),
                                   opt.sigmas * r.product_stderr(), opt.tolerance);
            }
        }
    }
    for (int n : {1, 2, 4, 8}) {
        const auto r = simulate_heterodyne_estimate({0.5, -0.25}, n, opt.samples, opt.seed, opt.workers);
        const double expected = to_double(optimal_measurement_variance(n));
        const std::string tag = "N=" + std::to_string(n);
        report.expect_near("estimate var_x, " + tag, expected, r.var_x_hat, opt.sigmas * r.stderr_x, opt.tolerance);
        report.expect_near("estimate var_p, " + tag, expected, r.var_p_hat, opt.sigmas * r.stderr_p, opt.tolerance);
        report.expect_near("estimate mean_x, " + tag, position_of({0.5, -0.25}), r.mean_x_hat,
                           opt.sigmas * r.mean_stderr_x(), opt.tolerance);
    }
    return report;
}

struct FockOptions {
    int cutoff = 0;  // 0 selects the default rule per scenario
    int nodes = kDefaultNodes;
    double eps_trunc = kDefaultTruncation;
    std::optional<double> tolerance;
};

/// Oracle agreement, physicality, moments, cascade additivity and the squeezed variant.
inline VerificationReport verify_fock(const FockOptions& opt = {}) {
    VerificationReport report;
    const QuadratureGrid grid(opt.nodes);
    auto cutoff_for = [&](const auto& mix) { return opt.cutoff > 0 ? opt.cutoff : default_cutoff(mix); };

    const std::pair<int, int> scenarios[] = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}};
    const ComplexAmplitude centers[] = {{0, 0}, {1, 0}, {1, 1}, {2, -1}};
    long unphysical = 0;
    for (const auto& [n, m] : scenarios) {
        const double exact = optimal_fidelity(n, m).to_double();
        double lo = 2.0;
        double hi = -1.0;
        for (const auto alpha : centers) {
            const auto mix = clone_reduced_output(optimal_cloner(n, m), CoherentState{alpha});
            const int cutoff = cutoff_for(mix);
            const DensityMatrix rho = mixture_density_matrix(mix, cutoff, grid, opt.eps_trunc);
            const double f = fidelity_against(coherent_fock_vector(alpha, cutoff, opt.eps_trunc), rho);
            lo = std::min(lo, f);
            hi = std::max(hi, f);
            const std::string tag = std::to_string(n) + "->" + std::to_string(m) + " at (" +
                                    std::to_string(alpha.real()) + "," + std::to_string(alpha.imag()) + ")";
            report.expect_near("oracle fidelity " + tag, exact, f, 1e-5, opt.tolerance);

            const auto phys = check_physicality(rho);
            unphysical += phys.hermiticity_error > 1e-12 || phys.trace < 1.0 - opt.eps_trunc ||
                          phys.trace > 1.0 + 1e-12 || phys.min_eigenvalue < -1e-10;

            const auto mom = quadrature_moments(rho);
            const double var = kVacuumVariance + optimal_noise_variance(n, m).to_double().var_x();
            report.expect_near("oracle var_x " + tag, var, mom.var_x, 1e-6, opt.tolerance);
            report.expect_near("oracle var_p " + tag, var, mom.var_p, 1e-6, opt.tolerance);
        }
        report.expect_near("center spread " + std::to_string(n) + "->" + std::to_string(m), 0.0, hi - lo, 1e-5,
                           opt.tolerance);
    }
    report.expect_none("unphysical density matrices", unphysical);

    const std::pair<NoiseCovariance<double>, NoiseCovariance<double>> pairs[] = {
        {{0.5, 0.5}, {0.25, 0.25}}, {{0.5, 0.5}, {0.0, 0.0}}, {{0.5, 0.5}, {0.5, 0.5}}};
    for (const auto& [n1, n2] : pairs) {
        const auto total = add_noise(n1, n2);
        const int cutoff = opt.cutoff > 0 ? opt.cutoff : default_cutoff(0.0, total);
        const double diff = cascade_density_check(CoherentState{}, n1, n2, cutoff, grid, opt.eps_trunc);
        report.expect_near("cascade additivity " + std::to_string(n1.var_x()) + " + " + std::to_string(n2.var_x()),
                           0.0, diff, 1e-6, opt.tolerance);
    }

    const auto cloner = squeezed_variant(1, 2, 0.5);
    const SqueezedState squeezed{{0.0, 0.0}, 0.5};
    const auto smix = clone_reduced_output(cloner, squeezed);
    const int scut = cutoff_for(smix);
    const DensityMatrix srho = mixture_density_matrix(smix, scut, grid, opt.eps_trunc);
    report.expect_near("squeezed 1->2 oracle fidelity", 2.0 / 3.0,
                       fidelity_against(squeezed_fock_vector(squeezed, scut, opt.eps_trunc), srho), 1e-4,
                       opt.tolerance);
    report.expect_none("squeezed noise product == 1/4", cloner.noise_product() == Rational(1, 4) ? 0 : 1);
    return report;
}

}  // namespace sgclone
