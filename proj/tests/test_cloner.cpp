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

#include "sgclone/cloner.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using namespace sgclone;

namespace {

// <alpha| rho |alpha> for the mixture with isotropic noise s, by trapezoid
// integration of the Gaussian-weighted coherent overlap over the beta plane.
double fidelity_by_trapezoid(double s) {
    const double half_width = 12.0 * std::sqrt(s);
    const int steps = 400;
    const double h = 2.0 * half_width / steps;
    double sum = 0.0;
    for (int i = 0; i <= steps; ++i) {
        for (int j = 0; j <= steps; ++j) {
            const std::complex<double> beta{-half_width + i * h, -half_width + j * h};
            const double weight = std::exp(-std::norm(beta) / s) / (std::numbers::pi * s);
            sum += weight * overlap_sq(0.0, beta);
        }
    }
    return sum * h * h;
}

Rational variance(int n, CopyCount m) { return optimal_noise_variance(n, m).var_x(); }

}  // namespace

TEST(cloner, optimal_noise_variance_examples) {
    EXPECT_EQ(variance(1, 2), Rational(1, 2));
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(variance(n, n), Rational(0));
    EXPECT_EQ(variance(1, unbounded), Rational(1));
    EXPECT_EQ(variance(2, 4), Rational(1, 4));
    EXPECT_TRUE(optimal_noise_variance(3, 7).is_isotropic());
}

TEST(cloner, optimal_fidelity_examples) {
    EXPECT_EQ(optimal_fidelity(1, 2).value(), Rational(2, 3));
    for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ(optimal_fidelity(n, n).value(), Rational(1));
        EXPECT_EQ(optimal_fidelity(n, unbounded).value(), Rational(n, n + 1));
    }
    EXPECT_EQ(optimal_fidelity(1, unbounded).value(), Rational(1, 2));
}

TEST(cloner, invalid_copy_counts) {
    EXPECT_THROW(optimal_noise_variance(3, 2), invalid_cloner);
    EXPECT_THROW(optimal_fidelity(5, 1), invalid_cloner);
    EXPECT_THROW(optimal_noise_variance(0, 2), invalid_cloner);
    EXPECT_THROW(optimal_cloner(-1, unbounded), invalid_cloner);
    EXPECT_NO_THROW(optimal_cloner(4, unbounded));
}

TEST(cloner, fidelity_from_variance_examples) {
    using N = NoiseCovariance<Rational>;
    EXPECT_EQ(fidelity_from_variance(N::isotropic(Rational(1, 2))).value(), Rational(2, 3));
    EXPECT_EQ(fidelity_from_variance(N::isotropic(Rational(0))).value(), Rational(1));
    EXPECT_EQ(fidelity_from_variance(N::isotropic(Rational(1))).value(), Rational(1, 2));
    EXPECT_THROW(fidelity_from_variance(NoiseCovariance<double>(0.5, 0.25)), contract_violation);
}

TEST(cloner, fidelity_from_variance_matches_direct_integration) {
    for (double s : {0.125, 0.25, 1.0 / 3.0, 0.5, 0.75, 1.0, 2.0}) {
        EXPECT_NEAR(fidelity_from_variance(NoiseCovariance<double>::isotropic(s)).value(), fidelity_by_trapezoid(s),
                    1e-10)
            << "s=" << s;
    }
}

TEST(cloner, fidelity_from_variance_agrees_with_optimal_fidelity) {
    for (int n = 1; n <= 64; ++n) {
        EXPECT_EQ(fidelity_from_variance(optimal_noise_variance(n, unbounded)), optimal_fidelity(n, unbounded));
        for (int m = n; m <= 64; ++m) {
            ASSERT_EQ(fidelity_from_variance(optimal_noise_variance(n, m)), optimal_fidelity(n, m))
                << n << "->" << m;
        }
    }
}

TEST(cloner, cascade_examples) {
    EXPECT_EQ(cascade(optimal_cloner(1, 2), optimal_cloner(2, 4)).noise().var_x(), Rational(3, 4));
    EXPECT_EQ(cascade(optimal_cloner(1, 2), optimal_cloner(2, 4)), optimal_cloner(1, 4));

    const ClonerSpec<Rational> noisy(3, 9, {Rational(2, 5), Rational(2, 5)});
    EXPECT_EQ(cascade(optimal_cloner(3, 3), noisy), noisy);

    const auto c = cascade(optimal_cloner(2, 3), optimal_cloner(3, 6));
    EXPECT_EQ(c.noise().var_x(), Rational(1, 6) + Rational(1, 6));
    EXPECT_EQ(c.noise().var_x(), variance(2, 6));
    EXPECT_EQ(c.n_in(), 2);
    EXPECT_EQ(c.m_out(), CopyCount(6));
}

TEST(cloner, cascade_into_measurement) {
    const auto c = cascade(optimal_cloner(2, 5), optimal_cloner(5, unbounded));
    EXPECT_TRUE(c.m_out().is_unbounded());
    EXPECT_EQ(c.noise(), optimal_noise_variance(2, unbounded));
}

TEST(cloner, cascade_errors) {
    EXPECT_THROW(cascade(optimal_cloner(1, 2), optimal_cloner(3, 4)), composition_error);
    EXPECT_THROW(cascade(optimal_cloner(1, unbounded), optimal_cloner(1, 2)), composition_error);
    EXPECT_THROW(cascade(squeezed_variant(1, 2, 0.3), optimal_cloner(2, 4)), composition_error);
    EXPECT_NO_THROW(cascade(squeezed_variant(1, 2, 0.3), squeezed_variant(2, 4, 0.3)));
}

TEST(cloner, optimal_cascade_closure) {
    for (int n = 1; n <= 24; ++n) {
        for (int m = n; m <= 24; ++m) {
            for (int l = m; l <= 24; ++l) {
                ASSERT_EQ(cascade(optimal_cloner(n, m), optimal_cloner(m, l)).noise(), optimal_noise_variance(n, l));
            }
        }
    }
}

TEST(cloner, suboptimal_cloners_compose) {
    const ClonerSpec<double> a(1, 2, {0.7, 0.6});
    const ClonerSpec<double> b(2, 3, {0.1, 0.2});
    const auto c = cascade(a, b);
    EXPECT_DOUBLE_EQ(c.noise().var_x(), 0.8);
    EXPECT_DOUBLE_EQ(c.noise().var_p(), 0.8);
}

TEST(cloner, monotone_in_replica_multiplier) {
    for (const auto& [n, m] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 7}}) {
        for (int k = 1; k < 16; ++k) {
            EXPECT_LT(variance((k + 1) * n, (k + 1) * m), variance(k * n, k * m));
            EXPECT_GT(optimal_fidelity((k + 1) * n, (k + 1) * m), optimal_fidelity(k * n, k * m));
        }
    }
}

TEST(cloner, many_inputs_approach_classical_copying) {
    for (int n : {1000, 100000, 1000000}) {
        EXPECT_GT(optimal_fidelity(n, n + 1).to_double(), 1.0 - 1.0 / n);
        EXPECT_GT(optimal_fidelity(n, 2 * n).to_double(), 1.0 - 1.0 / n);
    }
}

TEST(cloner, clone_reduced_output_examples) {
    const auto out = clone_reduced_output(optimal_cloner(1, 2), CoherentState{0.0});
    EXPECT_EQ(out.center_amplitude(), ComplexAmplitude(0.0));
    EXPECT_EQ(out.noise, NoiseCovariance<Rational>::isotropic(Rational(1, 2)));

    const auto pure = clone_reduced_output(optimal_cloner(4, 4), CoherentState{{3.0, -2.0}});
    EXPECT_TRUE(pure.noise.is_zero());
    EXPECT_EQ(pure.center_amplitude(), ComplexAmplitude(3.0, -2.0));

    const auto meas = clone_reduced_output(optimal_cloner(1, unbounded), CoherentState{{1.0, 1.0}});
    EXPECT_EQ(meas.center_amplitude(), ComplexAmplitude(1.0, 1.0));
    EXPECT_EQ(meas.noise, NoiseCovariance<Rational>::isotropic(Rational(1)));
}

TEST(cloner, clone_reduced_output_contract) {
    const ClonerSpec<double> aniso(1, 2, {0.5, 0.25});
    EXPECT_THROW(clone_reduced_output(aniso, CoherentState{}), contract_violation);
    EXPECT_THROW(clone_reduced_output(squeezed_variant(1, 2, 0.5), CoherentState{}), contract_violation);
    EXPECT_THROW(clone_reduced_output(squeezed_variant(1, 2, 0.5), SqueezedState{0.0, 0.4}), contract_violation);
    EXPECT_NO_THROW(clone_reduced_output(squeezed_variant(1, 2, 0.0), CoherentState{}));
}

TEST(cloner, squeezed_variant_examples) {
    EXPECT_EQ(squeezed_variant(1, 2, 0.0), optimal_cloner(1, 2));
    EXPECT_EQ(squeezed_variant(3, unbounded, 0.0), optimal_cloner(3, unbounded));

    for (double r : {-1.2, -0.3, 0.5, 1.0}) {
        EXPECT_EQ(squeezed_variant(1, 2, r).noise_product(), Rational(1, 4));
        const auto phys = squeezed_variant(1, 2, r).physical_noise();
        EXPECT_NEAR(phys.var_x() * phys.var_p(), 0.25, 1e-15);
    }
    const auto phys = squeezed_variant(1, 2, 0.5).physical_noise();
    EXPECT_NEAR(phys.var_x(), 1.3591409142295225, 1e-15);
    EXPECT_NEAR(phys.var_p(), 0.18393972058572117, 1e-15);
}

TEST(cloner, mixture_fidelity_examples) {
    const GaussianMixtureState<Rational> coherent{CoherentState{}, NoiseCovariance<Rational>::isotropic(Rational(1, 2))};
    EXPECT_NEAR(mixture_fidelity(coherent).value(), 2.0 / 3.0, 1e-16);

    const GaussianMixtureState<double> pure{SqueezedState{{1.0, 2.0}, 0.8}, {}};
    EXPECT_EQ(mixture_fidelity(pure).value(), 1.0);

    const SqueezedState sq{{0.5, -0.5}, 0.5};
    const auto mix = clone_reduced_output(squeezed_variant(1, 2, 0.5), sq);
    EXPECT_NEAR(mixture_fidelity(mix).value(), 2.0 / 3.0, 1e-15);
}

TEST(cloner, mixture_fidelity_contract) {
    const GaussianMixtureState<double> aniso{CoherentState{}, {0.5, 0.3}};
    EXPECT_THROW(mixture_fidelity(aniso), contract_violation);
    const GaussianMixtureState<double> mismatched{SqueezedState{0.0, 0.5}, {0.5, 0.5}};
    EXPECT_THROW(mixture_fidelity(mismatched), contract_violation);
}

TEST(cloner, fidelity_is_translation_invariant) {
    for (const auto& [n, m] : {std::pair{1, 2}, std::pair{2, 5}, std::pair{4, 9}}) {
        const double reference = mixture_fidelity(clone_reduced_output(optimal_cloner(n, m), CoherentState{})).value();
        for (const ComplexAmplitude a : {ComplexAmplitude{1, 0}, {-3, 2}, {100, -50}}) {
            EXPECT_EQ(mixture_fidelity(clone_reduced_output(optimal_cloner(n, m), CoherentState{a})).value(),
                      reference);
        }
    }
}

TEST(cloner, fidelity_range_enforced) {
    EXPECT_THROW(Fidelity<double>(1.5), domain_error);
    EXPECT_THROW(Fidelity<Rational>(Rational(-1, 3)), domain_error);
}
