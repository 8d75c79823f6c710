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

// Phase-space conventions shared by every module:
//
//   hbar = 1,   x = (a + a^dag) / sqrt(2),   p = (a - a^dag) / (i sqrt(2)),
//   vacuum quadrature variance 1/2,          beta = (x + i p) / sqrt(2).
//
// A displacement D(beta) therefore shifts x by sqrt(2) Re(beta) and p by
// sqrt(2) Im(beta). Noise covariances are expressed per quadrature, in the
// same units as x and p.

#include <cmath>
#include <complex>
#include <numbers>
#include <variant>

#include "sgclone/errors.hpp"
#include "sgclone/rational.hpp"

namespace sgclone {

using ComplexAmplitude = std::complex<double>;

inline constexpr double kVacuumVariance = 0.5;

inline double position_of(ComplexAmplitude a) { return std::numbers::sqrt2 * a.real(); }
inline double momentum_of(ComplexAmplitude a) { return std::numbers::sqrt2 * a.imag(); }

inline ComplexAmplitude amplitude_from_quadratures(double x, double p) {
    return ComplexAmplitude{x, p} / std::numbers::sqrt2;
}

struct CoherentState {
    ComplexAmplitude alpha{};

    static constexpr double intrinsic_var_x() { return kVacuumVariance; }
    static constexpr double intrinsic_var_p() { return kVacuumVariance; }
};

/// Minimum-uncertainty state with variances e^{2r}/2 (x) and e^{-2r}/2 (p).
struct SqueezedState {
    ComplexAmplitude alpha{};
    double r = 0.0;

    double intrinsic_var_x() const { return kVacuumVariance * std::exp(2.0 * r); }
    double intrinsic_var_p() const { return kVacuumVariance * std::exp(-2.0 * r); }
};

/// Diagonal covariance of a random phase-space displacement.
template <class T>
class NoiseCovariance {
public:
    NoiseCovariance() : var_x_(0), var_p_(0) {}
    NoiseCovariance(T var_x, T var_p) : var_x_(var_x), var_p_(var_p) {
        if (var_x_ < T(0) || var_p_ < T(0)) {
            throw domain_error("noise variances must be non-negative");
        }
    }

    static NoiseCovariance isotropic(T var) { return NoiseCovariance(var, var); }

    const T& var_x() const { return var_x_; }
    const T& var_p() const { return var_p_; }
    bool is_isotropic() const { return var_x_ == var_p_; }
    bool is_zero() const { return var_x_ == T(0) && var_p_ == T(0); }

    NoiseCovariance<double> to_double() const {
        return {sgclone::to_double(var_x_), sgclone::to_double(var_p_)};
    }

    friend bool operator==(const NoiseCovariance&, const NoiseCovariance&) = default;

private:
    T var_x_;
    T var_p_;
};

using StateCenter = std::variant<CoherentState, SqueezedState>;

/// Pure center state blurred by a Gaussian distribution of displacements.
/// Stores the analytic description only; see fock_oracle.hpp for matrices.
template <class T>
struct GaussianMixtureState {
    StateCenter center;
    NoiseCovariance<T> noise;

    ComplexAmplitude center_amplitude() const {
        return std::visit([](const auto& s) { return s.alpha; }, center);
    }
    bool has_coherent_center() const { return std::holds_alternative<CoherentState>(center); }

    double intrinsic_var_x() const {
        return std::visit([](const auto& s) { return s.intrinsic_var_x(); }, center);
    }
    double intrinsic_var_p() const {
        return std::visit([](const auto& s) { return s.intrinsic_var_p(); }, center);
    }
    double total_var_x() const { return intrinsic_var_x() + to_double(noise.var_x()); }
    double total_var_p() const { return intrinsic_var_p() + to_double(noise.var_p()); }
};

inline CoherentState displace(const CoherentState& state, ComplexAmplitude beta) {
    return CoherentState{state.alpha + beta};
}

inline SqueezedState displace(const SqueezedState& state, ComplexAmplitude beta) {
    return SqueezedState{state.alpha + beta, state.r};
}

// Noise is displacement invariant; only the center moves.
template <class T>
GaussianMixtureState<T> displace(const GaussianMixtureState<T>& mix, ComplexAmplitude beta) {
    auto moved = std::visit([&](const auto& s) { return StateCenter{displace(s, beta)}; }, mix.center);
    return GaussianMixtureState<T>{moved, mix.noise};
}

/// |<a|b>|^2 for coherent states.
inline double overlap_sq(ComplexAmplitude a, ComplexAmplitude b) {
    return std::exp(-std::norm(a - b));
}

/// Convolution of two independent displacement distributions.
template <class T>
NoiseCovariance<T> add_noise(const NoiseCovariance<T>& n1, const NoiseCovariance<T>& n2) {
    return NoiseCovariance<T>(n1.var_x() + n2.var_x(), n1.var_p() + n2.var_p());
}

}  // namespace sgclone
