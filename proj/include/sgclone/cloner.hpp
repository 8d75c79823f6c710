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

// Closed-form engine for N -> M symmetric Gaussian cloners (SGCs).
//
// Every clone of an SGC is the input state convolved with an isotropic
// Gaussian displacement distribution of per-quadrature variance s. The best
// achievable s for coherent inputs is (M - N) / (M N), giving single-clone
// fidelity 1 / (1 + s) = M N / (M N + M - N). Cascading cloners adds their
// variances.
//
// Values are exact (Rational) whenever N and M are finite integers; the
// M = unbounded limit is likewise exact (s = 1/N).

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "sgclone/errors.hpp"
#include "sgclone/quadrature_core.hpp"
#include "sgclone/rational.hpp"

namespace sgclone {

struct Unbounded {};
inline constexpr Unbounded unbounded{};

/// Number of cloner outputs: a positive integer or the measurement limit.
class CopyCount {
public:
    constexpr CopyCount(int n) : count_(n) {}  // NOLINT(google-explicit-constructor)
    constexpr CopyCount(Unbounded) : count_(std::nullopt) {}  // NOLINT(google-explicit-constructor)

    constexpr bool is_unbounded() const { return !count_.has_value(); }
    int value() const {
        if (!count_) {
            throw contract_violation("copy count is unbounded");
        }
        return *count_;
    }
    std::string to_string() const { return count_ ? std::to_string(*count_) : "inf"; }

    friend constexpr bool operator==(const CopyCount&, const CopyCount&) = default;

private:
    std::optional<int> count_;
};

inline void check_copy_counts(int n, const CopyCount& m) {
    if (n < 1) {
        throw invalid_cloner("cloner needs at least one input copy, got " + std::to_string(n));
    }
    if (!m.is_unbounded() && m.value() < n) {
        throw invalid_cloner("cloner cannot reduce the number of copies (" + std::to_string(n) +
                             " -> " + m.to_string() + ")");
    }
}

template <class T>
class Fidelity {
public:
    explicit Fidelity(T value) : value_(value) {
        if (value_ < T(0) || value_ > T(1)) {
            throw domain_error("fidelity outside [0, 1]");
        }
    }
    const T& value() const { return value_; }
    double to_double() const { return sgclone::to_double(value_); }

    friend bool operator==(const Fidelity&, const Fidelity&) = default;
    friend bool operator<(const Fidelity& a, const Fidelity& b) { return a.value_ < b.value_; }
    friend bool operator>(const Fidelity& a, const Fidelity& b) { return b.value_ < a.value_; }

private:
    T value_;
};

/// Smallest isotropic noise any N -> M SGC can add to a coherent state.
inline NoiseCovariance<Rational> optimal_noise_variance(int n, CopyCount m) {
    check_copy_counts(n, m);
    if (m.is_unbounded()) {
        return NoiseCovariance<Rational>::isotropic(Rational(1, n));
    }
    const std::int64_t big_m = m.value();
    return NoiseCovariance<Rational>::isotropic(Rational(big_m - n, big_m * n));
}

inline Fidelity<Rational> optimal_fidelity(int n, CopyCount m) {
    check_copy_counts(n, m);
    if (m.is_unbounded()) {
        return Fidelity<Rational>(Rational(n, n + 1));
    }
    const std::int64_t big_m = m.value();
    const std::int64_t mn = big_m * n;
    return Fidelity<Rational>(Rational(mn, mn + big_m - n));
}

/// 1 / (1 + s) for isotropic noise s; overlap of a coherent state with its noisy copy.
template <class T>
Fidelity<T> fidelity_from_variance(const NoiseCovariance<T>& noise) {
    if (!noise.is_isotropic()) {
        throw contract_violation("fidelity_from_variance needs isotropic noise; use the squeezed path");
    }
    return Fidelity<T>(T(1) / (T(1) + noise.var_x()));
}

/// An N -> M symmetric Gaussian cloner.
///
/// `noise()` is expressed in the cloner's quadrature frame. For the squeezed
/// variant with parameter r that frame is (x e^{-r}, p e^{r}); for r = 0 it is
/// the physical frame. Noise above the optimal bound is allowed.
template <class T>
class ClonerSpec {
public:
    ClonerSpec(int n_in, CopyCount m_out, NoiseCovariance<T> noise, double squeeze_r = 0.0)
        : n_in_(n_in), m_out_(m_out), noise_(noise), squeeze_r_(squeeze_r) {
        check_copy_counts(n_in_, m_out_);
        if (!std::isfinite(squeeze_r_)) {
            throw domain_error("squeezing parameter must be finite");
        }
    }

    int n_in() const { return n_in_; }
    const CopyCount& m_out() const { return m_out_; }
    const NoiseCovariance<T>& noise() const { return noise_; }
    double squeeze_r() const { return squeeze_r_; }

    /// Noise variances along the physical x and p axes.
    NoiseCovariance<double> physical_noise() const {
        const double sx = sgclone::to_double(noise_.var_x());
        const double sp = sgclone::to_double(noise_.var_p());
        if (squeeze_r_ == 0.0) {
            return {sx, sp};
        }
        return {sx * std::exp(2.0 * squeeze_r_), sp * std::exp(-2.0 * squeeze_r_)};
    }

    /// var_x * var_p of the physical noise. The frame rescaling cancels
    /// identically, so this is exact for Rational noise.
    T noise_product() const { return noise_.var_x() * noise_.var_p(); }

    friend bool operator==(const ClonerSpec&, const ClonerSpec&) = default;

private:
    int n_in_;
    CopyCount m_out_;
    NoiseCovariance<T> noise_;
    double squeeze_r_;
};

inline ClonerSpec<Rational> optimal_cloner(int n, CopyCount m) {
    return ClonerSpec<Rational>(n, m, optimal_noise_variance(n, m));
}

inline ClonerSpec<double> to_double(const ClonerSpec<Rational>& c) {
    return ClonerSpec<double>(c.n_in(), c.m_out(), c.noise().to_double(), c.squeeze_r());
}

/// Feed every output of `first` into `second`.
template <class T>
ClonerSpec<T> cascade(const ClonerSpec<T>& first, const ClonerSpec<T>& second) {
    if (first.m_out().is_unbounded()) {
        throw composition_error("cannot cascade after a cloner with unbounded output");
    }
    if (first.m_out().value() != second.n_in()) {
        throw composition_error("cascade mismatch: first cloner emits " + first.m_out().to_string() +
                                " copies, second expects " + std::to_string(second.n_in()));
    }
    if (first.squeeze_r() != second.squeeze_r()) {
        throw composition_error("cascade mismatch: cloners act in different quadrature frames");
    }
    return ClonerSpec<T>(first.n_in(), second.m_out(), add_noise(first.noise(), second.noise()),
                         first.squeeze_r());
}

/// State of any single clone when `input` is cloned by `c`.
template <class T>
GaussianMixtureState<T> clone_reduced_output(const ClonerSpec<T>& c, const CoherentState& input) {
    if (c.squeeze_r() != 0.0 || !c.noise().is_isotropic()) {
        throw contract_violation("coherent inputs need an isotropic cloner");
    }
    return GaussianMixtureState<T>{input, c.noise()};
}

template <class T>
GaussianMixtureState<double> clone_reduced_output(const ClonerSpec<T>& c, const SqueezedState& input) {
    if (c.squeeze_r() != input.r || !c.noise().is_isotropic()) {
        throw contract_violation("squeezed inputs need a cloner matched to the same squeezing parameter");
    }
    return GaussianMixtureState<double>{input, c.physical_noise()};
}

/// Cloner for the family of squeezed states with parameter r: the optimal
/// N -> M noise applied in the rescaled frame beta = (x/s + i s p)/sqrt(2), s = e^r.
inline ClonerSpec<Rational> squeezed_variant(int n, CopyCount m, double r) {
    return ClonerSpec<Rational>(n, m, optimal_noise_variance(n, m), r);
}

namespace detail {

inline bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1e-300, std::abs(a), std::abs(b)});
}

}  // namespace detail

/// Fidelity of a mixture against its own center, in closed form.
template <class T>
Fidelity<double> mixture_fidelity(const GaussianMixtureState<T>& mix) {
    if (const auto* sq = std::get_if<SqueezedState>(&mix.center)) {
        const double sx = to_double(mix.noise.var_x()) * std::exp(-2.0 * sq->r);
        const double sp = to_double(mix.noise.var_p()) * std::exp(2.0 * sq->r);
        if (!detail::nearly_equal(sx, sp)) {
            throw contract_violation("mixture noise is not matched to the squeezed center");
        }
        return Fidelity<double>(1.0 / (1.0 + 0.5 * (sx + sp)));
    }
    if (!mix.noise.is_isotropic()) {
        throw contract_violation("coherent-center mixture with anisotropic noise");
    }
    return Fidelity<double>(1.0 / (1.0 + to_double(mix.noise.var_x())));
}

}  // namespace sgclone
