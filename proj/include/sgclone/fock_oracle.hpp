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

// Independent numerical check of the closed-form cloner results.
//
// Gaussian mixtures are built as explicit density matrices in a truncated
// Fock basis {|0>, ..., |cutoff>} by tensor Gauss-Hermite quadrature over the
// displacement distribution. Displaced coherent states are exact in this basis
// up to the Poisson tail beyond the cutoff, which is tracked through the trace.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "sgclone/errors.hpp"
#include "sgclone/gauss_hermite.hpp"
#include "sgclone/quadrature_core.hpp"

namespace sgclone {

inline constexpr double kDefaultTruncation = 1e-8;
inline constexpr int kDefaultNodes = 41;
inline constexpr int kMinCutoff = 32;
inline constexpr int kMaxCutoff = 256;
inline constexpr double kMaxSqueeze = 1.5;

struct FockVector {
    int cutoff = 0;
    Eigen::VectorXcd amplitudes;

    double norm_sq() const { return amplitudes.squaredNorm(); }
};

struct DensityMatrix {
    int cutoff = 0;
    Eigen::MatrixXcd matrix;

    double trace() const { return matrix.trace().real(); }
};

/// Tensor Gauss-Hermite grid used for the displacement integral.
class QuadratureGrid {
public:
    explicit QuadratureGrid(int nodes_per_axis = kDefaultNodes) : nodes_per_axis_(nodes_per_axis) {
        if (nodes_per_axis_ < 2) {
            throw domain_error("quadrature grid needs at least two nodes per axis");
        }
        rule_ = gauss_hermite(nodes_per_axis_);
    }
    int nodes_per_axis() const { return nodes_per_axis_; }
    const GaussHermiteRule& rule() const { return rule_; }

private:
    int nodes_per_axis_;
    GaussHermiteRule rule_;
};

/// n_max = ceil((|alpha| + 5 sqrt(max noise var) + 3)^2), clamped to [32, 256].
inline int default_cutoff(ComplexAmplitude center, const NoiseCovariance<double>& noise) {
    const double spread = std::sqrt(std::max(noise.var_x(), noise.var_p()));
    const double reach = std::abs(center) + 5.0 * spread + 3.0;
    return std::clamp(static_cast<int>(std::ceil(reach * reach)), kMinCutoff, kMaxCutoff);
}

template <class T>
int default_cutoff(const GaussianMixtureState<T>& mix) {
    const auto noise = mix.noise.to_double();
    if (const auto* sq = std::get_if<SqueezedState>(&mix.center)) {
        // Cutoff for the unsqueezed frame, plus room for the squeezer to spread it.
        const double s = std::exp(std::abs(sq->r));
        const ComplexAmplitude frame_center =
            amplitude_from_quadratures(position_of(sq->alpha) / s, momentum_of(sq->alpha) * s);
        const int base = default_cutoff(frame_center, {noise.var_x() / (s * s), noise.var_p() * s * s});
        return std::clamp(static_cast<int>(std::ceil(1.5 * base * s * s)), kMinCutoff, kMaxCutoff);
    }
    return default_cutoff(mix.center_amplitude(), noise);
}

namespace detail {

inline void check_cutoff(int cutoff) {
    if (cutoff < 1) {
        throw domain_error("Fock cutoff must be at least 1");
    }
}

/// c_n = e^{-|z|^2/2} z^n / sqrt(n!), n = 0..cutoff, scaled by `scale`.
template <class Out>
void fill_coherent(ComplexAmplitude z, double scale, Out&& out) {
    std::complex<double> c = scale * std::exp(-0.5 * std::norm(z));
    out(0) = c;
    for (Eigen::Index n = 1; n < out.size(); ++n) {
        c *= z / std::sqrt(static_cast<double>(n));
        out(n) = c;
    }
}

/// One quadrature axis of the displacement distribution: offsets in
/// quadrature units and probability weights summing to one.
using AxisNodes = std::vector<std::pair<double, double>>;

inline AxisNodes axis_nodes(double variance, const GaussHermiteRule& rule) {
    if (variance == 0.0) {
        return {{0.0, 1.0}};
    }
    const double scale = std::sqrt(2.0 * variance);
    const double norm = 1.0 / std::sqrt(std::numbers::pi);
    AxisNodes out;
    out.reserve(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        out.emplace_back(scale * rule.nodes[i], norm * rule.weights[i]);
    }
    return out;
}

/// Distribution of the sum of two independent displacements along one axis.
inline AxisNodes convolve(const AxisNodes& outer, const AxisNodes& inner) {
    AxisNodes out;
    out.reserve(outer.size() * inner.size());
    for (const auto& [g, wg] : outer) {
        for (const auto& [b, wb] : inner) {
            out.emplace_back(g + b, wg * wb);
        }
    }
    return out;
}

/// sum_k w_k |z_k><z_k| accumulated through blocked rank-k updates.
/// The summation order is fixed by the order of `add` calls.
class ProjectorSum {
public:
    explicit ProjectorSum(int cutoff)
        : dim_(cutoff + 1),
          lower_(Eigen::MatrixXcd::Zero(dim_, dim_)),
          block_(dim_, kBlock) {}

    void add(double weight, ComplexAmplitude z) {
        fill_coherent(z, std::sqrt(weight), block_.col(filled_));
        if (++filled_ == kBlock) flush();
    }

    Eigen::MatrixXcd finish() {
        flush();
        Eigen::MatrixXcd full = lower_.selfadjointView<Eigen::Lower>();
        return full;
    }

private:
    static constexpr Eigen::Index kBlock = 256;

    void flush() {
        if (filled_ == 0) return;
        lower_.selfadjointView<Eigen::Lower>().rankUpdate(block_.leftCols(filled_));
        filled_ = 0;
    }

    Eigen::Index dim_;
    Eigen::MatrixXcd lower_;
    Eigen::MatrixXcd block_;
    Eigen::Index filled_ = 0;
};

inline DensityMatrix coherent_mixture(ComplexAmplitude center, const AxisNodes& xs, const AxisNodes& ps,
                                      int cutoff, double eps_trunc) {
    ProjectorSum sum(cutoff);
    for (const auto& [dx, wx] : xs) {
        for (const auto& [dp, wp] : ps) {
            sum.add(wx * wp, center + amplitude_from_quadratures(dx, dp));
        }
    }
    DensityMatrix rho{cutoff, sum.finish()};
    if (rho.trace() < 1.0 - eps_trunc) {
        throw truncation_error("cutoff " + std::to_string(cutoff) + " loses " +
                               std::to_string(1.0 - rho.trace()) + " of the trace");
    }
    return rho;
}

}  // namespace detail

inline FockVector coherent_fock_vector(ComplexAmplitude alpha, int cutoff,
                                       double eps_trunc = kDefaultTruncation) {
    detail::check_cutoff(cutoff);
    FockVector v{cutoff, Eigen::VectorXcd(cutoff + 1)};
    detail::fill_coherent(alpha, 1.0, v.amplitudes);
    if (1.0 - v.norm_sq() > eps_trunc) {
        throw truncation_error("cutoff " + std::to_string(cutoff) + " too small for |alpha| = " +
                               std::to_string(std::abs(alpha)));
    }
    return v;
}

/// exp((r/2)(a^dag^2 - a^2)) in the truncated basis. Stretches x by e^r and
/// compresses p by e^{-r}, so the squeezed vacuum has var_x = e^{2r}/2.
inline Eigen::MatrixXcd squeeze_fock_matrix(double r, int cutoff, double eps_trunc = kDefaultTruncation) {
    detail::check_cutoff(cutoff);
    if (!(std::abs(r) <= kMaxSqueeze)) {
        throw truncation_error("squeezing parameter outside the supported range |r| <= 1.5");
    }
    const Eigen::Index dim = cutoff + 1;
    Eigen::MatrixXd generator = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index n = 0; n + 2 < dim; ++n) {
        const double element = 0.5 * r * std::sqrt(static_cast<double>((n + 1) * (n + 2)));
        generator(n + 2, n) = element;
        generator(n, n + 2) = -element;
    }
    const Eigen::MatrixXd unitary = generator.exp();
    // The truncated exponential is only faithful where the squeezed vacuum
    // stays clear of the cutoff.
    const Eigen::Index upper = (2 * dim) / 3;
    if (unitary.col(0).tail(dim - upper).squaredNorm() > eps_trunc) {
        throw truncation_error("cutoff " + std::to_string(cutoff) + " too small for squeezing r = " +
                               std::to_string(r));
    }
    return unitary.cast<std::complex<double>>();
}

namespace detail {

/// Amplitude of the coherent state that the squeezer maps to `s`.
inline ComplexAmplitude unsqueezed_amplitude(const SqueezedState& s) {
    return amplitude_from_quadratures(position_of(s.alpha) * std::exp(-s.r),
                                      momentum_of(s.alpha) * std::exp(s.r));
}

}  // namespace detail

/// D(alpha) S(r) |0> = S(r) |alpha'> with alpha' in the unsqueezed frame.
inline FockVector squeezed_fock_vector(const SqueezedState& s, int cutoff,
                                       double eps_trunc = kDefaultTruncation) {
    const FockVector frame = coherent_fock_vector(detail::unsqueezed_amplitude(s), cutoff, eps_trunc);
    return FockVector{cutoff, squeeze_fock_matrix(s.r, cutoff, eps_trunc) * frame.amplitudes};
}

inline FockVector fock_vector(const StateCenter& center, int cutoff, double eps_trunc = kDefaultTruncation) {
    if (const auto* sq = std::get_if<SqueezedState>(&center)) {
        return squeezed_fock_vector(*sq, cutoff, eps_trunc);
    }
    return coherent_fock_vector(std::get<CoherentState>(center).alpha, cutoff, eps_trunc);
}

/// Density matrix of the mixture: coherent centers directly, squeezed centers
/// by building the unsqueezed-frame mixture and conjugating with the squeezer.
template <class T>
DensityMatrix mixture_density_matrix(const GaussianMixtureState<T>& mix, int cutoff,
                                     const QuadratureGrid& grid = QuadratureGrid(),
                                     double eps_trunc = kDefaultTruncation) {
    detail::check_cutoff(cutoff);
    const NoiseCovariance<double> noise = mix.noise.to_double();

    if (const auto* sq = std::get_if<SqueezedState>(&mix.center)) {
        const double s2 = std::exp(2.0 * sq->r);
        const auto xs = detail::axis_nodes(noise.var_x() / s2, grid.rule());
        const auto ps = detail::axis_nodes(noise.var_p() * s2, grid.rule());
        const DensityMatrix frame =
            detail::coherent_mixture(detail::unsqueezed_amplitude(*sq), xs, ps, cutoff, eps_trunc);
        const Eigen::MatrixXcd squeeze = squeeze_fock_matrix(sq->r, cutoff, eps_trunc);
        DensityMatrix rho{cutoff, squeeze * frame.matrix * squeeze.adjoint()};
        if (rho.trace() < 1.0 - eps_trunc) {
            throw truncation_error("squeezed mixture exceeds the cutoff");
        }
        return rho;
    }

    const ComplexAmplitude center = mix.center_amplitude();
    if (noise.is_zero()) {
        const FockVector v = coherent_fock_vector(center, cutoff, eps_trunc);
        return DensityMatrix{cutoff, v.amplitudes * v.amplitudes.adjoint()};
    }
    return detail::coherent_mixture(center, detail::axis_nodes(noise.var_x(), grid.rule()),
                                    detail::axis_nodes(noise.var_p(), grid.rule()), cutoff, eps_trunc);
}

/// <state|rho|state>.
inline double fidelity_against(const FockVector& state, const DensityMatrix& rho) {
    if (state.cutoff != rho.cutoff || state.amplitudes.size() != rho.matrix.rows()) {
        throw dimension_error("state and density matrix use different cutoffs");
    }
    const std::complex<double> f = state.amplitudes.dot(rho.matrix * state.amplitudes);
    if (std::abs(f.imag()) >= 1e-12) {
        throw contract_violation("density matrix is not Hermitian");
    }
    return f.real();
}

/// Max-abs entrywise difference between (a) the mixture with noise n1 passed
/// through a second mixture with noise n2, and (b) one mixture with noise n1 + n2.
inline double cascade_density_check(const CoherentState& center, const NoiseCovariance<double>& n1,
                                    const NoiseCovariance<double>& n2, int cutoff,
                                    const QuadratureGrid& grid = QuadratureGrid(),
                                    double eps_trunc = kDefaultTruncation) {
    detail::check_cutoff(cutoff);
    const auto& rule = grid.rule();
    const auto xs = detail::convolve(detail::axis_nodes(n2.var_x(), rule), detail::axis_nodes(n1.var_x(), rule));
    const auto ps = detail::convolve(detail::axis_nodes(n2.var_p(), rule), detail::axis_nodes(n1.var_p(), rule));
    const DensityMatrix sequential = detail::coherent_mixture(center.alpha, xs, ps, cutoff, eps_trunc);

    const NoiseCovariance<double> total = add_noise(n1, n2);
    const DensityMatrix combined = detail::coherent_mixture(
        center.alpha, detail::axis_nodes(total.var_x(), rule), detail::axis_nodes(total.var_p(), rule), cutoff,
        eps_trunc);
    return (sequential.matrix - combined.matrix).cwiseAbs().maxCoeff();
}

struct QuadratureMoments {
    double mean_x = 0.0;
    double mean_p = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
};

/// x, p moments from the exact ladder-operator matrix elements, normalized by the trace.
inline QuadratureMoments quadrature_moments(const DensityMatrix& rho) {
    const auto& m = rho.matrix;
    const Eigen::Index dim = m.rows();
    std::complex<double> a{};   // <a>
    std::complex<double> a2{};  // <a^2>
    double number = 0.0;        // <a^dag a>
    for (Eigen::Index n = 0; n < dim; ++n) {
        number += static_cast<double>(n) * m(n, n).real();
        if (n + 1 < dim) a += std::sqrt(static_cast<double>(n + 1)) * m(n + 1, n);
        if (n + 2 < dim) a2 += std::sqrt(static_cast<double>((n + 1) * (n + 2))) * m(n + 2, n);
    }
    const double tr = rho.trace();
    a /= tr;
    a2 /= tr;
    number /= tr;

    QuadratureMoments out;
    out.mean_x = std::numbers::sqrt2 * a.real();
    out.mean_p = std::numbers::sqrt2 * a.imag();
    // x^2 = (a^2 + a^dag^2 + 2 a^dag a + 1)/2, p^2 = (-a^2 - a^dag^2 + 2 a^dag a + 1)/2.
    out.var_x = a2.real() + number + 0.5 - out.mean_x * out.mean_x;
    out.var_p = -a2.real() + number + 0.5 - out.mean_p * out.mean_p;
    return out;
}

struct Physicality {
    double hermiticity_error = 0.0;
    double trace = 0.0;
    double min_eigenvalue = 0.0;
};

inline Physicality check_physicality(const DensityMatrix& rho) {
    Physicality out;
    out.hermiticity_error = (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
    out.trace = rho.trace();
    const Eigen::MatrixXcd herm = 0.5 * (rho.matrix + rho.matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = eig.eigenvalues().minCoeff();
    return out;
}

}  // namespace sgclone
