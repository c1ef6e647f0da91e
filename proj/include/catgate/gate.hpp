// Copyright 2026 The catgate Authors
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

#ifndef CATGATE_GATE_HPP
#define CATGATE_GATE_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "catgate/config.hpp"
#include "catgate/error.hpp"
#include "catgate/grid.hpp"
#include "catgate/special.hpp"

namespace catgate {

/// Target (mode 1) x ancilla (mode 2) amplitudes, row-major with the target
/// index outermost: amp(i, j) = amps[i * n2 + j].
class TwoModeState {
public:
    TwoModeState(Grid1D grid1, Grid1D grid2, std::vector<complex> amps,
                 Representation rep1 = Representation::Coordinate,
                 Representation rep2 = Representation::Coordinate)
        : grid1_(std::move(grid1)),
          grid2_(std::move(grid2)),
          amps_(std::move(amps)),
          rep1_(rep1),
          rep2_(rep2) {
        detail::require(amps_.size() == grid1_.size() * grid2_.size(), ErrorKind::InvalidSize,
                        "two-mode amplitude count does not match the grids");
    }

    const Grid1D& grid1() const noexcept { return grid1_; }
    const Grid1D& grid2() const noexcept { return grid2_; }
    Representation rep1() const noexcept { return rep1_; }
    Representation rep2() const noexcept { return rep2_; }
    std::span<const complex> amps() const noexcept { return amps_; }
    std::span<const complex> row(std::size_t i) const noexcept {
        return std::span<const complex>(amps_).subspan(i * grid2_.size(), grid2_.size());
    }
    complex operator()(std::size_t i, std::size_t j) const noexcept {
        return amps_[i * grid2_.size() + j];
    }

    double norm2() const noexcept {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return s * grid1_.step(rep1_) * grid2_.step(rep2_);
    }

private:
    Grid1D grid1_;
    Grid1D grid2_;
    std::vector<complex> amps_;
    Representation rep1_;
    Representation rep2_;
};

/// One homodyne outcome on the ancilla momentum grid and its probability density.
struct MeasurementOutcome {
    double y_m = 0.0;
    double density = 0.0;
};

/// Conditional target state after reading the ancilla momentum.
struct ProjectionResult {
    Wavefunction state;
    /// Joint density P(y) of the snapped outcome, int |amp(x1, y)|^2 dx1.
    double joint_density = 0.0;
    double snapped_y = 0.0;
    double snap_distance = 0.0;
};

/// Normalized product state psi1(x1) psi2(x2).
inline TwoModeState tensor(const Wavefunction& psi1, const Wavefunction& psi2) {
    detail::require(psi1.rep() == Representation::Coordinate &&
                        psi2.rep() == Representation::Coordinate,
                    ErrorKind::WrongRepresentation, "tensor expects coordinate-space factors");
    const std::size_t n1 = psi1.size();
    const std::size_t n2 = psi2.size();
    std::vector<complex> amps(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) amps[i * n2 + j] = psi1[i] * psi2[j];
    }
    TwoModeState out(psi1.grid(), psi2.grid(), std::move(amps));
    const double n = out.norm2();
    detail::require(n > 0.0 && std::isfinite(n), ErrorKind::ZeroState,
                    "tensor product of a zero state");
    const double s = 1.0 / std::sqrt(n);
    std::vector<complex> scaled(out.amps().begin(), out.amps().end());
    for (auto& a : scaled) a *= s;
    return TwoModeState(psi1.grid(), psi2.grid(), std::move(scaled));
}

/// C_Z = exp(i q1 q2): amp(i, j) *= exp(i x1_i x2_j).
inline TwoModeState apply_cz(const TwoModeState& state) {
    detail::require(state.rep1() == Representation::Coordinate &&
                        state.rep2() == Representation::Coordinate,
                    ErrorKind::WrongRepresentation, "C_Z acts on the coordinate representation");
    const auto& g1 = state.grid1();
    const auto& g2 = state.grid2();
    std::vector<complex> amps(state.amps().begin(), state.amps().end());
    for (std::size_t i = 0; i < g1.size(); ++i) {
        const double x1 = g1.x(i);
        for (std::size_t j = 0; j < g2.size(); ++j) {
            amps[i * g2.size() + j] *= std::polar(1.0, x1 * g2.x(j));
        }
    }
    return TwoModeState(g1, g2, std::move(amps));
}

/// Fourier transform of one mode to momentum; the other mode is untouched.
inline TwoModeState mode_to_momentum(const TwoModeState& state, int mode) {
    detail::require(mode == 1 || mode == 2, ErrorKind::InvalidConfig, "mode must be 1 or 2");
    const auto& g1 = state.grid1();
    const auto& g2 = state.grid2();
    const std::size_t n1 = g1.size();
    const std::size_t n2 = g2.size();
    std::vector<complex> amps(state.amps().begin(), state.amps().end());
    if (mode == 2) {
        detail::require(state.rep2() == Representation::Coordinate,
                        ErrorKind::WrongRepresentation, "mode 2 is already in momentum");
        const detail::FftPlan plan(n2, FFTW_FORWARD);
        for (std::size_t i = 0; i < n1; ++i) {
            detail::forward_row(g2, plan, std::span<complex>(amps).subspan(i * n2, n2));
        }
        return TwoModeState(g1, g2, std::move(amps), state.rep1(), Representation::Momentum);
    }
    detail::require(state.rep1() == Representation::Coordinate, ErrorKind::WrongRepresentation,
                    "mode 1 is already in momentum");
    const detail::FftPlan plan(n1, FFTW_FORWARD);
    std::vector<complex> column(n1);
    for (std::size_t j = 0; j < n2; ++j) {
        for (std::size_t i = 0; i < n1; ++i) column[i] = amps[i * n2 + j];
        detail::forward_row(g1, plan, column);
        for (std::size_t i = 0; i < n1; ++i) amps[i * n2 + j] = column[i];
    }
    return TwoModeState(g1, g2, std::move(amps), Representation::Momentum, state.rep2());
}

/// Reduced probability density of one mode on its current representation grid.
inline std::vector<double> marginal_density(const TwoModeState& state, int mode) {
    detail::require(mode == 1 || mode == 2, ErrorKind::InvalidConfig, "mode must be 1 or 2");
    const std::size_t n1 = state.grid1().size();
    const std::size_t n2 = state.grid2().size();
    const double d1 = state.grid1().step(state.rep1());
    const double d2 = state.grid2().step(state.rep2());
    std::vector<double> out(mode == 1 ? n1 : n2, 0.0);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
            const double a2 = std::norm(state(i, j));
            if (mode == 1) {
                out[i] += a2 * d2;
            } else {
                out[j] += a2 * d1;
            }
        }
    }
    return out;
}

/// P(y) of the ancilla momentum readout over the mode-2 momentum grid.
inline std::vector<MeasurementOutcome> outcome_density(const TwoModeState& state) {
    const TwoModeState measured = state.rep2() == Representation::Momentum
                                      ? state
                                      : mode_to_momentum(state, 2);
    const std::vector<double> density = marginal_density(measured, 2);
    std::vector<MeasurementOutcome> out(density.size());
    for (std::size_t k = 0; k < density.size(); ++k) {
        out[k] = {measured.grid2().p(k), density[k]};
    }
    return out;
}

/// Brute-force conditioning: reads the ancilla momentum row nearest y_m and
/// returns the normalized target state proportional to it.
inline ProjectionResult project_outcome(const TwoModeState& state, double y_m) {
    detail::require(state.rep1() == Representation::Coordinate, ErrorKind::WrongRepresentation,
                    "projection returns the target in the coordinate representation");
    const auto& g1 = state.grid1();
    const auto& g2 = state.grid2();
    const double dp = g2.dp();
    detail::require(std::isfinite(y_m) && y_m >= g2.p_min() - 0.5 * dp &&
                        y_m <= g2.p_max() + 0.5 * dp,
                    ErrorKind::OutcomeOffGrid, "outcome lies outside the ancilla momentum grid");
    const long k = std::clamp<long>(g2.nearest_p_index(y_m), 0,
                                    static_cast<long>(g2.size()) - 1);
    const double y = g2.p(static_cast<std::size_t>(k));

    const std::size_t n1 = g1.size();
    const std::size_t n2 = g2.size();
    std::vector<complex> amps(n1);
    if (state.rep2() == Representation::Momentum) {
        for (std::size_t i = 0; i < n1; ++i) amps[i] = state(i, static_cast<std::size_t>(k));
    } else {
        // Single Fourier coefficient per row: dx2/sqrt(2 pi) sum_j amp(i, j) e^{-i y x2_j}.
        std::vector<complex> kernel(n2);
        const double scale = g2.dx() / std::sqrt(2.0 * std::numbers::pi);
        for (std::size_t j = 0; j < n2; ++j) kernel[j] = std::polar(scale, -y * g2.x(j));
        for (std::size_t i = 0; i < n1; ++i) {
            const auto r = state.row(i);
            complex s = 0.0;
            for (std::size_t j = 0; j < n2; ++j) s += r[j] * kernel[j];
            amps[i] = s;
        }
    }
    Wavefunction raw(g1, std::move(amps));
    const double joint = raw.norm2();
    detail::require(joint > 0.0, ErrorKind::ZeroOverlap, "outcome has zero probability");
    return ProjectionResult{raw.normalized(), joint, y, std::fabs(y - y_m)};
}

/// Ideal-ancilla conditioning N psi(x) phi_gamma(x - y_m).
inline Wavefunction analytic_condition(const Wavefunction& psi, const GateFactorParams& p) {
    detail::require(psi.rep() == Representation::Coordinate, ErrorKind::WrongRepresentation,
                    "conditioning acts on the coordinate representation");
    detail::require_gamma(p.gamma);
    std::vector<complex> amps(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        amps[i] = psi[i] * gate_factor_exact(psi.grid().x(i), p);
    }
    Wavefunction raw(psi.grid(), std::move(amps));
    detail::require(std::sqrt(raw.norm2()) >= tolerance::zero_overlap, ErrorKind::ZeroOverlap,
                    "input and gate factor do not overlap");
    return raw.normalized();
}

}  // namespace catgate

#endif  // CATGATE_GATE_HPP
