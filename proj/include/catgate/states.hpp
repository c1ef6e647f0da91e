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

#ifndef CATGATE_STATES_HPP
#define CATGATE_STATES_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <type_traits>
#include <variant>
#include <vector>

#include "catgate/config.hpp"
#include "catgate/error.hpp"
#include "catgate/grid.hpp"
#include "catgate/special.hpp"

namespace catgate {

/// psi(x) ~ exp(-(x - center_x)^2 / (4 width^2) + i center_p x); width is the
/// position standard deviation, 1/sqrt(2) for the vacuum.
struct CoherentGaussian {
    double center_x = 0.0;
    double center_p = 0.0;
    double width = std::numbers::sqrt2 / 2.0;
};

/// Same functional form as CoherentGaussian, for widths away from the vacuum.
struct SqueezedGaussian {
    double center_x = 0.0;
    double center_p = 0.0;
    double width = 1.0;
};

/// Tabulated amplitudes at ascending abscissae, linearly interpolated onto the
/// target grid and zero outside the table.
struct CustomTable {
    std::vector<double> x;
    std::vector<complex> amps;
};

using InputStateSpec = std::variant<CoherentGaussian, SqueezedGaussian, CustomTable>;

/// Cubic phase ancilla regularized by a Gaussian of momentum spread `squeeze`.
/// `edge_taper` is the fraction of the grid on each side rolled off by a
/// sin^2 window so the periodic lattice sees no amplitude jump.
struct AncillaSpec {
    double gamma = 1.0;
    double squeeze = 0.05;
    double edge_taper = tolerance::edge_band_fraction;
};

namespace detail {

inline std::vector<complex> gaussian_amplitudes(const Grid1D& g, double x0, double p0,
                                                double width) {
    require(std::isfinite(width) && width > 0.0, ErrorKind::InvalidConfig,
            "gaussian width must be positive");
    require(std::isfinite(x0) && std::isfinite(p0), ErrorKind::InvalidConfig,
            "gaussian center must be finite");
    std::vector<complex> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.x(i);
        const double u = x - x0;
        out[i] = std::polar(std::exp(-u * u / (4.0 * width * width)), p0 * x);
    }
    return out;
}

inline std::vector<complex> interpolate_table(const Grid1D& g, const CustomTable& table) {
    require(table.x.size() == table.amps.size() && table.x.size() >= 2,
            ErrorKind::InvalidConfig, "custom table needs at least two (x, amplitude) rows");
    require(std::is_sorted(table.x.begin(), table.x.end()) &&
                std::adjacent_find(table.x.begin(), table.x.end()) == table.x.end(),
            ErrorKind::InvalidConfig, "custom table abscissae must be strictly ascending");
    std::vector<complex> out(g.size(), complex{});
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.x(i);
        if (x < table.x.front() || x > table.x.back()) continue;
        auto hi = std::upper_bound(table.x.begin(), table.x.end(), x);
        if (hi == table.x.end()) {
            out[i] = table.amps.back();
            continue;
        }
        const auto k = static_cast<std::size_t>(hi - table.x.begin());
        const double w = (x - table.x[k - 1]) / (table.x[k] - table.x[k - 1]);
        out[i] = (1.0 - w) * table.amps[k - 1] + w * table.amps[k];
    }
    return out;
}

/// sin^2 roll-off over `fraction` of the points at each end of the grid.
inline double edge_window(std::size_t i, std::size_t n, double fraction) {
    if (fraction <= 0.0) return 1.0;
    const double band = fraction * static_cast<double>(n);
    const double d = static_cast<double>(std::min(i, n - 1 - i));
    if (d >= band) return 1.0;
    const double s = std::sin(0.5 * std::numbers::pi * d / band);
    return s * s;
}

}  // namespace detail

/// Normalized coordinate-space input state. Throws Truncation if more than
/// tolerance::edge_norm_error of the norm lies in the outer band of the grid.
inline Wavefunction prepare_input(const InputStateSpec& spec, const Grid1D& grid) {
    std::vector<complex> amps = std::visit(
        [&](const auto& s) -> std::vector<complex> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CustomTable>) {
                return detail::interpolate_table(grid, s);
            } else {
                return detail::gaussian_amplitudes(grid, s.center_x, s.center_p, s.width);
            }
        },
        spec);
    Wavefunction psi(grid, std::move(amps));
    const auto adequacy = grid_adequacy(psi);
    if (adequacy.edge_norm_fraction > tolerance::edge_norm_error) {
        throw Error(ErrorKind::Truncation,
                    "input state extends into the outer band of the grid");
    }
    return psi.normalized();
}

/// psi_2(x) ~ exp(i gamma x^3) exp(-squeeze^2 x^2), edge-tapered and normalized.
/// exp(-squeeze^2 x^2) is the coordinate form of a Gaussian with momentum
/// spread `squeeze`; squeeze -> 0 approaches the momentum eigenstate |0>_p.
inline Wavefunction prepare_cubic_ancilla(const AncillaSpec& spec, const Grid1D& grid) {
    detail::require_gamma(spec.gamma);
    detail::require(std::isfinite(spec.squeeze) && spec.squeeze > 0.0, ErrorKind::InvalidConfig,
                    "ancilla squeeze must be positive");
    detail::require(spec.edge_taper >= 0.0 && spec.edge_taper < 0.5, ErrorKind::InvalidConfig,
                    "edge taper fraction must lie in [0, 0.5)");
    const std::size_t n = grid.size();
    std::vector<complex> amps(n);
    const double s2 = spec.squeeze * spec.squeeze;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = grid.x(i);
        amps[i] = std::polar(std::exp(-s2 * x * x) * detail::edge_window(i, n, spec.edge_taper),
                             spec.gamma * x * x * x);
    }
    return Wavefunction(grid, std::move(amps)).normalized();
}

/// Whether the cubic phase fits the grid: its local momentum 3 gamma x^2 must
/// stay inside the conjugate lattice, and the envelope should vanish at the edges.
struct AncillaDiagnostics {
    GridAdequacy edge;
    double max_local_momentum = 0.0;
    double nyquist_momentum = 0.0;

    bool aliased() const noexcept { return max_local_momentum > nyquist_momentum; }
};

inline AncillaDiagnostics diagnose_ancilla(const AncillaSpec& spec, const Grid1D& grid) {
    const Wavefunction psi = prepare_cubic_ancilla(spec, grid);
    AncillaDiagnostics d;
    d.edge = grid_adequacy(psi);
    const double reach = std::max(std::fabs(grid.x_min()), std::fabs(grid.x_max()));
    d.max_local_momentum = 3.0 * spec.gamma * reach * reach;
    d.nyquist_momentum = std::numbers::pi / grid.dx();
    return d;
}

}  // namespace catgate

#endif  // CATGATE_STATES_HPP
