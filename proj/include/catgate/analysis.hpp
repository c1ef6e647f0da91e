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

#ifndef CATGATE_ANALYSIS_HPP
#define CATGATE_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "catgate/config.hpp"
#include "catgate/error.hpp"
#include "catgate/gate.hpp"
#include "catgate/grid.hpp"
#include "catgate/special.hpp"

namespace catgate {

struct Moments {
    double mean_x = 0.0;
    double mean_p = 0.0;
    double spread_x = 0.0;
    double spread_p = 0.0;
};

/// First and second moments of a coordinate-space state (normalized internally).
inline Moments moments(const Wavefunction& psi) {
    detail::require(psi.rep() == Representation::Coordinate, ErrorKind::WrongRepresentation,
                    "moments expect a coordinate-space state");
    const Wavefunction mom = to_momentum(psi);
    auto first_two = [](const Wavefunction& w) {
        double m0 = 0.0, m1 = 0.0, m2 = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const double d = std::norm(w[i]);
            const double a = w.abscissa(i);
            m0 += d;
            m1 += d * a;
            m2 += d * a * a;
        }
        const double mean = m1 / m0;
        return std::pair{mean, std::sqrt(std::max(0.0, m2 / m0 - mean * mean))};
    };
    const auto [mx, sx] = first_two(psi);
    const auto [mp, sp] = first_two(mom);
    return {mx, mp, sx, sp};
}

struct Peak {
    double position = 0.0;
    double height = 0.0;
};

/// Local maxima of |psi(p)|^2 above tolerance::peak_threshold of the global
/// maximum, refined by a parabola through the three nearest samples.
inline std::vector<Peak> find_momentum_peaks(const Wavefunction& psi) {
    const Wavefunction mom =
        psi.rep() == Representation::Momentum ? psi : to_momentum(psi);
    const std::size_t n = mom.size();
    std::vector<double> d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = std::norm(mom[k]);
    const double top = *std::max_element(d.begin(), d.end());
    std::vector<Peak> peaks;
    if (!(top > 0.0)) return peaks;
    const double dp = mom.step();
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (!(d[k] > d[k - 1] && d[k] >= d[k + 1])) continue;
        if (d[k] < tolerance::peak_threshold * top) continue;
        const double curvature = d[k - 1] - 2.0 * d[k] + d[k + 1];
        double shift = 0.0;
        double height = d[k];
        if (curvature < 0.0) {
            shift = 0.5 * (d[k - 1] - d[k + 1]) / curvature;
            height = d[k] - 0.25 * (d[k - 1] - d[k + 1]) * shift;
        }
        peaks.push_back({mom.abscissa(k) + shift * dp, height});
    }
    return peaks;
}

inline std::vector<double> momentum_peaks(const Wavefunction& psi) {
    std::vector<double> out;
    for (const auto& pk : find_momentum_peaks(psi)) out.push_back(pk.position);
    std::sort(out.begin(), out.end());
    return out;
}

/// |<a|b>|^2 / (<a|a><b|b>).
inline double fidelity(const Wavefunction& a, const Wavefunction& b) {
    const complex ov = inner_product(a, b);
    const double na = a.norm2();
    const double nb = b.norm2();
    detail::require(na > 0.0 && nb > 0.0, ErrorKind::ZeroState, "fidelity of a zero state");
    return std::min(1.0, std::norm(ov) / (na * nb));
}

/// Fringe contrast of |cat|^2 / |psi_in|^2 where the input carries at least
/// 10% of its peak density.
inline double visibility(const Wavefunction& cat, const Wavefunction& psi_in) {
    detail::require(cat.grid() == psi_in.grid() && cat.rep() == Representation::Coordinate &&
                        psi_in.rep() == Representation::Coordinate,
                    ErrorKind::GridMismatch, "visibility needs both states on one coordinate grid");
    double top = 0.0;
    for (std::size_t i = 0; i < psi_in.size(); ++i) top = std::max(top, std::norm(psi_in[i]));
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < psi_in.size(); ++i) {
        const double w = std::norm(psi_in[i]);
        if (w < 0.1 * top) continue;
        const double r = std::norm(cat[i]) / w;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    if (!(hi > 0.0)) return 0.0;
    return (hi - lo) / (hi + lo);
}

enum class ReferenceForm {
    /// psi_in(x) cos(k x + pi/4 - zeta(0)), k = sqrt(y_m/(3 gamma)).
    Linearized,
    /// psi_in(x) (phi+ + c.c.) with the full (y_m - x)^{3/2} phase and amplitude.
    FullPhase,
};

/// Normalized two-copy state the cat is compared against.
inline Wavefunction two_copy_reference(const Wavefunction& psi_in, const GateFactorParams& p,
                                       ReferenceForm form = ReferenceForm::Linearized) {
    detail::require(psi_in.rep() == Representation::Coordinate, ErrorKind::WrongRepresentation,
                    "reference is built in the coordinate representation");
    std::vector<complex> amps(psi_in.size());
    if (form == ReferenceForm::Linearized) {
        const double k = linearized_kick(p);
        const double zeta0 =
            2.0 / (3.0 * std::sqrt(3.0 * p.gamma)) * p.y_m * std::sqrt(p.y_m);
        const double offset = std::numbers::pi / 4.0 - zeta0;
        for (std::size_t i = 0; i < psi_in.size(); ++i) {
            amps[i] = psi_in[i] * std::cos(k * psi_in.grid().x(i) + offset);
        }
    } else {
        detail::require_gamma(p.gamma);
        for (std::size_t i = 0; i < psi_in.size(); ++i) {
            const double x = psi_in.grid().x(i);
            amps[i] = x < p.y_m ? psi_in[i] * gate_factor_stationary(x, p) : complex{};
        }
    }
    return Wavefunction(psi_in.grid(), std::move(amps)).normalized();
}

/// Fidelity of a conditioned state with the ideal pair of momentum-shifted copies.
inline double branch_fidelity(const Wavefunction& cat, const Wavefunction& psi_in,
                              const GateFactorParams& p,
                              ReferenceForm form = ReferenceForm::Linearized) {
    if (momentum_peaks(cat).size() < 2) {
        throw Error(ErrorKind::NoBimodality, "conditioned state has fewer than two momentum peaks");
    }
    return fidelity(cat, two_copy_reference(psi_in, p, form));
}

/// int_{y_lo}^{y_hi} P(y) dy for the piecewise-linear interpolant of the
/// sampled density (the trapezoidal rule on grid-aligned windows).
inline double success_window(const std::vector<MeasurementOutcome>& density, double y_lo,
                             double y_hi) {
    detail::require(density.size() >= 2, ErrorKind::InvalidWindow,
                    "outcome density needs at least two samples");
    detail::require(std::isfinite(y_lo) && std::isfinite(y_hi) && y_lo <= y_hi,
                    ErrorKind::InvalidWindow, "window requires y_lo <= y_hi");
    detail::require(y_lo >= density.front().y_m && y_hi <= density.back().y_m,
                    ErrorKind::InvalidWindow, "window extends beyond the outcome grid");
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < density.size(); ++k) {
        const double y0 = density[k].y_m;
        const double y1 = density[k + 1].y_m;
        const double a = std::max(y0, y_lo);
        const double b = std::min(y1, y_hi);
        if (b <= a) continue;
        const double slope = (density[k + 1].density - density[k].density) / (y1 - y0);
        const double fa = density[k].density + slope * (a - y0);
        const double fb = density[k].density + slope * (b - y0);
        total += 0.5 * (b - a) * (fa + fb);
    }
    return total;
}

/// W(x, p) sampled on x_grid (the state's grid) times p_grid (whose lattice
/// points x(k) are read as momenta). values are x-major.
struct WignerMap {
    Grid1D x_grid;
    Grid1D p_grid;
    std::vector<double> values;

    double at(std::size_t i, std::size_t k) const { return values[i * p_grid.size() + k]; }
    double p(std::size_t k) const { return p_grid.x(k); }
};

/// Momentum lattice on which the discrete Wigner transform of a state on
/// `x_grid` is exactly normalized: 2n points spanning [-pi/(2dx), pi/(2dx)).
inline Grid1D wigner_momentum_grid(const Grid1D& x_grid) {
    const double half = std::numbers::pi / (2.0 * x_grid.dx());
    return Grid1D(-half, half, 2 * x_grid.size());
}

/// W(x, p) = (1/pi) int dy psi*(x + y) psi(x - y) e^{2ipy}.
///
/// The lag y runs over multiples of dx with the state zero-padded beyond the
/// grid, so no wraparound enters. Conjugate symmetry of the lag product makes
/// the sum real by construction.
inline WignerMap wigner(const Wavefunction& psi, const Grid1D& p_grid) {
    detail::require(psi.rep() == Representation::Coordinate, ErrorKind::WrongRepresentation,
                    "Wigner transform expects a coordinate-space state");
    const Grid1D& g = psi.grid();
    const double nyquist = std::numbers::pi / (2.0 * g.dx());
    const double slack = 1e-9 * nyquist;
    detail::require(p_grid.x_min() >= -nyquist - slack &&
                        p_grid.x(p_grid.size() - 1) <= nyquist + slack,
                    ErrorKind::GridMismatch,
                    "momentum grid exceeds the range resolvable by the lag lattice");
    const Wavefunction unit = psi.normalized();
    const std::size_t n = g.size();
    const std::size_t np = p_grid.size();
    const double dx = g.dx();
    std::vector<double> values(n * np, 0.0);

    constexpr std::size_t kBlock = 32;
    std::vector<double> cos_table(kBlock * n);
    std::vector<double> sin_table(kBlock * n);
    std::vector<double> lag_re(n);
    std::vector<double> lag_im(n);
    for (std::size_t k0 = 0; k0 < np; k0 += kBlock) {
        const std::size_t kb = std::min(kBlock, np - k0);
        for (std::size_t b = 0; b < kb; ++b) {
            const double pv = p_grid.x(k0 + b);
            for (std::size_t j = 1; j < n; ++j) {
                const double arg = 2.0 * pv * static_cast<double>(j) * dx;
                cos_table[b * n + j] = std::cos(arg);
                sin_table[b * n + j] = std::sin(arg);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t lags = std::min(i, n - 1 - i);
            for (std::size_t j = 1; j <= lags; ++j) {
                const complex c = std::conj(unit[i + j]) * unit[i - j];
                lag_re[j] = c.real();
                lag_im[j] = c.imag();
            }
            const double centre = std::norm(unit[i]);
            for (std::size_t b = 0; b < kb; ++b) {
                const double* ct = &cos_table[b * n];
                const double* st = &sin_table[b * n];
                double s = 0.0;
                for (std::size_t j = 1; j <= lags; ++j) s += lag_re[j] * ct[j] - lag_im[j] * st[j];
                values[i * np + k0 + b] = dx / std::numbers::pi * (centre + 2.0 * s);
            }
        }
    }
    return WignerMap{g, p_grid, std::move(values)};
}

inline WignerMap wigner(const Wavefunction& psi) {
    return wigner(psi, wigner_momentum_grid(psi.grid()));
}

inline double wigner_integral(const WignerMap& w) {
    double s = 0.0;
    for (double v : w.values) s += v;
    return s * w.x_grid.dx() * w.p_grid.dx();
}

/// int int max(0, -W) dx dp.
inline double negativity_volume(const WignerMap& w) {
    double s = 0.0;
    for (double v : w.values) s += std::max(0.0, -v);
    return s * w.x_grid.dx() * w.p_grid.dx();
}

inline double wigner_min(const WignerMap& w) {
    return *std::min_element(w.values.begin(), w.values.end());
}

/// Sign changes of W along p at fixed x index, skipping samples whose
/// magnitude is below relative_floor times max |W| over the map.
inline int sign_changes_along_p(const WignerMap& w, std::size_t x_index,
                                double relative_floor = 1e-6) {
    double top = 0.0;
    for (double v : w.values) top = std::max(top, std::fabs(v));
    int changes = 0;
    int last = 0;
    for (std::size_t k = 0; k < w.p_grid.size(); ++k) {
        const double v = w.at(x_index, k);
        if (std::fabs(v) <= relative_floor * top) continue;
        const int s = v > 0.0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Sign changes of W along x at fixed p index, same noise floor convention.
inline int sign_changes_along_x(const WignerMap& w, std::size_t p_index,
                                double relative_floor = 1e-6) {
    double top = 0.0;
    for (double v : w.values) top = std::max(top, std::fabs(v));
    int changes = 0;
    int last = 0;
    for (std::size_t i = 0; i < w.x_grid.size(); ++i) {
        const double v = w.at(i, p_index);
        if (std::fabs(v) <= relative_floor * top) continue;
        const int s = v > 0.0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

struct CatReport {
    std::vector<double> peak_positions;
    double separation = 0.0;
    /// separation over the input's momentum spread.
    double separation_to_width = 0.0;
    double visibility = 0.0;
    std::optional<double> branch_fidelity;
    std::optional<double> branch_fidelity_full;
    std::optional<double> negativity_volume;
    std::optional<double> outcome_density;
};

/// Diagnostics of a conditioned state. Quantities undefined outside the cat
/// regime are left empty rather than raised.
inline CatReport make_cat_report(const Wavefunction& cat, const Wavefunction& psi_in,
                                 const GateFactorParams& p, bool with_wigner = false) {
    CatReport r;
    r.peak_positions = momentum_peaks(cat);
    if (r.peak_positions.size() >= 2) {
        r.separation = r.peak_positions.back() - r.peak_positions.front();
    }
    const double width = moments(psi_in).spread_p;
    r.separation_to_width = width > 0.0 ? r.separation / width : 0.0;
    r.visibility = visibility(cat, psi_in);
    if (r.peak_positions.size() >= 2) {
        if (p.y_m > 0.0) r.branch_fidelity = branch_fidelity(cat, psi_in, p);
        r.branch_fidelity_full = branch_fidelity(cat, psi_in, p, ReferenceForm::FullPhase);
    }
    if (with_wigner) r.negativity_volume = negativity_volume(wigner(cat));
    return r;
}

}  // namespace catgate

#endif  // CATGATE_ANALYSIS_HPP
