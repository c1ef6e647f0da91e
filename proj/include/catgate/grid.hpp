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

#ifndef CATGATE_GRID_HPP
#define CATGATE_GRID_HPP

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <mutex>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "catgate/config.hpp"
#include "catgate/error.hpp"

namespace catgate {

using complex = std::complex<double>;

enum class Representation { Coordinate, Momentum };

/// Uniform periodic lattice x_i = x_min + i*dx, i in [0, n), with
/// dx = (x_max - x_min)/n (x_max itself excluded). The conjugate momentum
/// lattice is p_k = (k - n/2)*dp with dx*dp*n = 2*pi.
class Grid1D {
public:
    Grid1D(double x_min, double x_max, std::size_t n) : x_min_(x_min), n_(n) {
        detail::require(std::isfinite(x_min) && std::isfinite(x_max) && x_max > x_min,
                        ErrorKind::InvalidExtent, "grid requires x_max > x_min");
        detail::require(n >= 8 && (n & (n - 1)) == 0, ErrorKind::InvalidSize,
                        "grid size must be a power of two >= 8");
        dx_ = (x_max - x_min) / static_cast<double>(n);
    }

    std::size_t size() const noexcept { return n_; }
    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_min_ + dx_ * static_cast<double>(n_); }
    double dx() const noexcept { return dx_; }
    double dp() const noexcept {
        return 2.0 * std::numbers::pi / (dx_ * static_cast<double>(n_));
    }

    double x(std::size_t i) const noexcept { return x_min_ + dx_ * static_cast<double>(i); }
    double p(std::size_t k) const noexcept {
        return (static_cast<double>(k) - static_cast<double>(n_ / 2)) * dp();
    }
    double p_min() const noexcept { return p(0); }
    double p_max() const noexcept { return p(n_ - 1); }

    double step(Representation rep) const noexcept {
        return rep == Representation::Coordinate ? dx() : dp();
    }
    double abscissa(Representation rep, std::size_t i) const noexcept {
        return rep == Representation::Coordinate ? x(i) : p(i);
    }

    /// Index of the lattice point nearest to x; may lie outside [0, n).
    long nearest_x_index(double xv) const noexcept {
        return std::lround((xv - x_min_) / dx_);
    }
    long nearest_p_index(double pv) const noexcept {
        return std::lround(pv / dp()) + static_cast<long>(n_ / 2);
    }

    friend bool operator==(const Grid1D& a, const Grid1D& b) noexcept {
        return a.n_ == b.n_ && a.x_min_ == b.x_min_ && a.dx_ == b.dx_;
    }

private:
    double x_min_;
    std::size_t n_;
    double dx_;
};

inline Grid1D make_grid(double x_min, double x_max, std::size_t n) {
    return Grid1D(x_min, x_max, n);
}

/// Single-mode amplitudes on a grid, tagged with the representation they are
/// sampled in. Norm² is sum |amp|² times dx (coordinate) or dp (momentum).
class Wavefunction {
public:
    Wavefunction(Grid1D grid, std::vector<complex> amps,
                 Representation rep = Representation::Coordinate)
        : grid_(std::move(grid)), amps_(std::move(amps)), rep_(rep) {
        detail::require(amps_.size() == grid_.size(), ErrorKind::InvalidSize,
                        "amplitude count does not match grid size");
    }

    const Grid1D& grid() const noexcept { return grid_; }
    std::span<const complex> amps() const noexcept { return amps_; }
    complex operator[](std::size_t i) const noexcept { return amps_[i]; }
    std::size_t size() const noexcept { return amps_.size(); }
    Representation rep() const noexcept { return rep_; }
    double step() const noexcept { return grid_.step(rep_); }
    double abscissa(std::size_t i) const noexcept { return grid_.abscissa(rep_, i); }

    double norm2() const noexcept {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return s * step();
    }

    /// Copy rescaled to unit norm. Throws ZeroState for a null vector.
    Wavefunction normalized() const {
        const double n2 = norm2();
        detail::require(n2 > 0.0 && std::isfinite(n2), ErrorKind::ZeroState,
                        "cannot normalize a zero wavefunction");
        const double s = 1.0 / std::sqrt(n2);
        std::vector<complex> out(amps_);
        for (auto& a : out) a *= s;
        return Wavefunction(grid_, std::move(out), rep_);
    }

private:
    Grid1D grid_;
    std::vector<complex> amps_;
    Representation rep_;
};

/// <a|b> with the measure of the shared representation.
inline complex inner_product(const Wavefunction& a, const Wavefunction& b) {
    detail::require(a.grid() == b.grid() && a.rep() == b.rep(), ErrorKind::GridMismatch,
                    "inner product needs states on the same grid and representation");
    complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s * a.step();
}

namespace detail {

inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

/// In-place complex DFT of fixed length. FFTW planning is not thread safe,
/// execution on distinct arrays is.
class FftPlan {
public:
    FftPlan(std::size_t n, int sign) : n_(n) {
        std::vector<complex> scratch(n);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan_ = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;
    ~FftPlan() {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan_);
    }

    void execute(std::span<complex> data) const {
        auto* buf = reinterpret_cast<fftw_complex*>(data.data());
        fftw_execute_dft(plan_, buf, buf);
    }

    std::size_t size() const noexcept { return n_; }

private:
    std::size_t n_;
    fftw_plan plan_;
};

/// Coordinate -> momentum on one contiguous row, in place:
/// out_k = dx/sqrt(2 pi) e^{-i p_k x_min} sum_j (-1)^j in_j e^{-2 pi i jk/n}.
inline void forward_row(const Grid1D& g, const FftPlan& plan, std::span<complex> row) {
    const std::size_t n = g.size();
    for (std::size_t j = 1; j < n; j += 2) row[j] = -row[j];
    plan.execute(row);
    const double scale = g.dx() / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t k = 0; k < n; ++k) {
        row[k] *= scale * std::polar(1.0, -g.p(k) * g.x_min());
    }
}

inline void inverse_row(const Grid1D& g, const FftPlan& plan, std::span<complex> row) {
    const std::size_t n = g.size();
    for (std::size_t k = 0; k < n; ++k) row[k] *= std::polar(1.0, g.p(k) * g.x_min());
    plan.execute(row);
    const double scale = g.dp() / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t j = 0; j < n; ++j) {
        row[j] *= (j % 2 == 0 ? scale : -scale);
    }
}

}  // namespace detail

/// psi(p) = (1/sqrt(2 pi)) int dx e^{-ipx} psi(x), sampled on the conjugate grid.
inline Wavefunction to_momentum(const Wavefunction& psi) {
    detail::require(psi.rep() == Representation::Coordinate, ErrorKind::WrongRepresentation,
                    "to_momentum expects a coordinate-representation state");
    std::vector<complex> out(psi.amps().begin(), psi.amps().end());
    const detail::FftPlan plan(psi.size(), FFTW_FORWARD);
    detail::forward_row(psi.grid(), plan, out);
    return Wavefunction(psi.grid(), std::move(out), Representation::Momentum);
}

inline Wavefunction to_coordinate(const Wavefunction& psi) {
    detail::require(psi.rep() == Representation::Momentum, ErrorKind::WrongRepresentation,
                    "to_coordinate expects a momentum-representation state");
    std::vector<complex> out(psi.amps().begin(), psi.amps().end());
    const detail::FftPlan plan(psi.size(), FFTW_BACKWARD);
    detail::inverse_row(psi.grid(), plan, out);
    return Wavefunction(psi.grid(), std::move(out), Representation::Coordinate);
}

/// How much of a coordinate-space state sits in the outer band of its grid.
struct GridAdequacy {
    double max_edge_amplitude = 0.0;
    double edge_norm_fraction = 0.0;

    bool adequate() const noexcept {
        return max_edge_amplitude < tolerance::edge_amplitude;
    }
};

inline std::size_t edge_band_width(const Grid1D& g) {
    return static_cast<std::size_t>(
        std::ceil(tolerance::edge_band_fraction * static_cast<double>(g.size())));
}

inline GridAdequacy grid_adequacy(const Wavefunction& psi) {
    detail::require(psi.rep() == Representation::Coordinate, ErrorKind::WrongRepresentation,
                    "grid adequacy is defined in the coordinate representation");
    const std::size_t n = psi.size();
    const std::size_t band = edge_band_width(psi.grid());
    GridAdequacy out;
    double edge = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a2 = std::norm(psi[i]);
        total += a2;
        if (i < band || i >= n - band) {
            edge += a2;
            out.max_edge_amplitude = std::max(out.max_edge_amplitude, std::sqrt(a2));
        }
    }
    if (total > 0.0) {
        out.edge_norm_fraction = edge / total;
        out.max_edge_amplitude /= std::sqrt(total * psi.step());
    }
    return out;
}

}  // namespace catgate

#endif  // CATGATE_GRID_HPP
