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

#ifndef CATGATE_SPECIAL_HPP
#define CATGATE_SPECIAL_HPP

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "catgate/config.hpp"
#include "catgate/error.hpp"
#include "catgate/grid.hpp"

namespace catgate {

/// Cubic strength of the ancilla and the homodyne outcome on its momentum.
struct GateFactorParams {
    double gamma = 1.0;
    double y_m = 0.0;
};

enum class Branch { Plus, Minus };

struct BranchFactor {
    complex value;
    Branch branch;
    double stationary_point;
};

namespace detail {

inline constexpr long double kAiryAtZero = 0.355028053887817239260063186004183176L;
inline constexpr long double kMinusAiryPrimeAtZero = 0.258819403792806798405183560189203963L;

inline void require_gamma(double gamma) {
    require(std::isfinite(gamma) && gamma > 0.0, ErrorKind::InvalidGamma,
            "cubic strength gamma must be positive");
}

/// Ai(t) = Ai(0) f(t) + Ai'(0) g(t) with the two Maclaurin series summed in
/// extended precision; the positive side loses digits to cancellation.
inline double airy_series(double t) {
    const long double tl = t;
    const long double t3 = tl * tl * tl;
    long double f_term = 1.0L;
    long double g_term = tl;
    long double f = f_term;
    long double g = g_term;
    for (int k = 1; k < 400; ++k) {
        const long double k3 = 3.0L * k;
        f_term *= t3 / ((k3 - 1.0L) * k3);
        g_term *= t3 / (k3 * (k3 + 1.0L));
        f += f_term;
        g += g_term;
        if (std::fabs(f_term) < 1e-21L * std::fabs(f) &&
            std::fabs(g_term) < 1e-21L * (std::fabs(g) + 1e-300L)) {
            break;
        }
    }
    return static_cast<double>(kAiryAtZero * f - kMinusAiryPrimeAtZero * g);
}

/// Large-|t| expansions with coefficients u_k, truncated at the smallest term.
inline double airy_asymptotic(double t) {
    const long double s = std::fabs(static_cast<long double>(t));
    const long double zeta = 2.0L / 3.0L * s * std::sqrt(s);
    const long double pi = std::numbers::pi_v<long double>;
    long double u = 1.0L;
    long double term = 1.0L;
    if (t > 0.0) {
        long double sum = 1.0L;
        for (int k = 1; k < 200; ++k) {
            u *= (6.0L * k - 5.0L) * (6.0L * k - 3.0L) * (6.0L * k - 1.0L) /
                 ((2.0L * k - 1.0L) * 216.0L * k);
            const long double next = u / std::pow(zeta, static_cast<long double>(k));
            if (next > term || next < 1e-21L) break;
            term = next;
            sum += (k % 2 == 0 ? term : -term);
        }
        return static_cast<double>(std::exp(-zeta) * sum /
                                   (2.0L * std::sqrt(pi) * std::sqrt(std::sqrt(s))));
    }
    long double p_sum = 1.0L;
    long double q_sum = 0.0L;
    for (int k = 1; k < 200; ++k) {
        u *= (6.0L * k - 5.0L) * (6.0L * k - 3.0L) * (6.0L * k - 1.0L) /
             ((2.0L * k - 1.0L) * 216.0L * k);
        const long double next = u / std::pow(zeta, static_cast<long double>(k));
        if (next > term || next < 1e-21L) break;
        term = next;
        // P collects even orders, Q odd orders, each with alternating sign.
        if (k % 2 == 0) {
            p_sum += ((k / 2) % 2 == 0 ? term : -term);
        } else {
            q_sum += (((k - 1) / 2) % 2 == 0 ? term : -term);
        }
    }
    const long double phase = zeta + pi / 4.0L;
    return static_cast<double>((std::sin(phase) * p_sum - std::cos(phase) * q_sum) /
                               (std::sqrt(pi) * std::sqrt(std::sqrt(s))));
}

}  // namespace detail

/// Airy function Ai on the real line.
inline double airy(double t) {
    if (std::fabs(t) <= tolerance::airy_switchover) return detail::airy_series(t);
    return detail::airy_asymptotic(t);
}

/// (x - y_m)/(3 gamma)^{1/3}, the argument the gate factor depends on.
inline double scaled_argument(double x, const GateFactorParams& p) {
    detail::require_gamma(p.gamma);
    return (x - p.y_m) / std::cbrt(3.0 * p.gamma);
}

/// phi_gamma(x - y_m) = sqrt(2 pi)/(3 gamma)^{1/3} Ai((x - y_m)/(3 gamma)^{1/3}).
inline complex gate_factor_exact(double x, const GateFactorParams& p) {
    detail::require_gamma(p.gamma);
    const double c = std::cbrt(3.0 * p.gamma);
    return {std::sqrt(2.0 * std::numbers::pi) / c * airy((x - p.y_m) / c), 0.0};
}

/// (1/sqrt(2 pi)) int dx' exp(i x'(x - y_m + gamma x'^2)) evaluated directly.
///
/// The real line is split at x' = 0. The right half runs along
/// x' = z e^{i pi/6}, the left half along x' = -z e^{-i pi/6}, z > 0, so that
/// i gamma x'^3 -> -gamma z^3 on both. Each half is integrated with adaptive
/// Gauss-Kronrod up to a cutoff where the integrand is below 1e-17.
inline complex gate_factor_quadrature(double x, const GateFactorParams& p) {
    detail::require_gamma(p.gamma);
    const double a = x - p.y_m;
    const double gamma = p.gamma;
    const complex right_dir = std::polar(1.0, std::numbers::pi / 6.0);
    const complex left_dir = std::polar(1.0, -std::numbers::pi / 6.0);
    const complex i{0.0, 1.0};

    // log|integrand| = -gamma z^3 - a z/2 on both halves.
    double z_max = 1.0;
    while (gamma * z_max * z_max * z_max + 0.5 * a * z_max < 40.0) z_max *= 1.25;

    auto right = [&](double z) {
        const complex s = z * right_dir;
        return right_dir * std::exp(i * (a * s) - gamma * z * z * z);
    };
    auto left = [&](double z) {
        const complex s = -z * left_dir;
        return left_dir * std::exp(i * (a * s) - gamma * z * z * z);
    };

    using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
    double err_right = 0.0;
    double err_left = 0.0;
    const double rel_tol = 1e-13;
    const complex r = Rule::integrate(right, 0.0, z_max, tolerance::contour_max_depth,
                                      rel_tol, &err_right);
    const complex l = Rule::integrate(left, 0.0, z_max, tolerance::contour_max_depth,
                                      rel_tol, &err_left);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    if (!((err_right + err_left) * norm <= tolerance::contour_quadrature)) {
        throw Error(ErrorKind::NonConvergence,
                    "contour quadrature did not reach its absolute tolerance");
    }
    return (r + l) * norm;
}

/// Amplitude 2 (12 gamma (y_m - x))^{-1/4} of the two-branch approximation;
/// the natural scale for its error.
inline double stationary_amplitude(double x, const GateFactorParams& p) {
    detail::require_gamma(p.gamma);
    detail::require(p.y_m > x, ErrorKind::OutOfRegime,
                    "stationary-phase form requires y_m > x");
    return 2.0 * std::pow(12.0 * p.gamma * (p.y_m - x), -0.25);
}

/// Both stationary-point contributions; Plus sits at x'_s = +sqrt((y_m - x)/(3 gamma)).
inline std::pair<BranchFactor, BranchFactor> branch_factors(double x,
                                                            const GateFactorParams& p) {
    detail::require_gamma(p.gamma);
    detail::require(p.y_m > x, ErrorKind::OutOfRegime,
                    "stationary-phase form requires y_m > x");
    const double d = p.y_m - x;
    const double zeta = 2.0 / (3.0 * std::sqrt(3.0 * p.gamma)) * d * std::sqrt(d);
    const complex plus = std::polar(std::pow(12.0 * p.gamma * d, -0.25),
                                    std::numbers::pi / 4.0 - zeta);
    const double xs = std::sqrt(d / (3.0 * p.gamma));
    return {BranchFactor{plus, Branch::Plus, xs},
            BranchFactor{std::conj(plus), Branch::Minus, -xs}};
}

inline complex gate_factor_stationary(double x, const GateFactorParams& p) {
    const auto [plus, minus] = branch_factors(x, p);
    return {plus.value.real() + minus.value.real(), 0.0};
}

/// Momentum displacement sqrt(y_m/(3 gamma)) of each cat component.
inline double linearized_kick(const GateFactorParams& p) {
    detail::require_gamma(p.gamma);
    detail::require(std::isfinite(p.y_m) && p.y_m > 0.0, ErrorKind::InvalidOutcome,
                    "linearized kick requires y_m > 0");
    return std::sqrt(p.y_m / (3.0 * p.gamma));
}

}  // namespace catgate

#endif  // CATGATE_SPECIAL_HPP
