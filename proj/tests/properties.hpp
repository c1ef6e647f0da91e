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

#ifndef CATGATE_TESTS_PROPERTIES_HPP
#define CATGATE_TESTS_PROPERTIES_HPP

// Randomized invariant checks shared by the unit tests (a few trials each)
// and the acceptance gate (at least 100 trials each).

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catgate/catgate.hpp"
#include "catgate/io.hpp"
#include "commands.hpp"
#include "oracles.hpp"

namespace props {

using namespace catgate;

struct Check {
    bool ok = true;
    /// The worst value of the checked quantity seen in this trial.
    double worst = 0.0;
};

struct Property {
    std::string module;
    std::string name;
    /// Pass bound on `worst`, for the report line.
    std::string bound;
    std::function<Check(std::mt19937_64&)> trial;
};

inline void PrintTo(const Property& p, std::ostream* os) { *os << p.module << "/" << p.name; }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Check at_most(double value, double bound) { return {value <= bound, value}; }

inline Grid1D random_grid(std::mt19937_64& rng, std::size_t min_n = 64, std::size_t max_n = 512) {
    std::vector<std::size_t> sizes;
    for (std::size_t n = min_n; n <= max_n; n *= 2) sizes.push_back(n);
    const std::size_t n = sizes[std::uniform_int_distribution<std::size_t>(0, sizes.size() - 1)(rng)];
    const double half = uniform(rng, 5.0, 15.0);
    const double mid = uniform(rng, -2.0, 2.0);
    return make_grid(mid - half, mid + half, n);
}

// ---- grid -----------------------------------------------------------------

inline Check grid_round_trip(std::mt19937_64& rng) {
    const Wavefunction psi = oracle::random_state(random_grid(rng), rng);
    return at_most(oracle::sup_distance(to_coordinate(to_momentum(psi)).amps(), psi.amps()),
                   1e-10);
}

inline Check grid_parseval(std::mt19937_64& rng) {
    const Wavefunction psi = oracle::random_state(random_grid(rng), rng);
    return at_most(std::fabs(to_momentum(psi).norm2() - psi.norm2()), 1e-10);
}

inline Check grid_linearity(std::mt19937_64& rng) {
    const Grid1D g = random_grid(rng);
    const Wavefunction a = oracle::random_state(g, rng);
    const Wavefunction b = oracle::random_state(g, rng);
    const complex ca(uniform(rng, -2, 2), uniform(rng, -2, 2));
    const complex cb(uniform(rng, -2, 2), uniform(rng, -2, 2));
    std::vector<complex> mix(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) mix[i] = ca * a[i] + cb * b[i];
    const Wavefunction tm = to_momentum(Wavefunction(g, mix));
    const Wavefunction ta = to_momentum(a);
    const Wavefunction tb = to_momentum(b);
    double err = 0.0;
    double scale = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        err = std::max(err, std::abs(tm[k] - (ca * ta[k] + cb * tb[k])));
        scale = std::max(scale, std::abs(tm[k]));
    }
    return at_most(err / scale, 1e-12);
}

inline Check grid_conjugate_spacing(std::mt19937_64& rng) {
    const Grid1D g = random_grid(rng, 8, 4096);
    const double product = g.dx() * g.dp() * static_cast<double>(g.size());
    return at_most(std::fabs(product - 2.0 * std::numbers::pi) / (2.0 * std::numbers::pi), 1e-15);
}

// ---- special --------------------------------------------------------------

inline GateFactorParams random_params(std::mt19937_64& rng) {
    return {uniform(rng, 0.1, 1.0), uniform(rng, -5.0, 15.0)};
}

inline Check special_evaluator_agreement(std::mt19937_64& rng) {
    const GateFactorParams p = random_params(rng);
    const double c = std::cbrt(3.0 * p.gamma);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        const double x = p.y_m + c * uniform(rng, -12.0, 12.0);
        worst = std::max(worst, std::abs(gate_factor_exact(x, p) - gate_factor_quadrature(x, p)));
    }
    return at_most(worst, tolerance::evaluator_agreement);
}

/// Error of the two-branch form in units of its amplitude at scaled argument s.
inline double stationary_error(const GateFactorParams& p, double s) {
    const double x = p.y_m + std::cbrt(3.0 * p.gamma) * s;
    return std::fabs(gate_factor_stationary(x, p).real() - gate_factor_exact(x, p).real()) /
           stationary_amplitude(x, p);
}

struct ErrorPeak {
    double s;
    double error;
};

/// Local maxima of the stationary-phase error between scaled arguments
/// s_from > s_to, in order of increasing |s|. The error oscillates with the
/// Airy phase, so its successive peaks are what can improve monotonically.
inline std::vector<ErrorPeak> stationary_error_peaks(const GateFactorParams& p, double s_from,
                                                     double s_to, double step = 1e-3) {
    std::vector<ErrorPeak> peaks;
    const auto n = static_cast<long>((s_from - s_to) / step);
    double prev2 = stationary_error(p, s_from);
    double prev = stationary_error(p, s_from - step);
    for (long k = 2; k <= n; ++k) {
        const double s = s_from - step * static_cast<double>(k);
        const double e = stationary_error(p, s);
        if (prev > prev2 && prev >= e) peaks.push_back({s + step, prev});
        prev2 = prev;
        prev = e;
    }
    return peaks;
}

inline Check special_asymptotic_match(std::mt19937_64& rng) {
    const GateFactorParams p = random_params(rng);
    bool ok = stationary_error(p, -2.0) <= 0.10 && stationary_error(p, -8.0) <= 0.005;
    const auto peaks = stationary_error_peaks(p, -1.5, -8.5, 2e-3);
    ok = ok && peaks.size() >= 3;
    for (std::size_t k = 1; k < peaks.size(); ++k) ok = ok && peaks[k].error < peaks[k - 1].error;
    return {ok, stationary_error(p, -8.0)};
}

inline Check special_forbidden_decay(std::mt19937_64& rng) {
    const GateFactorParams p = random_params(rng);
    const double c = std::cbrt(3.0 * p.gamma);
    const double s1 = uniform(rng, 1.0, 12.0);
    const double s2 = s1 + uniform(rng, 1e-3, 2.0);
    const double a = std::abs(gate_factor_exact(p.y_m + c * s1, p));
    const double b = std::abs(gate_factor_exact(p.y_m + c * s2, p));
    return {b < a, b / a};
}

inline Check special_realness(std::mt19937_64& rng) {
    const GateFactorParams p = random_params(rng);
    const double c = std::cbrt(3.0 * p.gamma);
    const double x = p.y_m + c * uniform(rng, -12.0, 6.0);
    const double worst =
        std::max(std::fabs(gate_factor_exact(x, p).imag()), std::fabs(gate_factor_quadrature(x, p).imag()));
    return at_most(worst, tolerance::realness);
}

inline Check special_local_frequency(std::mt19937_64& rng) {
    const GateFactorParams p = random_params(rng);
    const double x = p.y_m - uniform(rng, 0.5, 20.0);
    const double h = 1e-4;
    const complex up = branch_factors(x + h, p).first.value;
    const complex down = branch_factors(x - h, p).first.value;
    const double derivative = std::arg(up / down) / (2.0 * h);
    const double expected = std::sqrt((p.y_m - x) / (3.0 * p.gamma));
    return at_most(std::fabs(derivative - expected) / expected, 1e-6);
}

inline Check special_branch_pair(std::mt19937_64& rng) {
    const GateFactorParams p = random_params(rng);
    const double x = p.y_m - uniform(rng, 1e-3, 20.0);
    const auto [plus, minus] = branch_factors(x, p);
    const double conj_gap = std::abs(minus.value - std::conj(plus.value));
    const double sum_gap = std::abs(plus.value + minus.value - gate_factor_stationary(x, p));
    return {conj_gap == 0.0 && sum_gap <= 1e-12 && plus.stationary_point > 0.0 &&
                minus.stationary_point == -plus.stationary_point,
            sum_gap};
}

// ---- states ---------------------------------------------------------------

/// Probability below `cut` in the momentum distribution of psi.
inline double momentum_mass_below(const Wavefunction& psi, double cut) {
    const Wavefunction mom = to_momentum(psi);
    double s = 0.0;
    for (std::size_t k = 0; k < mom.size(); ++k) {
        if (mom.abscissa(k) < cut) s += std::norm(mom[k]);
    }
    return s * mom.step();
}

inline AncillaSpec random_ancilla(std::mt19937_64& rng) {
    return {uniform(rng, 0.1, 1.0), uniform(rng, 0.02, 0.1)};
}

/// Ancilla grid on which 3 gamma x^2 stays below the Nyquist momentum.
inline Grid1D ancilla_grid_for(double gamma) {
    return gamma > 0.3 ? make_grid(-8.0, 8.0, 1024) : make_grid(-12.0, 12.0, 1024);
}

/// The skew statement as literally posed: P(p < -5 squeeze) < 1e-3.
inline Check states_skew_literal(std::mt19937_64& rng) {
    const AncillaSpec spec = random_ancilla(rng);
    const Wavefunction psi = prepare_cubic_ancilla(spec, ancilla_grid_for(spec.gamma));
    return at_most(momentum_mass_below(psi, -5.0 * spec.squeeze), 1e-3);
}

/// The skew with the cubic state's own momentum scale: P(p < -3 (3 gamma)^(1/3)) < 1e-3.
inline Check states_skew_airy_scale(std::mt19937_64& rng) {
    const AncillaSpec spec = random_ancilla(rng);
    const Wavefunction psi = prepare_cubic_ancilla(spec, ancilla_grid_for(spec.gamma));
    return at_most(momentum_mass_below(psi, -3.0 * std::cbrt(3.0 * spec.gamma)), 1e-3);
}

inline Check states_cubic_negativity(std::mt19937_64& rng) {
    const AncillaSpec spec{1.0, uniform(rng, 0.02, 0.1)};
    const Wavefunction psi = prepare_cubic_ancilla(spec, make_grid(-8.0, 8.0, 1024));
    const WignerMap w = wigner(psi, make_grid(-2.0, 6.0, 64));
    return {wigner_min(w) < -1e-3, -wigner_min(w)};
}

inline Check states_normalized(std::mt19937_64& rng) {
    const Grid1D g = make_grid(-10.0, 10.0, 256);
    const double w = uniform(rng, 0.3, 1.2);
    const InputStateSpec spec =
        (rng() & 1) ? InputStateSpec(CoherentGaussian{uniform(rng, -3, 3), uniform(rng, -3, 3), w})
                    : InputStateSpec(SqueezedGaussian{uniform(rng, -3, 3), uniform(rng, -3, 3), w});
    const AncillaSpec a = random_ancilla(rng);
    const double e1 = std::fabs(prepare_input(spec, g).norm2() - 1.0);
    const double e2 = std::fabs(prepare_cubic_ancilla(a, ancilla_grid_for(a.gamma)).norm2() - 1.0);
    return at_most(std::max(e1, e2), tolerance::normalization);
}

// ---- gate -----------------------------------------------------------------

inline Wavefunction random_input(std::mt19937_64& rng, const Grid1D& g) {
    return prepare_input(CoherentGaussian{uniform(rng, -2, 2), uniform(rng, -1, 1),
                                          uniform(rng, 0.4, 1.0)},
                         g);
}

inline Check gate_cz_norm(std::mt19937_64& rng) {
    const Grid1D g1 = make_grid(-8.0, 8.0, 128);
    const Grid1D g2 = make_grid(-10.0, 10.0, 256);
    const TwoModeState s = tensor(oracle::random_state(g1, rng), oracle::random_state(g2, rng));
    return at_most(std::fabs(apply_cz(s).norm2() - s.norm2()), 1e-13);
}

inline Check gate_pipeline_convergence(std::mt19937_64& rng) {
    const double gamma = uniform(rng, 0.1, 0.3);
    const double y = uniform(rng, 3.0, 8.0);
    const Grid1D g1 = make_grid(-8.0, 8.0, 256);
    const Grid1D g2 = make_grid(-12.0, 12.0, 1024);
    const Wavefunction psi = prepare_input(CoherentGaussian{uniform(rng, -1, 1), 0.0, 0.7071067811865476}, g1);
    double previous = -1.0;
    bool ok = true;
    for (double squeeze : {0.1, 0.05, 0.02}) {
        const auto brute =
            project_outcome(apply_cz(tensor(psi, prepare_cubic_ancilla({gamma, squeeze}, g2))), y);
        const double f = fidelity(brute.state, analytic_condition(psi, {gamma, brute.snapped_y}));
        ok = ok && f > previous;
        previous = f;
    }
    return {ok, 1.0 - previous};
}

inline Check gate_position_diagonal(std::mt19937_64& rng) {
    const Grid1D g = make_grid(-8.0, 8.0, 256);
    const Wavefunction psi = random_input(rng, g);
    const GateFactorParams p{uniform(rng, 0.1, 1.0), uniform(rng, 0.0, 10.0)};
    const Wavefunction out = analytic_condition(psi, p);
    std::vector<double> ref(g.size());
    double total = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        ref[i] = std::norm(psi[i]) * std::norm(gate_factor_exact(g.x(i), p));
        total += ref[i];
    }
    const double peak = *std::max_element(ref.begin(), ref.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double expected = ref[i] / (total * g.dx());
        if (ref[i] > 1e-12 * peak) {
            worst = std::max(worst, std::fabs(std::norm(out[i]) - expected) / expected);
        }
    }
    return at_most(worst, 1e-10);
}

inline Check gate_outcome_covariance(std::mt19937_64& rng) {
    const Grid1D g = make_grid(-10.0, 10.0, 256);
    const double x0 = uniform(rng, -2, 2);
    const long m = std::uniform_int_distribution<long>(-40, 40)(rng);
    const double d = static_cast<double>(m) * g.dx();
    const GateFactorParams p{uniform(rng, 0.1, 1.0), uniform(rng, 0.0, 8.0)};
    const double w = uniform(rng, 0.4, 1.0);
    // Untapered Gaussians so the shifted copy is exactly the same samples.
    const Wavefunction a(g, oracle::gaussian(g, x0, 0.5, w));
    const Wavefunction b(g, oracle::gaussian(g, x0 + d, 0.5, w));
    const Wavefunction ca = analytic_condition(a, p);
    const Wavefunction cb = analytic_condition(b, {p.gamma, p.y_m + d});
    // The momentum factor exp(i 0.5 x) shifts by a global phase.
    const complex phase = std::polar(1.0, 0.5 * d);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const long j = static_cast<long>(i) + m;
        if (j < 0 || j >= static_cast<long>(g.size())) continue;
        worst = std::max(worst, std::abs(cb[static_cast<std::size_t>(j)] - phase * ca[i]));
    }
    return at_most(worst, 1e-10);
}

inline Check gate_outcome_normalization(std::mt19937_64& rng) {
    const Grid1D g1 = make_grid(-8.0, 8.0, 128);
    const AncillaSpec a{uniform(rng, 0.1, 0.3), uniform(rng, 0.02, 0.1)};
    const TwoModeState s =
        apply_cz(tensor(random_input(rng, g1), prepare_cubic_ancilla(a, make_grid(-12.0, 12.0, 1024))));
    const auto density = outcome_density(s);
    double total = 0.0;
    for (const auto& o : density) total += o.density;
    total *= s.grid2().dp();
    return at_most(std::fabs(total - 1.0), 1e-6);
}

/// Mean momentum of mode 1 gains the mean position of mode 2.
inline Check gate_cz_momentum_shift(std::mt19937_64& rng) {
    const Grid1D g1 = make_grid(-12.0, 12.0, 256);
    const Grid1D g2 = make_grid(-12.0, 12.0, 256);
    const Wavefunction a = random_input(rng, g1);
    const Wavefunction b = random_input(rng, g2);
    const TwoModeState after = apply_cz(tensor(a, b));
    const auto density = marginal_density(mode_to_momentum(after, 1), 1);
    double mean = 0.0;
    for (std::size_t k = 0; k < g1.size(); ++k) mean += g1.p(k) * density[k];
    mean *= g1.dp();
    return at_most(std::fabs(mean - (moments(a).mean_p + moments(b).mean_x)), 1e-6);
}

// ---- heisenberg -----------------------------------------------------------

struct CatConfig {
    GateFactorParams params;
    double x0 = 0.0;
    double p0 = 0.0;
    double width = 0.0;
};

/// A localized input and an outcome at least ten position spreads beyond it,
/// with branches at least 2.5 input momentum spreads away from p0 so the two
/// lobes do not overlap.
inline CatConfig random_cat(std::mt19937_64& rng) {
    CatConfig c;
    while (true) {
        c.width = uniform(rng, 0.5, 1.0);
        c.x0 = uniform(rng, -2.0, 2.0);
        c.p0 = uniform(rng, -1.0, 1.0);
        c.params = {uniform(rng, 0.1, 1.0), c.x0 + 10.0 * c.width + uniform(rng, 0.0, 8.0)};
        const double shift = std::sqrt((c.params.y_m - c.x0) / (3.0 * c.params.gamma));
        if (shift >= 2.5 / (2.0 * c.width)) return c;
    }
}

inline Wavefunction cat_input(const CatConfig& c) {
    return prepare_input(CoherentGaussian{c.x0, c.p0, c.width}, make_grid(-10.0, 10.0, 512));
}

inline Check heisenberg_agreement(std::mt19937_64& rng) {
    const CatConfig c = random_cat(rng);
    const auto cmp = compare_branches_to_distribution(cat_input(c), c.params);
    return at_most(cmp.relative_separation_error.value_or(1.0), 0.05);
}

inline Check heisenberg_linearized_limit(std::mt19937_64& rng) {
    const GateFactorParams p{uniform(rng, 0.1, 1.0), uniform(rng, 50.0, 500.0)};
    const double q1 = uniform(rng, -3.0, 3.0);
    const auto b = branch_momenta(q1, 0.0, p);
    const double k = linearized_kick(p);
    const double r = q1 / p.y_m;
    // Shift = k sqrt(1 - r); the first-order form leaves an O(r^2) remainder.
    return at_most(std::fabs(*b.p_plus - k * (1.0 - 0.5 * r)) / k, 0.2 * r * r);
}

inline Check heisenberg_symmetry(std::mt19937_64& rng) {
    const GateFactorParams p = random_params(rng);
    const double q1 = uniform(rng, -10.0, 20.0);
    const double p1 = uniform(rng, -5.0, 5.0);
    const auto b = branch_momenta(q1, p1, p);
    if (b.valid != (p.y_m - q1 >= 0.0)) return {false, 1.0};
    if (!b.valid) return {!b.p_plus && !b.p_minus, 0.0};
    const double gap = std::fabs(*b.p_plus + *b.p_minus - 2.0 * p1);
    return at_most(gap, 4.0 * std::numeric_limits<double>::epsilon() * (std::fabs(p1) + *b.p_plus - p1));
}

// ---- analysis -------------------------------------------------------------

inline Check analysis_wigner_normalization(std::mt19937_64& rng) {
    const Wavefunction psi = oracle::random_state(make_grid(-8.0, 8.0, 128), rng);
    return at_most(std::fabs(wigner_integral(wigner(psi)) - 1.0), 1e-6);
}

inline Check analysis_wigner_marginals(std::mt19937_64& rng) {
    const Grid1D g = make_grid(-8.0, 8.0, 128);
    const Wavefunction psi = oracle::random_state(g, rng);
    const WignerMap w = wigner(psi);
    const double dpw = w.p_grid.dx();
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < w.p_grid.size(); ++k) s += w.at(i, k);
        worst = std::max(worst, std::fabs(s * dpw - std::norm(psi[i])));
    }
    const double c = g.dx() / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t k = 0; k < w.p_grid.size(); ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) s += w.at(i, k);
        complex amp = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) amp += psi[j] * std::polar(1.0, -w.p(k) * g.x(j));
        worst = std::max(worst, std::fabs(s * g.dx() - std::norm(c * amp)));
    }
    return at_most(worst, 1e-6);
}

inline Check analysis_peak_consistency(std::mt19937_64& rng) {
    const CatConfig c = random_cat(rng);
    const Wavefunction psi = cat_input(c);
    const auto peaks = momentum_peaks(analytic_condition(psi, c.params));
    if (peaks.size() < 2) return {false, 1e9};
    const double predicted = 2.0 * std::sqrt((c.params.y_m - moments(psi).mean_x) / (3.0 * c.params.gamma));
    return at_most(std::fabs(peaks.back() - peaks.front() - predicted), psi.grid().dp());
}

inline Check analysis_success_window(std::mt19937_64& rng) {
    std::vector<MeasurementOutcome> d;
    const double dy = 0.1;
    double total = 0.0;
    for (int k = 0; k <= 200; ++k) {
        d.push_back({-10.0 + dy * k, uniform(rng, 0.0, 1.0)});
        total += d.back().density;
    }
    for (auto& o : d) o.density /= total * dy;
    const double a = uniform(rng, -10.0, 10.0);
    const double b = uniform(rng, -10.0, 10.0);
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    const double cut = uniform(rng, lo, hi);
    const double additivity =
        std::fabs(success_window(d, lo, cut) + success_window(d, cut, hi) - success_window(d, lo, hi));
    const bool monotone = success_window(d, lo, hi) >= success_window(d, cut, hi) &&
                          success_window(d, -10.0, 10.0) >= success_window(d, lo, hi);
    return {additivity <= 1e-12 && monotone, additivity};
}

inline Check analysis_report_ranges(std::mt19937_64& rng) {
    const CatConfig c = random_cat(rng);
    const Wavefunction psi = cat_input(c);
    const CatReport r = make_cat_report(analytic_condition(psi, c.params), psi, c.params);
    bool ok = r.visibility >= 0.0 && r.visibility <= 1.0;
    if (r.peak_positions.size() >= 2) {
        ok = ok && r.separation == r.peak_positions.back() - r.peak_positions.front();
    }
    if (r.branch_fidelity) ok = ok && *r.branch_fidelity >= 0.0 && *r.branch_fidelity <= 1.0;
    return {ok, r.visibility};
}

inline Check analysis_fidelity_symmetry(std::mt19937_64& rng) {
    const Grid1D g = make_grid(-8.0, 8.0, 256);
    const Wavefunction a = oracle::random_state(g, rng);
    const Wavefunction b = oracle::random_state(g, rng);
    const double f = fidelity(a, b);
    const bool in_range = f >= 0.0 && f <= 1.0;
    return {in_range && std::fabs(f - fidelity(b, a)) <= 1e-12, std::fabs(f - fidelity(b, a))};
}

// ---- cli ------------------------------------------------------------------

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::filesystem::path scratch_dir(const std::string& tag) {
    static std::size_t counter = 0;
    auto dir = std::filesystem::temp_directory_path() /
               ("catgate_props_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(dir);
    return dir;
}

inline Check cli_deterministic(std::mt19937_64& rng) {
    cli::RunConfig c;
    c.gamma = uniform(rng, 0.1, 1.0);
    c.y_m = uniform(rng, 2.0, 10.0);
    c.grid = {-8.0, 8.0, 128};
    c.format = (rng() & 1) ? cli::Format::Csv : cli::Format::Json;
    const auto a = scratch_dir("a");
    const auto b = scratch_dir("b");
    c.out = a;
    const auto ra = cli::cmd_condition(c);
    c.out = b;
    const auto rb = cli::cmd_condition(c);
    bool same = ra.files.size() == rb.files.size();
    for (std::size_t i = 0; same && i < ra.files.size(); ++i) {
        same = slurp(ra.files[i]) == slurp(rb.files[i]);
    }
    std::filesystem::remove_all(a);
    std::filesystem::remove_all(b);
    return {same, same ? 0.0 : 1.0};
}

inline Check cli_number_round_trip(std::mt19937_64& rng) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double v = uniform(rng, -1.0, 1.0) * std::pow(10.0, uniform(rng, -300.0, 300.0));
        const double back = io::parse_number(io::format_number(v));
        worst = std::max(worst, std::fabs(back - v) / std::fabs(v));
    }
    return at_most(worst, 1e-12);
}

/// Written wavefunctions re-read and re-normalized have unit norm.
inline Check cli_output_round_trip(std::mt19937_64& rng) {
    cli::RunConfig c;
    c.gamma = uniform(rng, 0.1, 1.0);
    c.y_m = uniform(rng, 2.0, 10.0);
    c.grid = {-8.0, 8.0, 128};
    c.out = scratch_dir("rt");
    cli::cmd_condition(c);
    std::ifstream in(c.out / "wavefunction.csv");
    const auto rows = io::read_numeric_csv(in);
    std::filesystem::remove_all(c.out);
    double s = 0.0;
    for (const auto& r : rows) s += r[1] * r[1] + r[2] * r[2];
    const double dx = rows[1][0] - rows[0][0];
    return at_most(std::fabs(s * dx - 1.0), 1e-9);
}

/// Every invariant, grouped by module. `literal_skew` selects the as-posed
/// form of the ancilla momentum skew statement.
inline std::vector<Property> all(bool literal_skew) {
    std::vector<Property> v{
        {"grid", "round-trip", "<= 1e-10", grid_round_trip},
        {"grid", "parseval", "<= 1e-10", grid_parseval},
        {"grid", "linearity", "<= 1e-12 rel", grid_linearity},
        {"grid", "dx*dp*n = 2pi", "<= 1e-15 rel", grid_conjugate_spacing},
        {"special", "evaluator agreement", "<= 1e-8", special_evaluator_agreement},
        {"special", "asymptotic match", "-2: 10%, -8: 0.5%, error peaks decreasing",
         special_asymptotic_match},
        {"special", "forbidden-side decay", "ratio < 1", special_forbidden_decay},
        {"special", "realness", "|Im| <= 1e-9", special_realness},
        {"special", "local frequency", "<= 1e-6 rel", special_local_frequency},
        {"special", "branch conjugate pair", "sum <= 1e-12", special_branch_pair},
        {"states", "cubic wigner negativity", "-min W > 1e-3", states_cubic_negativity},
        {"states", "normalized", "<= 1e-10", states_normalized},
        {"gate", "cz norm", "<= 1e-13", gate_cz_norm},
        {"gate", "pipeline convergence in squeeze", "monotone", gate_pipeline_convergence},
        {"gate", "position diagonal", "<= 1e-10 rel", gate_position_diagonal},
        {"gate", "outcome covariance", "<= 1e-10", gate_outcome_covariance},
        {"gate", "outcome density normalization", "<= 1e-6", gate_outcome_normalization},
        {"gate", "cz momentum shift", "<= 1e-6", gate_cz_momentum_shift},
        {"heisenberg", "agreement law", "<= 5% rel", heisenberg_agreement},
        {"heisenberg", "linearized limit", "<= 0.2 (q/y)^2", heisenberg_linearized_limit},
        {"heisenberg", "branch symmetry and validity", "<= 4 ulp", heisenberg_symmetry},
        {"analysis", "wigner normalization", "<= 1e-6", analysis_wigner_normalization},
        {"analysis", "wigner marginals", "<= 1e-6", analysis_wigner_marginals},
        {"analysis", "peak consistency", "<= dp", analysis_peak_consistency},
        {"analysis", "success window additive and monotone", "<= 1e-12", analysis_success_window},
        {"analysis", "report ranges", "visibility in [0,1]", analysis_report_ranges},
        {"analysis", "fidelity symmetric", "<= 1e-12", analysis_fidelity_symmetry},
        {"cli", "deterministic output", "bit-identical", cli_deterministic},
        {"cli", "number round-trip", "<= 1e-12 rel", cli_number_round_trip},
        {"cli", "written state round-trip", "<= 1e-9", cli_output_round_trip},
    };
    if (literal_skew) {
        v.push_back({"states", "momentum skew P(p < -5 squeeze)", "< 1e-3", states_skew_literal});
    } else {
        v.push_back({"states", "momentum skew P(p < -3 (3 gamma)^(1/3))", "< 1e-3",
                     states_skew_airy_scale});
    }
    return v;
}

}  // namespace props

#endif  // CATGATE_TESTS_PROPERTIES_HPP
