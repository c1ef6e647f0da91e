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

#ifndef CATGATE_CONFIG_HPP
#define CATGATE_CONFIG_HPP

// Numerical constants shared by the library and referenced by name from the
// test suites.

namespace catgate::tolerance {

/// Norm² of any normalized state.
inline constexpr double normalization = 1e-10;
/// Round trip and Parseval for the discrete Fourier pair.
inline constexpr double transform_roundtrip = 1e-10;

/// |Ai| accuracy required of both Airy branches inside the switchover band.
inline constexpr double airy_handoff = 1e-9;
/// |t| at which the Airy evaluation leaves the Maclaurin series.
inline constexpr double airy_switchover = 6.0;

/// Absolute tolerance of the rotated-contour gate-factor quadrature.
inline constexpr double contour_quadrature = 1e-9;
/// Maximum bisection depth of the adaptive Gauss-Kronrod rule.
inline constexpr unsigned contour_max_depth = 20;
/// Agreement between the Airy and quadrature evaluators.
inline constexpr double evaluator_agreement = 1e-8;
/// Largest |Im| allowed on a gate factor.
inline constexpr double realness = 1e-9;

/// Grid adequacy: amplitude allowed on the outer band of a grid.
inline constexpr double edge_amplitude = 1e-8;
/// Grid adequacy: fraction of the grid counted as "outer band" on each side.
inline constexpr double edge_band_fraction = 0.05;
/// Norm fraction in the outer band beyond which an input state is rejected.
inline constexpr double edge_norm_error = 1e-4;

/// Products below this norm count as an impossible outcome.
inline constexpr double zero_overlap = 1e-12;
/// Momentum-density peaks below this fraction of the global max are ignored.
inline constexpr double peak_threshold = 0.1;

}  // namespace catgate::tolerance

#endif  // CATGATE_CONFIG_HPP
