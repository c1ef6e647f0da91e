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

#ifndef CATGATE_HEISENBERG_HPP
#define CATGATE_HEISENBERG_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "catgate/analysis.hpp"
#include "catgate/error.hpp"
#include "catgate/gate.hpp"
#include "catgate/special.hpp"

namespace catgate {

/// Output quadratures of the target after substituting the readout y_m for
/// the ancilla momentum: q_out = q1, p_out = p1 +- (3 gamma)^{-1/2} sqrt(y_m - q1).
/// The vacuum momentum p2^(0) of the ancilla is dropped. When y_m < q1 the
/// radicand is negative and both branches are left empty.
struct HeisenbergBranches {
    double q_out = 0.0;
    std::optional<double> p_plus;
    std::optional<double> p_minus;
    bool valid = false;
};

inline HeisenbergBranches branch_momenta(double q1, double p1, const GateFactorParams& p) {
    detail::require_gamma(p.gamma);
    HeisenbergBranches b;
    b.q_out = q1;
    const double radicand = p.y_m - q1;
    if (radicand >= 0.0) {
        const double shift = std::sqrt(radicand / (3.0 * p.gamma));
        b.p_plus = p1 + shift;
        b.p_minus = p1 - shift;
        b.valid = true;
    }
    return b;
}

struct BranchComparison {
    Moments input;
    HeisenbergBranches predicted;
    /// Every peak the finder reported, ascending.
    std::vector<double> peaks;
    /// The two tallest peaks, ascending.
    double peak_minus = 0.0;
    double peak_plus = 0.0;
    /// |peak - predicted| in units of the predicted branch shift.
    std::optional<double> relative_deviation_minus;
    std::optional<double> relative_deviation_plus;
    /// |measured separation - predicted separation| / predicted separation.
    std::optional<double> relative_separation_error;
};

/// Conditions psi_in on the ideal ancilla and checks the two momentum lobes
/// against the two-valued formula evaluated at the input's mean quadratures.
inline BranchComparison compare_branches_to_distribution(const Wavefunction& psi_in,
                                                         const GateFactorParams& p) {
    BranchComparison c;
    c.input = moments(psi_in);
    c.predicted = branch_momenta(c.input.mean_x, c.input.mean_p, p);
    const Wavefunction cat = analytic_condition(psi_in, p);
    auto found = find_momentum_peaks(cat);
    if (found.size() < 2) {
        throw Error(ErrorKind::NoBimodality, "conditioned state has fewer than two momentum peaks");
    }
    for (const auto& pk : found) c.peaks.push_back(pk.position);
    std::sort(c.peaks.begin(), c.peaks.end());
    std::partial_sort(found.begin(), found.begin() + 2, found.end(),
                      [](const Peak& a, const Peak& b) { return a.height > b.height; });
    c.peak_minus = std::min(found[0].position, found[1].position);
    c.peak_plus = std::max(found[0].position, found[1].position);
    if (c.predicted.valid) {
        const double shift = *c.predicted.p_plus - c.input.mean_p;
        if (shift > 0.0) {
            c.relative_deviation_plus = std::fabs(c.peak_plus - *c.predicted.p_plus) / shift;
            c.relative_deviation_minus = std::fabs(c.peak_minus - *c.predicted.p_minus) / shift;
            c.relative_separation_error =
                std::fabs((c.peak_plus - c.peak_minus) - 2.0 * shift) / (2.0 * shift);
        }
    }
    return c;
}

}  // namespace catgate

#endif  // CATGATE_HEISENBERG_HPP
