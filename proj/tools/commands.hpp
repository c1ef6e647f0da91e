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

#ifndef CATGATE_TOOLS_COMMANDS_HPP
#define CATGATE_TOOLS_COMMANDS_HPP

// Verbs of the catgate command-line driver. Each verb takes a fully parsed
// configuration, writes its files under config.out and returns what it wrote.

#include <cmath>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catgate/catgate.hpp"
#include "catgate/io.hpp"
#include "json.hpp"

namespace catgate::cli {

inline constexpr const char* kVersion = "catgate 1.0.0";

enum class Pipeline { Analytic, BruteForce, Both };
enum class Format { Csv, Json };

struct GridSpec {
    double x_min = -8.0;
    double x_max = 8.0;
    std::size_t n = 512;

    Grid1D make() const { return make_grid(x_min, x_max, n); }
};

struct RunConfig {
    double gamma = 0.2;
    double y_m = 6.0;
    double squeeze = 0.05;
    GridSpec grid;
    GridSpec ancilla_grid{-12.0, 12.0, 1024};
    InputStateSpec input = CoherentGaussian{};
    std::string input_text = "coherent:0,0,0.7071067811865476";
    Pipeline pipeline = Pipeline::Analytic;
    Format format = Format::Csv;
    std::filesystem::path out = ".";
    /// Fail with no-bimodality when a conditioned state is not a two-lobe cat.
    bool require_cat = false;
};

struct Warning {
    std::string kind;
    std::string message;
};

struct CommandResult {
    std::vector<std::filesystem::path> files;
    std::vector<Warning> warnings;
    nlohmann::json summary;
};

inline std::string to_string(Pipeline p) {
    switch (p) {
        case Pipeline::Analytic: return "analytic";
        case Pipeline::BruteForce: return "brute";
        case Pipeline::Both: return "both";
    }
    return "analytic";
}

inline Pipeline parse_pipeline(const std::string& text) {
    if (text == "analytic") return Pipeline::Analytic;
    if (text == "brute") return Pipeline::BruteForce;
    if (text == "both") return Pipeline::Both;
    throw Error(ErrorKind::InvalidConfig, "pipeline must be analytic, brute or both");
}

inline Format parse_format(const std::string& text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    throw Error(ErrorKind::InvalidConfig, "format must be csv or json");
}

/// "xmin,xmax,n"
inline GridSpec parse_grid(const std::string& text) {
    const auto parts = io::split(text, ',');
    if (parts.size() != 3) throw Error(ErrorKind::InvalidConfig, "grid must be xmin,xmax,n");
    const double n = io::parse_number(parts[2]);
    if (!(n >= 1.0) || n != std::floor(n)) {
        throw Error(ErrorKind::InvalidSize, "grid point count must be a positive integer");
    }
    GridSpec g{io::parse_number(parts[0]), io::parse_number(parts[1]),
               static_cast<std::size_t>(n)};
    (void)g.make();
    return g;
}

/// "coherent:x0,p0,width", "squeezed:x0,p0,width" or "file:path.csv".
inline InputStateSpec parse_input(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw Error(ErrorKind::InvalidConfig, "input must be kind:arguments");
    }
    const std::string kind = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    if (kind == "file") return io::read_amplitude_table(std::filesystem::path(args));
    const auto parts = io::split(args, ',');
    if (parts.size() != 3) {
        throw Error(ErrorKind::InvalidConfig, "gaussian input needs x0,p0,width");
    }
    const double x0 = io::parse_number(parts[0]);
    const double p0 = io::parse_number(parts[1]);
    const double w = io::parse_number(parts[2]);
    if (kind == "coherent") return CoherentGaussian{x0, p0, w};
    if (kind == "squeezed") return SqueezedGaussian{x0, p0, w};
    throw Error(ErrorKind::InvalidConfig, "unknown input kind '" + kind + "'");
}

namespace detail {

inline std::string extension(Format f) { return f == Format::Csv ? ".csv" : ".json"; }

inline std::vector<std::string> metadata(const RunConfig& c) {
    using io::format_number;
    return {kVersion,
            "gamma=" + format_number(c.gamma),
            "y_m=" + format_number(c.y_m),
            "squeeze=" + format_number(c.squeeze),
            "grid=" + format_number(c.grid.x_min) + "," + format_number(c.grid.x_max) + "," +
                std::to_string(c.grid.n),
            "ancilla_grid=" + format_number(c.ancilla_grid.x_min) + "," +
                format_number(c.ancilla_grid.x_max) + "," + std::to_string(c.ancilla_grid.n),
            "input=" + c.input_text,
            "pipeline=" + to_string(c.pipeline)};
}

inline nlohmann::json config_json(const RunConfig& c) {
    return {{"version", kVersion},
            {"gamma", c.gamma},
            {"y_m", c.y_m},
            {"squeeze", c.squeeze},
            {"grid", {c.grid.x_min, c.grid.x_max, c.grid.n}},
            {"ancilla_grid", {c.ancilla_grid.x_min, c.ancilla_grid.x_max, c.ancilla_grid.n}},
            {"input", c.input_text},
            {"pipeline", to_string(c.pipeline)}};
}

inline nlohmann::json optional_json(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline std::filesystem::path write(const RunConfig& c, const std::string& stem,
                                   const std::string& contents, Format f) {
    std::filesystem::create_directories(c.out);
    const auto path = c.out / (stem + extension(f));
    io::write_atomic(path, contents);
    return path;
}

inline std::filesystem::path write_wavefunction(const RunConfig& c, const std::string& stem,
                                                const Wavefunction& psi) {
    if (c.format == Format::Csv) {
        io::CsvTable t({"x", "re", "im"}, metadata(c));
        for (std::size_t i = 0; i < psi.size(); ++i) {
            t.add_row(std::vector<double>{psi.abscissa(i), psi[i].real(), psi[i].imag()});
        }
        return write(c, stem, t.str(), c.format);
    }
    nlohmann::json j{{"metadata", config_json(c)}};
    std::vector<double> x, re, im;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        x.push_back(psi.abscissa(i));
        re.push_back(psi[i].real());
        im.push_back(psi[i].imag());
    }
    j["x"] = x;
    j["re"] = re;
    j["im"] = im;
    return write(c, stem, j.dump(2) + "\n", c.format);
}

inline std::filesystem::path write_momentum_density(const RunConfig& c, const std::string& stem,
                                                    const Wavefunction& psi) {
    const Wavefunction mom = to_momentum(psi);
    if (c.format == Format::Csv) {
        io::CsvTable t({"p", "density"}, metadata(c));
        for (std::size_t k = 0; k < mom.size(); ++k) {
            t.add_row(std::vector<double>{mom.abscissa(k), std::norm(mom[k])});
        }
        return write(c, stem, t.str(), c.format);
    }
    std::vector<double> p, d;
    for (std::size_t k = 0; k < mom.size(); ++k) {
        p.push_back(mom.abscissa(k));
        d.push_back(std::norm(mom[k]));
    }
    nlohmann::json j{{"metadata", config_json(c)}, {"p", p}, {"density", d}};
    return write(c, stem, j.dump(2) + "\n", c.format);
}

inline nlohmann::json report_json(const CatReport& r) {
    return {{"peak_positions", r.peak_positions},
            {"separation", r.separation},
            {"separation_to_width", r.separation_to_width},
            {"visibility", r.visibility},
            {"branch_fidelity", optional_json(r.branch_fidelity)},
            {"branch_fidelity_full", optional_json(r.branch_fidelity_full)},
            {"negativity_volume", optional_json(r.negativity_volume)},
            {"outcome_density", optional_json(r.outcome_density)}};
}

inline void check_input(const Wavefunction& psi, std::vector<Warning>& warnings) {
    const auto a = grid_adequacy(psi);
    if (!a.adequate()) {
        warnings.push_back({"truncation", "input amplitude " + io::format_number(a.max_edge_amplitude) +
                                              " in the outer band of the target grid"});
    }
}

inline void check_ancilla(const AncillaSpec& spec, const Grid1D& grid,
                          std::vector<Warning>& warnings) {
    const auto d = diagnose_ancilla(spec, grid);
    if (d.aliased()) {
        warnings.push_back({"aliasing", "cubic phase local momentum " +
                                            io::format_number(d.max_local_momentum) +
                                            " exceeds the ancilla grid Nyquist momentum " +
                                            io::format_number(d.nyquist_momentum)});
    }
    if (!d.edge.adequate()) {
        warnings.push_back({"truncation", "ancilla envelope is cut by the grid edge taper "
                                          "(amplitude " +
                                              io::format_number(d.edge.max_edge_amplitude) +
                                              " in the outer band)"});
    }
}

inline TwoModeState entangled_state(const RunConfig& c, const Wavefunction& psi_in,
                                    std::vector<Warning>& warnings) {
    const AncillaSpec spec{c.gamma, c.squeeze};
    const Grid1D g2 = c.ancilla_grid.make();
    check_ancilla(spec, g2, warnings);
    return apply_cz(tensor(psi_in, prepare_cubic_ancilla(spec, g2)));
}

inline void require_cat(const RunConfig& c, const CatReport& r) {
    if (c.require_cat && r.peak_positions.size() < 2) {
        throw Error(ErrorKind::NoBimodality, "conditioned state has fewer than two momentum peaks");
    }
}

inline void require_outcome_on_grid(const Grid1D& g2, double y) {
    const double dp = g2.dp();
    catgate::detail::require(std::isfinite(y) && y >= g2.p_min() - 0.5 * dp &&
                                 y <= g2.p_max() + 0.5 * dp,
                             ErrorKind::OutcomeOffGrid,
                             "outcome lies outside the ancilla momentum grid");
}

}  // namespace detail

/// Conditions the configured input on y_m and writes the output state, its
/// momentum density and a CatReport. With Pipeline::Both the analytic run uses
/// the outcome the brute-force grid resolved, and their fidelity is reported.
inline CommandResult cmd_condition(const RunConfig& c) {
    catgate::detail::require_gamma(c.gamma);
    CommandResult res;
    const Grid1D g1 = c.grid.make();
    const Wavefunction psi_in = prepare_input(c.input, g1);
    detail::check_input(psi_in, res.warnings);

    nlohmann::json summary{{"config", detail::config_json(c)}};
    std::optional<ProjectionResult> brute;
    double y_used = c.y_m;
    if (c.pipeline != Pipeline::Analytic) {
        const TwoModeState state = detail::entangled_state(c, psi_in, res.warnings);
        brute = project_outcome(state, c.y_m);
        y_used = brute->snapped_y;
        summary["snapped_y"] = brute->snapped_y;
        summary["snap_distance"] = brute->snap_distance;
        summary["joint_density"] = brute->joint_density;
    } else {
        detail::require_outcome_on_grid(c.ancilla_grid.make(), c.y_m);
    }
    const GateFactorParams params{c.gamma, y_used};

    std::optional<Wavefunction> analytic;
    if (c.pipeline != Pipeline::BruteForce) analytic = analytic_condition(psi_in, params);
    const Wavefunction& primary = analytic ? *analytic : brute->state;

    res.files.push_back(detail::write_wavefunction(c, "wavefunction", primary));
    res.files.push_back(detail::write_momentum_density(c, "momentum", primary));
    if (c.pipeline == Pipeline::Both) {
        res.files.push_back(detail::write_wavefunction(c, "wavefunction_brute", brute->state));
        res.files.push_back(detail::write_momentum_density(c, "momentum_brute", brute->state));
        summary["pipeline_fidelity"] = fidelity(brute->state, *analytic);
    }

    CatReport report = make_cat_report(primary, psi_in, params, true);
    detail::require_cat(c, report);
    if (brute) report.outcome_density = brute->joint_density;
    summary["report"] = detail::report_json(report);
    nlohmann::json warn = nlohmann::json::array();
    for (const auto& w : res.warnings) warn.push_back({{"kind", w.kind}, {"message", w.message}});
    summary["warnings"] = warn;

    std::filesystem::create_directories(c.out);
    const auto report_path = c.out / "report.json";
    io::write_atomic(report_path, summary.dump(2) + "\n");
    res.files.push_back(report_path);
    res.summary = std::move(summary);
    return res;
}

struct CompareApproxConfig {
    double gamma = 1.0;
    double y_m = 0.0;
    double x_lo = -15.0;
    double x_hi = 3.0;
    std::size_t n_samples = 721;
    Format format = Format::Csv;
    std::filesystem::path out = ".";
};

/// Tabulates the gate factor from the Airy closed form, the contour
/// quadrature and the two-branch stationary-phase form. rel_error is the
/// stationary-phase error in units of its own amplitude; both are empty for
/// x >= y_m.
inline CommandResult cmd_compare_approx(const CompareApproxConfig& c) {
    catgate::detail::require_gamma(c.gamma);
    catgate::detail::require(c.n_samples > 0, ErrorKind::InvalidSize,
                             "n_samples must be positive");
    catgate::detail::require(std::isfinite(c.x_lo) && std::isfinite(c.x_hi) && c.x_hi >= c.x_lo,
                             ErrorKind::InvalidExtent, "x range must satisfy x_lo <= x_hi");
    const GateFactorParams p{c.gamma, c.y_m};
    io::CsvTable table({"x", "scaled", "exact_re", "exact_im", "quadrature_re", "quadrature_im",
                        "stationary", "rel_error", "in_regime"},
                       {kVersion, "gamma=" + io::format_number(c.gamma),
                        "y_m=" + io::format_number(c.y_m),
                        "rel_error=|stationary-exact|/(2(12 gamma (y_m-x))^(-1/4))"});
    nlohmann::json rows = nlohmann::json::array();
    double max_gap = 0.0;
    for (std::size_t i = 0; i < c.n_samples; ++i) {
        const double x = c.n_samples == 1
                             ? c.x_lo
                             : c.x_lo + (c.x_hi - c.x_lo) * static_cast<double>(i) /
                                            static_cast<double>(c.n_samples - 1);
        const complex exact = gate_factor_exact(x, p);
        const complex quad = gate_factor_quadrature(x, p);
        max_gap = std::max(max_gap, std::abs(exact - quad));
        std::optional<double> stationary;
        std::optional<double> rel;
        const bool classical = x < c.y_m;
        if (classical) {
            stationary = gate_factor_stationary(x, p).real();
            rel = std::fabs(*stationary - exact.real()) / stationary_amplitude(x, p);
        }
        table.add_row(std::vector<std::optional<double>>{
            x, scaled_argument(x, p), exact.real(), exact.imag(), quad.real(), quad.imag(),
            stationary, rel, classical ? 1.0 : 0.0});
        rows.push_back({{"x", x},
                        {"scaled", scaled_argument(x, p)},
                        {"exact_re", exact.real()},
                        {"exact_im", exact.imag()},
                        {"quadrature_re", quad.real()},
                        {"quadrature_im", quad.imag()},
                        {"stationary", detail::optional_json(stationary)},
                        {"rel_error", detail::optional_json(rel)},
                        {"in_regime", classical}});
    }
    CommandResult res;
    std::filesystem::create_directories(c.out);
    const auto path = c.out / (std::string("compare_approx") + detail::extension(c.format));
    if (c.format == Format::Csv) {
        io::write_atomic(path, table.str());
    } else {
        nlohmann::json j{{"version", kVersion}, {"gamma", c.gamma}, {"y_m", c.y_m}, {"rows", rows}};
        io::write_atomic(path, j.dump(2) + "\n");
    }
    res.files.push_back(path);
    res.summary = {{"samples", c.n_samples}, {"max_exact_quadrature_gap", max_gap}};
    return res;
}

/// One CatReport row per outcome. P(y) always comes from the two-mode
/// simulation; the conditioned state from the configured pipeline.
inline CommandResult cmd_sweep(const RunConfig& c, const std::vector<double>& y_list) {
    catgate::detail::require_gamma(c.gamma);
    catgate::detail::require(!y_list.empty(), ErrorKind::InvalidConfig, "sweep needs outcomes");
    CommandResult res;
    const Grid1D g1 = c.grid.make();
    const Wavefunction psi_in = prepare_input(c.input, g1);
    detail::check_input(psi_in, res.warnings);
    const TwoModeState state = detail::entangled_state(c, psi_in, res.warnings);
    for (double y : y_list) detail::require_outcome_on_grid(state.grid2(), y);

    io::CsvTable table({"y_m", "snapped_y", "n_peaks", "separation", "separation_to_width",
                        "visibility", "branch_fidelity", "branch_fidelity_full",
                        "outcome_density"},
                       detail::metadata(c));
    nlohmann::json rows = nlohmann::json::array();
    for (double y : y_list) {
        const ProjectionResult brute = project_outcome(state, y);
        const double y_used = c.pipeline == Pipeline::Analytic ? y : brute.snapped_y;
        const GateFactorParams p{c.gamma, y_used};
        const Wavefunction cat =
            c.pipeline == Pipeline::BruteForce ? brute.state : analytic_condition(psi_in, p);
        CatReport r = make_cat_report(cat, psi_in, p);
        detail::require_cat(c, r);
        r.outcome_density = brute.joint_density;
        table.add_row(std::vector<std::optional<double>>{
            y, brute.snapped_y, static_cast<double>(r.peak_positions.size()), r.separation,
            r.separation_to_width, r.visibility, r.branch_fidelity, r.branch_fidelity_full,
            r.outcome_density});
        nlohmann::json row = detail::report_json(r);
        row["y_m"] = y;
        row["snapped_y"] = brute.snapped_y;
        rows.push_back(row);
    }
    std::filesystem::create_directories(c.out);
    const auto path = c.out / (std::string("sweep") + detail::extension(c.format));
    if (c.format == Format::Csv) {
        io::write_atomic(path, table.str());
    } else {
        io::write_atomic(path,
                         nlohmann::json{{"config", detail::config_json(c)}, {"rows", rows}}.dump(2) +
                             "\n");
    }
    res.files.push_back(path);
    res.summary = {{"rows", rows.size()}};
    return res;
}

enum class WignerTarget { Input, Ancilla, Output };

inline WignerTarget parse_wigner_target(const std::string& text) {
    if (text == "input") return WignerTarget::Input;
    if (text == "ancilla") return WignerTarget::Ancilla;
    if (text == "output") return WignerTarget::Output;
    throw Error(ErrorKind::InvalidConfig, "wigner state must be input, ancilla or output");
}

/// Wigner map of the input, the cubic ancilla or the analytically conditioned
/// output, with a JSON summary of its non-classical features.
inline CommandResult cmd_wigner(const RunConfig& c, WignerTarget target,
                                const std::optional<GridSpec>& p_grid) {
    catgate::detail::require_gamma(c.gamma);
    CommandResult res;
    std::optional<Wavefunction> psi;
    if (target == WignerTarget::Ancilla) {
        const AncillaSpec spec{c.gamma, c.squeeze};
        const Grid1D g2 = c.ancilla_grid.make();
        detail::check_ancilla(spec, g2, res.warnings);
        psi = prepare_cubic_ancilla(spec, g2);
    } else {
        const Wavefunction psi_in = prepare_input(c.input, c.grid.make());
        detail::check_input(psi_in, res.warnings);
        psi = target == WignerTarget::Input
                  ? psi_in
                  : analytic_condition(psi_in, GateFactorParams{c.gamma, c.y_m});
    }
    const Grid1D pg = p_grid ? p_grid->make() : wigner_momentum_grid(psi->grid());
    const WignerMap w = wigner(*psi, pg);
    const Moments m = moments(*psi);
    const auto xi = static_cast<std::size_t>(
        std::clamp<long>(psi->grid().nearest_x_index(m.mean_x), 0,
                         static_cast<long>(psi->size()) - 1));
    const auto pk = static_cast<std::size_t>(std::clamp<long>(
        std::lround((m.mean_p - pg.x_min()) / pg.dx()), 0, static_cast<long>(pg.size()) - 1));

    if (c.format == Format::Csv) {
        io::CsvTable t({"x", "p", "w"}, detail::metadata(c));
        for (std::size_t i = 0; i < w.x_grid.size(); ++i) {
            for (std::size_t k = 0; k < pg.size(); ++k) {
                t.add_row(std::vector<double>{w.x_grid.x(i), w.p(k), w.at(i, k)});
            }
        }
        res.files.push_back(detail::write(c, "wigner", t.str(), c.format));
    } else {
        std::vector<double> xs, ps;
        for (std::size_t i = 0; i < w.x_grid.size(); ++i) xs.push_back(w.x_grid.x(i));
        for (std::size_t k = 0; k < pg.size(); ++k) ps.push_back(w.p(k));
        nlohmann::json j{{"metadata", detail::config_json(c)},
                         {"x", xs},
                         {"p", ps},
                         {"w", w.values}};
        res.files.push_back(detail::write(c, "wigner", j.dump() + "\n", c.format));
    }
    res.summary = {{"config", detail::config_json(c)},
                   {"min", wigner_min(w)},
                   {"negativity_volume", negativity_volume(w)},
                   {"integral", wigner_integral(w)},
                   {"mean_x", m.mean_x},
                   {"mean_p", m.mean_p},
                   {"sign_changes_along_p_at_mean_x", sign_changes_along_p(w, xi)},
                   {"sign_changes_along_x_at_mean_p", sign_changes_along_x(w, pk)}};
    std::filesystem::create_directories(c.out);
    const auto summary_path = c.out / "wigner_summary.json";
    io::write_atomic(summary_path, res.summary.dump(2) + "\n");
    res.files.push_back(summary_path);
    return res;
}

/// Exit code for a library error: 2 config, 3 numerical, 4 regime.
inline int exit_code(const Error& e) {
    switch (error_class(e.kind())) {
        case ErrorClass::Config: return 2;
        case ErrorClass::Numerical: return 3;
        case ErrorClass::Regime: return 4;
    }
    return 2;
}

}  // namespace catgate::cli

#endif  // CATGATE_TOOLS_COMMANDS_HPP
