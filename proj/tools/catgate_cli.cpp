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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace catgate;
using namespace catgate::cli;

void print_error(const std::string& kind, const std::string& message, int code) {
    std::cerr << nlohmann::json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump()
              << "\n";
}

void print_warnings(const CommandResult& r) {
    for (const auto& w : r.warnings) {
        std::cerr << nlohmann::json{{"warning", w.kind}, {"message", w.message}}.dump() << "\n";
    }
}

struct RawOptions {
    double gamma = 0.2;
    double y_m = 6.0;
    double squeeze = 0.05;
    std::string grid = "-8,8,512";
    std::string grid2 = "-12,12,1024";
    std::string input = "coherent:0,0,0.7071067811865476";
    std::string pipeline = "analytic";
    std::string format = "csv";
    std::string out = ".";
    bool require_cat = false;
};

void add_common(CLI::App* cmd, RawOptions& o) {
    cmd->add_option("--gamma", o.gamma, "cubic phase strength")->capture_default_str();
    cmd->add_option("--ym", o.y_m, "homodyne outcome")->capture_default_str();
    cmd->add_option("--squeeze", o.squeeze, "ancilla envelope width parameter")
        ->capture_default_str();
    cmd->add_option("--grid", o.grid, "input grid xmin,xmax,n")->capture_default_str();
    cmd->add_option("--grid2", o.grid2, "ancilla grid xmin,xmax,n")->capture_default_str();
    cmd->add_option("--input", o.input,
                    "coherent:x0,p0,width | squeezed:x0,p0,width | file:table.csv")
        ->capture_default_str();
    cmd->add_option("--pipeline", o.pipeline, "analytic | brute | both")->capture_default_str();
    cmd->add_option("--format", o.format, "csv | json")->capture_default_str();
    cmd->add_option("--out", o.out, "output directory")->capture_default_str();
    cmd->add_flag("--require-cat", o.require_cat, "fail unless the output has two momentum lobes");
}

RunConfig to_config(const RawOptions& o) {
    RunConfig c;
    c.gamma = o.gamma;
    c.y_m = o.y_m;
    c.squeeze = o.squeeze;
    c.grid = parse_grid(o.grid);
    c.ancilla_grid = parse_grid(o.grid2);
    c.input = parse_input(o.input);
    c.input_text = o.input;
    c.pipeline = parse_pipeline(o.pipeline);
    c.format = parse_format(o.format);
    c.out = o.out;
    c.require_cat = o.require_cat;
    return c;
}

void report(const CommandResult& r) {
    print_warnings(r);
    for (const auto& f : r.files) std::cout << f.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cat states from a cubic-phase ancilla, a C_Z gate and homodyne conditioning"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    RawOptions cond;
    auto* condition = app.add_subcommand("condition", "condition an input state on one outcome");
    add_common(condition, cond);

    CompareApproxConfig cmp;
    std::string cmp_format = "csv";
    std::string cmp_out = ".";
    std::vector<double> xrange{-15.0, 3.0};
    auto* compare = app.add_subcommand("compare-approx",
                                       "tabulate exact, quadrature and stationary gate factors");
    compare->add_option("--gamma", cmp.gamma)->capture_default_str();
    compare->add_option("--ym", cmp.y_m)->capture_default_str();
    compare->add_option("--xrange", xrange, "x_lo x_hi")->expected(2)->delimiter(',');
    compare->add_option("--samples", cmp.n_samples)->capture_default_str();
    compare->add_option("--format", cmp_format)->capture_default_str();
    compare->add_option("--out", cmp_out)->capture_default_str();

    RawOptions sw;
    std::vector<double> ys;
    auto* sweep = app.add_subcommand("sweep", "cat diagnostics over a list of outcomes");
    add_common(sweep, sw);
    sweep->add_option("--ys", ys, "comma-separated outcomes")->required()->delimiter(',');

    RawOptions wg;
    std::string target = "output";
    std::string pgrid;
    auto* wig = app.add_subcommand("wigner", "Wigner map of the input, ancilla or output");
    add_common(wig, wg);
    wig->add_option("--state", target, "input | ancilla | output")->capture_default_str();
    wig->add_option("--pgrid", pgrid, "momentum grid pmin,pmax,n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("invalid-config", e.what(), 2);
        return 2;
    }

    try {
        if (condition->parsed()) {
            const CommandResult r = cmd_condition(to_config(cond));
            report(r);
            if (r.summary.contains("pipeline_fidelity")) {
                std::cout << "pipeline_fidelity "
                          << io::format_number(r.summary["pipeline_fidelity"].get<double>())
                          << "\n";
            }
        } else if (compare->parsed()) {
            cmp.x_lo = xrange.at(0);
            cmp.x_hi = xrange.at(1);
            cmp.format = parse_format(cmp_format);
            cmp.out = cmp_out;
            report(cmd_compare_approx(cmp));
        } else if (sweep->parsed()) {
            report(cmd_sweep(to_config(sw), ys));
        } else if (wig->parsed()) {
            std::optional<GridSpec> pg;
            if (!pgrid.empty()) pg = parse_grid(pgrid);
            report(cmd_wigner(to_config(wg), parse_wigner_target(target), pg));
        }
    } catch (const Error& e) {
        const int code = exit_code(e);
        print_error(std::string(to_string(e.kind())), e.what(), code);
        return code;
    } catch (const std::filesystem::filesystem_error& e) {
        print_error("invalid-config", e.what(), 2);
        return 2;
    } catch (const std::exception& e) {
        print_error("internal", e.what(), 3);
        return 3;
    }
    return 0;
}
