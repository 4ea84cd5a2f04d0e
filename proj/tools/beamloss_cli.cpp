// SPDX-License-Identifier: Apache-2.0
//
// beamloss - orientation-dependent path loss over a multi-elliptical scattering geometry
// Copyright (C) 2026 beamloss contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Command-line front end. Exit codes: 0 success, 2 usage error, 3 input
// data error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beamloss/beamloss.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_data = 3;

struct Options {
    std::string antenna;
    double d_min = 0.0, d_max = 0.0;
    int d_steps = 40;
    bool log_spacing = false;
    std::vector<double> alphas{180.0};
    std::vector<double> betas{0.0};
    std::string pdp_path;
    std::string delay_unit = "normalized";
    std::optional<double> ds_ns;
    double kappa = 10.0;
    int grid = 3601;
    std::string out_path;
    int fig = 0;
    bool dump_pdp = false;
    bool dump_catalog = false;
    bool oracle = false;
    long long samples = 0;
    std::optional<std::uint64_t> seed;
};

std::vector<beamloss::AntennaSpec> active_catalog() {
    if (const char *path = std::getenv("BEAMLOSS_CATALOG")) {
        std::ifstream in(path);
        if (!in)
            throw beamloss::ParseError(std::string("cannot open catalog file: ") + path);
        auto catalog = beamloss::parse_catalog(in);
        if (catalog.empty())
            throw beamloss::ParseError(std::string("catalog file is empty: ") + path);
        return catalog;
    }
    return beamloss::builtin_catalog();
}

beamloss::PowerDelayProfile load_pdp(const Options &opt) {
    if (opt.pdp_path.empty()) {
        // shipped TDL-B profile at its default 363 ns delay spread
        return beamloss::tdl_b(opt.ds_ns.value_or(363.0));
    }
    std::ifstream in(opt.pdp_path);
    if (!in)
        throw beamloss::ParseError("cannot open PDP file: " + opt.pdp_path);
    const auto unit = opt.delay_unit == "ns" ? beamloss::DelayUnit::nanoseconds
                                             : beamloss::DelayUnit::normalized;
    return beamloss::parse_pdp(in, unit, opt.ds_ns, opt.pdp_path);
}

int run(const Options &opt, std::ostream &os) {
    const auto catalog = active_catalog();

    if (opt.dump_catalog) {
        os << beamloss::serialize_catalog(catalog);
        return exit_ok;
    }
    if (opt.dump_pdp) {
        if (opt.pdp_path.empty()) {
            std::cerr << "beamloss: --dump-pdp requires --pdp\n";
            return exit_usage;
        }
        os << beamloss::serialize_pdp(load_pdp(opt));
        return exit_ok;
    }
    if (opt.fig != 0) {
        auto preset = beamloss::fig_preset(opt.fig, catalog);
        for (auto &[label, spec] : preset.blocks) {
            spec.kappa = opt.kappa;
            spec.grid_points = opt.grid;
        }
        beamloss::run_preset(preset, os);
        return exit_ok;
    }

    if (opt.antenna.empty()) {
        std::cerr << "beamloss: --antenna is required (or use --fig / --dump-*)\n";
        return exit_usage;
    }
    if (!(opt.d_min > 0.0) || !(opt.d_max >= opt.d_min)) {
        std::cerr << "beamloss: need --d-min and --d-max with 0 < d-min <= d-max\n";
        return exit_usage;
    }
    const auto &antenna = beamloss::find_antenna(catalog, opt.antenna);
    const auto distances =
        beamloss::expand_distances(opt.d_min, opt.d_max, opt.d_steps, opt.log_spacing);
    const auto pdp = load_pdp(opt);

    if (opt.oracle) {
        if (opt.samples < 10000) {
            std::cerr << "beamloss: --oracle requires --samples >= 10000\n";
            return exit_usage;
        }
        if (!opt.seed) {
            std::cerr << "beamloss: --oracle requires an explicit --seed\n";
            return exit_usage;
        }
        os << "d_m,alpha_deg,beta_deg,K_mc,std_error\n";
        for (double d : distances) {
            for (double alpha : opt.alphas) {
                for (double beta : opt.betas) {
                    beamloss::OracleConfig cfg;
                    cfg.samples = opt.samples;
                    cfg.seed = *opt.seed;
                    cfg.scenario.distance_m = d;
                    cfg.scenario.alpha_deg = alpha;
                    cfg.scenario.beta_deg = beta;
                    cfg.scenario.tx_antenna = antenna;
                    cfg.scenario.rx_antenna = antenna;
                    cfg.scenario.kappa = opt.kappa;
                    cfg.scenario.grid_points = opt.grid;
                    cfg.pdp = pdp;
                    const auto est = beamloss::mc_correction_factor(cfg);
                    os << beamloss::detail::format_g9(d) << ','
                       << beamloss::detail::format_g9(beamloss::wrap_deg(alpha)) << ','
                       << beamloss::detail::format_g9(beamloss::wrap_deg(beta)) << ','
                       << beamloss::detail::format_g9(est.k) << ','
                       << beamloss::detail::format_g9(est.std_error) << '\n';
                }
            }
        }
        return exit_ok;
    }

    beamloss::SweepSpec spec;
    spec.antenna = antenna;
    spec.distances_m = distances;
    spec.alphas_deg = opt.alphas;
    spec.betas_deg = opt.betas;
    spec.pdp = pdp;
    spec.kappa = opt.kappa;
    spec.grid_points = opt.grid;

    const beamloss::AssamConfig cfg;
    if (!beamloss::in_valid_range(cfg, opt.d_min) || !beamloss::in_valid_range(cfg, opt.d_max))
        std::cerr << "beamloss: warning: sweep leaves the 5-400 m validity range of the"
                     " log-distance fit\n";
    beamloss::run_sweep(spec, os, cfg);
    return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
    Options opt;
    CLI::App app{"Path loss for arbitrary Tx/Rx antenna orientations: log-distance fit "
                 "plus a correction factor from a multi-elliptical scattering geometry"};
    app.add_option("--antenna", opt.antenna, "Antenna type for both link ends");
    app.add_option("--d-min", opt.d_min, "Smallest Tx-Rx distance, meters");
    app.add_option("--d-max", opt.d_max, "Largest Tx-Rx distance, meters");
    app.add_option("--d-steps", opt.d_steps, "Number of distances", true);
    app.add_flag("--log", opt.log_spacing, "Logarithmic distance spacing");
    app.add_option("--alpha", opt.alphas, "Tx boresight angles, degrees")->delimiter(',');
    app.add_option("--beta", opt.betas, "Rx boresight angles, degrees")->delimiter(',');
    app.add_option("--pdp", opt.pdp_path, "Power delay profile CSV (default: built-in TDL-B)");
    app.add_option("--delay-unit", opt.delay_unit, "PDP delay unit", true)
        ->check(CLI::IsMember({"ns", "normalized"}));
    app.add_option("--ds-ns", opt.ds_ns, "RMS delay spread for normalized delays, ns");
    app.add_option("--kappa", opt.kappa, "von Mises concentration of local scattering", true);
    app.add_option("--grid", opt.grid, "Azimuth grid points (odd, >= 361)", true);
    app.add_option("--out", opt.out_path, "Output file (default: stdout)");
    app.add_option("--fig", opt.fig, "Preset sweep reproducing figure 2..7")
        ->check(CLI::Range(2, 7));
    app.add_flag("--dump-pdp", opt.dump_pdp, "Echo the parsed PDP canonically and exit");
    app.add_flag("--dump-catalog", opt.dump_catalog, "Echo the active catalog and exit");
    app.add_flag("--oracle", opt.oracle, "Monte-Carlo estimate of K instead of quadrature");
    app.add_option("--samples", opt.samples, "Oracle sample count per cluster");
    app.add_option("--seed", opt.seed, "Oracle random seed");
    app.footer("Environment: BEAMLOSS_CATALOG overrides the built-in antenna catalog.\n"
               "Exit codes: 0 success, 2 usage error, 3 input data error.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (!opt.out_path.empty()) {
            std::ofstream out(opt.out_path, std::ios::binary);
            if (!out) {
                std::cerr << "beamloss: cannot open output file: " << opt.out_path << '\n';
                return exit_data;
            }
            return run(opt, out);
        }
        return run(opt, std::cout);
    } catch (const beamloss::MissingScale &e) {
        std::cerr << "beamloss: " << e.what() << '\n';
        return exit_usage;
    } catch (const beamloss::OutOfRange &e) {
        std::cerr << "beamloss: " << e.what() << '\n';
        return exit_usage;
    } catch (const beamloss::InvalidDistance &e) {
        std::cerr << "beamloss: " << e.what() << '\n';
        return exit_usage;
    } catch (const beamloss::Error &e) {
        std::cerr << "beamloss: " << e.what() << '\n';
        return exit_data;
    } catch (const std::exception &e) {
        std::cerr << "beamloss: " << e.what() << '\n';
        return exit_data;
    }
}
