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

#ifndef BEAMLOSS_SWEEP_HPP
#define BEAMLOSS_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "beamloss/antenna.hpp"
#include "beamloss/errors.hpp"
#include "beamloss/pas.hpp"
#include "beamloss/pathloss.hpp"
#include "beamloss/pdp.hpp"

namespace beamloss {

/// One sweep: the cross product of distances, Tx boresights and Rx
/// boresights for a single antenna type used at both ends.
struct SweepSpec {
    AntennaSpec antenna;
    std::vector<double> distances_m;
    std::vector<double> alphas_deg;
    std::vector<double> betas_deg;
    PowerDelayProfile pdp;
    double kappa = 10.0;
    int grid_points = 3601;
};

/// `steps` distances from min to max inclusive, linear or logarithmic.
inline std::vector<double> expand_distances(double min_m, double max_m, int steps,
                                            bool log_spacing) {
    if (!(min_m > 0.0) || !(max_m >= min_m))
        throw InvalidDistance("need 0 < d-min <= d-max");
    if (steps < 1)
        throw OutOfRange("d-steps must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        out.push_back(min_m);
        return out;
    }
    for (int i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / (steps - 1);
        out.push_back(log_spacing ? min_m * std::pow(max_m / min_m, t)
                                  : min_m + t * (max_m - min_m));
    }
    return out;
}

inline constexpr const char *sweep_csv_header =
    "d_m,alpha_deg,beta_deg,K_linear,PL0_db,PL_db,k_floored";

namespace detail {
inline std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}
} // namespace detail

/// Evaluates one distance of a sweep and renders its CSV rows. The reference
/// power is computed once per distance and reused for every orientation.
inline std::string sweep_rows_for_distance(const SweepSpec &spec, double d,
                                           const AssamConfig &cfg) {
    const PowerDelayProfile pdpn = normalize(spec.pdp);
    const EllipseSet ellipses = build_ellipses(pdpn, d);

    Scenario base;
    base.distance_m = d;
    base.tx_antenna = spec.antenna;
    base.rx_antenna = spec.antenna;
    base.kappa = spec.kappa;
    base.grid_points = spec.grid_points;

    Scenario ref = base;
    ref.alpha_deg = 180.0;
    ref.beta_deg = 0.0;
    const double p_ref = total_power(compose_pas(ref, pdpn, ellipses));
    const double pl0 = assam_pl0(spec.antenna, d, cfg);

    std::string rows;
    for (double alpha : spec.alphas_deg) {
        for (double beta : spec.betas_deg) {
            Scenario sc = base;
            sc.alpha_deg = alpha;
            sc.beta_deg = beta;
            const double p = total_power(compose_pas(sc, pdpn, ellipses));
            const double k_raw = p / p_ref;
            const bool floored = !(k_raw >= k_floor);
            const double k = floored ? k_floor : k_raw;
            const double pl = pl0 - 10.0 * std::log10(k);
            rows += detail::format_g9(d);
            rows += ',';
            rows += detail::format_g9(wrap_deg(alpha));
            rows += ',';
            rows += detail::format_g9(wrap_deg(beta));
            rows += ',';
            rows += detail::format_g9(k);
            rows += ',';
            rows += detail::format_g9(pl0);
            rows += ',';
            rows += detail::format_g9(pl);
            rows += ',';
            rows += floored ? '1' : '0';
            rows += '\n';
        }
    }
    return rows;
}

/// Runs the sweep and writes CSV rows ordered distance-major, then alpha,
/// then beta. Distances are evaluated in parallel; the output order does not
/// depend on scheduling. Does not write the header (callers may stack
/// several sweeps under one header).
inline void run_sweep_body(const SweepSpec &spec, std::ostream &os,
                           const AssamConfig &cfg = {}) {
    if (spec.distances_m.empty() || spec.alphas_deg.empty() || spec.betas_deg.empty())
        throw OutOfRange("sweep needs at least one distance, alpha and beta");
    std::vector<std::string> parts(spec.distances_m.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= parts.size())
                return;
            parts[i] = sweep_rows_for_distance(spec, spec.distances_m[i], cfg);
        }
    };
    unsigned n_threads = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                            static_cast<unsigned>(parts.size()));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto &th : pool)
            th.join();
    }
    for (const auto &p : parts)
        os << p;
}

/// Header plus body; the common single-sweep entry point.
inline void run_sweep(const SweepSpec &spec, std::ostream &os, const AssamConfig &cfg = {}) {
    os << sweep_csv_header << '\n';
    run_sweep_body(spec, os, cfg);
}

/// Preset reproducing the shape of one published evaluation figure. Multi-
/// antenna presets carry one block per antenna; blocks are separated by a
/// `# antenna=...` comment line in the CSV.
struct FigPreset {
    int figure = 0;
    std::vector<std::pair<std::string, SweepSpec>> blocks; // (label, sweep)
};

/// Presets 2..7. The published figure legends are not fully specified, so
/// the orientation sets are representative choices: figures 2/3 sweep the Rx
/// boresight for CR, figures 4/5 sweep the Tx boresight for CR, figures 6/7
/// compare CR against PG under fixed misalignments. All presets use the
/// shipped TDL-B profile at its 363 ns delay spread and span 10 m to 400 m.
inline FigPreset fig_preset(int figure, const std::vector<AntennaSpec> &catalog) {
    if (figure < 2 || figure > 7)
        throw OutOfRange("figure presets cover 2..7");
    const auto &cr = find_antenna(catalog, "CR");
    const auto &pg = find_antenna(catalog, "PG");

    SweepSpec base;
    base.distances_m = expand_distances(10.0, 400.0, 40, true);
    base.pdp = tdl_b();

    FigPreset preset;
    preset.figure = figure;
    auto add = [&preset](std::string label, SweepSpec s) {
        preset.blocks.emplace_back(std::move(label), std::move(s));
    };

    switch (figure) {
    case 2:
    case 3: {
        SweepSpec s = base;
        s.antenna = cr;
        s.alphas_deg = {180.0};
        s.betas_deg = {0.0, 30.0, 60.0, 90.0, 120.0};
        add("antenna=CR", std::move(s));
        break;
    }
    case 4:
    case 5: {
        SweepSpec s = base;
        s.antenna = cr;
        s.alphas_deg = {180.0, 150.0, 120.0, 90.0, 60.0};
        s.betas_deg = {0.0};
        add("antenna=CR", std::move(s));
        break;
    }
    case 6: {
        for (const auto *ant : {&cr, &pg}) {
            SweepSpec s = base;
            s.antenna = *ant;
            s.alphas_deg = {180.0};
            s.betas_deg = {0.0, 30.0, 60.0};
            add("antenna=" + ant->name, std::move(s));
        }
        break;
    }
    case 7: {
        for (const auto *ant : {&cr, &pg}) {
            for (const auto &[a, b] :
                 std::vector<std::pair<double, double>>{{150.0, 30.0}, {120.0, 60.0}, {120.0, 0.0}}) {
                SweepSpec s = base;
                s.antenna = *ant;
                s.alphas_deg = {a};
                s.betas_deg = {b};
                add("antenna=" + ant->name + " alpha=" + detail::format_g9(a) +
                        " beta=" + detail::format_g9(b),
                    std::move(s));
            }
        }
        break;
    }
    default:
        break;
    }
    return preset;
}

inline void run_preset(const FigPreset &preset, std::ostream &os, const AssamConfig &cfg = {}) {
    os << sweep_csv_header << '\n';
    for (const auto &[label, spec] : preset.blocks) {
        os << "# " << label << '\n';
        run_sweep_body(spec, os, cfg);
    }
}

} // namespace beamloss

#endif
