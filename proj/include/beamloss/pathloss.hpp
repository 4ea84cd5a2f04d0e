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

#ifndef BEAMLOSS_PATHLOSS_HPP
#define BEAMLOSS_PATHLOSS_HPP

#include <cmath>
#include <istream>
#include <string>

#include "beamloss/antenna.hpp"
#include "beamloss/errors.hpp"
#include "beamloss/pas.hpp"
#include "beamloss/pdp.hpp"

namespace beamloss {

/// Reference constants of the ASSAM log-distance fit: loss of the half-wave
/// dipole reference antenna at the 5 m reference distance, valid at 2.4 GHz
/// from 5 to 400 m. Override only through an explicit config file.
struct AssamConfig {
    double d0_m = 5.0;
    double pl_d0_ref_db = 53.1;
    double valid_min_m = 5.0;
    double valid_max_m = 400.0;
    double fc_hz = 2.4e9;
};

// Config file: `key = value` lines, `#` comments. Unknown keys are errors.
inline AssamConfig load_assam_config(std::istream &in) {
    AssamConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const double value = detail::parse_number(detail::trim(line.substr(eq + 1)), key);
        if (key == "d0_m")
            cfg.d0_m = value;
        else if (key == "pl_d0_ref_db")
            cfg.pl_d0_ref_db = value;
        else if (key == "valid_min_m")
            cfg.valid_min_m = value;
        else if (key == "valid_max_m")
            cfg.valid_max_m = value;
        else if (key == "fc_hz")
            cfg.fc_hz = value;
        else
            throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" +
                             key + "'");
    }
    if (!(cfg.d0_m > 0.0))
        throw OutOfRange("d0_m must be > 0");
    return cfg;
}

inline bool in_valid_range(const AssamConfig &cfg, double distance_m) {
    return distance_m >= cfg.valid_min_m && distance_m <= cfg.valid_max_m;
}

/// Boresight-aligned log-distance loss of one antenna type:
/// PL0(d) = PL(d0)_ref + 10 n log10(d / d0), in dB.
inline double assam_pl0(const AntennaSpec &antenna, double distance_m,
                        const AssamConfig &cfg = {}) {
    if (!(distance_m > 0.0) || !std::isfinite(distance_m))
        throw InvalidDistance("distance must be positive, got " + std::to_string(distance_m));
    return cfg.pl_d0_ref_db +
           10.0 * antenna.path_loss_exponent * std::log10(distance_m / cfg.d0_m);
}

struct PathLossResult {
    double distance_m = 0.0;
    double pl0_db = 0.0;    // aligned-orientation loss
    double k_linear = 1.0;  // orientation correction factor (floored)
    double pl_db = 0.0;     // pl0_db - 10 log10(k_linear)
    bool k_floored = false;
    bool d_out_of_range = false; // outside the empirical validity range
};

/// Orientation-modified loss: PL(alpha, beta) = PL0 - 10 log10 K(alpha, beta).
/// The exponents of the underlying fit are per antenna type with matched
/// ends, so differing Tx/Rx types are rejected unless `allow_mixed`, which
/// falls back to the Tx exponent.
inline PathLossResult modified_pl(const Scenario &s, const PowerDelayProfile &pdp,
                                  const AssamConfig &cfg = {}, bool allow_mixed = false) {
    if (!same_antenna_type(s.tx_antenna, s.rx_antenna) && !allow_mixed)
        throw MixedAntennaTypes("Tx antenna '" + s.tx_antenna.name + "' and Rx antenna '" +
                                s.rx_antenna.name +
                                "' differ; pass allow_mixed to use the Tx exponent");
    PathLossResult out;
    out.distance_m = s.distance_m;
    out.pl0_db = assam_pl0(s.tx_antenna, s.distance_m, cfg);
    const CorrectionFactor k = correction_factor(s, pdp);
    out.k_linear = k.k_linear;
    out.k_floored = k.floored;
    out.pl_db = out.pl0_db - 10.0 * std::log10(out.k_linear);
    out.d_out_of_range = !in_valid_range(cfg, s.distance_m);
    return out;
}

} // namespace beamloss

#endif
