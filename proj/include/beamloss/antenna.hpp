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

#ifndef BEAMLOSS_ANTENNA_HPP
#define BEAMLOSS_ANTENNA_HPP

#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "beamloss/angles.hpp"
#include "beamloss/errors.hpp"

namespace beamloss {

/// Catalog entry for one antenna type. The path-loss exponent comes from the
/// per-antenna empirical fit; hpbw_az_deg is absent for antennas that are
/// omnidirectional in azimuth. gain_dbi is informational only: absolute gains
/// cancel in the orientation correction factor.
struct AntennaSpec {
    std::string name;
    double path_loss_exponent = 0.0;
    std::optional<double> hpbw_az_deg;
    std::optional<double> gain_dbi;
};

inline bool same_antenna_type(const AntennaSpec &a, const AntennaSpec &b) {
    return a.name == b.name && a.path_loss_exponent == b.path_loss_exponent &&
           a.hpbw_az_deg == b.hpbw_az_deg;
}

// Standard deviation of the Gaussian main-lobe power pattern such that the
// normalized gain exp(-t^2 / (2 sigma^2)) equals 1/2 at t = +-hpbw/2.
inline double sigma_from_hpbw(double hpbw_deg) {
    if (!(hpbw_deg > 0.0) || !(hpbw_deg < 360.0))
        throw OutOfRange("hpbw_deg must lie in (0, 360), got " + std::to_string(hpbw_deg));
    return deg2rad(hpbw_deg) / (2.0 * std::sqrt(2.0 * std::log(2.0)));
}

enum class PatternKind { omnidirectional, gaussian };

/// Normalized azimuth power pattern (peak gain 1). Only the main lobe is
/// modeled; the Gaussian has no side-lobe floor or back-lobe term. Angular
/// offsets are wrapped to (-pi, pi] before evaluation.
struct Pattern {
    PatternKind kind = PatternKind::omnidirectional;
    double sigma_rad = 0.0;    // gaussian only
    double boresight_rad = 0.0;

    static Pattern omni(double boresight_rad = 0.0) {
        return Pattern{PatternKind::omnidirectional, 0.0, boresight_rad};
    }
    static Pattern gaussian(double sigma_rad, double boresight_rad = 0.0) {
        if (!(sigma_rad > 0.0))
            throw OutOfRange("gaussian pattern needs sigma_rad > 0");
        return Pattern{PatternKind::gaussian, sigma_rad, boresight_rad};
    }
    /// Pattern for a catalog entry: gaussian main lobe when the entry carries
    /// an azimuth HPBW, omnidirectional otherwise.
    static Pattern from_spec(const AntennaSpec &spec, double boresight_rad = 0.0) {
        if (spec.hpbw_az_deg)
            return gaussian(sigma_from_hpbw(*spec.hpbw_az_deg), boresight_rad);
        return omni(boresight_rad);
    }
};

/// Normalized power gain in (0, 1] toward the absolute azimuth `angle_rad`.
inline double gain(const Pattern &p, double angle_rad) {
    if (p.kind == PatternKind::omnidirectional)
        return 1.0;
    const double off = wrap_rad(angle_rad - p.boresight_rad);
    return std::exp(-(off * off) / (2.0 * p.sigma_rad * p.sigma_rad));
}

/// The three antenna types that ship with the library. CR and PG carry the
/// published exponents and azimuth beam widths of the corner-reflector and
/// parabolic-grid fits. The half-wave dipole is the reference antenna of the
/// underlying model; its own fitted exponent is not published alongside the
/// CR/PG values, so the entry carries a free-space placeholder slope (see the
/// shipped catalog file).
inline std::vector<AntennaSpec> builtin_catalog() {
    return {
        AntennaSpec{"dipole", 2.0, std::nullopt, 2.15},
        AntennaSpec{"CR", 5.28, 58.0, std::nullopt},
        AntennaSpec{"PG", 7.08, 10.0, std::nullopt},
    };
}

inline const AntennaSpec &find_antenna(const std::vector<AntennaSpec> &catalog,
                                       const std::string &name) {
    for (const auto &a : catalog)
        if (a.name == name)
            return a;
    throw UnknownAntenna("antenna type not in catalog: " + name);
}

namespace detail {
inline std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline double parse_number(const std::string &field, const std::string &what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(field, &pos);
        if (pos != field.size() || !std::isfinite(v))
            throw ParseError("bad " + what + ": '" + field + "'");
        return v;
    } catch (const std::logic_error &) {
        throw ParseError("bad " + what + ": '" + field + "'");
    }
}

inline std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, ','))
        out.push_back(trim(cur));
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}
} // namespace detail

// Catalog file format: one record per line, `name,n,hpbw_deg,gain_dbi?`,
// `#` starts a comment, hpbw_deg may be empty for omnidirectional entries.
inline std::vector<AntennaSpec> parse_catalog(std::istream &in) {
    std::vector<AntennaSpec> out;
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
        const auto fields = detail::split_csv(line);
        if (fields.size() < 2 || fields.size() > 4)
            throw ParseError("catalog line " + std::to_string(lineno) +
                             ": expected name,n[,hpbw_deg[,gain_dbi]]");
        AntennaSpec spec;
        spec.name = fields[0];
        if (spec.name.empty())
            throw ParseError("catalog line " + std::to_string(lineno) + ": empty name");
        spec.path_loss_exponent = detail::parse_number(fields[1], "path loss exponent");
        if (!(spec.path_loss_exponent > 0.0))
            throw ParseError("catalog line " + std::to_string(lineno) +
                             ": path loss exponent must be > 0");
        if (fields.size() >= 3 && !fields[2].empty()) {
            const double hpbw = detail::parse_number(fields[2], "hpbw_deg");
            if (!(hpbw > 0.0 && hpbw < 360.0))
                throw ParseError("catalog line " + std::to_string(lineno) +
                                 ": hpbw_deg must lie in (0, 360)");
            spec.hpbw_az_deg = hpbw;
        }
        if (fields.size() == 4 && !fields[3].empty())
            spec.gain_dbi = detail::parse_number(fields[3], "gain_dbi");
        out.push_back(std::move(spec));
    }
    return out;
}

inline std::string serialize_catalog(const std::vector<AntennaSpec> &catalog) {
    std::string out = "# name,n,hpbw_deg,gain_dbi\n";
    char buf[128];
    for (const auto &a : catalog) {
        out += a.name;
        std::snprintf(buf, sizeof buf, ",%.17g", a.path_loss_exponent);
        out += buf;
        if (a.hpbw_az_deg) {
            std::snprintf(buf, sizeof buf, ",%.17g", *a.hpbw_az_deg);
            out += buf;
        } else if (a.gain_dbi) {
            out += ",";
        }
        if (a.gain_dbi) {
            std::snprintf(buf, sizeof buf, ",%.17g", *a.gain_dbi);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

} // namespace beamloss

#endif
