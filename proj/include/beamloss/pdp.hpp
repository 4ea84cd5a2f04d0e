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

#ifndef BEAMLOSS_PDP_HPP
#define BEAMLOSS_PDP_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "beamloss/antenna.hpp" // detail::trim / split_csv / parse_number
#include "beamloss/detail/numeric.hpp"
#include "beamloss/errors.hpp"

namespace beamloss {

struct PdpTap {
    double excess_delay_s = 0.0;
    double power_lin = 0.0; // linear, unit total after normalization
};

/// Power delay profile: taps sorted by ascending excess delay, linear powers
/// normalized to unit sum. A first tap at zero excess delay is the local
/// scattering cluster around the receiver.
struct PowerDelayProfile {
    std::vector<PdpTap> taps;
    std::string source;            // label, e.g. file name or "TDL-B"
    std::optional<double> ds_ns;   // delay-spread scaling applied, if any
    std::optional<double> fc_hz;   // carrier frequency, informational
};

enum class DelayUnit { nanoseconds, normalized };

inline PowerDelayProfile normalize(PowerDelayProfile pdp) {
    if (pdp.taps.empty())
        throw EmptyProfile("power delay profile has no taps");
    detail::KahanSum total;
    for (const auto &t : pdp.taps)
        total.add(t.power_lin);
    const double sum = total.value();
    if (!(sum > 0.0))
        throw EmptyProfile("power delay profile has no positive power");
    for (auto &t : pdp.taps)
        t.power_lin /= sum;
    return pdp;
}

// PDP CSV: UTF-8, `#` comments, header `delay,power_db`, one tap per row.
// Delays are nanoseconds or normalized units per `unit`; normalized delays
// are scaled by the rms delay spread ds_ns. Powers are dB, converted to
// linear as 10^(dB/10) and normalized to unit sum.
inline PowerDelayProfile parse_pdp(std::istream &in, DelayUnit unit,
                                   std::optional<double> ds_ns = std::nullopt,
                                   std::string source = {}) {
    if (unit == DelayUnit::normalized && !ds_ns)
        throw MissingScale("normalized delays require a delay spread (ds_ns)");
    if (ds_ns && !(*ds_ns > 0.0))
        throw OutOfRange("ds_ns must be > 0");

    PowerDelayProfile pdp;
    pdp.source = std::move(source);
    if (unit == DelayUnit::normalized)
        pdp.ds_ns = ds_ns;

    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        if (!header_seen) {
            auto fields = detail::split_csv(line);
            if (fields.size() != 2 || fields[0] != "delay" || fields[1] != "power_db")
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected header 'delay,power_db'");
            header_seen = true;
            continue;
        }
        const auto fields = detail::split_csv(line);
        if (fields.size() != 2)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'delay,power_db'");
        const double delay = detail::parse_number(fields[0], "delay");
        const double power_db = detail::parse_number(fields[1], "power_db");
        if (delay < 0.0)
            throw ParseError("line " + std::to_string(lineno) + ": negative delay");
        PdpTap tap;
        tap.excess_delay_s = (unit == DelayUnit::nanoseconds) ? delay * 1e-9
                                                              : delay * *ds_ns * 1e-9;
        tap.power_lin = std::pow(10.0, power_db / 10.0);
        pdp.taps.push_back(tap);
    }
    if (pdp.taps.empty())
        throw EmptyProfile("power delay profile has no taps");
    std::stable_sort(pdp.taps.begin(), pdp.taps.end(),
                     [](const PdpTap &a, const PdpTap &b) {
                         return a.excess_delay_s < b.excess_delay_s;
                     });
    return normalize(std::move(pdp));
}

inline PowerDelayProfile parse_pdp(const std::string &text, DelayUnit unit,
                                   std::optional<double> ds_ns = std::nullopt,
                                   std::string source = {}) {
    std::istringstream is(text);
    return parse_pdp(is, unit, ds_ns, std::move(source));
}

/// Canonical text form: delays in nanoseconds, powers in dB of the normalized
/// linear taps, printed with enough digits that parse(serialize(p)) recovers
/// the taps exactly.
inline std::string serialize_pdp(const PowerDelayProfile &pdp) {
    std::string out = "delay,power_db\n";
    char buf[96];
    for (const auto &t : pdp.taps) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", t.excess_delay_s * 1e9,
                      10.0 * std::log10(t.power_lin));
        out += buf;
    }
    return out;
}

// 3GPP TR 38.901 Table 7.7.2-2 (TDL-B): 23 taps, normalized delays and
// powers in dB. Shipped in data/tdl_b.csv as well; keep the two in sync.
inline constexpr std::array<std::pair<double, double>, 23> tdl_b_table{{
    {0.0000, 0.0},   {0.1072, -2.2},  {0.2155, -4.0},  {0.2095, -3.2},
    {0.2870, -9.8},  {0.2986, -1.2},  {0.3752, -3.4},  {0.5055, -5.2},
    {0.3681, -7.6},  {0.3697, -3.0},  {0.5700, -8.9},  {0.5283, -9.0},
    {1.1021, -4.8},  {1.2756, -5.7},  {1.5474, -7.5},  {1.7842, -1.9},
    {2.0169, -7.6},  {2.8294, -12.2}, {3.0219, -9.8},  {3.6187, -11.4},
    {4.1067, -14.9}, {4.2790, -9.2},  {4.7834, -11.3},
}};

/// TDL-B profile with normalized delays scaled by ds_ns. The default 363 ns
/// is the UMa NLOS nominal delay spread used throughout the shipped presets.
inline PowerDelayProfile tdl_b(double ds_ns = 363.0, double fc_hz = 2.4e9) {
    if (!(ds_ns > 0.0))
        throw OutOfRange("ds_ns must be > 0");
    PowerDelayProfile pdp;
    pdp.source = "TDL-B";
    pdp.ds_ns = ds_ns;
    pdp.fc_hz = fc_hz;
    pdp.taps.reserve(tdl_b_table.size());
    for (const auto &[delay_norm, power_db] : tdl_b_table)
        pdp.taps.push_back(PdpTap{delay_norm * ds_ns * 1e-9,
                                  std::pow(10.0, power_db / 10.0)});
    std::stable_sort(pdp.taps.begin(), pdp.taps.end(),
                     [](const PdpTap &a, const PdpTap &b) {
                         return a.excess_delay_s < b.excess_delay_s;
                     });
    return normalize(std::move(pdp));
}

} // namespace beamloss

#endif
