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
// Azimuth power angular spectrum of a link and the orientation correction
// factor K(alpha, beta) = P(alpha, beta) / P(180 deg, 0 deg).
//
// Orientation parameters, both measured counterclockwise from the Rx->Tx
// direction: alpha is the Tx boresight, beta the Rx boresight. The aligned
// orientation (antennas facing each other) is alpha = 180 deg, beta = 0 deg.

#ifndef BEAMLOSS_PAS_HPP
#define BEAMLOSS_PAS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "beamloss/angles.hpp"
#include "beamloss/antenna.hpp"
#include "beamloss/detail/numeric.hpp"
#include "beamloss/errors.hpp"
#include "beamloss/geometry.hpp"
#include "beamloss/pdp.hpp"

namespace beamloss {

/// Uniform azimuth grid of `points` nodes from -180 to +180 deg inclusive;
/// the two endpoints are the same circle point. `points` must be odd so that
/// 0 deg falls on a node, keeping symmetric densities exactly symmetric.
struct AzimuthGrid {
    explicit AzimuthGrid(int points_) : points(points_) {
        if (points < 5 || points % 2 == 0)
            throw OutOfRange("grid points must be odd and at least 5, got " +
                             std::to_string(points));
        step_deg = 360.0 / (points - 1);
        step_rad = deg2rad(step_deg);
        deg.resize(points);
        rad.resize(points);
        const int mid = (points - 1) / 2;
        for (int i = 0; i < points; ++i) {
            deg[i] = (i - mid) * step_deg;
            rad[i] = deg2rad(deg[i]);
        }
    }
    int points;
    double step_deg = 0.0;
    double step_rad = 0.0;
    std::vector<double> deg;
    std::vector<double> rad;
};

/// Link configuration. kappa is the von Mises concentration of the local
/// scattering cluster around the Rx; los_fraction, normally 0 for NLOS
/// profiles, routes that fraction of the first cluster into a discrete
/// direct-ray term at phi = 0.
struct Scenario {
    double distance_m = 0.0;
    double alpha_deg = 180.0;
    double beta_deg = 0.0;
    AntennaSpec tx_antenna;
    AntennaSpec rx_antenna;
    double kappa = 10.0;
    int grid_points = 3601;
    double los_fraction = 0.0;
};

inline void validate_scenario(const Scenario &s) {
    if (!(s.distance_m > 0.0) || !std::isfinite(s.distance_m))
        throw InvalidDistance("scenario distance must be positive, got " +
                              std::to_string(s.distance_m));
    if (!(s.kappa >= 0.0) || !std::isfinite(s.kappa))
        throw OutOfRange("kappa must be >= 0");
    if (s.grid_points < 361 || s.grid_points % 2 == 0)
        throw OutOfRange("grid_points must be odd and at least 361, got " +
                         std::to_string(s.grid_points));
    if (!(s.los_fraction >= 0.0 && s.los_fraction <= 1.0))
        throw OutOfRange("los_fraction must lie in [0, 1]");
}

/// Power angular spectrum on a uniform AOA grid over (-180, 180] deg, as a
/// density per radian, plus optional discrete (Dirac) terms carrying their
/// already-weighted power.
struct AngularSpectrum {
    std::vector<double> grid_deg;
    std::vector<double> density;
    std::vector<std::pair<double, double>> discrete_terms; // (angle_deg, power)
};

/// von Mises density of the local scattering cluster, mean direction
/// phi = 0 (toward the Tx): f(phi) = exp(kappa cos phi) / (2 pi I0(kappa)).
/// Evaluated in scaled form so large kappa does not overflow.
inline std::vector<double> local_cluster_density(double kappa, const AzimuthGrid &grid) {
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw OutOfRange("kappa must be >= 0");
    const double norm = 1.0 / (two_pi * detail::bessel_i0_scaled(kappa));
    std::vector<double> f(grid.rad.size());
    for (std::size_t i = 0; i < grid.rad.size(); ++i)
        f[i] = norm * std::exp(kappa * (std::cos(grid.rad[i]) - 1.0));
    return f;
}

/// AOA density of one delayed cluster. The AOD density is the normalized Tx
/// pattern (boresight already set on `tx_pattern`), sampled on the AOD grid,
/// pushed through the ellipse map with the exact Jacobian, linearly
/// interpolated onto the AOA grid, and renormalized to unit mass.
inline std::vector<double> delayed_cluster_density(const Ellipse &el,
                                                   const Pattern &tx_pattern,
                                                   const AzimuthGrid &grid) {
    if (!(el.eccentricity > 0.0 && el.eccentricity < 1.0) ||
        !(el.semi_major_m > el.focal_half_m) || !(el.focal_half_m > 0.0))
        throw DegenerateEllipse("ellipse parameters out of range");

    const std::size_t n = grid.rad.size();

    // normalized AOD density on the grid
    std::vector<double> f_aod(n);
    for (std::size_t i = 0; i < n; ++i)
        f_aod[i] = gain(tx_pattern, grid.rad[i]);
    const double aod_mass = detail::trapezoid_periodic(f_aod, grid.step_rad);
    for (auto &v : f_aod)
        v /= aod_mass;

    // forward transform: (phi_i, f_aod_i / |dphi/dtheta|), endpoint dropped
    const std::size_t m = n - 1;
    std::vector<double> phi(m), val(m);
    const double a = el.semi_major_m, e = el.eccentricity;
    const double latus = a * (1.0 - e * e);
    const double d = 2.0 * el.focal_half_m;
    for (std::size_t i = 0; i < m; ++i) {
        const double th = grid.rad[i];
        const double r_t = latus / (1.0 - e * std::cos(th));
        const double r_r = 2.0 * a - r_t;
        phi[i] = wrap_rad(std::atan2(r_t * std::sin(th), r_t * std::cos(th) - d) - pi);
        val[i] = f_aod[i] * r_r / r_t;
    }

    // phi ascends with theta around the circle with exactly one wrap; rotate
    // the samples so they ascend as a plain sequence
    std::size_t cut = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (phi[i + 1] < phi[i]) {
            cut = i + 1;
            break;
        }
    }
    std::vector<double> sp(m + 2), sv(m + 2);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = (cut + i) % m;
        sp[i + 1] = phi[j];
        sv[i + 1] = val[j];
    }
    sp[0] = sp[m] - two_pi; // periodic guards
    sv[0] = sv[m];
    sp[m + 1] = sp[1] + two_pi;
    sv[m + 1] = sv[1];

    // linear interpolation onto the AOA grid (merge scan: both ascending)
    std::vector<double> out(n);
    std::size_t seg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = grid.rad[i];
        while (seg + 2 < sp.size() && sp[seg + 1] < x)
            ++seg;
        const double x0 = sp[seg], x1 = sp[seg + 1];
        const double t = (x1 > x0) ? (x - x0) / (x1 - x0) : 0.0;
        out[i] = sv[seg] + t * (sv[seg + 1] - sv[seg]);
    }
    out.back() = out.front(); // same circle point

    const double mass = detail::trapezoid_periodic(out, grid.step_rad);
    for (auto &v : out)
        v /= mass;
    return out;
}

/// Assembles the PAS of a scenario:
///
///   PAS(phi) = [ p_loc g_T(D0) f_vM(phi) + sum_i p_i f_i(phi) ] g_R(phi - beta)
///
/// where D0 = alpha - 180 deg is the Tx boresight offset from the Tx->Rx
/// axis, f_vM the local-cluster density, and f_i the delayed-cluster AOA
/// densities. Delayed clusters keep their tap power: the AOD density is a
/// normalized PDF, so rotating the Tx redistributes that power over arrival
/// angles rather than destroying it. Only the first cluster is power-scaled
/// by the Tx gain.
///
/// The delayed-cluster departure lobe is anchored at wrap(alpha), the
/// supplement of the boresight offset D0. Under the confocal map a lobe at
/// theta_T = 180 deg returns the bounce power to the Rx from the Tx side
/// (phi = 0), so the aligned orientation maximizes the received power and
/// the correction factor peaks at K(180 deg, 0 deg) = 1.
inline AngularSpectrum compose_pas(const Scenario &s, const PowerDelayProfile &pdp,
                                   const EllipseSet &ellipses) {
    validate_scenario(s);
    if (pdp.taps.empty())
        throw EmptyProfile("power delay profile has no taps");

    const AzimuthGrid grid(s.grid_points);
    const double alpha = deg2rad(wrap_deg(s.alpha_deg));
    const double beta = deg2rad(wrap_deg(s.beta_deg));

    const Pattern tx_axis = Pattern::from_spec(s.tx_antenna, wrap_rad(alpha - pi));
    const Pattern tx_lobe = Pattern::from_spec(s.tx_antenna, wrap_rad(alpha));
    const Pattern rx = Pattern::from_spec(s.rx_antenna, beta);

    const double g_t0 = gain(tx_axis, 0.0); // Tx gain toward the Rx

    double p_local = 0.0;
    for (const auto &tap : pdp.taps)
        if (tap.excess_delay_s < min_excess_delay_s)
            p_local += tap.power_lin;

    AngularSpectrum spec;
    spec.grid_deg = grid.deg;
    spec.density.assign(grid.rad.size(), 0.0);

    const double local_weight = p_local * g_t0 * (1.0 - s.los_fraction);
    if (local_weight > 0.0) {
        const auto f_vm = local_cluster_density(s.kappa, grid);
        for (std::size_t i = 0; i < spec.density.size(); ++i)
            spec.density[i] += local_weight * f_vm[i];
    }

    for (const auto &el : ellipses.ellipses) {
        const double p_i = pdp.taps.at(static_cast<std::size_t>(el.tap_index)).power_lin;
        const auto f_i = delayed_cluster_density(el, tx_lobe, grid);
        for (std::size_t i = 0; i < spec.density.size(); ++i)
            spec.density[i] += p_i * f_i[i];
    }

    for (std::size_t i = 0; i < spec.density.size(); ++i)
        spec.density[i] *= gain(rx, grid.rad[i]);

    if (s.los_fraction > 0.0 && p_local > 0.0)
        spec.discrete_terms.emplace_back(0.0,
                                         p_local * s.los_fraction * g_t0 * gain(rx, 0.0));
    return spec;
}

/// Total received power: periodic trapezoidal quadrature of the density plus
/// the discrete terms.
inline double total_power(const AngularSpectrum &spec) {
    double h = 0.0;
    if (spec.grid_deg.size() >= 2)
        h = deg2rad(spec.grid_deg[1] - spec.grid_deg[0]);
    detail::KahanSum acc;
    acc.add(detail::trapezoid_periodic(spec.density, h));
    for (const auto &[angle, power] : spec.discrete_terms)
        acc.add(power);
    return acc.value();
}

// Floor applied to K so the dB composition stays finite when both beams
// point away from every arrival.
inline constexpr double k_floor = 1e-12;

struct CorrectionFactor {
    double k_linear = 1.0;    // floored at k_floor
    double k_unfloored = 1.0; // raw power ratio
    bool floored = false;
};

/// K(alpha, beta) = P(alpha, beta) / P(180 deg, 0 deg), both powers computed
/// with identical grids, antennas and profile. The input profile is
/// normalized internally, making K invariant to uniform power scaling.
inline CorrectionFactor correction_factor(const Scenario &s, const PowerDelayProfile &pdp) {
    validate_scenario(s);
    const PowerDelayProfile pdpn = normalize(pdp);
    const EllipseSet ellipses = build_ellipses(pdpn, s.distance_m);

    const double p = total_power(compose_pas(s, pdpn, ellipses));

    Scenario ref = s;
    ref.alpha_deg = 180.0;
    ref.beta_deg = 0.0;
    const double p0 = total_power(compose_pas(ref, pdpn, ellipses));

    CorrectionFactor out;
    out.k_unfloored = p / p0;
    out.floored = !(out.k_unfloored >= k_floor);
    out.k_linear = out.floored ? k_floor : out.k_unfloored;
    return out;
}

} // namespace beamloss

#endif
