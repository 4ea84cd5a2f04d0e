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
// Confocal scattering geometry. The transmitter sits at one focus (origin),
// the receiver at the other (d, 0). A tap with excess delay tau puts its
// single-bounce scatterers on the confocal ellipse with total path length
// 2a = d + c*tau. Angle conventions, fixed globally:
//
//   AOD theta_T : at the Tx, counterclockwise from the Tx->Rx direction.
//   AOA phi     : at the Rx, counterclockwise from the Rx->Tx direction.
//
// Under these conventions theta_T = 0 looks through the Rx at the far vertex
// (seen by the Rx from behind, phi = pi) and theta_T = pi looks at the near
// vertex behind the Tx (seen by the Rx toward the Tx, phi = 0).

#ifndef BEAMLOSS_GEOMETRY_HPP
#define BEAMLOSS_GEOMETRY_HPP

#include <cmath>
#include <string>
#include <vector>

#include "beamloss/angles.hpp"
#include "beamloss/errors.hpp"
#include "beamloss/pdp.hpp"

namespace beamloss {

/// One confocal scattering ellipse. Semi axes satisfy b = sqrt(a^2 - c_f^2)
/// and every focal chord satisfies r_T(theta) + r_R(theta) = 2a.
struct Ellipse {
    double semi_major_m = 0.0;  // a
    double semi_minor_m = 0.0;  // b
    double focal_half_m = 0.0;  // c_f = d/2
    double eccentricity = 0.0;  // e = c_f / a, in (0, 1)
    int tap_index = -1;         // index into the source profile's taps
};

/// Ellipses of all delayed taps, ordered by increasing semi-major axis; all
/// share focal_half_m = link_distance_m / 2.
struct EllipseSet {
    std::vector<Ellipse> ellipses;
    double link_distance_m = 0.0;
};

// Taps with excess delay below this threshold merge into the local
// scattering cluster: as tau -> 0 the ellipse collapses onto the Tx-Rx
// segment (e -> 1) and the angular mapping loses numerical meaning.
inline constexpr double min_excess_delay_s = 0.1e-9;

inline Ellipse make_ellipse(double link_distance_m, double excess_delay_s, int tap_index) {
    if (!(link_distance_m > 0.0) || !std::isfinite(link_distance_m))
        throw InvalidDistance("link distance must be positive, got " +
                              std::to_string(link_distance_m));
    const double c_f = 0.5 * link_distance_m;
    const double a = 0.5 * (link_distance_m + speed_of_light_m_s * excess_delay_s);
    if (!(a > c_f))
        throw DegenerateEllipse("excess delay " + std::to_string(excess_delay_s * 1e9) +
                                " ns gives a degenerate ellipse");
    Ellipse el;
    el.semi_major_m = a;
    el.focal_half_m = c_f;
    el.semi_minor_m = std::sqrt((a - c_f) * (a + c_f));
    el.eccentricity = c_f / a;
    el.tap_index = tap_index;
    return el;
}

/// Builds one ellipse per tap whose excess delay exceeds min_excess_delay_s.
/// The zero-delay tap (and any tap below the threshold) is the local cluster
/// and produces no ellipse.
inline EllipseSet build_ellipses(const PowerDelayProfile &pdp, double link_distance_m) {
    if (!(link_distance_m > 0.0) || !std::isfinite(link_distance_m))
        throw InvalidDistance("link distance must be positive, got " +
                              std::to_string(link_distance_m));
    if (pdp.taps.empty())
        throw EmptyProfile("power delay profile has no taps");
    EllipseSet set;
    set.link_distance_m = link_distance_m;
    for (std::size_t i = 0; i < pdp.taps.size(); ++i) {
        const double tau = pdp.taps[i].excess_delay_s;
        if (tau < min_excess_delay_s)
            continue;
        set.ellipses.push_back(make_ellipse(link_distance_m, tau, static_cast<int>(i)));
    }
    if (set.ellipses.empty())
        throw NoDelayedTaps("every tap lies below the excess-delay threshold");
    return set;
}

/// Distance from the Tx focus to the ellipse along the AOD theta_T:
/// r_T = a (1 - e^2) / (1 - e cos theta_T). Always positive.
inline double focal_radius_tx(const Ellipse &el, double theta_t) {
    const double e = el.eccentricity;
    return el.semi_major_m * (1.0 - e * e) / (1.0 - e * std::cos(theta_t));
}

/// AOA of the single bounce departing at theta_T: the scatterer sits at
/// S = (r_T cos theta_T, r_T sin theta_T) with the Rx at (d, 0); the result
/// is the angle of Rx->S measured from the Rx->Tx direction, in (-pi, pi].
/// Continuous and strictly monotone in theta_T around the circle.
inline double aod_to_aoa(const Ellipse &el, double theta_t) {
    const double r_t = focal_radius_tx(el, theta_t);
    const double d = 2.0 * el.focal_half_m;
    const double sx = r_t * std::cos(theta_t) - d;
    const double sy = r_t * std::sin(theta_t);
    return wrap_rad(std::atan2(sy, sx) - pi);
}

/// |d phi / d theta_T| = r_T / r_R, by the equal-angles reflection property
/// of the ellipse. Strictly positive.
inline double aoa_jacobian(const Ellipse &el, double theta_t) {
    const double r_t = focal_radius_tx(el, theta_t);
    const double r_r = 2.0 * el.semi_major_m - r_t;
    return r_t / r_r;
}

} // namespace beamloss

#endif
