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

#ifndef BEAMLOSS_ANGLES_HPP
#define BEAMLOSS_ANGLES_HPP

#include <cmath>
#include <numbers>

namespace beamloss {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double speed_of_light_m_s = 299792458.0;

constexpr double deg2rad(double deg) { return deg * (pi / 180.0); }
constexpr double rad2deg(double rad) { return rad * (180.0 / pi); }

// Wrap an angle in radians to (-pi, pi]. Antisymmetric: wrap_rad(-x) and
// -wrap_rad(x) denote the same circle point (the -pi result is mapped to +pi).
inline double wrap_rad(double x) {
    double r = std::remainder(x, two_pi);
    return (r <= -pi) ? pi : r;
}

// Wrap an angle in degrees to (-180, 180].
inline double wrap_deg(double x) {
    double r = std::remainder(x, 360.0);
    return (r <= -180.0) ? 180.0 : r;
}

} // namespace beamloss

#endif
