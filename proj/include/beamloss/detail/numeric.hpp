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

#ifndef BEAMLOSS_DETAIL_NUMERIC_HPP
#define BEAMLOSS_DETAIL_NUMERIC_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace beamloss::detail {

// Neumaier compensated accumulator. Order-stable merges keep parallel
// reductions reproducible to well below the tolerances used in this library.
class KahanSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    void merge(const KahanSum &other) {
        add(other.sum_);
        add(other.comp_);
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Trapezoidal rule over one full period. The node set must span the period
// endpoint-inclusive (first and last node are the same circle point), with
// uniform spacing h. Endpoint values are averaged, so a periodic sampling
// integrates exactly like the midpoint-free classic trapezoid.
inline double trapezoid_periodic(std::span<const double> values, double h) {
    if (values.size() < 2)
        return 0.0;
    KahanSum acc;
    acc.add(0.5 * values.front());
    for (std::size_t i = 1; i + 1 < values.size(); ++i)
        acc.add(values[i]);
    acc.add(0.5 * values.back());
    return acc.value() * h;
}

// Scaled modified Bessel function exp(-x) * I0(x), stable for large x.
inline double bessel_i0_scaled(double x) {
    if (x < 50.0) {
        // power series for I0, then scale
        const double q = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 64; ++k) {
            term *= q / (static_cast<double>(k) * k);
            sum += term;
            if (term < sum * 1e-18)
                break;
        }
        return std::exp(-x) * sum;
    }
    // asymptotic expansion
    const double r = 1.0 / (8.0 * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 12; ++k) {
        term *= r * static_cast<double>(2 * k - 1) * (2 * k - 1) / k;
        sum += term;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

} // namespace beamloss::detail

#endif
