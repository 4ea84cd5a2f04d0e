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
// Monte-Carlo estimator of the correction factor, independent of the
// deterministic quadrature pipeline: angles are sampled, mapped through the
// ellipse geometry and weighted by the Rx pattern. Numerator and denominator
// share one random stream (common random numbers), so the ratio variance
// collapses near the reference orientation and K(180, 0) is exactly 1.

#ifndef BEAMLOSS_ORACLE_HPP
#define BEAMLOSS_ORACLE_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "beamloss/angles.hpp"
#include "beamloss/antenna.hpp"
#include "beamloss/detail/numeric.hpp"
#include "beamloss/errors.hpp"
#include "beamloss/geometry.hpp"
#include "beamloss/pas.hpp"
#include "beamloss/pdp.hpp"

namespace beamloss {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent stream per (seed, cluster, block).
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t cluster,
                                 std::uint64_t block) {
    return splitmix64(splitmix64(seed ^ splitmix64(cluster + 1)) ^ (block + 1));
}

// Best-Fisher rejection sampler for the von Mises distribution with mean 0.
class VonMisesSampler {
  public:
    explicit VonMisesSampler(double kappa) : kappa_(kappa) {
        if (kappa_ > 0.0) {
            const double a = 1.0 + std::sqrt(1.0 + 4.0 * kappa_ * kappa_);
            const double b = (a - std::sqrt(2.0 * a)) / (2.0 * kappa_);
            r_ = (1.0 + b * b) / (2.0 * b);
        }
    }

    template <class Rng> double operator()(Rng &rng) const {
        if (kappa_ == 0.0)
            return uniform_angle(rng);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        for (;;) {
            const double z = std::cos(pi * u01(rng));
            const double f = (1.0 + r_ * z) / (r_ + z);
            const double c = kappa_ * (r_ - f);
            const double u2 = u01(rng);
            if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0) {
                const double angle = std::acos(f);
                return (u01(rng) < 0.5) ? -angle : angle;
            }
        }
    }

    template <class Rng> static double uniform_angle(Rng &rng) {
        std::uniform_real_distribution<double> u(-pi, pi);
        return u(rng);
    }

  private:
    double kappa_ = 0.0;
    double r_ = 0.0;
};

// Gaussian main-lobe AOD offset, rejected against the (-pi, pi] truncation
// window. The accepted offset is added to the lobe direction and wrapped.
template <class Rng> double truncated_gaussian_offset(Rng &rng, double sigma_rad) {
    std::normal_distribution<double> normal(0.0, sigma_rad);
    double x = normal(rng);
    while (std::abs(x) > pi)
        x = normal(rng);
    return x;
}

struct BlockSums {
    double w_num = 0.0, w_den = 0.0;
    double w_num_sq = 0.0, w_den_sq = 0.0, w_cross = 0.0;
};

} // namespace detail

struct OracleConfig {
    long long samples = 0; // per cluster
    std::uint64_t seed = 0;
    Scenario scenario;
    PowerDelayProfile pdp;
    int threads = 0; // 0 = hardware concurrency
};

struct McEstimate {
    double k = 1.0;         // raw ratio estimate (not floored)
    double std_error = 0.0; // delta-method standard error of k
};

inline McEstimate mc_correction_factor(const OracleConfig &cfg) {
    if (cfg.samples < 10000)
        throw OutOfRange("oracle needs at least 1e4 samples");
    validate_scenario(cfg.scenario);

    const Scenario &s = cfg.scenario;
    const PowerDelayProfile pdp = normalize(cfg.pdp);
    const EllipseSet ellipses = build_ellipses(pdp, s.distance_m);

    const double alpha = deg2rad(wrap_deg(s.alpha_deg));
    const double beta = deg2rad(wrap_deg(s.beta_deg));

    const Pattern rx_rot = Pattern::from_spec(s.rx_antenna, beta);
    const Pattern rx_ref = Pattern::from_spec(s.rx_antenna, 0.0);
    const Pattern tx_probe = Pattern::from_spec(s.tx_antenna, 0.0);
    const bool tx_gaussian = tx_probe.kind == PatternKind::gaussian;
    const double sigma_t = tx_probe.sigma_rad;

    const double lobe_rot = wrap_rad(alpha);      // delayed-cluster departure lobe
    const double lobe_ref = pi;                   // its aligned-orientation value
    const double g_t0_rot = gain(Pattern::from_spec(s.tx_antenna, wrap_rad(alpha - pi)), 0.0);
    const double g_t0_ref = 1.0;

    double p_local = 0.0;
    for (const auto &tap : pdp.taps)
        if (tap.excess_delay_s < min_excess_delay_s)
            p_local += tap.power_lin;

    // cluster 0 is the local von Mises cluster, clusters 1.. the ellipses
    const std::size_t n_clusters = 1 + ellipses.ellipses.size();
    constexpr long long block_len = 1 << 14;
    const long long n_blocks = (cfg.samples + block_len - 1) / block_len;

    std::vector<detail::BlockSums> sums(n_clusters * static_cast<std::size_t>(n_blocks));
    const detail::VonMisesSampler von_mises(s.kappa);

    auto run_block = [&](std::size_t cluster, long long block) {
        const long long begin = block * block_len;
        const long long end = std::min(cfg.samples, begin + block_len);
        std::mt19937_64 rng(detail::stream_seed(cfg.seed, cluster, static_cast<std::uint64_t>(block)));
        detail::KahanSum w_num, w_den, w_num_sq, w_den_sq, w_cross;
        if (cluster == 0) {
            for (long long i = begin; i < end; ++i) {
                const double phi = von_mises(rng);
                const double wn = gain(rx_rot, phi);
                const double wd = gain(rx_ref, phi);
                w_num.add(wn);
                w_den.add(wd);
                w_num_sq.add(wn * wn);
                w_den_sq.add(wd * wd);
                w_cross.add(wn * wd);
            }
        } else {
            const Ellipse &el = ellipses.ellipses[cluster - 1];
            for (long long i = begin; i < end; ++i) {
                double th_rot, th_ref;
                if (tx_gaussian) {
                    const double off = detail::truncated_gaussian_offset(rng, sigma_t);
                    th_rot = wrap_rad(lobe_rot + off);
                    th_ref = wrap_rad(lobe_ref + off);
                } else {
                    th_rot = th_ref = detail::VonMisesSampler::uniform_angle(rng);
                }
                const double wn = gain(rx_rot, aod_to_aoa(el, th_rot));
                const double wd = gain(rx_ref, aod_to_aoa(el, th_ref));
                w_num.add(wn);
                w_den.add(wd);
                w_num_sq.add(wn * wn);
                w_den_sq.add(wd * wd);
                w_cross.add(wn * wd);
            }
        }
        auto &out = sums[cluster * static_cast<std::size_t>(n_blocks) +
                         static_cast<std::size_t>(block)];
        out.w_num = w_num.value();
        out.w_den = w_den.value();
        out.w_num_sq = w_num_sq.value();
        out.w_den_sq = w_den_sq.value();
        out.w_cross = w_cross.value();
    };

    const std::size_t total_jobs = n_clusters * static_cast<std::size_t>(n_blocks);
    unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                         : std::thread::hardware_concurrency();
    n_threads = std::max(1u, std::min<unsigned>(n_threads, 64));
    if (n_threads <= 1 || total_jobs < 2) {
        for (std::size_t job = 0; job < total_jobs; ++job)
            run_block(job / static_cast<std::size_t>(n_blocks),
                      static_cast<long long>(job % static_cast<std::size_t>(n_blocks)));
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t job = next.fetch_add(1);
                    if (job >= total_jobs)
                        return;
                    run_block(job / static_cast<std::size_t>(n_blocks),
                              static_cast<long long>(job % static_cast<std::size_t>(n_blocks)));
                }
            });
        for (auto &th : pool)
            th.join();
    }

    // merge in block order (deterministic for a given seed and sample count)
    const double n = static_cast<double>(cfg.samples);
    detail::KahanSum p_rot_acc, p_ref_acc;
    double var_p_rot = 0.0, var_p_ref = 0.0, cov_p = 0.0;
    for (std::size_t c = 0; c < n_clusters; ++c) {
        detail::KahanSum sn, sd, snn, sdd, snd;
        for (long long b = 0; b < n_blocks; ++b) {
            const auto &bs = sums[c * static_cast<std::size_t>(n_blocks) +
                                  static_cast<std::size_t>(b)];
            sn.add(bs.w_num);
            sd.add(bs.w_den);
            snn.add(bs.w_num_sq);
            sdd.add(bs.w_den_sq);
            snd.add(bs.w_cross);
        }
        const double mean_n = sn.value() / n;
        const double mean_d = sd.value() / n;
        double coeff_n, coeff_d;
        if (c == 0) {
            coeff_n = p_local * g_t0_rot * (1.0 - s.los_fraction);
            coeff_d = p_local * g_t0_ref * (1.0 - s.los_fraction);
        } else {
            const auto &el = ellipses.ellipses[c - 1];
            const double p_i = pdp.taps.at(static_cast<std::size_t>(el.tap_index)).power_lin;
            coeff_n = coeff_d = p_i;
        }
        p_rot_acc.add(coeff_n * mean_n);
        p_ref_acc.add(coeff_d * mean_d);
        const double var_n = std::max(0.0, snn.value() / n - mean_n * mean_n);
        const double var_d = std::max(0.0, sdd.value() / n - mean_d * mean_d);
        const double cov = snd.value() / n - mean_n * mean_d;
        var_p_rot += coeff_n * coeff_n * var_n / n;
        var_p_ref += coeff_d * coeff_d * var_d / n;
        cov_p += coeff_n * coeff_d * cov / n;
    }

    // direct-ray term, deterministic
    if (s.los_fraction > 0.0 && p_local > 0.0) {
        p_rot_acc.add(p_local * s.los_fraction * g_t0_rot * gain(rx_rot, 0.0));
        p_ref_acc.add(p_local * s.los_fraction * g_t0_ref * gain(rx_ref, 0.0));
    }

    const double p_rot = p_rot_acc.value();
    const double p_ref = p_ref_acc.value();

    McEstimate est;
    est.k = p_rot / p_ref;
    // delta method for the ratio of two correlated sums
    const double var_k = var_p_rot / (p_ref * p_ref) +
                         (p_rot * p_rot) * var_p_ref / (p_ref * p_ref * p_ref * p_ref) -
                         2.0 * p_rot * cov_p / (p_ref * p_ref * p_ref);
    est.std_error = std::sqrt(std::max(0.0, var_k));
    return est;
}

} // namespace beamloss

#endif
