// SPDX-License-Identifier: Apache-2.0

#include "fmux/indistinguishability.hpp"

#include "fmux/error.hpp"
#include "fmux/streams.hpp"

#include <cmath>
#include <random>
#include <string>

namespace fmux {

void JitterModel::validate() const
{
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw RangeError("jitter sigma must be finite and >= 0, got " + std::to_string(sigma));
}

double visibility_analytic(double dt_d, double dt_h, double dispersion)
{
    if (!(dt_d >= 0.0) || !std::isfinite(dt_d))
        throw RangeError("dt_d must be finite and >= 0");
    if (!(dt_h > 0.0))
        throw RangeError("dt_h must be positive");
    if (dispersion == 0.0 || !std::isfinite(dispersion))
        throw RangeError("G must be finite and non-zero");
    const double x = dt_d * dt_h / dispersion;
    return 1.0 / std::sqrt(1.0 + 2.0 * x * x);
}

VisibilityEstimate visibility_mc(const PulseParams &pulse, const JitterModel &jitter, std::uint64_t n_samples,
                                 std::uint64_t seed, unsigned shards)
{
    pulse.validate();
    jitter.validate();
    if (n_samples < 1000)
        throw RangeError("visibility_mc needs at least 1000 samples");
    if (jitter.sigma == 0.0)
        return {1.0, 0.0};

    const GaussianEnvelope base = heralded_photon(0.0, pulse);
    const double to_carrier = 1.0 / pulse.dispersion;

    struct Sums
    {
        double x = 0.0;
        double xx = 0.0;
    };
    const auto blocks = map_blocks<Sums>(n_samples, shards, [&](std::uint64_t begin, std::uint64_t end) {
        Sums s;
        for (std::uint64_t i = begin; i < end; ++i) {
            SplitMix64 rng(stream_seed(seed, i));
            std::normal_distribution<double> jitter_draw(0.0, jitter.sigma);
            const double td1 = jitter_draw(rng);
            const double td2 = jitter_draw(rng);
            const double x = std::norm(overlap(base.with_carrier_shift(td1 * to_carrier),
                                               base.with_carrier_shift(td2 * to_carrier)));
            s.x += x;
            s.xx += x * x;
        }
        return s;
    });

    Sums total;
    for (const auto &b : blocks) {
        total.x += b.x;
        total.xx += b.xx;
    }
    const double n = static_cast<double>(n_samples);
    const double mean = total.x / n;
    const double var = std::max(0.0, (total.xx - n * mean * mean) / (n - 1.0));
    return {mean, std::sqrt(var / n)};
}

} // namespace fmux
