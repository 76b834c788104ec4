// SPDX-License-Identifier: Apache-2.0

#ifndef FMUX_INDISTINGUISHABILITY_HPP
#define FMUX_INDISTINGUISHABILITY_HPP

#include "fmux/pulse.hpp"

#include <cstdint>

namespace fmux {

// Gaussian detector timing jitter; sigma is the standard deviation in ps.
struct JitterModel
{
    double sigma = 10.0;

    void validate() const;
};

// HOM visibility Tr(rho^2) = (1 + 2 dt_d^2 dt_h^2 / G^2)^(-1/2) of the
// converted photon, where dt_h is its amplitude width.
double visibility_analytic(double dt_d, double dt_h, double dispersion);

struct VisibilityEstimate
{
    double estimate;
    double std_error;
};

// Unbiased Monte-Carlo estimate of Tr(rho^2): mean of |<psi(t_d)|psi(t_d')>|^2
// over independent jitter pairs, each psi carrying the carrier offset t_d/G.
// Bit-identical for a given (seed, n_samples) regardless of `shards`.
VisibilityEstimate visibility_mc(const PulseParams &pulse, const JitterModel &jitter, std::uint64_t n_samples,
                                 std::uint64_t seed, unsigned shards = 1);

} // namespace fmux

#endif // FMUX_INDISTINGUISHABILITY_HPP
