// SPDX-License-Identifier: Apache-2.0

#ifndef FMUX_SIMULATOR_HPP
#define FMUX_SIMULATOR_HPP

#include "fmux/indistinguishability.hpp"
#include "fmux/photon_statistics.hpp"
#include "fmux/pulse.hpp"
#include "fmux/streams.hpp"

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fmux {

// Physical parameters of the source, canonical units.
struct HardwareParams
{
    double dispersion = 8000.0;                        // G, ps^2
    double delta_omega = 2.0 * std::numbers::pi;       // full bandwidth, rad/ps
    double dt_d = 10.0;                                // detector jitter std, ps
    double tau = 10.0;                                 // carving window, ps
    double dt_e = 80.0;                                // excitation parameter, ps
    double omega_e = 2.0 * std::numbers::pi * 386.85; // 775 nm excitation
    double omega_p = 2.0 * std::numbers::pi * 193.41; // 1550 nm pump
    double eta_c = 1.0;                                // frequency-conversion efficiency

    void validate() const;
    PulseParams pulse() const { return {dt_e, tau, dispersion, omega_e, omega_p}; }
    JitterModel jitter() const { return {dt_d}; }
};

// Statistics-level view of a source: the signal-arm efficiency seen by the
// closed forms is eta_s * eta_c.
SourceParams effective_source(const SourceParams &source, const HardwareParams &hw);

struct CycleOutcome
{
    bool triggered = false;
    std::optional<long> herald_bin;
    std::optional<double> herald_time;      // t1, ps from t_ref (t_delay = 0)
    std::optional<double> pump_center_freq; // rad/ps
    long output_photons = 0;
    std::optional<GaussianEnvelope> output_envelope;
    long pairs = 0;           // pairs generated over all bins
    long detected_idlers = 0; // detections, including those lost to deadtime
};

struct Interval
{
    double lo = 0.0;
    double hi = 0.0;

    double half_width() const { return 0.5 * (hi - lo); }
};

// 95% Wilson score interval for a binomial proportion.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials);

struct SimStats
{
    std::uint64_t n_cycles = 0;
    std::uint64_t seed = 0;
    std::uint64_t n_triggered = 0;
    std::uint64_t n_single = 0;
    std::uint64_t n_multi = 0;
    std::uint64_t n_photons = 0;

    double p_trig_hat = 0.0;
    Interval p_trig_ci;
    double p1_hat = 0.0;
    Interval p1_ci;
    double multi_photon_rate = 0.0;
    Interval multi_photon_ci;
    double mean_output_photons = 0.0;

    // Offset of the converted photon's carrier from omega_e/2 + omega_p,
    // over triggered cycles.
    double carrier_offset_mean = 0.0;
    double carrier_offset_std = 0.0;
};

// Bin centres (k - (N-1)/2) * delta_omega / N, k = 0..N-1.
std::vector<double> bin_layout(double delta_omega, long n_bins);

// One clock cycle. `bins` must come from bin_layout with source.n_bins bins.
CycleOutcome simulate_cycle(const SourceParams &source, const HardwareParams &hw, std::span<const double> bins,
                            SplitMix64 &rng);

// Cycle `index` of a run seeded with `seed`, on its own substream.
CycleOutcome simulate_cycle(const SourceParams &source, const HardwareParams &hw, std::span<const double> bins,
                            std::uint64_t seed, std::uint64_t index);

SimStats run_campaign(const SourceParams &source, const HardwareParams &hw, std::uint64_t n_cycles,
                      std::uint64_t seed, unsigned shards = 1);

// Keys: n_cycles, seed, n_triggered, p_trig_hat, p_trig_ci, p1_hat, p1_ci,
// multi_photon_rate, multi_photon_ci, mean_output_photons.
std::string to_json(const SimStats &stats);

// Header "cycle,triggered,herald_bin,t1_ps,output_photons"; herald fields
// are empty for cycles that did not trigger.
void write_trace_csv(std::ostream &os, const SourceParams &source, const HardwareParams &hw,
                     std::uint64_t n_cycles, std::uint64_t seed);

} // namespace fmux

#endif // FMUX_SIMULATOR_HPP
