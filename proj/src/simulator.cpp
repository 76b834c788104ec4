// SPDX-License-Identifier: Apache-2.0

#include "fmux/simulator.hpp"

#include "fmux/error.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>
#include <ostream>
#include <random>

namespace fmux {
namespace {

constexpr double wilson_z = 1.959963984540054; // two-sided 95%

void require(bool ok, const std::string &msg)
{
    if (!ok)
        throw RangeError(msg);
}

} // namespace

void HardwareParams::validate() const
{
    require(dispersion > 0.0 && std::isfinite(dispersion), "G must be positive, got " + std::to_string(dispersion));
    require(delta_omega > 0.0 && std::isfinite(delta_omega),
            "delta_omega must be positive, got " + std::to_string(delta_omega));
    require(dt_d >= 0.0 && std::isfinite(dt_d), "dt_d must be >= 0, got " + std::to_string(dt_d));
    require(tau > 0.0 && std::isfinite(tau), "tau must be positive, got " + std::to_string(tau));
    require(dt_e > 0.0 && std::isfinite(dt_e), "dt_e must be positive, got " + std::to_string(dt_e));
    require(std::isfinite(omega_e) && std::isfinite(omega_p), "carrier frequencies must be finite");
    require(eta_c >= 0.0 && eta_c <= 1.0, "eta_c must lie in [0, 1], got " + std::to_string(eta_c));
}

SourceParams effective_source(const SourceParams &source, const HardwareParams &hw)
{
    SourceParams out = source;
    out.eta_s = source.eta_s * hw.eta_c;
    return out;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials)
{
    if (trials == 0)
        throw RangeError("Wilson interval needs at least one trial");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = wilson_z * wilson_z;
    const double denom = 1.0 + z2 / n;
    const double centre = (p + z2 / (2.0 * n)) / denom;
    const double half = wilson_z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    const double lo = successes == 0 ? 0.0 : std::max(0.0, centre - half);
    const double hi = successes == trials ? 1.0 : std::min(1.0, centre + half);
    return {lo, hi};
}

std::vector<double> bin_layout(double delta_omega, long n_bins)
{
    if (n_bins < 1)
        throw RangeError("n_bins must be >= 1");
    const double spacing = delta_omega / static_cast<double>(n_bins);
    const double mid = 0.5 * static_cast<double>(n_bins - 1);
    std::vector<double> out(static_cast<std::size_t>(n_bins));
    for (long k = 0; k < n_bins; ++k)
        out[static_cast<std::size_t>(k)] = (static_cast<double>(k) - mid) * spacing;
    return out;
}

CycleOutcome simulate_cycle(const SourceParams &source, const HardwareParams &hw, std::span<const double> bins,
                            SplitMix64 &rng)
{
    CycleOutcome out;
    if (source.lambda <= 0.0)
        return out;

    // Occupied bins are visited by skipping geometric gaps of empty bins;
    // the occupancy of each bin is then 1 + Geom(1 - lambda). Together this
    // is exactly n_k ~ (1 - lambda) lambda^n_k, independently per bin.
    std::geometric_distribution<long> gap(source.lambda);
    std::geometric_distribution<long> extra_pairs(1.0 - source.lambda);
    std::normal_distribution<double> jitter(0.0, hw.dt_d > 0.0 ? hw.dt_d : 1.0);

    const long n_bins = static_cast<long>(bins.size());
    double best_time = std::numeric_limits<double>::infinity();
    double best_jitter = 0.0;
    long best_bin = -1;
    long best_pairs = 0;

    for (long k = gap(rng); k < n_bins; k += 1 + gap(rng)) {
        const long n = 1 + extra_pairs(rng);
        out.pairs += n;
        const long detected = std::binomial_distribution<long>(n, source.eta_i)(rng);
        out.detected_idlers += detected;
        const double nominal = hw.dispersion * bins[static_cast<std::size_t>(k)];
        for (long j = 0; j < detected; ++j) {
            const double err = hw.dt_d > 0.0 ? jitter(rng) : 0.0;
            // Strict comparison keeps the lowest bin on exact ties.
            if (nominal + err < best_time) {
                best_time = nominal + err;
                best_jitter = err;
                best_bin = k;
                best_pairs = n;
            }
        }
    }
    if (best_bin < 0)
        return out;

    // One herald per cycle: later detections fall in the detector deadtime.
    out.triggered = true;
    out.herald_bin = best_bin;
    out.herald_time = best_time;
    out.pump_center_freq = hw.omega_p + best_time / hw.dispersion;
    out.output_photons = std::binomial_distribution<long>(best_pairs, source.eta_s * hw.eta_c)(rng);
    out.output_envelope = heralded_photon(best_time, hw.pulse()).with_carrier_shift(best_jitter / hw.dispersion);
    return out;
}

CycleOutcome simulate_cycle(const SourceParams &source, const HardwareParams &hw, std::span<const double> bins,
                            std::uint64_t seed, std::uint64_t index)
{
    SplitMix64 rng(stream_seed(seed, index));
    return simulate_cycle(source, hw, bins, rng);
}

SimStats run_campaign(const SourceParams &source, const HardwareParams &hw, std::uint64_t n_cycles,
                      std::uint64_t seed, unsigned shards)
{
    source.validate();
    hw.validate();
    if (n_cycles < 1)
        throw RangeError("n_cycles must be >= 1");
    if (shards < 1)
        throw RangeError("shards must be >= 1");

    const auto bins = bin_layout(hw.delta_omega, source.n_bins);
    const double reference_carrier = hw.omega_e / 2.0 + hw.omega_p;

    struct Partial
    {
        std::uint64_t triggered = 0;
        std::uint64_t single = 0;
        std::uint64_t multi = 0;
        std::uint64_t photons = 0;
        double offset = 0.0;
        double offset_sq = 0.0;
    };
    const auto blocks = map_blocks<Partial>(n_cycles, shards, [&](std::uint64_t begin, std::uint64_t end) {
        Partial p;
        for (std::uint64_t i = begin; i < end; ++i) {
            const auto c = simulate_cycle(source, hw, bins, seed, i);
            if (!c.triggered)
                continue;
            ++p.triggered;
            p.photons += static_cast<std::uint64_t>(c.output_photons);
            if (c.output_photons == 1)
                ++p.single;
            else if (c.output_photons >= 2)
                ++p.multi;
            const double d = c.output_envelope->carrier() - reference_carrier;
            p.offset += d;
            p.offset_sq += d * d;
        }
        return p;
    });

    Partial total;
    for (const auto &b : blocks) {
        total.triggered += b.triggered;
        total.single += b.single;
        total.multi += b.multi;
        total.photons += b.photons;
        total.offset += b.offset;
        total.offset_sq += b.offset_sq;
    }

    SimStats s;
    s.n_cycles = n_cycles;
    s.seed = seed;
    s.n_triggered = total.triggered;
    s.n_single = total.single;
    s.n_multi = total.multi;
    s.n_photons = total.photons;
    const double n = static_cast<double>(n_cycles);
    s.p_trig_hat = static_cast<double>(total.triggered) / n;
    s.p_trig_ci = wilson_interval(total.triggered, n_cycles);
    s.p1_hat = static_cast<double>(total.single) / n;
    s.p1_ci = wilson_interval(total.single, n_cycles);
    s.multi_photon_rate = static_cast<double>(total.multi) / n;
    s.multi_photon_ci = wilson_interval(total.multi, n_cycles);
    s.mean_output_photons = static_cast<double>(total.photons) / n;
    if (total.triggered > 0) {
        const double m = static_cast<double>(total.triggered);
        s.carrier_offset_mean = total.offset / m;
        s.carrier_offset_std = std::sqrt(std::max(0.0, total.offset_sq / m - s.carrier_offset_mean * s.carrier_offset_mean));
    }
    return s;
}

std::string to_json(const SimStats &s)
{
    const auto ci = [](const Interval &i) { return nlohmann::json::array({i.lo, i.hi}); };
    nlohmann::ordered_json j;
    j["n_cycles"] = s.n_cycles;
    j["seed"] = s.seed;
    j["n_triggered"] = s.n_triggered;
    j["p_trig_hat"] = s.p_trig_hat;
    j["p_trig_ci"] = ci(s.p_trig_ci);
    j["p1_hat"] = s.p1_hat;
    j["p1_ci"] = ci(s.p1_ci);
    j["multi_photon_rate"] = s.multi_photon_rate;
    j["multi_photon_ci"] = ci(s.multi_photon_ci);
    j["mean_output_photons"] = s.mean_output_photons;
    return j.dump(2) + "\n";
}

void write_trace_csv(std::ostream &os, const SourceParams &source, const HardwareParams &hw,
                     std::uint64_t n_cycles, std::uint64_t seed)
{
    source.validate();
    hw.validate();
    const auto bins = bin_layout(hw.delta_omega, source.n_bins);
    const auto old_precision = os.precision(17);
    os << "cycle,triggered,herald_bin,t1_ps,output_photons\n";
    for (std::uint64_t i = 0; i < n_cycles; ++i) {
        const auto c = simulate_cycle(source, hw, bins, seed, i);
        os << i << ',' << (c.triggered ? 1 : 0) << ',';
        if (c.triggered)
            os << *c.herald_bin << ',' << *c.herald_time;
        else
            os << ',';
        os << ',' << c.output_photons << '\n';
    }
    os.precision(old_precision);
}

} // namespace fmux
