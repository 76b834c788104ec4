// SPDX-License-Identifier: Apache-2.0

#include "fmux/error.hpp"
#include "fmux/photon_statistics.hpp"
#include "fmux/simulator.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

using namespace fmux;

namespace {

SourceParams reference_source() { return {0.031, 0.3, 0.85, 500}; }

} // namespace

TEST_CASE("bin_layout")
{
    const double two_pi = 2.0 * std::numbers::pi;
    CHECK(bin_layout(two_pi, 1) == std::vector<double>{0.0});

    const auto four = bin_layout(two_pi, 4);
    REQUIRE(four.size() == 4);
    CHECK(four[0] == doctest::Approx(-2.356194490).epsilon(1e-9));
    CHECK(four[1] == doctest::Approx(-0.785398163).epsilon(1e-9));
    CHECK(four[2] == doctest::Approx(0.785398163).epsilon(1e-9));
    CHECK(four[3] == doctest::Approx(2.356194490).epsilon(1e-9));

    for (long n : {1L, 2L, 7L, 500L, 1001L}) {
        const auto bins = bin_layout(two_pi, n);
        CHECK(std::abs(std::accumulate(bins.begin(), bins.end(), 0.0)) < 1e-9);
        CHECK(bins.front() > -two_pi / 2.0);
        CHECK(bins.back() < two_pi / 2.0);
        CHECK(bins.front() == -bins.back());
    }
    CHECK_THROWS_AS(bin_layout(two_pi, 0), RangeError);
}

TEST_CASE("wilson_interval")
{
    const auto ci = wilson_interval(50, 100);
    CHECK(ci.lo == doctest::Approx(0.403832).epsilon(1e-5));
    CHECK(ci.hi == doctest::Approx(0.596168).epsilon(1e-5));
    const auto zero = wilson_interval(0, 1000);
    CHECK(zero.lo == 0.0);
    CHECK(zero.hi > 0.0);
    CHECK(wilson_interval(1000, 1000).hi == 1.0);
    CHECK_THROWS_AS(wilson_interval(0, 0), RangeError);
}

TEST_CASE("simulate_cycle: no squeezing never triggers")
{
    const HardwareParams hw;
    const SourceParams src{0.0, 0.9, 0.9, 50};
    const auto bins = bin_layout(hw.delta_omega, src.n_bins);
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const auto c = simulate_cycle(src, hw, bins, 1, i);
        CHECK_FALSE(c.triggered);
        CHECK(c.output_photons == 0);
    }
    const auto stats = run_campaign(src, hw, 10'000, 3, 2);
    CHECK(stats.p_trig_hat == 0.0);
    CHECK(stats.p1_hat == 0.0);
}

TEST_CASE("simulate_cycle: record invariants and deadtime")
{
    const HardwareParams hw;
    const SourceParams src{0.05, 0.6, 0.85, 200};
    const auto bins = bin_layout(hw.delta_omega, src.n_bins);
    long multi_detection_cycles = 0;
    for (std::uint64_t i = 0; i < 20'000; ++i) {
        const auto c = simulate_cycle(src, hw, bins, 8, i);
        CHECK(c.herald_bin.has_value() == c.triggered);
        CHECK(c.herald_time.has_value() == c.triggered);
        CHECK(c.pump_center_freq.has_value() == c.triggered);
        CHECK(c.output_envelope.has_value() == c.triggered);
        CHECK(c.triggered == (c.detected_idlers > 0));
        if (!c.triggered) {
            CHECK(c.output_photons == 0);
            continue;
        }
        if (c.detected_idlers > 1)
            ++multi_detection_cycles;
        const double nominal = hw.dispersion * bins[static_cast<std::size_t>(*c.herald_bin)];
        CHECK(std::abs(*c.herald_time - nominal) < 10.0 * hw.dt_d);
        CHECK(*c.pump_center_freq == doctest::Approx(hw.omega_p + *c.herald_time / hw.dispersion));
        CHECK(c.output_photons <= c.pairs);
    }
    // Multiple heralds do occur, yet each cycle reports a single one.
    CHECK(multi_detection_cycles > 100);
}

TEST_CASE("simulate_cycle: ties go to the lowest bin")
{
    HardwareParams hw;
    hw.dt_d = 0.0;
    // Bin layout collapsed to a single arrival time.
    const std::vector<double> bins(40, 0.0);
    const SourceParams src{0.3, 1.0, 1.0, 40};
    for (std::uint64_t i = 0; i < 2000; ++i) {
        SplitMix64 rng(stream_seed(17, i));
        const auto c = simulate_cycle(src, hw, bins, rng);
        if (!c.triggered)
            continue;
        // Recompute the first occupied bin from the same stream.
        SplitMix64 replay(stream_seed(17, i));
        std::geometric_distribution<long> gap(src.lambda);
        CHECK(*c.herald_bin == gap(replay));
    }
}

TEST_CASE("run_campaign: trigger frequency of a single perfect bin")
{
    HardwareParams hw;
    const SourceParams src{0.5, 1.0, 1.0, 1};
    const auto s = run_campaign(src, hw, 1'000'000, 2026);
    CHECK(std::abs(s.p_trig_hat - 0.5) <= 0.0015);
}

TEST_CASE("run_campaign: worked example matches the closed forms")
{
    const HardwareParams hw;
    const auto src = reference_source();
    const auto s = run_campaign(src, hw, 1'000'000, 42);
    const double p1 = purity_p1(effective_source(src, hw));
    const double trig = p_trig_mux(effective_source(src, hw));
    const double sigma_p1 = std::sqrt(p1 * (1.0 - p1) / 1e6);
    const double sigma_trig = std::sqrt(trig * (1.0 - trig) / 1e6);
    CHECK(sigma_p1 == doctest::Approx(4e-4).epsilon(0.05));
    CHECK(std::abs(s.p1_hat - p1) < 3.0 * sigma_p1);
    CHECK(std::abs(s.p_trig_hat - trig) < 3.0 * sigma_trig);
    CHECK(std::abs(s.p_trig_hat - 0.9916) < 3.0 * sigma_trig + 1e-4);
    CHECK(s.p1_ci.lo <= s.p1_hat);
    CHECK(s.p1_hat <= s.p1_ci.hi);
}

TEST_CASE("run_campaign: eta_c multiplies the signal transmission")
{
    HardwareParams hw;
    hw.eta_c = 0.5;
    const auto src = reference_source();
    const auto s = run_campaign(src, hw, 200'000, 5);
    const double p1 = purity_p1(effective_source(src, hw));
    CHECK(effective_source(src, hw).eta_s == doctest::Approx(0.425));
    CHECK(std::abs(s.p1_hat - p1) < 3.0 * s.p1_ci.half_width());
}

TEST_CASE("run_campaign: converted carrier spread follows the jitter")
{
    const HardwareParams hw;
    const SourceParams src{0.031, 0.3, 0.85, 500};
    const auto s = run_campaign(src, hw, 110'000, 77);
    REQUIRE(s.n_triggered >= 100'000);
    const double expected = hw.dt_d / hw.dispersion;
    CHECK(std::abs(s.carrier_offset_mean) < 5.0 * expected / std::sqrt(static_cast<double>(s.n_triggered)));
    CHECK(s.carrier_offset_std == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("run_campaign: multi-photon rate grows with squeezing")
{
    const HardwareParams hw;
    double prev = -1.0;
    for (double lambda : {0.005, 0.01, 0.02, 0.04, 0.08, 0.16}) {
        const auto s = run_campaign({lambda, 0.3, 0.85, 100}, hw, 50'000, 12);
        CHECK(s.multi_photon_rate > prev);
        prev = s.multi_photon_rate;
    }
}

TEST_CASE("run_campaign: shard count does not change the result")
{
    const HardwareParams hw;
    const auto src = reference_source();
    const auto one = to_json(run_campaign(src, hw, 50'000, 42, 1));
    const auto sixteen = to_json(run_campaign(src, hw, 50'000, 42, 16));
    const auto three = to_json(run_campaign(src, hw, 50'000, 42, 3));
    CHECK(one == sixteen);
    CHECK(one == three);
    CHECK(one != to_json(run_campaign(src, hw, 50'000, 43, 1)));
}

TEST_CASE("run_campaign: JSON schema")
{
    const auto json = to_json(run_campaign(reference_source(), HardwareParams{}, 5000, 1));
    for (const char *key : {"\"n_cycles\"", "\"seed\"", "\"p_trig_hat\"", "\"p_trig_ci\"", "\"p1_hat\"", "\"p1_ci\"",
                            "\"multi_photon_rate\"", "\"mean_output_photons\""})
        CHECK(json.find(key) != std::string::npos);
}

TEST_CASE("run_campaign: argument checks")
{
    const HardwareParams hw;
    CHECK_THROWS_AS(run_campaign(reference_source(), hw, 0, 1), RangeError);
    CHECK_THROWS_AS(run_campaign(reference_source(), hw, 10, 1, 0), RangeError);
    HardwareParams bad = hw;
    bad.dispersion = -1.0;
    CHECK_THROWS_AS(run_campaign(reference_source(), bad, 10, 1), RangeError);
    bad = hw;
    bad.eta_c = 1.5;
    CHECK_THROWS_AS(run_campaign(reference_source(), bad, 10, 1), RangeError);
}

TEST_CASE("write_trace_csv")
{
    std::ostringstream os;
    write_trace_csv(os, reference_source(), HardwareParams{}, 50, 42);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "cycle,triggered,herald_bin,t1_ps,output_photons");
    int rows = 0;
    int triggered = 0;
    while (std::getline(in, line)) {
        ++rows;
        if (line.find(",1,") == line.find(','))
            ++triggered;
        else
            CHECK(line.find(",0,,,0") != std::string::npos);
    }
    CHECK(rows == 50);
    CHECK(triggered > 40);
}
