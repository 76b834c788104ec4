// SPDX-License-Identifier: Apache-2.0

#include "fmux/error.hpp"
#include "fmux/indistinguishability.hpp"

#include <doctest.h>

#include <random>

using namespace fmux;

namespace {

PulseParams reference_pulse() { return {80.0, 10.0, 8000.0, 2.0, 1.0}; }

} // namespace

TEST_CASE("visibility_analytic")
{
    CHECK(visibility_analytic(0.0, 79.61, 8000.0) == 1.0);
    CHECK(visibility_analytic(0.0, 1.0, -3.0) == 1.0);
    CHECK(visibility_analytic(10.0, 79.61, 8000.0) == doctest::Approx(0.99024).epsilon(1e-5));
    CHECK(std::abs(visibility_analytic(10.0, 79.61, 8000.0) - 0.99024) < 1e-5);
    CHECK(visibility_analytic(20.0, 79.61, 8000.0) < visibility_analytic(10.0, 79.61, 8000.0));
    CHECK(visibility_analytic(10.0, 79.61, -8000.0) == visibility_analytic(10.0, 79.61, 8000.0));

    CHECK_THROWS_AS(visibility_analytic(-1.0, 79.61, 8000.0), RangeError);
    CHECK_THROWS_AS(visibility_analytic(10.0, 0.0, 8000.0), RangeError);
    CHECK_THROWS_AS(visibility_analytic(10.0, 79.61, 0.0), RangeError);
}

TEST_CASE("property: visibility is monotone and in (0, 1]")
{
    double prev = 1.0;
    for (int i = 1; i <= 200; ++i) {
        const double v = visibility_analytic(0.5 * i, 79.61, 8000.0);
        CHECK(v < prev);
        CHECK(v > 0.0);
        prev = v;
    }
    prev = 1.0;
    for (int i = 1; i <= 200; ++i) {
        const double v = visibility_analytic(10.0, 5.0 * i, 8000.0);
        CHECK(v < prev);
        prev = v;
    }
    prev = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double v = visibility_analytic(10.0, 79.61, 100.0 * i);
        CHECK(v > prev);
        CHECK(v <= 1.0);
        prev = v;
    }
}

TEST_CASE("visibility_mc: no jitter is a pure state")
{
    const auto r = visibility_mc(reference_pulse(), {0.0}, 1000, 5);
    CHECK(r.estimate == 1.0);
    CHECK(r.std_error == 0.0);
}

TEST_CASE("visibility_mc reproduces the closed form at the worked example")
{
    const auto p = reference_pulse();
    const double analytic = visibility_analytic(10.0, heralded_amp_width(p), p.dispersion);
    CHECK(analytic == doctest::Approx(0.99024).epsilon(1e-5));
    for (std::uint64_t seed : {1u, 77u}) {
        const auto r = visibility_mc(p, {10.0}, 1'000'000, seed);
        CHECK(std::abs(r.estimate - analytic) < 3.0 * r.std_error);
        CHECK(r.std_error > 0.0);
    }
}

TEST_CASE("visibility_mc increases with |G|")
{
    auto p = reference_pulse();
    const auto base = visibility_mc(p, {10.0}, 100'000, 3);
    p.dispersion *= 2.0;
    const auto doubled = visibility_mc(p, {10.0}, 100'000, 3);
    CHECK(doubled.estimate > base.estimate);
}

TEST_CASE("visibility_mc is reproducible and shard-independent")
{
    const auto p = reference_pulse();
    const auto a = visibility_mc(p, {25.0}, 50'000, 9, 1);
    const auto b = visibility_mc(p, {25.0}, 50'000, 9, 1);
    const auto c = visibility_mc(p, {25.0}, 50'000, 9, 7);
    CHECK(a.estimate == b.estimate);
    CHECK(a.estimate == c.estimate);
    CHECK(a.std_error == c.std_error);
    CHECK(visibility_mc(p, {25.0}, 50'000, 10).estimate != a.estimate);
}

TEST_CASE("visibility_mc argument checks")
{
    CHECK_THROWS_AS(visibility_mc(reference_pulse(), {10.0}, 999, 1), RangeError);
    CHECK_THROWS_AS(visibility_mc(reference_pulse(), {-1.0}, 1000, 1), RangeError);
    CHECK_THROWS_AS(visibility_mc({80.0, 10.0, 0.0, 0.0, 0.0}, {10.0}, 1000, 1), RangeError);
}

TEST_CASE("property: Monte-Carlo converges to the closed form on random parameters")
{
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> jitter(1.0, 100.0);
    std::uniform_real_distribution<double> dt_e(10.0, 300.0);
    std::uniform_real_distribution<double> tau(1.0, 50.0);
    std::uniform_real_distribution<double> g(500.0, 20000.0);
    int outside = 0;
    for (int i = 0; i < 100; ++i) {
        const PulseParams p{dt_e(rng), tau(rng), g(rng), 0.0, 0.0};
        const double sigma = jitter(rng);
        const double analytic = visibility_analytic(sigma, heralded_amp_width(p), p.dispersion);
        const auto r = visibility_mc(p, {sigma}, 20'000, 1000 + i);
        if (std::abs(r.estimate - analytic) >= 3.0 * r.std_error)
            ++outside;
        CHECK(r.estimate > 0.0);
        CHECK(r.estimate <= 1.0);
    }
    CHECK(outside == 0);
}
