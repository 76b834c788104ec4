// SPDX-License-Identifier: Apache-2.0

#include "fmux/error.hpp"
#include "fmux/quantity.hpp"

#include <doctest.h>

#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace fmux;

TEST_CASE("parse_quantity: canonical units")
{
    const auto g = parse_quantity("8000 ps^2");
    CHECK(g.dimension() == Dimension::dispersion);
    CHECK(g.value() == 8000.0);

    const auto bw = parse_quantity("1 THz");
    CHECK(bw.dimension() == Dimension::angular_frequency);
    CHECK(bw.value() == doctest::Approx(6.283185307).epsilon(1e-10));

    const auto zero = parse_quantity("0 ps");
    CHECK(zero.dimension() == Dimension::time);
    CHECK(zero.value() == 0.0);

    CHECK(parse_quantity("20 GHz").value() == doctest::Approx(2.0 * std::numbers::pi * 0.02));
    CHECK(parse_quantity("0.5657 ns").value() == doctest::Approx(565.7));
    CHECK(parse_quantity("1e-12 s").value() == doctest::Approx(1.0));
    CHECK(parse_quantity("3 dB").dimension() == Dimension::decibel);
    CHECK(parse_quantity("  0.3 ").dimension() == Dimension::dimensionless);
    CHECK(parse_quantity("0.01 rad/ps").value() == 0.01);
}

TEST_CASE("parse_quantity: errors name the offending token")
{
    const auto message = [](const char *text) {
        try {
            parse_quantity(text);
        } catch (const ParseError &e) {
            return std::string(e.what());
        }
        return std::string("<no error>");
    };
    CHECK(message("8000 furlongs").find("furlongs") != std::string::npos);
    CHECK(message("abc ps").find("abc") != std::string::npos);
    CHECK(message("inf ps").find("inf") != std::string::npos);
    CHECK(message("nan ps").find("nan") != std::string::npos);
    CHECK(message("").find("empty") != std::string::npos);
    CHECK(message("   ").find("empty") != std::string::npos);
}

TEST_CASE("convert")
{
    CHECK(convert(Quantity::time_ps(565.7), "ns") == doctest::Approx(0.5657).epsilon(1e-14));
    CHECK(convert(Quantity::angular_rad_per_ps(6.2832), "THz") == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(convert(Quantity::dispersion_ps2(8000.0), "ps^2") == 8000.0);

    CHECK_THROWS_AS(convert(Quantity::time_ps(1.0), "THz"), RangeError);
    CHECK_THROWS_AS(convert(Quantity::dispersion_ps2(1.0), "ps"), RangeError);
    CHECK_THROWS_AS(convert(Quantity::scalar(1.0), "dB"), RangeError);
    CHECK_THROWS_AS(convert(Quantity::time_ps(1.0), "fortnight"), ParseError);
}

TEST_CASE("Quantity rejects non-finite values")
{
    CHECK_THROWS_AS(Quantity(std::numeric_limits<double>::infinity(), Dimension::time), RangeError);
    CHECK_THROWS_AS(Quantity(std::numeric_limits<double>::quiet_NaN(), Dimension::time), RangeError);
}

TEST_CASE("property: parse/convert round trip for every unit")
{
    const char *units[] = {"ps", "ns", "s", "THz", "GHz", "rad/ps", "ps^2", "dB"};
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mantissa(-10.0, 10.0);
    std::uniform_int_distribution<int> exponent(-15, 15);
    for (int i = 0; i < 2000; ++i) {
        const double v = mantissa(rng) * std::pow(10.0, exponent(rng));
        for (const char *u : units) {
            std::ostringstream text;
            text.precision(17);
            text << v << ' ' << u;
            const double back = convert(parse_quantity(text.str()), u);
            REQUIRE(std::abs(back - v) <= 1e-12 * std::abs(v));
        }
    }
}
