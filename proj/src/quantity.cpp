// SPDX-License-Identifier: Apache-2.0

#include "fmux/quantity.hpp"

#include "fmux/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>

namespace fmux {
namespace {

struct UnitInfo
{
    std::string_view name;
    Dimension dim;
    double to_canonical; // canonical = value * to_canonical
};

constexpr double two_pi = 2.0 * std::numbers::pi;

// THz -> rad/ps: 2*pi*1e12 rad/s = 2*pi rad/ps.
constexpr std::array<UnitInfo, 9> units{{
    {"ps", Dimension::time, 1.0},
    {"ns", Dimension::time, 1e3},
    {"s", Dimension::time, 1e12},
    {"THz", Dimension::angular_frequency, two_pi},
    {"GHz", Dimension::angular_frequency, two_pi * 1e-3},
    {"rad/ps", Dimension::angular_frequency, 1.0},
    {"ps^2", Dimension::dispersion, 1.0},
    {"dB", Dimension::decibel, 1.0},
    {"", Dimension::dimensionless, 1.0},
}};

std::optional<UnitInfo> find_unit(std::string_view name)
{
    for (const auto &u : units) {
        if (u.name == name)
            return u;
    }
    return std::nullopt;
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace

std::string_view to_string(Dimension d)
{
    switch (d) {
    case Dimension::time: return "time";
    case Dimension::angular_frequency: return "angular-frequency";
    case Dimension::dispersion: return "dispersion";
    case Dimension::dimensionless: return "dimensionless";
    case Dimension::decibel: return "decibel";
    }
    return "unknown";
}

Quantity::Quantity(double value, Dimension dim)
    : value_(value)
    , dim_(dim)
{
    if (!std::isfinite(value))
        throw RangeError("quantity value must be finite");
}

Quantity parse_quantity(std::string_view text)
{
    const auto body = trim(text);
    if (body.empty())
        throw ParseError("empty quantity string");

    const auto split = body.find_first_of(" \t");
    const auto number = body.substr(0, split);
    const auto unit = split == std::string_view::npos ? std::string_view{} : trim(body.substr(split));

    double value = 0.0;
    const auto *end = number.data() + number.size();
    const auto [ptr, ec] = std::from_chars(number.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("invalid number '" + std::string(number) + "'");
    if (!std::isfinite(value))
        throw ParseError("non-finite number '" + std::string(number) + "'");

    const auto info = find_unit(unit);
    if (!info)
        throw ParseError("unknown unit '" + std::string(unit) + "'");
    return Quantity(value * info->to_canonical, info->dim);
}

double convert(const Quantity &q, std::string_view unit)
{
    const auto info = find_unit(trim(unit));
    if (!info)
        throw ParseError("unknown unit '" + std::string(unit) + "'");
    if (info->dim != q.dimension()) {
        throw RangeError("cannot convert " + std::string(to_string(q.dimension())) + " to '" +
                         std::string(unit) + "' (" + std::string(to_string(info->dim)) + ")");
    }
    return q.value() / info->to_canonical;
}

} // namespace fmux
