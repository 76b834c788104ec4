// SPDX-License-Identifier: Apache-2.0

#ifndef FMUX_QUANTITY_HPP
#define FMUX_QUANTITY_HPP

#include <string>
#include <string_view>

namespace fmux {

// Canonical internal units:
//   time               ps
//   angular frequency  rad/ps
//   dispersion         ps^2
enum class Dimension
{
    time,
    angular_frequency,
    dispersion,
    dimensionless,
    decibel,
};

std::string_view to_string(Dimension d);

class Quantity
{
public:
    // Throws RangeError if value is not finite.
    Quantity(double value, Dimension dim);

    static Quantity time_ps(double ps) { return {ps, Dimension::time}; }
    static Quantity angular_rad_per_ps(double w) { return {w, Dimension::angular_frequency}; }
    static Quantity dispersion_ps2(double g) { return {g, Dimension::dispersion}; }
    static Quantity scalar(double x) { return {x, Dimension::dimensionless}; }

    double value() const { return value_; }
    Dimension dimension() const { return dim_; }

    bool operator==(const Quantity &) const = default;

private:
    double value_;
    Dimension dim_;
};

// Parses "<number> <unit>". Accepted units: ps, ns, s, THz, GHz, rad/ps,
// ps^2, dB. THz/GHz are ordinary frequencies and become 2*pi*f in rad/ps.
// A bare number parses as dimensionless. Throws ParseError naming the
// offending token.
Quantity parse_quantity(std::string_view text);

// Value of q expressed in `unit`. Throws ParseError for unknown units and
// RangeError when the unit's dimension differs from q's.
double convert(const Quantity &q, std::string_view unit);

} // namespace fmux

#endif // FMUX_QUANTITY_HPP
