// SPDX-License-Identifier: Apache-2.0

#ifndef FMUX_CONFIG_HPP
#define FMUX_CONFIG_HPP

#include "fmux/design.hpp"
#include "fmux/photon_statistics.hpp"
#include "fmux/quantity.hpp"
#include "fmux/simulator.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fmux {

// Run configuration. Defaults reproduce the worked example: G = 8000 ps^2,
// delta_omega = 1 THz, dt_d = tau = 10 ps, dt_e = 80 ps, eta_i = 0.3,
// eta_s = 0.85, N = 500, lambda = 0.031.
//
// source.eta_s is the signal-arm transmission alone; hardware.eta_c is
// multiplied in wherever the statistics are evaluated.
struct RunConfig
{
    SourceParams source;
    HardwareParams hardware;
    DesignOptions design;
    std::uint64_t n_cycles = 100'000;
    std::uint64_t seed = 42;
    unsigned shards = 1;
};

// Line-oriented "key = value" text; '#' starts a comment. Values carry
// units where the key is dimensional, e.g. "G = 8000 ps^2". Unknown keys,
// malformed values and wrong dimensions throw ParseError; physical range
// checks are left to the consumers (RangeError).
RunConfig parse_config(std::istream &is);

// Applies one key/value pair with the same rules as parse_config.
void apply_setting(RunConfig &cfg, std::string_view key, std::string_view value);

// Keys accepted by apply_setting, in documentation order.
const std::vector<std::string> &config_keys();

// Numeric fields that can be swept.
const std::vector<std::string> &sweep_axes();

// Dimension expected for a sweepable axis; throws ParseError for unknown axes.
Dimension axis_dimension(std::string_view axis);

// Sets a sweepable field from a canonical-unit value (n_bins is rounded).
void set_axis(RunConfig &cfg, std::string_view axis, double value);

inline constexpr std::string_view sweep_header =
    "axis_value,lambda,eta_i,eta_s_effective,n_bins,p_trig,p_trig_approx,p_single,p1,lambda_star,p1_star,"
    "n_max_dispersive,n_from_excitation,cw_ratio,dt_pump_ps,dt_h_ps,visibility";

// One row per grid point from `from` to `to` inclusive (linear spacing),
// columns as in sweep_header. axis_value is in canonical units.
void write_sweep_csv(std::ostream &os, const RunConfig &cfg, std::string_view axis, const Quantity &from,
                     const Quantity &to, int steps);

} // namespace fmux

#endif // FMUX_CONFIG_HPP
