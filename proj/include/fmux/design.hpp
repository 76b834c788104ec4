// SPDX-License-Identifier: Apache-2.0

#ifndef FMUX_DESIGN_HPP
#define FMUX_DESIGN_HPP

#include "fmux/photon_statistics.hpp"
#include "fmux/simulator.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fmux {

// floor(G * delta_omega / dt_d): bins resolvable through the jittered
// time-of-arrival mapping.
long n_max_dispersive(double dispersion, double delta_omega, double dt_d);

// round(delta_omega * dt_e / sqrt(2)): bins supported by the excitation
// pulse bandwidth.
long n_from_excitation(double delta_omega, double dt_e);

// (G / tau) / dt_e. Large values mean the recompressed pump looks
// quasi-continuous to the signal photon.
double cw_condition_ratio(double dt_e, double dispersion, double tau);

struct SqueezingOptimum
{
    double lambda_star = 0.0;
    double p1_star = 0.0;
    bool degenerate = false; // eta_i or eta_s is zero, p1 vanishes identically
};

// Maximises purity_p1 over lambda in (0, 1): a 1000-point grid brackets
// every interior local maximum, golden-section search refines each to
// |d lambda| < 1e-6 and the best is returned.
SqueezingOptimum optimize_squeezing(double eta_i, double eta_s, long n_bins);

// ceil(log2 N) switch stages of a spatial N x 1 tree, in dB.
double spatial_tree_loss(long n_bins, double loss_per_switch_db);

struct ConversionRecord
{
    std::string name;
    double eta = 0.0;       // conversion efficiency
    double bandwidth = 0.0; // rad/ps
};

// Reported frequency-conversion experiments. Reported "> 80 %" is stored as 0.8.
std::vector<ConversionRecord> builtin_conversion_records();

// Columns: name, eta, bandwidth_thz (ordinary frequency). Header required.
std::vector<ConversionRecord> load_conversion_records(std::istream &is);

struct FeasibilityResult
{
    ConversionRecord record;
    bool bandwidth_ok = false;
    bool efficiency_ok = false;
};

std::vector<FeasibilityResult> feasibility_check(double required_bandwidth, double required_eta,
                                                 const std::vector<ConversionRecord> &records);

struct DesignOptions
{
    double cw_threshold = 10.0;
    double switch_loss_db = 0.5;
    double required_conversion_eta = 0.8;
    std::vector<ConversionRecord> records = builtin_conversion_records();
};

struct Flag
{
    std::string criterion;
    bool pass = false;
    std::string detail;
};

struct DesignReport
{
    std::optional<long> n_max_dispersive; // empty when dt_d = 0
    long n_from_excitation = 0;
    long n_from_excitation_no_sqrt2 = 0;
    long n_chosen = 0;
    double cw_ratio = 0.0;
    double cw_threshold = 0.0;

    double lambda = 0.0;
    double eta_s_effective = 0.0;
    double p_trig = 0.0;
    double p_trig_approx = 0.0;
    std::optional<double> p_single;
    double p1 = 0.0;
    double lambda_star = 0.0;
    double p1_star = 0.0;
    bool degenerate = false;

    double dt_pump = 0.0;        // intensity std, ps
    double dt_h = 0.0;           // amplitude width, ps
    double dt_h_intensity = 0.0; // intensity std, ps
    double domega_h = 0.0;       // rad/ps
    double visibility = 0.0;

    double spatial_tree_loss_db = 0.0;
    std::vector<FeasibilityResult> conversion;
    std::vector<Flag> flags;
};

DesignReport design_report(const SourceParams &source, const HardwareParams &hw, const DesignOptions &opts = {});

// Report as JSON, with a "formulas" object naming the expression behind each value.
std::string to_json(const DesignReport &report);

} // namespace fmux

#endif // FMUX_DESIGN_HPP
