// SPDX-License-Identifier: Apache-2.0

#include "fmux/design.hpp"

#include "fmux/error.hpp"
#include "fmux/indistinguishability.hpp"
#include "fmux/quantity.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>

namespace fmux {
namespace {

void require_positive(const char *name, double v)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw RangeError(std::string(name) + " must be positive, got " + std::to_string(v));
}

constexpr int coarse_grid = 1000;
constexpr double lambda_tolerance = 1e-6;

// Golden-section search for the maximum of f on [lo, hi].
template <class F>
double golden_max(F &&f, double lo, double hi)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > lambda_tolerance) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string &line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        out.push_back(trim(cell));
    return out;
}

double parse_number(const std::string &s, const std::string &what)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size())
            throw ParseError("");
        return v;
    } catch (const std::exception &) {
        throw ParseError("invalid " + what + " '" + s + "'");
    }
}

} // namespace

long n_max_dispersive(double dispersion, double delta_omega, double dt_d)
{
    require_positive("G", dispersion);
    require_positive("delta_omega", delta_omega);
    require_positive("dt_d", dt_d);
    return static_cast<long>(std::floor(dispersion * delta_omega / dt_d));
}

long n_from_excitation(double delta_omega, double dt_e)
{
    require_positive("delta_omega", delta_omega);
    require_positive("dt_e", dt_e);
    return std::lround(delta_omega * dt_e / std::numbers::sqrt2);
}

double cw_condition_ratio(double dt_e, double dispersion, double tau)
{
    require_positive("dt_e", dt_e);
    require_positive("G", dispersion);
    require_positive("tau", tau);
    return dispersion / tau / dt_e;
}

SqueezingOptimum optimize_squeezing(double eta_i, double eta_s, long n_bins)
{
    SourceParams p{0.0, eta_i, eta_s, n_bins};
    p.validate();
    if (eta_i == 0.0 || eta_s == 0.0)
        return {0.0, 0.0, true};

    const auto p1 = [&](double lambda) {
        SourceParams q = p;
        q.lambda = lambda;
        return purity_p1(q);
    };

    // Grid includes the endpoints, where p1 vanishes (lambda = 1 by limit).
    std::vector<double> grid(coarse_grid + 1);
    std::vector<double> value(coarse_grid + 1, 0.0);
    for (int i = 0; i <= coarse_grid; ++i) {
        grid[i] = static_cast<double>(i) / coarse_grid;
        if (i > 0 && i < coarse_grid)
            value[i] = p1(grid[i]);
    }

    SqueezingOptimum best;
    best.p1_star = -1.0;
    for (int i = 1; i < coarse_grid; ++i) {
        if (value[i] < value[i - 1] || value[i] < value[i + 1])
            continue;
        const double x = golden_max(p1, grid[i - 1], grid[i + 1]);
        const double fx = p1(x);
        if (fx > best.p1_star)
            best = {x, fx, false};
    }
    return best;
}

double spatial_tree_loss(long n_bins, double loss_per_switch_db)
{
    if (n_bins < 1)
        throw RangeError("n_bins must be >= 1");
    if (!(loss_per_switch_db >= 0.0))
        throw RangeError("switch loss must be >= 0 dB");
    // Exact integer ceil(log2 N).
    long stages = 0;
    while ((1L << stages) < n_bins)
        ++stages;
    return static_cast<double>(stages) * loss_per_switch_db;
}

std::vector<ConversionRecord> builtin_conversion_records()
{
    const double thz = 2.0 * std::numbers::pi;
    return {
        {"SFG in PPLN crystal", 0.93, 0.02 * thz},
        {"SFG in PPLN planar waveguide", 0.001, 0.6 * thz},
        {"FWM in optical fiber", 0.80, 1.2 * thz},
    };
}

std::vector<ConversionRecord> load_conversion_records(std::istream &is)
{
    std::string line;
    if (!std::getline(is, line))
        throw ParseError("conversion table is empty");
    if (split_csv(line) != std::vector<std::string>{"name", "eta", "bandwidth_thz"})
        throw ParseError("conversion table header must be 'name,eta,bandwidth_thz'");

    std::vector<ConversionRecord> out;
    while (std::getline(is, line)) {
        if (trim(line).empty())
            continue;
        const auto cells = split_csv(line);
        if (cells.size() != 3)
            throw ParseError("conversion table row needs 3 columns: '" + line + "'");
        ConversionRecord r{cells[0], parse_number(cells[1], "eta"),
                           parse_number(cells[2], "bandwidth_thz") * 2.0 * std::numbers::pi};
        if (!(r.eta >= 0.0 && r.eta <= 1.0))
            throw RangeError("conversion efficiency out of [0, 1] for '" + r.name + "'");
        if (!(r.bandwidth > 0.0))
            throw RangeError("conversion bandwidth must be positive for '" + r.name + "'");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<FeasibilityResult> feasibility_check(double required_bandwidth, double required_eta,
                                                 const std::vector<ConversionRecord> &records)
{
    if (records.empty())
        throw RangeError("feasibility check needs at least one conversion record");
    std::vector<FeasibilityResult> out;
    out.reserve(records.size());
    for (const auto &r : records)
        out.push_back({r, r.bandwidth >= required_bandwidth, r.eta >= required_eta});
    return out;
}

DesignReport design_report(const SourceParams &source, const HardwareParams &hw, const DesignOptions &opts)
{
    source.validate();
    hw.validate();
    const SourceParams eff = effective_source(source, hw);
    const PulseParams pulse = hw.pulse();

    DesignReport r;
    if (hw.dt_d > 0.0)
        r.n_max_dispersive = n_max_dispersive(hw.dispersion, hw.delta_omega, hw.dt_d);
    r.n_from_excitation = n_from_excitation(hw.delta_omega, hw.dt_e);
    r.n_from_excitation_no_sqrt2 = std::lround(hw.delta_omega * hw.dt_e);
    r.n_chosen = source.n_bins;
    r.cw_ratio = cw_condition_ratio(hw.dt_e, hw.dispersion, hw.tau);
    r.cw_threshold = opts.cw_threshold;

    r.lambda = eff.lambda;
    r.eta_s_effective = eff.eta_s;
    r.p_trig = p_trig_mux(eff);
    r.p_trig_approx = p_trig_approx(eff);
    if (p_click(eff.lambda, eff.eta_i) > 0.0)
        r.p_single = p_single(eff.lambda, eff.eta_i, eff.eta_s);
    r.p1 = purity_p1(eff);
    const auto opt = optimize_squeezing(eff.eta_i, eff.eta_s, eff.n_bins);
    r.lambda_star = opt.lambda_star;
    r.p1_star = opt.p1_star;
    r.degenerate = opt.degenerate;

    r.dt_pump = pump_duration(hw.tau, hw.dispersion);
    r.dt_h = heralded_amp_width(pulse);
    r.dt_h_intensity = r.dt_h / std::numbers::sqrt2;
    r.domega_h = heralded_spectral_width(pulse);
    r.visibility = visibility_analytic(hw.dt_d, r.dt_h, hw.dispersion);

    r.spatial_tree_loss_db = spatial_tree_loss(source.n_bins, opts.switch_loss_db);
    r.conversion = feasibility_check(hw.delta_omega, opts.required_conversion_eta, opts.records);

    {
        const long bound = std::min(r.n_max_dispersive.value_or(r.n_from_excitation), r.n_from_excitation);
        std::ostringstream detail;
        detail << "N = " << r.n_chosen << ", dispersive bound "
               << (r.n_max_dispersive ? std::to_string(*r.n_max_dispersive) : std::string("unbounded"))
               << ", excitation bound " << r.n_from_excitation << " (delta_omega*dt_e without 1/sqrt(2) gives "
               << r.n_from_excitation_no_sqrt2 << ")";
        r.flags.push_back({"n_bins_within_bounds", r.n_chosen <= bound, detail.str()});
    }
    {
        std::ostringstream detail;
        detail << "(G/tau)/dt_e = " << r.cw_ratio << ", threshold " << r.cw_threshold;
        r.flags.push_back({"quasi_cw_pump", r.cw_ratio >= r.cw_threshold, detail.str()});
    }
    if (r.degenerate)
        r.flags.push_back({"nondegenerate_efficiencies", false, "eta_i or eta_s*eta_c is zero; p1 vanishes for every lambda"});
    if (!r.p_single)
        r.flags.push_back({"heralding_possible", false, "p_click is zero; p_single is undefined"});
    {
        const bool any = std::any_of(r.conversion.begin(), r.conversion.end(),
                                     [](const FeasibilityResult &f) { return f.bandwidth_ok && f.efficiency_ok; });
        std::ostringstream detail;
        detail << "need bandwidth >= " << convert(Quantity::angular_rad_per_ps(hw.delta_omega), "THz")
               << " THz and efficiency >= " << opts.required_conversion_eta;
        r.flags.push_back({"conversion_available", any, detail.str()});
    }
    return r;
}

std::string to_json(const DesignReport &r)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["n_max_dispersive"] = r.n_max_dispersive ? ordered_json(*r.n_max_dispersive) : ordered_json(nullptr);
    j["n_from_excitation"] = r.n_from_excitation;
    j["n_from_excitation_without_sqrt2"] = r.n_from_excitation_no_sqrt2;
    j["n_chosen"] = r.n_chosen;
    j["cw_ratio"] = r.cw_ratio;
    j["cw_threshold"] = r.cw_threshold;
    j["lambda"] = r.lambda;
    j["eta_s_effective"] = r.eta_s_effective;
    j["p_trig"] = r.p_trig;
    j["p_trig_approx"] = r.p_trig_approx;
    j["p_single"] = r.p_single ? ordered_json(*r.p_single) : ordered_json(nullptr);
    j["p1"] = r.p1;
    j["lambda_star"] = r.lambda_star;
    j["p1_star"] = r.p1_star;
    j["degenerate"] = r.degenerate;
    j["dt_pump_ps"] = r.dt_pump;
    j["dt_h_ps"] = r.dt_h;
    j["dt_h_intensity_std_ps"] = r.dt_h_intensity;
    j["domega_h_rad_per_ps"] = r.domega_h;
    j["visibility"] = r.visibility;
    j["spatial_tree_loss_db"] = r.spatial_tree_loss_db;

    ordered_json conv = ordered_json::array();
    for (const auto &c : r.conversion) {
        conv.push_back({{"name", c.record.name},
                        {"eta", c.record.eta},
                        {"bandwidth_thz", c.record.bandwidth / (2.0 * std::numbers::pi)},
                        {"bandwidth_ok", c.bandwidth_ok},
                        {"efficiency_ok", c.efficiency_ok}});
    }
    j["conversion"] = conv;

    ordered_json flags = ordered_json::array();
    for (const auto &f : r.flags)
        flags.push_back({{"criterion", f.criterion}, {"pass", f.pass}, {"detail", f.detail}});
    j["flags"] = flags;

    j["formulas"] = {
        {"n_max_dispersive", "floor(G * delta_omega / dt_d)"},
        {"n_from_excitation", "round(delta_omega * dt_e / sqrt(2))"},
        {"cw_ratio", "(G / tau) / dt_e"},
        {"p_trig", "1 - ((1 - lambda) / (1 - (1 - eta_i) lambda))^N"},
        {"p_trig_approx", "1 - exp(-N eta_i lambda)"},
        {"p_single", "P(one output photon | herald), geometric pairs, threshold idler, binomial signal loss"},
        {"p1", "p_single * p_trig"},
        {"lambda_star", "argmax over lambda of p1"},
        {"dt_pump_ps", "G / (sqrt(2) tau)"},
        {"dt_h_ps", "1 / sqrt(1/dt_e^2 + tau^2/G^2), amplitude width"},
        {"domega_h_rad_per_ps", "1 / (2 dt_h)"},
        {"visibility", "(1 + 2 dt_d^2 dt_h^2 / G^2)^(-1/2)"},
        {"spatial_tree_loss_db", "ceil(log2 N) * switch loss"},
    };
    return j.dump(2) + "\n";
}

} // namespace fmux
