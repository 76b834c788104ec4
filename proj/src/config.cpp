// SPDX-License-Identifier: Apache-2.0

#include "fmux/config.hpp"

#include "fmux/error.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <istream>

namespace fmux {
namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_dimensional(std::string_view key, std::string_view value, Dimension dim)
{
    const Quantity q = parse_quantity(value);
    if (q.dimension() != dim) {
        throw ParseError(std::string(key) + ": expected a " + std::string(to_string(dim)) + " value, got '" +
                         std::string(value) + "'");
    }
    return q.value();
}

std::uint64_t parse_count(std::string_view key, std::string_view value)
{
    const auto v = trim(value);
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size())
        throw ParseError(std::string(key) + ": expected a non-negative integer, got '" + std::string(value) + "'");
    return out;
}

struct Field
{
    std::string name;
    Dimension dim;
    bool sweepable;
    std::function<void(RunConfig &, double)> set;
};

long to_bins(double v)
{
    if (!std::isfinite(v) || v > 1e15)
        throw RangeError("n_bins out of range");
    return std::lround(v);
}

const std::vector<Field> &fields()
{
    using D = Dimension;
    static const std::vector<Field> table{
        {"lambda", D::dimensionless, true, [](RunConfig &c, double v) { c.source.lambda = v; }},
        {"eta_i", D::dimensionless, true, [](RunConfig &c, double v) { c.source.eta_i = v; }},
        {"eta_s", D::dimensionless, true, [](RunConfig &c, double v) { c.source.eta_s = v; }},
        {"eta_c", D::dimensionless, true, [](RunConfig &c, double v) { c.hardware.eta_c = v; }},
        {"n_bins", D::dimensionless, true, [](RunConfig &c, double v) { c.source.n_bins = to_bins(v); }},
        {"G", D::dispersion, true, [](RunConfig &c, double v) { c.hardware.dispersion = v; }},
        {"delta_omega", D::angular_frequency, true, [](RunConfig &c, double v) { c.hardware.delta_omega = v; }},
        {"dt_d", D::time, true, [](RunConfig &c, double v) { c.hardware.dt_d = v; }},
        {"tau", D::time, true, [](RunConfig &c, double v) { c.hardware.tau = v; }},
        {"dt_e", D::time, true, [](RunConfig &c, double v) { c.hardware.dt_e = v; }},
        {"omega_e", D::angular_frequency, false, [](RunConfig &c, double v) { c.hardware.omega_e = v; }},
        {"omega_p", D::angular_frequency, false, [](RunConfig &c, double v) { c.hardware.omega_p = v; }},
        {"cw_threshold", D::dimensionless, false, [](RunConfig &c, double v) { c.design.cw_threshold = v; }},
        {"switch_loss", D::decibel, false, [](RunConfig &c, double v) { c.design.switch_loss_db = v; }},
        {"eta_required", D::dimensionless, false,
         [](RunConfig &c, double v) { c.design.required_conversion_eta = v; }},
    };
    return table;
}

const Field *find_field(std::string_view key)
{
    for (const auto &f : fields()) {
        if (f.name == key)
            return &f;
    }
    return nullptr;
}

} // namespace

void apply_setting(RunConfig &cfg, std::string_view key, std::string_view value)
{
    key = trim(key);
    value = trim(value);
    if (key == "n_cycles") {
        cfg.n_cycles = parse_count(key, value);
        if (cfg.n_cycles < 1)
            throw ParseError("n_cycles must be >= 1");
        return;
    }
    if (key == "seed") {
        cfg.seed = parse_count(key, value);
        return;
    }
    if (key == "shards") {
        const auto s = parse_count(key, value);
        if (s < 1 || s > 1024)
            throw ParseError("shards must be in [1, 1024]");
        cfg.shards = static_cast<unsigned>(s);
        return;
    }
    if (key == "n_bins") {
        const auto n = parse_count(key, value);
        if (n > 1'000'000'000)
            throw ParseError("n_bins is too large");
        cfg.source.n_bins = static_cast<long>(n);
        return;
    }
    const Field *f = find_field(key);
    if (!f)
        throw ParseError("unknown config key '" + std::string(key) + "'");
    try {
        f->set(cfg, parse_dimensional(key, value, f->dim));
    } catch (const ParseError &e) {
        const std::string msg = e.what();
        if (msg.rfind(std::string(key) + ":", 0) == 0)
            throw;
        throw ParseError(std::string(key) + ": " + msg);
    }
}

RunConfig parse_config(std::istream &is)
{
    RunConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::string_view body = line;
        if (const auto hash = body.find('#'); hash != std::string_view::npos)
            body = body.substr(0, hash);
        body = trim(body);
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
        try {
            apply_setting(cfg, body.substr(0, eq), body.substr(eq + 1));
        } catch (const ParseError &e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return cfg;
}

const std::vector<std::string> &config_keys()
{
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto &f : fields())
            k.push_back(f.name);
        k.insert(k.end(), {"n_cycles", "seed", "shards"});
        return k;
    }();
    return keys;
}

const std::vector<std::string> &sweep_axes()
{
    static const std::vector<std::string> axes = [] {
        std::vector<std::string> a;
        for (const auto &f : fields()) {
            if (f.sweepable)
                a.push_back(f.name);
        }
        return a;
    }();
    return axes;
}

Dimension axis_dimension(std::string_view axis)
{
    const Field *f = find_field(axis);
    if (!f || !f->sweepable)
        throw ParseError("unknown sweep axis '" + std::string(axis) + "'");
    return f->dim;
}

void set_axis(RunConfig &cfg, std::string_view axis, double value)
{
    const Field *f = find_field(axis);
    if (!f || !f->sweepable)
        throw ParseError("unknown sweep axis '" + std::string(axis) + "'");
    f->set(cfg, value);
}

} // namespace fmux
