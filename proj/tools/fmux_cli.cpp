// SPDX-License-Identifier: Apache-2.0
//
// fmux: analyze, optimize, simulate and sweep frequency-multiplexed
// heralded single-photon sources.
//
// Exit codes: 0 success, 1 I/O failure, 2 configuration error,
// 3 parameters outside their physical range.

#include "fmux/config.hpp"
#include "fmux/design.hpp"
#include "fmux/error.hpp"
#include "fmux/pulse.hpp"
#include "fmux/simulator.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int exit_io = 1;
constexpr int exit_config = 2;
constexpr int exit_range = 3;

struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> cycles;
    std::optional<unsigned> shards;
    std::string out_path;
    std::string trace_path;
    std::string envelope_path;
    std::string records_path;
    std::string axis;
    std::string from;
    std::string to;
    int steps = 0;
};

fmux::RunConfig load_config(const Options &opt)
{
    fmux::RunConfig cfg;
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in)
            throw fmux::ParseError("cannot open config '" + opt.config_path + "'");
        cfg = fmux::parse_config(in);
    }
    if (opt.seed)
        cfg.seed = *opt.seed;
    if (opt.cycles) {
        if (*opt.cycles < 1)
            throw fmux::ParseError("--cycles must be >= 1");
        cfg.n_cycles = *opt.cycles;
    }
    if (opt.shards) {
        if (*opt.shards < 1)
            throw fmux::ParseError("--shards must be >= 1");
        cfg.shards = *opt.shards;
    }
    if (!opt.records_path.empty()) {
        std::ifstream in(opt.records_path);
        if (!in)
            throw fmux::ParseError("cannot open conversion table '" + opt.records_path + "'");
        cfg.design.records = fmux::load_conversion_records(in);
    }
    return cfg;
}

void emit(const Options &opt, const std::string &text)
{
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out || !(out << text))
        throw IoError("cannot write '" + opt.out_path + "'");
}

std::ofstream open_output(const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write '" + path + "'");
    return out;
}

void cmd_analyze(const Options &opt)
{
    const auto cfg = load_config(opt);
    const auto report = fmux::design_report(cfg.source, cfg.hardware, cfg.design);
    emit(opt, fmux::to_json(report));
    if (!opt.envelope_path.empty()) {
        const auto env = fmux::heralded_photon(0.0, cfg.hardware.pulse());
        const double span = 6.0 * env.amp_width();
        auto out = open_output(opt.envelope_path);
        fmux::write_envelope_csv(out, env, -span, span, 1001);
    }
}

void cmd_optimize(const Options &opt)
{
    const auto cfg = load_config(opt);
    cfg.hardware.validate();
    const auto eff = fmux::effective_source(cfg.source, cfg.hardware);
    const auto best = fmux::optimize_squeezing(eff.eta_i, eff.eta_s, eff.n_bins);
    nlohmann::ordered_json j;
    j["eta_i"] = eff.eta_i;
    j["eta_s_effective"] = eff.eta_s;
    j["n_bins"] = eff.n_bins;
    j["lambda_star"] = best.lambda_star;
    j["p1_star"] = best.p1_star;
    j["degenerate"] = best.degenerate;
    emit(opt, j.dump(2) + "\n");
}

void cmd_simulate(const Options &opt)
{
    const auto cfg = load_config(opt);
    const auto stats = fmux::run_campaign(cfg.source, cfg.hardware, cfg.n_cycles, cfg.seed, cfg.shards);
    emit(opt, fmux::to_json(stats));
    if (!opt.trace_path.empty()) {
        auto out = open_output(opt.trace_path);
        fmux::write_trace_csv(out, cfg.source, cfg.hardware, cfg.n_cycles, cfg.seed);
    }
}

void cmd_sweep(const Options &opt)
{
    const auto cfg = load_config(opt);
    const auto from = fmux::parse_quantity(opt.from);
    const auto to = fmux::parse_quantity(opt.to);
    std::ostringstream csv;
    fmux::write_sweep_csv(csv, cfg, opt.axis, from, to, opt.steps);
    emit(opt, csv.str());
}

void add_common(CLI::App *cmd, Options &opt)
{
    cmd->add_option("--config", opt.config_path, "Configuration file (key = value lines)");
    cmd->add_option("--out", opt.out_path, "Write the main output here instead of stdout");
    cmd->add_option("--conversion-table", opt.records_path, "CSV overriding the built-in conversion records");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Frequency-multiplexed heralded single-photon source design tool"};
    app.require_subcommand(1);
    Options opt;

    auto *analyze = app.add_subcommand("analyze", "Full design report as JSON");
    add_common(analyze, opt);
    analyze->add_option("--envelope", opt.envelope_path, "Dump the converted photon envelope as CSV");

    auto *optimize = app.add_subcommand("optimize", "Optimal squeezing for the configured efficiencies and N");
    add_common(optimize, opt);

    auto *simulate = app.add_subcommand("simulate", "Monte-Carlo campaign, statistics as JSON");
    add_common(simulate, opt);
    simulate->add_option("--seed", opt.seed, "Campaign seed");
    simulate->add_option("--cycles", opt.cycles, "Number of clock cycles");
    simulate->add_option("--shards", opt.shards, "Worker threads (results do not depend on it)");
    simulate->add_option("--trace", opt.trace_path, "Per-cycle CSV trace");

    auto *sweep = app.add_subcommand("sweep", "Design report scalars along one axis, as CSV");
    add_common(sweep, opt);
    sweep->add_option("--axis", opt.axis, "Field to sweep")->required();
    sweep->add_option("--from", opt.from, "Start value with units, e.g. '0 ps'")->required();
    sweep->add_option("--to", opt.to, "End value with units")->required();
    sweep->add_option("--steps", opt.steps, "Number of grid points (>= 2)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_config;
    }

    try {
        if (*analyze)
            cmd_analyze(opt);
        else if (*optimize)
            cmd_optimize(opt);
        else if (*simulate)
            cmd_simulate(opt);
        else if (*sweep)
            cmd_sweep(opt);
    } catch (const fmux::ParseError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const fmux::RangeError &e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return exit_range;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    }
    return 0;
}
