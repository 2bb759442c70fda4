// evfield: reflected near field of a low-frequency magnetic dipole above a metal plate.

#include "evanescent/config.hpp"
#include "evanescent/csv.hpp"
#include "evanescent/report.hpp"
#include "evanescent/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ev = evanescent;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_unconverged = 3;

struct Options
{
    std::string config;
    std::vector<std::string> models;
    std::optional<double> omega;
    std::optional<double> h;
    std::string x;
    std::string freq;
    std::string unit;
    std::optional<double> tol;
    std::string out;
    bool json = false;
    unsigned threads = 0;
    std::string panel = "both";
};

ev::ScenarioConfig scenario(const Options& o)
{
    ev::ScenarioConfig cfg = o.config.empty() ? ev::ScenarioConfig{} : ev::load_config(o.config);
    if (!o.models.empty()) {
        cfg.models.clear();
        for (const auto& m : o.models) {
            const ev::ModelTag tag = ev::parse_model_tag(m);
            if (tag == ev::ModelTag::CustomReflection) throw ev::ConfigError("custom model needs a library hook");
            cfg.models.push_back(tag);
        }
    }
    if (o.omega) cfg.omega = *o.omega;
    if (o.h) cfg.h = *o.h;
    if (!o.unit.empty()) cfg.unit = ev::parse_field_unit(o.unit);
    if (o.tol) cfg.quadrature.rel_tol = *o.tol;
    if (!o.out.empty()) cfg.out_path = o.out;
    if (o.json) cfg.json = true;
    if (!o.x.empty()) {
        const auto xs = ev::parse_range(o.x, false);
        cfg.x = xs.front();
        if (o.freq.empty()) {
            cfg.sweep_variable = ev::SweepVariable::Separation;
            cfg.grid = xs;
        }
    }
    if (!o.freq.empty()) {
        const auto ws = ev::parse_range(o.freq, true);
        cfg.omega = ws.front();
        cfg.sweep_variable = ev::SweepVariable::Frequency;
        cfg.grid = ws;
    }
    cfg.metal.validate();
    cfg.dipole().validate();
    cfg.quadrature.validate();
    return cfg;
}

void emit(const ev::ScenarioConfig& cfg, const std::string& text)
{
    if (cfg.out_path.empty() || cfg.out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out_path);
    if (!f) throw ev::ConfigError("cannot write " + cfg.out_path);
    f << text;
}

int emit_rows(const ev::ScenarioConfig& cfg, const std::vector<ev::ResultRow>& rows)
{
    emit(cfg, cfg.json ? ev::to_json(rows) : ev::to_csv(rows));
    int failed = 0;
    for (const auto& r : rows) {
        if (r.converged) continue;
        ++failed;
        std::cerr << "evfield: " << ev::to_string(r.model) << " omega=" << r.omega << " x=" << r.x << ": "
                  << (r.error.empty() ? "quadrature did not converge" : r.error) << '\n';
    }
    if (failed) std::cerr << "evfield: " << failed << " of " << rows.size() << " rows failed\n";
    return failed ? exit_unconverged : exit_ok;
}

int run_field(const Options& o)
{
    if (o.x.find(':') != std::string::npos || o.freq.find(':') != std::string::npos)
        throw ev::ConfigError("field evaluates a single point; use sweep for ranges");
    ev::ScenarioConfig cfg = scenario(o);
    ev::SweepSpec spec = cfg.sweep_spec();
    spec.variable = ev::SweepVariable::Separation;
    spec.grid = {cfg.x};
    return emit_rows(cfg, ev::run_sweep(spec, cfg.quadrature, o.threads));
}

int run_generic_sweep(const Options& o)
{
    const ev::ScenarioConfig cfg = scenario(o);
    return emit_rows(cfg, ev::run_sweep(cfg.sweep_spec(), cfg.quadrature, o.threads));
}

int run_figure(const Options& o, bool figure2)
{
    const ev::ScenarioConfig cfg = scenario(o);
    std::vector<char> panels;
    if (o.panel == "a" || o.panel == "both") panels.push_back('a');
    if (o.panel == "b" || o.panel == "both") panels.push_back('b');
    std::vector<ev::ResultRow> rows;
    for (char p : panels) {
        const auto specs = figure2 ? ev::figure2_specs(cfg.dipole(), cfg.metal, p, cfg.unit)
                                   : ev::figure3_specs(cfg.dipole(), cfg.metal, p, cfg.unit);
        for (const auto& s : specs) {
            auto part = ev::run_sweep(s, cfg.quadrature, o.threads);
            rows.insert(rows.end(), part.begin(), part.end());
        }
    }
    return emit_rows(cfg, rows);
}

int run_params(const Options& o)
{
    const ev::ScenarioConfig cfg = scenario(o);
    std::vector<double> omegas = o.freq.empty() ? std::vector<double>{2.0, 10.0, 100.0} : cfg.grid;
    if (o.freq.empty() && o.omega) omegas = {*o.omega};
    const ev::ParamsReport report = cfg.m0 ? ev::params_report(cfg.metal, *cfg.m0, cfg.h, omegas)
                                           : ev::params_report(cfg.metal, cfg.coil, cfg.h, omegas);
    if (cfg.json) {
        emit(cfg, ev::to_json(report));
    } else {
        std::ostringstream os;
        ev::print_report(os, report);
        emit(cfg, os.str());
    }
    return exit_ok;
}

int run_ratio(const Options& o)
{
    const ev::ScenarioConfig cfg = scenario(o);
    const std::vector<double> omegas = o.freq.empty() ? std::vector<double>{cfg.omega} : cfg.grid;
    nlohmann::json arr = nlohmann::json::array();
    std::ostringstream text;
    bool ok = true;
    for (double omega : omegas) {
        const ev::RatioResult r = ev::discrimination_ratio(cfg.x, omega, cfg.dipole(), cfg.metal, cfg.quadrature);
        ok = ok && r.plasma.converged && r.drude.converged;
        char line[256];
        std::snprintf(line, sizeof line, "omega=%.6g rad/s x=%.6g cm h=%.6g cm ratio=%.6g", omega, cfg.x, cfg.h,
                      r.ratio);
        text << line;
        if (!r.diagnostic.empty()) text << "  [" << r.diagnostic << ']';
        text << '\n';
        nlohmann::json entry{{"omega_rad_s", omega}, {"x_cm", cfg.x}, {"h_cm", cfg.h},
                             {"plasma_re_Hx_Oe", r.plasma.value.real()}, {"drude_re_Hx_Oe", r.drude.value.real()}};
        entry["ratio"] = std::isinf(r.ratio) ? nlohmann::json("inf") : nlohmann::json(r.ratio);
        if (!r.diagnostic.empty()) entry["diagnostic"] = r.diagnostic;
        arr.push_back(std::move(entry));
    }
    emit(cfg, cfg.json ? arr.dump(2) + '\n' : text.str());
    if (!ok) std::cerr << "evfield: quadrature did not converge\n";
    return ok ? exit_ok : exit_unconverged;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reflected magnetic near field of a dipole above a metal plate"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--config", o.config, "JSON scenario file")->check(CLI::ExistingFile);
    app.add_option("--model", o.models, "drude, plasma or ideal (repeatable)")->take_all()->allow_extra_args(false);
    app.add_option("--omega", o.omega, "angular frequency, rad/s");
    app.add_option("--h", o.h, "dipole height above the plate, cm");
    app.add_option("--x", o.x, "lateral separation, cm: X or START:STOP:N");
    app.add_option("--freq", o.freq, "frequency sweep, rad/s: W or START:STOP:N (log spaced)");
    app.add_option("--unit", o.unit, "Oe, mOe, T or A_per_m");
    app.add_option("--tol", o.tol, "relative quadrature tolerance");
    app.add_option("--out", o.out, "output file (default stdout)");
    app.add_flag("--json", o.json, "emit JSON instead of CSV");
    app.add_option("--threads", o.threads, "worker threads (0: all cores)");

    auto* field = app.add_subcommand("field", "H_x at a single point");
    auto* sweep = app.add_subcommand("sweep", "separation or frequency sweep");
    auto* fig2 = app.add_subcommand("figure2", "Re H_x preset sweeps");
    auto* fig3 = app.add_subcommand("figure3", "Im H_x preset sweeps");
    auto* params = app.add_subcommand("params", "scenario parameter report");
    auto* ratio = app.add_subcommand("ratio", "plasma/Drude |Re H_x| ratio");
    for (auto* sub : {fig2, fig3})
        sub->add_option("--panel", o.panel, "a (separation), b (frequency) or both")
            ->check(CLI::IsMember({"a", "b", "both"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        if (*field) return run_field(o);
        if (*sweep) return run_generic_sweep(o);
        if (*fig2) return run_figure(o, true);
        if (*fig3) return run_figure(o, false);
        if (*params) return run_params(o);
        if (*ratio) return run_ratio(o);
    } catch (const ev::ConfigError& e) {
        std::cerr << "evfield: invalid configuration: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "evfield: invalid configuration: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "evfield: " << e.what() << '\n';
        return 1;
    }
    return exit_ok;
}
