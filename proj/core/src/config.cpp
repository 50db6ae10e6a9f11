#include "cavnet/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "CLI11.hpp"
#include "json.hpp"

namespace cavnet {

namespace {

const std::map<std::string, Scenario> kScenarios{
    {"w", Scenario::WState}, {"photon", Scenario::Photon}, {"excite", Scenario::Excite}};
const std::map<std::string, OutputFormat> kFormats{
    {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};
const std::map<std::string, TimeUnit> kTimeUnits{
    {"plain", TimeUnit::Plain}, {"pi", TimeUnit::Pi}, {"pi-over-xi", TimeUnit::PiOverXi}};

template <typename T>
std::string key_of(const std::map<std::string, T>& m, T v) {
    for (const auto& [k, val] : m)
        if (val == v) return k;
    return {};
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--group", cfg.group_spec, "group spec, e.g. z6 or z2xz2");
    cmd->add_option("--gens", cfg.gens_spec, "generator spec, e.g. 1,5 or 1:0,0:1");
    cmd->add_option("--preset", cfg.preset, "c6 (cycle on Z_6) or q2 (hypercube Q_2)");
    cmd->add_option("--omega-a", cfg.params.omega_a, "atomic splitting");
    cmd->add_option("--omega-c", cfg.params.omega_c, "cavity frequency");
    cmd->add_option("--lambda", cfg.params.lambda, "atom-field coupling");
    cmd->add_option("--xi", cfg.params.xi, "two-photon hopping rate");
    cmd->add_option("--tmax", cfg.t_max, "end of the time grid");
    cmd->add_option("--steps", cfg.steps, "number of grid intervals");
    cmd->add_option("--time", cfg.time, "single time point");
    cmd->add_option("--time-factor", cfg.time_factor, "single time = factor * unit");
    cmd->add_option("--time-unit", cfg.time_unit, "plain, pi, or pi-over-xi")
        ->transform(CLI::CheckedTransformer(kTimeUnits, CLI::ignore_case));
    cmd->add_option("--format", cfg.format, "csv or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    cmd->add_option("--output", cfg.output_path, "output file (default stdout)");
}

void apply_preset(RunConfig& cfg) {
    if (cfg.preset.empty()) return;
    if (cfg.preset == "c6") {
        cfg.group_spec = "z6";
        cfg.gens_spec = "1,5";
    } else if (cfg.preset == "q2") {
        cfg.group_spec = "z2xz2";
        cfg.gens_spec = "1:0,0:1";
    } else {
        throw ConfigError("unknown preset '" + cfg.preset + "' (have: c6, q2)");
    }
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"coupled atom-cavity dynamics on Cayley graphs"};
    app.require_subcommand(1);

    CLI::App* simulate = app.add_subcommand("simulate", "time-evolve a scenario");
    add_common_options(simulate, cfg);
    simulate->add_option("--scenario", cfg.scenario, "w, photon, or excite")
        ->transform(CLI::CheckedTransformer(kScenarios, CLI::ignore_case));
    simulate->add_option("--site", cfg.site, "initial site for photon/excite");

    CLI::App* spectrum = app.add_subcommand("spectrum", "adjacency spectrum and block energies");
    add_common_options(spectrum, cfg);

    CLI::App* negativity = app.add_subcommand("negativity", "two-atom entanglement");
    add_common_options(negativity, cfg);
    negativity->add_option("--scenario", cfg.scenario, "w, photon, or excite")
        ->transform(CLI::CheckedTransformer(kScenarios, CLI::ignore_case));
    negativity->add_option("--site", cfg.site, "initial site for photon/excite");
    std::vector<int> pair;
    negativity->add_option("--pair", pair, "atom pair l,m")->delimiter(',')->expected(2);

    CLI::App* verify = app.add_subcommand("verify", "run the numerical oracle suite");
    add_common_options(verify, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::exit(app.exit(e));
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (!pair.empty()) {
        cfg.pair_l = pair[0];
        cfg.pair_m = pair[1];
    }
    apply_preset(cfg);
    if (cfg.group_spec.empty()) throw ConfigError("missing --group or --preset");
    if (cfg.steps < 1) throw ConfigError("--steps must be >= 1");
    if (cfg.t_max < 0.0) throw ConfigError("--tmax must be >= 0");

    // surface bad specs and out-of-range sites as configuration errors
    try {
        const CayleyGraph graph = make_graph(cfg);
        if (cfg.command == "simulate" || cfg.command == "negativity")
            make_initial_state(cfg, graph.order());
        if (cfg.command == "negativity") {
            if (cfg.pair_l == cfg.pair_m || cfg.pair_l < 0 || cfg.pair_m < 0 ||
                cfg.pair_l >= graph.order() || cfg.pair_m >= graph.order())
                throw ConfigError("--pair must name two distinct sites in range");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

CayleyGraph make_graph(const RunConfig& cfg) {
    FiniteAbelianGroup group = parse_group_spec(cfg.group_spec);
    if (cfg.gens_spec.empty()) throw ConfigError("missing --gens");
    std::vector<int> elems = parse_gens_spec(group, cfg.gens_spec);
    return CayleyGraph(group, validate_generating_set(group, std::move(elems)));
}

ManifoldState make_initial_state(const RunConfig& cfg, int n) {
    switch (cfg.scenario) {
        case Scenario::WState: return w_state(n);
        case Scenario::Photon: return photon_at(n, cfg.site);
        case Scenario::Excite: return excitation_at(n, cfg.site);
    }
    throw ConfigError("invalid scenario");
}

std::vector<double> time_points(const RunConfig& cfg) {
    if (cfg.time) return {*cfg.time};
    if (cfg.time_factor) {
        double unit = 1.0;
        switch (cfg.time_unit) {
            case TimeUnit::Plain: unit = 1.0; break;
            case TimeUnit::Pi: unit = std::numbers::pi; break;
            case TimeUnit::PiOverXi:
                if (cfg.params.xi <= 0.0) throw ConfigError("pi-over-xi time unit needs xi > 0");
                unit = std::numbers::pi / cfg.params.xi;
                break;
        }
        return {*cfg.time_factor * unit};
    }
    std::vector<double> ts(cfg.steps + 1);
    for (int k = 0; k <= cfg.steps; ++k)
        ts[k] = cfg.t_max * static_cast<double>(k) / cfg.steps;
    return ts;
}

std::string config_to_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["command"] = cfg.command;
    j["group"] = cfg.group_spec;
    j["gens"] = cfg.gens_spec;
    j["preset"] = cfg.preset;
    j["scenario"] = key_of(kScenarios, cfg.scenario);
    j["site"] = cfg.site;
    j["omega_a"] = cfg.params.omega_a;
    j["omega_c"] = cfg.params.omega_c;
    j["lambda"] = cfg.params.lambda;
    j["xi"] = cfg.params.xi;
    j["tmax"] = cfg.t_max;
    j["steps"] = cfg.steps;
    if (cfg.time) j["time"] = *cfg.time;
    if (cfg.time_factor) j["time_factor"] = *cfg.time_factor;
    j["time_unit"] = key_of(kTimeUnits, cfg.time_unit);
    j["pair"] = {cfg.pair_l, cfg.pair_m};
    j["format"] = key_of(kFormats, cfg.format);
    j["output"] = cfg.output_path;
    return j.dump(2);
}

RunConfig config_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config json: ") + e.what());
    }
    RunConfig cfg;
    cfg.command = j.value("command", "simulate");
    cfg.group_spec = j.value("group", "");
    cfg.gens_spec = j.value("gens", "");
    cfg.preset = j.value("preset", "");
    cfg.scenario = kScenarios.at(j.value("scenario", "w"));
    cfg.site = j.value("site", 0);
    cfg.params.omega_a = j.value("omega_a", cfg.params.omega_a);
    cfg.params.omega_c = j.value("omega_c", cfg.params.omega_c);
    cfg.params.lambda = j.value("lambda", cfg.params.lambda);
    cfg.params.xi = j.value("xi", cfg.params.xi);
    cfg.t_max = j.value("tmax", cfg.t_max);
    cfg.steps = j.value("steps", cfg.steps);
    if (j.contains("time")) cfg.time = j["time"].get<double>();
    if (j.contains("time_factor")) cfg.time_factor = j["time_factor"].get<double>();
    cfg.time_unit = kTimeUnits.at(j.value("time_unit", "plain"));
    if (j.contains("pair")) {
        cfg.pair_l = j["pair"][0].get<int>();
        cfg.pair_m = j["pair"][1].get<int>();
    }
    cfg.format = kFormats.at(j.value("format", "csv"));
    cfg.output_path = j.value("output", "");
    apply_preset(cfg);
    return cfg;
}

}  // namespace cavnet
