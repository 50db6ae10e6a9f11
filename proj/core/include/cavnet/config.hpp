#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cavnet/cayley.hpp"
#include "cavnet/dynamics.hpp"

namespace cavnet {

/// Configuration problem (bad spec string, invalid scenario, ...). The CLI
/// maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Scenario { WState, Photon, Excite };
enum class OutputFormat { Csv, Json };
enum class TimeUnit { Plain, Pi, PiOverXi };

struct RunConfig {
    std::string command;      ///< simulate | spectrum | negativity | verify
    std::string group_spec;   ///< e.g. "z6", "z2xz2"
    std::string gens_spec;    ///< e.g. "1,5", "1:0,0:1"
    std::string preset;       ///< "c6" or "q2"; expands group/gens
    Scenario scenario = Scenario::WState;
    int site = 0;
    CavityParams params;
    double t_max = 6.283185307179586;
    int steps = 100;
    std::optional<double> time;        ///< single time point, plain units
    std::optional<double> time_factor; ///< single time = factor * unit
    TimeUnit time_unit = TimeUnit::Plain;
    int pair_l = 0, pair_m = 1;
    OutputFormat format = OutputFormat::Csv;
    std::string output_path;  ///< empty = stdout
};

/// Parses full CLI argument list (subcommand first). Throws ConfigError.
RunConfig parse_config(const std::vector<std::string>& args);

/// Builds the configured Cayley graph (preset or group/gens specs).
CayleyGraph make_graph(const RunConfig& cfg);

/// Initial state for the configured scenario.
ManifoldState make_initial_state(const RunConfig& cfg, int n);

/// Time points: the single resolved time if one was given, else the grid
/// 0..t_max with `steps` intervals.
std::vector<double> time_points(const RunConfig& cfg);

std::string config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const std::string& text);

struct SimRow {
    double t;
    std::vector<double> pc;  ///< |C_i|^2 per site
    std::vector<double> pa;  ///< |A_i|^2 per site
    double total_pa, total_pc, norm;
};

struct NegativityRow {
    double t;
    double value;
    std::optional<double> closed_form;  ///< W scenario in the small-xi regime
};

struct SpectrumRow {
    int index;
    double x, e_plus, e_minus;
};

std::vector<SimRow> run_simulate(const RunConfig& cfg);
std::vector<NegativityRow> run_negativity(const RunConfig& cfg);
std::vector<SpectrumRow> run_spectrum(const RunConfig& cfg);

/// Runs the oracle verification suite against the configured graph, writing
/// one pass/fail line per check. Returns 0 on success, 1 on any failure.
int run_verify(const RunConfig& cfg, std::ostream& out);

void write_csv(std::ostream& out, const std::vector<SimRow>& rows);
void write_json(std::ostream& out, const std::vector<SimRow>& rows);
void write_csv(std::ostream& out, const std::vector<NegativityRow>& rows);
void write_json(std::ostream& out, const std::vector<NegativityRow>& rows);
void write_csv(std::ostream& out, const std::vector<SpectrumRow>& rows);
void write_json(std::ostream& out, const std::vector<SpectrumRow>& rows);

/// Renders rows in the configured format to the configured destination.
void emit_output(const RunConfig& cfg, const std::vector<SimRow>& rows);
void emit_output(const RunConfig& cfg, const std::vector<NegativityRow>& rows);
void emit_output(const RunConfig& cfg, const std::vector<SpectrumRow>& rows);

}  // namespace cavnet
