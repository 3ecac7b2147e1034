#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "cardsim/catalog.hpp"
#include "cardsim/inductance.hpp"
#include "cardsim/scenario.hpp"

namespace {

using namespace cardsim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitScenarioFailure = 2;
constexpr int kExitModelError = 3;

struct CliConfig {
    ModelDefaults defaults;
    ProbeSetup probe;
    double sweep_f_start = 10e6;
    double sweep_f_stop = 250e6;
    int sweep_points = 1001;
};

void apply_config_json(CliConfig& cfg, const nlohmann::json& j) {
    if (j.contains("probe")) {
        const auto& p = j.at("probe");
        if (p.contains("L_probe_uh")) cfg.probe.L_probe = p.at("L_probe_uh").get<double>() * 1e-6;
        if (p.contains("k")) cfg.probe.k = p.at("k").get<double>();
        if (p.contains("Z0")) cfg.probe.Z0 = p.at("Z0").get<double>();
    }
    if (j.contains("C_cut_pf")) cfg.defaults.C_cut = j.at("C_cut_pf").get<double>() * 1e-12;
    if (j.contains("noise_floor")) cfg.defaults.noise_floor = j.at("noise_floor").get<double>();
    if (j.contains("sweep")) {
        const auto& s = j.at("sweep");
        if (s.contains("f_start_mhz")) cfg.sweep_f_start = s.at("f_start_mhz").get<double>() * 1e6;
        if (s.contains("f_stop_mhz")) cfg.sweep_f_stop = s.at("f_stop_mhz").get<double>() * 1e6;
        if (s.contains("points")) cfg.sweep_points = s.at("points").get<int>();
    }
    cfg.probe.validate();
}

CliConfig load_cli_config(const std::string& explicit_path) {
    CliConfig cfg;
    std::string path = explicit_path;
    if (path.empty()) {
        if (const char* env = std::getenv("CARDSIM_CONFIG")) path = env;
    }
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    apply_config_json(cfg, j);
    return cfg;
}

struct GeometryFlags {
    double width_mm = 0.0;
    double height_mm = 0.0;
    int turns = 0;
    double pitch_mm = 0.5;
    double wire_radius_um = 56.0;

    bool provided() const { return width_mm > 0.0 || height_mm > 0.0 || turns > 0; }

    AntennaGeometry to_geometry() const {
        AntennaGeometry g;
        g.width = width_mm * 1e-3;
        g.height = height_mm * 1e-3;
        g.turns = turns;
        g.pitch = pitch_mm * 1e-3;
        g.wire_radius = wire_radius_um * 1e-6;
        return g;
    }
};

// Resolves either a catalog id or explicit geometry flags into (geometry, f0).
std::pair<AntennaGeometry, double> resolve_card(const std::string& card_id,
                                                const GeometryFlags& flags,
                                                double measured_mhz) {
    if (!card_id.empty()) {
        const auto entry = find_catalog_entry(card_id);
        if (!entry) throw ModelError("unknown card id: " + card_id);
        const double f0 = measured_mhz > 0.0 ? measured_mhz * 1e6 : entry->measured_f0;
        return {entry->geometry, f0};
    }
    if (!flags.provided()) throw ModelError("give a card id or full geometry flags");
    return {flags.to_geometry(), measured_mhz > 0.0 ? measured_mhz * 1e6 : 0.0};
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ModelError("cannot write " + path);
    out << content;
}

PhysicalState state_from_flags(int cuts, const std::string& series,
                               const std::string& shunt, bool module_antenna,
                               bool pin_disabled) {
    PhysicalState s;
    s.cuts = cuts;
    if (series == "absent") s.series_switch = SeriesSwitch::absent;
    else if (series == "open") s.series_switch = SeriesSwitch::open;
    else if (series == "closed_metal") s.series_switch = SeriesSwitch::closed_metal;
    else if (series == "finger_bridge") s.series_switch = SeriesSwitch::finger_bridge;
    else throw ModelError("unknown series switch: " + series);
    if (shunt == "absent") s.shunt_switch = ShuntSwitch::absent;
    else if (shunt == "open") s.shunt_switch = ShuntSwitch::open;
    else if (shunt == "closed") s.shunt_switch = ShuntSwitch::closed;
    else throw ModelError("unknown shunt switch: " + shunt);
    s.module_antenna = module_antenna;
    s.hardware_pin_enabled = !pin_disabled;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contactless smartcard RF and interface-management simulator"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (or CARDSIM_CONFIG env)");

    std::string out_path;
    app.add_option("-o,--output", out_path, "output file (default stdout)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "resonance report: L, calibrated C, f0");
    std::string analyze_id;
    GeometryFlags analyze_geom;
    double analyze_measured = 0.0;
    analyze->add_option("card", analyze_id, "catalog id (card-a .. card-j)");
    analyze->add_option("--width-mm", analyze_geom.width_mm, "antenna width");
    analyze->add_option("--height-mm", analyze_geom.height_mm, "antenna height");
    analyze->add_option("--turns", analyze_geom.turns, "winding count");
    analyze->add_option("--pitch-mm", analyze_geom.pitch_mm, "winding pitch");
    analyze->add_option("--wire-radius-um", analyze_geom.wire_radius_um, "wire radius");
    analyze->add_option("--measured", analyze_measured, "measured f0 in MHz for calibration");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "probe-coupled S11 sweep CSV");
    std::string sweep_id;
    GeometryFlags sweep_geom;
    double sweep_measured = 0.0;
    int sweep_cuts = 0;
    std::string sweep_series = "absent";
    std::string sweep_shunt = "absent";
    double sweep_start_mhz = 0.0, sweep_stop_mhz = 0.0;
    int sweep_points = 0;
    sweep_cmd->add_option("card", sweep_id, "catalog id");
    sweep_cmd->add_option("--width-mm", sweep_geom.width_mm, "antenna width");
    sweep_cmd->add_option("--height-mm", sweep_geom.height_mm, "antenna height");
    sweep_cmd->add_option("--turns", sweep_geom.turns, "winding count");
    sweep_cmd->add_option("--measured", sweep_measured, "measured f0 in MHz");
    sweep_cmd->add_option("--cuts", sweep_cuts, "windings cut");
    sweep_cmd->add_option("--series-switch", sweep_series,
                          "absent|open|closed_metal|finger_bridge");
    sweep_cmd->add_option("--shunt-switch", sweep_shunt, "absent|open|closed");
    sweep_cmd->add_option("--f-start", sweep_start_mhz, "sweep start, MHz");
    sweep_cmd->add_option("--f-stop", sweep_stop_mhz, "sweep stop, MHz");
    sweep_cmd->add_option("--points", sweep_points, "sweep point count");

    // cut
    auto* cut_cmd = app.add_subcommand("cut", "cut-progression CSV");
    std::string cut_id;
    double cut_measured = 0.0;
    double cut_cap_pf = 0.0;
    cut_cmd->add_option("card", cut_id, "catalog id")->required();
    cut_cmd->add_option("--measured", cut_measured, "measured f0 in MHz");
    cut_cmd->add_option("--cut-cap-pf", cut_cap_pf, "per-cut gap capacitance override, pF");

    // readability
    auto* read_cmd = app.add_subcommand("readability", "verdict for a physical state");
    std::string read_id;
    double read_measured = 0.0;
    int read_cuts = 0;
    std::string read_series = "absent";
    std::string read_shunt = "absent";
    bool read_module = false;
    bool read_pin_disabled = false;
    std::string read_reader;
    std::string read_chip;
    read_cmd->add_option("card", read_id, "catalog id")->required();
    read_cmd->add_option("--measured", read_measured, "measured f0 in MHz");
    read_cmd->add_option("--cuts", read_cuts, "windings cut");
    read_cmd->add_option("--series-switch", read_series,
                         "absent|open|closed_metal|finger_bridge");
    read_cmd->add_option("--shunt-switch", read_shunt, "absent|open|closed");
    read_cmd->add_flag("--module-antenna", read_module, "coil-on-module card");
    read_cmd->add_flag("--hardware-pin-disabled", read_pin_disabled,
                       "dedicated switching pin held low");
    read_cmd->add_option("--reader", read_reader,
                         "standard_reader|smartphone|special_hardware (default: all)");
    read_cmd->add_option("--chip", read_chip,
                         "mifare_classic|dual_interface (default: all)");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "run a scenario (builtin name or file)");
    std::vector<std::string> sim_names;
    bool sim_list = false;
    bool sim_json = false;
    sim_cmd->add_option("scenario", sim_names, "builtin scenario name or JSON file path");
    sim_cmd->add_flag("--list", sim_list, "list builtin scenarios");
    sim_cmd->add_flag("--json", sim_json, "machine-readable report");

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "examined-cards table as CSV");
    (void)catalog_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        CliConfig cfg = load_cli_config(config_path);

        if (analyze->parsed()) {
            auto [geometry, f0] = resolve_card(analyze_id, analyze_geom, analyze_measured);
            const double inductance = loop_inductance(geometry);
            std::ostringstream out;
            char buf[128];
            std::snprintf(buf, sizeof(buf), "L = %.6g uH\n", inductance * 1e6);
            out << buf;
            if (f0 > 0.0) {
                const double cap = calibrate_chip_capacitance(inductance, f0);
                EquivalentCircuit c;
                c.L = inductance;
                c.C_chip = cap;
                std::snprintf(buf, sizeof(buf), "C_chip = %.6g pF (calibrated)\n", cap * 1e12);
                out << buf;
                std::snprintf(buf, sizeof(buf), "f0 = %.6g MHz\n",
                              resonant_frequency_closed_form(c) * 1e-6);
                out << buf;
            }
            write_output(out_path, out.str());
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            auto [geometry, f0] = resolve_card(sweep_id, sweep_geom, sweep_measured);
            if (!(f0 > 0.0)) throw ModelError("sweep needs a measured f0 (--measured)");
            EquivalentCircuit c;
            c.L = loop_inductance(geometry);
            c.C_chip = calibrate_chip_capacitance(c.L, f0);
            const PhysicalState state = state_from_flags(sweep_cuts, sweep_series,
                                                         sweep_shunt, false, false);
            const EquivalentCircuit effective =
                apply_state(c, state, geometry.turns, cfg.defaults);
            ProbeSetup probe = cfg.probe;
            if (state.cuts >= geometry.turns && state.cuts > 0) probe.k = 0.0;
            const double f_start = sweep_start_mhz > 0.0 ? sweep_start_mhz * 1e6 : cfg.sweep_f_start;
            const double f_stop = sweep_stop_mhz > 0.0 ? sweep_stop_mhz * 1e6 : cfg.sweep_f_stop;
            const int points = sweep_points > 0 ? sweep_points : cfg.sweep_points;
            write_output(out_path, sweep_csv(s11_sweep(probe, effective, f_start, f_stop, points)));
            return kExitOk;
        }

        if (cut_cmd->parsed()) {
            auto [geometry, f0] = resolve_card(cut_id, GeometryFlags{}, cut_measured);
            EquivalentCircuit c;
            c.L = loop_inductance(geometry);
            c.C_chip = calibrate_chip_capacitance(c.L, f0);
            ModelDefaults defaults = cfg.defaults;
            if (cut_cap_pf > 0.0) defaults.C_cut = cut_cap_pf * 1e-12;
            SweepConfig sweep_cfg;
            sweep_cfg.probe = cfg.probe;
            sweep_cfg.f_start = cfg.sweep_f_start;
            sweep_cfg.f_stop = cfg.sweep_f_stop;
            sweep_cfg.n_points = cfg.sweep_points;
            sweep_cfg.noise_floor = defaults.noise_floor;
            write_output(out_path, cut_progression_csv(
                                       cut_progression(c, geometry.turns, sweep_cfg, defaults)));
            return kExitOk;
        }

        if (read_cmd->parsed()) {
            auto [geometry, f0] = resolve_card(read_id, GeometryFlags{}, read_measured);
            EquivalentCircuit c;
            c.L = loop_inductance(geometry);
            c.C_chip = calibrate_chip_capacitance(c.L, f0);
            const PhysicalState state = state_from_flags(read_cuts, read_series, read_shunt,
                                                         read_module, read_pin_disabled);
            std::vector<ReaderClass> readers;
            if (read_reader.empty()) {
                readers = {standard_reader(), smartphone_reader(), special_hardware_reader()};
            } else {
                readers = {reader_by_name(read_reader)};
            }
            std::vector<ChipProfile> chips;
            if (read_chip.empty()) {
                chips = {mifare_classic_profile(), dual_interface_profile()};
            } else {
                chips = {chip_profile_by_name(read_chip)};
            }
            std::ostringstream out;
            for (const ChipProfile& chip : chips) {
                for (const ReaderClass& reader : readers) {
                    const Readability verdict = readability(c, state, chip, reader,
                                                            geometry.turns, cfg.defaults);
                    out << chip.name << " x " << to_string(reader.name) << ": "
                        << to_string(verdict) << "\n";
                }
            }
            write_output(out_path, out.str());
            return kExitOk;
        }

        if (sim_cmd->parsed()) {
            if (sim_list || sim_names.empty()) {
                std::ostringstream out;
                for (const std::string& name : list_builtin()) out << name << "\n";
                write_output(out_path, out.str());
                return kExitOk;
            }
            bool any_expected_pass_failed = false;
            std::ostringstream out;
            for (const std::string& name : sim_names) {
                Scenario scenario;
                if (auto builtin = find_builtin(name)) {
                    scenario = *builtin;
                } else {
                    std::ifstream in(name);
                    if (!in) throw ModelError("no builtin or file named: " + name);
                    std::stringstream buffer;
                    buffer << in.rdbuf();
                    scenario = load_scenario(buffer.str());
                }
                const ScenarioReport report = run(scenario, cfg.defaults);
                if (sim_json) {
                    nlohmann::ordered_json jr;
                    jr["name"] = report.name;
                    jr["expected"] = report.expected == ScenarioExpectation::pass
                                         ? "pass"
                                         : "demonstrates-attack";
                    jr["passed"] = report.passed;
                    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
                    for (const StepResult& r : report.steps) {
                        steps.push_back({{"index", r.index},
                                         {"description", r.description},
                                         {"ok", r.ok},
                                         {"detail", r.detail}});
                    }
                    jr["steps"] = std::move(steps);
                    out << jr.dump(2) << "\n";
                } else {
                    out << report.transcript() << "\n";
                }
                if (report.expected == ScenarioExpectation::pass && !report.passed) {
                    any_expected_pass_failed = true;
                }
            }
            write_output(out_path, out.str());
            return any_expected_pass_failed ? kExitScenarioFailure : kExitOk;
        }

        if (catalog_cmd->parsed()) {
            write_output(out_path, catalog_csv());
            return kExitOk;
        }
    } catch (const ScenarioParseError& e) {
        std::cerr << "scenario error: " << e.what() << "\n";
        return kExitModelError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitModelError;
    }
    return kExitUsage;
}
