#include <CLI11.hpp>

#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "commands.hpp"

namespace {

using sqz::cli::UsageError;

// plain key = value lines; '#' starts a comment, blank lines ignored
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    auto trim = [](std::string s) {
        const auto first = s.find_first_not_of(" \t\r");
        const auto last = s.find_last_not_of(" \t\r");
        return first == std::string::npos ? std::string{} : s.substr(first, last - first + 1);
    };
    while (std::getline(in, line)) {
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line is not key = value: '" + text + "'");
        const std::string key = trim(text.substr(0, eq));
        if (key.empty()) throw UsageError("config line has an empty key: '" + text + "'");
        if (kv.count(key)) throw UsageError("duplicate config key '" + key + "'");
        kv[key] = trim(text.substr(eq + 1));
    }
    return kv;
}

int parse_int(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    int out = 0;
    try {
        out = std::stoi(value, &pos);
    } catch (const std::exception&) {
        throw UsageError("config key '" + key + "' is not an integer: '" + value + "'");
    }
    if (pos != value.size())
        throw UsageError("config key '" + key + "' is not an integer: '" + value + "'");
    return out;
}

double parse_real(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double out = 0;
    try {
        out = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw UsageError("config key '" + key + "' is not a number: '" + value + "'");
    }
    if (pos != value.size())
        throw UsageError("config key '" + key + "' is not a number: '" + value + "'");
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw UsageError("config key '" + key + "' is not a boolean: '" + value + "'");
}

/// Applies config-file values to the fields whose flags were not given on the
/// command line, and rejects unknown keys.
class ConfigMerge {
  public:
    ConfigMerge(CLI::App* cmd, const std::string& path) : cmd_(cmd) {
        if (!path.empty()) kv_ = read_config_file(path);
    }

    void integer(const std::string& key, int& field) {
        with_value(key, [&](const std::string& v) { field = parse_int(key, v); });
    }
    void real(const std::string& key, double& field) {
        with_value(key, [&](const std::string& v) { field = parse_real(key, v); });
    }
    void text(const std::string& key, std::string& field) {
        with_value(key, [&](const std::string& v) { field = v; });
    }
    void boolean(const std::string& key, bool& field) {
        with_value(key, [&](const std::string& v) { field = parse_bool(key, v); });
    }

    void finish() {
        kv_.erase("command");  // informational echo, already validated by the caller
        if (!kv_.empty())
            throw UsageError("unknown config key '" + kv_.begin()->first + "'");
    }

  private:
    void with_value(const std::string& key, const std::function<void(const std::string&)>& set) {
        const auto it = kv_.find(key);
        if (it == kv_.end()) return;
        if (cmd_->count("--" + key) == 0) set(it->second);
        kv_.erase(it);
    }

    CLI::App* cmd_;
    std::map<std::string, std::string> kv_;
};

void check_command_key(const std::string& path, const std::string& name) {
    if (path.empty()) return;
    const auto kv = read_config_file(path);
    const auto it = kv.find("command");
    if (it != kv.end() && it->second != name)
        throw UsageError("config file is for command '" + it->second + "', not '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin squeezing in a two-component condensate: exact Dicke-basis "
                 "dynamics of 2 kappa Jz^2 + Omega(t) Jx with a field quench"};
    app.require_subcommand(1);

    std::string config_path;

    sqz::cli::SimulateConfig sim;
    CLI::App* simulate = app.add_subcommand("simulate", "time evolution of one quench scenario");
    simulate->add_option("--config", config_path, "key = value config file; flags override it");
    simulate->add_option("--n", sim.n, "number of atoms N");
    simulate->add_option("--omega", sim.omega, "coupling Omega_R/kappa");
    simulate->add_option("--t-max", sim.t_max, "simulated span, 1/kappa units");
    simulate->add_option("--dt-out", sim.dt_out, "output sampling step");
    simulate->add_option("--quench", sim.quench, "auto | never | at <time>");
    simulate->add_option("--snapshots", sim.snapshots, "comma-separated |c_m|^2 snapshot times");
    simulate->add_option("--output", sim.output, "output path ('-' = stdout)");
    simulate->add_option("--format", sim.format, "csv | json");

    sqz::cli::SweepConfig sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "coupling scan for the squeezing optimum");
    sweep_cmd->add_option("--config", config_path, "key = value config file; flags override it");
    sweep_cmd->add_option("--n", sweep.n, "number of atoms N");
    sweep_cmd->add_option("--omega-min", sweep.omega_lo, "scan range start");
    sweep_cmd->add_option("--omega-max", sweep.omega_hi, "scan range end");
    sweep_cmd->add_option("--points", sweep.points, "grid points (>= 8)");
    sweep_cmd->add_option("--output", sweep.output, "output path ('-' = stdout)");
    sweep_cmd->add_option("--format", sweep.format, "csv | json");

    sqz::cli::AnsatzConfig ansatz;
    CLI::App* ansatz_cmd =
        app.add_subcommand("ansatz", "xi(alpha, phi) surface of the sharp-distribution trial states");
    ansatz_cmd->add_option("--config", config_path, "key = value config file; flags override it");
    ansatz_cmd->add_option("--n", ansatz.n, "number of atoms N");
    ansatz_cmd->add_option("--alpha-min", ansatz.alpha_lo, "alpha grid start, radians");
    ansatz_cmd->add_option("--alpha-max", ansatz.alpha_hi, "alpha grid end");
    ansatz_cmd->add_option("--alpha-points", ansatz.alpha_points, "alpha grid size");
    ansatz_cmd->add_option("--phi-min", ansatz.phi_lo, "phi grid start, radians");
    ansatz_cmd->add_option("--phi-max", ansatz.phi_hi, "phi grid end");
    ansatz_cmd->add_option("--phi-points", ansatz.phi_points, "phi grid size");
    ansatz_cmd->add_option("--family", ansatz.family, "auto | even | odd");
    ansatz_cmd->add_option("--output", ansatz.output, "output path ('-' = stdout)");
    ansatz_cmd->add_option("--format", ansatz.format, "csv | json");

    sqz::cli::PredictConfig predict;
    CLI::App* predict_cmd =
        app.add_subcommand("predict", "pendulum-model estimates and physical-unit conversions");
    predict_cmd->add_option("--config", config_path, "key = value config file; flags override it");
    predict_cmd->add_option("--n", predict.n, "number of atoms N");
    predict_cmd->add_option("--omega", predict.omega, "coupling Omega_R/kappa");
    predict_cmd->add_flag("--physical,!--no-physical", predict.physical,
                          "include the Thomas-Fermi kappa and lab times (23Na defaults)");
    predict_cmd->add_flag("--numeric,!--no-numeric", predict.numeric,
                          "also locate the numerical t0 (default on)");
    predict_cmd->add_option("--mass-u", predict.mass_u, "atom mass in u");
    predict_cmd->add_option("--trap-hz", predict.trap_hz, "trap frequency in Hz");
    predict_cmd->add_option("--a-aa-nm", predict.a_aa_nm, "a_aa in nm");
    predict_cmd->add_option("--a-bb-nm", predict.a_bb_nm, "a_bb in nm");
    predict_cmd->add_option("--a-ab-nm", predict.a_ab_nm, "a_ab in nm");
    predict_cmd->add_option("--output", predict.output, "output path ('-' = stdout)");
    predict_cmd->add_option("--format", predict.format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*simulate) {
            check_command_key(config_path, "simulate");
            ConfigMerge merge(simulate, config_path);
            merge.integer("n", sim.n);
            merge.real("omega", sim.omega);
            merge.real("t-max", sim.t_max);
            merge.real("dt-out", sim.dt_out);
            merge.text("quench", sim.quench);
            merge.text("snapshots", sim.snapshots);
            merge.text("output", sim.output);
            merge.text("format", sim.format);
            merge.finish();
            return sqz::cli::run_simulate(sim);
        }
        if (*sweep_cmd) {
            check_command_key(config_path, "sweep");
            ConfigMerge merge(sweep_cmd, config_path);
            merge.integer("n", sweep.n);
            merge.real("omega-min", sweep.omega_lo);
            merge.real("omega-max", sweep.omega_hi);
            merge.integer("points", sweep.points);
            merge.text("output", sweep.output);
            merge.text("format", sweep.format);
            merge.finish();
            return sqz::cli::run_sweep(sweep);
        }
        if (*ansatz_cmd) {
            check_command_key(config_path, "ansatz");
            ConfigMerge merge(ansatz_cmd, config_path);
            merge.integer("n", ansatz.n);
            merge.real("alpha-min", ansatz.alpha_lo);
            merge.real("alpha-max", ansatz.alpha_hi);
            merge.integer("alpha-points", ansatz.alpha_points);
            merge.real("phi-min", ansatz.phi_lo);
            merge.real("phi-max", ansatz.phi_hi);
            merge.integer("phi-points", ansatz.phi_points);
            merge.text("family", ansatz.family);
            merge.text("output", ansatz.output);
            merge.text("format", ansatz.format);
            merge.finish();
            return sqz::cli::run_ansatz(ansatz);
        }
        if (*predict_cmd) {
            check_command_key(config_path, "predict");
            ConfigMerge merge(predict_cmd, config_path);
            merge.integer("n", predict.n);
            merge.real("omega", predict.omega);
            merge.boolean("physical", predict.physical);
            merge.boolean("numeric", predict.numeric);
            merge.real("mass-u", predict.mass_u);
            merge.real("trap-hz", predict.trap_hz);
            merge.real("a-aa-nm", predict.a_aa_nm);
            merge.real("a-bb-nm", predict.a_bb_nm);
            merge.real("a-ab-nm", predict.a_ab_nm);
            merge.text("output", predict.output);
            merge.text("format", predict.format);
            merge.finish();
            return sqz::cli::run_predict(predict);
        }
    } catch (const sqz::cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
