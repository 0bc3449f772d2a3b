#include "commands.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>

#include "sqz/io.hpp"
#include "sqz/model.hpp"
#include "sqz/physical.hpp"
#include "sqz/search.hpp"

namespace sqz::cli {

namespace {

using io::format_sig;
using io::HeaderFields;

// Every real-valued input is canonicalized to the 12 significant digits used
// for serialization, so the config echoed into an output header re-runs to
// byte-identical data.
double canon(double x) { return io::round_sig(x); }

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file)
        throw std::runtime_error("cannot open output file '" + path + "'");
    return file;
}

std::string histogram_path(const std::string& output, std::size_t index) {
    const auto dot = output.rfind('.');
    const std::string stem = dot == std::string::npos ? output : output.substr(0, dot);
    const std::string ext = dot == std::string::npos ? ".csv" : output.substr(dot);
    return stem + ".hist" + std::to_string(index) + ext;
}

std::vector<double> parse_time_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("cannot parse time '" + item + "'");
        }
        if (item.find_first_not_of(" \t", pos) != std::string::npos)
            throw UsageError("cannot parse time '" + item + "'");
        out.push_back(canon(v));
    }
    return out;
}

struct QuenchSpec {
    enum class Mode { automatic, never, at } mode = Mode::never;
    double t = 0.0;

    static QuenchSpec parse(const std::string& text) {
        QuenchSpec q;
        if (text == "auto") {
            q.mode = Mode::automatic;
        } else if (text == "never" || text.empty()) {
            q.mode = Mode::never;
        } else {
            std::string num = text;
            if (text.rfind("at", 0) == 0) num = text.substr(2);
            try {
                std::size_t pos = 0;
                q.t = canon(std::stod(num, &pos));
                if (num.find_first_not_of(" \t", pos) != std::string::npos) throw std::exception();
            } catch (const std::exception&) {
                throw UsageError("quench must be 'auto', 'never' or 'at <time>', got '" +
                                 text + "'");
            }
            if (q.t < 0.0) throw UsageError("quench time must be >= 0");
            q.mode = Mode::at;
        }
        return q;
    }

    // canonical echo that re-parses identically (a bare number means 'at')
    std::string echo() const {
        switch (mode) {
            case Mode::automatic: return "auto";
            case Mode::never: return "never";
            case Mode::at: return format_sig(t);
        }
        return "never";
    }
};

}  // namespace

int run_simulate(const SimulateConfig& cfg) {
    if (cfg.n < 1) throw UsageError("simulate: --n must be >= 1");
    if (cfg.omega < 0.0) throw UsageError("simulate: --omega must be >= 0");
    if (cfg.format != "csv" && cfg.format != "json")
        throw UsageError("simulate: format must be csv or json");
    const ModelParams params = make_params(cfg.n, canon(cfg.omega));
    const QuenchSpec quench = QuenchSpec::parse(cfg.quench);
    const std::vector<double> snapshot_times = parse_time_list(cfg.snapshots);
    if (!snapshot_times.empty() && cfg.format == "csv" &&
        (cfg.output.empty() || cfg.output == "-"))
        throw UsageError("simulate: snapshots with csv output need --output <file>");

    std::optional<double> located_t0;
    QuenchProtocol protocol = QuenchProtocol::never(params.omega_ratio);
    if (quench.mode == QuenchSpec::Mode::automatic) {
        if (!(params.omega_ratio > 0.0))
            throw std::domain_error("simulate: --quench auto needs a positive coupling");
        const ExtremumResult t0 = find_first_jx_max(params, params.omega_ratio);
        located_t0 = t0.time;
        protocol = QuenchProtocol::off_at(params.omega_ratio, canon(t0.time));
        std::cerr << "located t0 = " << format_sig(t0.time) << " (1/kappa units)\n";
    } else if (quench.mode == QuenchSpec::Mode::at) {
        protocol = QuenchProtocol::off_at(params.omega_ratio, quench.t);
    }

    double t_max = canon(cfg.t_max);
    if (!(t_max > 0.0)) {
        if (std::isfinite(protocol.t_off))
            t_max = canon(21.0 * protocol.t_off);
        else if (params.omega_ratio > 0.0)
            t_max = canon(3.0 * predict_t0(params, params.omega_ratio).period);
        else
            t_max = 0.05;
        if (!(t_max > 0.0)) throw UsageError("simulate: cannot derive t_max, pass --t-max");
    }
    const double dt_out = cfg.dt_out > 0.0 ? canon(cfg.dt_out) : canon(t_max / 400.0);

    const TimeSeries series = simulate(params, protocol, t_max, dt_out, snapshot_times);

    HeaderFields header{
        {"command", "simulate"},
        {"n", std::to_string(cfg.n)},
        {"omega", format_sig(params.omega_ratio)},
        {"t-max", format_sig(t_max)},
        {"dt-out", format_sig(dt_out)},
        {"quench", quench.echo()},
        {"snapshots", cfg.snapshots},
        {"output", cfg.output},
        {"format", cfg.format},
    };

    std::ofstream file;
    std::ostream& os = open_output(file, cfg.output);
    if (cfg.format == "json") {
        nlohmann::json out = io::timeseries_to_json(series, params.j(), header);
        if (located_t0) out["located_t0"] = io::round_sig(*located_t0);
        os << out.dump(2) << "\n";
    } else {
        io::write_timeseries_csv(os, series, params.j(), header);
        if (located_t0) os << "## located_t0 = " << format_sig(*located_t0) << "\n";
        for (std::size_t i = 0; i < series.snapshots.size(); ++i) {
            std::ofstream hist_file(histogram_path(cfg.output, i));
            if (!hist_file)
                throw std::runtime_error("cannot open histogram output file");
            io::write_histogram_csv(hist_file, series.snapshots[i], header);
        }
    }
    return 0;
}

int run_sweep(const SweepConfig& cfg) {
    if (cfg.n < 1) throw UsageError("sweep: --n must be >= 1");
    if (!(cfg.omega_lo > 0.0) || !(cfg.omega_hi > cfg.omega_lo))
        throw UsageError("sweep: need 0 < --omega-min < --omega-max");
    if (cfg.points < 8) throw UsageError("sweep: --points must be >= 8");
    if (cfg.format != "csv" && cfg.format != "json")
        throw UsageError("sweep: format must be csv or json");

    const ModelParams params = make_params(cfg.n, 0.0);
    ScanOptions opts;
    opts.grid_points = cfg.points;
    const CouplingScanResult scan =
        optimal_coupling_scan(params, canon(cfg.omega_lo), canon(cfg.omega_hi), opts);

    HeaderFields header{
        {"command", "sweep"},
        {"n", std::to_string(cfg.n)},
        {"omega-min", format_sig(canon(cfg.omega_lo))},
        {"omega-max", format_sig(canon(cfg.omega_hi))},
        {"points", std::to_string(cfg.points)},
        {"output", cfg.output},
        {"format", cfg.format},
    };

    std::ofstream file;
    std::ostream& os = open_output(file, cfg.output);
    if (cfg.format == "json")
        os << io::coupling_scan_to_json(scan, header).dump(2) << "\n";
    else
        io::write_coupling_scan_csv(os, scan, header);
    std::cerr << "optimum coupling = " << format_sig(scan.optimum_coupling)
              << ", min xi = " << format_sig(scan.optimum_xi) << ", plateau ["
              << format_sig(scan.plateau_lo) << ", " << format_sig(scan.plateau_hi) << "]\n";
    return 0;
}

int run_ansatz(const AnsatzConfig& cfg) {
    if (cfg.n < 1) throw UsageError("ansatz: --n must be >= 1");
    if (cfg.alpha_points < 1 || cfg.phi_points < 1)
        throw UsageError("ansatz: --alpha-points and --phi-points must be >= 1");
    if (cfg.format != "csv" && cfg.format != "json")
        throw UsageError("ansatz: format must be csv or json");
    const bool even_n = cfg.n % 2 == 0;
    if (cfg.family != "auto" && cfg.family != "even" && cfg.family != "odd")
        throw UsageError("ansatz: --family must be auto, even or odd");
    if (cfg.family == "even" && !even_n)
        throw std::domain_error("ansatz: even-N trial state requested for odd N");
    if (cfg.family == "odd" && even_n)
        throw std::domain_error("ansatz: odd-N trial state requested for even N");

    const ModelParams params = make_params(cfg.n, 0.0);
    const double a_lo = canon(cfg.alpha_lo), a_hi = canon(cfg.alpha_hi);
    const double p_lo = canon(cfg.phi_lo), p_hi = canon(cfg.phi_hi);

    std::vector<std::array<double, 3>> rows;
    rows.reserve(static_cast<std::size_t>(cfg.alpha_points) * cfg.phi_points);
    for (int ia = 0; ia < cfg.alpha_points; ++ia) {
        const double alpha = cfg.alpha_points == 1
                                 ? a_lo
                                 : a_lo + ia * (a_hi - a_lo) / (cfg.alpha_points - 1);
        for (int ip = 0; ip < cfg.phi_points; ++ip) {
            const double phi =
                cfg.phi_points == 1 ? p_lo : p_lo + ip * (p_hi - p_lo) / (cfg.phi_points - 1);
            const SpinState state = even_n ? make_even_ansatz(params, alpha, phi)
                                           : make_odd_ansatz(params, alpha, phi);
            rows.push_back({alpha, phi, squeezing_report(state).xi});
        }
    }

    HeaderFields header{
        {"command", "ansatz"},
        {"n", std::to_string(cfg.n)},
        {"alpha-min", format_sig(a_lo)},
        {"alpha-max", format_sig(a_hi)},
        {"alpha-points", std::to_string(cfg.alpha_points)},
        {"phi-min", format_sig(p_lo)},
        {"phi-max", format_sig(p_hi)},
        {"phi-points", std::to_string(cfg.phi_points)},
        {"family", cfg.family},
        {"output", cfg.output},
        {"format", cfg.format},
    };

    std::ofstream file;
    std::ostream& os = open_output(file, cfg.output);
    if (cfg.format == "json")
        os << io::surface_to_json(rows, {"alpha", "phi", "xi"}, header).dump(2) << "\n";
    else
        io::write_surface_csv(os, rows, {"alpha", "phi", "xi"}, header);
    return 0;
}

int run_predict(const PredictConfig& cfg) {
    if (cfg.n < 1) throw UsageError("predict: --n must be >= 1");
    if (cfg.omega < 0.0) throw UsageError("predict: --omega must be >= 0");
    if (cfg.format != "text" && cfg.format != "json")
        throw UsageError("predict: format must be text or json");
    const ModelParams params = make_params(cfg.n, canon(cfg.omega));
    const PhasePrediction pred = predict_t0(params, params.omega_ratio);

    std::optional<double> t0_numeric;
    if (cfg.numeric) t0_numeric = find_first_jx_max(params, params.omega_ratio).time;

    std::optional<double> kappa;
    PhysicalParams phys = sodium_defaults(cfg.n);
    if (cfg.physical) {
        if (cfg.mass_u > 0.0) phys.atom_mass = cfg.mass_u * constants::atomic_mass_unit;
        if (cfg.trap_hz > 0.0) phys.trap_omega = 2.0 * std::numbers::pi * cfg.trap_hz;
        if (cfg.a_aa_nm > 0.0) phys.a_aa = cfg.a_aa_nm * 1e-9;
        if (cfg.a_bb_nm > 0.0) phys.a_bb = cfg.a_bb_nm * 1e-9;
        if (cfg.a_ab_nm > 0.0) phys.a_ab = cfg.a_ab_nm * 1e-9;
        kappa = kappa_thomas_fermi(phys);
    }

    const HeaderFields header{
        {"command", "predict"},
        {"n", std::to_string(cfg.n)},
        {"omega", format_sig(params.omega_ratio)},
        {"physical", cfg.physical ? "true" : "false"},
        {"numeric", cfg.numeric ? "true" : "false"},
        {"output", cfg.output},
        {"format", cfg.format},
    };

    std::ofstream file;
    std::ostream& os = open_output(file, cfg.output);
    if (cfg.format == "json") {
        nlohmann::json out;
        nlohmann::json cfg_json = nlohmann::json::object();
        for (const auto& [key, value] : header) cfg_json[key] = value;
        out["config"] = cfg_json;
        out["n"] = cfg.n;
        out["omega"] = params.omega_ratio;
        out["omega_eff"] = io::round_sig(pred.omega_eff);
        out["period"] = io::round_sig(pred.period);
        out["t0_estimate"] = io::round_sig(pred.t0_estimate);
        out["within_validity"] = pred.within_validity;
        if (t0_numeric) out["t0_numeric"] = io::round_sig(*t0_numeric);
        if (kappa) {
            out["kappa_hbar_omega"] = io::round_sig(*kappa);
            const double t_model = t0_numeric ? *t0_numeric : pred.t0_estimate;
            out["t0_lab_omega_units"] = io::round_sig(t_model / *kappa);
            out["t0_lab_seconds"] =
                io::round_sig(model_time_to_lab(t_model, *kappa, phys.trap_omega));
        }
        os << out.dump(2) << "\n";
    } else {
        for (const auto& [key, value] : header) os << "# " << key << " = " << value << "\n";
        os << "omega_eff = " << format_sig(pred.omega_eff) << " kappa\n";
        os << "period = " << format_sig(pred.period) << " /kappa\n";
        os << "t0_estimate = " << format_sig(pred.t0_estimate) << " /kappa\n";
        os << "within_validity = " << (pred.within_validity ? "yes" : "no") << "\n";
        if (t0_numeric) os << "t0_numeric = " << format_sig(*t0_numeric) << " /kappa\n";
        if (kappa) {
            const double t_model = t0_numeric ? *t0_numeric : pred.t0_estimate;
            os << "kappa = " << format_sig(*kappa) << " hbar*omega\n";
            os << "t0_lab = " << format_sig(t_model / *kappa) << " /omega\n";
            os << "t0_lab_ms = "
               << format_sig(1e3 * model_time_to_lab(t_model, *kappa, phys.trap_omega))
               << " ms\n";
        }
    }
    return 0;
}

}  // namespace sqz::cli
