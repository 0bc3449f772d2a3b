#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqz::cli {

/// Raised for malformed configuration; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SimulateConfig {
    int n = 0;
    double omega = -1.0;
    double t_max = 0.0;        // 0 = auto
    double dt_out = 0.0;       // 0 = auto: t_max / 400
    std::string quench = "never";  // auto | never | at <t> | <t>
    std::string snapshots;         // comma-separated times
    std::string output;            // empty or "-" = stdout
    std::string format = "csv";
};

struct SweepConfig {
    int n = 0;
    double omega_lo = 0.0;
    double omega_hi = 0.0;
    int points = 16;
    std::string output;
    std::string format = "csv";
};

struct AnsatzConfig {
    int n = 0;
    double alpha_lo = 0.0, alpha_hi = 0.0;
    int alpha_points = 0;
    double phi_lo = 0.0, phi_hi = 0.0;
    int phi_points = 0;
    std::string family = "auto";  // auto | even | odd
    std::string output;
    std::string format = "csv";
};

struct PredictConfig {
    int n = 0;
    double omega = -1.0;
    bool physical = false;
    bool numeric = true;
    double mass_u = 0.0;     // 0 = sodium default
    double trap_hz = 0.0;    // 0 = 500 Hz
    double a_aa_nm = 0.0, a_bb_nm = 0.0, a_ab_nm = 0.0;  // 0 = sodium defaults
    std::string output;
    std::string format = "text";  // text | json
};

int run_simulate(const SimulateConfig& cfg);
int run_sweep(const SweepConfig& cfg);
int run_ansatz(const AnsatzConfig& cfg);
int run_predict(const PredictConfig& cfg);

}  // namespace sqz::cli
