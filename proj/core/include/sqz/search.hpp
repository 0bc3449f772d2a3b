#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sqz/evolve.hpp"
#include "sqz/model.hpp"

namespace sqz {

struct ExtremumResult {
    enum class Kind { squeezing_min, jx_max };
    double time = 0;   // units of 1/kappa
    double value = 0;  // xi at a squeezing minimum, <Jx> at a Jx maximum
    Kind kind = Kind::squeezing_min;
    double bracket_lo = 0;
    double bracket_hi = 0;
    double refinement_tolerance = 0;
};

struct SearchOptions {
    double scan_dt = 0.0;     // 0 = auto: T/200 with T = 2 pi / sqrt(2 coupling N)
    double refine_tol = 1e-6; // |t - t*| target, units of 1/kappa
    double horizon = 0.0;     // 0 = auto: 3 T
};

/// Scans xi(t) from t = 0, brackets the first local minimum and refines it
/// by golden-section search. Throws if no minimum appears before the horizon.
ExtremumResult find_first_squeezing_min(const ModelParams& params, double coupling,
                                        const SearchOptions& opts = {});

/// Locates the first interior maximum of <Jx>(t) through the sign change of
/// B(t) (B = -d<Jx>/dt / 2), refined by bisection until |B| < 1e-8 j^2.
ExtremumResult find_first_jx_max(const ModelParams& params, double coupling,
                                 const SearchOptions& opts = {});

/// Pendulum estimate of the zero-angle time:
///   omega_eff = sqrt(2 coupling N), T = 2 pi / omega_eff, t0 ~ T/4.
/// Quoted as valid for N >= 1e3 and 1 < coupling << N.
struct PhasePrediction {
    double omega_eff = 0;
    double period = 0;
    double t0_estimate = 0;
    bool within_validity = false;
};
PhasePrediction predict_t0(const ModelParams& params, double coupling);

/// Energy-conservation identity at a B = 0, A < 0 instant:
/// returns the predicted xi^2 = 1 - coupling (1 + <Jx>/j).
/// Throws unless |B| < 1e-8 j^2 and A < 0.
double xi0_identity(const SqueezingReport& report, const ModelParams& params,
                    double coupling);

struct CouplingScanPoint {
    double coupling = 0;
    double min_xi = 0;
    double tau0 = 0;  // time of the first squeezing minimum
};

struct CouplingScanResult {
    std::vector<CouplingScanPoint> grid;
    double optimum_coupling = 0;
    double optimum_xi = 0;
    double optimum_tau0 = 0;
    double plateau_lo = 0;
    double plateau_hi = 0;
};

struct ScanOptions {
    int grid_points = 16;
    double coupling_refine_tol = 1e-3;  // golden-section window on the coupling axis
    // Plateau rule: couplings whose min-xi matches the optimum to
    // `plateau_digits` significant digits; set plateau_rel_tol to use a plain
    // relative tolerance instead.
    int plateau_digits = 5;
    std::optional<double> plateau_rel_tol{};
    double plateau_endpoint_tol = 1e-3;
    SearchOptions search{};
    int workers = 0;  // 0 = hardware concurrency (capped)
};

/// Evaluates min-xi(coupling) on a grid, golden-refines around the best grid
/// point and bisects the plateau edges.
CouplingScanResult optimal_coupling_scan(const ModelParams& params, double coupling_lo,
                                         double coupling_hi, const ScanOptions& opts = {});

/// Least-squares slope of log(optimal coupling) vs log N.
/// Requires at least 3 distinct N spanning the fit.
double power_rule_fit(std::span<const double> n_values, std::span<const double> optima);

}  // namespace sqz
