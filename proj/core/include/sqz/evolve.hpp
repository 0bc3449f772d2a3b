#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sqz/hamiltonian.hpp"
#include "sqz/model.hpp"
#include "sqz/observables.hpp"
#include "sqz/state.hpp"

namespace sqz {

/// Exact propagator for one constant coupling value: the spectral
/// decomposition H = V diag(lambda) V^T of the symmetric tridiagonal
/// Hamiltonian, computed once and reused for all times.
class Propagator {
  public:
    Propagator(const ModelParams& params, double coupling);

    /// c(t+dt) = V exp(-i lambda dt) V^T c(t). Requires dt >= 0.
    SpinState propagate(const SpinState& state, double dt) const;

    /// Spectral coefficients a = V^T c, for repeated evaluation of the
    /// same trajectory at many times.
    Eigen::VectorXcd to_spectral(const SpinState& state) const;

    /// State at elapsed time dt from the state with spectral coefficients a.
    SpinState at_time(const Eigen::VectorXcd& spectral, double dt) const;

    const Eigen::VectorXd& eigenvalues() const { return evals_; }
    const Eigen::MatrixXd& eigenvectors() const { return evecs_; }
    const ModelParams& params() const { return params_; }
    double coupling() const { return coupling_; }
    int dim() const { return static_cast<int>(evals_.size()); }

  private:
    ModelParams params_;
    double coupling_;
    Eigen::VectorXd evals_;
    Eigen::MatrixXd evecs_;
};

/// Field-off evolution under 2 Jz^2 alone: c_m <- exp(-2 i m^2 dt) c_m.
/// The distribution |c_m|^2 is conserved exactly.
SpinState free_evolve(const SpinState& state, double dt);

/// Fixed-step classical 4th-order integration of i dc/dt = H c.
/// Independent cross-check for the spectral propagator; throws if the
/// accumulated norm drift exceeds 1e-6 (step too large).
SpinState reference_propagate(const ModelParams& params, double coupling,
                              const SpinState& state, double dt, int steps);

struct HistogramSnapshot {
    double requested_t = 0;  // time asked for
    double t = 0;            // nearest output-grid time actually used
    std::vector<std::pair<double, double>> histogram;
};

/// Sampled trajectory of one quench scenario.
struct TimeSeries {
    std::vector<double> times;  // strictly increasing
    std::vector<SqueezingReport> reports;
    std::vector<char> field_on;  // per sample
    QuenchProtocol protocol;
    std::vector<HistogramSnapshot> snapshots;

    std::size_t size() const { return times.size(); }
};

/// Starts from the initial CSS, evolves with the spectral propagator while
/// the field is on and analytically afterwards, and reports every dt_out.
/// The output grid always contains t_off as an exact sample.
TimeSeries simulate(const ModelParams& params, const QuenchProtocol& protocol,
                    double t_max, double dt_out,
                    const std::vector<double>& snapshot_times = {});

}  // namespace sqz
