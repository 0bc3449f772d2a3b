#include "sqz/evolve.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sqz {

Propagator::Propagator(const ModelParams& params, double coupling)
    : params_(params), coupling_(coupling) {
    const TridiagonalHamiltonian h = build_hamiltonian(params, coupling);
    const int n = h.dim();
    evals_ = h.diag;
    Eigen::VectorXd off = h.offdiag;
    evecs_.resize(n, n);
    const int info = LAPACKE_dstevd(LAPACK_COL_MAJOR, 'V', n, evals_.data(),
                                    off.data(), evecs_.data(), n);
    if (info != 0)
        throw std::runtime_error("Propagator: eigensolver did not converge (N=" +
                                 std::to_string(params.n_atoms) + ", coupling=" +
                                 std::to_string(coupling) + ", info=" +
                                 std::to_string(info) + ")");
}

Eigen::VectorXcd Propagator::to_spectral(const SpinState& state) const {
    if (state.dim() != dim())
        throw std::invalid_argument("Propagator::to_spectral: dimension mismatch");
    Eigen::VectorXcd a(dim());
    a.real() = evecs_.transpose() * state.amps.real();
    a.imag() = evecs_.transpose() * state.amps.imag();
    return a;
}

SpinState Propagator::at_time(const Eigen::VectorXcd& spectral, double dt) const {
    if (static_cast<int>(spectral.size()) != dim())
        throw std::invalid_argument("Propagator::at_time: dimension mismatch");
    if (!(dt >= 0.0))
        throw std::invalid_argument("Propagator::at_time: dt must be >= 0");
    Eigen::VectorXcd b(dim());
    for (int k = 0; k < dim(); ++k)
        b[k] = spectral[k] * std::polar(1.0, -evals_[k] * dt);
    SpinState out;
    out.j = params_.j();
    out.amps.resize(dim());
    out.amps.real() = evecs_ * b.real();
    out.amps.imag() = evecs_ * b.imag();
    return out;
}

SpinState Propagator::propagate(const SpinState& state, double dt) const {
    return at_time(to_spectral(state), dt);
}

SpinState free_evolve(const SpinState& state, double dt) {
    if (!(dt >= 0.0))
        throw std::invalid_argument("free_evolve: dt must be >= 0");
    SpinState out;
    out.j = state.j;
    out.amps.resize(state.dim());
    for (int k = 0; k < state.dim(); ++k) {
        const double m = state.m_of(k);
        out.amps[k] = state.amps[k] * std::polar(1.0, -2.0 * m * m * dt);
    }
    return out;
}

SpinState reference_propagate(const ModelParams& params, double coupling,
                              const SpinState& state, double dt, int steps) {
    if (steps < 1)
        throw std::invalid_argument("reference_propagate: steps must be >= 1");
    if (!(dt >= 0.0))
        throw std::invalid_argument("reference_propagate: dt must be >= 0");
    const TridiagonalHamiltonian h = build_hamiltonian(params, coupling);
    if (state.dim() != h.dim())
        throw std::invalid_argument("reference_propagate: dimension mismatch");

    const std::complex<double> minus_i(0.0, -1.0);
    const double step = dt / steps;
    Eigen::VectorXcd c = state.amps;
    for (int n = 0; n < steps; ++n) {
        const Eigen::VectorXcd k1 = minus_i * h.apply(c);
        const Eigen::VectorXcd k2 = minus_i * h.apply(c + 0.5 * step * k1);
        const Eigen::VectorXcd k3 = minus_i * h.apply(c + 0.5 * step * k2);
        const Eigen::VectorXcd k4 = minus_i * h.apply(c + step * k3);
        c += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    const double drift = std::abs(c.squaredNorm() - state.norm_sq());
    if (drift > 1e-6)
        throw std::runtime_error("reference_propagate: norm drift " + std::to_string(drift) +
                                 " exceeds 1e-6, step too large");
    return {std::move(c), state.j};
}

TimeSeries simulate(const ModelParams& params, const QuenchProtocol& protocol,
                    double t_max, double dt_out,
                    const std::vector<double>& snapshot_times) {
    params.validate();
    if (!(t_max > 0.0)) throw std::invalid_argument("simulate: t_max must be > 0");
    if (!(dt_out > 0.0)) throw std::invalid_argument("simulate: dt_out must be > 0");

    const double tol = 1e-12 * std::max(1.0, t_max);
    std::vector<double> times;
    const auto n_steps = static_cast<long>(std::floor(t_max / dt_out + 1e-9));
    times.reserve(n_steps + 3);
    for (long k = 0; k <= n_steps; ++k) times.push_back(k * dt_out);
    if (t_max - times.back() > tol) times.push_back(t_max);
    if (std::isfinite(protocol.t_off) && protocol.t_off >= 0.0 && protocol.t_off <= t_max)
        times.push_back(protocol.t_off);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end(),
                            [tol](double a, double b) { return std::abs(a - b) <= tol; }),
                times.end());

    const Propagator prop(params, protocol.coupling);
    const SpinState css = make_initial_css(params);
    const Eigen::VectorXcd a0 = prop.to_spectral(css);

    SpinState at_off;
    const bool quenches = std::isfinite(protocol.t_off) && protocol.t_off <= t_max;
    if (quenches) at_off = prop.at_time(a0, std::max(0.0, protocol.t_off));

    TimeSeries series;
    series.protocol = protocol;
    series.times = times;
    series.reports.reserve(times.size());
    series.field_on.reserve(times.size());

    auto state_at = [&](double t) {
        if (t <= protocol.t_off) return prop.at_time(a0, t);
        return free_evolve(at_off, t - protocol.t_off);
    };

    for (double t : times) {
        series.reports.push_back(squeezing_report(state_at(t)));
        series.field_on.push_back(protocol.field_on(t) ? 1 : 0);
    }

    for (double want : snapshot_times) {
        auto nearest = std::min_element(times.begin(), times.end(),
                                        [want](double a, double b) {
                                            return std::abs(a - want) < std::abs(b - want);
                                        });
        HistogramSnapshot snap;
        snap.requested_t = want;
        snap.t = *nearest;
        snap.histogram = probability_histogram(state_at(snap.t));
        series.snapshots.push_back(std::move(snap));
    }
    return series;
}

}  // namespace sqz
