#include "sqz/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sqz {

double SpinState::parity_defect() const {
    const int n = dim();
    const double sign = parity_sign();
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        // index of -m is (dim-1) - k
        const double d = std::abs(amps[n - 1 - k] - sign * amps[k]);
        worst = std::max(worst, d);
    }
    return worst;
}

namespace {

double log_binomial(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

SpinState make_initial_css(const ModelParams& params) {
    params.validate();
    const double j = params.j();
    const int dim = params.dim();
    const double two_j = 2.0 * j;
    Eigen::VectorXcd c(dim);
    for (int k = 0; k < dim; ++k) {
        // j + m = k, always a nonnegative integer, so the sign is (-1)^k
        const double mag = std::exp(0.5 * log_binomial(two_j, k) - j * std::numbers::ln2);
        c[k] = (k % 2 == 0) ? mag : -mag;
    }
    // remove the lgamma rounding drift, noticeable for N ~ 1e3
    c /= std::sqrt(c.squaredNorm());
    return {std::move(c), j};
}

SpinState make_even_ansatz(const ModelParams& params, double alpha, double phi) {
    params.validate();
    if (!params.even())
        throw std::invalid_argument("make_even_ansatz: N must be even, got " +
                                    std::to_string(params.n_atoms));
    if (params.n_atoms < 2)
        throw std::invalid_argument("make_even_ansatz: needs N >= 2");
    const double j = params.j();
    const int k0 = params.n_atoms / 2;  // index of m = 0
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(params.dim());
    const std::complex<double> side =
        std::polar(std::sin(alpha) / std::sqrt(2.0), phi);
    c[k0 + 1] = side;
    c[k0 - 1] = side;
    c[k0] = std::cos(alpha);
    return {std::move(c), j};
}

SpinState make_odd_ansatz(const ModelParams& params, double alpha, double phi) {
    params.validate();
    if (params.even())
        throw std::invalid_argument("make_odd_ansatz: N must be odd, got " +
                                    std::to_string(params.n_atoms));
    if (params.n_atoms < 3)
        throw std::invalid_argument("make_odd_ansatz: needs N >= 3");
    const double j = params.j();
    const int kp = (params.n_atoms + 1) / 2;  // index of m = +1/2
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(params.dim());
    const std::complex<double> outer =
        std::polar(std::sin(alpha) / std::sqrt(2.0), phi);
    const double inner = std::cos(alpha) / std::sqrt(2.0);
    c[kp + 1] = outer;       // m = +3/2
    c[kp - 2] = -outer;      // m = -3/2
    c[kp] = inner;           // m = +1/2
    c[kp - 1] = -inner;      // m = -1/2
    return {std::move(c), j};
}

double fidelity(const SpinState& a, const SpinState& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("fidelity: dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    return std::norm(a.amps.dot(b.amps));
}

}  // namespace sqz
