#include "sqz/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sqz {

namespace {

// Ladder amplitude coupling m and m+1: sqrt(j(j+1) - m(m+1)).
double ladder(double j, double m) { return std::sqrt(j * (j + 1.0) - m * (m + 1.0)); }

}  // namespace

SpinMoments spin_moments(const SpinState& state) {
    const double norm_dev = std::abs(state.norm_sq() - 1.0);
    if (norm_dev > 1e-8)
        throw std::invalid_argument("spin_moments: state is not normalized (|norm^2 - 1| = " +
                                    std::to_string(norm_dev) + ")");
    const double j = state.j;
    const int dim = state.dim();
    const Eigen::VectorXcd& c = state.amps;

    Eigen::VectorXcd jp = Eigen::VectorXcd::Zero(dim);  // J+ c
    Eigen::VectorXcd jm = Eigen::VectorXcd::Zero(dim);  // J- c
    Eigen::VectorXcd jz(dim);
    for (int k = 0; k < dim; ++k) {
        const double m = k - j;
        jz[k] = m * c[k];
        if (k + 1 < dim) {
            const double s = ladder(j, m);
            jp[k + 1] += s * c[k];
            jm[k] += s * c[k + 1];
        }
    }
    const Eigen::VectorXcd jx = 0.5 * (jp + jm);
    const Eigen::VectorXcd jy = std::complex<double>(0.0, -0.5) * (jp - jm);

    // Extended-precision reductions: the C = j(j+1) - <Jx^2> identity is
    // checked at 1e-10 absolute with moments of order j^2, which plain
    // double accumulation cannot guarantee for N ~ 1e3.
    auto dot_re = [dim](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
        long double acc = 0.0L;
        for (int k = 0; k < dim; ++k)
            acc += static_cast<long double>(a[k].real()) * b[k].real() +
                   static_cast<long double>(a[k].imag()) * b[k].imag();
        return acc;
    };
    auto dot_im = [dim](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
        long double acc = 0.0L;
        for (int k = 0; k < dim; ++k)
            acc += static_cast<long double>(a[k].real()) * b[k].imag() -
                   static_cast<long double>(a[k].imag()) * b[k].real();
        return acc;
    };
    const long double nsq = dot_re(c, c);

    // First moments: Hermitian expectations, so the imaginary residue is
    // pure rounding; verify and discard it.
    const double imag_tol = 1e-10 * std::max(1.0, j);
    const double worst_imag = std::max({std::abs(double(dot_im(c, jx))),
                                        std::abs(double(dot_im(c, jy))),
                                        std::abs(double(dot_im(c, jz)))});
    if (worst_imag > imag_tol)
        throw std::runtime_error("spin_moments: imaginary residue " +
                                 std::to_string(worst_imag) + " exceeds tolerance");

    SpinMoments mo;
    mo.jx = static_cast<double>(dot_re(c, jx) / nsq);
    mo.jy = static_cast<double>(dot_re(c, jy) / nsq);
    mo.jz = static_cast<double>(dot_re(c, jz) / nsq);
    mo.jxx = static_cast<double>(dot_re(jx, jx) / nsq);
    mo.jyy = static_cast<double>(dot_re(jy, jy) / nsq);
    mo.jzz = static_cast<double>(dot_re(jz, jz) / nsq);
    mo.jzy_sym = static_cast<double>(2.0L * dot_re(jz, jy) / nsq);
    return mo;
}

SqueezingReport squeezing_report(const SpinState& state) {
    const SpinMoments mo = spin_moments(state);
    const double j = state.j;
    const double transverse_tol = 1e-8 * j;
    if (std::abs(mo.jy) > transverse_tol || std::abs(mo.jz) > transverse_tol)
        throw std::domain_error(
            "squeezing_report: mean spin is not along x (<Jy> = " + std::to_string(mo.jy) +
            ", <Jz> = " + std::to_string(mo.jz) + "); xi is undefined");

    SqueezingReport r;
    r.a_moment = mo.jzz - mo.jyy;
    r.b_moment = mo.jzy_sym;
    r.c_moment = mo.jzz + mo.jyy;
    r.jx_mean = mo.jx;

    const double amp = std::hypot(r.a_moment, r.b_moment);
    r.degenerate = amp < 1e-12 * r.c_moment;
    r.min_variance = std::max(0.0, 0.5 * (r.c_moment - amp));
    r.xi = std::sqrt(r.min_variance / (0.5 * j));
    if (r.degenerate) {
        r.theta_min = 0.0;
    } else {
        double theta = 0.5 * std::atan2(-r.b_moment, -r.a_moment);
        if (theta <= -0.5 * std::numbers::pi) theta += std::numbers::pi;
        r.theta_min = theta;
    }
    return r;
}

std::vector<std::pair<double, double>> probability_histogram(const SpinState& state) {
    std::vector<std::pair<double, double>> out;
    out.reserve(state.dim());
    for (int k = 0; k < state.dim(); ++k)
        out.emplace_back(state.m_of(k), std::norm(state.amps[k]));
    return out;
}

}  // namespace sqz
