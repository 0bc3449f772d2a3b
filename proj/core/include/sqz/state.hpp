#pragma once

#include <Eigen/Dense>
#include <complex>

#include "sqz/model.hpp"

namespace sqz {

/// State of the collective spin in the Dicke basis |j,m>, m = -j..j.
/// Amplitudes are stored at index k = m + j in {0, ..., 2j}, so even and
/// odd N share one layout.
struct SpinState {
    Eigen::VectorXcd amps;
    double j = 0.0;

    int dim() const { return static_cast<int>(amps.size()); }
    double m_of(int k) const { return k - j; }
    double norm_sq() const { return amps.squaredNorm(); }

    /// +1 for even N (c_{-m} = c_m), -1 for odd N (c_{-m} = -c_m).
    int parity_sign() const { return static_cast<int>(std::lround(2.0 * j)) % 2 == 0 ? 1 : -1; }

    /// max_m |c_{-m} - s c_m| with s the parity sign of this N.
    double parity_defect() const;
};

/// Coherent spin state |j,-j>_x = exp(-i pi Jy / 2) |j,-j>:
/// c_m(0) = (-1)^{j+m} 2^{-j} sqrt(C(2j, j+m)), evaluated in log space.
SpinState make_initial_css(const ModelParams& params);

/// Three-component trial state for even N:
///   e^{i phi} sin(alpha)/sqrt(2) (|j,1> + |j,-1>) + cos(alpha) |j,0>.
SpinState make_even_ansatz(const ModelParams& params, double alpha, double phi);

/// Four-component trial state for odd N:
///   e^{i phi} sin(alpha)/sqrt(2) (|j,3/2> - |j,-3/2>)
///   + cos(alpha)/sqrt(2) (|j,1/2> - |j,-1/2>).
SpinState make_odd_ansatz(const ModelParams& params, double alpha, double phi);

/// |<a|b>|^2, invariant under global phases. Throws on dimension mismatch.
double fidelity(const SpinState& a, const SpinState& b);

}  // namespace sqz
