#pragma once

#include <utility>
#include <vector>

#include "sqz/state.hpp"

namespace sqz {

/// First and second moments of the collective spin, computed from the
/// tridiagonal action of the ladder operators on the amplitude vector.
struct SpinMoments {
    double jx = 0, jy = 0, jz = 0;
    double jxx = 0, jyy = 0, jzz = 0;
    double jzy_sym = 0;  // <Jz Jy + Jy Jz>
};

/// Throws if the state norm deviates from 1 by more than 1e-8.
SpinMoments spin_moments(const SpinState& state);

/// Squeezing diagnostics at one instant, for mean spin along x:
///   A = <Jz^2 - Jy^2>, B = <Jz Jy + Jy Jz>, C = <Jz^2 + Jy^2>,
///   (dJ_n)^2_min = C/2 - sqrt(A^2+B^2)/2,  xi = dJ_min / sqrt(j/2),
///   2 theta_min = atan2(-B, -A)  in (-pi, pi].
struct SqueezingReport {
    double xi = 0;
    double theta_min = 0;  // radians in (-pi/2, pi/2]; 0 when degenerate
    double a_moment = 0;
    double b_moment = 0;
    double c_moment = 0;
    double jx_mean = 0;
    double min_variance = 0;
    bool degenerate = false;  // sqrt(A^2+B^2) < 1e-12 C, e.g. the initial CSS
};

/// Throws if |<Jy>| or |<Jz>| exceeds 1e-8 * j (the minimal-variance
/// plane is only defined for mean spin along x; zero-mean states such as
/// |j,0> satisfy the bound and are reported in the y-z plane).
SqueezingReport squeezing_report(const SpinState& state);

/// (m, |c_m|^2) in ascending m.
std::vector<std::pair<double, double>> probability_histogram(const SpinState& state);

}  // namespace sqz
