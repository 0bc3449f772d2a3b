#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

#include "sqz/observables.hpp"
#include "sqz/state.hpp"

using namespace sqz;

namespace {

// Brute-force oracle: exp(-i pi Jy / 2) |j,-j> from the dense Jy matrix,
// via the eigendecomposition of the Hermitian Jy.
Eigen::VectorXcd rotated_lowest_weight(int n_atoms) {
    const double j = 0.5 * n_atoms;
    const int dim = n_atoms + 1;
    Eigen::MatrixXcd jy = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k + 1 < dim; ++k) {
        const double m = k - j;
        const double s = std::sqrt(j * (j + 1) - m * (m + 1));
        jy(k + 1, k) = std::complex<double>(0, -0.5) * s;  // from J+ / (2i)
        jy(k, k + 1) = std::complex<double>(0, 0.5) * s;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(jy);
    Eigen::VectorXcd phases(dim);
    for (int k = 0; k < dim; ++k)
        phases[k] = std::polar(1.0, -0.5 * std::numbers::pi * es.eigenvalues()[k]);
    Eigen::VectorXcd start = Eigen::VectorXcd::Zero(dim);
    start[0] = 1.0;  // |j,-j>
    return es.eigenvectors() *
           (phases.asDiagonal() * (es.eigenvectors().adjoint() * start));
}

}  // namespace

TEST_CASE("initial CSS matches the brute-force rotation") {
    for (int n : {2, 3, 7, 24}) {
        const SpinState css = make_initial_css(make_params(n, 1.0));
        const Eigen::VectorXcd ref = rotated_lowest_weight(n);
        REQUIRE(css.dim() == n + 1);
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(std::abs(css.amps[k] - ref[k]) < 1e-12);
        }
    }
}

TEST_CASE("initial CSS, N=2: amplitudes (1/2, -1/sqrt2, 1/2)") {
    const SpinState css = make_initial_css(make_params(2, 1.0));
    CHECK(css.amps[0].real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(css.amps[1].real() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(css.amps[2].real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(css.amps[0].imag() == 0.0);
}

TEST_CASE("initial CSS: unit norm and <Jx> = -j for any N") {
    for (int n : {1, 2, 3, 17, 100, 1000, 2001}) {
        const SpinState css = make_initial_css(make_params(n, 0.0));
        const double j = 0.5 * n;
        CHECK(std::abs(css.norm_sq() - 1.0) < 1e-12);
        const SpinMoments mo = spin_moments(css);
        CHECK(std::abs(mo.jx + j) < 1e-10 * j);
        CHECK(std::abs(mo.jy) < 1e-10 * j);
        CHECK(std::abs(mo.jz) < 1e-10 * j);
        CHECK(css.parity_defect() < 1e-14);
    }
}

TEST_CASE("initial CSS, N=1000: xi = 1 and <Jz^2> = <Jy^2> = 250") {
    const SpinState css = make_initial_css(make_params(1000, 10.8));
    const SpinMoments mo = spin_moments(css);
    CHECK(mo.jzz == doctest::Approx(250.0).epsilon(1e-12));
    CHECK(mo.jyy == doctest::Approx(250.0).epsilon(1e-12));
    const SqueezingReport r = squeezing_report(css);
    CHECK(r.xi == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.degenerate);
    CHECK(r.theta_min == 0.0);
}

TEST_CASE("even trial state") {
    const ModelParams params = make_params(8, 0.0);

    SUBCASE("alpha = 0 gives |j,0> with xi = 0") {
        const SpinState s = make_even_ansatz(params, 0.0, 0.3);
        CHECK(std::abs(s.amps[4] - 1.0) < 1e-15);
        CHECK(std::abs(s.norm_sq() - 1.0) < 1e-15);
        CHECK(squeezing_report(s).xi == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("alpha = pi/2, phi = 0 gives (|j,1> + |j,-1>)/sqrt2") {
        const SpinState s = make_even_ansatz(params, 0.5 * std::numbers::pi, 0.0);
        CHECK(std::abs(s.amps[5] - 1.0 / std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(s.amps[3] - 1.0 / std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(s.norm_sq() - 1.0) < 1e-14);
    }
    SUBCASE("norm 1 across the (alpha, phi) plane") {
        for (double alpha : {0.1, 0.9, 2.2})
            for (double phi : {0.0, 1.3, 5.0}) {
                const SpinState s = make_even_ansatz(params, alpha, phi);
                CHECK(std::abs(s.norm_sq() - 1.0) < 1e-14);
                CHECK(s.parity_defect() < 1e-15);
            }
    }
    SUBCASE("rejects odd N") {
        CHECK_THROWS_AS(make_even_ansatz(make_params(7, 0.0), 0.1, 0.0),
                        std::invalid_argument);
    }
}

TEST_CASE("odd trial state") {
    const ModelParams params = make_params(9, 0.0);

    SUBCASE("alpha = 0 gives (|j,1/2> - |j,-1/2>)/sqrt2") {
        const SpinState s = make_odd_ansatz(params, 0.0, 1.0);
        const int kp = 5;  // m = +1/2 for N = 9
        CHECK(std::abs(s.amps[kp] - 1.0 / std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(s.amps[kp - 1] + 1.0 / std::sqrt(2.0)) < 1e-15);
    }
    SUBCASE("norm 1 and odd parity for any alpha, phi") {
        for (double alpha : {0.2, 1.1, 2.9})
            for (double phi : {0.4, 2.0, 6.1}) {
                const SpinState s = make_odd_ansatz(params, alpha, phi);
                CHECK(std::abs(s.norm_sq() - 1.0) < 1e-14);
                CHECK(s.parity_defect() < 1e-15);
            }
    }
    SUBCASE("rejects even N and N = 1") {
        CHECK_THROWS_AS(make_odd_ansatz(make_params(8, 0.0), 0.1, 0.0),
                        std::invalid_argument);
        CHECK_THROWS_AS(make_odd_ansatz(make_params(1, 0.0), 0.1, 0.0),
                        std::invalid_argument);
    }
}

TEST_CASE("fidelity") {
    const SpinState css = make_initial_css(make_params(6, 1.0));
    CHECK(fidelity(css, css) == doctest::Approx(1.0).epsilon(1e-14));

    SpinState a{Eigen::VectorXcd::Zero(7), 3.0};
    SpinState b{Eigen::VectorXcd::Zero(7), 3.0};
    a.amps[2] = 1.0;
    b.amps[5] = 1.0;
    CHECK(fidelity(a, b) == 0.0);

    // global phase invariance
    SpinState c = a;
    c.amps *= std::polar(1.0, 1.234);
    CHECK(fidelity(a, c) == doctest::Approx(1.0).epsilon(1e-14));

    const SpinState other = make_initial_css(make_params(4, 1.0));
    CHECK_THROWS_AS((void)fidelity(css, other), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_params(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_params(-3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_params(10, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(QuenchProtocol::off_at(1.0, -1.0), std::invalid_argument);
    const QuenchProtocol q = QuenchProtocol::off_at(2.0, 0.5);
    CHECK(q.omega_at(0.499) == 2.0);
    CHECK(q.omega_at(0.5) == 0.0);  // left-continuous step
    CHECK(QuenchProtocol::never(1.0).field_on(1e12));
}
