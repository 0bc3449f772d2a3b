#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sqz/evolve.hpp"
#include "sqz/observables.hpp"
#include "sqz/state.hpp"

using namespace sqz;

TEST_CASE("CSS moments: <Jy> = <Jz> = 0, <Jz^2> = <Jy^2> = j/2") {
    for (int n : {2, 5, 40, 501}) {
        const double j = 0.5 * n;
        const SpinMoments mo = spin_moments(make_initial_css(make_params(n, 0.0)));
        CAPTURE(n);
        CHECK(std::abs(mo.jy) < 1e-12 * std::max(1.0, j));
        CHECK(std::abs(mo.jz) < 1e-12 * std::max(1.0, j));
        CHECK(mo.jzz == doctest::Approx(0.5 * j).epsilon(1e-12));
        CHECK(mo.jyy == doctest::Approx(0.5 * j).epsilon(1e-12));
        CHECK(mo.jzy_sym == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("|j,0> moments: <Jz^2> = 0, <Jy^2> = j(j+1)/2") {
    const ModelParams params = make_params(8, 0.0);
    const SpinState s = make_even_ansatz(params, 0.0, 0.0);  // |j,0>
    const double j = params.j();
    const SpinMoments mo = spin_moments(s);
    CHECK(mo.jzz == 0.0);
    CHECK(mo.jyy == doctest::Approx(0.5 * j * (j + 1)).epsilon(1e-13));
}

TEST_CASE("squeezing report of |1,0>: A=-1, B=0, C=1, xi=0") {
    SpinState s{Eigen::VectorXcd::Zero(3), 1.0};
    s.amps[1] = 1.0;
    const SqueezingReport r = squeezing_report(s);
    CHECK(r.a_moment == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(r.b_moment == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(r.c_moment == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.min_variance == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(r.xi == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(r.theta_min == 0.0);
    CHECK_FALSE(r.degenerate);
}

TEST_CASE("probability histogram") {
    SUBCASE("CSS N=2: (1/4, 1/2, 1/4)") {
        const auto hist = probability_histogram(make_initial_css(make_params(2, 1.0)));
        REQUIRE(hist.size() == 3);
        CHECK(hist[0].first == doctest::Approx(-1.0));
        CHECK(hist[0].second == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(hist[1].second == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(hist[2].second == doctest::Approx(0.25).epsilon(1e-14));
    }
    SUBCASE("|j,0> is a single peak; any histogram sums to 1") {
        const auto hist = probability_histogram(make_even_ansatz(make_params(6, 0.0), 0.0, 0.0));
        double total = 0.0;
        for (const auto& [m, p] : hist) total += p;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(hist[3].second == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(hist[2].second == 0.0);
    }
}

TEST_CASE("theta_min minimizes the directional variance over 360 angles") {
    // squeezed state partway through a constant-coupling run
    const ModelParams params = make_params(40, 3.0);
    const Propagator prop(params, 3.0);
    const SpinState s = prop.propagate(make_initial_css(params), 0.11);
    const SqueezingReport r = squeezing_report(s);
    const SpinMoments mo = spin_moments(s);
    for (int i = 0; i < 360; ++i) {
        const double theta = -0.5 * std::numbers::pi + i * std::numbers::pi / 360.0;
        const double var = mo.jyy * std::sin(theta) * std::sin(theta) +
                           mo.jzz * std::cos(theta) * std::cos(theta) +
                           mo.jzy_sym * std::sin(theta) * std::cos(theta);
        CHECK(var >= r.min_variance - 1e-10);
    }
    const double var_at_min = mo.jyy * std::sin(r.theta_min) * std::sin(r.theta_min) +
                              mo.jzz * std::cos(r.theta_min) * std::cos(r.theta_min) +
                              mo.jzy_sym * std::sin(r.theta_min) * std::cos(r.theta_min);
    CHECK(var_at_min == doctest::Approx(r.min_variance).epsilon(1e-12));
}

TEST_CASE("error paths") {
    SUBCASE("non-normalized state") {
        SpinState bad{Eigen::VectorXcd::Zero(3), 1.0};
        bad.amps[0] = 1.1;
        CHECK_THROWS_AS((void)spin_moments(bad), std::invalid_argument);
    }
    SUBCASE("mean spin off the x axis") {
        SpinState tilted{Eigen::VectorXcd::Zero(3), 1.0};
        tilted.amps[0] = 1.0 / std::sqrt(2.0);  // m = -1
        tilted.amps[1] = 1.0 / std::sqrt(2.0);  // m = 0 -> <Jz> = -1/2
        CHECK_THROWS_AS((void)squeezing_report(tilted), std::domain_error);
    }
}

namespace {

struct AnsatzMoments {
    double jzz, jyy, b, jx;
};

// Closed-form moments of the even trial state, from the 3-term expansion.
AnsatzMoments even_oracle(double j, double alpha, double phi) {
    const double s = std::sin(alpha), c = std::cos(alpha);
    const double sig2 = j * (j + 1);
    AnsatzMoments m{};
    m.jzz = s * s;
    m.jyy = 0.25 * ((sig2 - 2.0) * s * s + 2.0 * sig2 * c * c);
    m.b = -std::sqrt(2.0 * sig2) * s * c * std::sin(phi);
    m.jx = std::sqrt(2.0 * sig2) * s * c * std::cos(phi);
    return m;
}

// Closed-form moments of the odd trial state, from the 4-term expansion.
AnsatzMoments odd_oracle(double j, double alpha, double phi) {
    const double s = std::sin(alpha), c = std::cos(alpha);
    const double sig2 = j * (j + 1);
    const double beta = std::sqrt(sig2 - 0.75);
    const double gamma = std::sqrt(sig2 + 0.25);
    const double delta2 = sig2 - 3.75;
    AnsatzMoments m{};
    m.jzz = 0.25 * (9.0 * s * s + c * c);
    m.jyy = 0.25 * (delta2 * s * s + beta * beta * c * c + gamma * gamma * c * c +
                    beta * beta * s * s + 2.0 * beta * gamma * s * c * std::cos(phi));
    m.b = -2.0 * beta * s * c * std::sin(phi);
    m.jx = beta * s * c * std::cos(phi) - 0.5 * gamma * c * c;
    return m;
}

}  // namespace

TEST_CASE("trial states reproduce the generic moment formulas") {
    SUBCASE("even N") {
        const ModelParams params = make_params(8, 0.0);
        for (double alpha : {0.15, 0.7, 1.4})
            for (double phi : {0.0, 1.1, 4.4}) {
                const SpinMoments mo = spin_moments(make_even_ansatz(params, alpha, phi));
                const AnsatzMoments ref = even_oracle(params.j(), alpha, phi);
                CAPTURE(alpha);
                CAPTURE(phi);
                CHECK(std::abs(mo.jzz - ref.jzz) < 1e-12);
                CHECK(std::abs(mo.jyy - ref.jyy) < 1e-12 * std::max(1.0, ref.jyy));
                CHECK(std::abs(mo.jzy_sym - ref.b) < 1e-12 * std::max(1.0, std::abs(ref.b)));
                CHECK(std::abs(mo.jx - ref.jx) < 1e-12 * std::max(1.0, std::abs(ref.jx)));
            }
    }
    SUBCASE("odd N") {
        const ModelParams params = make_params(9, 0.0);
        for (double alpha : {0.2, 0.9})
            for (double phi : {0.6, 2.3, 5.8}) {
                const SpinMoments mo = spin_moments(make_odd_ansatz(params, alpha, phi));
                const AnsatzMoments ref = odd_oracle(params.j(), alpha, phi);
                CAPTURE(alpha);
                CAPTURE(phi);
                CHECK(std::abs(mo.jzz - ref.jzz) < 1e-12);
                CHECK(std::abs(mo.jyy - ref.jyy) < 1e-12 * std::max(1.0, ref.jyy));
                CHECK(std::abs(mo.jzy_sym - ref.b) < 1e-12 * std::max(1.0, std::abs(ref.b)));
                CHECK(std::abs(mo.jx - ref.jx) < 1e-12 * std::max(1.0, std::abs(ref.jx)));
            }
    }
}

TEST_CASE("C identity: C = j(j+1) - <Jx^2> for arbitrary states") {
    const ModelParams params = make_params(100, 7.0);
    const Propagator prop(params, 7.0);
    const double j = params.j();
    for (double t : {0.0, 0.02, 0.013, 0.31}) {
        const SpinState s = prop.propagate(make_initial_css(params), t);
        const SpinMoments mo = spin_moments(s);
        CHECK(std::abs((mo.jzz + mo.jyy) - (j * (j + 1) - mo.jxx)) < 1e-10);
    }
}
