#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "sqz/hamiltonian.hpp"

using namespace sqz;

TEST_CASE("N=2, coupling=1: spin-1 matrix by hand") {
    const TridiagonalHamiltonian h = build_hamiltonian(make_params(2, 1.0), 1.0);
    REQUIRE(h.dim() == 3);
    CHECK(h.diag[0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(h.diag[1] == 0.0);
    CHECK(h.diag[2] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(h.offdiag[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(h.offdiag[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("coupling=0: diagonal 2 m^2") {
    const TridiagonalHamiltonian h = build_hamiltonian(make_params(5, 0.0), 0.0);
    CHECK(h.offdiag.cwiseAbs().maxCoeff() == 0.0);
    for (int k = 0; k < h.dim(); ++k) {
        const double m = k - 2.5;
        CHECK(h.diag[k] == doctest::Approx(2.0 * m * m).epsilon(1e-15));
    }
}

TEST_CASE("N=3, coupling=2: gap of the two lowest parity-odd levels is 2 sqrt(12)") {
    const TridiagonalHamiltonian h = build_hamiltonian(make_params(3, 2.0), 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.dense());
    std::vector<double> odd_levels;
    for (int i = 0; i < 4; ++i) {
        const Eigen::VectorXd v = es.eigenvectors().col(i);
        // odd under m -> -m: v reversed equals -v
        const double odd_defect = (v.reverse() + v).cwiseAbs().maxCoeff();
        if (odd_defect < 1e-9) odd_levels.push_back(es.eigenvalues()[i]);
    }
    REQUIRE(odd_levels.size() == 2);
    CHECK(odd_levels[1] - odd_levels[0] ==
          doctest::Approx(2.0 * std::sqrt(12.0)).epsilon(1e-12));
}

TEST_CASE("dense() is exactly symmetric tridiagonal") {
    const TridiagonalHamiltonian h = build_hamiltonian(make_params(12, 3.7), 3.7);
    const Eigen::MatrixXd m = h.dense();
    CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
    for (int r = 0; r < h.dim(); ++r)
        for (int c = 0; c < h.dim(); ++c)
            if (std::abs(r - c) > 1) CHECK(m(r, c) == 0.0);
}

TEST_CASE("apply() agrees with the dense product") {
    const TridiagonalHamiltonian h = build_hamiltonian(make_params(9, 2.3), 2.3);
    Eigen::VectorXcd c(h.dim());
    for (int k = 0; k < h.dim(); ++k)
        c[k] = std::complex<double>(std::sin(1.7 * k + 0.3), std::cos(0.9 * k));
    c /= std::sqrt(c.squaredNorm());
    const Eigen::VectorXcd direct = h.apply(c);
    const Eigen::VectorXcd dense = h.dense() * c;
    CHECK((direct - dense).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("negative coupling is rejected") {
    CHECK_THROWS_AS(build_hamiltonian(make_params(4, 0.0), -0.1), std::invalid_argument);
}
