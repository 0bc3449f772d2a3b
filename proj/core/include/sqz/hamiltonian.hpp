#pragma once

#include <Eigen/Dense>

#include "sqz/model.hpp"
#include "sqz/state.hpp"

namespace sqz {

/// H = 2 Jz^2 + coupling * Jx in the Dicke basis, kappa = 1 units.
/// Real symmetric tridiagonal: diag_k = 2 m^2 and
/// offdiag_k = (coupling/2) sqrt(j(j+1) - m(m+1)) between m and m+1.
struct TridiagonalHamiltonian {
    Eigen::VectorXd diag;
    Eigen::VectorXd offdiag;  // size dim-1
    double j = 0.0;
    double coupling = 0.0;

    int dim() const { return static_cast<int>(diag.size()); }
    Eigen::MatrixXd dense() const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& c) const;
};

TridiagonalHamiltonian build_hamiltonian(const ModelParams& params, double coupling);

}  // namespace sqz
