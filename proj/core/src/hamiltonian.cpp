#include "sqz/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace sqz {

Eigen::MatrixXd TridiagonalHamiltonian::dense() const {
    const int n = dim();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    h.diagonal() = diag;
    for (int k = 0; k + 1 < n; ++k) {
        h(k, k + 1) = offdiag[k];
        h(k + 1, k) = offdiag[k];
    }
    return h;
}

Eigen::VectorXcd TridiagonalHamiltonian::apply(const Eigen::VectorXcd& c) const {
    const int n = dim();
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("TridiagonalHamiltonian::apply: dimension mismatch");
    Eigen::VectorXcd out(n);
    for (int k = 0; k < n; ++k) {
        std::complex<double> v = diag[k] * c[k];
        if (k > 0) v += offdiag[k - 1] * c[k - 1];
        if (k + 1 < n) v += offdiag[k] * c[k + 1];
        out[k] = v;
    }
    return out;
}

TridiagonalHamiltonian build_hamiltonian(const ModelParams& params, double coupling) {
    params.validate();
    if (!(coupling >= 0.0))
        throw std::invalid_argument("build_hamiltonian: coupling must be >= 0");
    const double j = params.j();
    const int dim = params.dim();
    TridiagonalHamiltonian h;
    h.j = j;
    h.coupling = coupling;
    h.diag.resize(dim);
    h.offdiag.resize(dim - 1);
    for (int k = 0; k < dim; ++k) {
        const double m = k - j;
        h.diag[k] = 2.0 * m * m;
    }
    for (int k = 0; k + 1 < dim; ++k) {
        const double m = k - j;
        h.offdiag[k] = 0.5 * coupling * std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    return h;
}

}  // namespace sqz
