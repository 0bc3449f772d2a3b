#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace sqz {

// All couplings are in units of kappa and all times in units of 1/kappa
// (kappa = 1, hbar = 1 throughout the library).

/// One simulation scenario: N two-mode atoms with Josephson coupling
/// omega_ratio = Omega_R/kappa. The collective spin length is j = N/2.
struct ModelParams {
    int n_atoms = 0;
    double omega_ratio = 0.0;

    double j() const { return 0.5 * n_atoms; }
    int dim() const { return n_atoms + 1; }
    bool even() const { return n_atoms % 2 == 0; }

    void validate() const {
        if (n_atoms < 1)
            throw std::invalid_argument("ModelParams: n_atoms must be >= 1, got " +
                                        std::to_string(n_atoms));
        if (!(omega_ratio >= 0.0))
            throw std::invalid_argument("ModelParams: omega_ratio must be >= 0");
    }
};

inline ModelParams make_params(int n_atoms, double omega_ratio) {
    ModelParams p{n_atoms, omega_ratio};
    p.validate();
    return p;
}

/// Step-function drive: Omega(t) = coupling for t < t_off, 0 afterwards.
struct QuenchProtocol {
    double coupling = 0.0;
    double t_off = std::numeric_limits<double>::infinity();

    static QuenchProtocol never(double coupling) { return {coupling, std::numeric_limits<double>::infinity()}; }
    static QuenchProtocol off_at(double coupling, double t_off) {
        if (!(t_off >= 0.0))
            throw std::invalid_argument("QuenchProtocol: t_off must be >= 0");
        return {coupling, t_off};
    }

    bool field_on(double t) const { return t < t_off; }
    double omega_at(double t) const { return field_on(t) ? coupling : 0.0; }
};

}  // namespace sqz
