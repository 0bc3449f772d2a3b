#include "sqz/physical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sqz {

void PhysicalParams::validate() const {
    if (!(atom_mass > 0.0)) throw std::invalid_argument("PhysicalParams: atom_mass must be > 0");
    if (!(trap_omega > 0.0)) throw std::invalid_argument("PhysicalParams: trap_omega must be > 0");
    if (!(a_aa > 0.0) || !(a_bb > 0.0) || !(a_ab > 0.0))
        throw std::invalid_argument("PhysicalParams: scattering lengths must be > 0");
    if (n_atoms < 1) throw std::invalid_argument("PhysicalParams: n_atoms must be >= 1");
}

PhysicalParams sodium_defaults(int n_atoms) {
    PhysicalParams p;
    p.atom_mass = constants::sodium23_mass_u * constants::atomic_mass_unit;
    p.trap_omega = 2.0 * std::numbers::pi * 500.0;
    p.a_aa = 2.75e-9;
    p.a_bb = 2.75e-9;
    p.a_ab = 0.5 * 2.75e-9;
    p.n_atoms = n_atoms;
    return p;
}

double a_eff(const PhysicalParams& p) { return p.a_aa + p.a_bb - 2.0 * p.a_ab; }

double a_ho(const PhysicalParams& p) {
    return std::sqrt(constants::hbar / (p.atom_mass * p.trap_omega));
}

double kappa_thomas_fermi(const PhysicalParams& p) {
    p.validate();
    const double eff = a_eff(p);
    if (!(eff > 0.0))
        throw std::domain_error(
            "kappa_thomas_fermi: a_eff = a_aa + a_bb - 2 a_ab is not positive (" +
            std::to_string(eff) + " m); the attractive kappa < 0 branch is not supported");
    const double ho = a_ho(p);
    return std::pow(15.0, 0.4) / 14.0 * (eff / ho) *
           std::pow(ho / (p.n_atoms * p.a_aa), 0.6);
}

double model_time_to_lab(double t_model, double kappa_over_hbar_omega, double omega) {
    if (!(kappa_over_hbar_omega > 0.0) || !(omega > 0.0))
        throw std::invalid_argument("model_time_to_lab: kappa and omega must be > 0");
    return t_model / (kappa_over_hbar_omega * omega);
}

double lab_time_to_model(double t_lab, double kappa_over_hbar_omega, double omega) {
    if (!(kappa_over_hbar_omega > 0.0) || !(omega > 0.0))
        throw std::invalid_argument("lab_time_to_model: kappa and omega must be > 0");
    return t_lab * kappa_over_hbar_omega * omega;
}

}  // namespace sqz
