#pragma once

namespace sqz {

namespace constants {
// CODATA 2018.
inline constexpr double hbar = 1.054571817e-34;              // J s
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double sodium23_mass_u = 22.98977;           // 23Na, u
}  // namespace constants

/// Laboratory-side description of the trapped two-component condensate.
/// Scattering lengths in meters, trap frequency in rad/s.
struct PhysicalParams {
    double atom_mass = 0;       // kg
    double trap_omega = 0;      // rad/s
    double a_aa = 0, a_bb = 0, a_ab = 0;
    int n_atoms = 0;

    void validate() const;
};

/// 23Na in |F=1, M_F=+-1>: a_aa = a_bb = 2 a_ab, a_aa = 2.75 nm,
/// spherical trap at 2 pi x 500 Hz.
PhysicalParams sodium_defaults(int n_atoms = 1000);

double a_eff(const PhysicalParams& p);  // a_aa + a_bb - 2 a_ab
double a_ho(const PhysicalParams& p);   // sqrt(hbar / (m omega))

/// Thomas-Fermi estimate of the self-interaction strength, in units of
/// hbar * omega:
///   kappa = (15^{2/5}/14) (a_eff/a_ho) (a_ho / (N a_aa))^{3/5}.
/// Throws if a_eff <= 0 (the kappa < 0 branch is not supported).
double kappa_thomas_fermi(const PhysicalParams& p);

/// t_lab [s] = t_model / (kappa/hbar) with kappa given in units of
/// hbar * omega and omega in rad/s.
double model_time_to_lab(double t_model, double kappa_over_hbar_omega, double omega);
double lab_time_to_model(double t_lab, double kappa_over_hbar_omega, double omega);

}  // namespace sqz
