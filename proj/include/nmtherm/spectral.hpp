#ifndef NMTHERM_SPECTRAL_HPP
#define NMTHERM_SPECTRAL_HPP

#include <optional>

#include "nmtherm/common.hpp"

namespace nmtherm::spectral {

// Ohmic-family spectral density J(w) = eta * w^s * omega_c^(1-s) * exp(-w/omega_c).
struct SpectralDensity {
    double eta;      // dimensionless coupling, > 0 (eta = 0 allowed: decoupled)
    double s;        // Ohmicity index, > 0
    double omega_c;  // cutoff frequency, units of omega0, > 0

    SpectralDensity(double eta_, double s_, double omega_c_);

    // Upper frequency window for numerical integrals over J; the exponential
    // cutoff makes everything beyond it analytically negligible.
    double quadrature_window() const { return 40.0 * (omega_c > 1.0 ? omega_c : 1.0); }
};

// Reservoir temperature in units omega0/K_B (K_B = 1, hbar = 1).
struct Temperature {
    double t;
    explicit Temperature(double t_);
    double beta() const { return 1.0 / t; }
};

// Isolated eigenstate below the continuum: energy E_b < 0 and residue Z.
struct BoundState {
    double e_b;  // units omega0
    double z;    // in (0, 1]
};

// J(omega); throws std::domain_error for omega < 0.
double evaluate_j(const SpectralDensity& sd, double omega);

// mu(x) = int_0^inf J(w) e^{-iwx} dw, closed form
// eta * omega_c^(1-s) * Gamma(s+1) * (1/omega_c + ix)^(-(s+1)).
Complex memory_kernel(const SpectralDensity& sd, double x);

// nbar(w) = 1/(e^{beta w} - 1); throws std::domain_error for omega <= 0.
double thermal_occupation(double omega, Temperature temp);

// d nbar / dT = beta*w*nbar*(1+nbar)/T, evaluated analytically.
double thermal_occupation_dT(double omega, Temperature temp);

// Lamb shift Delta(e) = P int_0^inf J(w)/(e - w) dw.
// Regular integral for e < 0, principal value for e > 0, closed form
// -eta*omega_c*Gamma(s) at e = 0.
double lamb_shift(const SpectralDensity& sd, double e);

// y(E) = omega0 + Delta(E); the bound-state energy solves y(E) = E.
double level_shift_function(const SpectralDensity& sd, double omega0, double e);

// Continuum weight Theta(E) = J(E) / {[E - omega0 - Delta(E)]^2 + [pi J(E)]^2}
// for E > 0; zero for E <= 0 where J vanishes.
double spectral_weight_theta(const SpectralDensity& sd, double omega0,
                             double e);

// True iff y(0) < 0, i.e. omega0 < eta*omega_c*Gamma(s) (open condition).
bool bound_state_exists(const SpectralDensity& sd, double omega0);

// Critical cutoff omega_c* = omega0 / (eta * Gamma(s)) at which the
// bound state first forms (for eta > 0).
double critical_omega_c(const SpectralDensity& sd, double omega0);

// Solves y(E) = E on E < 0 by bracketed bisection (tolerance 1e-12 on E,
// max 200 iterations) and computes the residue
// Z = [1 + int J(w)/(E_b - w)^2 dw]^(-1).
// Returns nullopt when no bound state exists; throws NumericalError if the
// bracket expansion fails although the existence test passed.
std::optional<BoundState> find_bound_state(const SpectralDensity& sd,
                                           double omega0);

}  // namespace nmtherm::spectral

#endif
