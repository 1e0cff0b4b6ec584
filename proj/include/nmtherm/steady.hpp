#ifndef NMTHERM_STEADY_HPP
#define NMTHERM_STEADY_HPP

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "nmtherm/common.hpp"
#include "nmtherm/dynamics.hpp"
#include "nmtherm/metrology.hpp"
#include "nmtherm/spectral.hpp"

namespace nmtherm::steady {

using dynamics::FrequencyGrid;
using metrology::QfiEstimate;
using spectral::BoundState;
using spectral::SpectralDensity;
using spectral::Temperature;

// Long-time heat-exchange spectrum A_w(inf) = Theta(w) + Z^2 J(w)/(w-E_b)^2
// (Z = 0 branch when no bound state exists).
struct AsymptoticSpectrum {
    std::shared_ptr<const FrequencyGrid> fgrid;
    std::vector<double> theta;  // Theta(w) per node
    std::vector<double> a_inf;  // A_w(inf) per node
    std::optional<BoundState> bound;
    bool diverges_ir = false;  // parameters at the critical point

    // At the s = 1 critical point Theta ~ 1/(w L(w)^2) with L growing only
    // logarithmically, so a fixed grid cutoff misses
    //   int_0^{wmin} Theta dw = atan(pi eta / L(wmin)) / (pi eta)
    // (substituting L = W(w)/w); that closed-form tail is stored here.
    double ir_tail = 0.0;

    double integral_a() const;  // int A_w(inf) dw, including ir_tail
};

// Frequency grid tuned for time-independent spectra: no oscillations to
// resolve, so a moderate linear spacing suffices; the log segment still
// resolves the near-critical infrared peak.
std::shared_ptr<const FrequencyGrid> asymptotic_grid(const SpectralDensity& sd);

AsymptoticSpectrum asymptotic_spectrum(
    const SpectralDensity& sd, double omega0,
    std::shared_ptr<const FrequencyGrid> fgrid = nullptr);

// v(inf) = int A_w(inf) nbar(w) dw (meaningful off the critical point).
double asymptotic_v(const AsymptoticSpectrum& spec, Temperature temp);

// Upper bound on the steady QFI,
//   F_T(inf) <= M(inf) int Fbar_T(w) A_w(inf) [1 + nbar(w)] dw;
// at the critical point the integrand is not integrable and the analytic
// limit T^{-2} is returned with the critical_point flag set.
QfiEstimate qfi_upper_bound(const AsymptoticSpectrum& spec, Temperature temp);

// Power-law fit of the peak position of A_w(inf) against the detuning
// |omega0 - eta*omega_c| near the critical point.
struct CriticalFit {
    double prefactor = 0.0;  // c in  w_max = c * detuning^p
    double exponent = 0.0;   // p
    double residual = 0.0;   // rms residual of log(w_max)
    std::vector<std::pair<double, double>> samples;  // (detuning, w_max)
    std::vector<double> rejected;  // detunings with boundary peaks
};

CriticalFit locate_peak_and_fit(double eta, double s, double omega0,
                                std::span<const double> omega_c_values);

// |omega0 - eta*omega_c| <= 1.52 K_B T (constant fitted for the Ohmic s=1
// family; extrapolated flags other s).
struct WindowVerdict {
    bool inside;
    double margin;  // 1.52 T - |omega0 - eta*omega_c|
    bool extrapolated;
};

WindowVerdict critical_window(double omega0, const SpectralDensity& sd,
                              Temperature temp);

// f(x) = x^2 nbar(x) [1 + nbar(x)], the single-mode QFI shape function.
double f_function(double x);

}  // namespace nmtherm::steady

#endif
