#ifndef NMTHERM_ORACLE_HPP
#define NMTHERM_ORACLE_HPP

#include <vector>

#include "nmtherm/common.hpp"
#include "nmtherm/dynamics.hpp"
#include "nmtherm/spectral.hpp"

namespace nmtherm::oracle {

using dynamics::TimeGrid;
using spectral::SpectralDensity;
using spectral::Temperature;

// Reservoir discretized into n_modes equispaced modes w_k = k*delta,
// delta = omega_max/n_modes, with couplings g_k = sqrt(J(w_k)*delta).
// The single-excitation Hamiltonian is the (N+1)x(N+1) arrowhead matrix
// H_00 = omega0, H_kk = w_k, H_0k = g_k.
struct DiscretizedModel {
    double omega0;
    double omega_max;
    std::vector<double> mode_freq;  // w_k, k = 1..N
    std::vector<double> coupling;   // g_k

    static DiscretizedModel make(const SpectralDensity& sd, double omega0,
                                 int n_modes, double omega_max = 0.0);

    // Largest omega_max keeping the recurrence horizon 2*pi/delta a safe
    // factor above t_max (the fixed 40*omega_c window would put the Poisson
    // revival inside [0, t_max] at the validation mode counts).
    static double horizon_safe_omega_max(const SpectralDensity& sd,
                                         int n_modes, double t_max);

    int n_modes() const { return int(mode_freq.size()); }
    double delta() const { return omega_max / n_modes(); }
    double recurrence_time() const { return 2.0 * M_PI / delta(); }
};

struct SpectrumResult {
    std::vector<double> eigenvalues;  // sorted ascending, N+1 values

    // Pole-relative representation: eigenvalue j sits at offset[j] from
    // mode anchor[j] (anchor -1: below the band, offset measured down from
    // w_1). Band-tail offsets reach ~1e-19 w, far below double resolution
    // of the eigenvalue itself; the thermometer weights need them exactly.
    std::vector<int> anchor;
    std::vector<double> offset;
};

// Exact symmetric eigensolve via the arrowhead secular equation
//   omega0 - lambda - sum_k g_k^2/(w_k - lambda) = 0,
// one bisection per interlacing interval, carried out in the offset from
// the nearest pole so near-pole roots stay fully resolved.
SpectrumResult build_and_diagonalize(const DiscretizedModel& model);

struct ExactDynamics {
    std::vector<Complex> u;  // [e^{-iHt}]_{00} per time node
    std::vector<double> v;   // sum_k |[e^{-iHt}]_{0k}|^2 nbar(w_k)
};

// Propagates the single-excitation model exactly through the
// eigendecomposition; enforces grid.t_max < recurrence_time().
// Pass a precomputed spectrum to reuse a diagonalization.
ExactDynamics exact_dynamics(const DiscretizedModel& model, Temperature temp,
                             const TimeGrid& grid,
                             const SpectrumResult* precomputed = nullptr);

// Closed-form mode amplitudes psi_k(t) = [e^{-iHt}]_{k0}; O(N^2), intended
// for small validation models.
std::vector<Complex> mode_amplitudes(const DiscretizedModel& model, double t,
                                     const SpectrumResult* precomputed = nullptr);

}  // namespace nmtherm::oracle

#endif
