#ifndef NMTHERM_DYNAMICS_HPP
#define NMTHERM_DYNAMICS_HPP

#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "nmtherm/common.hpp"
#include "nmtherm/spectral.hpp"

namespace nmtherm::dynamics {

using spectral::BoundState;
using spectral::SpectralDensity;
using spectral::Temperature;

// Uniform time grid t_i = i*dt, i = 0..n_steps.
struct TimeGrid {
    double t_max = 1.0;
    int n_steps = 1;

    TimeGrid() = default;
    TimeGrid(double t_max_, int n_steps_);
    static TimeGrid with_dt(double t_max, double dt);

    double dt() const { return t_max / n_steps; }
    int n_nodes() const { return n_steps + 1; }
    double node(int i) const { return i * dt(); }
};

// Frequency nodes with positive cell weights covering [0, omega_max]:
// log-spaced nodes below omega0 resolve the infrared region (A_w diverges
// at w -> 0 at the critical point), linear nodes above resolve the
// oscillations of |u~_w(t)|^2, whose period in w is 2*pi/t.
struct FrequencyGrid {
    std::vector<double> nodes;    // strictly increasing, > 0
    std::vector<double> weights;  // cell widths, sum = omega_max
    double omega_max;

    struct Options {
        int n_log = 400;             // nodes on [omega_min, split]
        double omega_min = 1e-6;
        double split = 1.0;
        double linear_spacing = 0.0;  // 0 -> auto from t_max
        double omega_max = 0.0;       // 0 -> 40*max(omega_c, 1)
    };

    static FrequencyGrid make(const SpectralDensity& sd, double t_max,
                              const Options& opt);
    static FrequencyGrid make(const SpectralDensity& sd, double t_max) {
        return make(sd, t_max, Options{});
    }
    // Rebuilds the grid with extra nodes merged in (weights recomputed).
    FrequencyGrid refined_with(const std::vector<double>& extra) const;
    void rebuild_weights();
    std::size_t size() const { return nodes.size(); }
};

// Solution of the propagator equation
//   du/dt + i*omega0*u + int_0^t mu(t-t1) u(t1) dt1 = 0,  u(0) = 1.
// u~_w(t) = int_0^t u(tau) e^{i w tau} d tau is not stored densely (at the
// resolution the sum rule needs that is O(100 MB-1 GB) per trajectory); it is
// re-accumulated on demand by scan_u_tilde, one incremental pass over the
// grid with exact per-panel Filon weights for the piecewise-linear u.
struct PropagatorTrajectory {
    TimeGrid grid;
    double omega0;
    std::shared_ptr<const FrequencyGrid> fgrid;
    std::vector<Complex> u;              // per time node
    std::vector<Complex> u_tilde_final;  // per frequency node, at t_max

    // cb(node_index, u_tilde) is invoked for every time node (0..n_steps)
    // with u_tilde holding u~_w(t_i) on fgrid->nodes.
    void scan_u_tilde(
        const std::function<void(int, std::span<const Complex>)>& cb) const;

    // u~_w(t_index) on the frequency grid.
    std::vector<Complex> u_tilde_at(int t_index) const;
};

// v(t), dv/dT and the steady-state diagnostics.
struct NoiseTrajectory {
    TimeGrid grid;
    std::vector<double> v;
    std::vector<double> dv_dT;
    bool converged = true;      // steady state reached on the last 10%
    double residual_dv = 0.0;   // max |dv/dt| on the last 10%
    double residual_du2 = 0.0;  // max |d|u|^2/dt| on the last 10%
};

// Time-dependent master-equation coefficients.
struct MasterEqCoefficients {
    TimeGrid grid;
    std::vector<double> omega_eff;   // Omega(t) = -Im[u'/u]
    std::vector<double> gamma;       // Gamma(t) = -Re[u'/u]
    std::vector<double> gamma_beta;  // v' + 2 v Gamma
    std::vector<int> singular_nodes;  // |u| < 1e-10 there; values are NaN
};

// Trapezoidal-convolution + implicit-trapezoid stepper (2nd order).
// Throws NumericalError if |u| exceeds 1 + 1e-3 (step-size instability).
PropagatorTrajectory solve_u_volterra(
    const SpectralDensity& sd, double omega0, const TimeGrid& grid,
    std::shared_ptr<const FrequencyGrid> fgrid = nullptr);

// Independent reconstruction from the spectral representation
//   u(t) = Z e^{-i E_b t} + int_0^inf Theta(E) e^{-i E t} dE.
PropagatorTrajectory solve_u_spectral(
    const SpectralDensity& sd, double omega0, const TimeGrid& grid,
    std::shared_ptr<const FrequencyGrid> fgrid = nullptr);

// A_w(t) = J(w) |u~_w(t)|^2 on the frequency grid.
std::vector<double> heat_exchange_spectrum(const PropagatorTrajectory& traj,
                                           const SpectralDensity& sd,
                                           int t_index);

// max over grid nodes of |int A_w(t) dw - (1 - |u(t)|^2)|.
double sum_rule_max_residual(const PropagatorTrajectory& traj,
                             const SpectralDensity& sd);

// v(t) = int A_w(t) nbar(w) dw and its analytic T-derivative.
NoiseTrajectory compute_v(const PropagatorTrajectory& traj,
                          const SpectralDensity& sd, Temperature temp);

// One shared pass over the trajectory for several temperatures.
std::vector<NoiseTrajectory> compute_v_multi(
    const PropagatorTrajectory& traj, const SpectralDensity& sd,
    std::span<const Temperature> temps);

// Debug oracle: the double-integral form
//   v(t) = int_0^t int_0^t u*(t1) nu(t1-t2) u(t2) dt1 dt2
// evaluated directly; O(n^2) per node, coarse grids only.
std::vector<double> compute_v_double_integral(const PropagatorTrajectory& traj,
                                              const SpectralDensity& sd,
                                              Temperature temp);

// nu(x) = int J(w) nbar(w) e^{-iwx} dw by frequency-grid quadrature.
Complex noise_kernel(const SpectralDensity& sd, Temperature temp, double x,
                     const FrequencyGrid& fgrid);

// Born-Markovian closed forms u_MA = e^{-[kappa + i(omega0+Delta)]t},
// v_MA = nbar(omega0)(1 - e^{-2 kappa t}), kappa = pi J(omega0).
std::pair<PropagatorTrajectory, NoiseTrajectory> markovian_solution(
    const SpectralDensity& sd, double omega0, Temperature temp,
    const TimeGrid& grid,
    std::shared_ptr<const FrequencyGrid> fgrid = nullptr);

double markovian_decay_rate(const SpectralDensity& sd, double omega0);

// Centered finite differences of u and v (one-sided at the endpoints).
MasterEqCoefficients master_eq_coefficients(const PropagatorTrajectory& traj,
                                            const NoiseTrajectory& noise);

}  // namespace nmtherm::dynamics

#endif
