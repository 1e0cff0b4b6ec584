#ifndef NMTHERM_METROLOGY_HPP
#define NMTHERM_METROLOGY_HPP

#include <array>

#include "nmtherm/common.hpp"
#include "nmtherm/spectral.hpp"

namespace nmtherm::metrology {

using spectral::Temperature;

// Displaced thermal state of the thermometer mode: displacement alpha0*u,
// mean thermal occupation v. In the (a, a+) ordering the displacement
// vector is d = (alpha0 u, conj(alpha0 u)) and the covariance matrix is
// (1 + 2v) * identity.
struct GaussianThermometerState {
    Complex alpha0;
    Complex u;
    double v;

    std::array<Complex, 2> displacement() const {
        const Complex a = alpha0 * u;
        return {a, std::conj(a)};
    }
    double sigma_diag() const { return 1.0 + 2.0 * v; }
    double purity_weight() const { return 1.0 / (1.0 + v); }  // M(t)
};

GaussianThermometerState build_state(Complex alpha0, Complex u, double v);

enum class QfiMethod { direct, gaussian, markovian, number_cfi, upper_bound };

struct QfiEstimate {
    double value = 0.0;  // units 1/T^2
    QfiMethod method = QfiMethod::direct;
    bool converged = true;       // propagated from the noise trajectory
    bool critical_point = false;  // set by the steady-state bound at the CP
    double condition_number = 0.0;  // of the Gaussian-formula M matrix
};

// F_T = M (dv/dT)^2 / v = (dv/dT)^2 / [v (1+v)]; 0 below v = 1e-12.
QfiEstimate qfi_direct(double v, double dv_dT, bool converged = true);

// T-derivative of the state; the displacement is T-independent here but the
// general slot is kept for the full Gaussian formula.
struct StateDerivative {
    double dv_dT = 0.0;
    std::array<Complex, 2> dd_dT{Complex(0, 0), Complex(0, 0)};
};

// General single-mode Gaussian QFI,
//   F = 1/2 vec(d_sigma)^+ M^{-1} vec(d_sigma) + 2 (d_d)^+ sigma^{-1} d_d,
//   M = conj(sigma) (x) sigma - K (x) K,  K = diag(1, -1).
// Falls back to 0 for v < 1e-12 where M is singular.
QfiEstimate qfi_gaussian(const GaussianThermometerState& state,
                         const StateDerivative& deriv);

// F_T^MA(t) = Fbar_T(omega0) * [nbar+1] / [nbar + (1 - e^{-2 kappa t})^{-1}].
QfiEstimate qfi_markovian(double t, double omega0, double kappa,
                          Temperature temp);

// Fbar_T(w) = (beta w)^2 nbar(w) [1 + nbar(w)] / T^2.
double markovian_qfi_limit(double omega, Temperature temp);

// Classical Fisher information of photon counting on the state: builds the
// Fock-basis distribution p_n from displaced geometric weights and evaluates
// sum_n (d_T p_n)^2 / p_n with d_T p_n = (dp_n/dv) dv_dT (centered difference
// in v, relative step 1e-5). Throws NumericalError if the truncation tail
// cannot be brought below 1e-10.
QfiEstimate number_measurement_cfi(const GaussianThermometerState& state,
                                   double dv_dT);

}  // namespace nmtherm::metrology

#endif
