#ifndef NMTHERM_QUADRATURE_HPP
#define NMTHERM_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "nmtherm/common.hpp"

namespace nmtherm::quad {

// Adaptive Gauss-Kronrod (G7/K15) panel integration of f on [a, b].
// Panels are bisected until the local error estimate satisfies
// err < max(abs_tol_local, rel_tol * |sum|).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-10,
                 int max_panels = 4000);

// Same, but the interval is pre-split at the given interior breakpoints
// (useful when the integrand has known kinks or sharp features).
double integrate_segments(const std::function<double(double)>& f,
                          const std::vector<double>& points,
                          double abs_tol = 1e-12, double rel_tol = 1e-10,
                          int max_panels = 4000);

// Cauchy principal value of  PV int_a^b f(x)/(x - pole) dx  with a < pole < b.
// The symmetric window [pole-d, pole+d] is handled by the antisymmetric
// subtraction  int_0^d [f(pole+x) - f(pole-x)]/x dx, the rest is regular.
double principal_value(const std::function<double(double)>& f, double a,
                       double b, double pole, double abs_tol = 1e-12,
                       double rel_tol = 1e-10);

}  // namespace nmtherm::quad

#endif
