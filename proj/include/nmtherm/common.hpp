#ifndef NMTHERM_COMMON_HPP
#define NMTHERM_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

// Units used throughout the library: omega0 = 1, hbar = 1, K_B = 1.
// Frequencies and energies are in units of omega0, times in 1/omega0,
// temperatures in omega0/K_B.

namespace nmtherm {

using Complex = std::complex<double>;

inline constexpr char version[] = "0.1.0";

// A numerical routine failed to meet its accuracy or stability contract.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A run configuration is malformed or inconsistent.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nmtherm

#endif
