#ifndef NMTHERM_CONFIG_HPP
#define NMTHERM_CONFIG_HPP

#include <string>
#include <vector>

#include "nmtherm/common.hpp"

namespace nmtherm::cli {

// Run configuration: key = value entries grouped in sections, one section
// per command plus shared [params]/[grid]/[frequency]/[run]. Unknown keys
// or sections are rejected. parse(serialize(cfg)) == cfg for every
// accepted configuration.
struct RunConfig {
    // [params]
    double eta = 0.1;
    double s = 1.0;
    double omega_c = 10.0;
    double omega0 = 1.0;
    double temperature = 0.1;
    double alpha0_re = 1.0;
    double alpha0_im = 0.0;

    // [grid]
    double t_max = 50.0;
    double dt = 0.01;

    // [frequency]
    int n_log = 400;
    double omega_min = 1e-6;
    double linear_spacing = 0.0;  // 0 = auto
    double omega_max = 0.0;       // 0 = auto

    // [run]
    std::string out_dir = "out";
    int workers = 0;  // 0 = physical core count

    // [dynamics]
    std::vector<double> dynamics_omega_c;  // empty = {omega_c}

    // [steady]
    std::string steady_sweep = "omega_c";  // omega_c | eta | s
    std::vector<double> steady_values;     // empty = single point
    std::vector<double> steady_T;          // empty = {temperature}

    // [spectrum]
    int spectrum_n_modes = 300;
    std::vector<double> spectrum_omega_c;  // empty = {omega_c}

    // [heatspec]
    std::vector<double> heatspec_omega_c;  // empty = {omega_c}

    // [fit]
    std::vector<double> fit_detunings = {0.01,  0.016, 0.027, 0.045,
                                         0.074, 0.12,  0.19,  0.3};
    std::vector<double> fit_window_T = {0.1};

    static RunConfig from_file(const std::string& path);
    static RunConfig from_string(const std::string& text);
    std::string serialize() const;

    // "section.key=value", e.g. "params.eta=0.2" or "steady.T_list=0.1,1".
    void apply_override(const std::string& assignment);

    void check() const;  // throws ConfigError on invalid values

    bool operator==(const RunConfig&) const = default;
};

// Canonical float formatting used for configs and CSV output
// (17 significant digits, round-trip exact).
std::string format_double(double x);

}  // namespace nmtherm::cli

#endif
