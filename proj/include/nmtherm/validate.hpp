#ifndef NMTHERM_VALIDATE_HPP
#define NMTHERM_VALIDATE_HPP

#include <string>
#include <vector>

namespace nmtherm::validate {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double threshold = 0.0;
    std::string detail;
};

// Invariant suite behind `nmtherm validate`: every module's pinned
// properties at fixed parameters. Individual checks are exposed so tests
// can run deliberate-failure variants.
std::vector<CheckResult> run_all(int workers);

CheckResult check_kernel_closed_form();
CheckResult check_level_shift_monotone();
CheckResult check_threshold_monotone();
CheckResult check_residue_detuning();
CheckResult check_dynamic_sum_rule(double dt);
CheckResult check_method_agreement();
CheckResult check_convergence_order();
CheckResult check_dvdt_finite_difference();
CheckResult check_oracle_agreement();
CheckResult check_qfi_equivalence();
CheckResult check_displacement_invariance();
CheckResult check_markovian_monotonicity();
CheckResult check_number_cfi_optimality();
CheckResult check_asymptotic_sum_rule();
CheckResult check_bound_dominates();
CheckResult check_f_monotone();
CheckResult check_high_t_scaling();
CheckResult check_spectrum_bracketing();
CheckResult check_discretization_convergence();
CheckResult check_oracle_unitarity();
CheckResult check_csv_determinism();
CheckResult check_config_roundtrip();

}  // namespace nmtherm::validate

#endif
