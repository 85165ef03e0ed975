#pragma once

#include <vector>

#include "swd/report.hpp"

namespace swd {

// Exhaustive sweeps over explicit finite boxes. Each returns one report; the
// nu range is always {generic, 0, ..., nu_max}.

CheckReport check_block_classes(int nu_max, int size_max);
CheckReport check_equivalence_relation(int nu_max, int size_max);
CheckReport check_transition_inverse(int nu_max, int n_max);
CheckReport check_character_ses(int nu_max, int n_max, int degree_max);
CheckReport check_minimal_simple_character(int nu_max, int n_max, int degree_max);
CheckReport check_character_positivity(int nu_max, int n_max, int degree_max);
CheckReport check_res_verma_oracle(int nu_max, int n_max, int size_max, int degree_max);
CheckReport check_k_commuting_square(int nu_max, int n_max);
CheckReport check_classical_sw(int d_max, int N_max);
CheckReport check_stabilization(int nu_max, int k_max, int size_max);
CheckReport check_sw_res_compat(int nu_max, int n_max, int size_max);
CheckReport check_gamma_compat(int nu_max, int n_max, int size_max);
CheckReport check_limit_diagram(int nu_max, int n_max, int size_max);
CheckReport check_towers(int nu_max, int n_max, int size_max);
CheckReport check_tensor_power(int N_max, int n_max);
CheckReport check_duality(int nu_max, int n_max, int size_max);
CheckReport check_pieri_against_lr(int degree_max);
CheckReport check_specialization_homomorphism(int degree_max, int N_max);
CheckReport check_branching_dimensions(int degree_max, int N_max);

struct VerifyBounds {
  int nu_max = 4;
  int n_max = 6;
  int size_max = 8;
  int degree_max = 10;
};

/// Runs every sweep, in parallel, and returns the reports in a fixed order.
std::vector<CheckReport> verify_all(const VerifyBounds& bounds);

} // namespace swd
