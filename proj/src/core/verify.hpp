/*
 * (C) Copyright 2026 sgnet developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sgnet::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::uint64_t checks = 0;  // individual comparisons performed
  std::string detail;        // first counterexample when failed
  double elapsed_s = 0;

  std::string line() const;  // "PASS <name> checks=<n> (0.12s)" or FAIL + detail
};

// Suites: all, neighbors, geometry, geodesic, counting, renewal.
// tmax <= 0 picks per-suite defaults; larger values are clamped to
// per-check hard caps so sweeps stay exhaustive but bounded.
std::vector<CheckResult> run_suite(
    const std::string& suite, int tmax,
    const std::function<void(const CheckResult&)>& on_result = {});

bool all_passed(const std::vector<CheckResult>& results);
bool suite_known(const std::string& suite);

// Individual checks reused by the acceptance tests; tmax as above.
CheckResult check_neighbor_symmetry(int tmax);
CheckResult check_claim1_prefix_pairs(int tmax);
CheckResult check_f_chain(int tmax);
CheckResult check_normal_decomposition(int tmax);
CheckResult check_omega_lipschitz(int tmax);
CheckResult check_builder_oracle(int tmax);
CheckResult check_subgraph_self_similarity(int tmax);
CheckResult check_connectivity_handshake(int tmax);

CheckResult check_geometry_oracle(int tmax);
CheckResult check_nesting(int tmax);

CheckResult check_prop1_root_distance(int tmax);
CheckResult check_lemma1_first_letter(int tmax);
CheckResult check_lemma2_stability(int tmax);
CheckResult check_lemma3_l_subadditivity(int max_total_len);
CheckResult check_cross_letter_sandwich(int tmax);
CheckResult check_pi_recursion(int tmax);
CheckResult check_metric_sanity(int tmax);

CheckResult check_counting_closed_forms(int kmax);
CheckResult check_composition_completeness(int tmax_identity);
CheckResult check_sum_omega_enumeration(int tmax);
CheckResult check_sum_omega_quadratic(int tmax);
CheckResult check_w_profile_enumeration(int tmax);
CheckResult check_w_suffix_factor();
CheckResult check_alpha_superadditivity(int sum_max);
CheckResult check_alpha_ratio_limit(int tmax);
CheckResult check_chi_bounds(int tmax);
CheckResult check_kappa_trend(int tmax);

CheckResult check_pmf_partials();
CheckResult check_ey_exact_values(int enum_tmax);
CheckResult check_ey_naive_recursion(int tmax);
CheckResult check_ey_limit(int t);
CheckResult check_renewal_scan_example();
CheckResult check_mc_vs_exact(int t, std::int64_t samples, std::uint64_t seed);
CheckResult check_lemma6_sandwich(int tmax);

}  // namespace sgnet::verify
