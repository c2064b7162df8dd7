#pragma once

#include "cayley/report.hpp"

namespace cayley {

struct SuiteOptions {
  uint64_t seed = 1;
  int samples = 24;
  long height = 13;
  /// Extra parameter value for the classification-table rows beyond the
  /// default sweep n = 2, 3. Zero: no extra run.
  int extra_table_n = 0;
};

Report run_bds_suite(const SuiteOptions& opts);
Report run_table4_suite(const SuiteOptions& opts);
Report run_table3_cohom1_suite(const SuiteOptions& opts);
Report run_g2so3_suite(const SuiteOptions& opts);
Report run_slice_arcs_suite(const SuiteOptions& opts);
Report run_tables12_suite(const SuiteOptions& opts);
Report run_chain_suite(const SuiteOptions& opts);
/// Fixed-point dimensions versus cohomogeneity at regular points, for the
/// three stabilizer-level isotropy checks; stable across three seeds.
Report run_asystatic_suite(const SuiteOptions& opts);
/// Non-polarity certificates for the two restricted spin representations.
Report run_nonpolar_suite(const SuiteOptions& opts);

std::vector<Report> run_all_suites(const SuiteOptions& opts);

}  // namespace cayley
