// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "cayley/suites.hpp"
#include "cayley/derivation.hpp"

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int number, const std::string& title, bool pass, double secs, const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s (%.1fs)%s%s\n", pass ? "PASS" : "FAIL", number, title.c_str(), secs,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

std::string failing_checks(const cayley::Report& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (!c.pass) {
      if (!out.empty()) out += "; ";
      out += c.id + " expected " + c.expected + " got " + c.computed;
    }
  }
  return out;
}

template <typename Suite>
void run_suite_criterion(int number, const std::string& title, Suite&& suite) {
  const auto t0 = std::chrono::steady_clock::now();
  const cayley::Report r = suite();
  report(number, title, r.all_pass(), seconds_since(t0), failing_checks(r));
}

}  // namespace

int main() {
  using cayley::SuiteOptions;
  const SuiteOptions opts;

  try {
    // Criterion 1: algebra dimensions.
    auto t0 = std::chrono::steady_clock::now();
    const cayley::Subalgebra& f4 = cayley::shared_f4();
    const int g2_dim = cayley::octonion_derivations().dim();
    const int f4_dim = f4.dim();
    const int spin9_dim = cayley::stabilizer(f4, cayley::basepoint()).dim();
    report(1, "algebra dimensions 14 / 52 / 36", g2_dim == 14 && f4_dim == 52 && spin9_dim == 36,
           seconds_since(t0),
           "g2=" + std::to_string(g2_dim) + " f4=" + std::to_string(f4_dim) +
               " stab=" + std::to_string(spin9_dim));

    run_suite_criterion(2, "table 4: Z(P), N(P), cohomogeneity, slice polarity (12 rows)",
                        [&] { return cayley::run_table4_suite(opts); });
    run_suite_criterion(3, "table 3 cohomogeneity-one multiplicities (15,7) and (7,4)",
                        [&] { return cayley::run_table3_cohom1_suite(opts); });
    run_suite_criterion(4, "slice arcs (8,13), (9,12), (7,8)",
                        [&] { return cayley::run_slice_arcs_suite(opts); });
    run_suite_criterion(5, "rotation-octonion suite (slice, fixed sets, sections, normalizers)",
                        [&] { return cayley::run_g2so3_suite(opts); });
    run_suite_criterion(6, "asystaticity fixed-dimension checks",
                        [&] { return cayley::run_asystatic_suite(opts); });
    run_suite_criterion(7, "non-polarity certificates for the restricted spin representations",
                        [&] { return cayley::run_nonpolar_suite(opts); });
    run_suite_criterion(8, "extended-diagram deletions {C3,A1}, {A2,A2}, {B4}",
                        [&] { return cayley::run_bds_suite(opts); });
    run_suite_criterion(9, "tables 1-2 rows: non-polar, sphere cohomogeneity = quotient dimension",
                        [&] { return cayley::run_tables12_suite(opts); });
    run_suite_criterion(10, "fixed-set chain 2, 4, 8 with strict span inclusions",
                        [&] { return cayley::run_chain_suite(opts); });
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 2;
  }

  if (g_failures == 0) {
    std::printf("acceptance: all criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
