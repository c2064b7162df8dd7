#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cayley/suites.hpp"
#include "cayley/derivation.hpp"
#include "cayley/rootsys.hpp"

namespace {

nlohmann::json mult_table_json() {
  nlohmann::json t = nlohmann::json::array();
  const auto& table = cayley::octonion_table();
  for (int i = 0; i < 8; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 8; ++j) row.push_back({{"index", table[i][j].index}, {"sign", table[i][j].sign}});
    t.push_back(std::move(row));
  }
  return t;
}

nlohmann::json gram_json() {
  const cayley::MatQ& g = cayley::trace_form_gram();
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < cayley::kJordanDim; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < cayley::kJordanDim; ++j) row.push_back(g(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

int emit_reports(const std::vector<cayley::Report>& reports, const std::string& format) {
  bool pass = true;
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) {
      out.push_back(r.to_json());
      pass = pass && r.all_pass();
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << r.to_markdown() << "\n";
      pass = pass && r.all_pass();
    }
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification workbench for isometric actions on the Cayley projective plane"};

  std::string command;
  app.add_option("command", command, "one of: verify-table4, verify-table3-cohom1, verify-g2so3, "
                                     "verify-slice-arcs, verify-bds, verify-tables12, verify-chain, all, dump-tables")
      ->required()
      ->check(CLI::IsMember({"verify-table4", "verify-table3-cohom1", "verify-g2so3", "verify-slice-arcs",
                             "verify-bds", "verify-tables12", "verify-chain", "all", "dump-tables"}));

  cayley::SuiteOptions opts;
  std::string format = "markdown";
  bool no_cache = false;
  app.add_option("--seed", opts.seed, "sampling seed (default 1)");
  app.add_option("--samples", opts.samples, "points per genericity sweep (default 24)");
  app.add_option("--height", opts.height, "height bound for random rationals (default 13)");
  app.add_option("--table-n", opts.extra_table_n,
                 "additional parameter value (> 3) for the classification-table rows");
  app.add_flag("--no-cache", no_cache, "recompute the 52-dim derivation algebra instead of using the disk cache");
  app.add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (no_cache) cayley::set_shared_f4_options({false, ""});

    if (command == "dump-tables") {
      nlohmann::json out;
      out["octonion_multiplication_table"] = mult_table_json();
      out["octonion_basis"] = {"1", "i", "j", "k", "l", "li", "lj", "lk"};
      out["jordan_trace_form_gram"] = gram_json();
      out["jordan_coordinate_order"] = "d1,d2,d3,x23[8],x13[8],x12[8]";
      out["extended_dynkin_diagram"] = cayley::f4_extended_diagram().to_json();
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    std::vector<cayley::Report> reports;
    if (command == "verify-bds") {
      reports.push_back(cayley::run_bds_suite(opts));
    } else if (command == "verify-table4") {
      reports.push_back(cayley::run_table4_suite(opts));
    } else if (command == "verify-table3-cohom1") {
      reports.push_back(cayley::run_table3_cohom1_suite(opts));
    } else if (command == "verify-g2so3") {
      reports.push_back(cayley::run_g2so3_suite(opts));
    } else if (command == "verify-slice-arcs") {
      reports.push_back(cayley::run_slice_arcs_suite(opts));
    } else if (command == "verify-tables12") {
      reports.push_back(cayley::run_tables12_suite(opts));
    } else if (command == "verify-chain") {
      reports.push_back(cayley::run_chain_suite(opts));
    } else if (command == "all") {
      reports = cayley::run_all_suites(opts);
    }
    return emit_reports(reports, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
