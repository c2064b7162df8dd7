#include "cayley/suites.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "cayley/repcheck.hpp"
#include "cayley/rootsys.hpp"

namespace cayley {

namespace {

class Timer {
 public:
  Timer() : t0_(std::chrono::steady_clock::now()) {}
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - t0_).count();
    t0_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

Report make_report(const std::string& suite, const SuiteOptions& opts) {
  Report r;
  r.suite = suite;
  r.seed = opts.seed;
  r.samples = opts.samples;
  r.height = opts.height;
  r.toolchain = toolchain_stamp();
  return r;
}

void add(Report& r, Timer& timer, const std::string& id, const std::string& anchor, const std::string& expected,
         const std::string& computed) {
  r.checks.push_back({id, anchor, expected, computed, expected == computed, timer.lap()});
}

void add_int(Report& r, Timer& timer, const std::string& id, const std::string& anchor, long expected, long computed) {
  add(r, timer, id, anchor, std::to_string(expected), std::to_string(computed));
}

void add_bool(Report& r, Timer& timer, const std::string& id, const std::string& anchor, bool expected, bool computed) {
  add(r, timer, id, anchor, expected ? "yes" : "no", computed ? "yes" : "no");
}

std::string join_types(const std::vector<std::string>& v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out + "}";
}

/// Cohomogeneity over three seeds; "<value>" when stable, else "unstable".
std::string stable_cohomogeneity(const Subalgebra& g, const SuiteOptions& opts) {
  int value = -1;
  for (uint64_t s = 0; s < 3; ++s) {
    const CohomogeneityResult res = cohomogeneity(g, opts.samples, opts.seed + s, opts.height);
    if (s == 0) {
      value = res.cohomogeneity;
    } else if (res.cohomogeneity != value) {
      return "unstable";
    }
  }
  return std::to_string(value);
}

std::string format_dips(const GeodesicScan& scan) {
  std::ostringstream out;
  bool first = true;
  for (const GeodesicDip& dip : scan.dips) {
    if (!first) out << ";";
    first = false;
    out << dip.orbit_dim << "@";
    if (dip.at_infinity) {
      out << "inf";
    } else {
      out << "[";
      for (size_t i = 0; i < dip.rational_params.size(); ++i) {
        out << (i ? "," : "") << dip.rational_params[i].get_str();
      }
      out << "]";
    }
  }
  return out.str();
}

std::string format_multiplicity_set(const GeodesicScan& scan) {
  if (!scan.multiplicities) return "none";
  std::set<int, std::greater<int>> distinct(scan.multiplicities->begin(), scan.multiplicities->end());
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (int m : distinct) {
    out << (first ? "" : ",") << m;
    first = false;
  }
  out << ")";
  return out.str();
}

}  // namespace

Report run_bds_suite(const SuiteOptions& opts) {
  Report r = make_report("borel-de-siebenthal", opts);
  Timer t;
  const Diagram ext = f4_extended_diagram();
  add(r, t, "bds/delete-node-1", "extended diagram, second node from the left", "{A1,C3}",
      join_types(delete_nodes(ext, {1})));
  add(r, t, "bds/delete-middle", "extended diagram, middle node", "{A2,A2}", join_types(delete_nodes(ext, {2})));
  add(r, t, "bds/delete-node-4", "extended diagram, last node", "{B4}", join_types(delete_nodes(ext, {4})));

  const auto entries = bds_enumerate();
  const auto has = [&entries](const std::vector<std::string>& want) {
    for (const auto& e : entries) {
      if (e.types == want) return true;
    }
    return false;
  };
  add_bool(r, t, "bds/enumerate", "single-node deletions", true,
           has({"A1", "C3"}) && has({"A2", "A2"}) && has({"B4"}));
  return r;
}

namespace {

struct Table4Row {
  std::string name;
  SubmanifoldKind kind;
  int sphere_k;
  int z_dim;
  int n_dim;
  int cohom;
  bool slice_polar;
  int slice_ambient;
};

const std::vector<Table4Row>& table4_rows() {
  static const std::vector<Table4Row> rows = {
      {"pt", SubmanifoldKind::CaP2, 0, 36, 36, 1, true, 16},  // kind unused for pt
      {"RP2", SubmanifoldKind::RP2, 0, 14, 17, 2, true, 14},
      {"CP2", SubmanifoldKind::CP2, 0, 8, 16, 2, true, 12},
      {"HP2", SubmanifoldKind::HP2, 0, 3, 24, 1, true, 8},
      {"S1", SubmanifoldKind::SphereK, 1, 21, 22, 2, true, 15},
      {"S2", SubmanifoldKind::SphereK, 2, 15, 18, 2, true, 14},
      {"S3", SubmanifoldKind::SphereK, 3, 10, 16, 3, false, 13},
      {"S4", SubmanifoldKind::SphereK, 4, 6, 16, 3, true, 12},
      {"S5", SubmanifoldKind::SphereK, 5, 3, 18, 2, true, 11},
      {"S6", SubmanifoldKind::SphereK, 6, 1, 22, 2, true, 10},
      {"S7", SubmanifoldKind::SphereK, 7, 0, 28, 2, true, 9},
      {"S8", SubmanifoldKind::SphereK, 8, 0, 36, 1, true, 8},
  };
  return rows;
}

}  // namespace

Report run_table4_suite(const SuiteOptions& opts) {
  Report r = make_report("table4", opts);
  const Subalgebra& f4 = shared_f4();

  for (const Table4Row& row : table4_rows()) {
    Timer t;
    const std::string anchor = "table4:" + row.name;
    Subalgebra n_alg;
    Subspace span;
    if (row.name == "pt") {
      MatQ one_row = basepoint().coords().transpose();
      span = Subspace::span_of_rows(one_row);
      n_alg = stabilizer(f4, basepoint());
    } else {
      RationalSampler sampler(opts.seed, opts.height);
      const SubmanifoldSample sample = split_form_points(row.kind, sampler, row.sphere_k);
      span = sample.linear_span;
      n_alg = preserver(f4, sample);
    }
    add_int(r, t, "table4/" + row.name + "/zp-dim", anchor + ":Z(P)", row.z_dim, annihilator(f4, span).dim());
    add_int(r, t, "table4/" + row.name + "/np-dim", anchor + ":N(P)", row.n_dim, n_alg.dim());
    add(r, t, "table4/" + row.name + "/cohom", anchor + ":Cohom", std::to_string(row.cohom),
        stable_cohomogeneity(n_alg, opts));
    const SliceRep slice = slice_rep(n_alg, basepoint());
    add_int(r, t, "table4/" + row.name + "/slice-ambient", anchor + ":slice", row.slice_ambient,
            slice.action.ambient_dim);
    add_bool(r, t, "table4/" + row.name + "/slice-polar", anchor + ":Polar?", row.slice_polar,
             rep_polar_test(slice.action, opts.seed).polar);
  }
  return r;
}

Report run_table3_cohom1_suite(const SuiteOptions& opts) {
  Report r = make_report("table3-cohomogeneity-one", opts);
  const Subalgebra& f4 = shared_f4();
  Timer t;

  const Subalgebra spin9 = stabilizer(f4, basepoint());
  const GeodesicScan scan9 = geodesic_orbit_scan(spin9, Octonion::one(), opts.samples, opts.seed);
  add(r, t, "table3/spin9/dips", "table3:Spin9", "0@[0];8@inf", format_dips(scan9));
  add(r, t, "table3/spin9/multiplicities", "table3:Spin9", "(15,7)", format_multiplicity_set(scan9));

  RationalSampler sampler(opts.seed, opts.height);
  const Subalgebra sp3sp1 = preserver(f4, split_form_points(SubmanifoldKind::HP2, sampler));
  const GeodesicScan scan_sp = geodesic_orbit_scan(sp3sp1, Octonion::unit(4), opts.samples, opts.seed);
  add_int(r, t, "table3/sp3sp1/dim", "table3:Sp3Sp1", 24, sp3sp1.dim());
  add(r, t, "table3/sp3sp1/dips", "table3:Sp3Sp1", "8@[0];11@[-1,1];8@inf", format_dips(scan_sp));
  add(r, t, "table3/sp3sp1/multiplicities", "table3:Sp3Sp1", "(7,4)", format_multiplicity_set(scan_sp));

  const GeodesicScan scan_f4 = geodesic_orbit_scan(f4, Octonion::one(), opts.samples, opts.seed);
  add(r, t, "table3/f4/no-dips", "transitive action", "", format_dips(scan_f4));
  return r;
}

Report run_g2so3_suite(const SuiteOptions& opts) {
  Report r = make_report("g2so3", opts);
  Timer t;
  const Subalgebra& g = so3_g2();
  const Subalgebra& g2 = octonion_derivations();
  const Subalgebra& sp1 = sp1_right();

  const SliceRep slice = slice_rep(g, basepoint());
  add_int(r, t, "g2so3/slice-ambient", "basepoint slice", 14, slice.action.ambient_dim);
  add_int(r, t, "g2so3/slice-algebra-dim", "basepoint slice", 15, slice.isotropy.dim());
  add_bool(r, t, "g2so3/slice-polar", "basepoint slice", true, rep_polar_test(slice.action, opts.seed).polar);
  add_int(r, t, "g2so3/slice-cohom", "basepoint slice", 2, rep_cohomogeneity(slice.action, opts.seed).cohomogeneity);
  add(r, t, "g2so3/cohom", "action on the variety", "2", stable_cohomogeneity(g, opts));

  const CayleyPoint q = vh_family_point(rat(3, 5), rat(4, 5), rat(0));
  std::vector<FixedPointOp> iso = fixed_ops(sp1);
  iso.push_back(FixedPointOp::from_automorphism(h1()));
  iso.push_back(FixedPointOp::from_automorphism(h2()));
  add_int(r, t, "g2so3/fixed-vh", "principal isotropy fixed set", 2, fixed_set_dimension(iso, q));
  add_bool(r, t, "g2so3/asystatic", "asystaticity criterion", true, asystatic_check(g, q, iso));

  RationalSampler sampler(opts.seed, opts.height);
  add_bool(r, t, "g2so3/section-vh", "fixed family as section", true,
           section_check(g, split_form_points(SubmanifoldKind::VHFamily, sampler)));
  add_bool(r, t, "g2so3/section-rp2-rejected", "orbit is not a section", false,
           section_check(g, split_form_points(SubmanifoldKind::RP2, sampler)));

  add_int(r, t, "g2so3/normalizer-in-g2", "normalizer of the principal isotropy", 6, normalizer(g2, sp1).dim());
  add_int(r, t, "g2so3/normalizer-in-so3g2", "normalizer of the principal isotropy", 9, normalizer(g, sp1).dim());

  add_int(r, t, "g2so3/vh0-fixed-dim", "identity-component reduction", 8,
          fixed_set_dimension(fixed_ops(sp1), basepoint()));

  const LinearGroupAction reduction = real_tensor_action(3, 4);
  add_bool(r, t, "g2so3/reduction-polar", "reduced 12-dim representation", true,
           rep_polar_test(reduction, opts.seed).polar);
  add_int(r, t, "g2so3/reduction-cohom", "reduced 12-dim representation", 3,
          rep_cohomogeneity(reduction, opts.seed).cohomogeneity);
  return r;
}

Report run_slice_arcs_suite(const SuiteOptions& opts) {
  Report r = make_report("slice-arcs", opts);
  const Subalgebra& f4 = shared_f4();
  Timer t;
  const Subalgebra spin9 = stabilizer(f4, basepoint());

  const auto arc_string = [&opts](const Subalgebra& g) {
    const SliceRep slice = slice_rep(g, basepoint());
    const auto [lo, hi] = slice_arc_dims(slice.action, opts.seed);
    std::ostringstream out;
    out << "(" << lo << "," << hi << ")";
    return out.str();
  };

  const Subalgebra spin7so2 = spin9_splitting(spin9, 2);
  add_int(r, t, "arcs/spin7so2/dim", "spin7+so2 in the point stabilizer", 22, spin7so2.dim());
  add(r, t, "arcs/spin7so2", "singular arc endpoints", "(8,13)", arc_string(spin7so2));

  const Subalgebra su4su2 = spin9_splitting(spin9, 3);
  add_int(r, t, "arcs/su4su2/dim", "su4+su2 in the point stabilizer", 18, su4su2.dim());
  add(r, t, "arcs/su4su2", "singular arc endpoints", "(9,12)", arc_string(su4su2));

  RationalSampler sampler(opts.seed, opts.height);
  const Subalgebra su3su3 = preserver(f4, split_form_points(SubmanifoldKind::CP2, sampler));
  add_int(r, t, "arcs/su3su3/dim", "normalizer of the complex plane", 16, su3su3.dim());
  add(r, t, "arcs/su3su3", "singular arc endpoints", "(7,8)", arc_string(su3su3));
  return r;
}

Report run_tables12_suite(const SuiteOptions& opts) {
  Report r = make_report("tables12", opts);
  for (const TableRow& row : tables12_rows()) {
    std::vector<int> ns;
    if (row.min_n == 0) {
      ns = {0};
    } else {
      ns = {2, 3};
      if (opts.extra_table_n > 3) ns.push_back(opts.extra_table_n);
    }
    for (int n : ns) {
      Timer t;
      bool nonpolar = true;
      bool cohom_ok = true;
      int sphere_cohom = -1;
      for (uint64_t s = 0; s < 3; ++s) {
        const RowCheck check = verify_row(row, n, opts.seed + s);
        nonpolar = nonpolar && check.nonpolar_ok;
        cohom_ok = cohom_ok && check.cohomogeneity_ok;
        if (s == 0) {
          sphere_cohom = check.sphere_cohomogeneity;
        } else if (check.sphere_cohomogeneity != sphere_cohom) {
          cohom_ok = false;
        }
      }
      const std::string tag = row.id + (row.min_n ? "/n=" + std::to_string(n) : "");
      add_bool(r, t, "tables12/" + tag + "/nonpolar", row.source, true, nonpolar);
      add(r, t, "tables12/" + tag + "/sphere-cohom", row.source + " -> " + row.orbit_space,
          std::to_string(row.quotient_dim), cohom_ok ? std::to_string(sphere_cohom) : "unstable");
    }
  }
  return r;
}

Report run_chain_suite(const SuiteOptions& opts) {
  Report r = make_report("chain", opts);
  Timer t;
  const Subalgebra& g2 = octonion_derivations();
  const Subalgebra& sp1 = sp1_right();

  RationalSampler sampler(opts.seed, opts.height);
  const SubmanifoldSample rp2 = split_form_points(SubmanifoldKind::RP2, sampler);
  const SubmanifoldSample cp2 = split_form_points(SubmanifoldKind::CP2, sampler);
  const SubmanifoldSample hp2 = split_form_points(SubmanifoldKind::HP2, sampler);
  const SubmanifoldSample cap2 = split_form_points(SubmanifoldKind::CaP2, sampler);

  const Subalgebra su3 = annihilator(g2, cp2.linear_span);
  add_int(r, t, "chain/su3-dim", "annihilator of the complex plane in g2", 8, su3.dim());

  add_int(r, t, "chain/fixed-g2", "fixed set of g2 at the basepoint", 2,
          fixed_set_dimension(fixed_ops(g2), basepoint()));
  add_int(r, t, "chain/fixed-su3", "fixed set of su3 at the basepoint", 4,
          fixed_set_dimension(fixed_ops(su3), basepoint()));
  add_int(r, t, "chain/fixed-sp1", "fixed set of sp1 at the basepoint", 8,
          fixed_set_dimension(fixed_ops(sp1), basepoint()));

  const auto strict = [](const Subspace& a, const Subspace& b) { return b.contains(a) && a.dim() < b.dim(); };
  add_bool(r, t, "chain/span-inclusions", "real < complex < quaternion < octonion planes", true,
           strict(rp2.linear_span, cp2.linear_span) && strict(cp2.linear_span, hp2.linear_span) &&
               strict(hp2.linear_span, cap2.linear_span));
  std::ostringstream dims;
  dims << rp2.linear_span.dim() << "," << cp2.linear_span.dim() << "," << hp2.linear_span.dim() << ","
       << cap2.linear_span.dim();
  add(r, t, "chain/span-dims", "linear hull dimensions", "6,9,15,27", dims.str());
  return r;
}

Report run_asystatic_suite(const SuiteOptions& opts) {
  Report r = make_report("asystatic", opts);
  const Subalgebra& f4 = shared_f4();
  const Subalgebra spin9 = stabilizer(f4, basepoint());

  struct Row {
    std::string name;
    const Subalgebra* algebra;
    int iso_dim;
    int expected_fixed;
    int expected_cohom;
  };
  RationalSampler sampler(opts.seed, opts.height);
  const Subalgebra spin8 = preserver(f4, split_form_points(SubmanifoldKind::SphereK, sampler, 7));
  const Subalgebra spin7so2 = spin9_splitting(spin9, 2);
  const std::vector<Row> rows = {
      {"spin9", &spin9, 21, 1, 1},
      {"spin8", &spin8, 14, 2, 2},
      {"spin7so2", &spin7so2, 8, 4, 2},  // connected level: excess 2 over the cohomogeneity
  };

  for (const Row& row : rows) {
    Timer t;
    bool stable = true;
    int fixed = -1, iso = -1, cohom = -1;
    for (uint64_t s = 0; s < 3; ++s) {
      const CohomogeneityResult res = cohomogeneity(*row.algebra, opts.samples, opts.seed + s, opts.height);
      const CayleyPoint q{JordanElement::from_coords(res.witness)};
      const Subalgebra isotropy = stabilizer(*row.algebra, q);
      const int f = fixed_set_dimension(fixed_ops(isotropy), q);
      if (s == 0) {
        fixed = f;
        iso = isotropy.dim();
        cohom = res.cohomogeneity;
      } else if (f != fixed || isotropy.dim() != iso || res.cohomogeneity != cohom) {
        stable = false;
      }
    }
    std::ostringstream expected, computed;
    expected << "iso=" << row.iso_dim << ",fixed=" << row.expected_fixed << ",cohom=" << row.expected_cohom;
    if (stable) {
      computed << "iso=" << iso << ",fixed=" << fixed << ",cohom=" << cohom;
    } else {
      computed << "unstable";
    }
    add(r, t, "asystatic/" + row.name, "principal isotropy fixed set", expected.str(), computed.str());
  }
  return r;
}

Report run_nonpolar_suite(const SuiteOptions& opts) {
  Report r = make_report("nonpolar-restrictions", opts);
  const Subalgebra& f4 = shared_f4();
  Timer t;

  RationalSampler sampler(opts.seed, opts.height);
  const Subalgebra sp3sp1 = preserver(f4, split_form_points(SubmanifoldKind::HP2, sampler));
  const Subalgebra iso16 = stabilizer(sp3sp1, basepoint());
  add_int(r, t, "nonpolar/sp2sp1sp1/dim", "basepoint isotropy of sp3+sp1", 16, iso16.dim());
  const LinearGroupAction restricted =
      restrict_action(iso16.basis, tangent_space(basepoint()), trace_form_gram());
  const PolarityVerdict v1 = rep_polar_test(restricted, opts.seed);
  add_bool(r, t, "nonpolar/sp2sp1sp1/nonpolar", "restricted 16-dim representation", true,
           !v1.polar && v1.recheck(restricted));

  const LinearGroupAction su2su2 = su2_su2_spin_restriction();
  add_bool(r, t, "nonpolar/su2su2/wellformed", "restricted 16-dim representation", true,
           su2su2.gram_skew() && su2su2.bracket_closed());
  const PolarityVerdict v2 = rep_polar_test(su2su2, opts.seed);
  add_bool(r, t, "nonpolar/su2su2/nonpolar", "restricted 16-dim representation", true,
           !v2.polar && v2.recheck(su2su2));

  const LinearGroupAction sp2sp2 = sp_sp_quaternion_tensor(2, 2);
  add_int(r, t, "nonpolar/sp2sp2-tensor/cohom", "irreducible envelope of the restriction", 2,
          rep_cohomogeneity(sp2sp2, opts.seed).cohomogeneity);
  return r;
}

std::vector<Report> run_all_suites(const SuiteOptions& opts) {
  return {run_bds_suite(opts),       run_chain_suite(opts),      run_g2so3_suite(opts),
          run_table4_suite(opts),    run_table3_cohom1_suite(opts), run_slice_arcs_suite(opts),
          run_asystatic_suite(opts), run_nonpolar_suite(opts),   run_tables12_suite(opts)};
}

}  // namespace cayley
