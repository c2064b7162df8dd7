#include "cayley/orbits.hpp"

#include <stdexcept>

namespace cayley {

LinearGroupAction LinearGroupAction::standard(std::vector<MatQ> ops, int n) {
  LinearGroupAction act;
  act.ambient_dim = n;
  act.gram = MatQ::Identity(n, n);
  act.operators = std::move(ops);
  return act;
}

int LinearGroupAction::orbit_dim(const VecQ& v) const {
  if (operators.empty()) return 0;
  MatQ m(ambient_dim, operators.size());
  for (size_t i = 0; i < operators.size(); ++i) m.col(i) = operators[i] * v;
  return rank(m);
}

bool LinearGroupAction::gram_skew() const {
  for (const MatQ& x : operators) {
    const MatQ s = x.transpose() * gram + gram * x;
    for (int i = 0; i < ambient_dim; ++i) {
      for (int j = 0; j < ambient_dim; ++j) {
        if (!is_zero(s(i, j))) return false;
      }
    }
  }
  return true;
}

bool LinearGroupAction::bracket_closed() const {
  if (operators.empty()) return true;
  MatQ flat(operators.size(), ambient_dim * ambient_dim);
  for (size_t i = 0; i < operators.size(); ++i) flat.row(i) = flatten_op(operators[i]);
  const Subspace span = Subspace::span_of_rows(flat);
  for (size_t i = 0; i < operators.size(); ++i) {
    for (size_t j = i + 1; j < operators.size(); ++j) {
      if (!span.contains(VecQ(flatten_op(bracket(operators[i], operators[j])).transpose()))) return false;
    }
  }
  return true;
}

Subspace orbit_tangent(const Subalgebra& g, const CayleyPoint& x) {
  if (g.dim() == 0) return Subspace::zero(kJordanDim);
  MatQ rows(g.dim(), kJordanDim);
  const VecQ xc = x.coords();
  for (int i = 0; i < g.dim(); ++i) rows.row(i) = (g.basis[i] * xc).transpose();
  return Subspace::span_of_rows(rows);
}

CohomogeneityResult cohomogeneity(const Subalgebra& g, int n_samples, uint64_t seed, long height) {
  if (n_samples < 20) throw std::invalid_argument("cohomogeneity wants n_samples >= 20");
  RationalSampler sampler(seed, height);
  CohomogeneityResult res;
  res.max_orbit_dim = -1;
  for (int i = 0; i < n_samples; ++i) {
    const CayleyPoint x = random_chart_point(sampler);
    const int d = orbit_tangent(g, x).dim();
    if (d > res.max_orbit_dim) {
      res.max_orbit_dim = d;
      res.witness = x.coords();
      res.hits_at_max = 1;
    } else if (d == res.max_orbit_dim) {
      ++res.hits_at_max;
    }
  }
  res.cohomogeneity = 16 - res.max_orbit_dim;
  res.genericity_warning = res.hits_at_max < 3;
  return res;
}

namespace {

/// Solve a X = b column-by-column; throws if any column is inconsistent.
MatQ solve_multi(const MatQ& a, const MatQ& b) {
  MatQ x(a.cols(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    const auto col = solve_linear(a, b.col(j));
    if (!col) throw std::runtime_error("solve_multi: inconsistent system");
    x.col(j) = *col;
  }
  return x;
}

}  // namespace

LinearGroupAction restrict_action(const std::vector<MatQ>& ops, const Subspace& w, const MatQ& gram) {
  LinearGroupAction act;
  act.ambient_dim = w.dim();
  const MatQ bt = w.basis().transpose();  // 27 x d
  act.gram = w.basis() * gram * bt;
  for (const MatQ& op : ops) {
    // Coordinates of op(b_i) in the w basis; op must preserve w.
    act.operators.push_back(solve_multi(bt, op * bt));
  }
  return act;
}

SliceRep slice_rep(const Subalgebra& g, const CayleyPoint& x) {
  SliceRep out;
  out.isotropy = stabilizer(g, x);
  const Subspace tangent = tangent_space(x);
  const Subspace orbit = orbit_tangent(g, x);
  const Subspace slice = gram_complement(orbit, tangent, trace_form_gram());
  out.frame = slice.basis();
  std::vector<MatQ> ops(out.isotropy.basis.begin(), out.isotropy.basis.end());
  out.action = restrict_action(ops, slice, trace_form_gram());
  if (!out.action.bracket_closed()) throw std::runtime_error("slice_rep: restriction is not bracket closed");
  return out;
}

std::vector<FixedPointOp> fixed_ops(const Subalgebra& g) {
  std::vector<FixedPointOp> ops;
  ops.reserve(g.dim());
  for (const auto& d : g.basis) ops.push_back(FixedPointOp::from_derivation(d));
  return ops;
}

int fixed_set_dimension(const std::vector<FixedPointOp>& ops, const CayleyPoint& x) {
  const VecQ xc = x.coords();
  std::vector<MatQ> blocks;
  blocks.push_back(2 * jordan_left_mult(x.value()) - MatQ::Identity(kJordanDim, kJordanDim));
  MatQ trace_row = MatQ::Zero(1, kJordanDim);
  for (int j = 0; j < 3; ++j) trace_row(0, j) = 1;
  blocks.push_back(trace_row);
  for (const FixedPointOp& op : ops) {
    const MatQ cond = op.is_automorphism ? MatQ(op.op - MatQ::Identity(kJordanDim, kJordanDim)) : op.op;
    const VecQ at_x = cond * xc;
    for (int i = 0; i < kJordanDim; ++i) {
      if (!is_zero(at_x(i))) throw std::invalid_argument("fixed_set_dimension: x is not fixed by the operators");
    }
    blocks.push_back(cond);
  }
  return kernel_stacked(blocks, kJordanDim).dim();
}

GeodesicScan geodesic_orbit_scan(const Subalgebra& g, const Octonion& u, int n, uint64_t seed) {
  if (u.norm() != 1) throw std::invalid_argument("geodesic_orbit_scan wants a unit octonion");
  GeodesicScan scan;
  scan.cohomogeneity_on_v = cohomogeneity(g, 24, seed).cohomogeneity;

  // Cleared of the 1 + t^2 denominator the circle is the quadratic pencil
  // x(t) = E11 + t F12(u) + t^2 E22.
  const VecQ c0 = JordanElement::diag_unit(0).coords();
  const VecQ c1 = JordanElement::off_unit(0, 1, u).coords();
  const VecQ c2 = JordanElement::diag_unit(1).coords();
  std::vector<MatQ> coeff(3, MatQ(kJordanDim, g.dim()));
  for (int i = 0; i < g.dim(); ++i) {
    coeff[0].col(i) = g.basis[i] * c0;
    coeff[1].col(i) = g.basis[i] * c1;
    coeff[2].col(i) = g.basis[i] * c2;
  }

  const PencilProfile profile = pencil_rank_profile(coeff);
  scan.generic_orbit_dim = profile.generic_rank;

  for (const PencilLayer& layer : profile.layers) {
    GeodesicDip dip;
    dip.factor = layer.factor;
    dip.rational_params = layer.rational_roots;
    dip.orbit_dim = layer.rank_at_roots;
    scan.dips.push_back(std::move(dip));
  }
  const int dim_at_infinity = rank(coeff[2]);
  if (dim_at_infinity < scan.generic_orbit_dim) {
    GeodesicDip dip;
    dip.orbit_dim = dim_at_infinity;
    dip.at_infinity = true;
    scan.dips.push_back(std::move(dip));
  }

  // Sampled profile; always includes t = 0, +-1 and the antipode.
  RationalSampler sampler(seed);
  std::vector<Rational> params = {Rational(0), Rational(1), Rational(-1)};
  while (static_cast<int>(params.size()) < n) params.push_back(sampler.next());
  for (const Rational& t : params) {
    OrbitReport rep;
    rep.param = t;
    const Rational den = 1 + t * t;
    rep.c = (1 - t * t) / den;
    rep.s = 2 * t / den;
    rep.point = circle_point(rep.c, rep.s, u).coords();
    rep.orbit_dim = rank(eval_pencil(coeff, t));
    rep.isotropy_dim = g.dim() - rep.orbit_dim;
    rep.slice_dim = 16 - rep.orbit_dim;
    scan.profile.push_back(std::move(rep));
  }
  {
    OrbitReport rep;
    rep.at_infinity = true;
    rep.c = -1;
    rep.s = 0;
    rep.point = circle_point(rep.c, rep.s, u).coords();
    rep.orbit_dim = dim_at_infinity;
    rep.isotropy_dim = g.dim() - rep.orbit_dim;
    rep.slice_dim = 16 - rep.orbit_dim;
    scan.profile.push_back(std::move(rep));
  }

  // Cross-check: sampled dimensions match the pencil stratification.
  for (const OrbitReport& rep : scan.profile) {
    if (rep.at_infinity) continue;
    int expected = scan.generic_orbit_dim;
    for (const GeodesicDip& dip : scan.dips) {
      if (!dip.at_infinity && is_zero(dip.factor.eval(rep.param))) expected = dip.orbit_dim;
    }
    if (rep.orbit_dim != expected) throw std::logic_error("geodesic_orbit_scan: profile disagrees with pencil");
  }

  if (scan.cohomogeneity_on_v <= 1) {
    std::vector<int> mult;
    mult.reserve(scan.dips.size());
    for (const GeodesicDip& dip : scan.dips) mult.push_back(16 - dip.orbit_dim - 1);
    scan.multiplicities = std::move(mult);
  }
  return scan;
}

namespace {

nlohmann::json rationals_json(const VecQ& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v(i).get_str());
  return arr;
}

}  // namespace

nlohmann::json to_json(const OrbitReport& report) {
  nlohmann::json j;
  j["at_infinity"] = report.at_infinity;
  if (!report.at_infinity) j["param"] = report.param.get_str();
  j["c"] = report.c.get_str();
  j["s"] = report.s.get_str();
  j["point"] = rationals_json(report.point);
  j["orbit_dim"] = report.orbit_dim;
  j["isotropy_dim"] = report.isotropy_dim;
  j["slice_dim"] = report.slice_dim;
  return j;
}

nlohmann::json to_json(const GeodesicScan& scan) {
  nlohmann::json j;
  j["generic_orbit_dim"] = scan.generic_orbit_dim;
  j["cohomogeneity_on_v"] = scan.cohomogeneity_on_v;
  j["profile"] = nlohmann::json::array();
  for (const OrbitReport& r : scan.profile) j["profile"].push_back(to_json(r));
  j["dips"] = nlohmann::json::array();
  for (const GeodesicDip& dip : scan.dips) {
    nlohmann::json d;
    d["orbit_dim"] = dip.orbit_dim;
    d["at_infinity"] = dip.at_infinity;
    if (!dip.at_infinity) {
      d["factor"] = dip.factor.str();
      nlohmann::json params = nlohmann::json::array();
      for (const Rational& t : dip.rational_params) params.push_back(t.get_str());
      d["rational_params"] = params;
    }
    j["dips"].push_back(std::move(d));
  }
  if (scan.multiplicities) j["multiplicities"] = *scan.multiplicities;
  return j;
}

}  // namespace cayley
