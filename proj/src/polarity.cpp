#include "cayley/polarity.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace cayley {

VecQ find_regular_vector(const LinearGroupAction& act, uint64_t seed, int* orbit_dim) {
  RationalSampler sampler(seed);
  int max_dim = -1;
  int run = 0;  // consecutive samples at the current max
  VecQ best;
  for (int i = 0; i < 50; ++i) {
    const VecQ v = sampler.vector(act.ambient_dim);
    const int d = act.orbit_dim(v);
    if (d > max_dim) {
      max_dim = d;
      best = v;
      run = 1;
    } else if (d == max_dim) {
      best = v;
      ++run;
    } else {
      run = 0;
    }
    if (run >= 5) {
      if (orbit_dim) *orbit_dim = max_dim;
      return best;
    }
  }
  throw std::runtime_error("no stable regular orbit dimension within the sample budget");
}

namespace {

Subspace normal_space_at(const LinearGroupAction& act, const VecQ& v) {
  MatQ rows(act.operators.size(), act.ambient_dim);
  for (size_t i = 0; i < act.operators.size(); ++i) rows.row(i) = (act.operators[i] * v).transpose();
  const Subspace orbit = Subspace::span_of_rows(rows);
  return gram_complement(orbit, Subspace::full(act.ambient_dim), act.gram);
}

}  // namespace

PolarityVerdict rep_polar_test(const LinearGroupAction& act, uint64_t seed) {
  PolarityVerdict verdict;
  verdict.regular_point = find_regular_vector(act, seed, &verdict.regular_orbit_dim);
  const Subspace nu = normal_space_at(act, verdict.regular_point);
  verdict.section_basis = nu.basis();

  for (size_t x = 0; x < act.operators.size(); ++x) {
    const MatQ pairing = nu.basis() * act.operators[x].transpose() * act.gram * nu.basis().transpose();
    for (int i = 0; i < pairing.rows(); ++i) {
      for (int j = 0; j < pairing.cols(); ++j) {
        if (!is_zero(pairing(i, j))) {
          PolarityWitness w;
          w.op_index = static_cast<int>(x);
          w.w = nu.basis().row(i).transpose();
          w.u = nu.basis().row(j).transpose();
          w.pairing = pairing(i, j);
          verdict.polar = false;
          verdict.witness = std::move(w);
          return verdict;
        }
      }
    }
  }
  verdict.polar = true;
  return verdict;
}

bool PolarityVerdict::recheck(const LinearGroupAction& act) const {
  if (!polar) {
    if (!witness) return false;
    const VecQ xw = act.operators[witness->op_index] * witness->w;
    Rational val = 0;
    for (int i = 0; i < act.ambient_dim; ++i) {
      for (int j = 0; j < act.ambient_dim; ++j) val += xw(i) * act.gram(i, j) * witness->u(j);
    }
    return val == witness->pairing && !is_zero(val);
  }
  for (const MatQ& x : act.operators) {
    const MatQ pairing = section_basis * x.transpose() * act.gram * section_basis.transpose();
    for (int i = 0; i < pairing.rows(); ++i) {
      for (int j = 0; j < pairing.cols(); ++j) {
        if (!is_zero(pairing(i, j))) return false;
      }
    }
  }
  return true;
}

RepCohomogeneity rep_cohomogeneity(const LinearGroupAction& act, uint64_t seed) {
  RationalSampler sampler(seed);
  RepCohomogeneity res;
  res.max_orbit_dim = -1;
  for (int i = 0; i < 50; ++i) {
    const VecQ v = sampler.vector(act.ambient_dim);
    const int d = act.orbit_dim(v);
    if (d > res.max_orbit_dim) {
      res.max_orbit_dim = d;
      res.witness = v;
      res.hits_at_max = 1;
    } else if (d == res.max_orbit_dim) {
      ++res.hits_at_max;
    }
  }
  res.cohomogeneity = act.ambient_dim - res.max_orbit_dim;
  res.genericity_warning = res.hits_at_max < 3;
  return res;
}

bool section_check(const Subalgebra& g, const SubmanifoldSample& sigma, std::string* failure) {
  const int cohom = cohomogeneity(g, 24, 1).cohomogeneity;
  const MatQ& gram = trace_form_gram();
  for (size_t i = 0; i < sigma.points.size(); ++i) {
    const Subspace& tangent = sigma.tangents[i];
    if (tangent.dim() != cohom) {
      if (failure) {
        std::ostringstream out;
        out << "point " << i << ": tangent dim " << tangent.dim() << " != cohomogeneity " << cohom;
        *failure = out.str();
      }
      return false;
    }
    const Subspace orbit = orbit_tangent(g, sigma.points[i]);
    if (orbit.dim() == 0 || tangent.dim() == 0) continue;
    const MatQ pairing = tangent.basis() * gram * orbit.basis().transpose();
    for (int a = 0; a < pairing.rows(); ++a) {
      for (int b = 0; b < pairing.cols(); ++b) {
        if (!is_zero(pairing(a, b))) {
          if (failure) {
            std::ostringstream out;
            out << "point " << i << ": tangent vector " << a << " pairs with orbit vector " << b << " to "
                << pairing(a, b).get_str();
            *failure = out.str();
          }
          return false;
        }
      }
    }
  }
  return true;
}

bool asystatic_check(const Subalgebra& g, const CayleyPoint& q, const std::vector<FixedPointOp>& isotropy_ops) {
  const int fixed = fixed_set_dimension(isotropy_ops, q);
  return fixed == cohomogeneity(g, 24, 1).cohomogeneity;
}

std::pair<int, int> slice_arc_dims(const LinearGroupAction& act, uint64_t seed) {
  int regular_dim = 0;
  const VecQ v = find_regular_vector(act, seed, &regular_dim);
  if (act.ambient_dim - regular_dim != 2) {
    throw std::invalid_argument("slice_arc_dims wants a cohomogeneity-two representation");
  }
  const Subspace nu = normal_space_at(act, v);

  // Rank stratification of the normal plane's direction pencil b1 + t b2.
  const VecQ b1 = nu.basis().row(0).transpose();
  const VecQ b2 = nu.basis().row(1).transpose();
  std::vector<MatQ> coeff(2, MatQ(act.ambient_dim, act.operators.size()));
  for (size_t i = 0; i < act.operators.size(); ++i) {
    coeff[0].col(i) = act.operators[i] * b1;
    coeff[1].col(i) = act.operators[i] * b2;
  }
  const PencilProfile profile = pencil_rank_profile(coeff);
  if (profile.generic_rank != regular_dim) {
    throw std::logic_error("slice_arc_dims: normal plane is not generically regular");
  }

  std::set<int> dims;
  for (const PencilLayer& layer : profile.layers) dims.insert(layer.rank_at_roots);
  const int at_infinity = rank(coeff[1]);  // the direction b2 itself
  if (at_infinity < regular_dim) dims.insert(at_infinity);

  if (dims.size() != 2) {
    std::ostringstream out;
    out << "slice_arc_dims: found " << dims.size() << " sub-maximal orbit dimensions, expected 2";
    throw std::runtime_error(out.str());
  }
  const int lo = *dims.begin();
  const int hi = *dims.rbegin();
  return {lo, hi};
}

nlohmann::json to_json(const PolarityVerdict& verdict) {
  const auto rationals = [](const VecQ& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v(i).get_str());
    return arr;
  };
  nlohmann::json j;
  j["polar"] = verdict.polar;
  j["regular_point"] = rationals(verdict.regular_point);
  j["regular_orbit_dim"] = verdict.regular_orbit_dim;
  nlohmann::json basis = nlohmann::json::array();
  for (int i = 0; i < verdict.section_basis.rows(); ++i) {
    basis.push_back(rationals(verdict.section_basis.row(i).transpose()));
  }
  j["normal_space_basis"] = std::move(basis);
  if (verdict.witness) {
    j["witness"] = {{"op_index", verdict.witness->op_index},
                    {"w", rationals(verdict.witness->w)},
                    {"u", rationals(verdict.witness->u)},
                    {"pairing", verdict.witness->pairing.get_str()}};
  }
  return j;
}

}  // namespace cayley
