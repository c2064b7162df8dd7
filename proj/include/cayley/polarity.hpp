#pragma once

#include "cayley/orbits.hpp"

namespace cayley {

struct PolarityWitness {
  int op_index = 0;
  VecQ w, u;          // normal-space vectors with <X w, u> != 0
  Rational pairing;
};

struct PolarityVerdict {
  bool polar = false;
  VecQ regular_point;
  int regular_orbit_dim = 0;
  MatQ section_basis;  // rows: basis of the normal space at the regular point
  std::optional<PolarityWitness> witness;  // present iff non-polar

  /// Re-evaluate the certificate from scratch (exact arithmetic).
  bool recheck(const LinearGroupAction& act) const;
};

/// Section-orthogonality criterion at a regular vector: polar iff
/// <X w, u> = 0 for every operator X and all w, u in the normal space.
/// The regular vector is found by seeded sampling with a stability rule
/// (5 consecutive ties at the maximal orbit dimension, budget 50);
/// failure to stabilize throws.
PolarityVerdict rep_polar_test(const LinearGroupAction& act, uint64_t seed);

struct RepCohomogeneity {
  int cohomogeneity = 0;
  int max_orbit_dim = 0;
  VecQ witness;
  int hits_at_max = 0;
  bool genericity_warning = false;
};

/// ambient_dim minus the maximal sampled orbit dimension.
RepCohomogeneity rep_cohomogeneity(const LinearGroupAction& act, uint64_t seed);

/// True iff at every sample point the tangent of sigma has dimension equal
/// to the cohomogeneity of g on the variety and pairs to zero with the
/// orbit tangent. On failure, *failure describes the first bad point.
bool section_check(const Subalgebra& g, const SubmanifoldSample& sigma, std::string* failure = nullptr);

/// Criterion for asystaticity: the fixed-point dimension of the supplied
/// isotropy operators at q equals the cohomogeneity of g.
bool asystatic_check(const Subalgebra& g, const CayleyPoint& q, const std::vector<FixedPointOp>& isotropy_ops);

/// The two singular orbit dimensions on the unit sphere of a
/// cohomogeneity-two representation, located exactly: the normal plane at a
/// regular vector meets every orbit, and the rank stratification of the
/// pencil across that plane lists every direction (rational or not) where
/// the orbit dimension drops. Returns the pair sorted ascending; throws if
/// the number of distinct sub-maximal dimensions is not two.
std::pair<int, int> slice_arc_dims(const LinearGroupAction& act, uint64_t seed);

/// Shared regular-vector search (stability rule as in rep_polar_test).
VecQ find_regular_vector(const LinearGroupAction& act, uint64_t seed, int* orbit_dim);

/// Serialized with the exact witness so the certificate re-verifies
/// externally.
nlohmann::json to_json(const PolarityVerdict& verdict);

}  // namespace cayley
