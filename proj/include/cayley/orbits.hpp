#pragma once

#include <optional>

#include <json.hpp>

#include "cayley/automorphism.hpp"
#include "cayley/pencil.hpp"

namespace cayley {

/// A Lie algebra of gram-skew operators on Q^n, the common currency for
/// slice representations and the classification-table representations.
struct LinearGroupAction {
  enum class Constraint { None, UnitSphere, CayleyVariety };

  int ambient_dim = 0;
  MatQ gram;  // symmetric positive definite
  std::vector<MatQ> operators;
  Constraint constraint = Constraint::None;

  static LinearGroupAction standard(std::vector<MatQ> ops, int n);

  /// Orbit dimension at v: rank of {X v}.
  int orbit_dim(const VecQ& v) const;
  bool gram_skew() const;
  bool bracket_closed() const;
};

/// Span of {D(x) : D in g}; always inside the tangent space of the variety.
Subspace orbit_tangent(const Subalgebra& g, const CayleyPoint& x);

struct CohomogeneityResult {
  int cohomogeneity = 0;
  int max_orbit_dim = 0;
  VecQ witness;  // a maximizing point, 27 coordinates
  int hits_at_max = 0;
  bool genericity_warning = false;  // max attained fewer than 3 times
};

/// 16 minus the maximal orbit dimension over seeded chart points.
CohomogeneityResult cohomogeneity(const Subalgebra& g, int n_samples, uint64_t seed, long height = 13);

/// Restriction of operators to an invariant subspace, in the coordinates of
/// its basis rows, with the inherited gram.
LinearGroupAction restrict_action(const std::vector<MatQ>& ops, const Subspace& w, const MatQ& gram);

struct SliceRep {
  LinearGroupAction action;
  MatQ frame;           // rows: the slice basis inside the 27-dim algebra
  Subalgebra isotropy;  // stabilizer of the point in g
};

/// Isotropy algebra at x acting on the gram-complement of the orbit inside
/// the tangent space, bracket closure re-verified after restriction.
SliceRep slice_rep(const Subalgebra& g, const CayleyPoint& x);

/// One operator whose fixed vectors matter: kernel for derivations,
/// kernel of (op - id) for automorphisms.
struct FixedPointOp {
  MatQ op;
  bool is_automorphism = false;

  static FixedPointOp from_derivation(MatQ d) { return {std::move(d), false}; }
  static FixedPointOp from_automorphism(const AutElement& a) { return {a.op(), true}; }
};

std::vector<FixedPointOp> fixed_ops(const Subalgebra& g);

/// dim( T_xV  intersect  ker D  intersect  ker(A - id) ) over the given
/// operators; x must be fixed by all of them.
int fixed_set_dimension(const std::vector<FixedPointOp>& ops, const CayleyPoint& x);

struct OrbitReport {
  Rational param;  // t, with (c, s) = ((1-t^2)/(1+t^2), 2t/(1+t^2))
  Rational c, s;
  VecQ point;
  int orbit_dim = 0;
  int isotropy_dim = 0;
  int slice_dim = 0;
  bool at_infinity = false;  // the antipodal parameter (c, s) = (-1, 0)
};

struct GeodesicDip {
  Poly factor;  // squarefree; its real roots are the dip parameters
  std::vector<Rational> rational_params;
  int orbit_dim = 0;
  bool at_infinity = false;
};

struct GeodesicScan {
  int generic_orbit_dim = 0;
  int cohomogeneity_on_v = 0;
  std::vector<OrbitReport> profile;
  std::vector<GeodesicDip> dips;
  /// One entry per dip, only for algebras of cohomogeneity at most one:
  /// (codimension of the singular orbit) - 1.
  std::optional<std::vector<int>> multiplicities;
};

/// Orbit dimensions along the rational circle
///   x(c,s) = [ (1+c)/2, (s/2)u, 0; ., (1-c)/2, 0; ., ., 0 ],
/// with exact dip locations from the rank stratification of the pencil.
/// Multiplicities are extracted only when the algebra has cohomogeneity
/// at most 1 on the variety.
GeodesicScan geodesic_orbit_scan(const Subalgebra& g, const Octonion& u, int n, uint64_t seed);

/// Exact rational coordinates included, so the reports re-verify externally.
nlohmann::json to_json(const OrbitReport& report);
nlohmann::json to_json(const GeodesicScan& scan);

}  // namespace cayley
