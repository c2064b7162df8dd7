#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/orbits.hpp"

using namespace cayley;

TEST_CASE("orbit tangents sit inside the variety tangent") {
  const Subalgebra& f4 = shared_f4();
  const Subalgebra spin9 = stabilizer(f4, basepoint());

  CHECK(orbit_tangent(spin9, basepoint()).dim() == 0);

  RationalSampler s(3);
  for (int trial = 0; trial < 5; ++trial) {
    const CayleyPoint x = random_chart_point(s);
    const Subspace orbit = orbit_tangent(spin9, x);
    CHECK(orbit.dim() == 15);  // distance spheres
    CHECK(tangent_space(x).contains(orbit));
  }
}

TEST_CASE("normal line of the sphere orbit inside the tangent space") {
  const Subalgebra& f4 = shared_f4();
  const Subalgebra spin9 = stabilizer(f4, basepoint());
  RationalSampler s(19);
  const CayleyPoint x = random_chart_point(s);
  const Subspace normal = gram_complement(orbit_tangent(spin9, x), tangent_space(x), trace_form_gram());
  CHECK(normal.dim() == 1);
}

TEST_CASE("rank-nullity between orbit and stabilizer") {
  const Subalgebra& f4 = shared_f4();
  RationalSampler s(5);
  const std::vector<const Subalgebra*> algebras = {&f4, &so3_g2(), &sp1_right()};
  for (const Subalgebra* g : algebras) {
    for (int trial = 0; trial < 4; ++trial) {
      const CayleyPoint x = random_chart_point(s);
      CHECK(orbit_tangent(*g, x).dim() + stabilizer(*g, x).dim() == g->dim());
    }
  }
}

TEST_CASE("cohomogeneities on the variety") {
  const Subalgebra& f4 = shared_f4();
  const CohomogeneityResult transitive = cohomogeneity(f4, 20, 1);
  CHECK(transitive.cohomogeneity == 0);
  CHECK(transitive.hits_at_max == 20);
  CHECK(!transitive.genericity_warning);
  CHECK(cohomogeneity(so3_g2(), 24, 1).cohomogeneity == 2);

  RationalSampler s(7);
  const Subalgebra spin4spin5 = preserver(f4, split_form_points(SubmanifoldKind::SphereK, s, 4));
  CHECK(spin4spin5.dim() == 16);
  for (uint64_t seed = 1; seed <= 3; ++seed) {
    CHECK(cohomogeneity(spin4spin5, 24, seed).cohomogeneity == 3);
  }
  CHECK_THROWS_AS(cohomogeneity(f4, 5, 1), std::invalid_argument);
}

TEST_CASE("slice representations") {
  const Subalgebra& f4 = shared_f4();

  // The transitive action has a trivial slice; the 16-dim spin
  // representation is the slice of the basepoint stabilizer's own action.
  CHECK(slice_rep(f4, basepoint()).action.ambient_dim == 0);
  const SliceRep full = slice_rep(stabilizer(f4, basepoint()), basepoint());
  CHECK(full.action.ambient_dim == 16);
  CHECK(full.isotropy.dim() == 36);
  CHECK(full.action.gram_skew());
  CHECK(full.action.bracket_closed());

  const SliceRep so3g2_slice = slice_rep(so3_g2(), basepoint());
  CHECK(so3g2_slice.action.ambient_dim == 14);
  CHECK(so3g2_slice.isotropy.dim() == 15);
  CHECK(so3g2_slice.action.gram_skew());

  RationalSampler s(9);
  const Subalgebra su3su3 = preserver(f4, split_form_points(SubmanifoldKind::CP2, s));
  const SliceRep su_slice = slice_rep(su3su3, basepoint());
  CHECK(su_slice.action.ambient_dim == 12);
  CHECK(su_slice.isotropy.dim() == 12);
}

TEST_CASE("fixed point dimensions and monotonicity") {
  const CayleyPoint q = vh_family_point(rat(3, 5), rat(4, 5), rat(0));

  std::vector<FixedPointOp> ops = fixed_ops(sp1_right());
  const int d0 = fixed_set_dimension(ops, q);
  ops.push_back(FixedPointOp::from_automorphism(h1()));
  const int d1 = fixed_set_dimension(ops, q);
  ops.push_back(FixedPointOp::from_automorphism(h2()));
  const int d2 = fixed_set_dimension(ops, q);
  CHECK(d0 >= d1);
  CHECK(d1 >= d2);
  CHECK(d2 == 2);

  CHECK(fixed_set_dimension(fixed_ops(sp1_right()), basepoint()) == 8);
  CHECK(fixed_set_dimension(fixed_ops(octonion_derivations()), basepoint()) == 2);

  // A point that is not fixed is rejected.
  RationalSampler s(11);
  const CayleyPoint generic = random_chart_point(s);
  CHECK_THROWS_AS(fixed_set_dimension(fixed_ops(octonion_derivations()), generic), std::invalid_argument);
}

TEST_CASE("geodesic scans: transitive, cohomogeneity one, refusal") {
  const Subalgebra& f4 = shared_f4();
  const Subalgebra spin9 = stabilizer(f4, basepoint());

  const GeodesicScan scan9 = geodesic_orbit_scan(spin9, Octonion::one(), 12, 1);
  CHECK(scan9.generic_orbit_dim == 15);
  REQUIRE(scan9.dips.size() == 2);
  CHECK(scan9.dips[0].orbit_dim == 0);
  CHECK(scan9.dips[0].rational_params == std::vector<Rational>{rat(0)});
  CHECK(scan9.dips[1].orbit_dim == 8);
  CHECK(scan9.dips[1].at_infinity);
  REQUIRE(scan9.multiplicities.has_value());
  CHECK(*scan9.multiplicities == std::vector<int>{15, 7});

  const GeodesicScan scan_f4 = geodesic_orbit_scan(f4, Octonion::one(), 12, 1);
  CHECK(scan_f4.generic_orbit_dim == 16);
  CHECK(scan_f4.dips.empty());

  // Cohomogeneity-two algebras get a profile but no multiplicities.
  RationalSampler s(13);
  const Subalgebra spin8 = preserver(f4, split_form_points(SubmanifoldKind::SphereK, s, 7));
  const GeodesicScan scan8 = geodesic_orbit_scan(spin8, Octonion::unit(7), 12, 1);
  CHECK(scan8.cohomogeneity_on_v == 2);
  CHECK(!scan8.multiplicities.has_value());
  CHECK(!scan8.profile.empty());
}

TEST_CASE("scans serialize with exact rational coordinates") {
  const Subalgebra& f4 = shared_f4();
  const Subalgebra spin9 = stabilizer(f4, basepoint());
  const GeodesicScan scan = geodesic_orbit_scan(spin9, Octonion::one(), 8, 1);
  const nlohmann::json j = to_json(scan);
  CHECK(j.at("generic_orbit_dim") == 15);
  CHECK(j.at("multiplicities") == std::vector<int>({15, 7}));
  // The t = 0 report is the basepoint with exact entries.
  bool found_basepoint = false;
  for (const auto& rep : j.at("profile")) {
    if (!rep.at("at_infinity").get<bool>() && rep.at("param") == "0") {
      CHECK(rep.at("point").at(0) == "1");
      CHECK(rep.at("orbit_dim") == 0);
      found_basepoint = true;
    }
  }
  CHECK(found_basepoint);
}

TEST_CASE("chart point orbits under the point stabilizer stay below hypersurface dimension") {
  const Subalgebra& f4 = shared_f4();
  const Subalgebra spin9 = stabilizer(f4, basepoint());
  RationalSampler s(17);
  for (int trial = 0; trial < 50; ++trial) {
    CHECK(orbit_tangent(spin9, random_chart_point(s)).dim() <= 15);
  }
}
