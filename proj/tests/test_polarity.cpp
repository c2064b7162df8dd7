#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/polarity.hpp"
#include "cayley/repcheck.hpp"

using namespace cayley;

TEST_CASE("polarity of the basepoint slice of the rotation-octonion action") {
  const SliceRep slice = slice_rep(so3_g2(), basepoint());
  const PolarityVerdict v1 = rep_polar_test(slice.action, 1);
  CHECK(v1.polar);
  CHECK(v1.recheck(slice.action));

  const RepCohomogeneity cohom = rep_cohomogeneity(slice.action, 1);
  CHECK(cohom.cohomogeneity == 2);
  CHECK(static_cast<int>(v1.section_basis.rows()) == 2);  // dim nu = cohomogeneity

  // Verdicts do not depend on the seed.
  const PolarityVerdict v2 = rep_polar_test(slice.action, 77);
  CHECK(v2.polar == v1.polar);
}

TEST_CASE("trivial algebra has full cohomogeneity and is polar") {
  LinearGroupAction trivial = LinearGroupAction::standard({}, 5);
  CHECK(rep_cohomogeneity(trivial, 1).cohomogeneity == 5);
  CHECK(rep_polar_test(trivial, 1).polar);
}

TEST_CASE("non-polar restriction detected with a reusable witness") {
  const LinearGroupAction act = su2_su2_spin_restriction();
  REQUIRE(act.gram_skew());
  REQUIRE(act.bracket_closed());
  const PolarityVerdict v = rep_polar_test(act, 1);
  CHECK(!v.polar);
  REQUIRE(v.witness.has_value());
  CHECK(v.recheck(act));

  const PolarityVerdict v2 = rep_polar_test(act, 1234);
  CHECK(!v2.polar);

  // The serialized witness carries enough to re-verify externally.
  const nlohmann::json j = to_json(v);
  CHECK(j.at("polar") == false);
  const auto& w = j.at("witness");
  const int op = w.at("op_index");
  VecQ wv(act.ambient_dim), uv(act.ambient_dim);
  for (int i = 0; i < act.ambient_dim; ++i) {
    wv(i) = rat_from_string(w.at("w").at(i).get<std::string>());
    uv(i) = rat_from_string(w.at("u").at(i).get<std::string>());
  }
  const VecQ xw = act.operators[op] * wv;
  Rational pairing = 0;
  for (int i = 0; i < act.ambient_dim; ++i) {
    for (int k = 0; k < act.ambient_dim; ++k) pairing += xw(i) * act.gram(i, k) * uv(k);
  }
  CHECK(pairing == rat_from_string(w.at("pairing").get<std::string>()));
  CHECK(!is_zero(pairing));
}

TEST_CASE("section check accepts the fixed family and rejects an orbit") {
  RationalSampler s(5);
  const Subalgebra& g = so3_g2();
  CHECK(section_check(g, split_form_points(SubmanifoldKind::VHFamily, s)));
  std::string why;
  CHECK(!section_check(g, split_form_points(SubmanifoldKind::RP2, s), &why));
  CHECK(!why.empty());
}

TEST_CASE("a single point is a section for the transitive action") {
  const Subalgebra& f4 = shared_f4();
  SubmanifoldSample point;
  point.kind = SubmanifoldKind::CaP2;
  point.points.push_back(basepoint());
  point.tangents.push_back(Subspace::zero(kJordanDim));
  point.linear_span = Subspace::span_of_rows(basepoint().coords().transpose());
  point.defining = point.linear_span;
  CHECK(section_check(f4, point));
}

TEST_CASE("asystaticity of the rotation-octonion action at the family point") {
  const CayleyPoint q = vh_family_point(rat(3, 5), rat(4, 5), rat(0));
  std::vector<FixedPointOp> iso = fixed_ops(sp1_right());
  iso.push_back(FixedPointOp::from_automorphism(h1()));
  iso.push_back(FixedPointOp::from_automorphism(h2()));
  CHECK(asystatic_check(so3_g2(), q, iso));

  // Dropping the involutions leaves fixed dimension 4 > cohomogeneity 2.
  CHECK(!asystatic_check(so3_g2(), q, fixed_ops(sp1_right())));
}

TEST_CASE("slice arc endpoints for the rotation-octonion slice") {
  // The 14-dim slice is orbit equivalent to the rank-2 matrix picture:
  // rank-one locus of dimension 7 and isoclinic locus of dimension 11.
  const SliceRep slice = slice_rep(so3_g2(), basepoint());
  const auto dims = slice_arc_dims(slice.action, 1);
  CHECK(dims.first == 7);
  CHECK(dims.second == 11);
}

TEST_CASE("slice arc rejects representations of the wrong cohomogeneity") {
  // The 16-dim spin representation is sphere transitive: cohomogeneity 1.
  const SliceRep spin = slice_rep(stabilizer(shared_f4(), basepoint()), basepoint());
  CHECK_THROWS_AS(slice_arc_dims(spin.action, 1), std::invalid_argument);
}
