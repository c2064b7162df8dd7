#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/cayley_plane.hpp"

using namespace cayley;

TEST_CASE("point validation is strict") {
  CHECK_THROWS_AS((void)CayleyPoint(JordanElement::identity()), std::invalid_argument);  // trace 3
  JordanElement half;
  half.diag = {rat(1, 2), rat(1, 2), rat(0)};  // trace 1, not idempotent
  CHECK_THROWS_AS((void)CayleyPoint(half), std::invalid_argument);
}

TEST_CASE("tangent space at the basepoint is the off-diagonal 16-dim block") {
  const Subspace t = tangent_space(basepoint());
  CHECK(t.dim() == 16);

  MatQ expected(16, kJordanDim);
  for (int m = 0; m < 8; ++m) {
    expected.row(m) = JordanElement::off_unit(0, 1, Octonion::unit(m)).coords().transpose();
    expected.row(8 + m) = JordanElement::off_unit(0, 2, Octonion::unit(m)).coords().transpose();
  }
  CHECK(t == Subspace::span_of_rows(expected));

  // The point itself has trace 1, hence is never tangent.
  CHECK(!t.contains(basepoint().coords()));
}

TEST_CASE("tangent spaces have dimension 16 along random chart points") {
  RationalSampler s(3);
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(tangent_space(random_chart_point(s)).dim() == 16);
  }
}

TEST_CASE("chart center and chart verification") {
  const CayleyPoint e33 = chart_point(Octonion::zero(), Octonion::zero());
  CHECK(e33.value() == JordanElement::diag_unit(2));

  RationalSampler s(5);
  for (int trial = 0; trial < 10; ++trial) {
    const CayleyPoint x = random_chart_point(s);  // constructor verifies idempotency
    CHECK(x.value().trace() == 1);
  }
}

TEST_CASE("explicit family point matches its closed form") {
  const CayleyPoint q = vh_family_point(rat(3, 5), rat(4, 5), rat(0));
  const JordanElement& v = q.value();
  CHECK(v.diag[0] == rat(9, 25));
  CHECK(v.diag[1] == rat(16, 25));
  CHECK(v.diag[2] == 0);
  CHECK(v.x12 == Octonion::unit(1).scaled(rat(-12, 25)));
  CHECK(v.x13 == Octonion::zero());
  CHECK(v.x23 == Octonion::zero());
}

TEST_CASE("circle points") {
  const CayleyPoint x = circle_point(rat(3, 5), rat(4, 5), Octonion::one());
  CHECK(x.value().diag[0] == rat(4, 5));
  CHECK(x.value().diag[1] == rat(1, 5));
  CHECK(x.value().x12 == Octonion::one().scaled(rat(2, 5)));
  CHECK_THROWS_AS(circle_point(rat(1, 2), rat(1, 2), Octonion::one()), std::invalid_argument);
}

TEST_CASE("samplers span the expected linear hulls with correct tangents") {
  struct Case {
    SubmanifoldKind kind;
    int k;
    int span;
    int tangent;
  };
  const std::vector<Case> cases = {
      {SubmanifoldKind::RP2, 0, 6, 2},     {SubmanifoldKind::CP2, 0, 9, 4},
      {SubmanifoldKind::HP2, 0, 15, 8},    {SubmanifoldKind::CaP1, 0, 10, 8},
      {SubmanifoldKind::SphereK, 1, 3, 1}, {SubmanifoldKind::SphereK, 4, 6, 4},
      {SubmanifoldKind::SphereK, 8, 10, 8}, {SubmanifoldKind::VHFamily, 0, 6, 2},
      {SubmanifoldKind::CaP2, 0, 27, 16},
  };
  RationalSampler s(7);
  for (const Case& c : cases) {
    const SubmanifoldSample sample = split_form_points(c.kind, s, c.k);
    CHECK(sample.linear_span.dim() == c.span);
    CHECK(sample.defining.contains(sample.linear_span));
    for (size_t i = 0; i < sample.points.size(); ++i) {
      CHECK(sample.tangents[i].dim() == c.tangent);
      // Tangents live inside the variety tangent by construction; check
      // containment in the defining subspace instead.
      CHECK(sample.defining.contains(sample.tangents[i]));
    }
  }
  CHECK_THROWS_AS(split_form_points(SubmanifoldKind::SphereK, s, 9), std::invalid_argument);
}

TEST_CASE("sphere samples stay in the upper block with confined direction") {
  RationalSampler s(11);
  const SubmanifoldSample sample = split_form_points(SubmanifoldKind::SphereK, s, 1);
  for (const CayleyPoint& x : sample.points) {
    CHECK(x.value().diag[2] == 0);
    CHECK(x.value().x13 == Octonion::zero());
    CHECK(x.value().x23 == Octonion::zero());
    for (int m = 1; m < 8; ++m) CHECK(x.value().x12.coord(m) == 0);  // real direction only
  }
}
