#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/pencil.hpp"

using namespace cayley;

namespace {

Poly from_roots(const std::vector<Rational>& roots) {
  Poly p(Rational(1));
  for (const auto& r : roots) p = p * Poly({-r, Rational(1)});
  return p;
}

}  // namespace

TEST_CASE("gcd and squarefree part") {
  const Poly a = from_roots({rat(1), rat(1), rat(2)});
  const Poly b = from_roots({rat(1), rat(3)});
  CHECK(poly_gcd(a, b) == from_roots({rat(1)}));
  CHECK(squarefree_part(a) == from_roots({rat(1), rat(2)}));
}

TEST_CASE("real root counting by sturm sequences") {
  CHECK(count_real_roots(Poly({rat(1), rat(0), rat(1)})) == 0);   // t^2 + 1
  CHECK(count_real_roots(Poly({rat(-2), rat(0), rat(1)})) == 2);  // t^2 - 2
  CHECK(count_real_roots(from_roots({rat(1), rat(1), rat(-2)})) == 2);
  CHECK(count_real_roots(from_roots({rat(0), rat(1, 3), rat(-5)})) == 3);
}

TEST_CASE("rational roots") {
  const Poly p = from_roots({rat(0), rat(2, 3), rat(-5)});
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == rat(-5));
  CHECK(roots[1] == rat(0));
  CHECK(roots[2] == rat(2, 3));

  // No rational roots of t^2 - 2.
  CHECK(rational_roots(Poly({rat(-2), rat(0), rat(1)})).empty());
}

TEST_CASE("invariant factors of a diagonal polynomial matrix") {
  // diag(1, t, t(t-1)) has invariant factors 1 | t | t(t-1).
  std::vector<std::vector<Poly>> m(3, std::vector<Poly>(3));
  m[0][0] = Poly(Rational(1));
  m[1][1] = Poly::t();
  m[2][2] = Poly::t() * (Poly::t() - Poly(Rational(1)));
  const auto factors = invariant_factors(m);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0] == Poly(Rational(1)));
  CHECK(factors[1] == Poly::t());
  CHECK(factors[2] == Poly::t() * (Poly::t() - Poly(Rational(1))));
}

TEST_CASE("pencil rank profile matches direct evaluation") {
  // M(t) = diag(1, t, t^2 - t): ranks 1 at t=0, 2 at t=1, 3 elsewhere.
  std::vector<MatQ> coeff(3, MatQ::Zero(3, 3));
  coeff[0](0, 0) = 1;
  coeff[1](1, 1) = 1;
  coeff[1](2, 2) = -1;
  coeff[2](2, 2) = 1;

  const PencilProfile profile = pencil_rank_profile(coeff);
  CHECK(profile.generic_rank == 3);
  REQUIRE(profile.layers.size() == 2);
  CHECK(profile.layers[0].rank_at_roots == 1);
  CHECK(profile.layers[0].rational_roots == std::vector<Rational>{rat(0)});
  CHECK(profile.layers[1].rank_at_roots == 2);
  CHECK(profile.layers[1].rational_roots == std::vector<Rational>{rat(1)});

  // Independent oracle: substitute and take ranks directly.
  CHECK(rank(eval_pencil(coeff, rat(0))) == 1);
  CHECK(rank(eval_pencil(coeff, rat(1))) == 2);
  CHECK(rank(eval_pencil(coeff, rat(5))) == 3);
  CHECK(rank(eval_pencil(coeff, rat(-7, 3))) == 3);
}

TEST_CASE("pencil layers ignore complex-only degeneracies") {
  // M(t) = diag(1, t^2 + 1): rank 2 for every real t.
  std::vector<MatQ> coeff(3, MatQ::Zero(2, 2));
  coeff[0](0, 0) = 1;
  coeff[0](1, 1) = 1;
  coeff[2](1, 1) = 1;
  const PencilProfile profile = pencil_rank_profile(coeff);
  CHECK(profile.generic_rank == 2);
  CHECK(profile.layers.empty());
}
