#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/jordan.hpp"
#include "cayley/sampling.hpp"

using namespace cayley;

namespace {

JordanElement random_element(RationalSampler& s) {
  return JordanElement::from_coords(s.vector(kJordanDim));
}

}  // namespace

TEST_CASE("idempotents and orthogonal diagonal units") {
  const JordanElement p = JordanElement::diag_unit(0);
  CHECK(jordan_product(p, p) == p);
  const JordanElement zero;
  CHECK(jordan_product(JordanElement::diag_unit(0), JordanElement::diag_unit(1)) == zero);

  RationalSampler s(1);
  const JordanElement x = random_element(s);
  CHECK(jordan_product(JordanElement::identity(), x) == x);
}

TEST_CASE("the product is commutative and the trace form associative") {
  RationalSampler s(37);
  for (int trial = 0; trial < 12; ++trial) {
    const JordanElement x = random_element(s);
    const JordanElement y = random_element(s);
    const JordanElement z = random_element(s);
    CHECK(jordan_product(x, y) == jordan_product(y, x));
    CHECK(trace_form(jordan_product(x, y), z) == trace_form(x, jordan_product(y, z)));
    CHECK(trace_form(x, y) == trace_form(y, x));
  }
}

TEST_CASE("gram matrix of the trace form") {
  const MatQ& g = trace_form_gram();
  for (int i = 0; i < kJordanDim; ++i) {
    for (int j = 0; j < kJordanDim; ++j) {
      const Rational expected =
          trace_form(JordanElement::basis_element(i), JordanElement::basis_element(j));
      CHECK(g(i, j) == expected);
    }
  }
  // Positive definiteness by leading principal minors.
  for (const Rational& m : leading_principal_minors(g)) CHECK(m > 0);
}

TEST_CASE("left multiplication matrix matches the product") {
  RationalSampler s(41);
  const JordanElement x = random_element(s);
  const MatQ l = jordan_left_mult(x);
  for (int trial = 0; trial < 8; ++trial) {
    const JordanElement y = random_element(s);
    CHECK(VecQ(l * y.coords()) == jordan_product(x, y).coords());
  }
}

TEST_CASE("coordinate round trip") {
  RationalSampler s(43);
  const JordanElement x = random_element(s);
  CHECK(JordanElement::from_coords(x.coords()) == x);
  for (int i = 0; i < kJordanDim; ++i) {
    VecQ e = VecQ::Zero(kJordanDim);
    e(i) = 1;
    CHECK(JordanElement::basis_element(i).coords() == e);
  }
}

TEST_CASE("rotation derivations and congruence operators") {
  MatQ skew = MatQ::Zero(3, 3);
  skew(0, 1) = 1;
  skew(1, 0) = -1;
  const MatQ d = real_conjugation_derivation(skew);
  RationalSampler s(47);
  for (int trial = 0; trial < 6; ++trial) {
    const JordanElement x = random_element(s);
    const JordanElement y = random_element(s);
    const JordanElement dx = JordanElement::from_coords(d * x.coords());
    const JordanElement dy = JordanElement::from_coords(d * y.coords());
    const VecQ lhs = d * jordan_product(x, y).coords();
    CHECK(lhs == (jordan_product(dx, y) + jordan_product(x, dy)).coords());
  }

  // Permutation congruence is an automorphism of the product.
  MatQ perm = MatQ::Zero(3, 3);
  perm(0, 1) = 1;
  perm(1, 0) = 1;
  perm(2, 2) = -1;
  const MatQ a = real_congruence_operator(perm);
  for (int trial = 0; trial < 6; ++trial) {
    const JordanElement x = random_element(s);
    const JordanElement y = random_element(s);
    const JordanElement ax = JordanElement::from_coords(a * x.coords());
    const JordanElement ay = JordanElement::from_coords(a * y.coords());
    CHECK(VecQ(a * jordan_product(x, y).coords()) == jordan_product(ax, ay).coords());
  }
}
