#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/octonion.hpp"
#include "cayley/sampling.hpp"

using namespace cayley;

namespace {

Octonion random_octonion(RationalSampler& s, int coords = 8) {
  VecQ v = VecQ::Zero(8);
  for (int i = 0; i < coords; ++i) v(i) = s.next();
  return Octonion::from_coords(v);
}

}  // namespace

TEST_CASE("unit element and the doubled imaginary unit") {
  RationalSampler s(2);
  const Octonion x = random_octonion(s);
  CHECK(Octonion::one() * x == x);
  CHECK(x * Octonion::one() == x);

  const Octonion l = Octonion::unit(4);
  CHECK(l * l == -Octonion::one());
}

TEST_CASE("basis products are signed units") {
  const auto& table = octonion_table();
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      CHECK(table[i][j].index >= 0);
      CHECK((table[i][j].sign == 1 || table[i][j].sign == -1));
    }
    CHECK(table[0][i].index == i);  // left unit
    CHECK(table[i][0].index == i);  // right unit
  }
}

TEST_CASE("norm is multiplicative on 100 random pairs") {
  RationalSampler s(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Octonion x = random_octonion(s);
    const Octonion y = random_octonion(s);
    CHECK((x * y).norm() == x.norm() * y.norm());
  }
}

TEST_CASE("conjugation reverses products") {
  RationalSampler s(19);
  for (int trial = 0; trial < 30; ++trial) {
    const Octonion x = random_octonion(s);
    const Octonion y = random_octonion(s);
    CHECK((x * y).conj() == y.conj() * x.conj());
    CHECK(x * x.conj() == Octonion::one().scaled(x.norm()));
  }
}

TEST_CASE("the algebra is alternative but not associative") {
  RationalSampler s(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Octonion x = random_octonion(s);
    const Octonion y = random_octonion(s);
    CHECK((x * x) * y == x * (x * y));
    CHECK((x * y) * y == x * (y * y));
  }

  // Negative control: associativity fails somewhere.
  bool associative = true;
  for (int i = 1; i < 8 && associative; ++i) {
    for (int j = 1; j < 8 && associative; ++j) {
      for (int k = 1; k < 8 && associative; ++k) {
        const Octonion a = Octonion::unit(i), b = Octonion::unit(j), c = Octonion::unit(k);
        if (!((a * b) * c == a * (b * c))) associative = false;
      }
    }
  }
  CHECK(!associative);

  // The quaternion subalgebra is associative.
  for (int trial = 0; trial < 20; ++trial) {
    const Octonion a = random_octonion(s, 4);
    const Octonion b = random_octonion(s, 4);
    const Octonion c = random_octonion(s, 4);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("pair automorphisms are multiplicative") {
  RationalSampler s(29);
  // (3,4,0,0)/5 and (0,0,4/5,3/5) are unit quaternions.
  const Quaternion p(rat(3, 5), rat(4, 5), rat(0), rat(0));
  const Quaternion q(rat(0), rat(0), rat(4, 5), rat(3, 5));
  const MatQ alpha = octonion_pair_automorphism(p, q);
  for (int trial = 0; trial < 20; ++trial) {
    const Octonion x = random_octonion(s);
    const Octonion y = random_octonion(s);
    const Octonion ax = Octonion::from_coords(alpha * x.coords());
    const Octonion ay = Octonion::from_coords(alpha * y.coords());
    CHECK(Octonion::from_coords(alpha * (x * y).coords()) == ax * ay);
  }
  CHECK_THROWS_AS(octonion_pair_automorphism(Quaternion(rat(1), rat(1), rat(0), rat(0)), q),
                  std::invalid_argument);
}

TEST_CASE("right derivations satisfy the leibniz rule and kill quaternions") {
  RationalSampler s(31);
  for (int v = 1; v <= 3; ++v) {
    const MatQ d = octonion_right_derivation(Quaternion::unit(v));
    for (int trial = 0; trial < 15; ++trial) {
      const Octonion x = random_octonion(s);
      const Octonion y = random_octonion(s);
      const Octonion dx = Octonion::from_coords(d * x.coords());
      const Octonion dy = Octonion::from_coords(d * y.coords());
      CHECK(Octonion::from_coords(d * (x * y).coords()) == dx * y + x * dy);
    }
    for (int k = 0; k < 4; ++k) {
      const VecQ img = d * Octonion::unit(k).coords();
      for (int i = 0; i < 8; ++i) CHECK(img(i) == 0);
    }
  }
  CHECK_THROWS_AS(octonion_right_derivation(Quaternion::unit(0)), std::invalid_argument);
}
