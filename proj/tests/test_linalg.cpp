#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/linalg.hpp"
#include "cayley/sampling.hpp"

using namespace cayley;

namespace {

MatQ random_matrix(RationalSampler& s, int rows, int cols) {
  MatQ m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = s.next();
  }
  return m;
}

}  // namespace

TEST_CASE("rank of identity and zero matrices") {
  CHECK(rank(MatQ::Identity(3, 3)) == 3);
  CHECK(rank(MatQ::Zero(5, 2)) == 0);
}

TEST_CASE("kernel dimensions follow rank-nullity") {
  CHECK(kernel(MatQ::Identity(4, 4)).dim() == 0);

  // Rank-1 projector in dimension 3.
  VecQ v(3);
  v << 1, 2, 2;
  MatQ p = v * v.transpose() / Rational(9);
  CHECK(rank(p) == 1);
  CHECK(kernel(p).dim() == 2);

  RationalSampler s(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 1 + trial % 6;
    const int cols = 1 + (trial * 3) % 7;
    const MatQ m = random_matrix(s, rows, cols);
    CHECK(rank(m) + kernel(m).dim() == cols);
    // Every kernel vector really solves m v = 0.
    const Subspace k = kernel(m);
    for (int r = 0; r < k.dim(); ++r) {
      const VecQ mv = m * k.basis().row(r).transpose();
      for (int i = 0; i < rows; ++i) CHECK(mv(i) == 0);
    }
  }
}

TEST_CASE("rank agrees between fraction-free and rref routes") {
  RationalSampler s(11);
  for (int trial = 0; trial < 15; ++trial) {
    MatQ m = random_matrix(s, 5, 4);
    if (trial % 2 == 0) m.col(3) = m.col(0) + m.col(1);  // force deficiency
    const MatQ r = rref(m);
    int rref_rank = 0;
    for (int i = 0; i < r.rows(); ++i) {
      bool nonzero = false;
      for (int j = 0; j < r.cols(); ++j) nonzero = nonzero || !is_zero(r(i, j));
      if (nonzero) ++rref_rank;
    }
    CHECK(rank(m) == rref_rank);
  }
}

TEST_CASE("solve substitutes back exactly") {
  RationalSampler s(3);
  for (int trial = 0; trial < 20; ++trial) {
    const MatQ a = random_matrix(s, 4, 4);
    const VecQ x0 = s.vector(4);
    const VecQ b = a * x0;
    const auto x = solve_linear(a, b);
    REQUIRE(x.has_value());
    const VecQ ax = a * *x;
    for (int i = 0; i < 4; ++i) CHECK(ax(i) == b(i));
  }

  // Inconsistent system.
  MatQ a = MatQ::Zero(2, 2);
  a(0, 0) = 1;
  a(1, 0) = 1;
  VecQ b(2);
  b << 1, 2;
  CHECK(!solve_linear(a, b).has_value());
}

TEST_CASE("subspace equality is canonical") {
  MatQ m1(2, 3), m2(2, 3);
  m1 << 1, 1, 0, 0, 0, 1;
  m2 << 2, 2, 2, 0, 0, -5;  // same span, different presentation
  CHECK(Subspace::span_of_rows(m1) == Subspace::span_of_rows(m2));
  CHECK(Subspace::span_of_rows(m1).dim() == 2);
}

TEST_CASE("gram complement: edge cases, dimensions, involution") {
  RationalSampler s(5);
  const int n = 6;
  const MatQ gram = MatQ::Identity(n, n) * Rational(2);

  const Subspace within = Subspace::span_of_rows(random_matrix(s, 4, n));
  REQUIRE(within.dim() == 4);

  CHECK(gram_complement(within, within, gram).dim() == 0);
  CHECK(gram_complement(Subspace::zero(n), within, gram) == within);

  const Subspace sub = Subspace::span_of_rows(within.basis().topRows(2));
  const Subspace comp = gram_complement(sub, within, gram);
  CHECK(comp.dim() == 2);
  // Orthogonality and the involution property.
  const MatQ pairing = sub.basis() * gram * comp.basis().transpose();
  for (int i = 0; i < pairing.rows(); ++i) {
    for (int j = 0; j < pairing.cols(); ++j) CHECK(pairing(i, j) == 0);
  }
  CHECK(gram_complement(comp, within, gram) == sub);

  const Subspace outside = Subspace::span_of_rows(MatQ::Identity(n, n));
  CHECK_THROWS_AS(gram_complement(outside, within, gram), std::invalid_argument);
}

TEST_CASE("sparse kernel agrees with dense kernel") {
  RationalSampler s(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int cols = 8;
    const int rows = 12;
    MatQ dense = MatQ::Zero(rows, cols);
    std::vector<SparseRow> sparse(rows);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        if ((i + j + trial) % 3 == 0) {
          const Rational v = s.next();
          if (!is_zero(v)) {
            dense(i, j) = v;
            sparse[i].terms.push_back({j, v});
          }
        }
      }
    }
    CHECK(kernel_of_sparse(sparse, cols) == kernel(dense));
  }
}

TEST_CASE("leading principal minors certify positive definiteness") {
  MatQ g = MatQ::Zero(3, 3);
  g(0, 0) = 1;
  g(1, 1) = 2;
  g(2, 2) = 2;
  g(0, 1) = g(1, 0) = rat(1, 2);
  const auto minors = leading_principal_minors(g);
  REQUIRE(minors.size() == 3);
  for (const auto& m : minors) CHECK(m > 0);
}
