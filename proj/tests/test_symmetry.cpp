#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cayley/automorphism.hpp"
#include "cayley/derivation.hpp"

using namespace cayley;

namespace {

SubmanifoldSample sample_of(SubmanifoldKind kind, int k = 0, uint64_t seed = 9) {
  RationalSampler s(seed);
  return split_form_points(kind, s, k);
}

}  // namespace

TEST_CASE("octonion derivations: dimension, leibniz, reals killed") {
  const Subalgebra& g2 = octonion_derivations();
  CHECK(g2.dim() == 14);
  for (const Derivation& d : g2.basis) {
    CHECK(satisfies_jordan_leibniz(d));
    CHECK(is_trace_skew(d));
  }
  CHECK(is_bracket_closed(g2));

  // Every lifted element annihilates real Hermitian matrices.
  const SubmanifoldSample rp2 = sample_of(SubmanifoldKind::RP2);
  for (const Derivation& d : g2.basis) {
    for (int r = 0; r < rp2.linear_span.dim(); ++r) {
      const VecQ img = d * rp2.linear_span.basis().row(r).transpose();
      for (int i = 0; i < kJordanDim; ++i) CHECK(img(i) == 0);
    }
  }
}

TEST_CASE("jordan derivations: dimension 52, contains g2, skew, closed") {
  const Subalgebra& f4 = shared_f4();
  REQUIRE(f4.dim() == 52);

  const Subspace f4span = f4.flat_span();
  CHECK(f4span.contains(octonion_derivations().flat_span()));
  for (const Derivation& d : f4.basis) CHECK(is_trace_skew(d));
  CHECK(is_bracket_closed(f4));
  for (const Derivation& d : f4.basis) CHECK(satisfies_jordan_leibniz(d));
}

TEST_CASE("disk cache round trip and corruption recovery") {
  const std::string path = "f4_cache_roundtrip_test.json";
  std::remove(path.c_str());

  const Subalgebra first = jordan_derivations({true, path});
  const Subalgebra second = jordan_derivations({true, path});  // served from disk
  REQUIRE(first.dim() == second.dim());
  for (int i = 0; i < first.dim(); ++i) {
    CHECK(first.basis[i] == second.basis[i]);
  }

  {
    std::ofstream out(path, std::ios::trunc);
    out << "{\"format\": \"jordan-derivation-basis\", \"version\": 1, \"corrupt\": true}";
  }
  const Subalgebra third = jordan_derivations({true, path});  // recomputed
  CHECK(third.dim() == 52);
  std::remove(path.c_str());
}

TEST_CASE("stabilizers") {
  const Subalgebra& f4 = shared_f4();
  const Subalgebra spin9 = stabilizer(f4, basepoint());
  CHECK(spin9.dim() == 36);
  CHECK(f4.flat_span().contains(spin9.flat_span()));
  CHECK(is_bracket_closed(spin9));

  RationalSampler s(3);
  const CayleyPoint x = random_chart_point(s);
  CHECK(stabilizer(f4, x).dim() == 36);       // conjugate stabilizer
  CHECK(stabilizer(spin9, x).dim() == 21);    // generic sphere isotropy
}

TEST_CASE("annihilators of the projective planes") {
  const Subalgebra& f4 = shared_f4();
  const Subalgebra z_rp2 = annihilator(f4, sample_of(SubmanifoldKind::RP2).linear_span);
  CHECK(z_rp2.dim() == 14);
  CHECK(z_rp2.flat_span() == octonion_derivations().flat_span());

  CHECK(annihilator(f4, sample_of(SubmanifoldKind::CP2).linear_span).dim() == 8);
  CHECK(annihilator(f4, sample_of(SubmanifoldKind::HP2).linear_span).dim() == 3);

  // Monotone in the subspace.
  const Subspace cp2 = sample_of(SubmanifoldKind::CP2).linear_span;
  const Subspace rp2 = sample_of(SubmanifoldKind::RP2).linear_span;
  CHECK(annihilator(f4, rp2).flat_span().contains(annihilator(f4, cp2).flat_span()));
}

TEST_CASE("preservers of totally geodesic families") {
  const Subalgebra& f4 = shared_f4();
  CHECK(preserver(f4, sample_of(SubmanifoldKind::HP2)).dim() == 24);
  CHECK(preserver(f4, sample_of(SubmanifoldKind::CP2)).dim() == 16);
  CHECK(preserver(f4, sample_of(SubmanifoldKind::SphereK, 7)).dim() == 28);

  // Annihilator sits inside the preserver.
  const SubmanifoldSample hp2 = sample_of(SubmanifoldKind::HP2);
  CHECK(preserver(f4, hp2).flat_span().contains(annihilator(f4, hp2.linear_span).flat_span()));

  // Too few points to stabilize is reported, not silently accepted.
  SubmanifoldSample starved = hp2;
  starved.points.erase(starved.points.begin() + 2, starved.points.end());
  starved.tangents.erase(starved.tangents.begin() + 2, starved.tangents.end());
  CHECK_THROWS_AS(preserver(f4, starved), std::runtime_error);
}

TEST_CASE("normalizers") {
  const Subalgebra& g2 = octonion_derivations();
  const Subalgebra& sp1 = sp1_right();
  CHECK(normalizer(g2, sp1).dim() == 6);
  CHECK(normalizer(so3_g2(), sp1).dim() == 9);
  CHECK(normalizer(so3_g2(), so3_g2()).flat_span() == so3_g2().flat_span());
}

TEST_CASE("the right-multiplication sp1 and its bracket structure") {
  const Subalgebra& sp1 = sp1_right();
  CHECK(sp1.dim() == 3);
  CHECK(is_bracket_closed(sp1));
  for (const Derivation& d : sp1.basis) CHECK(satisfies_jordan_leibniz(d));

  // Cross-product structure constants: [d_i, d_j] = 2 d_k and cyclic.
  CHECK(bracket(sp1.basis[0], sp1.basis[1]) == MatQ(2 * sp1.basis[2]));
  CHECK(bracket(sp1.basis[1], sp1.basis[2]) == MatQ(2 * sp1.basis[0]));
  CHECK(bracket(sp1.basis[2], sp1.basis[0]) == MatQ(2 * sp1.basis[1]));

  // Annihilates every quaternionic Hermitian matrix.
  const Subspace hp2 = sample_of(SubmanifoldKind::HP2).linear_span;
  for (const Derivation& d : sp1.basis) {
    for (int r = 0; r < hp2.dim(); ++r) {
      const VecQ img = d * hp2.basis().row(r).transpose();
      for (int i = 0; i < kJordanDim; ++i) CHECK(img(i) == 0);
    }
  }
}

TEST_CASE("rotation algebra and the direct sum") {
  CHECK(so3_rotations().dim() == 3);
  CHECK(so3_g2().dim() == 17);
  CHECK(is_bracket_closed(so3_g2()));
  for (const Derivation& d : so3_rotations().basis) CHECK(satisfies_jordan_leibniz(d));
  CHECK_THROWS_AS(direct_sum(octonion_derivations(), octonion_derivations(), "dup"),
                  std::invalid_argument);
}

TEST_CASE("automorphisms: identity, involutions, rejection of bad input") {
  const AutElement& id = AutElement::identity();
  CHECK(id.op() == MatQ::Identity(kJordanDim, kJordanDim));

  const CayleyPoint q = vh_family_point(rat(3, 5), rat(4, 5), rat(0));
  CHECK(h1().fixes(q));
  CHECK(h2().fixes(q));
  CHECK(h1().fixes(basepoint()));

  RationalSampler s(11);
  const SubmanifoldSample vh = split_form_points(SubmanifoldKind::VHFamily, s);
  for (const CayleyPoint& x : vh.points) {
    CHECK(h1().fixes(x));
    CHECK(h2().fixes(x));
  }

  // Non-unit quaternion and non-orthogonal rotation part are rejected.
  CHECK_THROWS_AS(AutElement(MatQ::Identity(3, 3), Quaternion(rat(1), rat(1), rat(0), rat(0)),
                             Quaternion::unit(0)),
                  std::invalid_argument);
  MatQ bad = MatQ::Identity(3, 3);
  bad(0, 0) = 2;
  CHECK_THROWS_AS(AutElement(bad, Quaternion::unit(0), Quaternion::unit(0)), std::invalid_argument);
}

TEST_CASE("the 9-dim vector block and splitting subalgebras") {
  const Subalgebra& f4 = shared_f4();
  const Subalgebra spin9 = stabilizer(f4, basepoint());
  const Subspace& w9 = so9_vector_block();
  CHECK(w9.dim() == 9);

  // Invariance of the block under the point stabilizer.
  for (const Derivation& d : spin9.basis) {
    for (int r = 0; r < 9; ++r) {
      CHECK(w9.contains(VecQ(d * w9.basis().row(r).transpose())));
    }
  }

  CHECK(spin9_splitting(spin9, 1).dim() == 28);
  CHECK(spin9_splitting(spin9, 2).dim() == 22);
  CHECK(spin9_splitting(spin9, 3).dim() == 18);
  CHECK(spin9_splitting(spin9, 4).dim() == 16);
  CHECK(is_bracket_closed(spin9_splitting(spin9, 2)));
}
