#pragma once

#include <vector>

#include "cayley/linalg.hpp"
#include "cayley/poly.hpp"

namespace cayley {

/// A maximal set of parameters sharing one degenerate rank along a pencil:
/// the roots of `factor` (squarefree, monic) are exactly the parameters
/// where M(t) has rank `rank_at_roots`.
struct PencilLayer {
  Poly factor;
  int rank_at_roots = 0;
  int real_root_count = 0;
  std::vector<Rational> rational_roots;
};

struct PencilProfile {
  int generic_rank = 0;
  std::vector<PencilLayer> layers;
};

/// Exact rank stratification of the one-parameter matrix family
/// M(t) = sum_i t^i coeff[i], via Smith normal form over Q[t].
/// Every parameter value (rational, irrational or complex) where the rank
/// drops lands in exactly one layer; unimodular transforms evaluate
/// invertibly at every t, so the layer ranks are exact.
PencilProfile pencil_rank_profile(const std::vector<MatQ>& coeff);

/// M(t0) for a concrete rational parameter.
MatQ eval_pencil(const std::vector<MatQ>& coeff, const Rational& t0);

/// Nonzero invariant factors of a polynomial matrix, monic, each dividing
/// the next.
std::vector<Poly> invariant_factors(std::vector<std::vector<Poly>> m);

}  // namespace cayley
