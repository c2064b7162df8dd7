#pragma once

#include <string>
#include <vector>

#include "cayley/cayley_plane.hpp"

namespace cayley {

/// A derivation of the Jordan algebra is a 27x27 matrix satisfying
/// D(x o y) = D(x) o y + x o D(y); constructors validate their output.
using Derivation = MatQ;

/// A finite-dimensional Lie algebra of derivations, stored by a basis.
struct Subalgebra {
  std::vector<Derivation> basis;
  std::string label;

  int dim() const { return static_cast<int>(basis.size()); }
  /// Basis flattened to rows of length 729, canonicalized lazily elsewhere.
  MatQ flat() const;
  Subspace flat_span() const { return Subspace::span_of_rows(flat()); }
  /// Linear combination with the given coefficients.
  Derivation combine(const VecQ& coeffs) const;
};

bool satisfies_jordan_leibniz(const Derivation& d);
bool is_trace_skew(const Derivation& d);
bool is_bracket_closed(const Subalgebra& g);

/// Derivation algebra of the octonions, lifted entrywise to the Jordan
/// algebra. 14-dimensional; throws if the solve disagrees.
const Subalgebra& octonion_derivations();

struct F4Options {
  bool use_cache = true;
  std::string cache_path;  // empty: $CAYLEY_F4_CACHE, then ./f4_basis_cache.json
};

/// Derivation algebra of the Jordan algebra, by the exact kernel of the
/// Leibniz system (10206 equations, 729 unknowns). 52-dimensional; throws
/// otherwise. Results are cached on disk; a corrupted cache (checksum or
/// sanity failure) is recomputed.
Subalgebra jordan_derivations(const F4Options& opts = {});

/// Set options for the process-wide instance before first use.
void set_shared_f4_options(const F4Options& opts);
const Subalgebra& shared_f4();

/// {D in g : D(x) = 0}.
Subalgebra stabilizer(const Subalgebra& g, const CayleyPoint& x);

/// {D in g : D vanishes on the subspace l}.
Subalgebra annihilator(const Subalgebra& g, const Subspace& l);

/// {D in g : D(x) is tangent to P at every sample point x}. Points are
/// added one at a time until the dimension is unchanged for three
/// consecutive additions; throws if the sample is exhausted first.
Subalgebra preserver(const Subalgebra& g, const SubmanifoldSample& p);

/// {D in g : [D, h] is contained in h}. h must be contained in g.
Subalgebra normalizer(const Subalgebra& g, const Subalgebra& h);

/// The 3-dimensional algebra of derivations (x,y) -> (0, vy), v imaginary
/// quaternion; annihilates every matrix with quaternion entries.
const Subalgebra& sp1_right();

/// Rotation derivations x -> sx + xs^T, s real skew 3x3.
const Subalgebra& so3_rotations();

/// so3 + g2 (commuting factors).
const Subalgebra& so3_g2();

Subalgebra direct_sum(const Subalgebra& a, const Subalgebra& b, const std::string& label);

/// The 9-dimensional block span{E22 - E33, x23 slot}: the vector
/// representation of the basepoint stabilizer.
const Subspace& so9_vector_block();

/// Subalgebra of the basepoint stabilizer preserving the splitting of the
/// 9-dim block into the first k basis directions and their complement;
/// realizes so(k) + so(9-k) inside so(9).
Subalgebra spin9_splitting(const Subalgebra& spin9_algebra, int k);

/// Flatten a 27x27 operator to a row vector of length 729 (row-major).
RowVecQ flatten_op(const MatQ& op);
MatQ bracket(const MatQ& a, const MatQ& b);

}  // namespace cayley
