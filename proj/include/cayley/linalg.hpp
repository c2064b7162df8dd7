#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cayley/rational.hpp"

namespace cayley {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVecQ = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

/// Exact rank via fraction-free (Bareiss) elimination.
int rank(const MatQ& m);

/// Reduced row echelon form, exact rational steps.
MatQ rref(MatQ m);

/// Exact solution of a x = b, or nullopt when the system is inconsistent.
/// For underdetermined systems one solution is returned (free vars = 0).
std::optional<VecQ> solve_linear(const MatQ& a, const VecQ& b);

/// A linear subspace of Q^n stored by its canonical RREF row basis.
/// Two subspaces are equal iff their canonical bases are entry-wise equal.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of m (rows need not be independent).
  static Subspace span_of_rows(const MatQ& m);
  static Subspace full(int ambient);
  static Subspace zero(int ambient) { return Subspace(ambient); }

  int dim() const { return static_cast<int>(basis_.rows()); }
  int ambient() const { return ambient_; }
  /// Canonical RREF basis, one vector per row.
  const MatQ& basis() const { return basis_; }

  bool contains(const VecQ& v) const;
  bool contains(const Subspace& other) const;
  /// Residual of v after eliminating against the RREF basis; zero iff
  /// v lies in the subspace.
  VecQ reduce(VecQ v) const;
  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

  Subspace intersect(const Subspace& other) const;

  /// Rows spanning the functionals vanishing on this subspace
  /// (the kernel of the basis matrix acting on column vectors).
  MatQ constraints() const;

 private:
  int ambient_;
  MatQ basis_;  // RREF rows
};

/// Basis of the right null space {v : m v = 0}.
Subspace kernel(const MatQ& m);

/// Kernel of the stacked matrix [a; b].
Subspace kernel_stacked(const std::vector<MatQ>& blocks, int cols);

/// Gram-orthogonal complement of s inside `within`:
/// t = {w in within : <w, s>_gram = 0}, with dim s + dim t = dim within.
/// gram must be symmetric positive definite on the ambient space;
/// throws std::invalid_argument if s is not contained in `within`.
Subspace gram_complement(const Subspace& s, const Subspace& within,
                         const MatQ& gram);

/// One equation of a sparse linear system, entries sorted by column.
struct SparseRow {
  std::vector<std::pair<int, Rational>> terms;
};

/// Exact kernel of a sparse system by incremental constraint intersection.
/// Used for the large derivation solves; agrees with kernel() always.
Subspace kernel_of_sparse(const std::vector<SparseRow>& rows, int cols);

/// Leading principal minors, for exact positive-definiteness checks.
std::vector<Rational> leading_principal_minors(const MatQ& m);

}  // namespace cayley
