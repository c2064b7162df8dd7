#pragma once

#include "cayley/polarity.hpp"

namespace cayley {

/// Complex rational matrix, kept as a real pair. Realification interleaves
/// (re, im) per complex coordinate.
struct CMatQ {
  MatQ re, im;

  static CMatQ zero(int r, int c) { return {MatQ::Zero(r, c), MatQ::Zero(r, c)}; }
  static CMatQ identity(int n) { return {MatQ::Identity(n, n), MatQ::Zero(n, n)}; }
  static CMatQ i_times_identity(int n) { return {MatQ::Zero(n, n), MatQ::Identity(n, n)}; }
  CMatQ operator*(const CMatQ& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  CMatQ operator-() const { return {-re, -im}; }
  MatQ realify() const;
};

MatQ real_kron(const MatQ& a, const MatQ& b);

/// Anti-Hermitian bases of the classical algebras.
std::vector<MatQ> so_basis(int n);
std::vector<CMatQ> u_basis(int n);
std::vector<CMatQ> su_basis(int n);
/// sp(n) as complex 2n x 2n matrices (quaternion entries in 2x2 blocks).
std::vector<CMatQ> sp_complex_basis(int n);

/// Quaternion n x n matrices and their real left-multiplication operators
/// on H^n = R^{4n} (coordinates 1, i, j, k per entry).
using QuatMat = std::vector<std::vector<Quaternion>>;
std::vector<QuatMat> sp_quaternion_basis(int n);
MatQ quat_left_op(const QuatMat& m);
/// Right multiplication by a single quaternion on H^n.
MatQ quat_right_op(const Quaternion& q, int n);

/// Operators X (x) I + I (x) Y for real orthogonal factors on R^m (x) R^n.
LinearGroupAction real_tensor_action(int m, int n);

/// sp(a) + sp(b) acting on the quaternionic a x b matrices by
/// M -> A M - M B; the 16-dimensional case a = b = 2 is the irreducible
/// tensor-square representation.
LinearGroupAction sp_sp_quaternion_tensor(int a, int b);

/// The 16-dimensional representation
///   S^3(C^2) (x)_H C^2  +  C^2 (x)_H S^3(C^2)
/// of two commuting su(2) factors: on each summand one factor acts through
/// the symmetric cube and the other through the commuting quaternionic
/// structure.
LinearGroupAction su2_su2_spin_restriction();

struct TableRow {
  std::string id;
  int table = 1;
  std::string group, rep, conditions;
  int min_n = 0;  // 0: parameterless row
  std::string m_formula;
  int quotient_dim = 0;
  std::string orbit_space;
  std::string source;
};

/// The embedded machine-readable copy of the classification tables.
const std::vector<TableRow>& tables12_rows();

/// Operators of the lifted sphere action for a table row at parameter n;
/// rejects parameters outside the row's conditions.
LinearGroupAction build_rep(const TableRow& row, int n);

struct RowCheck {
  std::string row_id;
  int n = 0;
  int ambient_dim = 0;
  bool nonpolar_ok = false;
  int sphere_cohomogeneity = 0;  // ambient cohomogeneity - 1
  bool cohomogeneity_ok = false;
  bool pass() const { return nonpolar_ok && cohomogeneity_ok; }
};

/// Checks one row: the representation is non-polar and the lifted sphere
/// action has cohomogeneity equal to the orbit-space dimension (the linear
/// action has one more, the radial direction).
RowCheck verify_row(const TableRow& row, int n, uint64_t seed);

}  // namespace cayley
