#pragma once

#include "cayley/derivation.hpp"

namespace cayley {

/// A finite automorphism of the Jordan algebra, stored as its 27x27 matrix.
/// Construction from (a, p, q) builds x -> a (alpha_{p,q}(x_ij)) a^T and
/// verifies multiplicativity on all basis pairs, preservation of the trace
/// form, and that sampled variety points stay on the variety.
class AutElement {
 public:
  /// a must be rational orthogonal, p and q unit quaternions.
  AutElement(const MatQ& a3, const Quaternion& p, const Quaternion& q);

  static const AutElement& identity();

  const MatQ& op() const { return op_; }
  JordanElement apply(const JordanElement& x) const { return JordanElement::from_coords(op_ * x.coords()); }
  bool fixes(const CayleyPoint& x) const;

 private:
  struct Unchecked {};
  AutElement(MatQ op, Unchecked) : op_(std::move(op)) {}
  MatQ op_;
};

/// The two involutions generating the discrete part of the principal
/// isotropy group of the rotation-times-octonion-automorphism action:
/// h1 = (diag(-1,-1,1), alpha_{i,i}), h2 = (diag(-1,1,-1), alpha_{j,j}).
const AutElement& h1();
const AutElement& h2();

}  // namespace cayley
