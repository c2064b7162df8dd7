#pragma once

#include <vector>

#include "cayley/rational.hpp"

namespace cayley {

/// Univariate polynomial over Q, coefficients by ascending degree.
/// The zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c);
  explicit Poly(std::vector<Rational> coeffs);
  static Poly t();  // the variable

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }
  Rational eval(const Rational& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

  Poly scaled(const Rational& c) const;
  Poly monic() const;
  Poly derivative() const;

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  static void divmod(const Poly& num, const Poly& den, Poly* q, Poly* r);
  /// Exact quotient; throws if the division leaves a remainder.
  Poly exact_div(const Poly& den) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);

/// Product of the distinct irreducible factors (monic).
Poly squarefree_part(const Poly& p);

/// Number of distinct real roots, by Sturm's theorem.
int count_real_roots(const Poly& p);

/// All rational roots, each listed once. Requires squarefree input for
/// clean deflation but works regardless; returns roots in ascending order.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace cayley
