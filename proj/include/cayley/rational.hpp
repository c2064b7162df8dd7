#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

namespace cayley {

/// Exact rational scalar. Arithmetic on canonical values stays canonical
/// (reduced fraction, positive denominator), so equality is plain comparison
/// and no tolerance appears anywhere.
using Rational = mpq_class;

/// The two-int constructor of mpq_class does not reduce; this one does.
inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat_from_string(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace cayley

namespace Eigen {

template <>
struct NumTraits<cayley::Rational> : GenericNumTraits<cayley::Rational> {
  typedef cayley::Rational Real;
  typedef cayley::Rational NonInteger;
  typedef cayley::Rational Nested;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen
