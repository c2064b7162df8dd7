#pragma once

#include <cstdint>
#include <random>

#include "cayley/linalg.hpp"

namespace cayley {

/// Seeded source of height-bounded rationals; identical seeds give
/// identical streams, which keeps every report reproducible.
class RationalSampler {
 public:
  explicit RationalSampler(uint64_t seed, long height = 13) : rng_(seed), height_(height) {}

  Rational next() {
    std::uniform_int_distribution<long> num(-height_, height_);
    std::uniform_int_distribution<long> den(1, height_);
    return rat(num(rng_), den(rng_));
  }

  Rational next_nonzero() {
    for (;;) {
      Rational r = next();
      if (!is_zero(r)) return r;
    }
  }

  VecQ vector(int n) {
    VecQ v(n);
    for (int i = 0; i < n; ++i) v(i) = next();
    return v;
  }

  long height() const { return height_; }

 private:
  std::mt19937_64 rng_;
  long height_;
};

/// Rational point on the unit sphere S^d in R^{d+1}: the stereographic
/// image (2u, 1-|u|^2)/(1+|u|^2) of a rational parameter u in Q^d.
inline VecQ rational_sphere_point(const VecQ& u) {
  const int d = static_cast<int>(u.size());
  Rational nn = 0;
  for (int i = 0; i < d; ++i) nn += u(i) * u(i);
  const Rational s = 1 + nn;
  VecQ v(d + 1);
  for (int i = 0; i < d; ++i) v(i) = 2 * u(i) / s;
  v(d) = (1 - nn) / s;
  return v;
}

}  // namespace cayley
