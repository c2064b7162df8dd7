#include "cayley/pencil.hpp"

#include <stdexcept>

namespace cayley {

namespace {

using PolyMat = std::vector<std::vector<Poly>>;

bool find_min_degree_entry(const PolyMat& m, size_t from, size_t* oi, size_t* oj) {
  int best = -1;
  for (size_t i = from; i < m.size(); ++i) {
    for (size_t j = from; j < m[i].size(); ++j) {
      if (m[i][j].is_zero()) continue;
      if (best < 0 || m[i][j].degree() < best) {
        best = m[i][j].degree();
        *oi = i;
        *oj = j;
      }
    }
  }
  return best >= 0;
}

void swap_rows(PolyMat& m, size_t a, size_t b) { std::swap(m[a], m[b]); }

void swap_cols(PolyMat& m, size_t a, size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<Poly> invariant_factors(PolyMat m) {
  std::vector<Poly> factors;
  if (m.empty() || m[0].empty()) return factors;
  const size_t rows = m.size();
  const size_t cols = m[0].size();

  for (size_t k = 0; k < std::min(rows, cols); ++k) {
    size_t pi = 0, pj = 0;
    if (!find_min_degree_entry(m, k, &pi, &pj)) break;
    swap_rows(m, k, pi);
    swap_cols(m, k, pj);

    for (;;) {
      bool disturbed = false;
      // Clear column k.
      for (size_t i = k + 1; i < rows && !disturbed; ++i) {
        if (m[i][k].is_zero()) continue;
        Poly q, r;
        Poly::divmod(m[i][k], m[k][k], &q, &r);
        for (size_t j = k; j < cols; ++j) m[i][j] = m[i][j] - q * m[k][j];
        if (!r.is_zero()) {
          swap_rows(m, k, i);
          disturbed = true;
        }
      }
      if (disturbed) continue;
      // Clear row k.
      for (size_t j = k + 1; j < cols && !disturbed; ++j) {
        if (m[k][j].is_zero()) continue;
        Poly q, r;
        Poly::divmod(m[k][j], m[k][k], &q, &r);
        for (size_t i = k; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][k];
        if (!r.is_zero()) {
          swap_cols(m, k, j);
          disturbed = true;
        }
      }
      if (disturbed) continue;
      // Pivot must divide the remaining submatrix for the dividing chain.
      bool fixed = false;
      for (size_t i = k + 1; i < rows && !fixed; ++i) {
        for (size_t j = k + 1; j < cols && !fixed; ++j) {
          if (m[i][j].is_zero()) continue;
          Poly r;
          Poly::divmod(m[i][j], m[k][k], nullptr, &r);
          if (!r.is_zero()) {
            for (size_t jj = k; jj < cols; ++jj) m[k][jj] = m[k][jj] + m[i][jj];
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
    factors.push_back(m[k][k].monic());
  }
  return factors;
}

MatQ eval_pencil(const std::vector<MatQ>& coeff, const Rational& t0) {
  if (coeff.empty()) return MatQ();
  MatQ out = MatQ::Zero(coeff[0].rows(), coeff[0].cols());
  Rational power = 1;
  for (const MatQ& c : coeff) {
    out += c * power;
    power *= t0;
  }
  return out;
}

PencilProfile pencil_rank_profile(const std::vector<MatQ>& coeff) {
  if (coeff.empty()) throw std::invalid_argument("empty pencil");
  const int rows = static_cast<int>(coeff[0].rows());
  const int cols = static_cast<int>(coeff[0].cols());
  PolyMat m(rows, std::vector<Poly>(cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      std::vector<Rational> c(coeff.size());
      for (size_t d = 0; d < coeff.size(); ++d) c[d] = coeff[d](i, j);
      m[i][j] = Poly(std::move(c));
    }
  }

  const std::vector<Poly> factors = invariant_factors(std::move(m));
  PencilProfile profile;
  profile.generic_rank = static_cast<int>(factors.size());

  Poly prev_sf(Rational(1));
  for (size_t j = 0; j < factors.size(); ++j) {
    const Poly sf = squarefree_part(factors[j]);
    const Poly layer = sf.exact_div(prev_sf);
    prev_sf = sf;
    if (layer.is_constant()) continue;
    PencilLayer out;
    out.factor = layer.monic();
    out.rank_at_roots = static_cast<int>(j);  // factors s_1..s_j-1 nonzero there
    out.real_root_count = count_real_roots(out.factor);
    out.rational_roots = rational_roots(out.factor);
    if (out.real_root_count > 0) profile.layers.push_back(std::move(out));
  }
  return profile;
}

}  // namespace cayley
