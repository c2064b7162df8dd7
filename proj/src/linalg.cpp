#include "cayley/linalg.hpp"

#include <algorithm>

namespace cayley {

int rank(const MatQ& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (rows == 0 || cols == 0) return 0;

  // Bareiss fraction-free elimination on an integer-cleared copy.
  Eigen::Matrix<mpz_class, Eigen::Dynamic, Eigen::Dynamic> w(rows, cols);
  for (int i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (int j = 0; j < cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < cols; ++j) {
      mpz_class t = lcm / m(i, j).get_den();
      w(i, j) = m(i, j).get_num() * t;
    }
  }

  int r = 0;
  int pivot_col = 0;
  mpz_class prev = 1;
  while (r < rows && pivot_col < cols) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (w(i, pivot_col) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) {
      ++pivot_col;
      continue;
    }
    if (pr != r) w.row(pr).swap(w.row(r));
    const mpz_class piv = w(r, pivot_col);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = pivot_col + 1; j < cols; ++j) {
        w(i, j) = (w(i, j) * piv - w(i, pivot_col) * w(r, j)) / prev;
      }
      w(i, pivot_col) = 0;
    }
    prev = piv;
    ++r;
    ++pivot_col;
  }
  return r;
}

MatQ rref(MatQ m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (!is_zero(m(i, c))) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    const Rational inv = 1 / Rational(m(r, c));
    for (int j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Rational f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return m;
}

namespace {

int rref_in_place(MatQ& m, std::vector<int>* pivot_cols) {
  m = rref(std::move(m));
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  for (int i = 0; i < rows; ++i) {
    int lead = -1;
    for (int j = 0; j < cols; ++j) {
      if (!is_zero(m(i, j))) {
        lead = j;
        break;
      }
    }
    if (lead < 0) break;
    if (pivot_cols) pivot_cols->push_back(lead);
    ++r;
  }
  return r;
}

}  // namespace

std::optional<VecQ> solve_linear(const MatQ& a, const VecQ& b) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  MatQ aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  std::vector<int> pivots;
  const int r = rref_in_place(aug, &pivots);
  for (int i = 0; i < r; ++i) {
    if (pivots[i] == cols) return std::nullopt;  // 0 = 1 row
  }
  VecQ x = VecQ::Zero(cols);
  for (int i = 0; i < r; ++i) x(pivots[i]) = aug(i, cols);
  return x;
}

Subspace Subspace::span_of_rows(const MatQ& m) {
  Subspace s(static_cast<int>(m.cols()));
  MatQ red = m;
  std::vector<int> pivots;
  const int r = rref_in_place(red, &pivots);
  s.basis_ = red.topRows(r);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  s.basis_ = MatQ::Identity(ambient, ambient);
  return s;
}

VecQ Subspace::reduce(VecQ w) const {
  if (static_cast<int>(w.size()) != ambient_) throw std::invalid_argument("reduce: size mismatch");
  for (int i = 0; i < dim(); ++i) {
    int lead = -1;
    for (int j = 0; j < ambient_; ++j) {
      if (!is_zero(basis_(i, j))) {
        lead = j;
        break;
      }
    }
    if (lead < 0 || is_zero(w(lead))) continue;
    const Rational f = w(lead);  // pivot entries are 1
    for (int j = 0; j < ambient_; ++j) w(j) -= f * basis_(i, j);
  }
  return w;
}

bool Subspace::contains(const VecQ& v) const {
  if (static_cast<int>(v.size()) != ambient_) return false;
  const VecQ w = reduce(v);
  for (int j = 0; j < ambient_; ++j) {
    if (!is_zero(w(j))) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (int i = 0; i < other.dim(); ++i) {
    if (!contains(VecQ(other.basis_.row(i).transpose()))) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  if (ambient_ != other.ambient_ || dim() != other.dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < ambient_; ++j) {
      if (basis_(i, j) != other.basis_(i, j)) return false;
    }
  }
  return true;
}

MatQ Subspace::constraints() const {
  // Functionals f with basis * f = 0.
  return kernel(basis_).basis();
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  std::vector<MatQ> blocks = {constraints(), other.constraints()};
  return kernel_stacked(blocks, ambient_);
}

Subspace kernel(const MatQ& m) {
  const int cols = static_cast<int>(m.cols());
  MatQ red = m;
  std::vector<int> pivots;
  const int r = rref_in_place(red, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;

  MatQ basis(cols - r, cols);
  basis.setZero();
  int k = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    basis(k, f) = 1;
    for (int i = 0; i < r; ++i) basis(k, pivots[i]) = -red(i, f);
    ++k;
  }
  return Subspace::span_of_rows(basis);
}

Subspace kernel_stacked(const std::vector<MatQ>& blocks, int cols) {
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.rows());
  MatQ stacked(total, cols);
  int at = 0;
  for (const auto& b : blocks) {
    if (b.rows() == 0) continue;
    if (static_cast<int>(b.cols()) != cols) throw std::invalid_argument("block width mismatch");
    stacked.middleRows(at, b.rows()) = b;
    at += static_cast<int>(b.rows());
  }
  return kernel(stacked);
}

Subspace gram_complement(const Subspace& s, const Subspace& within, const MatQ& gram) {
  if (!within.contains(s)) throw std::invalid_argument("gram_complement: s is not contained in within");
  const MatQ& bw = within.basis();
  if (within.dim() == 0) return Subspace::zero(within.ambient());
  if (s.dim() == 0) return within;
  // Coefficients c with (s_basis * gram * bw^T) c = 0 give the complement.
  MatQ pairing = s.basis() * gram * bw.transpose();
  Subspace coeff = kernel(pairing);
  MatQ t = coeff.basis() * bw;
  Subspace result = Subspace::span_of_rows(t);
  if (result.dim() != within.dim() - s.dim()) {
    throw std::runtime_error("gram_complement: degenerate pairing (gram not positive definite?)");
  }
  return result;
}

Subspace kernel_of_sparse(const std::vector<SparseRow>& rows, int cols) {
  // Kernel basis maintained as dense columns; each constraint either is
  // already satisfied or eliminates exactly one basis vector.
  std::vector<VecQ> basis;
  basis.reserve(cols);
  for (int i = 0; i < cols; ++i) {
    VecQ e = VecQ::Zero(cols);
    e(i) = 1;
    basis.push_back(std::move(e));
  }
  std::vector<int> nnz(cols, 1);

  std::vector<Rational> dots;
  std::vector<int> hit;
  for (const SparseRow& row : rows) {
    dots.assign(basis.size(), Rational(0));
    hit.clear();
    for (size_t j = 0; j < basis.size(); ++j) {
      Rational d = 0;
      for (const auto& [c, v] : row.terms) {
        if (!is_zero(basis[j](c))) d += v * basis[j](c);
      }
      if (!is_zero(d)) {
        dots[j] = std::move(d);
        hit.push_back(static_cast<int>(j));
      }
    }
    if (hit.empty()) continue;
    int piv = hit[0];
    for (int j : hit) {
      if (nnz[j] < nnz[piv]) piv = j;
    }
    const VecQ pv = std::move(basis[piv]);
    const Rational pd = dots[piv];
    for (int j : hit) {
      if (j == piv) continue;
      const Rational f = dots[j] / pd;
      int count = 0;
      for (int c = 0; c < cols; ++c) {
        if (!is_zero(pv(c))) basis[j](c) -= f * pv(c);
        if (!is_zero(basis[j](c))) ++count;
      }
      nnz[j] = count;
    }
    basis.erase(basis.begin() + piv);
    nnz.erase(nnz.begin() + piv);
  }

  MatQ m(basis.size(), cols);
  for (size_t i = 0; i < basis.size(); ++i) m.row(i) = basis[i].transpose();
  return Subspace::span_of_rows(m);
}

std::vector<Rational> leading_principal_minors(const MatQ& m) {
  const int n = static_cast<int>(std::min(m.rows(), m.cols()));
  std::vector<Rational> minors;
  minors.reserve(n);
  for (int k = 1; k <= n; ++k) {
    // Determinant via rational elimination on the k x k corner.
    MatQ w = m.topLeftCorner(k, k);
    Rational det = 1;
    bool zero = false;
    for (int c = 0; c < k; ++c) {
      int pr = -1;
      for (int i = c; i < k; ++i) {
        if (!is_zero(w(i, c))) {
          pr = i;
          break;
        }
      }
      if (pr < 0) {
        zero = true;
        break;
      }
      if (pr != c) {
        w.row(pr).swap(w.row(c));
        det = -det;
      }
      det *= w(c, c);
      const Rational inv = 1 / Rational(w(c, c));
      for (int i = c + 1; i < k; ++i) {
        const Rational f = w(i, c) * inv;
        if (is_zero(f)) continue;
        for (int j = c; j < k; ++j) w(i, j) -= f * w(c, j);
      }
    }
    minors.push_back(zero ? Rational(0) : det);
  }
  return minors;
}

}  // namespace cayley
