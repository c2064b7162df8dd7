#include "cayley/derivation.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cayley {

RowVecQ flatten_op(const MatQ& op) {
  RowVecQ v(op.rows() * op.cols());
  int at = 0;
  for (int i = 0; i < op.rows(); ++i) {
    for (int j = 0; j < op.cols(); ++j) v(at++) = op(i, j);
  }
  return v;
}

namespace {

MatQ unflatten_op(const VecQ& v, int n) {
  MatQ m(n, n);
  int at = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = v(at++);
  }
  return m;
}

}  // namespace

MatQ bracket(const MatQ& a, const MatQ& b) { return a * b - b * a; }

MatQ Subalgebra::flat() const {
  MatQ m(dim(), kJordanDim * kJordanDim);
  for (int i = 0; i < dim(); ++i) m.row(i) = flatten_op(basis[i]);
  return m;
}

Derivation Subalgebra::combine(const VecQ& coeffs) const {
  MatQ out = MatQ::Zero(kJordanDim, kJordanDim);
  for (int i = 0; i < dim(); ++i) {
    if (!is_zero(coeffs(i))) out += basis[i] * coeffs(i);
  }
  return out;
}

namespace {

// Sparse coordinates of all basis Jordan products, and the slices
// byjl[j][l] = {(m, coefficient of e_l in e_m o e_j)}.
struct StructureConstants {
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> prod;
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> byjl;
};

const StructureConstants& structure_constants() {
  static const StructureConstants sc = [] {
    StructureConstants s;
    s.prod.assign(kJordanDim, std::vector<std::vector<std::pair<int, Rational>>>(kJordanDim));
    s.byjl.assign(kJordanDim, std::vector<std::vector<std::pair<int, Rational>>>(kJordanDim));
    for (int i = 0; i < kJordanDim; ++i) {
      const JordanElement ei = JordanElement::basis_element(i);
      for (int j = 0; j < kJordanDim; ++j) {
        const VecQ c = jordan_product(ei, JordanElement::basis_element(j)).coords();
        for (int k = 0; k < kJordanDim; ++k) {
          if (!is_zero(c(k))) s.prod[i][j].push_back({k, c(k)});
        }
      }
    }
    for (int m = 0; m < kJordanDim; ++m) {
      for (int j = 0; j < kJordanDim; ++j) {
        for (const auto& [l, c] : s.prod[m][j]) s.byjl[j][l].push_back({m, c});
      }
    }
    return s;
  }();
  return sc;
}

// x o e_j for a dense coordinate vector x, via the structure constants.
VecQ product_with_basis(const VecQ& x, int j) {
  const StructureConstants& sc = structure_constants();
  VecQ out = VecQ::Zero(kJordanDim);
  for (int l = 0; l < kJordanDim; ++l) {
    Rational acc = 0;
    for (const auto& [m, c] : sc.byjl[j][l]) {
      if (!is_zero(x(m))) acc += c * x(m);
    }
    out(l) = std::move(acc);
  }
  return out;
}

}  // namespace

bool satisfies_jordan_leibniz(const Derivation& d) {
  const StructureConstants& sc = structure_constants();
  for (int i = 0; i < kJordanDim; ++i) {
    const VecQ dei = d.col(i);
    for (int j = i; j < kJordanDim; ++j) {
      VecQ lhs = VecQ::Zero(kJordanDim);
      for (const auto& [k, c] : sc.prod[i][j]) lhs += c * d.col(k);
      const VecQ rhs = product_with_basis(dei, j) + product_with_basis(VecQ(d.col(j)), i);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_trace_skew(const Derivation& d) {
  const MatQ& g = trace_form_gram();
  const MatQ s = d.transpose() * g + g * d;
  for (int i = 0; i < kJordanDim; ++i) {
    for (int j = 0; j < kJordanDim; ++j) {
      if (!is_zero(s(i, j))) return false;
    }
  }
  return true;
}

bool is_bracket_closed(const Subalgebra& g) {
  const Subspace span = g.flat_span();
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = i + 1; j < g.dim(); ++j) {
      const VecQ c = flatten_op(bracket(g.basis[i], g.basis[j])).transpose();
      if (!span.contains(c)) return false;
    }
  }
  return true;
}

namespace {

bool quick_derivation_sanity(const Derivation& d) {
  // Cheap load-time checks: kills the identity, skew for the trace form.
  const VecQ di = d * JordanElement::identity().coords();
  for (int i = 0; i < kJordanDim; ++i) {
    if (!is_zero(di(i))) return false;
  }
  return is_trace_skew(d);
}

Subalgebra lift_octonion_algebra(const Subspace& kernel8, const std::string& label) {
  Subalgebra out;
  out.label = label;
  for (int r = 0; r < kernel8.dim(); ++r) {
    MatQ block(8, 8);
    int at = 0;
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) block(i, j) = kernel8.basis()(r, at++);
    }
    out.basis.push_back(lift_octonion_map(block, true));
  }
  return out;
}

}  // namespace

const Subalgebra& octonion_derivations() {
  static const Subalgebra g2 = [] {
    const auto& table = octonion_table();
    // Leibniz system over the octonions: unknowns a(l,k) flattened l*8+k.
    MatQ sys = MatQ::Zero(8 * 8 * 8, 64);
    int row = 0;
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        const OctUnitProduct pij = table[i][j];
        for (int l = 0; l < 8; ++l, ++row) {
          sys(row, l * 8 + pij.index) += pij.sign;
          for (int m = 0; m < 8; ++m) {
            if (table[m][j].index == l) sys(row, m * 8 + i) -= table[m][j].sign;
            if (table[i][m].index == l) sys(row, m * 8 + j) -= table[i][m].sign;
          }
        }
      }
    }
    const Subspace sol = kernel(sys);
    if (sol.dim() != 14) throw std::runtime_error("octonion derivation algebra is not 14-dimensional");
    Subalgebra out = lift_octonion_algebra(sol, "g2");
    for (const auto& d : out.basis) {
      if (!quick_derivation_sanity(d)) throw std::runtime_error("octonion derivation lift failed sanity");
    }
    return out;
  }();
  return g2;
}

namespace {

std::vector<SparseRow> jordan_leibniz_system() {
  const StructureConstants& sc = structure_constants();
  std::vector<SparseRow> rows;
  rows.reserve(10206);
  std::map<int, Rational> acc;
  for (int i = 0; i < kJordanDim; ++i) {
    for (int j = i; j < kJordanDim; ++j) {
      for (int l = 0; l < kJordanDim; ++l) {
        acc.clear();
        for (const auto& [k, c] : sc.prod[i][j]) acc[l * kJordanDim + k] += c;
        for (const auto& [m, c] : sc.byjl[j][l]) acc[m * kJordanDim + i] -= c;
        for (const auto& [m, c] : sc.byjl[i][l]) acc[m * kJordanDim + j] -= c;
        SparseRow row;
        for (auto& [idx, c] : acc) {
          if (!is_zero(c)) row.terms.push_back({idx, c});
        }
        if (!row.terms.empty()) rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_payload(const Subalgebra& f4) {
  std::ostringstream out;
  for (const auto& d : f4.basis) {
    for (int i = 0; i < kJordanDim; ++i) {
      for (int j = 0; j < kJordanDim; ++j) out << d(i, j).get_str() << ',';
    }
  }
  return out.str();
}

std::string resolve_cache_path(const F4Options& opts) {
  if (!opts.cache_path.empty()) return opts.cache_path;
  if (const char* env = std::getenv("CAYLEY_F4_CACHE")) return env;
  return "f4_basis_cache.json";
}

void save_cache(const Subalgebra& f4, const std::string& path) {
  nlohmann::json j;
  j["format"] = "jordan-derivation-basis";
  j["version"] = 1;
  j["dim"] = f4.dim();
  j["ambient"] = kJordanDim;
  auto& basis = j["basis"];
  for (const auto& d : f4.basis) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < kJordanDim; ++i) {
      for (int k = 0; k < kJordanDim; ++k) row.push_back(d(i, k).get_str());
    }
    basis.push_back(std::move(row));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(cache_payload(f4))));
  j["checksum"] = buf;

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;  // cache is best effort
    out << j.dump();
  }
  std::rename(tmp.c_str(), path.c_str());
}

bool load_cache(const std::string& path, Subalgebra* out) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("format") != "jordan-derivation-basis" || j.at("version") != 1) return false;
    if (j.at("ambient") != kJordanDim || j.at("dim") != 52) return false;
    Subalgebra f4;
    f4.label = "f4";
    for (const auto& row : j.at("basis")) {
      if (row.size() != kJordanDim * kJordanDim) return false;
      VecQ v(kJordanDim * kJordanDim);
      for (int i = 0; i < kJordanDim * kJordanDim; ++i) {
        v(i) = rat_from_string(row.at(i).get<std::string>());
      }
      f4.basis.push_back(unflatten_op(v, kJordanDim));
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(cache_payload(f4))));
    if (j.at("checksum") != buf) return false;
    for (const auto& d : f4.basis) {
      if (!quick_derivation_sanity(d)) return false;
    }
    *out = std::move(f4);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

Subalgebra jordan_derivations(const F4Options& opts) {
  const std::string path = resolve_cache_path(opts);
  if (opts.use_cache) {
    Subalgebra cached;
    if (load_cache(path, &cached)) return cached;
  }

  const Subspace sol = kernel_of_sparse(jordan_leibniz_system(), kJordanDim * kJordanDim);
  if (sol.dim() != 52) throw std::runtime_error("jordan derivation algebra is not 52-dimensional");
  Subalgebra f4;
  f4.label = "f4";
  for (int r = 0; r < sol.dim(); ++r) {
    f4.basis.push_back(unflatten_op(sol.basis().row(r).transpose(), kJordanDim));
  }
  for (const auto& d : f4.basis) {
    if (!quick_derivation_sanity(d)) throw std::runtime_error("jordan derivation failed sanity");
  }
  if (opts.use_cache) save_cache(f4, path);
  return f4;
}

namespace {
F4Options g_shared_options;
std::once_flag g_shared_once;
}  // namespace

void set_shared_f4_options(const F4Options& opts) { g_shared_options = opts; }

const Subalgebra& shared_f4() {
  static Subalgebra instance;
  std::call_once(g_shared_once, [] { instance = jordan_derivations(g_shared_options); });
  return instance;
}

Subalgebra stabilizer(const Subalgebra& g, const CayleyPoint& x) {
  MatQ m(kJordanDim, g.dim());
  const VecQ xc = x.coords();
  for (int i = 0; i < g.dim(); ++i) m.col(i) = g.basis[i] * xc;
  const Subspace coeffs = kernel(m);
  Subalgebra out;
  out.label = g.label + ".stab";
  for (int r = 0; r < coeffs.dim(); ++r) out.basis.push_back(g.combine(coeffs.basis().row(r).transpose()));
  return out;
}

Subalgebra annihilator(const Subalgebra& g, const Subspace& l) {
  MatQ m(kJordanDim * l.dim(), g.dim());
  for (int v = 0; v < l.dim(); ++v) {
    const VecQ vec = l.basis().row(v).transpose();
    for (int i = 0; i < g.dim(); ++i) m.block(v * kJordanDim, i, kJordanDim, 1) = g.basis[i] * vec;
  }
  const Subspace coeffs = kernel(m);
  Subalgebra out;
  out.label = g.label + ".ann";
  for (int r = 0; r < coeffs.dim(); ++r) out.basis.push_back(g.combine(coeffs.basis().row(r).transpose()));
  return out;
}

Subalgebra preserver(const Subalgebra& g, const SubmanifoldSample& p) {
  if (p.points.empty()) throw std::invalid_argument("preserver needs sample points");
  std::vector<MatQ> blocks;
  int last_dim = -1;
  int stable = 0;
  Subspace coeffs;
  for (size_t n = 0; n < p.points.size(); ++n) {
    const MatQ f = p.tangents[n].constraints();  // functionals vanishing on T_x P
    const VecQ xc = p.points[n].coords();
    MatQ block(f.rows(), g.dim());
    for (int i = 0; i < g.dim(); ++i) block.col(i) = f * (g.basis[i] * xc);
    blocks.push_back(std::move(block));
    coeffs = kernel_stacked(blocks, g.dim());
    if (coeffs.dim() == last_dim) {
      if (++stable >= 3) break;
    } else {
      stable = 0;
      last_dim = coeffs.dim();
    }
  }
  if (stable < 3) throw std::runtime_error("preserver: dimension did not stabilize (too few sample points)");
  Subalgebra out;
  out.label = g.label + ".preserver";
  for (int r = 0; r < coeffs.dim(); ++r) out.basis.push_back(g.combine(coeffs.basis().row(r).transpose()));
  return out;
}

Subalgebra normalizer(const Subalgebra& g, const Subalgebra& h) {
  const Subspace gspan = g.flat_span();
  const Subspace hspan = h.flat_span();
  if (!gspan.contains(hspan)) throw std::invalid_argument("normalizer: h is not contained in g");
  const int n = kJordanDim * kJordanDim;
  MatQ m(n * h.dim(), g.dim());
  for (int j = 0; j < h.dim(); ++j) {
    for (int i = 0; i < g.dim(); ++i) {
      const VecQ res = hspan.reduce(flatten_op(bracket(g.basis[i], h.basis[j])).transpose());
      m.block(j * n, i, n, 1) = res;
    }
  }
  const Subspace coeffs = kernel(m);
  Subalgebra out;
  out.label = g.label + ".norm(" + h.label + ")";
  for (int r = 0; r < coeffs.dim(); ++r) out.basis.push_back(g.combine(coeffs.basis().row(r).transpose()));
  return out;
}

const Subalgebra& sp1_right() {
  static const Subalgebra alg = [] {
    Subalgebra out;
    out.label = "sp1";
    for (int v = 1; v <= 3; ++v) {
      const MatQ d8 = octonion_right_derivation(Quaternion::unit(v));
      out.basis.push_back(lift_octonion_map(d8, true));
    }
    for (const auto& d : out.basis) {
      if (!quick_derivation_sanity(d)) throw std::runtime_error("sp1_right failed sanity");
    }
    return out;
  }();
  return alg;
}

const Subalgebra& so3_rotations() {
  static const Subalgebra alg = [] {
    Subalgebra out;
    out.label = "so3";
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        MatQ s = MatQ::Zero(3, 3);
        s(a, b) = 1;
        s(b, a) = -1;
        out.basis.push_back(real_conjugation_derivation(s));
      }
    }
    return out;
  }();
  return alg;
}

Subalgebra direct_sum(const Subalgebra& a, const Subalgebra& b, const std::string& label) {
  Subalgebra out;
  out.label = label;
  out.basis = a.basis;
  out.basis.insert(out.basis.end(), b.basis.begin(), b.basis.end());
  if (Subspace::span_of_rows(out.flat()).dim() != out.dim()) {
    throw std::invalid_argument("direct_sum: summands overlap");
  }
  return out;
}

const Subalgebra& so3_g2() {
  static const Subalgebra alg = direct_sum(so3_rotations(), octonion_derivations(), "so3+g2");
  return alg;
}

const Subspace& so9_vector_block() {
  static const Subspace w9 = [] {
    MatQ rows(9, kJordanDim);
    rows.row(0) = (JordanElement::diag_unit(1) - JordanElement::diag_unit(2)).coords().transpose();
    for (int m = 0; m < 8; ++m) {
      rows.row(1 + m) = JordanElement::off_unit(1, 2, Octonion::unit(m)).coords().transpose();
    }
    return Subspace::span_of_rows(rows);
  }();
  return w9;
}

Subalgebra spin9_splitting(const Subalgebra& spin9_algebra, int k) {
  if (k < 1 || k > 8) throw std::invalid_argument("spin9_splitting wants 1 <= k <= 8");
  const Subspace& w9 = so9_vector_block();
  const MatQ& wb = w9.basis();
  const Subspace part_a = Subspace::span_of_rows(wb.topRows(k));
  const Subspace part_b = Subspace::span_of_rows(wb.bottomRows(9 - k));

  std::vector<MatQ> blocks;
  for (const Subspace* part : {&part_a, &part_b}) {
    for (int v = 0; v < part->dim(); ++v) {
      const VecQ u = part->basis().row(v).transpose();
      MatQ block(kJordanDim, spin9_algebra.dim());
      for (int i = 0; i < spin9_algebra.dim(); ++i) {
        block.col(i) = part->reduce(VecQ(spin9_algebra.basis[i] * u));
      }
      blocks.push_back(std::move(block));
    }
  }
  const Subspace coeffs = kernel_stacked(blocks, spin9_algebra.dim());
  Subalgebra out;
  out.label = "so(" + std::to_string(k) + ")+so(" + std::to_string(9 - k) + ")";
  for (int r = 0; r < coeffs.dim(); ++r) {
    out.basis.push_back(spin9_algebra.combine(coeffs.basis().row(r).transpose()));
  }
  return out;
}

}  // namespace cayley
