#include "cayley/repcheck.hpp"

#include <stdexcept>

#include <json.hpp>

#include "cayley/derivation.hpp"

namespace cayley {

MatQ CMatQ::realify() const {
  const int r = static_cast<int>(re.rows());
  const int c = static_cast<int>(re.cols());
  MatQ out(2 * r, 2 * c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      out(2 * i, 2 * j) = re(i, j);
      out(2 * i, 2 * j + 1) = -im(i, j);
      out(2 * i + 1, 2 * j) = im(i, j);
      out(2 * i + 1, 2 * j + 1) = re(i, j);
    }
  }
  return out;
}

MatQ real_kron(const MatQ& a, const MatQ& b) {
  MatQ out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::vector<MatQ> so_basis(int n) {
  std::vector<MatQ> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      MatQ m = MatQ::Zero(n, n);
      m(a, b) = 1;
      m(b, a) = -1;
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<CMatQ> u_basis(int n) {
  std::vector<CMatQ> out;
  for (int a = 0; a < n; ++a) {
    CMatQ m = CMatQ::zero(n, n);
    m.im(a, a) = 1;
    out.push_back(std::move(m));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      CMatQ m = CMatQ::zero(n, n);
      m.re(a, b) = 1;
      m.re(b, a) = -1;
      out.push_back(m);
      m = CMatQ::zero(n, n);
      m.im(a, b) = 1;
      m.im(b, a) = 1;
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<CMatQ> su_basis(int n) {
  std::vector<CMatQ> out;
  for (int a = 0; a + 1 < n; ++a) {
    CMatQ m = CMatQ::zero(n, n);
    m.im(a, a) = 1;
    m.im(a + 1, a + 1) = -1;
    out.push_back(std::move(m));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      CMatQ m = CMatQ::zero(n, n);
      m.re(a, b) = 1;
      m.re(b, a) = -1;
      out.push_back(m);
      m = CMatQ::zero(n, n);
      m.im(a, b) = 1;
      m.im(b, a) = 1;
      out.push_back(std::move(m));
    }
  }
  return out;
}

namespace {

/// Left multiplication by q = u + jv as the complex block [[u, -~v],[v, ~u]].
void put_quat_block(CMatQ* m, int a, int b, const Quaternion& q) {
  const Rational &w = q.c[0], &x = q.c[1], &y = q.c[2], &z = q.c[3];
  // u = w + xi, v = y - zi
  m->re(2 * a, 2 * b) = w;
  m->im(2 * a, 2 * b) = x;
  m->re(2 * a, 2 * b + 1) = -y;
  m->im(2 * a, 2 * b + 1) = -z;
  m->re(2 * a + 1, 2 * b) = y;
  m->im(2 * a + 1, 2 * b) = -z;
  m->re(2 * a + 1, 2 * b + 1) = w;
  m->im(2 * a + 1, 2 * b + 1) = -x;
}

}  // namespace

std::vector<QuatMat> sp_quaternion_basis(int n) {
  std::vector<QuatMat> out;
  const QuatMat zero(n, std::vector<Quaternion>(n));
  for (int a = 0; a < n; ++a) {
    for (int v = 1; v <= 3; ++v) {
      QuatMat m = zero;
      m[a][a] = Quaternion::unit(v);
      out.push_back(std::move(m));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int v = 0; v <= 3; ++v) {
        QuatMat m = zero;
        m[a][b] = Quaternion::unit(v);
        m[b][a] = -Quaternion::unit(v).conj();
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

std::vector<CMatQ> sp_complex_basis(int n) {
  std::vector<CMatQ> out;
  for (const QuatMat& qm : sp_quaternion_basis(n)) {
    CMatQ m = CMatQ::zero(2 * n, 2 * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) put_quat_block(&m, a, b, qm[a][b]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

MatQ quat_left_block(const Quaternion& q) {
  MatQ m(4, 4);
  for (int k = 0; k < 4; ++k) {
    const Quaternion col = q * Quaternion::unit(k);
    for (int i = 0; i < 4; ++i) m(i, k) = col.c[i];
  }
  return m;
}

MatQ quat_right_block(const Quaternion& q) {
  MatQ m(4, 4);
  for (int k = 0; k < 4; ++k) {
    const Quaternion col = Quaternion::unit(k) * q;
    for (int i = 0; i < 4; ++i) m(i, k) = col.c[i];
  }
  return m;
}

}  // namespace

MatQ quat_left_op(const QuatMat& m) {
  const int n = static_cast<int>(m.size());
  MatQ out = MatQ::Zero(4 * n, 4 * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (m[a][b].is_zero()) continue;
      out.block(4 * a, 4 * b, 4, 4) = quat_left_block(m[a][b]);
    }
  }
  return out;
}

MatQ quat_right_op(const Quaternion& q, int n) {
  MatQ out = MatQ::Zero(4 * n, 4 * n);
  const MatQ blk = quat_right_block(q);
  for (int a = 0; a < n; ++a) out.block(4 * a, 4 * a, 4, 4) = blk;
  return out;
}

LinearGroupAction real_tensor_action(int m, int n) {
  std::vector<MatQ> ops;
  for (const MatQ& s : so_basis(m)) ops.push_back(real_kron(s, MatQ::Identity(n, n)));
  for (const MatQ& t : so_basis(n)) ops.push_back(real_kron(MatQ::Identity(m, m), t));
  return LinearGroupAction::standard(std::move(ops), m * n);
}

LinearGroupAction sp_sp_quaternion_tensor(int a, int b) {
  // Quaternionic a x b matrices, flattened row-major, 4 real coords each.
  const int dim = 4 * a * b;
  std::vector<MatQ> ops;
  for (const QuatMat& qa : sp_quaternion_basis(a)) {
    MatQ op = MatQ::Zero(dim, dim);
    for (int r = 0; r < a; ++r) {
      for (int k = 0; k < a; ++k) {
        if (qa[r][k].is_zero()) continue;
        const MatQ blk = quat_left_block(qa[r][k]);
        for (int c = 0; c < b; ++c) op.block(4 * (r * b + c), 4 * (k * b + c), 4, 4) = blk;
      }
    }
    ops.push_back(std::move(op));
  }
  for (const QuatMat& qb : sp_quaternion_basis(b)) {
    MatQ op = MatQ::Zero(dim, dim);
    for (int k = 0; k < b; ++k) {
      for (int c = 0; c < b; ++c) {
        if (qb[k][c].is_zero()) continue;
        const MatQ blk = -quat_right_block(qb[k][c]);
        for (int r = 0; r < a; ++r) op.block(4 * (r * b + c), 4 * (r * b + k), 4, 4) = blk;
      }
    }
    ops.push_back(std::move(op));
  }
  return LinearGroupAction::standard(std::move(ops), dim);
}

namespace {

/// Symmetric-cube matrices of the su(2) basis u1 = diag(i,-i),
/// u2 = [[0,1],[-1,0]], u3 = [[0,i],[i,0]] on the monomial basis
/// z1^3, z1^2 z2, z1 z2^2, z2^3.
std::array<CMatQ, 3> sym_cube_matrices() {
  std::array<CMatQ, 3> rho = {CMatQ::zero(4, 4), CMatQ::zero(4, 4), CMatQ::zero(4, 4)};
  for (int k = 0; k < 4; ++k) {
    rho[0].im(k, k) = -(3 - 2 * k);
    if (k + 1 < 4) rho[1].re(k + 1, k) = -(3 - k);
    if (k - 1 >= 0) rho[1].re(k - 1, k) = k;
    if (k + 1 < 4) rho[2].im(k + 1, k) = -(3 - k);
    if (k - 1 >= 0) rho[2].im(k - 1, k) = -k;
  }
  return rho;
}

/// Realified quaternionic structure (J c)_k = (-1)^k conj(c_{3-k}).
MatQ sym_cube_structure_j() {
  MatQ j = MatQ::Zero(8, 8);
  for (int k = 0; k < 4; ++k) {
    const int sign = (k % 2 == 0) ? 1 : -1;
    j(2 * k, 2 * (3 - k)) = sign;       // re <- re
    j(2 * k + 1, 2 * (3 - k) + 1) = -sign;  // im <- -im
  }
  return j;
}

}  // namespace

LinearGroupAction su2_su2_spin_restriction() {
  const auto rho = sym_cube_matrices();
  const MatQ j = sym_cube_structure_j();
  const MatQ t1 = CMatQ::i_times_identity(4).realify();
  const std::array<MatQ, 3> structure = {t1, j, MatQ(t1 * j)};

  LinearGroupAction act;
  act.ambient_dim = 16;
  act.gram = MatQ::Zero(16, 16);
  // Invariant gram of the cube: weights 1, 1/3, 1/3, 1 per complex
  // coordinate, duplicated on the two summands.
  for (int s = 0; s < 2; ++s) {
    for (int k = 0; k < 4; ++k) {
      const Rational w = (k == 0 || k == 3) ? rat(1) : rat(1, 3);
      act.gram(8 * s + 2 * k, 8 * s + 2 * k) = w;
      act.gram(8 * s + 2 * k + 1, 8 * s + 2 * k + 1) = w;
    }
  }
  for (int a = 0; a < 3; ++a) {
    MatQ first = MatQ::Zero(16, 16);
    first.block(0, 0, 8, 8) = rho[a].realify();
    first.block(8, 8, 8, 8) = structure[a];
    act.operators.push_back(std::move(first));
  }
  for (int a = 0; a < 3; ++a) {
    MatQ second = MatQ::Zero(16, 16);
    second.block(0, 0, 8, 8) = structure[a];
    second.block(8, 8, 8, 8) = rho[a].realify();
    act.operators.push_back(std::move(second));
  }
  return act;
}

namespace {

constexpr const char* kTablesFixture = R"json(
{
  "tables": [
    {"id": "so2xspin9", "table": 1, "group": "SO2 x Spin9", "rep": "R^2 (x)_R R^16",
     "conditions": "-", "m": "15", "orbit_space": {"dim": 2, "label": "S^2_{+++}(1/2)"},
     "source": "table1.row1"},
    {"id": "u2xspn", "table": 1, "group": "U2 x Sp(n)", "rep": "C^2 (x)_C C^2n",
     "conditions": "n>=2", "m": "4n-1", "orbit_space": {"dim": 2, "label": "S^2_{+++}(1/2)"},
     "source": "table1.row2"},
    {"id": "un", "table": 1, "group": "U(n)", "rep": "C^n + C^n",
     "conditions": "n>=2", "m": "2n-1", "orbit_space": {"dim": 3, "label": "S^3_{+}(1/2)"},
     "source": "table1.row3"},
    {"id": "t2xsun", "table": 1, "group": "T^2 x SU(n)", "rep": "C^n + C^n",
     "conditions": "n>=2", "m": "2n-1", "orbit_space": {"dim": 2, "label": "S^2_{++}(1/2)"},
     "source": "table1.row4"},
    {"id": "u1xspn", "table": 1, "group": "U1 x Sp(n)", "rep": "C^2n + C^2n",
     "conditions": "n>=2", "m": "4n-1", "orbit_space": {"dim": 4, "label": "S^4_{++}(1/2)"},
     "source": "table1.row5"},
    {"id": "t2xspn", "table": 1, "group": "T^2 x Sp(n)", "rep": "C^2n + C^2n",
     "conditions": "n>=2", "m": "4n-1", "orbit_space": {"dim": 3, "label": "S^3_{+++}(1/2)"},
     "source": "table1.row6"},
    {"id": "spnxsp1", "table": 2, "group": "Sp(n) x Sp1", "rep": "R^4n + R^4n",
     "conditions": "n>=2", "m": "2n-1", "orbit_space": {"dim": 3, "label": "S^3_{++}(1/2)"},
     "source": "table2.row1"}
  ]
}
)json";

CMatQ block_diag2(const CMatQ& a, const CMatQ& b) {
  const int n = static_cast<int>(a.re.rows());
  const int m = static_cast<int>(b.re.rows());
  CMatQ out = CMatQ::zero(n + m, n + m);
  out.re.block(0, 0, n, n) = a.re;
  out.im.block(0, 0, n, n) = a.im;
  out.re.block(n, n, m, m) = b.re;
  out.im.block(n, n, m, m) = b.im;
  return out;
}

/// Operators on complex a x b matrices, flattened row-major, realified.
MatQ tensor_left(const CMatQ& x, int b) {
  const int a = static_cast<int>(x.re.rows());
  CMatQ big = CMatQ::zero(a * b, a * b);
  for (int r = 0; r < a; ++r) {
    for (int k = 0; k < a; ++k) {
      for (int c = 0; c < b; ++c) {
        big.re(r * b + c, k * b + c) = x.re(r, k);
        big.im(r * b + c, k * b + c) = x.im(r, k);
      }
    }
  }
  return big.realify();
}

MatQ tensor_right_minus(const CMatQ& y, int a) {
  const int b = static_cast<int>(y.re.rows());
  CMatQ big = CMatQ::zero(a * b, a * b);
  for (int r = 0; r < a; ++r) {
    for (int c = 0; c < b; ++c) {
      for (int k = 0; k < b; ++k) {
        big.re(r * b + c, r * b + k) = -y.re(k, c);
        big.im(r * b + c, r * b + k) = -y.im(k, c);
      }
    }
  }
  return big.realify();
}

}  // namespace

const std::vector<TableRow>& tables12_rows() {
  static const std::vector<TableRow> rows = [] {
    const nlohmann::json j = nlohmann::json::parse(kTablesFixture);
    std::vector<TableRow> out;
    for (const auto& r : j.at("tables")) {
      TableRow row;
      row.id = r.at("id");
      row.table = r.at("table");
      row.group = r.at("group");
      row.rep = r.at("rep");
      row.conditions = r.at("conditions");
      row.min_n = row.conditions == "-" ? 0 : 2;
      row.m_formula = r.at("m");
      row.quotient_dim = r.at("orbit_space").at("dim");
      row.orbit_space = r.at("orbit_space").at("label");
      row.source = r.at("source");
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

namespace {

// The orbit-space statements for the table rows refer to the unit sphere
// of the lifted representation.
LinearGroupAction sphere_action(std::vector<MatQ> ops, int n) {
  LinearGroupAction act = LinearGroupAction::standard(std::move(ops), n);
  act.constraint = LinearGroupAction::Constraint::UnitSphere;
  return act;
}

}  // namespace

LinearGroupAction build_rep(const TableRow& row, int n) {
  if (row.min_n == 0 && n != 0) throw std::invalid_argument("row " + row.id + " takes no parameter");
  if (row.min_n > 0 && n < row.min_n) {
    throw std::invalid_argument("row " + row.id + " requires n >= " + std::to_string(row.min_n));
  }

  if (row.id == "so2xspin9") {
    MatQ s2 = MatQ::Zero(2, 2);
    s2(0, 1) = -1;
    s2(1, 0) = 1;
    const SliceRep spin = slice_rep(stabilizer(shared_f4(), basepoint()), basepoint());
    std::vector<MatQ> ops = {real_kron(s2, MatQ::Identity(16, 16))};
    // The 16-dim factor operators come from the basepoint slice; skew for
    // the restricted gram 2I, hence plain skew.
    for (const MatQ& x : spin.action.operators) ops.push_back(real_kron(MatQ::Identity(2, 2), x));
    return sphere_action(std::move(ops), 32);
  }
  if (row.id == "u2xspn") {
    std::vector<MatQ> ops;
    for (const CMatQ& x : u_basis(2)) ops.push_back(tensor_left(x, 2 * n));
    for (const CMatQ& y : sp_complex_basis(n)) ops.push_back(tensor_right_minus(y, 2));
    return sphere_action(std::move(ops), 8 * n);
  }
  if (row.id == "un") {
    std::vector<MatQ> ops;
    for (const CMatQ& x : u_basis(n)) ops.push_back(block_diag2(x, x).realify());
    return sphere_action(std::move(ops), 4 * n);
  }
  if (row.id == "t2xsun") {
    std::vector<MatQ> ops;
    for (const CMatQ& x : su_basis(n)) ops.push_back(block_diag2(x, x).realify());
    ops.push_back(block_diag2(CMatQ::i_times_identity(n), CMatQ::zero(n, n)).realify());
    ops.push_back(block_diag2(CMatQ::zero(n, n), CMatQ::i_times_identity(n)).realify());
    return sphere_action(std::move(ops), 4 * n);
  }
  if (row.id == "u1xspn") {
    std::vector<MatQ> ops;
    for (const CMatQ& y : sp_complex_basis(n)) ops.push_back(block_diag2(y, y).realify());
    ops.push_back(CMatQ::i_times_identity(4 * n).realify());
    return sphere_action(std::move(ops), 8 * n);
  }
  if (row.id == "t2xspn") {
    std::vector<MatQ> ops;
    for (const CMatQ& y : sp_complex_basis(n)) ops.push_back(block_diag2(y, y).realify());
    ops.push_back(block_diag2(CMatQ::i_times_identity(2 * n), CMatQ::zero(2 * n, 2 * n)).realify());
    ops.push_back(block_diag2(CMatQ::zero(2 * n, 2 * n), CMatQ::i_times_identity(2 * n)).realify());
    return sphere_action(std::move(ops), 8 * n);
  }
  if (row.id == "spnxsp1") {
    std::vector<MatQ> ops;
    const int dim = 8 * n;
    for (const QuatMat& m : sp_quaternion_basis(n)) {
      const MatQ l = quat_left_op(m);
      MatQ op = MatQ::Zero(dim, dim);
      op.block(0, 0, 4 * n, 4 * n) = l;
      op.block(4 * n, 4 * n, 4 * n, 4 * n) = l;
      ops.push_back(std::move(op));
    }
    for (int v = 1; v <= 3; ++v) {
      const MatQ r = quat_right_op(Quaternion::unit(v), n);
      MatQ op = MatQ::Zero(dim, dim);
      op.block(0, 0, 4 * n, 4 * n) = r;
      op.block(4 * n, 4 * n, 4 * n, 4 * n) = r;
      ops.push_back(std::move(op));
    }
    return sphere_action(std::move(ops), dim);
  }
  throw std::invalid_argument("unknown table row: " + row.id);
}

RowCheck verify_row(const TableRow& row, int n, uint64_t seed) {
  const LinearGroupAction act = build_rep(row, n);
  RowCheck check;
  check.row_id = row.id;
  check.n = n;
  check.ambient_dim = act.ambient_dim;
  check.nonpolar_ok = !rep_polar_test(act, seed).polar;
  const RepCohomogeneity cohom = rep_cohomogeneity(act, seed);
  check.sphere_cohomogeneity = cohom.cohomogeneity - 1;
  check.cohomogeneity_ok = check.sphere_cohomogeneity == row.quotient_dim;
  return check;
}

}  // namespace cayley
