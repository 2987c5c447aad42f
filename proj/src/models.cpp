#include "hgf/models.hpp"

#include <map>
#include <mutex>

#include "hgf/errors.hpp"

namespace hgf {

std::string_view to_string(RepKind k) {
  switch (k) {
    case RepKind::Adjoint: return "adjoint";
    case RepKind::Coadjoint: return "coadjoint";
    case RepKind::Standard: return "standard";
    case RepKind::Dual: return "dual";
    case RepKind::Trivial: return "trivial";
  }
  return "?";
}

CoordinateMap coordinate_map(const std::vector<Matrix>& basis) {
  if (basis.empty()) throw AlgebraError("empty matrix basis");
  const int r = basis[0].rows();
  const int m = static_cast<int>(basis.size());
  CoordinateMap cm;
  Matrix rows(0, m);
  std::vector<std::vector<Rational>> picked;
  for (int i = 0; i < r && static_cast<int>(picked.size()) < m; ++i) {
    for (int j = 0; j < r && static_cast<int>(picked.size()) < m; ++j) {
      std::vector<Rational> row(m);
      for (int a = 0; a < m; ++a) row[a] = basis[a](i, j);
      auto trial = picked;
      trial.push_back(row);
      if (Matrix::from_rows(trial).rank() == static_cast<int>(trial.size())) {
        picked = std::move(trial);
        cm.pivots.emplace_back(i, j);
      }
    }
  }
  if (static_cast<int>(picked.size()) != m) throw AlgebraError("matrix basis is linearly dependent");
  cm.inv = Matrix::from_rows(picked).inverse();
  return cm;
}

Vec matrix_coordinates(const std::vector<Matrix>& basis, const Matrix& m) {
  CoordinateMap cm = coordinate_map(basis);
  Vec at;
  for (auto [i, j] : cm.pivots) at.push_back(m(i, j));
  Vec c = cm.inv * at;
  Matrix back(m.rows(), m.cols());
  for (std::size_t a = 0; a < basis.size(); ++a) back += basis[a] * c[a];
  if (back != m) throw AlgebraError("matrix lies outside the span of the basis");
  return c;
}

AlgebraPtr lie_from_matrices(std::string name, const std::vector<Matrix>& basis, std::vector<std::string> labels) {
  const int m = static_cast<int>(basis.size());
  Bilinear f(m, m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      Vec c = matrix_coordinates(basis, basis[a] * basis[b] - basis[b] * basis[a]);
      for (int k = 0; k < m; ++k) f.add(a, b, k, c[k]);
    }
  }
  return make_lie_algebra(std::move(name), m, std::move(f), std::move(labels));
}

int rep_block_dim(const RepBlock& b, int g_dim, int r) {
  switch (b.kind) {
    case RepKind::Adjoint:
    case RepKind::Coadjoint: return g_dim;
    case RepKind::Standard:
    case RepKind::Dual: return r;
    case RepKind::Trivial: return b.dim;
  }
  return 0;
}

Bilinear rep_tensor(const LieAlgebra& g, const std::vector<Matrix>& basis, const std::vector<RepBlock>& blocks) {
  const int m = g.dim;
  const int r = basis.empty() ? 0 : basis[0].rows();
  int total = 0;
  for (const auto& b : blocks) total += rep_block_dim(b, m, r);
  Bilinear t(m, total, total);
  int off = 0;
  for (const auto& blk : blocks) {
    const int d = rep_block_dim(blk, m, r);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < d; ++b) {
        for (int c = 0; c < d; ++c) {
          Rational v;
          switch (blk.kind) {
            case RepKind::Adjoint: v = g.f.at(a, b, c); break;
            case RepKind::Coadjoint: v = -g.f.at(a, c, b); break;
            case RepKind::Standard: v = basis[a](c, b); break;
            case RepKind::Dual: v = -basis[a](b, c); break;
            case RepKind::Trivial: break;
          }
          t.add(a, off + b, off + c, v);
        }
      }
    }
    off += d;
  }
  t.normalize();
  return t;
}

namespace {

Matrix unit_matrix(int r, int i, int j) {
  Matrix m(r, r);
  m(i, j) = Rational(1);
  return m;
}

std::vector<Matrix> sl2_basis() {
  Matrix h(2, 2);
  h(0, 0) = Rational(1);
  h(1, 1) = Rational(-1);
  return {h, unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)};
}

std::vector<Matrix> n3_basis() { return {unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2)}; }

const std::vector<std::string> kSl2Labels = {"H", "E", "F"};
const std::vector<std::string> kN3Labels = {"P", "Q", "Z"};

std::vector<std::string> starred(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& s : labels) out.push_back(s + "*");
  return out;
}

Matrix block_identity(int rows, int cols, int row_off, int col_off, int n) {
  Matrix m(rows, cols);
  for (int i = 0; i < n; ++i) m(row_off + i, col_off + i) = Rational(1);
  return m;
}

struct LieSetup {
  AlgebraPtr g;
  std::vector<Matrix> basis;
  Realization real;
};

LieSetup sl2_setup() {
  LieSetup s;
  s.basis = sl2_basis();
  s.g = lie_from_matrices("sl2", s.basis, kSl2Labels);
  s.real.r = 2;
  s.real.g_basis = s.basis;
  s.real.free_positions = {{0, 1}};
  return s;
}

LieSetup n3_setup() {
  LieSetup s;
  s.basis = n3_basis();
  s.g = lie_from_matrices("n3", s.basis, kN3Labels);
  s.real.r = 3;
  s.real.g_basis = s.basis;
  s.real.free_positions = {{0, 1}, {0, 2}, {1, 2}};
  return s;
}

Builtin lie_model(const std::string& name, LieSetup s) {
  auto m = std::make_shared<HigherAlgebra>();
  m->name = name;
  m->level = ModelLevel::Lie;
  m->g = s.g;
  m->pairings.sym_g = Matrix::identity(s.g->dim);
  return {m, s.real};
}

Builtin abelian1() {
  LieSetup s;
  s.basis = {unit_matrix(2, 0, 1)};
  s.g = lie_from_matrices("u1", s.basis, {"T"});
  s.real.r = 2;
  s.real.g_basis = s.basis;
  s.real.free_positions = {{0, 1}};
  return lie_model("abelian1", s);
}

// h = g, alpha = id, |> = ad, trace pairing.
Builtin adjoint_sl2() {
  LieSetup s = sl2_setup();
  auto m = std::make_shared<HigherAlgebra>();
  m->name = "adjoint_sl2";
  m->level = ModelLevel::Crossed;
  m->g = s.g;
  m->h = lie_from_matrices("sl2_h", s.basis, {"H'", "E'", "F'"});
  m->alpha = Matrix::identity(3);
  s.real.h_rep = {{RepKind::Adjoint, 0}};
  m->act_h = rep_tensor(*m->g, s.basis, s.real.h_rep);
  Matrix tr(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Matrix p = s.basis[a] * s.basis[b];
      tr(a, b) = p(0, 0) + p(1, 1);
    }
  m->pairings.gh = tr;
  m->pairings.sym_g = Matrix::identity(3);
  m->pairings.sym_h = Matrix::identity(3);
  return {m, s.real};
}

// alpha = 0 with h the coadjoint module (or the standard module when `standard`).
Builtin skeletal(const std::string& name, LieSetup s, bool standard) {
  auto m = std::make_shared<HigherAlgebra>();
  m->name = name;
  m->level = ModelLevel::Crossed;
  m->g = s.g;
  if (standard) {
    s.real.h_rep = {{RepKind::Standard, 0}};
    std::vector<std::string> labels;
    for (int i = 0; i < s.real.r; ++i) labels.push_back("e" + std::to_string(i + 1));
    m->h = make_abelian(s.g->name + "_std", s.real.r, labels);
    m->pairings.sym_g = Matrix::identity(s.g->dim);
    m->pairings.sym_h = Matrix::identity(s.real.r);
  } else {
    s.real.h_rep = {{RepKind::Coadjoint, 0}};
    m->h = make_abelian(s.g->name + "_dual", s.g->dim, starred(s.g->labels));
    m->pairings.gh = Matrix::identity(s.g->dim);
    m->pairings.sym_g = Matrix::identity(s.g->dim);
    m->pairings.sym_h = Matrix::identity(s.g->dim);
  }
  m->alpha = Matrix(s.g->dim, m->h->dim);
  m->act_h = rep_tensor(*m->g, s.basis, s.real.h_rep);
  return {m, s.real};
}

// Peiffer lifting {Y1,Y2} determined by <X, {Y1,Y2}>_gl = 1/2 <Y2, X |> Y1>_h with gl = id.
Bilinear symplectic_peiffer(const HigherAlgebra& m) {
  const int dh = m.h->dim;
  const int dg = m.g->dim;
  const Matrix& w = *m.pairings.h_anti;
  Bilinear p(dh, dh, dg);
  for (int a = 0; a < dg; ++a) {
    Vec x = unit_vector(dg, a);
    for (int b1 = 0; b1 < dh; ++b1) {
      Vec xy = m.act_h.apply(x, unit_vector(dh, b1));
      for (int b2 = 0; b2 < dh; ++b2) {
        Rational v;
        for (int i = 0; i < dh; ++i) v += w(b2, i) * xy[i];
        p.add(b1, b2, a, Rational(1, 2) * v);
      }
    }
  }
  p.normalize();
  return p;
}

// Abelian h with an invariant symplectic form, l = g* coadjoint, alpha = beta = 0.
Builtin symplectic(const std::string& name, LieSetup s, std::vector<RepBlock> h_rep, Matrix omega,
                   std::vector<std::string> h_labels) {
  auto m = std::make_shared<HigherAlgebra>();
  m->name = name;
  m->level = ModelLevel::TwoCrossed;
  m->g = s.g;
  const int dg = s.g->dim;
  const int dh = omega.rows();
  m->h = make_abelian(name + "_h", dh, std::move(h_labels));
  m->l = make_abelian(s.g->name + "_dual", dg, starred(s.g->labels));
  s.real.h_rep = std::move(h_rep);
  s.real.l_rep = {{RepKind::Coadjoint, 0}};
  m->act_h = rep_tensor(*m->g, s.basis, s.real.h_rep);
  m->act_l = rep_tensor(*m->g, s.basis, s.real.l_rep);
  m->alpha = Matrix(dg, dh);
  m->beta = Matrix(dh, dg);
  m->fine = true;
  m->abelian_h = true;
  m->pairings.gl = Matrix::identity(dg);
  m->pairings.h_anti = std::move(omega);
  m->pairings.sym_g = Matrix::identity(dg);
  m->pairings.sym_h = Matrix::identity(dh);
  m->pairings.sym_l = Matrix::identity(dg);
  m->peiffer = symplectic_peiffer(*m);
  return {m, s.real};
}

Builtin symplectic_sl2() {
  Matrix w(2, 2);
  w(0, 1) = Rational(1);
  w(1, 0) = Rational(-1);
  return symplectic("symplectic_sl2", sl2_setup(), {{RepKind::Standard, 0}}, w, {"e1", "e2"});
}

Builtin symplectic_n3() {
  // Canonical form on R^3 + R^3*: w((v,n),(v',n')) = n.v' - n'.v.
  Matrix w(6, 6);
  for (int i = 0; i < 3; ++i) {
    w(3 + i, i) = Rational(1);
    w(i, 3 + i) = Rational(-1);
  }
  return symplectic("symplectic_n3", n3_setup(), {{RepKind::Standard, 0}, {RepKind::Dual, 0}}, w,
                    {"e1", "e2", "e3", "f1", "f2", "f3"});
}

// g = sl2, h = sl2 |x R^2, l = R^2, alpha the projection, beta the inclusion,
// {(k1,v1),(k2,v2)} = -k2.v1. Fine, nonabelian h, no invariant pairing
// (identity sym_* forms only).
Builtin semidirect_sl2() {
  LieSetup s = sl2_setup();
  auto m = std::make_shared<HigherAlgebra>();
  m->name = "semidirect_sl2";
  m->level = ModelLevel::TwoCrossed;
  m->g = s.g;
  const LieAlgebra& g = *s.g;
  Bilinear std_t = rep_tensor(g, s.basis, {{RepKind::Standard, 0}});
  Bilinear hf(5, 5, 5);
  for (const auto& e : g.f.entries) hf.add(e.a, e.b, e.c, e.v);
  for (const auto& e : std_t.entries) {
    hf.add(e.a, 3 + e.b, 3 + e.c, e.v);
    hf.add(3 + e.b, e.a, 3 + e.c, -e.v);
  }
  m->h = make_lie_algebra("sl2_x_R2", 5, hf, {"H'", "E'", "F'", "v1", "v2"});
  m->l = make_abelian("R2", 2, {"z1", "z2"});
  s.real.h_rep = {{RepKind::Adjoint, 0}, {RepKind::Standard, 0}};
  s.real.l_rep = {{RepKind::Standard, 0}};
  m->act_h = rep_tensor(g, s.basis, s.real.h_rep);
  m->act_l = rep_tensor(g, s.basis, s.real.l_rep);
  m->alpha = block_identity(3, 5, 0, 0, 3);
  m->beta = block_identity(5, 2, 3, 0, 2);
  Bilinear p(5, 5, 2);
  for (const auto& e : std_t.entries) p.add(3 + e.b, e.a, e.c, -e.v);
  p.normalize();
  m->peiffer = p;
  m->fine = true;
  m->pairings.sym_g = Matrix::identity(3);
  m->pairings.sym_h = Matrix::identity(5);
  m->pairings.sym_l = Matrix::identity(2);
  return {m, s.real};
}

// h = l = R^2 (standard), beta = id, alpha = 0, zero Peiffer lifting; abelian h with beta != 0.
Builtin shifted_sl2() {
  LieSetup s = sl2_setup();
  auto m = std::make_shared<HigherAlgebra>();
  m->name = "shifted_sl2";
  m->level = ModelLevel::TwoCrossed;
  m->g = s.g;
  m->h = make_abelian("sl2_std", 2, {"e1", "e2"});
  m->l = make_abelian("sl2_std_l", 2, {"z1", "z2"});
  s.real.h_rep = {{RepKind::Standard, 0}};
  s.real.l_rep = {{RepKind::Standard, 0}};
  m->act_h = rep_tensor(*m->g, s.basis, s.real.h_rep);
  m->act_l = rep_tensor(*m->g, s.basis, s.real.l_rep);
  m->alpha = Matrix(3, 2);
  m->beta = Matrix::identity(2);
  m->peiffer = Bilinear(2, 2, 2);
  m->abelian_h = true;
  m->pairings.sym_g = Matrix::identity(3);
  m->pairings.sym_h = Matrix::identity(2);
  m->pairings.sym_l = Matrix::identity(2);
  return {m, s.real};
}

// Everything abelian with trivial actions and zero maps.
Builtin trivial_chain() {
  LieSetup s;
  s.basis = {unit_matrix(3, 0, 1), unit_matrix(3, 0, 2)};
  s.g = lie_from_matrices("R2g", s.basis, {"T1", "T2"});
  s.real.r = 3;
  s.real.g_basis = s.basis;
  s.real.free_positions = {{0, 1}, {0, 2}};
  s.real.h_rep = {{RepKind::Trivial, 1}};
  s.real.l_rep = {{RepKind::Trivial, 2}};
  auto m = std::make_shared<HigherAlgebra>();
  m->name = "trivial_chain";
  m->level = ModelLevel::TwoCrossed;
  m->g = s.g;
  m->h = make_abelian("R1", 1, {"Y"});
  m->l = make_abelian("R2l", 2, {"Z1", "Z2"});
  m->alpha = Matrix(2, 1);
  m->beta = Matrix(1, 2);
  m->act_h = Bilinear(2, 1, 1);
  m->act_l = Bilinear(2, 2, 2);
  m->peiffer = Bilinear(1, 1, 2);
  m->fine = true;
  m->abelian_h = true;
  m->pairings.sym_g = Matrix::identity(2);
  m->pairings.sym_h = Matrix::identity(1);
  m->pairings.sym_l = Matrix::identity(2);
  return {m, s.real};
}

using Factory = Builtin (*)();

const std::vector<std::pair<std::string, Factory>>& factories() {
  static const std::vector<std::pair<std::string, Factory>> f = {
      {"abelian1", &abelian1},
      {"sl2", [] { return lie_model("sl2", sl2_setup()); }},
      {"n3", [] { return lie_model("n3", n3_setup()); }},
      {"adjoint_sl2", &adjoint_sl2},
      {"skeletal_sl2", [] { return skeletal("skeletal_sl2", sl2_setup(), false); }},
      {"skeletal_n3", [] { return skeletal("skeletal_n3", n3_setup(), false); }},
      {"standard_sl2", [] { return skeletal("standard_sl2", sl2_setup(), true); }},
      {"symplectic_sl2", &symplectic_sl2},
      {"symplectic_n3", &symplectic_n3},
      {"semidirect_sl2", &semidirect_sl2},
      {"shifted_sl2", &shifted_sl2},
      {"trivial_chain", &trivial_chain},
  };
  return f;
}

std::shared_ptr<HigherAlgebra> copy_model(const Builtin& b, const std::string& name) {
  auto m = std::make_shared<HigherAlgebra>(*b.model);
  m->name = name;
  return m;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [n, f] : factories()) out.push_back(n);
  return out;
}

const Builtin& builtin(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, Builtin, std::less<>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  for (const auto& [n, f] : factories()) {
    if (n == name) return cache.emplace(n, f()).first->second;
  }
  throw AlgebraError("unknown builtin model '" + std::string(name) + "'");
}

std::vector<CorruptedModel> corrupted_models() {
  std::vector<CorruptedModel> out;

  {  // [H,E] = -2E with antisymmetry kept.
    Bilinear f = builtin("sl2").model->g->f;
    for (auto& e : f.entries)
      if ((e.a == 0 && e.b == 1) || (e.a == 1 && e.b == 0)) e.v = -e.v;
    auto m = copy_model(builtin("sl2"), "sl2_flipped_sign");
    m->g = make_lie_algebra("sl2_bad", 3, f, kSl2Labels);
    out.push_back({m->name, m, "jacobi"});
  }
  {  // [H,E] changed without [E,H].
    Bilinear f = builtin("sl2").model->g->f;
    f.add(0, 1, 1, Rational(1));
    auto m = copy_model(builtin("sl2"), "sl2_not_antisymmetric");
    m->g = make_lie_algebra("sl2_bad", 3, f, kSl2Labels);
    out.push_back({m->name, m, "antisymmetry"});
  }
  {
    auto m = copy_model(builtin("adjoint_sl2"), "adjoint_zero_action");
    m->act_h = Bilinear(3, 3, 3);
    out.push_back({m->name, m, "peiffer"});
  }
  {
    auto m = copy_model(builtin("adjoint_sl2"), "adjoint_doubled_alpha");
    m->alpha = Matrix::identity(3) * Rational(2);
    out.push_back({m->name, m, "alpha-homomorphism"});
  }
  {
    auto m = copy_model(builtin("skeletal_sl2"), "skeletal_scaled_action");
    for (auto& e : m->act_h.entries) {
      if (e.a == 1) {
        e.v *= Rational(2);
        break;
      }
    }
    out.push_back({m->name, m, "action-representation"});
  }
  {
    auto m = copy_model(builtin("skeletal_sl2"), "skeletal_identity_alpha");
    m->alpha = Matrix::identity(3);
    out.push_back({m->name, m, "alpha-equivariance"});
  }
  {  // alpha * beta != 0.
    auto m = copy_model(builtin("trivial_chain"), "chain_not_complex");
    m->alpha(0, 0) = Rational(1);
    m->beta(0, 0) = Rational(1);
    out.push_back({m->name, m, "complex"});
  }
  {  // {beta Z, Y} + {Y, beta Z} != -alpha(Y) |> Z.
    auto m = copy_model(builtin("trivial_chain"), "chain_symmetric_peiffer");
    m->beta(0, 0) = Rational(1);
    m->peiffer.add(0, 0, 0, Rational(1));
    m->peiffer.normalize();
    out.push_back({m->name, m, "axiom-6"});
  }
  {
    auto m = copy_model(builtin("symplectic_sl2"), "symplectic_nonequivariant_peiffer");
    m->peiffer.add(0, 0, 1, Rational(1));
    m->peiffer.normalize();
    out.push_back({m->name, m, "peiffer-equivariance"});
  }
  {
    auto m = copy_model(builtin("symplectic_sl2"), "symplectic_deficient_gl");
    (*m->pairings.gl)(2, 2) = Rational(0);
    out.push_back({m->name, m, "nondegenerate-gl"});
  }
  {  // gl pairing between g (dim 2) and l (dim 1).
    auto m = copy_model(builtin("trivial_chain"), "chain_unbalanced");
    m->l = make_abelian("R1l", 1, {"Z"});
    m->beta = Matrix(1, 1);
    m->act_l = Bilinear(2, 1, 1);
    m->peiffer = Bilinear(1, 1, 1);
    m->pairings.sym_l = Matrix::identity(1);
    Matrix gl(2, 1);
    gl(0, 0) = Rational(1);
    m->pairings.gl = gl;
    m->pairings.h_anti = Matrix(1, 1);
    out.push_back({m->name, m, "balanced"});
  }
  {
    auto m = copy_model(builtin("skeletal_sl2"), "skeletal_noninvariant_gh");
    (*m->pairings.gh)(1, 1) = Rational(2);
    out.push_back({m->name, m, "XXY"});
  }
  {
    auto m = copy_model(builtin("symplectic_sl2"), "symplectic_symmetric_h");
    m->pairings.h_anti = Matrix::identity(2);
    out.push_back({m->name, m, "h-antisymmetry"});
  }
  {
    auto m = copy_model(builtin("semidirect_sl2"), "semidirect_broken_axiom2");
    m->beta = Matrix(5, 2);
    out.push_back({m->name, m, "axiom-2"});
  }
  return out;
}

}  // namespace hgf
