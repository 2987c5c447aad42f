#include "hgf/group.hpp"

#include <sstream>

#include "hgf/errors.hpp"

namespace hgf {

PolyMatrix::PolyMatrix(int rows, int cols, int dim)
    : rows_(rows), cols_(cols), dim_(dim), a_(static_cast<std::size_t>(rows) * cols, Polynomial(dim)) {}

PolyMatrix PolyMatrix::identity(int n, int dim) {
  PolyMatrix m(n, n, dim);
  for (int i = 0; i < n; ++i) m(i, i) = Polynomial::constant(dim, Rational(1));
  return m;
}

PolyMatrix PolyMatrix::lift(const Matrix& c, int dim) {
  PolyMatrix m(c.rows(), c.cols(), dim);
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j)
      if (!c(i, j).is_zero()) m(i, j) = Polynomial::constant(dim, c(i, j));
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, dim_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatForm PolyMatrix::as_form() const {
  if (rows_ != cols_) throw DimensionError("matrix of functions must be square");
  return MatForm::from_functions(rows_, a_);
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  PolyMatrix out(a.rows_, b.cols_, a.dim_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Polynomial& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j).add_product(x, b(k, j), Rational(1));
    }
  return out;
}

std::string PolyMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

AlgForm apply(const PolyMatrix& m, const AlgForm& x, const AlgebraPtr& out) {
  if (m.cols() != x.size() || m.rows() != out->dim) throw DimensionError("matrix does not fit the algebra");
  AlgForm r(out, x.dim(), x.degree());
  for (int j = 0; j < x.size(); ++j) {
    if (x[j].is_zero()) continue;
    for (int i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) r.add(i, x[j].times(m(i, j)));
  }
  return r;
}

UnipotentMatrix::UnipotentMatrix(PolyMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) throw DimensionError("unipotent matrix must be square");
  const Polynomial one = Polynomial::constant(m_.dim(), Rational(1));
  for (int i = 0; i < m_.rows(); ++i) {
    if (m_(i, i) != one) throw DimensionError("unipotent matrix needs a unit diagonal");
    for (int j = 0; j < i; ++j)
      if (!m_(i, j).is_zero()) throw DimensionError("unipotent matrix must be upper triangular");
  }
}

UnipotentMatrix UnipotentMatrix::inverse() const {
  const int n = r();
  PolyMatrix neg = PolyMatrix::identity(n, dim()) - m_;  // -N
  PolyMatrix term = PolyMatrix::identity(n, dim());
  PolyMatrix sum = term;
  for (int j = 1; j < n; ++j) {
    term = term * neg;
    sum += term;
  }
  return UnipotentMatrix(sum);
}

GroupModel::GroupModel(ModelPtr model, Realization real) : model_(std::move(model)), real_(std::move(real)) {
  if (!model_ || !model_->g) throw AlgebraError("group model needs an algebra model");
  if (static_cast<int>(real_.g_basis.size()) != model_->g->dim) throw AlgebraError("realization basis size != dim g");
  for (const auto& b : real_.g_basis)
    if (b.rows() != real_.r || b.cols() != real_.r) throw AlgebraError("realization basis matrix has wrong size");
  auto block_total = [&](const std::vector<RepBlock>& blocks) {
    int t = 0;
    for (const auto& b : blocks) t += rep_block_dim(b, model_->g->dim, real_.r);
    return t;
  };
  if (model_->h && block_total(real_.h_rep) != model_->h->dim) throw AlgebraError("h representation has wrong size");
  if (model_->l && block_total(real_.l_rep) != model_->l->dim) throw AlgebraError("l representation has wrong size");
  coords_ = coordinate_map(real_.g_basis);
}

GroupModel GroupModel::builtin(std::string_view name) {
  const Builtin& b = hgf::builtin(name);
  if (!b.realization) throw AlgebraError("builtin model has no group realization: " + std::string(name));
  return GroupModel(b.model, *b.realization);
}

PolyMatrix GroupModel::ad_matrix(const UnipotentMatrix& g) const {
  const int m = model_->g->dim;
  const int dim = g.dim();
  const PolyMatrix& gm = g.matrix();
  const PolyMatrix gi = g.inverse().matrix();
  PolyMatrix out(m, m, dim);
  for (int a = 0; a < m; ++a) {
    PolyMatrix conj = gm * PolyMatrix::lift(real_.g_basis[a], dim) * gi;
    for (int c = 0; c < m; ++c) {
      Polynomial v(dim);
      for (std::size_t k = 0; k < coords_.pivots.size(); ++k) {
        const Rational& w = coords_.inv(c, static_cast<int>(k));
        if (!w.is_zero()) v += conj(coords_.pivots[k].first, coords_.pivots[k].second) * w;
      }
      out(c, a) = v;
    }
  }
  return out;
}

namespace {

PolyMatrix block_matrix(const GroupModel& gm, const UnipotentMatrix& g, const RepBlock& blk) {
  const int dim = g.dim();
  switch (blk.kind) {
    case RepKind::Adjoint: return gm.ad_matrix(g);
    case RepKind::Coadjoint: return gm.ad_matrix(g.inverse()).transpose();
    case RepKind::Standard: return g.matrix();
    case RepKind::Dual: return g.inverse().matrix().transpose();
    case RepKind::Trivial: return PolyMatrix::identity(blk.dim, dim);
  }
  throw AlgebraError("unknown representation kind");
}

PolyMatrix direct_sum(const GroupModel& gm, const UnipotentMatrix& g, const std::vector<RepBlock>& blocks, int total) {
  PolyMatrix out(total, total, g.dim());
  int off = 0;
  for (const auto& blk : blocks) {
    PolyMatrix b = block_matrix(gm, g, blk);
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

}  // namespace

PolyMatrix GroupModel::rep_matrix(const UnipotentMatrix& g, const AlgebraPtr& target) const {
  if (g.r() != real_.r) throw DimensionError("group element has the wrong matrix size");
  if (target == model_->g) return ad_matrix(g);
  if (target && target == model_->h) return direct_sum(*this, g, real_.h_rep, model_->h->dim);
  if (target && target == model_->l) return direct_sum(*this, g, real_.l_rep, model_->l->dim);
  throw ProfileError("algebra does not belong to the group model");
}

AlgForm GroupModel::act(const UnipotentMatrix& g, const AlgForm& x) const {
  return apply(rep_matrix(g, x.algebra()), x, x.algebra());
}

AlgForm GroupModel::to_algebra(const MatForm& m) const {
  if (m.r() != real_.r) throw DimensionError("matrix form has the wrong size");
  const int n = model_->g->dim;
  AlgForm out(model_->g, m.dim(), m.degree());
  for (int c = 0; c < n; ++c) {
    OrdinaryForm v(m.dim(), m.degree());
    for (std::size_t k = 0; k < coords_.pivots.size(); ++k) {
      const Rational& w = coords_.inv(c, static_cast<int>(k));
      if (!w.is_zero()) v += m(coords_.pivots[k].first, coords_.pivots[k].second) * w;
    }
    out.add(c, v);
  }
  if (to_matrix(out) != m) throw AlgebraError("matrix-valued form lies outside the algebra");
  return out;
}

MatForm GroupModel::to_matrix(const AlgForm& x) const {
  if (x.algebra() != model_->g) throw ProfileError("only g-valued forms have a matrix image");
  MatForm out(real_.r, x.dim(), x.degree());
  for (int a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    const Matrix& b = real_.g_basis[a];
    for (int i = 0; i < real_.r; ++i)
      for (int j = 0; j < real_.r; ++j)
        if (!b(i, j).is_zero()) out.add(i, j, x[a] * b(i, j));
  }
  return out;
}

AlgForm GroupModel::maurer_cartan(const UnipotentMatrix& g) const {
  return to_algebra(wedge(g.inverse().matrix().as_form(), ext_d(g.matrix().as_form())));
}

UnipotentMatrix GroupModel::element(const std::vector<Polynomial>& values) const {
  if (values.size() != real_.free_positions.size()) throw DimensionError("one value per free position expected");
  if (values.empty()) throw DimensionError("realization has no free positions");
  PolyMatrix m = PolyMatrix::identity(real_.r, values[0].dim());
  for (std::size_t k = 0; k < values.size(); ++k) {
    auto [i, j] = real_.free_positions[k];
    m(i, j) = values[k];
  }
  return UnipotentMatrix(m);
}

UnipotentMatrix GroupModel::random_element(Rng& rng, int dim, const RandomLimits& lim) const {
  std::vector<Polynomial> v;
  for (std::size_t k = 0; k < real_.free_positions.size(); ++k) {
    v.push_back(rng.coin() ? rng.polynomial(dim, lim) : Polynomial(dim));
  }
  return element(v);
}

namespace {

AlgForm basis0(const AlgebraPtr& alg, int dim, int a) {
  return AlgForm::basis(alg, OrdinaryForm::constant(dim, Rational(1)), a);
}

}  // namespace

ValidationReport validate_group_model(const GroupModel& gm, Rng& rng, int dim, int samples) {
  ValidationReport rep;
  const HigherAlgebra& m = gm.model();
  const RandomLimits lim{2, 2, 2};
  for (int s = 0; s < samples; ++s) {
    UnipotentMatrix g1 = gm.random_element(rng, dim, lim);
    UnipotentMatrix g2 = gm.random_element(rng, dim, lim);
    const std::string tag = "sample " + std::to_string(s);
    try {
      (void)gm.maurer_cartan(g1);
    } catch (const AlgebraError&) {
      rep.add("maurer-cartan-in-g", tag);
    }
    for (const AlgebraPtr& alg : {m.g, m.h, m.l}) {
      if (!alg) continue;
      if (gm.rep_matrix(g1 * g2, alg) != gm.rep_matrix(g1, alg) * gm.rep_matrix(g2, alg)) {
        rep.add(alg == m.g ? "ad-homomorphism" : "action-homomorphism", tag + " on " + alg->name);
      }
    }
    PolyMatrix ad = gm.ad_matrix(g1);
    for (int a = 0; a < m.g->dim; ++a) {
      AlgForm x = basis0(m.g, dim, a);
      AlgForm adx = apply(ad, x, m.g);
      for (const AlgebraPtr& alg : {m.h, m.l}) {
        if (!alg) continue;
        for (int b = 0; b < alg->dim; ++b) {
          AlgForm y = basis0(alg, dim, b);
          if (gm.act(g1, act(m, x, y)) != act(m, adx, gm.act(g1, y))) {
            rep.add(alg == m.h ? "covariance-h" : "covariance-l", tag);
          }
        }
      }
    }
    if (m.h) {
      for (int b = 0; b < m.h->dim; ++b) {
        AlgForm y = basis0(m.h, dim, b);
        if (apply_alpha(m, gm.act(g1, y)) != gm.act(g1, apply_alpha(m, y))) rep.add("alpha-equivariance", tag);
      }
    }
    if (m.l) {
      for (int c = 0; c < m.l->dim; ++c) {
        AlgForm z = basis0(m.l, dim, c);
        if (apply_beta(m, gm.act(g1, z)) != gm.act(g1, apply_beta(m, z))) rep.add("beta-equivariance", tag);
      }
      for (int b1 = 0; b1 < m.h->dim; ++b1)
        for (int b2 = 0; b2 < m.h->dim; ++b2) {
          AlgForm y1 = basis0(m.h, dim, b1);
          AlgForm y2 = basis0(m.h, dim, b2);
          if (gm.act(g1, peiffer(m, y1, y2)) != peiffer(m, gm.act(g1, y1), gm.act(g1, y2))) {
            rep.add("peiffer-covariance", tag);
          }
        }
    }
    auto check_pairing = [&](PairingKind kind, const AlgebraPtr& left, const AlgebraPtr& right, const char* axiom) {
      if (!m.pairings.get(kind) || !left || !right) return;
      for (int a = 0; a < left->dim; ++a)
        for (int b = 0; b < right->dim; ++b) {
          AlgForm x = basis0(left, dim, a);
          AlgForm y = basis0(right, dim, b);
          if (pair_forms(m, gm.act(g1, x), gm.act(g1, y), kind) != pair_forms(m, x, y, kind)) rep.add(axiom, tag);
        }
    };
    check_pairing(PairingKind::GH, m.g, m.h, "gh-invariance");
    check_pairing(PairingKind::GL, m.g, m.l, "gl-invariance");
    check_pairing(PairingKind::HAnti, m.h, m.h, "h-invariance");
  }
  return rep;
}

namespace {

void check_h(const GroupModel& gm, const AlgForm& x, int degree) {
  if (x.algebra() != gm.model().h) throw ProfileError("phi must be valued in h");
  if (x.degree() != degree) throw DimensionError("phi must be a 1-form");
}

}  // namespace

GroupElement identity_element(const GroupModel& gm, int n_type, int dim) {
  const HigherAlgebra& m = gm.model();
  GroupElement e;
  e.n_type = n_type;
  e.g = UnipotentMatrix::identity(gm.r(), dim);
  if (n_type == 1) {
    if (!m.h) throw ProfileError("N=1 group elements need a crossed module");
    e.phi = {AlgForm(m.h, dim, 1)};
  } else if (n_type == 2) {
    if (!m.h || !m.l) throw ProfileError("N=2 group elements need a 2-crossed module");
    e.phi = {AlgForm(m.h, dim, 1), AlgForm(m.h, dim, 1)};
    e.psi = AlgForm(m.l, dim, 2);
  } else {
    throw ProfileError("group elements have type N=1 or N=2");
  }
  return e;
}

GroupElement make_element1(const GroupModel& gm, UnipotentMatrix g, AlgForm phi) {
  GroupElement e = identity_element(gm, 1, g.dim());
  check_h(gm, phi, 1);
  e.g = std::move(g);
  e.phi[0] = std::move(phi);
  return e;
}

GroupElement make_element2(const GroupModel& gm, UnipotentMatrix g, AlgForm phi1, AlgForm phi2, AlgForm psi) {
  GroupElement e = identity_element(gm, 2, g.dim());
  check_h(gm, phi1, 1);
  check_h(gm, phi2, 1);
  if (psi.algebra() != gm.model().l || psi.degree() != 2) throw ProfileError("psi must be an l-valued 2-form");
  e.g = std::move(g);
  e.phi = {std::move(phi1), std::move(phi2)};
  e.psi = std::move(psi);
  return e;
}

GroupElement random_group_element(const GroupModel& gm, Rng& rng, int n_type, int dim, const RandomLimits& lim,
                                  bool simplified) {
  const HigherAlgebra& m = gm.model();
  UnipotentMatrix g = gm.random_element(rng, dim, lim);
  if (n_type == 1) return make_element1(gm, g, rng.alg_form(m.h, dim, 1, lim));
  AlgForm phi1 = rng.alg_form(m.h, dim, 1, lim);
  AlgForm phi2 = simplified ? AlgForm(m.h, dim, 1) : rng.alg_form(m.h, dim, 1, lim);
  return make_element2(gm, g, phi1, phi2, rng.alg_form(m.l, dim, 2, lim));
}

GroupElement compose(const GroupModel& gm, const GroupElement& a, const GroupElement& b) {
  if (a.n_type != b.n_type) throw ProfileError("composing group elements of different type N");
  if (a.phi[0].algebra() != b.phi[0].algebra()) throw ProfileError("group elements from different models");
  GroupElement out = a;
  out.g = a.g * b.g;
  for (std::size_t i = 0; i < a.phi.size(); ++i) out.phi[i] += gm.act(a.g, b.phi[i]);
  if (a.psi) *out.psi += gm.act(a.g, *b.psi);
  return out;
}

GroupElement inverse(const GroupModel& gm, const GroupElement& a) {
  GroupElement out = a;
  out.g = a.g.inverse();
  for (auto& p : out.phi) p = -gm.act(out.g, p);
  if (out.psi) *out.psi = -gm.act(out.g, *out.psi);
  return out;
}

namespace {

AlgForm half_square(const AlgForm& phi) { return bracket(phi, phi) * Rational(1, 2); }

}  // namespace

AlgGForm mc2(const GroupModel& gm, const GroupElement& G, const DerivativeContext& ctx) {
  if (G.n_type != 1 || ctx.n_type != 1) throw ProfileError("mc2 needs a type N=1 element and context");
  const HigherAlgebra& m = gm.model();
  const UnipotentMatrix gi = G.g.inverse();
  const AlgForm& phi = G.phi[0];
  AlgForm u = gm.maurer_cartan(G.g) - gm.act(gi, apply_alpha(m, phi)) * ctx.k;
  AlgForm v = gm.act(gi, ext_d(phi) - half_square(phi) * ctx.k);
  return AlgGForm(1, 1, {u, v});
}

AlgGForm mc3(const GroupModel& gm, const GroupElement& G, const DerivativeContext& ctx) {
  if (G.n_type != 2 || ctx.n_type != 2) throw ProfileError("mc3 needs a type N=2 element and context");
  if (!G.simplified()) throw ProfileError("mc3 needs the simplified shape (1 + phi xi^1 + psi xi^1 xi^2) g");
  const HigherAlgebra& m = gm.model();
  const UnipotentMatrix gi = G.g.inverse();
  const AlgForm& phi = G.phi[0];
  const AlgForm& psi = *G.psi;
  const AlgForm bpsi = apply_beta(m, psi);
  AlgForm u = gm.maurer_cartan(G.g) - gm.act(gi, apply_alpha(m, phi)) * ctx.k1;
  AlgForm v = gm.act(gi, ext_d(phi) - half_square(phi) * ctx.k1 - bpsi * ctx.k2);
  AlgForm vp = gm.act(gi, bpsi) * ctx.k1;
  AlgForm w = gm.act(gi, ext_d(psi) - act_prime(m, phi, psi) * ctx.k1);
  return AlgGForm(2, 1, {u, v, vp, w});
}

AlgGForm mc_residual(const GroupModel& gm, const GroupElement& G, const DerivativeContext& ctx) {
  const HigherAlgebra& m = gm.model();
  AlgGForm l = G.n_type == 1 ? mc2(gm, G, ctx) : mc3(gm, G, ctx);
  return gderiv(m, l, ctx) + gbracket(m, l, l) * Rational(1, 2);
}

AlgGForm adjoint(const GroupModel& gm, const GroupElement& G, const AlgGForm& w) {
  const HigherAlgebra& m = gm.model();
  if (w.n_type() != G.n_type) throw ProfileError("adjoint action of mismatched types N");
  const Profile p = profile_of(w, &m);
  if (p != Profile::TwoAlgebra && p != Profile::ThreeAlgebra) throw ProfileError("adjoint action needs the model profile");
  const AlgForm adu = gm.act(G.g, w.slot(0));
  const AlgForm& phi = G.phi[0];
  std::vector<AlgForm> out{adu, gm.act(G.g, w.slot(1)) - act(m, adu, phi)};
  if (G.n_type == 1) return AlgGForm(1, w.degree(), std::move(out));
  if (!G.simplified()) throw ProfileError("N=2 adjoint action needs the simplified shape");
  const AlgForm gvp = gm.act(G.g, w.slot(2));
  out.push_back(gvp);
  out.push_back(gm.act(G.g, w.slot(3)) - act(m, adu, *G.psi) - peiffer(m, gvp, phi) + peiffer(m, phi, gvp));
  return AlgGForm(2, w.degree(), std::move(out));
}

AlgGForm random_gform(const HigherAlgebra& m, Rng& rng, int n_type, int dim, int p, const RandomLimits& lim) {
  AlgGForm z = zero_gform(m, n_type, dim, p);
  std::vector<AlgForm> s;
  for (int k = 0; k < z.num_slots(); ++k) {
    s.push_back(rng.alg_form(z.slot(k).algebra(), dim, p + std::popcount(static_cast<unsigned>(k)), lim));
  }
  return AlgGForm(n_type, p, s);
}

}  // namespace hgf
