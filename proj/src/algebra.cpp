#include "hgf/algebra.hpp"

#include <sstream>

#include "hgf/errors.hpp"

namespace hgf {

AlgebraPtr make_lie_algebra(std::string name, int dim, Bilinear f, std::vector<std::string> labels) {
  if (dim < 1) throw AlgebraError("Lie algebra dimension must be positive");
  if (f.dim_a != dim || f.dim_b != dim || f.dim_c != dim) throw AlgebraError("structure constant shape != dim");
  if (labels.empty()) {
    for (int i = 0; i < dim; ++i) labels.push_back("X" + std::to_string(i + 1));
  }
  if (static_cast<int>(labels.size()) != dim) throw AlgebraError("label count != dim");
  f.normalize();
  auto alg = std::make_shared<LieAlgebra>();
  alg->name = std::move(name);
  alg->dim = dim;
  alg->labels = std::move(labels);
  alg->f = std::move(f);
  return alg;
}

AlgebraPtr make_abelian(std::string name, int dim, std::vector<std::string> labels) {
  return make_lie_algebra(std::move(name), dim, Bilinear(dim, dim, dim), std::move(labels));
}

// ---------------------------------------------------------------- AlgForm

AlgForm::AlgForm(AlgebraPtr alg, int dim, int degree) : alg_(std::move(alg)), dim_(dim), degree_(degree) {
  if (!alg_) throw AlgebraError("algebra-valued form without an algebra");
  comps_.assign(alg_->dim, OrdinaryForm(dim, degree));
}

AlgForm::AlgForm(AlgebraPtr alg, std::vector<OrdinaryForm> comps) : alg_(std::move(alg)) {
  if (!alg_) throw AlgebraError("algebra-valued form without an algebra");
  if (static_cast<int>(comps.size()) != alg_->dim) throw AlgebraError("component count != algebra dimension");
  dim_ = comps[0].dim();
  degree_ = comps[0].degree();
  for (const auto& c : comps) {
    if (c.dim() != dim_ || c.degree() != degree_) throw DimensionError("algebra-valued form components disagree");
  }
  comps_ = std::move(comps);
}

AlgForm AlgForm::basis(AlgebraPtr alg, const OrdinaryForm& f, int a) {
  AlgForm r(std::move(alg), f.dim(), f.degree());
  r.add(a, f);
  return r;
}

bool AlgForm::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

std::size_t AlgForm::term_count() const {
  std::size_t n = 0;
  for (const auto& c : comps_) n += c.term_count();
  return n;
}

void AlgForm::add(int a, const OrdinaryForm& f) { comps_.at(a) += f; }

void AlgForm::add_wedge(int a, const OrdinaryForm& x, const OrdinaryForm& y, const Rational& c) {
  comps_.at(a).add_wedge(x, y, c);
}

void AlgForm::check_compatible(const AlgForm& o) const {
  if (alg_ != o.alg_) throw AlgebraError("algebra-valued forms live in different algebras");
  if (dim_ != o.dim_ || degree_ != o.degree_) throw DimensionError("algebra-valued form degree/dim mismatch");
}

AlgForm& AlgForm::operator+=(const AlgForm& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

AlgForm& AlgForm::operator-=(const AlgForm& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

AlgForm& AlgForm::operator*=(const Rational& c) {
  for (auto& f : comps_) f *= c;
  return *this;
}

AlgForm AlgForm::operator-() const {
  AlgForm r = *this;
  for (auto& f : r.comps_) f = -f;
  return r;
}

bool operator==(const AlgForm& a, const AlgForm& b) {
  return a.alg_ == b.alg_ && a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
}

std::string AlgForm::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int a = 0; a < size(); ++a) {
    if (comps_[a].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "[" << comps_[a].str() << "] " << alg_->labels[a];
  }
  return os.str();
}

AlgForm ext_d(const AlgForm& a) {
  std::vector<OrdinaryForm> out;
  out.reserve(a.size());
  for (const auto& c : a.components()) out.push_back(ext_d(c));
  return AlgForm(a.algebra(), std::move(out));
}

AlgForm hodge(const AlgForm& a) {
  std::vector<OrdinaryForm> out;
  out.reserve(a.size());
  for (const auto& c : a.components()) out.push_back(hodge(c));
  return AlgForm(a.algebra(), std::move(out));
}

AlgForm wedge(const OrdinaryForm& f, const AlgForm& a) {
  std::vector<OrdinaryForm> out;
  out.reserve(a.size());
  for (const auto& c : a.components()) out.push_back(wedge(f, c));
  return AlgForm(a.algebra(), std::move(out));
}

AlgForm wedge(const AlgForm& a, const OrdinaryForm& f) {
  std::vector<OrdinaryForm> out;
  out.reserve(a.size());
  for (const auto& c : a.components()) out.push_back(wedge(c, f));
  return AlgForm(a.algebra(), std::move(out));
}

AlgForm contract(const Bilinear& t, const AlgForm& x, const AlgForm& y, const AlgebraPtr& out) {
  if (t.dim_a != x.size() || t.dim_b != y.size() || t.dim_c != out->dim) {
    throw AlgebraError("tensor shape does not match operand algebras");
  }
  if (x.dim() != y.dim()) throw DimensionError("chart dimension mismatch");
  AlgForm r(out, x.dim(), x.degree() + y.degree());
  for (const auto& e : t.entries) {
    if (x[e.a].is_zero() || y[e.b].is_zero()) continue;
    r.add_wedge(e.c, x[e.a], y[e.b], e.v);
  }
  return r;
}

AlgForm apply_linear(const Matrix& m, const AlgForm& x, const AlgebraPtr& out) {
  if (m.cols() != x.size() || m.rows() != out->dim) throw AlgebraError("linear map shape mismatch");
  AlgForm r(out, x.dim(), x.degree());
  for (int i = 0; i < m.rows(); ++i) {
    OrdinaryForm acc(x.dim(), x.degree());
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !x[j].is_zero()) acc += x[j] * m(i, j);
    }
    r.add(i, acc);
  }
  return r;
}

OrdinaryForm pair_matrix(const Matrix& p, const AlgForm& x, const AlgForm& y) {
  if (p.rows() != x.size() || p.cols() != y.size()) throw AlgebraError("pairing shape mismatch");
  if (x.dim() != y.dim()) throw DimensionError("chart dimension mismatch");
  OrdinaryForm r(x.dim(), x.degree() + y.degree());
  for (int a = 0; a < p.rows(); ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < p.cols(); ++b) {
      if (p(a, b).is_zero() || y[b].is_zero()) continue;
      r.add_wedge(x[a], y[b], p(a, b));
    }
  }
  return r;
}

AlgForm bracket(const AlgForm& a, const AlgForm& b) {
  if (a.algebra() != b.algebra()) throw AlgebraError("bracket of forms in different algebras");
  return contract(a.algebra()->f, a, b, a.algebra());
}

// ---------------------------------------------------------------- model maps

std::string_view to_string(ModelLevel l) {
  switch (l) {
    case ModelLevel::Lie: return "lie";
    case ModelLevel::Crossed: return "crossed";
    case ModelLevel::TwoCrossed: return "two_crossed";
  }
  return "?";
}

std::string_view to_string(PairingKind k) {
  switch (k) {
    case PairingKind::GH: return "gh";
    case PairingKind::GL: return "gl";
    case PairingKind::HAnti: return "h_anti";
    case PairingKind::SymG: return "sym_g";
    case PairingKind::SymH: return "sym_h";
    case PairingKind::SymL: return "sym_l";
  }
  return "?";
}

const std::optional<Matrix>& PairingData::get(PairingKind k) const {
  switch (k) {
    case PairingKind::GH: return gh;
    case PairingKind::GL: return gl;
    case PairingKind::HAnti: return h_anti;
    case PairingKind::SymG: return sym_g;
    case PairingKind::SymH: return sym_h;
    case PairingKind::SymL: return sym_l;
  }
  return gh;
}

namespace {

void require(const AlgForm& f, const AlgebraPtr& alg, const char* what) {
  if (!alg) throw AlgebraError(std::string("model has no ") + what);
  if (f.algebra() != alg) throw AlgebraError(std::string("form is not valued in ") + what);
}

void require_two_crossed(const HigherAlgebra& m) {
  if (m.level != ModelLevel::TwoCrossed) throw AlgebraError("operation needs 2-crossed module data");
}

}  // namespace

AlgForm apply_alpha(const HigherAlgebra& m, const AlgForm& b) {
  require(b, m.h, "h");
  return apply_linear(m.alpha, b, m.g);
}

AlgForm apply_beta(const HigherAlgebra& m, const AlgForm& c) {
  require_two_crossed(m);
  require(c, m.l, "l");
  return apply_linear(m.beta, c, m.h);
}

AlgForm act(const HigherAlgebra& m, const AlgForm& a, const AlgForm& e) {
  require(a, m.g, "g");
  if (m.h && e.algebra() == m.h) return contract(m.act_h, a, e, m.h);
  if (m.l && e.algebra() == m.l) return contract(m.act_l, a, e, m.l);
  throw AlgebraError("action target is neither h nor l");
}

AlgForm act_prime(const HigherAlgebra& m, const AlgForm& y, const AlgForm& z) {
  require_two_crossed(m);
  require(y, m.h, "h");
  require(z, m.l, "l");
  return -peiffer(m, apply_beta(m, z), y);
}

AlgForm peiffer(const HigherAlgebra& m, const AlgForm& y1, const AlgForm& y2) {
  require_two_crossed(m);
  require(y1, m.h, "h");
  require(y2, m.h, "h");
  return contract(m.peiffer, y1, y2, m.l);
}

OrdinaryForm pair_forms(const HigherAlgebra& m, const AlgForm& a, const AlgForm& b, PairingKind which) {
  const auto& p = m.pairings.get(which);
  if (!p) throw AlgebraError("model has no " + std::string(to_string(which)) + " pairing");
  auto same = [&](const AlgebraPtr& x, const AlgebraPtr& y) { return x && a.algebra() == x && b.algebra() == y; };
  switch (which) {
    case PairingKind::GH:
    case PairingKind::GL: {
      const AlgebraPtr& other = which == PairingKind::GH ? m.h : m.l;
      if (same(m.g, other)) return pair_matrix(*p, a, b);
      if (same(other, m.g)) return pair_matrix(p->transpose(), a, b);
      break;
    }
    case PairingKind::HAnti:
    case PairingKind::SymH:
      if (same(m.h, m.h)) return pair_matrix(*p, a, b);
      break;
    case PairingKind::SymG:
      if (same(m.g, m.g)) return pair_matrix(*p, a, b);
      break;
    case PairingKind::SymL:
      if (same(m.l, m.l)) return pair_matrix(*p, a, b);
      break;
  }
  throw AlgebraError("operands do not match the " + std::string(to_string(which)) + " pairing");
}

// ---------------------------------------------------------------- reports

void ValidationReport::add(const std::string& axiom, const std::string& detail) {
  int& n = counts_[axiom];
  if (n == 0) order_.push_back(axiom);
  if (n < kDetailsPerAxiom) violations_.push_back({axiom, detail});
  ++n;
}

void ValidationReport::merge(const ValidationReport& o) {
  for (const auto& ax : o.order_) {
    int& n = counts_[ax];
    if (n == 0) order_.push_back(ax);
    n += o.counts_.find(ax)->second;
  }
  violations_.insert(violations_.end(), o.violations_.begin(), o.violations_.end());
}

bool ValidationReport::has(std::string_view axiom) const { return counts_.find(axiom) != counts_.end(); }

int ValidationReport::count(std::string_view axiom) const {
  auto it = counts_.find(axiom);
  return it == counts_.end() ? 0 : it->second;
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    os << (i ? ", " : "") << order_[i] << " (" << counts_.find(order_[i])->second << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------- validators

namespace {

std::string label(const AlgebraPtr& a, int i) { return a->labels[i]; }

void check_residual(ValidationReport& r, const std::string& axiom, const Vec& residual, const std::string& where) {
  if (!is_zero(residual)) r.add(axiom, where + ": residual " + vec_str(residual));
}

void check_scalar(ValidationReport& r, const std::string& axiom, const Rational& residual, const std::string& where) {
  if (!residual.is_zero()) r.add(axiom, where + ": residual " + residual.str());
}

bool shape_ok(ValidationReport& r, const Matrix& m, int rows, int cols, const std::string& what) {
  if (m.rows() == rows && m.cols() == cols) return true;
  r.add("shape", what + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  return false;
}

bool shape_ok(ValidationReport& r, const Bilinear& t, int a, int b, int c, const std::string& what) {
  if (t.dim_a == a && t.dim_b == b && t.dim_c == c) return true;
  r.add("shape", what + " tensor has the wrong shape");
  return false;
}

// Linear action X |> V through a tensor (g x V -> V).
struct Rep {
  const Bilinear* t;
  Vec operator()(const Vec& x, const Vec& v) const { return t->apply(x, v); }
};

// g-module checks for a representation tensor on an algebra target.
void check_module(ValidationReport& r, const LieAlgebra& g, const AlgebraPtr& target, const Bilinear& t,
                  const std::string& tag) {
  const int m = g.dim;
  const int d = target->dim;
  for (int a = 0; a < m; ++a) {
    Vec xa = unit_vector(m, a);
    for (int b = 0; b < m; ++b) {
      Vec xb = unit_vector(m, b);
      Vec xab = g.bracket(xa, xb);
      for (int c = 0; c < d; ++c) {
        Vec y = unit_vector(d, c);
        Vec res = t.apply(xab, y) - (t.apply(xa, t.apply(xb, y)) - t.apply(xb, t.apply(xa, y)));
        check_residual(r, "action-representation", res,
                       tag + " at (" + g.labels[a] + "," + g.labels[b] + "," + label(target, c) + ")");
      }
    }
    for (int b = 0; b < d; ++b) {
      Vec y1 = unit_vector(d, b);
      for (int c = b; c < d; ++c) {
        Vec y2 = unit_vector(d, c);
        Vec res = t.apply(xa, target->bracket(y1, y2)) -
                  (target->bracket(t.apply(xa, y1), y2) + target->bracket(y1, t.apply(xa, y2)));
        check_residual(r, "action-derivation", res,
                       tag + " at (" + g.labels[a] + "," + label(target, b) + "," + label(target, c) + ")");
      }
    }
  }
}

void check_alpha(ValidationReport& r, const HigherAlgebra& d) {
  const LieAlgebra& g = *d.g;
  const LieAlgebra& h = *d.h;
  for (int a = 0; a < h.dim; ++a) {
    Vec ya = unit_vector(h.dim, a);
    for (int b = a + 1; b < h.dim; ++b) {
      Vec yb = unit_vector(h.dim, b);
      Vec res = d.alpha * h.bracket(ya, yb) - g.bracket(d.alpha * ya, d.alpha * yb);
      check_residual(r, "alpha-homomorphism", res, "at (" + h.labels[a] + "," + h.labels[b] + ")");
    }
  }
  for (int a = 0; a < g.dim; ++a) {
    Vec x = unit_vector(g.dim, a);
    for (int b = 0; b < h.dim; ++b) {
      Vec y = unit_vector(h.dim, b);
      Vec res = d.alpha * d.act_h.apply(x, y) - g.bracket(x, d.alpha * y);
      check_residual(r, "alpha-equivariance", res, "at (" + g.labels[a] + "," + h.labels[b] + ")");
    }
  }
}

}  // namespace

ValidationReport validate_lie_algebra(const LieAlgebra& d) {
  ValidationReport r;
  const int m = d.dim;
  if (d.f.dim_a != m || d.f.dim_b != m || d.f.dim_c != m) {
    r.add("shape", d.name + ": structure constants do not match dim");
    return r;
  }
  for (int a = 0; a < m; ++a) {
    Vec xa = unit_vector(m, a);
    for (int b = a; b < m; ++b) {
      Vec xb = unit_vector(m, b);
      check_residual(r, "antisymmetry", d.bracket(xa, xb) + d.bracket(xb, xa),
                     d.name + " at (" + d.labels[a] + "," + d.labels[b] + ")");
    }
  }
  for (int a = 0; a < m; ++a) {
    Vec xa = unit_vector(m, a);
    for (int b = a + 1; b < m; ++b) {
      Vec xb = unit_vector(m, b);
      for (int c = b + 1; c < m; ++c) {
        Vec xc = unit_vector(m, c);
        Vec res = d.bracket(xa, d.bracket(xb, xc)) + d.bracket(xb, d.bracket(xc, xa)) +
                  d.bracket(xc, d.bracket(xa, xb));
        check_residual(r, "jacobi", res, d.name + " at (" + d.labels[a] + "," + d.labels[b] + "," + d.labels[c] + ")");
      }
    }
  }
  return r;
}

ValidationReport validate_crossed_module(const HigherAlgebra& d) {
  ValidationReport r;
  if (!d.g || !d.h) {
    r.add("shape", "crossed module needs algebras g and h");
    return r;
  }
  r.merge(validate_lie_algebra(*d.g));
  r.merge(validate_lie_algebra(*d.h));
  const LieAlgebra& g = *d.g;
  const LieAlgebra& h = *d.h;
  bool shapes = shape_ok(r, d.alpha, g.dim, h.dim, "alpha") & shape_ok(r, d.act_h, g.dim, h.dim, h.dim, "act_h");
  if (!shapes || r.has("antisymmetry")) return r;
  check_alpha(r, d);
  for (int a = 0; a < h.dim; ++a) {
    Vec y1 = unit_vector(h.dim, a);
    for (int b = 0; b < h.dim; ++b) {
      Vec y2 = unit_vector(h.dim, b);
      Vec res = d.act_h.apply(d.alpha * y1, y2) - h.bracket(y1, y2);
      check_residual(r, "peiffer", res, "at (" + h.labels[a] + "," + h.labels[b] + ")");
    }
  }
  check_module(r, g, d.h, d.act_h, "g on h");
  return r;
}

ValidationReport validate_two_crossed_module(const HigherAlgebra& d) {
  ValidationReport r;
  if (!d.g || !d.h || !d.l) {
    r.add("shape", "2-crossed module needs algebras g, h and l");
    return r;
  }
  r.merge(validate_lie_algebra(*d.g));
  r.merge(validate_lie_algebra(*d.h));
  r.merge(validate_lie_algebra(*d.l));
  const LieAlgebra& g = *d.g;
  const LieAlgebra& h = *d.h;
  const LieAlgebra& l = *d.l;
  bool shapes = shape_ok(r, d.alpha, g.dim, h.dim, "alpha");
  shapes &= shape_ok(r, d.beta, h.dim, l.dim, "beta");
  shapes &= shape_ok(r, d.act_h, g.dim, h.dim, h.dim, "act_h");
  shapes &= shape_ok(r, d.act_l, g.dim, l.dim, l.dim, "act_l");
  shapes &= shape_ok(r, d.peiffer, h.dim, h.dim, l.dim, "peiffer");
  if (!shapes || r.has("antisymmetry")) return r;

  auto al = [&](const Vec& y) { return d.alpha * y; };
  auto be = [&](const Vec& z) { return d.beta * z; };
  auto acth = [&](const Vec& x, const Vec& y) { return d.act_h.apply(x, y); };
  auto actl = [&](const Vec& x, const Vec& z) { return d.act_l.apply(x, z); };
  auto pf = [&](const Vec& y1, const Vec& y2) { return d.peiffer.apply(y1, y2); };
  auto actp = [&](const Vec& y, const Vec& z) { return Rational(-1) * pf(be(z), y); };
  auto hl = [&](int i) { return h.labels[i]; };

  // Axiom 1: complex of g-modules.
  check_residual(r, "complex", [&] {
    Vec all;
    Matrix ab = d.alpha * d.beta;
    for (int i = 0; i < ab.rows(); ++i)
      for (int j = 0; j < ab.cols(); ++j) all.push_back(ab(i, j));
    return all;
  }(), "alpha*beta");
  check_module(r, g, d.h, d.act_h, "g on h");
  check_module(r, g, d.l, d.act_l, "g on l");
  check_alpha(r, d);
  for (int a = 0; a < g.dim; ++a) {
    Vec x = unit_vector(g.dim, a);
    for (int c = 0; c < l.dim; ++c) {
      Vec z = unit_vector(l.dim, c);
      check_residual(r, "beta-equivariance", be(actl(x, z)) - acth(x, be(z)),
                     "at (" + g.labels[a] + "," + l.labels[c] + ")");
    }
    for (int b1 = 0; b1 < h.dim; ++b1) {
      Vec y1 = unit_vector(h.dim, b1);
      for (int b2 = 0; b2 < h.dim; ++b2) {
        Vec y2 = unit_vector(h.dim, b2);
        Vec res = actl(x, pf(y1, y2)) - pf(acth(x, y1), y2) - pf(y1, acth(x, y2));
        check_residual(r, "peiffer-equivariance", res, "at (" + g.labels[a] + "," + hl(b1) + "," + hl(b2) + ")");
      }
    }
  }
  for (int c1 = 0; c1 < l.dim; ++c1) {
    Vec z1 = unit_vector(l.dim, c1);
    for (int c2 = c1 + 1; c2 < l.dim; ++c2) {
      Vec z2 = unit_vector(l.dim, c2);
      check_residual(r, "beta-homomorphism", be(l.bracket(z1, z2)) - h.bracket(be(z1), be(z2)),
                     "at (" + l.labels[c1] + "," + l.labels[c2] + ")");
      // Axiom 3.
      check_residual(r, "axiom-3", l.bracket(z1, z2) - pf(be(z1), be(z2)),
                     "at (" + l.labels[c1] + "," + l.labels[c2] + ")");
    }
  }
  for (int b1 = 0; b1 < h.dim; ++b1) {
    Vec y1 = unit_vector(h.dim, b1);
    for (int b2 = 0; b2 < h.dim; ++b2) {
      Vec y2 = unit_vector(h.dim, b2);
      // Axiom 2.
      check_residual(r, "axiom-2", be(pf(y1, y2)) - (h.bracket(y1, y2) - acth(al(y1), y2)),
                     "at (" + hl(b1) + "," + hl(b2) + ")");
      for (int b3 = 0; b3 < h.dim; ++b3) {
        Vec y3 = unit_vector(h.dim, b3);
        std::string at = "at (" + hl(b1) + "," + hl(b2) + "," + hl(b3) + ")";
        Vec res4 = pf(h.bracket(y1, y2), y3) - (actl(al(y1), pf(y2, y3)) + pf(y1, h.bracket(y2, y3)) -
                                                actl(al(y2), pf(y1, y3)) - pf(y2, h.bracket(y1, y3)));
        check_residual(r, "axiom-4", res4, at);
        Vec res5 = pf(y1, h.bracket(y2, y3)) - (pf(be(pf(y1, y2)), y3) - pf(be(pf(y1, y3)), y2));
        check_residual(r, "axiom-5", res5, at);
      }
    }
    for (int c = 0; c < l.dim; ++c) {
      Vec z = unit_vector(l.dim, c);
      std::string at = "at (" + hl(b1) + "," + l.labels[c] + ")";
      check_residual(r, "axiom-6", pf(be(z), y1) + pf(y1, be(z)) + actl(al(y1), z), at);
      if (d.fine) check_residual(r, "fine", actl(al(y1), z) - actp(y1, z), at);
    }
  }
  // (l, h; beta, |>') is a crossed module.
  for (int b = 0; b < h.dim; ++b) {
    Vec y = unit_vector(h.dim, b);
    for (int c1 = 0; c1 < l.dim; ++c1) {
      Vec z1 = unit_vector(l.dim, c1);
      std::string at = "at (" + hl(b) + "," + l.labels[c1] + ")";
      check_residual(r, "induced-crossed-module", be(actp(y, z1)) - h.bracket(y, be(z1)), "equivariance " + at);
      for (int c2 = 0; c2 < l.dim; ++c2) {
        Vec z2 = unit_vector(l.dim, c2);
        Vec res = actp(y, l.bracket(z1, z2)) - l.bracket(actp(y, z1), z2) - l.bracket(z1, actp(y, z2));
        check_residual(r, "induced-crossed-module", res, "derivation at (" + hl(b) + "," + l.labels[c1] + "," +
                                                             l.labels[c2] + ")");
      }
    }
    for (int b2 = 0; b2 < h.dim; ++b2) {
      Vec y2 = unit_vector(h.dim, b2);
      for (int c = 0; c < l.dim; ++c) {
        Vec z = unit_vector(l.dim, c);
        Vec res = actp(h.bracket(y, y2), z) - (actp(y, actp(y2, z)) - actp(y2, actp(y, z)));
        check_residual(r, "induced-crossed-module",
                       res, "representation at (" + hl(b) + "," + hl(b2) + "," + l.labels[c] + ")");
      }
    }
  }
  for (int c1 = 0; c1 < l.dim; ++c1) {
    Vec z1 = unit_vector(l.dim, c1);
    for (int c2 = 0; c2 < l.dim; ++c2) {
      Vec z2 = unit_vector(l.dim, c2);
      check_residual(r, "induced-crossed-module", actp(be(z1), z2) - l.bracket(z1, z2),
                     "peiffer at (" + l.labels[c1] + "," + l.labels[c2] + ")");
    }
  }
  if (d.abelian_h) {
    if (!h.f.entries.empty()) r.add("abelian-h", "h has nonzero structure constants");
    if (!d.alpha.is_zero()) r.add("abelian-h", "alpha is not zero");
    for (int b1 = 0; b1 < h.dim; ++b1) {
      Vec y1 = unit_vector(h.dim, b1);
      for (int b2 = 0; b2 < h.dim; ++b2) {
        check_residual(r, "abelian-h", be(pf(y1, unit_vector(h.dim, b2))),
                       "beta{Y,Y'} at (" + hl(b1) + "," + hl(b2) + ")");
      }
      for (int c = 0; c < l.dim; ++c) {
        Vec z = unit_vector(l.dim, c);
        check_residual(r, "abelian-h", pf(be(z), y1) + pf(y1, be(z)),
                       "{beta Z,Y} antisymmetry at (" + hl(b1) + "," + l.labels[c] + ")");
      }
    }
  }
  return r;
}

namespace {

Rational bil(const Matrix& p, const Vec& x, const Vec& y) {
  Rational s;
  for (int i = 0; i < p.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < p.cols(); ++j)
      if (!y[j].is_zero() && !p(i, j).is_zero()) s += x[i] * p(i, j) * y[j];
  }
  return s;
}

void check_sym(ValidationReport& r, const std::optional<Matrix>& p, const AlgebraPtr& alg, const std::string& tag) {
  if (!p) return;
  if (!alg) {
    r.add("shape", tag + " given but the algebra is absent");
    return;
  }
  if (!shape_ok(r, *p, alg->dim, alg->dim, tag)) return;
  if (*p != p->transpose()) r.add(tag + "-symmetric", tag + " is not symmetric");
  if (p->rank() != alg->dim) r.add(tag + "-nondegenerate", tag + " has rank " + std::to_string(p->rank()));
}

}  // namespace

ValidationReport validate_pairings(const HigherAlgebra& d) {
  ValidationReport r;
  if (!d.g) {
    r.add("shape", "pairings need algebra g");
    return r;
  }
  const PairingData& p = d.pairings;
  check_sym(r, p.sym_g, d.g, "sym-g");
  check_sym(r, p.sym_h, d.h, "sym-h");
  check_sym(r, p.sym_l, d.l, "sym-l");
  const LieAlgebra& g = *d.g;

  if (p.gh && d.level == ModelLevel::Crossed && shape_ok(r, *p.gh, g.dim, d.h->dim, "pairing gh")) {
    const LieAlgebra& h = *d.h;
    const Matrix& P = *p.gh;
    if (g.dim != h.dim || P.rank() != g.dim) r.add("nondegenerate-gh", "rank " + std::to_string(P.rank()));
    for (int a = 0; a < h.dim; ++a) {
      Vec y1 = unit_vector(h.dim, a);
      for (int b = a + 1; b < h.dim; ++b) {
        Vec y2 = unit_vector(h.dim, b);
        check_scalar(r, "symp", bil(P, d.alpha * y1, y2) - bil(P, d.alpha * y2, y1),
                     "at (" + h.labels[a] + "," + h.labels[b] + ")");
      }
    }
    for (int a = 0; a < g.dim; ++a) {
      Vec x1 = unit_vector(g.dim, a);
      for (int b = 0; b < g.dim; ++b) {
        Vec x2 = unit_vector(g.dim, b);
        for (int c = 0; c < h.dim; ++c) {
          Vec y = unit_vector(h.dim, c);
          check_scalar(r, "XXY", bil(P, g.bracket(x1, x2), y) + bil(P, x2, d.act_h.apply(x1, y)),
                       "at (" + g.labels[a] + "," + g.labels[b] + "," + h.labels[c] + ")");
        }
      }
    }
  }

  if (d.level == ModelLevel::TwoCrossed) {
    const LieAlgebra& h = *d.h;
    const LieAlgebra& l = *d.l;
    bool anti_ok = p.h_anti && shape_ok(r, *p.h_anti, h.dim, h.dim, "pairing h_anti");
    if (anti_ok) {
      const Matrix& H = *p.h_anti;
      if (H != H.transpose() * Rational(-1)) r.add("h-antisymmetry", "h_anti is not antisymmetric");
      if (H.rank() != h.dim) r.add("nondegenerate-h", "rank " + std::to_string(H.rank()));
      for (int a = 0; a < h.dim; ++a) {
        Vec y = unit_vector(h.dim, a);
        for (int b = 0; b < h.dim; ++b) {
          Vec y1 = unit_vector(h.dim, b);
          for (int c = 0; c < h.dim; ++c) {
            Vec y2 = unit_vector(h.dim, c);
            check_scalar(r, "h-bracket-invariance", bil(H, h.bracket(y, y1), y2) + bil(H, y1, h.bracket(y, y2)),
                         "at (" + h.labels[a] + "," + h.labels[b] + "," + h.labels[c] + ")");
          }
        }
        for (int x = 0; x < g.dim; ++x) {
          Vec X = unit_vector(g.dim, x);
          for (int b = 0; b < h.dim; ++b) {
            Vec y1 = unit_vector(h.dim, b);
            check_scalar(r, "YX", bil(H, y, d.act_h.apply(X, y1)) - bil(H, y1, d.act_h.apply(X, y)),
                         "at (" + h.labels[a] + "," + g.labels[x] + "," + h.labels[b] + ")");
          }
        }
      }
    }
    if (p.gl && shape_ok(r, *p.gl, g.dim, l.dim, "pairing gl")) {
      const Matrix& P = *p.gl;
      if (l.dim != g.dim) {
        r.add("balanced", "dim l = " + std::to_string(l.dim) + " but dim g = " + std::to_string(g.dim));
      }
      if (P.rank() != std::max(g.dim, l.dim)) r.add("nondegenerate-gl", "rank " + std::to_string(P.rank()));
      for (int a = 0; a < g.dim; ++a) {
        Vec x1 = unit_vector(g.dim, a);
        for (int b = 0; b < g.dim; ++b) {
          Vec x2 = unit_vector(g.dim, b);
          for (int c = 0; c < l.dim; ++c) {
            Vec z = unit_vector(l.dim, c);
            check_scalar(r, "XZ", bil(P, g.bracket(x1, x2), z) + bil(P, x2, d.act_l.apply(x1, z)),
                         "at (" + g.labels[a] + "," + g.labels[b] + "," + l.labels[c] + ")");
          }
        }
      }
      if (anti_ok) {
        const Matrix& H = *p.h_anti;
        for (int b = 0; b < h.dim; ++b) {
          Vec y = unit_vector(h.dim, b);
          for (int c = 0; c < l.dim; ++c) {
            Vec z = unit_vector(l.dim, c);
            check_scalar(r, "YZ", bil(P, d.alpha * y, z) + bil(H, d.beta * z, y),
                         "at (" + h.labels[b] + "," + l.labels[c] + ")");
          }
        }
        for (int a = 0; a < g.dim; ++a) {
          Vec x = unit_vector(g.dim, a);
          for (int b1 = 0; b1 < h.dim; ++b1) {
            Vec y1 = unit_vector(h.dim, b1);
            for (int b2 = 0; b2 < h.dim; ++b2) {
              Vec y2 = unit_vector(h.dim, b2);
              check_scalar(r, "XYY",
                           bil(P, x, d.peiffer.apply(y1, y2)) - Rational(1, 2) * bil(H, y2, d.act_h.apply(x, y1)),
                           "at (" + g.labels[a] + "," + h.labels[b1] + "," + h.labels[b2] + ")");
            }
          }
        }
      } else {
        r.add("YZ", "pairing gl given without an antisymmetric h pairing");
      }
    }
  }
  return r;
}

ValidationReport validate_model(const HigherAlgebra& d) {
  ValidationReport r;
  switch (d.level) {
    case ModelLevel::Lie:
      if (!d.g) {
        r.add("shape", "model has no algebra g");
        return r;
      }
      r.merge(validate_lie_algebra(*d.g));
      break;
    case ModelLevel::Crossed:
      r.merge(validate_crossed_module(d));
      break;
    case ModelLevel::TwoCrossed:
      r.merge(validate_two_crossed_module(d));
      break;
  }
  if (r.has("shape")) return r;
  r.merge(validate_pairings(d));
  return r;
}

}  // namespace hgf
