#include "hgf/gauge.hpp"

namespace hgf {

namespace {

void check_slot(const AlgForm& x, const AlgebraPtr& alg, int degree, const char* what) {
  if (!alg) throw ProfileError(std::string(what) + ": model lacks the required algebra");
  if (x.algebra() != alg) throw AlgebraError(std::string(what) + " has the wrong value algebra");
  if (x.degree() != degree) throw DimensionError(std::string(what) + " has the wrong form degree");
}

OrdinaryForm gh(const HigherAlgebra& m, const AlgForm& a, const AlgForm& b) {
  return pair_forms(m, a, b, PairingKind::GH);
}
OrdinaryForm gl(const HigherAlgebra& m, const AlgForm& a, const AlgForm& b) {
  return pair_forms(m, a, b, PairingKind::GL);
}
OrdinaryForm hanti(const HigherAlgebra& m, const AlgForm& a, const AlgForm& b) {
  return pair_forms(m, a, b, PairingKind::HAnti);
}

AlgForm half_square(const AlgForm& x) { return bracket(x, x) * Rational(1, 2); }

Rational integrate_top(const OrdinaryForm& f, int dim, const char* what) {
  if (f.dim() != dim) throw DimensionError(std::string(what) + " needs a " + std::to_string(dim) + "-dimensional chart");
  return integrate_cube(f);
}

}  // namespace

TwoConnection make_connection2(const HigherAlgebra& m, AlgForm A, AlgForm B) {
  check_slot(A, m.g, 1, "A");
  check_slot(B, m.h, 2, "B");
  if (A.dim() != B.dim()) throw DimensionError("connection slots on different charts");
  return {std::move(A), std::move(B)};
}

ThreeConnection make_connection3(const HigherAlgebra& m, AlgForm A, AlgForm B, AlgForm C) {
  check_slot(A, m.g, 1, "A");
  check_slot(B, m.h, 2, "B");
  check_slot(C, m.l, 3, "C");
  if (A.dim() != B.dim() || A.dim() != C.dim()) throw DimensionError("connection slots on different charts");
  return {std::move(A), std::move(B), std::move(C)};
}

TwoConnection random_connection2(const HigherAlgebra& m, Rng& rng, int dim, const RandomLimits& lim) {
  if (!m.h) throw ProfileError("2-connections need a crossed module");
  AlgForm A = rng.alg_form(m.g, dim, 1, lim);
  return make_connection2(m, A, rng.alg_form(m.h, dim, 2, lim));
}

ThreeConnection random_connection3(const HigherAlgebra& m, Rng& rng, int dim, const RandomLimits& lim) {
  if (!m.h || !m.l) throw ProfileError("3-connections need a 2-crossed module");
  AlgForm A = rng.alg_form(m.g, dim, 1, lim);
  AlgForm B = rng.alg_form(m.h, dim, 2, lim);
  return make_connection3(m, A, B, rng.alg_form(m.l, dim, 3, lim));
}

AlgForm field_strength(const AlgForm& A) { return ext_d(A) + half_square(A); }

CurvatureSet curvature2(const HigherAlgebra& m, const TwoConnection& c) {
  make_connection2(m, c.A, c.B);
  CurvatureSet cs;
  cs.F = field_strength(c.A);
  cs.omega1 = cs.F - apply_alpha(m, c.B);
  cs.omega2 = ext_d(c.B) + act(m, c.A, c.B);
  return cs;
}

CurvatureSet curvature3(const HigherAlgebra& m, const ThreeConnection& c) {
  make_connection3(m, c.A, c.B, c.C);
  CurvatureSet cs;
  cs.F = field_strength(c.A);
  cs.omega1 = cs.F - apply_alpha(m, c.B);
  cs.omega2 = ext_d(c.B) + act(m, c.A, c.B) - apply_beta(m, c.C);
  cs.omega3 = ext_d(c.C) + act(m, c.A, c.C) + peiffer(m, c.B, c.B);
  return cs;
}

AlgGForm as_generalized(const TwoConnection& c) { return AlgGForm(1, 1, {c.A, c.B}); }

AlgGForm as_generalized(const ThreeConnection& c) { return AlgGForm(2, 1, {c.A, c.B, c.B, c.C}); }

AlgGForm generalized_curvature(const HigherAlgebra& m, const AlgGForm& a, const DerivativeContext& ctx) {
  if (a.degree() != 1) throw DimensionError("generalized curvature needs a degree-1 connection");
  return gderiv(m, a, ctx) + gbracket(m, a, a) * Rational(1, 2);
}

MatGForm generalized_curvature(const MatGForm& a, const DerivativeContext& ctx) {
  if (a.degree() != 1) throw DimensionError("generalized curvature needs a degree-1 connection");
  return gderiv(a, ctx) + gwedge(a, a);
}

std::vector<AlgForm> bianchi_residual(const HigherAlgebra& m, const TwoConnection& c) {
  CurvatureSet cs = curvature2(m, c);
  return {ext_d(cs.omega1) + bracket(c.A, cs.omega1) + apply_alpha(m, cs.omega2),
          ext_d(cs.omega2) + act(m, c.A, cs.omega2) - act(m, cs.omega1, c.B)};
}

std::vector<AlgForm> bianchi_residual(const HigherAlgebra& m, const ThreeConnection& c) {
  CurvatureSet cs = curvature3(m, c);
  const AlgForm& o3 = *cs.omega3;
  return {ext_d(cs.omega1) + bracket(c.A, cs.omega1) + apply_alpha(m, cs.omega2),
          ext_d(cs.omega2) + act(m, c.A, cs.omega2) - act(m, cs.omega1, c.B) + apply_beta(m, o3),
          ext_d(o3) + act(m, c.A, o3) - act(m, cs.omega1, c.C) - peiffer(m, c.B, cs.omega2) -
              peiffer(m, cs.omega2, c.B)};
}

AlgGForm generalized_bianchi(const HigherAlgebra& m, const AlgGForm& a, const DerivativeContext& ctx) {
  AlgGForm F = generalized_curvature(m, a, ctx);
  return gderiv(m, F, ctx) + gbracket(m, a, F);
}

MatGForm covariant_derivative_plain(const MatGForm& a, const MatGForm& w, const DerivativeContext& ctx) {
  if (a.degree() != 1) throw DimensionError("covariant derivative needs a degree-1 connection");
  return gderiv(w, ctx) + gwedge(a, w) + gwedge(w, a) * Rational(parity_sign(w.degree() + 1));
}

AlgForm right_maurer_cartan(const GroupModel& gm, const UnipotentMatrix& g) {
  return gm.to_algebra(wedge(ext_d(g.matrix().as_form()), g.inverse().matrix().as_form()));
}

AlgGForm gauge_transform2_form(const GroupModel& gm, const AlgGForm& a, const GroupElement& G,
                               const DerivativeContext& ctx) {
  return adjoint(gm, inverse(gm, G), a) + mc2(gm, G, ctx);
}

TwoConnection gauge_transform2(const GroupModel& gm, const TwoConnection& c, const GroupElement& G,
                               const DerivativeContext& ctx) {
  const HigherAlgebra& m = gm.model();
  AlgGForm a = gauge_transform2_form(gm, as_generalized(make_connection2(m, c.A, c.B)), G, ctx);
  return {a.slot(0), a.slot(1)};
}

TwoConnection gauge_transform2_left(const GroupModel& gm, const TwoConnection& c, const GroupElement& G) {
  const HigherAlgebra& m = gm.model();
  if (G.n_type != 1) throw ProfileError("2-gauge transformations need a type N=1 element");
  const AlgForm& phi = G.phi[0];
  AlgForm A = gm.act(G.g, c.A) - right_maurer_cartan(gm, G.g) - apply_alpha(m, phi);
  AlgForm B = gm.act(G.g, c.B) - ext_d(phi) - half_square(phi) - act(m, A, phi);
  return make_connection2(m, A, B);
}

AlgGForm gauge_transform3_form(const GroupModel& gm, const AlgGForm& a, const GroupElement& G,
                               const DerivativeContext& ctx, const Rational& t) {
  if (ctx.n_type != 2) throw ProfileError("3-gauge transformations need a type N=2 context");
  return adjoint(gm, inverse(gm, G), a) + mc3(gm, G, DerivativeContext::type2(ctx.k1 + t, ctx.k2));
}

ThreeConnection gauge_transform3(const GroupModel& gm, const ThreeConnection& c, const GroupElement& G,
                                 const DerivativeContext& ctx, const Rational& t) {
  const HigherAlgebra& m = gm.model();
  AlgGForm a = gauge_transform3_form(gm, as_generalized(make_connection3(m, c.A, c.B, c.C)), G, ctx, t);
  return {a.slot(0), a.slot(1), a.slot(3)};
}

namespace {

void check_plain(const PlainGroupElement& g) {
  const int r = g.pi.r();
  const int dim = g.pi.dim();
  auto ok = [&](const MatForm& f, int degree) { return f.r() == r && f.dim() == dim && f.degree() == degree; };
  if (g.n_type != 1 && g.n_type != 2) throw ProfileError("plain group elements have type N=1 or N=2");
  if (!ok(g.mu, 1)) throw DimensionError("mu must be an r x r matrix of 1-forms on the chart of pi");
  if (g.n_type == 2 && (!g.nu || !ok(*g.nu, 2))) throw DimensionError("nu must be an r x r matrix of 2-forms");
}

}  // namespace

MatGForm as_generalized(const PlainGroupElement& g) {
  check_plain(g);
  const MatForm pi = g.pi.matrix().as_form();
  if (g.n_type == 1) return MatGForm(1, 0, {pi, wedge(g.mu, pi)});
  return MatGForm(2, 0, {pi, wedge(g.mu, pi), MatForm(g.pi.r(), g.pi.dim(), 1), wedge(*g.nu, pi)});
}

MatGForm inverse_generalized(const PlainGroupElement& g) {
  check_plain(g);
  const MatForm pi = g.pi.inverse().matrix().as_form();
  if (g.n_type == 1) return MatGForm(1, 0, {pi, -wedge(pi, g.mu)});
  return MatGForm(2, 0, {pi, -wedge(pi, g.mu), MatForm(g.pi.r(), g.pi.dim(), 1), -wedge(pi, *g.nu)});
}

MatGForm gauge_transform_plain(const MatGForm& a, const PlainGroupElement& g, const DerivativeContext& ctx) {
  if (a.n_type() != g.n_type) throw ProfileError("connection and group element have different type N");
  const MatGForm G = as_generalized(g);
  const MatGForm Gi = inverse_generalized(g);
  return gwedge(Gi, gderiv(G, ctx)) + gwedge(gwedge(Gi, a), G);
}

MatGForm conjugate_plain(const MatGForm& w, const PlainGroupElement& g) {
  if (w.n_type() != g.n_type) throw ProfileError("form and group element have different type N");
  return gwedge(gwedge(inverse_generalized(g), w), as_generalized(g));
}

OrdinaryForm cs4(const HigherAlgebra& m, const TwoConnection& c) {
  CurvatureSet cs = curvature2(m, c);
  return gh(m, cs.F * Rational(2) - apply_alpha(m, c.B), c.B) - ext_d(gh(m, c.A, c.B));
}

OrdinaryForm cs4_generalized(const HigherAlgebra& m, const TwoConnection& c) {
  const auto ctx = DerivativeContext::type1(Rational(-1));
  AlgGForm a = as_generalized(make_connection2(m, c.A, c.B));
  return gpairing(m, a, gderiv(m, a, ctx) + gbracket(m, a, a) * Rational(1, 3), ctx);
}

OrdinaryForm chern5(const HigherAlgebra& m, const CurvatureSet& cs) { return gh(m, cs.omega1, cs.omega2) * Rational(2); }

OrdinaryForm chern5_generalized(const HigherAlgebra& m, const TwoConnection& c) {
  const auto ctx = DerivativeContext::type1(Rational(-1));
  AlgGForm F = generalized_curvature(m, as_generalized(make_connection2(m, c.A, c.B)), ctx);
  return gpairing(m, F, F, ctx);
}

Cs4Variation cs4_gauge_variation(const GroupModel& gm, const TwoConnection& c, const GroupElement& G) {
  const HigherAlgebra& m = gm.model();
  TwoConnection t = gauge_transform2_left(gm, c, G);
  const AlgForm& phi = G.phi[0];
  const AlgForm fphi = ext_d(phi) + half_square(phi);
  const AlgForm aphi = apply_alpha(m, phi);
  Cs4Variation v;
  v.difference = cs4(m, t) - cs4(m, c);
  v.boundary = gh(m, gm.act(G.g, c.A), fphi) + gh(m, aphi, ext_d(phi) + bracket(phi, phi) * Rational(1, 3)) -
               gh(m, right_maurer_cartan(gm, G.g) + aphi, gm.act(G.g, c.B) + fphi);
  v.residual = v.difference + ext_d(v.boundary);
  return v;
}

OrdinaryForm cs5(const HigherAlgebra& m, const ThreeConnection& c) {
  CurvatureSet cs = curvature3(m, c);
  return gl(m, cs.F * Rational(2) - apply_alpha(m, c.B), c.C) + hanti(m, c.B, cs.omega2) - ext_d(gl(m, c.A, c.C));
}

OrdinaryForm cs5_generalized(const HigherAlgebra& m, const ThreeConnection& c) {
  const auto ctx = DerivativeContext::type2(Rational(0), Rational(-1));
  AlgGForm a = as_generalized(make_connection3(m, c.A, c.B, c.C));
  return gpairing(m, a, gderiv(m, a, ctx) + gbracket(m, a, a) * Rational(1, 3), ctx);
}

OrdinaryForm chern6(const HigherAlgebra& m, const CurvatureSet& cs) {
  if (!cs.omega3) throw ProfileError("the 3-Chern form needs a 3-curvature");
  return gl(m, cs.omega1, *cs.omega3) * Rational(2) + hanti(m, cs.omega2, cs.omega2);
}

OrdinaryForm chern6_generalized(const HigherAlgebra& m, const ThreeConnection& c) {
  CurvatureSet cs = curvature3(m, c);
  AlgGForm fbar(2, 2, {cs.omega1, cs.omega2, cs.omega2, *cs.omega3});
  return gpairing(m, fbar, fbar, DerivativeContext::type2(Rational(0), Rational(-1)));
}

std::string_view to_string(ActionKind k) {
  switch (k) {
    case ActionKind::CS2: return "2CS";
    case ActionKind::CS3: return "3CS";
    case ActionKind::YM: return "YM";
    case ActionKind::YM2: return "2YM";
    case ActionKind::YM3: return "3YM";
  }
  return "?";
}

ActionKind parse_action_kind(std::string_view s) {
  for (ActionKind k : {ActionKind::CS2, ActionKind::CS3, ActionKind::YM, ActionKind::YM2, ActionKind::YM3}) {
    if (to_string(k) == s) return k;
  }
  throw ParseError("unknown action kind: " + std::string(s));
}

Rational action_2cs(const HigherAlgebra& m, const TwoConnection& c) {
  CurvatureSet cs = curvature2(m, c);
  return integrate_top(gh(m, cs.F * Rational(2) - apply_alpha(m, c.B), c.B), 4, "2CS action");
}

Rational action_3cs(const HigherAlgebra& m, const ThreeConnection& c) {
  CurvatureSet cs = curvature3(m, c);
  OrdinaryForm density = gl(m, cs.F * Rational(2) - apply_alpha(m, c.B), c.C) + hanti(m, c.B, cs.omega2);
  return integrate_top(density, 5, "3CS action");
}

Rational action_ym(const HigherAlgebra& m, const AlgForm& A) {
  check_slot(A, m.g, 1, "A");
  AlgGForm F(0, 2, {field_strength(A)});
  return ginner(m, F, F);
}

Rational action_2ym(const HigherAlgebra& m, const TwoConnection& c) {
  AlgGForm F = generalized_curvature(m, as_generalized(make_connection2(m, c.A, c.B)),
                                     DerivativeContext::type1(Rational(-1)));
  return ginner(m, F, F);
}

AlgGForm ym3_form(const CurvatureSet& cs) {
  if (!cs.omega3) throw ProfileError("the 3YM form needs a 3-curvature");
  const AlgForm half = cs.omega2 * Rational(1, 2);
  return AlgGForm(2, 2, {cs.omega1, half, half, *cs.omega3});
}

Rational action_3ym(const HigherAlgebra& m, const ThreeConnection& c) {
  AlgGForm F = ym3_form(curvature3(m, c));
  return ginner(m, F, F);
}

}  // namespace hgf
