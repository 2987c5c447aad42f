#include <gtest/gtest.h>

#include "hgf/errors.hpp"
#include "hgf/genform.hpp"
#include "hgf/models.hpp"
#include "hgf/random.hpp"

using namespace hgf;

namespace {

const RandomLimits kLim{2, 2, 3};
constexpr int kDim = 3;

Rational sgn(int e) { return Rational(parity_sign(e)); }
Polynomial x(int i) { return Polynomial::variable(kDim, i - 1); }
Polynomial one() { return Polynomial::constant(kDim, Rational(1)); }
OrdinaryForm mono(const Polynomial& f, std::initializer_list<int> idx) {
  std::vector<int> v(idx);
  return OrdinaryForm::monomial(f, v);
}

int popcount(int m) { return std::popcount(static_cast<unsigned>(m)); }

RealGForm random_real(Rng& rng, int n, int p) {
  std::vector<OrdinaryForm> s;
  for (int m = 0; m < (1 << n); ++m) s.push_back(rng.form(kDim, p + popcount(m), kLim));
  return RealGForm(n, p, s);
}

AlgGForm random_alg(Rng& rng, const HigherAlgebra& model, int n, int p) {
  AlgGForm z = zero_gform(model, n, kDim, p);
  std::vector<AlgForm> s;
  for (int m = 0; m < z.num_slots(); ++m) s.push_back(rng.alg_form(z.slot(m).algebra(), kDim, p + popcount(m), kLim));
  return AlgGForm(n, p, s);
}

DerivativeContext random_ctx(Rng& rng, int n) {
  if (n == 0) return DerivativeContext::type0();
  if (n == 1) return DerivativeContext::type1(rng.rational(2));
  return DerivativeContext::type2(rng.coin() ? Rational(0) : rng.rational(2), rng.rational(2));
}

// Recursive product built from split/join only.
RealGForm recursive_wedge(const RealGForm& a, const RealGForm& b) {
  if (a.n_type() == 0) return RealGForm(0, a.degree() + b.degree(), {wedge(a.slot(0), b.slot(0))});
  auto [a0, a1] = split(a);
  auto [b0, b1] = split(b);
  RealGForm lo = recursive_wedge(a0, b0);
  RealGForm hi = recursive_wedge(a0, b1) + recursive_wedge(a1, b0) * sgn(b.degree());
  return join(lo, hi);
}

// Slot formulas for the N=2 real derivative.
RealGForm n2_deriv_oracle(const RealGForm& w, const Rational& k1, const Rational& k2) {
  const int p = w.degree();
  const auto& a = w.slot(0);
  const auto& a1 = w.slot(1);
  const auto& a2 = w.slot(2);
  const auto& t = w.slot(3);
  return RealGForm(2, p + 1,
                   {ext_d(a) + (a1 * k1 + a2 * k2) * sgn(p + 1), ext_d(a1) + t * (k2 * sgn(p + 1)),
                    ext_d(a2) + t * (k1 * sgn(p)), ext_d(t)});
}

}  // namespace

TEST(SplitJoin, Examples) {
  RealGForm w(1, 0, {OrdinaryForm::function(x(1)), OrdinaryForm::dx(kDim, 2)});
  auto [u, v] = split(w);
  EXPECT_EQ(u.slot(0), OrdinaryForm::function(x(1)));
  EXPECT_EQ(v.slot(0), OrdinaryForm::dx(kDim, 2));
  EXPECT_EQ(join(u, v), w);
  EXPECT_THROW(split(RealGForm(0, 0, {OrdinaryForm::function(x(1))})), ProfileError);

  RealGForm w2(2, 0, {OrdinaryForm::function(x(1)), OrdinaryForm::dx(kDim, 1), OrdinaryForm::dx(kDim, 2),
                      mono(one(), {1, 3})});
  auto [lo, hi] = split(w2);
  EXPECT_EQ(lo.slots(), (std::vector<OrdinaryForm>{w2.slot(0), w2.slot(1)}));
  EXPECT_EQ(hi.slots(), (std::vector<OrdinaryForm>{w2.slot(2), w2.slot(3)}));
  EXPECT_EQ(hi.degree(), 1);

  Rng rng(3);
  for (int n = 1; n <= 2; ++n) {
    RealGForm r = random_real(rng, n, 1);
    auto [a, b] = split(r);
    EXPECT_EQ(join(a, b), r);
  }
}

TEST(GWedge, SpecExample) {
  RealGForm a(1, 1, {mono(x(1), {1}), mono(one(), {1, 2})});
  RealGForm b(1, 1, {mono(x(2), {2}), mono(one(), {2, 3})});
  RealGForm r = gwedge(a, b);
  EXPECT_EQ(r.slot(0), mono(x(1) * x(2), {1, 2}));
  EXPECT_EQ(r.slot(1), mono(x(1), {1, 2, 3}));
}

TEST(GWedge, UnitAndTypeMismatch) {
  Rng rng(4);
  for (int n = 0; n <= 2; ++n) {
    RealGForm w = random_real(rng, n, 1);
    EXPECT_EQ(gwedge(w, real_one(n, kDim)), w);
    EXPECT_EQ(gwedge(real_one(n, kDim), w), w);
  }
  EXPECT_THROW(gwedge(random_real(rng, 1, 0), random_real(rng, 2, 0)), ProfileError);
}

TEST(GWedge, N2ComponentFormula) {
  Rng rng(5);
  for (int it = 0; it < 20; ++it) {
    const int p = rng.uniform(-1, 1);
    const int q = rng.uniform(-1, 1);
    RealGForm A = random_real(rng, 2, p);
    RealGForm B = random_real(rng, 2, q);
    RealGForm r = gwedge(A, B);
    EXPECT_EQ(r.slot(0), wedge(A.slot(0), B.slot(0)));
    EXPECT_EQ(r.slot(1), wedge(A.slot(0), B.slot(1)) + wedge(A.slot(1), B.slot(0)) * sgn(q));
    EXPECT_EQ(r.slot(2), wedge(A.slot(0), B.slot(2)) + wedge(A.slot(2), B.slot(0)) * sgn(q));
    EXPECT_EQ(r.slot(3), wedge(A.slot(0), B.slot(3)) + wedge(A.slot(1), B.slot(2)) * sgn(q + 1) +
                             wedge(A.slot(2), B.slot(1)) * sgn(q) + wedge(A.slot(3), B.slot(0)));
  }
}

TEST(GWedge, RecursiveDefinitionAndAlgebra) {
  Rng rng(6);
  for (int it = 0; it < 30; ++it) {
    const int n = rng.uniform(0, 2);
    const int p = rng.uniform(-n, 2);
    const int q = rng.uniform(-n, 2);
    const int r = rng.uniform(-n, 1);
    RealGForm a = random_real(rng, n, p);
    RealGForm b = random_real(rng, n, q);
    RealGForm c = random_real(rng, n, r);
    EXPECT_EQ(gwedge(a, b), recursive_wedge(a, b));
    EXPECT_EQ(gwedge(a, b), gwedge(b, a) * sgn(p * q));
    EXPECT_EQ(gwedge(gwedge(a, b), c), gwedge(a, gwedge(b, c)));
  }
}

TEST(GDeriv, SpecExampleN1) {
  RealGForm w(1, 0, {OrdinaryForm::function(x(1)), mono(x(2), {1})});
  RealGForm r = gderiv(w, DerivativeContext::type1(Rational(-1)));
  EXPECT_EQ(r.slot(0), OrdinaryForm::dx(kDim, 1) + mono(x(2), {1}));
  EXPECT_EQ(r.slot(1), mono(one(), {2, 1}));
}

TEST(GDeriv, N2RealMatchesSlotFormula) {
  Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    RealGForm w = random_real(rng, 2, rng.uniform(-2, 1));
    DerivativeContext ctx = random_ctx(rng, 2);
    EXPECT_EQ(gderiv(w, ctx), n2_deriv_oracle(w, ctx.k1, ctx.k2));
  }
}

TEST(GDeriv, ContextMismatchThrows) {
  Rng rng(8);
  EXPECT_THROW(gderiv(random_real(rng, 1, 0), DerivativeContext::type2(Rational(0), Rational(-1))), ProfileError);
}

TEST(GDeriv, ThreeAlgebraSpecExample) {
  const HigherAlgebra& m = *builtin("semidirect_sl2").model;
  Rng rng(9);
  AlgForm A = rng.alg_form(m.g, kDim, 1, kLim);
  AlgForm B = rng.alg_form(m.h, kDim, 2, kLim);
  AlgForm C = rng.alg_form(m.l, kDim, 3, kLim);
  AlgGForm w(2, 1, {A, B, B, C});
  AlgGForm r = gderiv(m, w, DerivativeContext::type2(Rational(0), Rational(-1)));
  EXPECT_EQ(r.slot(0), ext_d(A) - apply_alpha(m, B));
  EXPECT_EQ(r.slot(1), ext_d(B) - apply_beta(m, C));
  EXPECT_EQ(r.slot(2), ext_d(B));
  EXPECT_EQ(r.slot(3), ext_d(C));
}

TEST(GDeriv, AlgebraValuedMatchesSlotFormulas) {
  Rng rng(10);
  const HigherAlgebra& m2 = *builtin("adjoint_sl2").model;
  for (int it = 0; it < 5; ++it) {
    const int p = rng.uniform(0, 1);
    AlgGForm w = random_alg(rng, m2, 1, p);
    const Rational k = rng.rational(2);
    AlgGForm r = gderiv(m2, w, DerivativeContext::type1(k));
    EXPECT_EQ(r.slot(0), ext_d(w.slot(0)) + apply_alpha(m2, w.slot(1)) * (k * sgn(p + 1)));
    EXPECT_EQ(r.slot(1), ext_d(w.slot(1)));
  }
  const HigherAlgebra& m3 = *builtin("semidirect_sl2").model;
  for (int it = 0; it < 5; ++it) {
    const int p = rng.uniform(-1, 1);
    AlgGForm w = random_alg(rng, m3, 2, p);
    DerivativeContext ctx = random_ctx(rng, 2);
    AlgGForm r = gderiv(m3, w, ctx);
    EXPECT_EQ(r.slot(0), ext_d(w.slot(0)) + apply_alpha(m3, w.slot(1) * ctx.k1 + w.slot(2) * ctx.k2) * sgn(p + 1));
    EXPECT_EQ(r.slot(1), ext_d(w.slot(1)) + apply_beta(m3, w.slot(3)) * (ctx.k2 * sgn(p + 1)));
    EXPECT_EQ(r.slot(2), ext_d(w.slot(2)) + apply_beta(m3, w.slot(3)) * (ctx.k1 * sgn(p)));
    EXPECT_EQ(r.slot(3), ext_d(w.slot(3)));
  }
}

TEST(GDeriv, NilpotentForEveryProfile) {
  Rng rng(11);
  for (int it = 0; it < 30; ++it) {
    const int n = rng.uniform(0, 2);
    RealGForm w = random_real(rng, n, rng.uniform(-n, 1));
    DerivativeContext ctx = random_ctx(rng, n);
    EXPECT_TRUE(gderiv(gderiv(w, ctx), ctx).is_zero());
  }
  for (const char* name : {"adjoint_sl2", "skeletal_n3", "standard_sl2"}) {
    const HigherAlgebra& m = *builtin(name).model;
    AlgGForm w = random_alg(rng, m, 1, rng.uniform(-1, 1));
    DerivativeContext ctx = random_ctx(rng, 1);
    EXPECT_TRUE(gderiv(m, gderiv(m, w, ctx), ctx).is_zero()) << name;
  }
  for (const char* name : {"semidirect_sl2", "symplectic_sl2", "trivial_chain"}) {
    const HigherAlgebra& m = *builtin(name).model;
    AlgGForm w = random_alg(rng, m, 2, rng.uniform(-2, 1));
    DerivativeContext ctx = random_ctx(rng, 2);
    EXPECT_TRUE(gderiv(m, gderiv(m, w, ctx), ctx).is_zero()) << name;
  }
  const HigherAlgebra& sl2 = *builtin("sl2").model;
  AlgGForm single(1, 0, {rng.alg_form(sl2.g, kDim, 0, kLim), rng.alg_form(sl2.g, kDim, 1, kLim)});
  DerivativeContext ctx = DerivativeContext::type1(Rational(-1));
  EXPECT_TRUE(gderiv(gderiv(single, ctx), ctx).is_zero());
}

TEST(GDeriv, MultiAlgebraNeedsModel) {
  const HigherAlgebra& m = *builtin("adjoint_sl2").model;
  Rng rng(12);
  EXPECT_THROW(gderiv(random_alg(rng, m, 1, 0), DerivativeContext::type1(Rational(1))), ProfileError);
}

TEST(GBracket, Examples) {
  const HigherAlgebra& m = *builtin("adjoint_sl2").model;
  Rng rng(13);
  AlgGForm z = zero_gform(m, 1, kDim, 1);
  AlgGForm w = random_alg(rng, m, 1, 1);
  EXPECT_TRUE(gbracket(m, z, z).is_zero());
  EXPECT_TRUE(gbracket(m, w, z).is_zero());
  AlgGForm ww = gbracket(m, w, w);
  EXPECT_EQ(ww.slot(1), act(m, w.slot(0), w.slot(1)) * Rational(2));
  EXPECT_EQ(ww.slot(0), bracket(w.slot(0), w.slot(0)));

  const HigherAlgebra& other = *builtin("skeletal_sl2").model;
  EXPECT_THROW(gbracket(m, w, random_alg(rng, other, 1, 1)), ProfileError);
}

TEST(GBracket, N2SlotFormula) {
  const HigherAlgebra& m = *builtin("semidirect_sl2").model;
  Rng rng(14);
  const int p = 1;
  const int q = 0;
  AlgGForm a = random_alg(rng, m, 2, p);
  AlgGForm b = random_alg(rng, m, 2, q);
  AlgGForm r = gbracket(m, a, b);
  EXPECT_EQ(r.slot(2), act(m, a.slot(0), b.slot(2)) - act(m, b.slot(0), a.slot(2)) * sgn(p * q));
  EXPECT_EQ(r.slot(3), act(m, a.slot(0), b.slot(3)) - act(m, b.slot(0), a.slot(3)) * sgn(p * q) +
                           peiffer(m, a.slot(1), b.slot(2)) * sgn(q + 1) -
                           peiffer(m, b.slot(1), a.slot(2)) * sgn(p * q + p + 1));
}

TEST(GBracket, GradedAntisymmetryJacobiLeibniz) {
  Rng rng(15);
  struct Case {
    const char* model;
    int n;
  };
  for (Case c : {Case{"adjoint_sl2", 1}, Case{"skeletal_n3", 1}, Case{"symplectic_sl2", 2}, Case{"symplectic_n3", 2},
                 Case{"trivial_chain", 2}}) {
    const HigherAlgebra& m = *builtin(c.model).model;
    for (int it = 0; it < 3; ++it) {
      const int p = rng.uniform(-c.n, 1);
      const int q = rng.uniform(-c.n, 1);
      const int r = rng.uniform(-c.n, 0);
      AlgGForm a = random_alg(rng, m, c.n, p);
      AlgGForm b = random_alg(rng, m, c.n, q);
      AlgGForm e = random_alg(rng, m, c.n, r);
      EXPECT_EQ(gbracket(m, a, b), -gbracket(m, b, a) * sgn(p * q)) << c.model;
      EXPECT_EQ(gbracket(m, a, gbracket(m, b, e)),
                gbracket(m, gbracket(m, a, b), e) + gbracket(m, b, gbracket(m, a, e)) * sgn(p * q))
          << c.model;
      DerivativeContext ctx = random_ctx(rng, c.n);
      EXPECT_EQ(gderiv(m, gbracket(m, a, b), ctx),
                gbracket(m, gderiv(m, a, ctx), b) + gbracket(m, a, gderiv(m, b, ctx)) * sgn(p))
          << c.model << " " << ctx.str();
    }
  }
}

// Nonabelian h: Jacobi and antisymmetry survive, Leibniz only without k1, k2.
TEST(GBracket, NonabelianHLeibnizNeedsZeroConstants) {
  const HigherAlgebra& m = *builtin("semidirect_sl2").model;
  Rng rng(21);
  bool broken = false;
  for (int it = 0; it < 4; ++it) {
    const int p = rng.uniform(-1, 1);
    const int q = rng.uniform(-1, 1);
    const int r = rng.uniform(-1, 0);
    AlgGForm a = random_alg(rng, m, 2, p);
    AlgGForm b = random_alg(rng, m, 2, q);
    AlgGForm e = random_alg(rng, m, 2, r);
    EXPECT_EQ(gbracket(m, a, b), -gbracket(m, b, a) * sgn(p * q));
    EXPECT_EQ(gbracket(m, a, gbracket(m, b, e)),
              gbracket(m, gbracket(m, a, b), e) + gbracket(m, b, gbracket(m, a, e)) * sgn(p * q));
    DerivativeContext flat = DerivativeContext::type2(Rational(0), Rational(0));
    EXPECT_EQ(gderiv(m, gbracket(m, a, b), flat),
              gbracket(m, gderiv(m, a, flat), b) + gbracket(m, a, gderiv(m, b, flat)) * sgn(p));
    DerivativeContext ctx = DerivativeContext::type2(Rational(0), Rational(-1));
    broken |= gderiv(m, gbracket(m, a, b), ctx) !=
              gbracket(m, gderiv(m, a, ctx), b) + gbracket(m, a, gderiv(m, b, ctx)) * sgn(p);
  }
  EXPECT_TRUE(broken);
}

TEST(GBracket, SingleAlgebraUsesProductRule) {
  const HigherAlgebra& m = *builtin("sl2").model;
  Rng rng(16);
  AlgGForm a(1, 1, {rng.alg_form(m.g, kDim, 1, kLim), rng.alg_form(m.g, kDim, 2, kLim)});
  AlgGForm b(1, 0, {rng.alg_form(m.g, kDim, 0, kLim), rng.alg_form(m.g, kDim, 1, kLim)});
  AlgGForm r = gbracket(m, a, b);
  EXPECT_EQ(r.slot(1), bracket(a.slot(0), b.slot(1)) + bracket(a.slot(1), b.slot(0)) * sgn(0));
}

TEST(GPairing, N1) {
  const HigherAlgebra& m = *builtin("skeletal_sl2").model;
  Rng rng(17);
  DerivativeContext ctx = DerivativeContext::type1(Rational(-1));
  for (int it = 0; it < 5; ++it) {
    const int p = rng.uniform(-1, 1);
    const int q = rng.uniform(-1, 1);
    AlgGForm a = random_alg(rng, m, 1, p);
    AlgGForm b = random_alg(rng, m, 1, q);
    OrdinaryForm r = gpairing(m, a, b, ctx);
    EXPECT_EQ(r.degree(), p + q + 1);
    EXPECT_EQ(r, gpairing(m, b, a, ctx) * sgn(p * q));
    EXPECT_TRUE(gpairing(m, a, zero_gform(m, 1, kDim, q), ctx).is_zero());
    EXPECT_EQ(r, pair_forms(m, a.slot(0), b.slot(1), PairingKind::GH) +
                     pair_forms(m, b.slot(0), a.slot(1), PairingKind::GH) * sgn(p * q));
  }
  const HigherAlgebra& nopair = *builtin("standard_sl2").model;
  AlgGForm w = random_alg(rng, nopair, 1, 0);
  EXPECT_THROW(gpairing(nopair, w, w, ctx), std::invalid_argument);
}

TEST(GPairing, N2) {
  const HigherAlgebra& m = *builtin("symplectic_sl2").model;
  Rng rng(18);
  for (int it = 0; it < 6; ++it) {
    const int p = rng.uniform(-1, 1);
    const int q = rng.uniform(-1, 1);
    AlgGForm a = random_alg(rng, m, 2, p);
    AlgGForm b = random_alg(rng, m, 2, q);
    const Rational k = rng.rational(2);
    DerivativeContext equal = DerivativeContext::type2(k, k);
    EXPECT_EQ(gpairing(m, a, b, equal).degree(), p + q + 2);
    EXPECT_EQ(gpairing(m, a, b, equal), gpairing(m, b, a, equal) * sgn(p * q));

    DerivativeContext k1zero = DerivativeContext::type2(Rational(0), Rational(-1));
    OrdinaryForm expect = pair_forms(m, a.slot(0), b.slot(3), PairingKind::GL) +
                          pair_forms(m, b.slot(0), a.slot(3), PairingKind::GL) * sgn(p * q) +
                          pair_forms(m, b.slot(1), a.slot(2), PairingKind::HAnti) * sgn(p * q);
    EXPECT_EQ(gpairing(m, a, b, k1zero), expect);
  }
}

TEST(GInner, Examples) {
  AlgebraPtr u1 = builtin("abelian1").model->g;
  HigherAlgebra m;
  m.name = "u1_pair";
  m.g = u1;
  m.h = make_abelian("u1h", 1);
  m.level = ModelLevel::Crossed;
  m.alpha = Matrix(1, 1);
  m.act_h = Bilinear(1, 1, 1);
  m.pairings.sym_g = Matrix::identity(1);
  m.pairings.sym_h = Matrix::identity(1);
  AlgGForm w(1, 1, {AlgForm::basis(u1, OrdinaryForm::dx(2, 1), 0), AlgForm(m.h, 2, 2)});
  EXPECT_EQ(ginner(m, w, w), Rational(1));

  Rng rng(19);
  const HigherAlgebra& s = *builtin("symplectic_sl2").model;
  for (int it = 0; it < 5; ++it) {
    const int p = rng.uniform(-1, 1);
    AlgGForm a = random_alg(rng, s, 2, p);
    AlgGForm b = random_alg(rng, s, 2, p);
    EXPECT_EQ(ginner(s, a, b), ginner(s, b, a));
    if (!a.is_zero()) EXPECT_GT(ginner(s, a, a), Rational(0));
    auto [a0, a1] = split(a);
    auto [b0, b1] = split(b);
    EXPECT_EQ(ginner(s, a, b), ginner(s, a0, b0) + ginner(s, a1, b1));
  }
  EXPECT_THROW(ginner(s, random_alg(rng, s, 2, 0), random_alg(rng, s, 2, 1)), DimensionError);

  RealGForm r1 = random_real(rng, 1, 1);
  RealGForm r2 = random_real(rng, 1, 1);
  EXPECT_EQ(ginner(r1, r2), inner(r1.slot(0), r2.slot(0)) + inner(r1.slot(1), r2.slot(1)));
}

TEST(Profile, Detection) {
  const HigherAlgebra& m = *builtin("semidirect_sl2").model;
  Rng rng(20);
  EXPECT_EQ(profile_of(random_alg(rng, m, 2, 0), &m), Profile::ThreeAlgebra);
  EXPECT_THROW(profile_of(random_alg(rng, m, 2, 0)), ProfileError);
  const HigherAlgebra& a = *builtin("adjoint_sl2").model;
  EXPECT_EQ(profile_of(random_alg(rng, a, 1, 0), &a), Profile::TwoAlgebra);
  EXPECT_EQ(slot_name(2, 2), "V'");
}
