#include <gtest/gtest.h>

#include "hgf/errors.hpp"
#include "hgf/models.hpp"
#include "hgf/random.hpp"

using namespace hgf;

namespace {

const RandomLimits kLim{2, 2, 3};

Rational sgn(int e) { return Rational(parity_sign(e)); }

}  // namespace

TEST(Builtins, AllValidatorsPass) {
  for (const auto& name : builtin_names()) {
    const Builtin& b = builtin(name);
    ValidationReport r = validate_model(*b.model);
    EXPECT_TRUE(r.ok()) << name << ": " << r.summary()
                        << (r.violations().empty() ? "" : " first: " + r.violations()[0].detail);
  }
}

TEST(Builtins, CorruptedModelsNameTheAxiom) {
  auto bad = corrupted_models();
  EXPECT_GE(bad.size(), 10u);
  for (const auto& c : bad) {
    ValidationReport r = validate_model(*c.model);
    EXPECT_TRUE(r.has(c.expected_axiom)) << c.name << ": " << r.summary();
  }
}

TEST(LieValidator, Examples) {
  EXPECT_TRUE(validate_lie_algebra(*make_abelian("a", 3)).ok());
  EXPECT_TRUE(validate_lie_algebra(*make_abelian("a", 1)).ok());
}

TEST(Bracket, AbelianIsZero) {
  AlgebraPtr a = make_abelian("a", 2);
  Rng rng(1);
  AlgForm x = rng.alg_form(a, 3, 1, kLim);
  AlgForm y = rng.alg_form(a, 3, 2, kLim);
  EXPECT_TRUE(bracket(x, y).is_zero());
}

TEST(Bracket, SelfBracketMatchesDoubleSum) {
  const AlgebraPtr& g = builtin("sl2").model->g;
  Rng rng(2);
  AlgForm a = rng.alg_form(g, 3, 1, kLim);
  AlgForm expect(g, 3, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec v = g->bracket(unit_vector(3, i), unit_vector(3, j));
      for (int c = 0; c < 3; ++c)
        if (!v[c].is_zero()) expect.add(c, wedge(a[i], a[j]) * v[c]);
    }
  EXPECT_EQ(bracket(a, a), expect);
}

TEST(Bracket, GradedSymmetryJacobiLeibniz) {
  const AlgebraPtr& g = builtin("n3").model->g;
  Rng rng(3);
  for (int it = 0; it < 20; ++it) {
    int p = rng.uniform(0, 2), q = rng.uniform(0, 2), r = rng.uniform(0, 2);
    AlgForm a = rng.alg_form(g, 4, p, kLim);
    AlgForm b = rng.alg_form(g, 4, q, kLim);
    AlgForm c = rng.alg_form(g, 4, r, kLim);
    EXPECT_TRUE((bracket(a, b) + bracket(b, a) * sgn(p * q)).is_zero());
    AlgForm jac = bracket(a, bracket(b, c)) - bracket(bracket(a, b), c) - bracket(b, bracket(a, c)) * sgn(p * q);
    EXPECT_TRUE(jac.is_zero());
    EXPECT_EQ(ext_d(bracket(a, b)), bracket(ext_d(a), b) + bracket(a, ext_d(b)) * sgn(p));
  }
}

TEST(Bracket, AlgebraMismatchThrows) {
  Rng rng(4);
  AlgForm a = rng.alg_form(builtin("sl2").model->g, 2, 1, kLim);
  AlgForm b = rng.alg_form(builtin("n3").model->g, 2, 1, kLim);
  EXPECT_THROW(bracket(a, b), AlgebraError);
}

TEST(ModelMaps, AlphaExamples) {
  const HigherAlgebra& adj = *builtin("adjoint_sl2").model;
  const HigherAlgebra& sk = *builtin("skeletal_sl2").model;
  Rng rng(5);
  AlgForm b = rng.alg_form(adj.h, 3, 2, kLim);
  AlgForm expect(adj.g, b.components());
  EXPECT_EQ(apply_alpha(adj, b), expect);
  EXPECT_TRUE(apply_alpha(adj, AlgForm(adj.h, 3, 2)).is_zero());
  EXPECT_TRUE(apply_alpha(sk, rng.alg_form(sk.h, 3, 2, kLim)).is_zero());
  EXPECT_THROW(apply_alpha(adj, rng.alg_form(adj.g, 3, 2, kLim)), AlgebraError);
}

TEST(ModelMaps, FormLevelCrossedIdentities) {
  Rng rng(6);
  for (const char* name : {"adjoint_sl2", "skeletal_n3", "standard_sl2"}) {
    const HigherAlgebra& m = *builtin(name).model;
    for (int it = 0; it < 5; ++it) {
      AlgForm a = rng.alg_form(m.g, 4, 1, kLim);
      AlgForm b1 = rng.alg_form(m.h, 4, 1, kLim);
      AlgForm b2 = rng.alg_form(m.h, 4, 2, kLim);
      EXPECT_EQ(apply_alpha(m, act(m, a, b1)), bracket(a, apply_alpha(m, b1))) << name;
      EXPECT_EQ(act(m, apply_alpha(m, b1), b2), bracket(b1, b2)) << name;
    }
  }
  const HigherAlgebra& adj = *builtin("adjoint_sl2").model;
  AlgForm a = rng.alg_form(adj.g, 3, 1, kLim);
  AlgForm b = rng.alg_form(adj.h, 3, 1, kLim);
  EXPECT_EQ(act(adj, a, b).components(), bracket(a, AlgForm(adj.g, b.components())).components());
}

TEST(ModelMaps, PeifferAndActPrime) {
  Rng rng(7);
  for (const char* name : {"symplectic_sl2", "symplectic_n3", "semidirect_sl2"}) {
    const HigherAlgebra& m = *builtin(name).model;
    AlgForm x = rng.alg_form(m.g, 4, 1, kLim);
    AlgForm y1 = rng.alg_form(m.h, 4, 1, kLim);
    AlgForm y2 = rng.alg_form(m.h, 4, 1, kLim);
    AlgForm z = rng.alg_form(m.l, 4, 2, kLim);
    EXPECT_TRUE(peiffer(m, AlgForm(m.h, 4, 1), y1).is_zero());
    EXPECT_TRUE(act_prime(m, y1, AlgForm(m.l, 4, 2)).is_zero());
    // fine: Y |>' Z = alpha(Y) |> Z.
    EXPECT_EQ(act_prime(m, y1, z), act(m, apply_alpha(m, y1), z)) << name;
    if (m.abelian_h) {
      EXPECT_TRUE(apply_beta(m, peiffer(m, y1, y2)).is_zero());
    }
    // Equivariance of the Peiffer lifting with 0-form X.
    AlgForm x0 = rng.alg_form(m.g, 4, 0, kLim);
    AlgForm res = act(m, x0, peiffer(m, y1, y2)) - peiffer(m, act(m, x0, y1), y2) - peiffer(m, y1, act(m, x0, y2));
    EXPECT_TRUE(res.is_zero()) << name;
    (void)x;
  }
  EXPECT_THROW(peiffer(*builtin("adjoint_sl2").model, AlgForm(builtin("adjoint_sl2").model->h, 2, 1),
                       AlgForm(builtin("adjoint_sl2").model->h, 2, 1)),
               AlgebraError);
}

TEST(Pairings, Examples) {
  AlgebraPtr a = make_abelian("a", 1);
  HigherAlgebra m;
  m.level = ModelLevel::Lie;
  m.g = a;
  m.pairings.sym_g = Matrix::identity(1);
  Polynomial f = Polynomial::variable(2, 0), g = Polynomial::variable(2, 1);
  int i1[] = {1}, i2[] = {2}, i12[] = {1, 2};
  AlgForm x = AlgForm::basis(a, OrdinaryForm::monomial(f, i1), 0);
  AlgForm y = AlgForm::basis(a, OrdinaryForm::monomial(g, i2), 0);
  EXPECT_EQ(pair_forms(m, x, y, PairingKind::SymG), OrdinaryForm::monomial(f * g, i12));
  EXPECT_TRUE(pair_forms(m, x, AlgForm(a, 2, 1), PairingKind::SymG).is_zero());
  EXPECT_THROW(pair_forms(m, x, y, PairingKind::GH), AlgebraError);
}

TEST(Pairings, LeibnizAndSymmetry) {
  Rng rng(8);
  const HigherAlgebra& m = *builtin("adjoint_sl2").model;
  for (int it = 0; it < 10; ++it) {
    int p = rng.uniform(0, 2), q = rng.uniform(0, 2);
    AlgForm a = rng.alg_form(m.g, 4, p, kLim);
    AlgForm b = rng.alg_form(m.h, 4, q, kLim);
    EXPECT_EQ(ext_d(pair_forms(m, a, b, PairingKind::GH)),
              pair_forms(m, ext_d(a), b, PairingKind::GH) + pair_forms(m, a, ext_d(b), PairingKind::GH) * sgn(p));
    AlgForm y1 = rng.alg_form(m.h, 4, p, kLim);
    EXPECT_EQ(pair_forms(m, apply_alpha(m, y1), b, PairingKind::GH),
              pair_forms(m, apply_alpha(m, b), y1, PairingKind::GH) * sgn(p * q));
    AlgForm s = rng.alg_form(m.g, 4, 2, kLim);
    EXPECT_GE(integrate_cube(pair_forms(m, s, hodge(s), PairingKind::SymG)), Rational(0));
  }
}
