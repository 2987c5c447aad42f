#include <gtest/gtest.h>

#include "hgf/errors.hpp"
#include "hgf/group.hpp"

using namespace hgf;

namespace {

const RandomLimits kLim{2, 2, 2};

AlgGForm random_alg(Rng& rng, const HigherAlgebra& model, int n, int dim, int p) {
  AlgGForm z = zero_gform(model, n, dim, p);
  std::vector<AlgForm> s;
  for (int m = 0; m < z.num_slots(); ++m) {
    s.push_back(rng.alg_form(z.slot(m).algebra(), dim, p + std::popcount(static_cast<unsigned>(m)), kLim));
  }
  return AlgGForm(n, p, s);
}

const std::vector<std::string> kCrossed = {"adjoint_sl2", "skeletal_sl2", "skeletal_n3", "standard_sl2"};
const std::vector<std::string> kAbelianH = {"symplectic_sl2", "symplectic_n3", "shifted_sl2", "trivial_chain"};

}  // namespace

TEST(Unipotent, InverseAndShape) {
  Rng rng(1);
  GroupModel gm = GroupModel::builtin("n3");
  for (int i = 0; i < 20; ++i) {
    UnipotentMatrix g = gm.random_element(rng, 3, kLim);
    EXPECT_TRUE((g * g.inverse()).is_identity());
    EXPECT_TRUE((g.inverse() * g).is_identity());
    EXPECT_EQ(g.inverse().inverse(), g);
  }
  PolyMatrix bad = PolyMatrix::identity(2, 2);
  bad(1, 0) = Polynomial::variable(2, 0);
  EXPECT_THROW(UnipotentMatrix{bad}, DimensionError);
  PolyMatrix diag = PolyMatrix::identity(2, 2);
  diag(1, 1) = Polynomial::constant(2, Rational(2));
  EXPECT_THROW(UnipotentMatrix{diag}, DimensionError);
}

TEST(GroupModel, RealizationsValidate) {
  for (const auto& name : builtin_names()) {
    if (!builtin(name).realization) continue;
    GroupModel gm = GroupModel::builtin(name);
    Rng rng(7);
    ValidationReport rep = validate_group_model(gm, rng, 3, 5);
    EXPECT_TRUE(rep.ok()) << name << ": " << rep.summary();
  }
}

TEST(GroupModel, MaurerCartanOracle) {
  // g = [[1,a,c],[0,1,b],[0,0,1]]: g^-1 dg = da P + db Q + (dc - a db) Z.
  const int dim = 3;
  GroupModel gm = GroupModel::builtin("n3");
  Polynomial a = Polynomial::variable(dim, 0) * Polynomial::variable(dim, 1);
  Polynomial b = Polynomial::variable(dim, 2);
  Polynomial c = Polynomial::variable(dim, 0) * Polynomial::variable(dim, 0);
  UnipotentMatrix g = gm.element({a, c, b});
  AlgForm mc = gm.maurer_cartan(g);
  OrdinaryForm da = ext_d(OrdinaryForm::function(a));
  OrdinaryForm db = ext_d(OrdinaryForm::function(b));
  OrdinaryForm dc = ext_d(OrdinaryForm::function(c));
  EXPECT_EQ(mc[0], da);
  EXPECT_EQ(mc[1], db);
  EXPECT_EQ(mc[2], dc - wedge(OrdinaryForm::function(a), db));

  GroupModel s = GroupModel::builtin("sl2");
  Polynomial f = Polynomial::variable(dim, 1) * Polynomial::variable(dim, 2);
  AlgForm m2 = s.maurer_cartan(s.element({f}));
  EXPECT_TRUE(m2[0].is_zero());
  EXPECT_EQ(m2[1], ext_d(OrdinaryForm::function(f)));
  EXPECT_TRUE(m2[2].is_zero());
}

TEST(GroupElement, GroupLaws) {
  Rng rng(3);
  for (const auto& [name, n] : std::vector<std::pair<std::string, int>>{
           {"adjoint_sl2", 1}, {"skeletal_n3", 1}, {"semidirect_sl2", 2}, {"symplectic_n3", 2}}) {
    GroupModel gm = GroupModel::builtin(name);
    const GroupElement e = identity_element(gm, n, 3);
    EXPECT_EQ(inverse(gm, e), e);
    for (int i = 0; i < 5; ++i) {
      GroupElement a = random_group_element(gm, rng, n, 3, kLim, false);
      GroupElement b = random_group_element(gm, rng, n, 3, kLim, false);
      GroupElement c = random_group_element(gm, rng, n, 3, kLim, false);
      EXPECT_EQ(compose(gm, compose(gm, a, b), c), compose(gm, a, compose(gm, b, c))) << name;
      EXPECT_EQ(compose(gm, a, e), a);
      EXPECT_EQ(compose(gm, e, a), a);
      EXPECT_EQ(compose(gm, a, inverse(gm, a)), e) << name;
      EXPECT_EQ(compose(gm, inverse(gm, a), a), e) << name;
      EXPECT_EQ(inverse(gm, inverse(gm, a)), a);
    }
  }
}

TEST(GroupElement, ComposeWithZeroPhiIsMatrixProduct) {
  Rng rng(4);
  GroupModel gm = GroupModel::builtin("skeletal_n3");
  const AlgForm zero(gm.model().h, 3, 1);
  UnipotentMatrix g1 = gm.random_element(rng, 3, kLim);
  UnipotentMatrix g2 = gm.random_element(rng, 3, kLim);
  GroupElement p = compose(gm, make_element1(gm, g1, zero), make_element1(gm, g2, zero));
  EXPECT_EQ(p.g, g1 * g2);
  EXPECT_TRUE(p.phi[0].is_zero());
}

TEST(GroupElement, InverseSlotsN2) {
  Rng rng(5);
  GroupModel gm = GroupModel::builtin("shifted_sl2");
  GroupElement a = random_group_element(gm, rng, 2, 3, kLim, false);
  GroupElement ai = inverse(gm, a);
  UnipotentMatrix gi = a.g.inverse();
  EXPECT_EQ(ai.phi[0], -gm.act(gi, a.phi[0]));
  EXPECT_EQ(ai.phi[1], -gm.act(gi, a.phi[1]));
  EXPECT_EQ(*ai.psi, -gm.act(gi, *a.psi));
}

TEST(Mc2, Examples) {
  Rng rng(6);
  GroupModel gm = GroupModel::builtin("adjoint_sl2");
  const auto ctx = DerivativeContext::type1(Rational(3));
  EXPECT_TRUE(mc2(gm, identity_element(gm, 1, 3), ctx).is_zero());
  GroupElement G = random_group_element(gm, rng, 1, 3, kLim);
  GroupElement G0 = make_element1(gm, G.g, AlgForm(gm.model().h, 3, 1));
  AlgGForm l0 = mc2(gm, G0, ctx);
  EXPECT_EQ(l0.slot(0), gm.maurer_cartan(G.g));
  EXPECT_TRUE(l0.slot(1).is_zero());
  AlgGForm lk0 = mc2(gm, G, DerivativeContext::type1(Rational(0)));
  EXPECT_EQ(lk0.slot(0), gm.maurer_cartan(G.g));
  EXPECT_EQ(lk0.slot(1), gm.act(G.g.inverse(), ext_d(G.phi[0])));
  EXPECT_THROW(mc2(gm, G, DerivativeContext::type2(Rational(1), Rational(1))), ProfileError);
}

TEST(Mc3, Examples) {
  Rng rng(8);
  GroupModel gm = GroupModel::builtin("shifted_sl2");
  const HigherAlgebra& m = gm.model();
  const auto ctx = DerivativeContext::type2(Rational(2), Rational(-1));
  GroupElement G = random_group_element(gm, rng, 2, 4, kLim);
  GroupElement G0 = make_element2(gm, G.g, AlgForm(m.h, 4, 1), AlgForm(m.h, 4, 1), AlgForm(m.l, 4, 2));
  AlgGForm l0 = mc3(gm, G0, ctx);
  EXPECT_EQ(l0.slot(0), gm.maurer_cartan(G.g));
  for (int s = 1; s < 4; ++s) EXPECT_TRUE(l0.slot(s).is_zero());

  GroupElement Gi = make_element2(gm, UnipotentMatrix::identity(gm.r(), 4), G.phi[0], G.phi[1], *G.psi);
  AlgGForm li = mc3(gm, Gi, DerivativeContext::type2(Rational(0), Rational(0)));
  EXPECT_TRUE(li.slot(0).is_zero());
  EXPECT_EQ(li.slot(1), ext_d(G.phi[0]));
  EXPECT_TRUE(li.slot(2).is_zero());
  EXPECT_EQ(li.slot(3), ext_d(*G.psi));

  AlgGForm l = mc3(gm, G, ctx);
  EXPECT_EQ(l.slot(2), gm.act(G.g.inverse(), apply_beta(m, *G.psi)) * ctx.k1);

  GroupElement full = random_group_element(gm, rng, 2, 4, kLim, false);
  ASSERT_FALSE(full.simplified());
  EXPECT_THROW(mc3(gm, full, ctx), ProfileError);
}

TEST(McResidual, N1AnyK) {
  Rng rng(9);
  for (const auto& name : kCrossed) {
    GroupModel gm = GroupModel::builtin(name);
    for (int i = 0; i < 4; ++i) {
      GroupElement G = random_group_element(gm, rng, 1, 3, kLim);
      auto ctx = DerivativeContext::type1(rng.rational(3));
      EXPECT_TRUE(mc_residual(gm, G, ctx).is_zero()) << name << " " << ctx.str();
    }
  }
}

TEST(McResidual, N2EqualConstants) {
  Rng rng(10);
  for (const auto& name : kAbelianH) {
    GroupModel gm = GroupModel::builtin(name);
    for (int i = 0; i < 3; ++i) {
      GroupElement G = random_group_element(gm, rng, 2, 4, kLim);
      Rational k = rng.rational(3);
      EXPECT_TRUE(mc_residual(gm, G, DerivativeContext::type2(k, k)).is_zero()) << name;
    }
  }
}

TEST(McResidual, N2AbelianHUnequalConstantsStillVanish) {
  Rng rng(11);
  for (const auto& name : kAbelianH) {
    GroupModel gm = GroupModel::builtin(name);
    GroupElement G = random_group_element(gm, rng, 2, 4, kLim);
    EXPECT_TRUE(mc_residual(gm, G, DerivativeContext::type2(Rational(1), Rational(0))).is_zero()) << name;
    EXPECT_TRUE(mc_residual(gm, G, DerivativeContext::type2(Rational(2), Rational(-1))).is_zero()) << name;
  }
}

TEST(McResidual, N2NonabelianHCounterexample) {
  GroupModel gm = GroupModel::builtin("semidirect_sl2");
  Rng rng(12);
  GroupElement G = random_group_element(gm, rng, 2, 4, kLim);
  ASSERT_FALSE(G.phi[0].is_zero());
  EXPECT_FALSE(mc_residual(gm, G, DerivativeContext::type2(Rational(1), Rational(0))).is_zero());
  EXPECT_TRUE(mc_residual(gm, G, DerivativeContext::type2(Rational(0), Rational(-1))).is_zero());
}

TEST(Adjoint, IdentityAndSlotwise) {
  Rng rng(13);
  for (const auto& [name, n] :
       std::vector<std::pair<std::string, int>>{{"adjoint_sl2", 1}, {"skeletal_n3", 1}, {"shifted_sl2", 2}}) {
    GroupModel gm = GroupModel::builtin(name);
    const HigherAlgebra& m = gm.model();
    AlgGForm w = random_alg(rng, m, n, 3, 1);
    EXPECT_EQ(adjoint(gm, identity_element(gm, n, 3), w), w);
    GroupElement G = identity_element(gm, n, 3);
    G.g = gm.random_element(rng, 3, kLim);
    AlgGForm a = adjoint(gm, G, w);
    for (int s = 0; s < w.num_slots(); ++s) EXPECT_EQ(a.slot(s), gm.act(G.g, w.slot(s))) << name;
  }
}

TEST(Adjoint, N1CommutesWithBracket) {
  Rng rng(14);
  for (const auto& name : kCrossed) {
    GroupModel gm = GroupModel::builtin(name);
    const HigherAlgebra& m = gm.model();
    for (int i = 0; i < 3; ++i) {
      GroupElement G = random_group_element(gm, rng, 1, 3, kLim);
      AlgGForm w1 = random_alg(rng, m, 1, 3, rng.uniform(0, 1));
      AlgGForm w2 = random_alg(rng, m, 1, 3, rng.uniform(0, 1));
      EXPECT_EQ(adjoint(gm, G, gbracket(m, w1, w2)), gbracket(m, adjoint(gm, G, w1), adjoint(gm, G, w2))) << name;
    }
  }
}

TEST(Adjoint, N1PairingInvariance) {
  Rng rng(15);
  const auto ctx = DerivativeContext::type1(Rational(1));
  for (const auto& name : {"adjoint_sl2", "skeletal_sl2", "skeletal_n3"}) {
    GroupModel gm = GroupModel::builtin(name);
    const HigherAlgebra& m = gm.model();
    for (int i = 0; i < 3; ++i) {
      GroupElement G = random_group_element(gm, rng, 1, 3, kLim);
      AlgGForm w1 = random_alg(rng, m, 1, 3, rng.uniform(0, 1));
      AlgGForm w2 = random_alg(rng, m, 1, 3, rng.uniform(0, 1));
      EXPECT_EQ(gpairing(m, adjoint(gm, G, w1), adjoint(gm, G, w2), ctx), gpairing(m, w1, w2, ctx)) << name;
    }
  }
}

TEST(Adjoint, N2Shape) {
  Rng rng(16);
  GroupModel gm = GroupModel::builtin("symplectic_sl2");
  const HigherAlgebra& m = gm.model();
  GroupElement G = random_group_element(gm, rng, 2, 4, kLim);
  AlgGForm w = random_alg(rng, m, 2, 4, 1);
  AlgGForm a = adjoint(gm, G, w);
  EXPECT_EQ(a.n_type(), 2);
  EXPECT_EQ(a.degree(), 1);
  EXPECT_EQ(profile_of(a, &m), Profile::ThreeAlgebra);
  EXPECT_EQ(a.slot(2), gm.act(G.g, w.slot(2)));
  GroupElement full = random_group_element(gm, rng, 2, 4, kLim, false);
  EXPECT_THROW(adjoint(gm, full, w), ProfileError);
  EXPECT_THROW(adjoint(gm, random_group_element(gm, rng, 2, 4, kLim), random_alg(rng, m, 0, 4, 1)), ProfileError);
}
