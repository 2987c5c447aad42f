#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgf/group.hpp"

namespace hgf {

/// g-valued 1-form A and h-valued 2-form B.
struct TwoConnection {
  AlgForm A;
  AlgForm B;
};

/// Adds an l-valued 3-form C.
struct ThreeConnection {
  AlgForm A;
  AlgForm B;
  AlgForm C;
};

/// F = dA + 1/2[A,A], omega1 = F - alpha(B), omega2 and (N=2) omega3.
struct CurvatureSet {
  AlgForm F;
  AlgForm omega1;
  AlgForm omega2;
  std::optional<AlgForm> omega3;
};

/// Throw DimensionError/ProfileError unless the slots have the right algebras and degrees.
TwoConnection make_connection2(const HigherAlgebra& m, AlgForm A, AlgForm B);
ThreeConnection make_connection3(const HigherAlgebra& m, AlgForm A, AlgForm B, AlgForm C);
TwoConnection random_connection2(const HigherAlgebra& m, Rng& rng, int dim, const RandomLimits& lim);
ThreeConnection random_connection3(const HigherAlgebra& m, Rng& rng, int dim, const RandomLimits& lim);

/// dA + 1/2 [A, A].
AlgForm field_strength(const AlgForm& A);
CurvatureSet curvature2(const HigherAlgebra& m, const TwoConnection& c);
CurvatureSet curvature3(const HigherAlgebra& m, const ThreeConnection& c);

/// A + B xi, and A + B xi^1 + B xi^2 + C xi^1 xi^2.
AlgGForm as_generalized(const TwoConnection& c);
AlgGForm as_generalized(const ThreeConnection& c);

/// d A + 1/2 [A, A] for a degree-1 generalized form.
AlgGForm generalized_curvature(const HigherAlgebra& m, const AlgGForm& a, const DerivativeContext& ctx);
/// Plain matrix version: d A + A ^ A.
MatGForm generalized_curvature(const MatGForm& a, const DerivativeContext& ctx);

/// Left-hand sides of the Bianchi identities, in order.
std::vector<AlgForm> bianchi_residual(const HigherAlgebra& m, const TwoConnection& c);
std::vector<AlgForm> bianchi_residual(const HigherAlgebra& m, const ThreeConnection& c);
/// d F + [A, F].
AlgGForm generalized_bianchi(const HigherAlgebra& m, const AlgGForm& a, const DerivativeContext& ctx);

/// d W + A ^ W + (-1)^(p+1) W ^ A.
MatGForm covariant_derivative_plain(const MatGForm& a, const MatGForm& w, const DerivativeContext& ctx);

/// A' = Ad_{G^-1} A + G^-1 dG with mc2 at the given k.
AlgGForm gauge_transform2_form(const GroupModel& gm, const AlgGForm& a, const GroupElement& G,
                               const DerivativeContext& ctx);
TwoConnection gauge_transform2(const GroupModel& gm, const TwoConnection& c, const GroupElement& G,
                               const DerivativeContext& ctx = DerivativeContext::type1(Rational(-1)));
/// Componentwise A' = Ad_g A - dg g^-1 - alpha(phi), B' = g|>B - dphi - phi phi - A'|>phi.
TwoConnection gauge_transform2_left(const GroupModel& gm, const TwoConnection& c, const GroupElement& G);

/// Ad_{G^-1} A + mc3 with k^1 replaced by k^1 + t; the xi^2 slot is dropped
/// when reading back the connection.
AlgGForm gauge_transform3_form(const GroupModel& gm, const AlgGForm& a, const GroupElement& G,
                               const DerivativeContext& ctx, const Rational& t);
ThreeConnection gauge_transform3(const GroupModel& gm, const ThreeConnection& c, const GroupElement& G,
                                 const DerivativeContext& ctx = DerivativeContext::type2(Rational(0), Rational(-1)),
                                 const Rational& t = Rational(-1));

/// dg g^-1 as a g-valued 1-form.
AlgForm right_maurer_cartan(const GroupModel& gm, const UnipotentMatrix& g);

/// Plain matrix group element (1 + mu xi) pi, or (1 + mu xi^1 + nu xi^1 xi^2) pi for N=2.
struct PlainGroupElement {
  int n_type = 1;
  UnipotentMatrix pi;
  MatForm mu;                 // 1-form
  std::optional<MatForm> nu;  // 2-form (N=2)
};
MatGForm as_generalized(const PlainGroupElement& g);
MatGForm inverse_generalized(const PlainGroupElement& g);
/// g^-1 d g + g^-1 A g.
MatGForm gauge_transform_plain(const MatGForm& a, const PlainGroupElement& g, const DerivativeContext& ctx);
/// g^-1 W g.
MatGForm conjugate_plain(const MatGForm& w, const PlainGroupElement& g);

/// <<A, dA + 1/3[A,A]>> at k = -1, and <2F - alpha(B), B> - d<A,B>.
OrdinaryForm cs4(const HigherAlgebra& m, const TwoConnection& c);
OrdinaryForm cs4_generalized(const HigherAlgebra& m, const TwoConnection& c);
/// 2 <omega1, omega2>.
OrdinaryForm chern5(const HigherAlgebra& m, const CurvatureSet& cs);
OrdinaryForm chern5_generalized(const HigherAlgebra& m, const TwoConnection& c);

struct Cs4Variation {
  OrdinaryForm difference;  // CS4(A',B') - CS4(A,B)
  OrdinaryForm boundary;    // the 3-form whose d should give minus the difference
  OrdinaryForm residual;    // difference + d(boundary)
};
/// Transform by the left-form gauge action with F(phi) = dphi + 1/2[phi,phi].
Cs4Variation cs4_gauge_variation(const GroupModel& gm, const TwoConnection& c, const GroupElement& G);

/// <<A, dA + 1/3[A,A]>> at (k^1,k^2) = (0,-1), and <2F - alpha(B), C> + <B, omega2>_h - d<A,C>.
OrdinaryForm cs5(const HigherAlgebra& m, const ThreeConnection& c);
OrdinaryForm cs5_generalized(const HigherAlgebra& m, const ThreeConnection& c);
/// 2 <omega1, omega3> + <omega2, omega2>_h.
OrdinaryForm chern6(const HigherAlgebra& m, const CurvatureSet& cs);
/// <<Fbar, Fbar>> with Fbar = omega1 + omega2 xi^1 + omega2 xi^2 + omega3 xi^1 xi^2.
OrdinaryForm chern6_generalized(const HigherAlgebra& m, const ThreeConnection& c);

enum class ActionKind { CS2, CS3, YM, YM2, YM3 };
std::string_view to_string(ActionKind k);
/// Throws ParseError for an unknown name ("2CS", "3CS", "YM", "2YM", "3YM").
ActionKind parse_action_kind(std::string_view s);

/// Integrals over the unit cube.
Rational action_2cs(const HigherAlgebra& m, const TwoConnection& c);
Rational action_3cs(const HigherAlgebra& m, const ThreeConnection& c);
Rational action_ym(const HigherAlgebra& m, const AlgForm& A);
Rational action_2ym(const HigherAlgebra& m, const TwoConnection& c);
Rational action_3ym(const HigherAlgebra& m, const ThreeConnection& c);
/// omega1 + 1/2 omega2 xi^1 + 1/2 omega2 xi^2 + omega3 xi^1 xi^2.
AlgGForm ym3_form(const CurvatureSet& cs);

}  // namespace hgf
