#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hgf/genform.hpp"
#include "hgf/models.hpp"
#include "hgf/random.hpp"

namespace hgf {

/// Rectangular matrix of polynomials on a common chart.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols, int dim);
  static PolyMatrix identity(int n, int dim);
  static PolyMatrix lift(const Matrix& m, int dim);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dim() const { return dim_; }
  Polynomial& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Polynomial& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  bool is_zero() const;
  PolyMatrix transpose() const;
  /// Entries as 0-forms.
  MatForm as_form() const;

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.dim_ == b.dim_ && a.a_ == b.a_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int dim_ = 0;
  std::vector<Polynomial> a_;
};

/// out^i = sum_j m(i,j) x^j with polynomial coefficients.
AlgForm apply(const PolyMatrix& m, const AlgForm& x, const AlgebraPtr& out);

/// Unit upper-triangular polynomial matrix I + N; the inverse is the finite
/// series sum_{j<r} (-N)^j.
class UnipotentMatrix {
 public:
  UnipotentMatrix() = default;
  /// Throws DimensionError unless the diagonal is 1 and the lower part is 0.
  explicit UnipotentMatrix(PolyMatrix m);
  static UnipotentMatrix identity(int r, int dim) { return UnipotentMatrix(PolyMatrix::identity(r, dim)); }

  int r() const { return m_.rows(); }
  int dim() const { return m_.dim(); }
  const PolyMatrix& matrix() const { return m_; }
  UnipotentMatrix inverse() const;
  bool is_identity() const { return m_ == PolyMatrix::identity(r(), dim()); }

  friend UnipotentMatrix operator*(const UnipotentMatrix& a, const UnipotentMatrix& b) {
    return UnipotentMatrix(a.m_ * b.m_);
  }
  friend bool operator==(const UnipotentMatrix& a, const UnipotentMatrix& b) { return a.m_ == b.m_; }
  friend bool operator!=(const UnipotentMatrix& a, const UnipotentMatrix& b) { return !(a == b); }

 private:
  PolyMatrix m_;
};

/// A model together with its unipotent matrix realization: Ad on g by
/// conjugation and the representation blocks on h and l.
class GroupModel {
 public:
  GroupModel(ModelPtr model, Realization real);
  /// Throws AlgebraError when the builtin has no realization.
  static GroupModel builtin(std::string_view name);

  const HigherAlgebra& model() const { return *model_; }
  const ModelPtr& model_ptr() const { return model_; }
  const Realization& realization() const { return real_; }
  int r() const { return real_.r; }

  /// Ad_g X_a = sum_c ad(c,a) X_c.
  PolyMatrix ad_matrix(const UnipotentMatrix& g) const;
  /// Matrix of g |> on the algebra `target` (g, h or l).
  PolyMatrix rep_matrix(const UnipotentMatrix& g, const AlgebraPtr& target) const;
  /// Ad_g or g |> depending on the algebra of x.
  AlgForm act(const UnipotentMatrix& g, const AlgForm& x) const;

  /// Coordinates of a matrix-valued form in the span of the g basis; throws
  /// AlgebraError when some entry falls outside.
  AlgForm to_algebra(const MatForm& m) const;
  MatForm to_matrix(const AlgForm& x) const;
  /// g^-1 dg as a g-valued 1-form.
  AlgForm maurer_cartan(const UnipotentMatrix& g) const;

  /// I + sum over free positions of the given polynomials.
  UnipotentMatrix element(const std::vector<Polynomial>& values) const;
  UnipotentMatrix random_element(Rng& rng, int dim, const RandomLimits& lim) const;

 private:
  ModelPtr model_;
  Realization real_;
  CoordinateMap coords_;
};

/// Group-level mixed relations of the realization on random elements:
/// homomorphism of Ad and of the representations, X|>Y and X|>Z covariance,
/// alpha/beta equivariance, Peiffer covariance and invariance of the mixed pairings.
ValidationReport validate_group_model(const GroupModel& gm, Rng& rng, int dim, int samples);

/// (1 + phi xi) g for N=1, (1 + phi1 xi^1 + phi2 xi^2 + psi xi^1 xi^2) g for N=2.
struct GroupElement {
  int n_type = 1;
  UnipotentMatrix g;
  std::vector<AlgForm> phi;    // h-valued 1-forms, one per auxiliary generator
  std::optional<AlgForm> psi;  // l-valued 2-form (N=2)

  /// N=2 shape (1 + phi xi^1 + psi xi^1 xi^2) g.
  bool simplified() const { return n_type == 1 || phi.at(1).is_zero(); }
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.n_type == b.n_type && a.g == b.g && a.phi == b.phi && a.psi == b.psi;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
};

GroupElement identity_element(const GroupModel& gm, int n_type, int dim);
GroupElement make_element1(const GroupModel& gm, UnipotentMatrix g, AlgForm phi);
GroupElement make_element2(const GroupModel& gm, UnipotentMatrix g, AlgForm phi1, AlgForm phi2, AlgForm psi);
GroupElement random_group_element(const GroupModel& gm, Rng& rng, int n_type, int dim, const RandomLimits& lim,
                                  bool simplified = true);

/// Random generalized p-form with the slot algebras of the model's profile for type N.
AlgGForm random_gform(const HigherAlgebra& m, Rng& rng, int n_type, int dim, int p, const RandomLimits& lim);

GroupElement compose(const GroupModel& gm, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupModel& gm, const GroupElement& a);

/// g^-1 dg - k Ad_{g^-1} alpha(phi) + (g^-1 |> (dphi - k phi phi)) xi, phi phi = 1/2 [phi, phi].
AlgGForm mc2(const GroupModel& gm, const GroupElement& G, const DerivativeContext& ctx);
/// Four-slot 3-Maurer-Cartan form of a simplified N=2 element.
AlgGForm mc3(const GroupModel& gm, const GroupElement& G, const DerivativeContext& ctx);
/// d l + 1/2 [l, l] for l = mc2 or mc3.
AlgGForm mc_residual(const GroupModel& gm, const GroupElement& G, const DerivativeContext& ctx);
/// Adjoint action of G on a generalized form (N=2 needs a simplified element).
AlgGForm adjoint(const GroupModel& gm, const GroupElement& G, const AlgGForm& w);

}  // namespace hgf
