#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hgf/polynomial.hpp"

namespace hgf {

/// Subset of {1..n} encoded as a bitmask (bit i <-> coordinate index i+1).
using IndexSet = std::uint32_t;

IndexSet index_set(std::span<const int> one_based_indices);
std::vector<int> index_list(IndexSet s);  // strictly increasing, 1-based
int index_count(IndexSet s);

/// Sign of the permutation that sorts the concatenation (I, J); 0 if they overlap.
int merge_sign(IndexSet i, IndexSet j);

/// Polynomial differential p-form on a chart of R^n.
///
/// Forms with p < 0 or p > n are identically zero but keep their nominal
/// degree, so degree bookkeeping in generalized forms stays uniform.
class OrdinaryForm {
 public:
  using Component = std::pair<IndexSet, Polynomial>;

  OrdinaryForm() = default;
  OrdinaryForm(int dim, int degree);

  static OrdinaryForm zero(int dim, int degree) { return OrdinaryForm(dim, degree); }
  static OrdinaryForm function(const Polynomial& f);
  static OrdinaryForm constant(int dim, const Rational& c);
  /// f dx^{i1} ^ ... ^ dx^{ip}; indices are 1-based and must be distinct
  /// (they are sorted and the permutation sign is applied).
  static OrdinaryForm monomial(const Polynomial& f, std::span<const int> indices);
  static OrdinaryForm dx(int dim, int index);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return comps_.empty(); }
  const std::vector<Component>& components() const { return comps_; }
  /// Coefficient of dx^I (zero polynomial when absent).
  Polynomial coefficient(IndexSet s) const;
  /// Adds f dx^I for a sorted index set I with |I| == degree.
  void add_component(IndexSet s, const Polynomial& f);
  std::size_t term_count() const;

  OrdinaryForm& operator+=(const OrdinaryForm& o);
  OrdinaryForm& operator-=(const OrdinaryForm& o);
  OrdinaryForm& operator*=(const Rational& c);
  friend OrdinaryForm operator+(OrdinaryForm a, const OrdinaryForm& b) { return a += b; }
  friend OrdinaryForm operator-(OrdinaryForm a, const OrdinaryForm& b) { return a -= b; }
  friend OrdinaryForm operator*(OrdinaryForm a, const Rational& c) { return a *= c; }
  friend OrdinaryForm operator*(const Rational& c, OrdinaryForm a) { return a *= c; }
  OrdinaryForm operator-() const;

  /// Multiplies every coefficient by the function f (a 0-form product).
  OrdinaryForm times(const Polynomial& f) const;

  /// this += c * (a ^ b), without materializing the intermediate product.
  void add_wedge(const OrdinaryForm& a, const OrdinaryForm& b, const Rational& c);

  friend bool operator==(const OrdinaryForm& a, const OrdinaryForm& b);
  friend bool operator!=(const OrdinaryForm& a, const OrdinaryForm& b) { return !(a == b); }

  std::string str() const;

 private:
  void check_compatible(const OrdinaryForm& o) const;
  bool in_range() const { return degree_ >= 0 && degree_ <= dim_; }

  int dim_ = 0;
  int degree_ = 0;
  std::vector<Component> comps_;  // sorted by IndexSet, no zero polynomials
};

OrdinaryForm wedge(const OrdinaryForm& a, const OrdinaryForm& b);
OrdinaryForm ext_d(const OrdinaryForm& a);
OrdinaryForm hodge(const OrdinaryForm& a);
/// Componentwise sum of coeffs[i] * forms[i]; all forms share dim and degree.
OrdinaryForm linear_combine(std::span<const Rational> coeffs, std::span<const OrdinaryForm> forms);
/// Exact integral of a top-degree form over [0,1]^n.
Rational integrate_cube(const OrdinaryForm& a);
/// Symmetric inner product ((a, b)) = integral of a ^ *b over the unit cube.
Rational inner(const OrdinaryForm& a, const OrdinaryForm& b);

}  // namespace hgf
