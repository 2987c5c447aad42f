#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hgf/rational.hpp"

namespace hgf {

/// Maximum number of chart coordinates supported by the packed monomial key.
inline constexpr int kMaxChartDim = 8;

/// Exponent vector packed one byte per variable (variable i in byte i).
using Monomial = std::uint64_t;

inline int monomial_exponent(Monomial m, int var) {
  return static_cast<int>((m >> (8 * var)) & 0xFFu);
}
inline int monomial_degree(Monomial m) {
  int d = 0;
  for (int i = 0; i < kMaxChartDim; ++i) d += monomial_exponent(m, i);
  return d;
}
Monomial make_monomial(std::span<const int> exps);

struct Term {
  Monomial mono = 0;
  Rational coeff;
};

/// Multivariate polynomial with exact rational coefficients in `dim` variables.
///
/// Terms are kept sorted by packed monomial with no zero coefficients, so two
/// polynomials are equal exactly when their term vectors are equal.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int dim);

  static Polynomial constant(int dim, const Rational& c);
  static Polynomial variable(int dim, int var);  // var is 0-based
  static Polynomial monomial(int dim, std::span<const int> exps, const Rational& c);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Polynomial from_terms(int dim, std::vector<Term> terms);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  /// Adds c * a * b into this polynomial.
  void add_product(const Polynomial& a, const Polynomial& b, const Rational& c);

  /// Partial derivative with respect to variable `var` (0-based).
  Polynomial derivative(int var) const;
  /// Exact integral over the unit cube [0,1]^dim.
  Rational integrate_unit_cube() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_.size() == b.terms_.size() && a.equal_terms(b);
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Human-readable form, e.g. "2*x1^2*x3 - 1/2".
  std::string str() const;

 private:
  bool equal_terms(const Polynomial& o) const;
  void check_dim(const Polynomial& o) const;

  int dim_ = 0;
  std::vector<Term> terms_;
};

}  // namespace hgf
