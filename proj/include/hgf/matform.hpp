#pragma once

#include <string>
#include <vector>

#include "hgf/form.hpp"

namespace hgf {

/// r x r matrix whose entries are p-forms on a common chart; the product is
/// the matrix product with wedge multiplication of entries.
class MatForm {
 public:
  MatForm() = default;
  MatForm(int r, int dim, int degree);
  static MatForm identity(int r, int dim);
  static MatForm from_functions(int r, const std::vector<Polynomial>& entries);

  int r() const { return r_; }
  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const OrdinaryForm& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * r_ + j]; }
  void add(int i, int j, const OrdinaryForm& f);
  bool is_zero() const;

  MatForm& operator+=(const MatForm& o);
  MatForm& operator-=(const MatForm& o);
  MatForm& operator*=(const Rational& c);
  friend MatForm operator+(MatForm a, const MatForm& b) { return a += b; }
  friend MatForm operator-(MatForm a, const MatForm& b) { return a -= b; }
  friend MatForm operator*(MatForm a, const Rational& c) { return a *= c; }
  friend MatForm operator*(const Rational& c, MatForm a) { return a *= c; }
  MatForm operator-() const;
  friend bool operator==(const MatForm& a, const MatForm& b);
  friend bool operator!=(const MatForm& a, const MatForm& b) { return !(a == b); }

  std::string str() const;

 private:
  void check_compatible(const MatForm& o) const;

  int r_ = 0;
  int dim_ = 0;
  int degree_ = 0;
  std::vector<OrdinaryForm> e_;
};

/// (a b)_ij = sum_k a_ik ^ b_kj.
MatForm wedge(const MatForm& a, const MatForm& b);
MatForm ext_d(const MatForm& a);

}  // namespace hgf
