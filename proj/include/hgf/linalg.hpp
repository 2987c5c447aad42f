#pragma once

#include <string>
#include <vector>

#include "hgf/rational.hpp"

namespace hgf {

using Vec = std::vector<Rational>;

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  Matrix transpose() const;
  int rank() const;
  /// Exact inverse; throws std::domain_error when singular.
  Matrix inverse() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<std::vector<Rational>> to_rows() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

Vec unit_vector(int n, int i);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(const Rational& c, Vec a);
bool is_zero(const Vec& v);
/// "(a, b, c)" with rationals in num/den form.
std::string vec_str(const Vec& v);

/// Sparse bilinear map U x V -> W with out_c = sum T[a,b,c] u_a v_b.
struct Bilinear {
  struct Entry {
    int a;
    int b;
    int c;
    Rational v;
  };
  int dim_a = 0;
  int dim_b = 0;
  int dim_c = 0;
  std::vector<Entry> entries;

  Bilinear() = default;
  Bilinear(int da, int db, int dc) : dim_a(da), dim_b(db), dim_c(dc) {}

  /// Adds v to T[a,b,c]; zero totals are dropped by normalize().
  void add(int a, int b, int c, const Rational& v);
  /// Merges duplicate keys, removes zeros, sorts by (a,b,c).
  void normalize();
  Vec apply(const Vec& u, const Vec& v) const;
  /// Value of T[a,b,c] (linear search; for serialization and tests).
  Rational at(int a, int b, int c) const;
};

}  // namespace hgf
