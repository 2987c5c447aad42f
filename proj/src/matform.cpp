#include "hgf/matform.hpp"

#include <sstream>

#include "hgf/errors.hpp"

namespace hgf {

MatForm::MatForm(int r, int dim, int degree)
    : r_(r), dim_(dim), degree_(degree), e_(static_cast<std::size_t>(r) * r, OrdinaryForm(dim, degree)) {
  if (r < 1) throw DimensionError("matrix size must be positive");
}

MatForm MatForm::identity(int r, int dim) {
  MatForm m(r, dim, 0);
  for (int i = 0; i < r; ++i) m.add(i, i, OrdinaryForm::constant(dim, Rational(1)));
  return m;
}

MatForm MatForm::from_functions(int r, const std::vector<Polynomial>& entries) {
  if (static_cast<int>(entries.size()) != r * r) throw DimensionError("entry count != r*r");
  MatForm m(r, entries[0].dim(), 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m.add(i, j, OrdinaryForm::function(entries[static_cast<std::size_t>(i) * r + j]));
  return m;
}

void MatForm::add(int i, int j, const OrdinaryForm& f) { e_.at(static_cast<std::size_t>(i) * r_ + j) += f; }

bool MatForm::is_zero() const {
  for (const auto& f : e_)
    if (!f.is_zero()) return false;
  return true;
}

void MatForm::check_compatible(const MatForm& o) const {
  if (r_ != o.r_) throw DimensionError("matrix size mismatch");
  if (dim_ != o.dim_ || degree_ != o.degree_) throw DimensionError("matrix form degree/dim mismatch");
}

MatForm& MatForm::operator+=(const MatForm& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

MatForm& MatForm::operator-=(const MatForm& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

MatForm& MatForm::operator*=(const Rational& c) {
  for (auto& f : e_) f *= c;
  return *this;
}

MatForm MatForm::operator-() const {
  MatForm m = *this;
  for (auto& f : m.e_) f = -f;
  return m;
}

bool operator==(const MatForm& a, const MatForm& b) {
  return a.r_ == b.r_ && a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.e_ == b.e_;
}

std::string MatForm::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < r_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

MatForm wedge(const MatForm& a, const MatForm& b) {
  if (a.r() != b.r() || a.dim() != b.dim()) throw DimensionError("matrix wedge shape mismatch");
  const int r = a.r();
  MatForm out(r, a.dim(), a.degree() + b.degree());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      OrdinaryForm acc(a.dim(), a.degree() + b.degree());
      for (int k = 0; k < r; ++k) acc.add_wedge(a(i, k), b(k, j), Rational(1));
      out.add(i, j, acc);
    }
  return out;
}

MatForm ext_d(const MatForm& a) {
  MatForm out(a.r(), a.dim(), a.degree() + 1);
  for (int i = 0; i < a.r(); ++i)
    for (int j = 0; j < a.r(); ++j) out.add(i, j, ext_d(a(i, j)));
  return out;
}

}  // namespace hgf
