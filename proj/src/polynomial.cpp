#include "hgf/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hgf {

Monomial make_monomial(std::span<const int> exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxChartDim)) {
    throw std::invalid_argument("too many variables in monomial");
  }
  Monomial m = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("exponent out of range");
    m |= static_cast<Monomial>(exps[i]) << (8 * i);
  }
  return m;
}

Polynomial::Polynomial(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxChartDim) throw std::invalid_argument("unsupported chart dimension");
}

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial p(dim);
  if (!c.is_zero()) p.terms_.push_back({0, c});
  return p;
}

Polynomial Polynomial::variable(int dim, int var) {
  if (var < 0 || var >= dim) throw std::out_of_range("variable index out of range");
  Polynomial p(dim);
  p.terms_.push_back({Monomial{1} << (8 * var), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(int dim, std::span<const int> exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != dim) throw std::invalid_argument("exponent vector length != dim");
  Polynomial p(dim);
  if (!c.is_zero()) p.terms_.push_back({make_monomial(exps), c});
  return p;
}

Polynomial Polynomial::from_terms(int dim, std::vector<Term> terms) {
  Polynomial p(dim);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, monomial_degree(t.mono));
  return d;
}

void Polynomial::check_dim(const Polynomial& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("polynomial dimension mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  check_dim(o);
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono < a->mono) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (!c.is_zero()) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void Polynomial::add_product(const Polynomial& a, const Polynomial& b, const Rational& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) return;
  a.check_dim(b);
  if (a.total_degree() + b.total_degree() > 255) throw std::overflow_error("polynomial degree overflow");
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    Rational ca = ta.coeff * c;
    for (const auto& tb : b.terms_) prod.push_back({ta.mono + tb.mono, ca * tb.coeff});
  }
  *this += from_terms(a.dim_, std::move(prod));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.dim());
  r.add_product(a, b, Rational(1));
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= dim_) throw std::out_of_range("variable index out of range");
  Polynomial r(dim_);
  const Monomial unit = Monomial{1} << (8 * var);
  for (const auto& t : terms_) {
    int e = monomial_exponent(t.mono, var);
    if (e == 0) continue;
    r.terms_.push_back({t.mono - unit, t.coeff * Rational(e)});
  }
  // Subtracting a fixed unit keeps the relative order of surviving keys.
  return r;
}

Rational Polynomial::integrate_unit_cube() const {
  Rational total;
  for (const auto& t : terms_) {
    mpz_class den = 1;
    for (int i = 0; i < dim_; ++i) den *= monomial_exponent(t.mono, i) + 1;
    total += t.coeff / Rational(mpq_class(den));
  }
  return total;
}

bool Polynomial::equal_terms(const Polynomial& o) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->coeff;
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    const mpq_class& q = mag.raw();
    std::string cs = q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
    bool wrote = false;
    if (!unit || it->mono == 0) {
      os << cs;
      wrote = true;
    }
    for (int v = 0; v < dim_; ++v) {
      int e = monomial_exponent(it->mono, v);
      if (e == 0) continue;
      if (wrote) os << "*";
      os << "x" << (v + 1);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace hgf
