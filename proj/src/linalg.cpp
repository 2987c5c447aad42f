#include "hgf/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace hgf {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& r) { return r.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

int Matrix::rank() const {
  Matrix m = *this;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i) {
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(m(r, j), m(piv, j));
    for (int i = r + 1; i < rows_; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) / m(r, c);
      for (int j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of a non-square matrix");
  const int n = rows_;
  Matrix m = *this;
  Matrix inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) throw std::domain_error("singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(m(c, j), m(piv, j));
      std::swap(inv(c, j), inv(piv, j));
    }
    Rational d = m(c, c);
    for (int j = 0; j < n; ++j) {
      m(c, j) /= d;
      inv(c, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (int j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols_ != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec r(a.rows_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j)
      if (!v[j].is_zero()) r[i] += a(i, j) * v[j];
  return r;
}

std::vector<std::vector<Rational>> Matrix::to_rows() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

Vec unit_vector(int n, int i) {
  Vec v(n);
  v[i] = Rational(1);
  return v;
}

Vec& operator+=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }

Vec operator*(const Rational& c, Vec a) {
  for (auto& x : a) x *= c;
  return a;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << ")";
  return os.str();
}

void Bilinear::add(int a, int b, int c, const Rational& v) {
  if (a < 0 || a >= dim_a || b < 0 || b >= dim_b || c < 0 || c >= dim_c) {
    throw std::out_of_range("bilinear tensor index out of range");
  }
  if (!v.is_zero()) entries.push_back({a, b, c, v});
}

void Bilinear::normalize() {
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  });
  std::vector<Entry> out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().a == e.a && out.back().b == e.b && out.back().c == e.c) {
      out.back().v += e.v;
    } else {
      if (!out.empty() && out.back().v.is_zero()) out.pop_back();
      out.push_back(e);
    }
  }
  if (!out.empty() && out.back().v.is_zero()) out.pop_back();
  entries = std::move(out);
}

Vec Bilinear::apply(const Vec& u, const Vec& v) const {
  if (static_cast<int>(u.size()) != dim_a || static_cast<int>(v.size()) != dim_b) {
    throw std::invalid_argument("bilinear argument size mismatch");
  }
  Vec out(dim_c);
  for (const auto& e : entries) {
    if (u[e.a].is_zero() || v[e.b].is_zero()) continue;
    out[e.c] += e.v * u[e.a] * v[e.b];
  }
  return out;
}

Rational Bilinear::at(int a, int b, int c) const {
  Rational r;
  for (const auto& e : entries)
    if (e.a == a && e.b == b && e.c == c) r += e.v;
  return r;
}

}  // namespace hgf
