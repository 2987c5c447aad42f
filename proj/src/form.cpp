#include "hgf/form.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hgf/errors.hpp"

namespace hgf {

IndexSet index_set(std::span<const int> one_based_indices) {
  IndexSet s = 0;
  for (int i : one_based_indices) {
    if (i < 1 || i > kMaxChartDim) throw DimensionError("form index out of range");
    IndexSet bit = IndexSet{1} << (i - 1);
    if (s & bit) throw DimensionError("repeated form index");
    s |= bit;
  }
  return s;
}

std::vector<int> index_list(IndexSet s) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (s & (IndexSet{1} << i)) out.push_back(i + 1);
  }
  return out;
}

int index_count(IndexSet s) { return std::popcount(s); }

int merge_sign(IndexSet i, IndexSet j) {
  if (i & j) return 0;
  int inversions = 0;
  for (IndexSet rest = j; rest; rest &= rest - 1) {
    int b = std::countr_zero(rest);
    IndexSet above = ~((IndexSet{2} << b) - 1);
    inversions += std::popcount(i & above);
  }
  return parity_sign(inversions);
}

OrdinaryForm::OrdinaryForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > kMaxChartDim) throw DimensionError("unsupported chart dimension");
}

OrdinaryForm OrdinaryForm::function(const Polynomial& f) {
  OrdinaryForm r(f.dim(), 0);
  if (!f.is_zero()) r.comps_.emplace_back(0, f);
  return r;
}

OrdinaryForm OrdinaryForm::constant(int dim, const Rational& c) {
  return function(Polynomial::constant(dim, c));
}

OrdinaryForm OrdinaryForm::monomial(const Polynomial& f, std::span<const int> indices) {
  const int dim = f.dim();
  for (int i : indices) {
    if (i < 1 || i > dim) throw DimensionError("form index exceeds chart dimension");
  }
  OrdinaryForm r(dim, static_cast<int>(indices.size()));
  std::vector<int> idx(indices.begin(), indices.end());
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end() || f.is_zero()) return r;
  // Sign of the permutation sorting `indices`.
  int inversions = 0;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      if (indices[a] > indices[b]) ++inversions;
    }
  }
  r.comps_.emplace_back(index_set(idx), f * Rational(parity_sign(inversions)));
  return r;
}

OrdinaryForm OrdinaryForm::dx(int dim, int index) {
  int idx[1] = {index};
  return monomial(Polynomial::constant(dim, Rational(1)), idx);
}

Polynomial OrdinaryForm::coefficient(IndexSet s) const {
  auto it = std::lower_bound(comps_.begin(), comps_.end(), s,
                             [](const Component& c, IndexSet key) { return c.first < key; });
  if (it != comps_.end() && it->first == s) return it->second;
  return Polynomial(dim_);
}

void OrdinaryForm::add_component(IndexSet s, const Polynomial& f) {
  if (f.is_zero()) return;
  if (index_count(s) != degree_) throw DimensionError("component index count != form degree");
  if (s >> dim_) throw DimensionError("component index exceeds chart dimension");
  if (f.dim() != dim_) throw DimensionError("coefficient dimension != chart dimension");
  auto it = std::lower_bound(comps_.begin(), comps_.end(), s,
                             [](const Component& c, IndexSet key) { return c.first < key; });
  if (it != comps_.end() && it->first == s) {
    it->second += f;
    if (it->second.is_zero()) comps_.erase(it);
  } else {
    comps_.insert(it, {s, f});
  }
}

std::size_t OrdinaryForm::term_count() const {
  std::size_t n = 0;
  for (const auto& c : comps_) n += c.second.size();
  return n;
}

void OrdinaryForm::check_compatible(const OrdinaryForm& o) const {
  if (dim_ != o.dim_) throw DimensionError("form chart dimension mismatch");
  if (degree_ != o.degree_) throw DimensionError("form degree mismatch");
}

OrdinaryForm& OrdinaryForm::operator+=(const OrdinaryForm& o) {
  check_compatible(o);
  if (o.comps_.empty()) return *this;
  if (comps_.empty()) {
    comps_ = o.comps_;
    return *this;
  }
  std::vector<Component> out;
  out.reserve(comps_.size() + o.comps_.size());
  auto a = comps_.begin();
  auto b = o.comps_.begin();
  while (a != comps_.end() || b != o.comps_.end()) {
    if (b == o.comps_.end() || (a != comps_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == comps_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      a->second += b->second;
      if (!a->second.is_zero()) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  comps_ = std::move(out);
  return *this;
}

OrdinaryForm& OrdinaryForm::operator-=(const OrdinaryForm& o) { return *this += -o; }

OrdinaryForm& OrdinaryForm::operator*=(const Rational& c) {
  if (c.is_zero()) {
    comps_.clear();
    return *this;
  }
  for (auto& comp : comps_) comp.second *= c;
  return *this;
}

OrdinaryForm OrdinaryForm::operator-() const {
  OrdinaryForm r = *this;
  for (auto& comp : r.comps_) comp.second = -comp.second;
  return r;
}

OrdinaryForm OrdinaryForm::times(const Polynomial& f) const {
  if (f.dim() != dim_) throw DimensionError("function dimension != chart dimension");
  OrdinaryForm r(dim_, degree_);
  for (const auto& comp : comps_) {
    Polynomial p = comp.second * f;
    if (!p.is_zero()) r.comps_.emplace_back(comp.first, std::move(p));
  }
  return r;
}

void OrdinaryForm::add_wedge(const OrdinaryForm& a, const OrdinaryForm& b, const Rational& c) {
  if (a.dim_ != b.dim_ || a.dim_ != dim_) throw DimensionError("wedge chart dimension mismatch");
  if (degree_ != a.degree_ + b.degree_) throw DimensionError("wedge accumulator degree mismatch");
  if (a.comps_.empty() || b.comps_.empty() || c.is_zero()) return;
  for (const auto& [ia, pa] : a.comps_) {
    for (const auto& [ib, pb] : b.comps_) {
      int s = merge_sign(ia, ib);
      if (s == 0) continue;
      IndexSet key = ia | ib;
      auto it = std::lower_bound(comps_.begin(), comps_.end(), key,
                                 [](const Component& cc, IndexSet k) { return cc.first < k; });
      if (it != comps_.end() && it->first == key) {
        it->second.add_product(pa, pb, s > 0 ? c : -c);
        if (it->second.is_zero()) comps_.erase(it);
      } else {
        Polynomial p(dim_);
        p.add_product(pa, pb, s > 0 ? c : -c);
        if (!p.is_zero()) comps_.insert(it, {key, std::move(p)});
      }
    }
  }
}

bool operator==(const OrdinaryForm& a, const OrdinaryForm& b) {
  if (a.dim_ != b.dim_ || a.degree_ != b.degree_ || a.comps_.size() != b.comps_.size()) return false;
  for (std::size_t i = 0; i < a.comps_.size(); ++i) {
    if (a.comps_[i].first != b.comps_[i].first || a.comps_[i].second != b.comps_[i].second) return false;
  }
  return true;
}

std::string OrdinaryForm::str() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, p] : comps_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.str() << ")";
    bool w = false;
    for (int i : index_list(s)) {
      os << (w ? "^" : " ") << "dx" << i;
      w = true;
    }
  }
  return os.str();
}

OrdinaryForm wedge(const OrdinaryForm& a, const OrdinaryForm& b) {
  if (a.dim() != b.dim()) throw DimensionError("wedge chart dimension mismatch");
  OrdinaryForm r(a.dim(), a.degree() + b.degree());
  r.add_wedge(a, b, Rational(1));
  return r;
}

OrdinaryForm ext_d(const OrdinaryForm& a) {
  const int n = a.dim();
  OrdinaryForm r(n, a.degree() + 1);
  for (const auto& [s, p] : a.components()) {
    for (int v = 0; v < n; ++v) {
      IndexSet bit = IndexSet{1} << v;
      if (s & bit) continue;
      Polynomial dp = p.derivative(v);
      if (dp.is_zero()) continue;
      // dx^v moves past the indices of s smaller than v.
      int below = std::popcount(s & (bit - 1));
      r.add_component(s | bit, below % 2 == 0 ? dp : -dp);
    }
  }
  return r;
}

OrdinaryForm hodge(const OrdinaryForm& a) {
  const int n = a.dim();
  OrdinaryForm r(n, n - a.degree());
  const IndexSet full = (IndexSet{1} << n) - 1;
  for (const auto& [s, p] : a.components()) {
    IndexSet comp = full & ~s;
    int sg = merge_sign(s, comp);
    r.add_component(comp, sg > 0 ? p : -p);
  }
  return r;
}

OrdinaryForm linear_combine(std::span<const Rational> coeffs, std::span<const OrdinaryForm> forms) {
  if (coeffs.size() != forms.size()) throw std::invalid_argument("coefficient/form count mismatch");
  if (forms.empty()) throw std::invalid_argument("linear_combine of an empty list");
  OrdinaryForm r(forms[0].dim(), forms[0].degree());
  for (std::size_t i = 0; i < forms.size(); ++i) r += forms[i] * coeffs[i];
  return r;
}

Rational integrate_cube(const OrdinaryForm& a) {
  if (a.degree() != a.dim()) throw DimensionError("integrand degree must equal chart dimension");
  Rational total;
  for (const auto& [s, p] : a.components()) total += p.integrate_unit_cube();
  return total;
}

Rational inner(const OrdinaryForm& a, const OrdinaryForm& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) throw DimensionError("inner product degree mismatch");
  return integrate_cube(wedge(a, hodge(b)));
}

}  // namespace hgf
