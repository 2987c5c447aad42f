#pragma once

#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgf/algebra.hpp"
#include "hgf/errors.hpp"
#include "hgf/matform.hpp"

namespace hgf {

/// Constant derivatives of the auxiliary basis: d(xi) = k for N=1,
/// d(xi^1) = k1 and d(xi^2) = k2 for N=2.
struct DerivativeContext {
  int n_type = 0;
  Rational k;
  Rational k1;
  Rational k2;

  static DerivativeContext type0() { return {}; }
  static DerivativeContext type1(const Rational& k) { return {1, k, Rational(), Rational()}; }
  static DerivativeContext type2(const Rational& k1, const Rational& k2) { return {2, Rational(), k1, k2}; }
  /// d(xi^{i+1}) for the 0-based auxiliary index i.
  Rational constant(int i) const;
  std::string str() const;
};

/// Generalized p-form of type N: slot m holds the coefficient of xi^S where
/// S is the bitmask m (bit 0 <-> xi^1, bit 1 <-> xi^2), of degree p + |S|.
template <class S>
class GenForm {
 public:
  GenForm() = default;
  GenForm(int n_type, int degree, std::vector<S> slots) : n_(n_type), p_(degree), slots_(std::move(slots)) {
    if (n_ < 0 || n_ > 2) throw ProfileError("type N must be 0, 1 or 2");
    if (static_cast<int>(slots_.size()) != (1 << n_)) throw ProfileError("slot count != 2^N");
    for (int m = 0; m < num_slots(); ++m) {
      if (slots_[m].degree() != p_ + std::popcount(static_cast<unsigned>(m))) {
        throw DimensionError("slot degree does not match the generalized degree");
      }
      if (slots_[m].dim() != slots_[0].dim()) throw DimensionError("slots live on different charts");
    }
  }

  int n_type() const { return n_; }
  int degree() const { return p_; }
  int dim() const { return slots_.empty() ? 0 : slots_[0].dim(); }
  int num_slots() const { return 1 << n_; }
  const S& slot(int mask) const { return slots_.at(mask); }
  const std::vector<S>& slots() const { return slots_; }
  bool is_zero() const {
    for (const auto& s : slots_)
      if (!s.is_zero()) return false;
    return true;
  }

  GenForm& operator+=(const GenForm& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < slots_.size(); ++i) slots_[i] += o.slots_[i];
    return *this;
  }
  GenForm& operator-=(const GenForm& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < slots_.size(); ++i) slots_[i] -= o.slots_[i];
    return *this;
  }
  GenForm& operator*=(const Rational& c) {
    for (auto& s : slots_) s *= c;
    return *this;
  }
  friend GenForm operator+(GenForm a, const GenForm& b) { return a += b; }
  friend GenForm operator-(GenForm a, const GenForm& b) { return a -= b; }
  friend GenForm operator*(GenForm a, const Rational& c) { return a *= c; }
  friend GenForm operator*(const Rational& c, GenForm a) { return a *= c; }
  GenForm operator-() const {
    GenForm r = *this;
    for (auto& s : r.slots_) s = -s;
    return r;
  }
  friend bool operator==(const GenForm& a, const GenForm& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.slots_ == b.slots_;
  }
  friend bool operator!=(const GenForm& a, const GenForm& b) { return !(a == b); }

 private:
  void check_compatible(const GenForm& o) const {
    if (n_ != o.n_) throw ProfileError("generalized forms of different type N");
    if (p_ != o.p_) throw DimensionError("generalized forms of different degree");
  }

  int n_ = 0;
  int p_ = 0;
  std::vector<S> slots_;
};

using RealGForm = GenForm<OrdinaryForm>;
using AlgGForm = GenForm<AlgForm>;
using MatGForm = GenForm<MatForm>;

/// Value profile of an algebra-valued generalized form.
enum class Profile { Real, Single, TwoAlgebra, ThreeAlgebra, Matrix };
std::string_view to_string(Profile p);

/// Single when all slots share one algebra; otherwise TwoAlgebra/ThreeAlgebra
/// if the slot algebras match the model's (g, h[, l]) layout. Throws ProfileError.
Profile profile_of(const AlgGForm& w, const HigherAlgebra* model = nullptr);

/// Slot name for a xi-mask: "U", "V", "V'", "W" (N=1 uses "U", "V").
std::string slot_name(int n_type, int mask);

namespace detail {

inline int sign_of(int e) { return parity_sign(e); }

/// Generic product of generalized forms:
/// (a xi^S)(b xi^T) = (-1)^{|S| deg b} sign(S,T) (a b) xi^{S u T}.
template <class R, class A, class B, class Mul>
GenForm<R> product(const GenForm<A>& a, const GenForm<B>& b, Mul mul) {
  if (a.n_type() != b.n_type()) throw ProfileError("product of generalized forms of different type N");
  const int n = a.n_type();
  std::vector<std::optional<R>> out(1 << n);
  for (int s = 0; s < (1 << n); ++s) {
    for (int t = 0; t < (1 << n); ++t) {
      if (s & t) continue;
      const int deg_b = b.degree() + std::popcount(static_cast<unsigned>(t));
      const int sg = sign_of(std::popcount(static_cast<unsigned>(s)) * deg_b) *
                     merge_sign(static_cast<IndexSet>(s), static_cast<IndexSet>(t));
      R term = mul(a.slot(s), b.slot(t));
      if (sg < 0) term = -term;
      if (out[s | t]) {
        *out[s | t] += term;
      } else {
        out[s | t] = std::move(term);
      }
    }
  }
  std::vector<R> slots;
  for (auto& o : out) slots.push_back(std::move(*o));
  return GenForm<R>(n, a.degree() + b.degree(), std::move(slots));
}

/// d(a xi^S) = da xi^S + (-1)^{deg a} a d(xi^S), d(xi^i) = k^i, with `lower`
/// mapping a slot value into the slot that loses one xi.
template <class S, class Lower>
GenForm<S> derivative(const GenForm<S>& w, const DerivativeContext& ctx, Lower lower) {
  const int n = w.n_type();
  if (ctx.n_type != n) throw ProfileError("derivative context type N != form type N");
  std::vector<S> out;
  for (int m = 0; m < w.num_slots(); ++m) out.push_back(ext_d(w.slot(m)));
  for (int m = 0; m < w.num_slots(); ++m) {
    const int deg = w.degree() + std::popcount(static_cast<unsigned>(m));
    for (int i = 0; i < n; ++i) {
      if (!(m & (1 << i))) continue;
      const Rational c = ctx.constant(i);
      if (c.is_zero()) continue;
      const int pos = std::popcount(static_cast<unsigned>(m & ((1 << i) - 1)));
      const int target = m & ~(1 << i);
      out[target] += lower(w.slot(m), m, target) * (c * Rational(sign_of(deg + pos)));
    }
  }
  return GenForm<S>(n, w.degree() + 1, std::move(out));
}

}  // namespace detail

/// split(A_(N)) = (A_(N-1), A'_(N-1)) with A_(N) = A_(N-1) + A'_(N-1) xi^N.
template <class S>
std::pair<GenForm<S>, GenForm<S>> split(const GenForm<S>& w) {
  const int n = w.n_type();
  if (n < 1) throw ProfileError("split needs type N >= 1");
  const int top = 1 << (n - 1);
  std::vector<S> lo, hi;
  for (int m = 0; m < top; ++m) {
    lo.push_back(w.slot(m));
    hi.push_back(w.slot(m | top));
  }
  return {GenForm<S>(n - 1, w.degree(), std::move(lo)), GenForm<S>(n - 1, w.degree() + 1, std::move(hi))};
}

template <class S>
GenForm<S> join(const GenForm<S>& lo, const GenForm<S>& hi) {
  if (lo.n_type() != hi.n_type() || lo.n_type() > 1) throw ProfileError("join needs two forms of equal type N <= 1");
  if (hi.degree() != lo.degree() + 1) throw DimensionError("join needs degrees (p, p+1)");
  std::vector<S> slots = lo.slots();
  for (const auto& s : hi.slots()) slots.push_back(s);
  return GenForm<S>(lo.n_type() + 1, lo.degree(), std::move(slots));
}

RealGForm gwedge(const RealGForm& a, const RealGForm& b);
MatGForm gwedge(const MatGForm& a, const MatGForm& b);
/// Scalar extension; the algebra-valued operand must have the single-algebra profile.
AlgGForm gwedge(const AlgGForm& a, const RealGForm& b);
AlgGForm gwedge(const RealGForm& a, const AlgGForm& b);

RealGForm gderiv(const RealGForm& w, const DerivativeContext& ctx);
MatGForm gderiv(const MatGForm& w, const DerivativeContext& ctx);
/// Single-algebra profile (no alpha/beta in the lowering).
AlgGForm gderiv(const AlgGForm& w, const DerivativeContext& ctx);
/// Any profile; 2-/3-algebra profiles lower through alpha and beta.
AlgGForm gderiv(const HigherAlgebra& m, const AlgGForm& w, const DerivativeContext& ctx);

/// Graded bracket. Single-algebra forms use the product rule with the Lie
/// bracket; 2-/3-algebra forms use the explicit slot formulas.
AlgGForm gbracket(const HigherAlgebra& m, const AlgGForm& a, const AlgGForm& b);
/// Graded pairing collapsed to an ordinary (p+q+N)-form.
OrdinaryForm gpairing(const HigherAlgebra& m, const AlgGForm& a, const AlgGForm& b, const DerivativeContext& ctx);
/// Sum of slotwise integrals of <slot1, *slot2> with sym_g / sym_h / sym_l.
Rational ginner(const HigherAlgebra& m, const AlgGForm& a, const AlgGForm& b);
Rational ginner(const RealGForm& a, const RealGForm& b);

/// Zero form with the slot algebras of `like` shifted to degree p.
AlgGForm zero_like(const AlgGForm& like, int degree);
/// Zero 2-/3-algebra (or N=0 g-valued) form for the model.
AlgGForm zero_gform(const HigherAlgebra& m, int n_type, int dim, int degree);
RealGForm zero_real(int n_type, int dim, int degree);
/// Real generalized 0-form equal to the constant 1.
RealGForm real_one(int n_type, int dim);

}  // namespace hgf
