#include "hgf/genform.hpp"

#include <sstream>

namespace hgf {

Rational DerivativeContext::constant(int i) const {
  if (n_type == 1 && i == 0) return k;
  if (n_type == 2 && i == 0) return k1;
  if (n_type == 2 && i == 1) return k2;
  throw ProfileError("no auxiliary generator with that index");
}

std::string DerivativeContext::str() const {
  std::ostringstream os;
  os << "N=" << n_type;
  if (n_type == 1) os << " k=" << k.str();
  if (n_type == 2) os << " k1=" << k1.str() << " k2=" << k2.str();
  return os.str();
}

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::Real: return "real";
    case Profile::Single: return "single-algebra";
    case Profile::TwoAlgebra: return "2-algebra";
    case Profile::ThreeAlgebra: return "3-algebra";
    case Profile::Matrix: return "matrix";
  }
  return "?";
}

std::string slot_name(int n_type, int mask) {
  if (n_type < 0 || n_type > 2 || mask < 0 || mask >= (1 << n_type)) throw ProfileError("bad slot index");
  static const char* names[] = {"U", "V", "V'", "W"};
  return names[mask];
}

Profile profile_of(const AlgGForm& w, const HigherAlgebra* model) {
  const int n = w.n_type();
  const auto& alg = [&](int m) { return w.slot(m).algebra(); };
  if (model && n == 1 && model->h && model->h != model->g && alg(0) == model->g && alg(1) == model->h) {
    return Profile::TwoAlgebra;
  }
  if (model && n == 2 && model->l && alg(0) == model->g && alg(1) == model->h && alg(2) == model->h &&
      alg(3) == model->l && !(model->g == model->h && model->h == model->l)) {
    return Profile::ThreeAlgebra;
  }
  for (int m = 1; m < w.num_slots(); ++m) {
    if (alg(m) != alg(0)) throw ProfileError("slot algebras match neither a single algebra nor the model layout");
  }
  return Profile::Single;
}

RealGForm gwedge(const RealGForm& a, const RealGForm& b) {
  return detail::product<OrdinaryForm>(a, b, [](const OrdinaryForm& x, const OrdinaryForm& y) { return wedge(x, y); });
}

MatGForm gwedge(const MatGForm& a, const MatGForm& b) {
  return detail::product<MatForm>(a, b, [](const MatForm& x, const MatForm& y) { return wedge(x, y); });
}

AlgGForm gwedge(const AlgGForm& a, const RealGForm& b) {
  if (profile_of(a) != Profile::Single) throw ProfileError("scalar extension needs a single-algebra operand");
  return detail::product<AlgForm>(a, b, [](const AlgForm& x, const OrdinaryForm& y) { return wedge(x, y); });
}

AlgGForm gwedge(const RealGForm& a, const AlgGForm& b) {
  if (profile_of(b) != Profile::Single) throw ProfileError("scalar extension needs a single-algebra operand");
  return detail::product<AlgForm>(a, b, [](const OrdinaryForm& x, const AlgForm& y) { return wedge(x, y); });
}

namespace {

template <class S>
S identity_lower(const S& s, int, int) {
  return s;
}

}  // namespace

RealGForm gderiv(const RealGForm& w, const DerivativeContext& ctx) {
  return detail::derivative(w, ctx, identity_lower<OrdinaryForm>);
}

MatGForm gderiv(const MatGForm& w, const DerivativeContext& ctx) {
  return detail::derivative(w, ctx, identity_lower<MatForm>);
}

AlgGForm gderiv(const AlgGForm& w, const DerivativeContext& ctx) {
  if (profile_of(w) != Profile::Single) throw ProfileError("derivative of a multi-algebra form needs the model");
  return detail::derivative(w, ctx, identity_lower<AlgForm>);
}

AlgGForm gderiv(const HigherAlgebra& m, const AlgGForm& w, const DerivativeContext& ctx) {
  const Profile p = profile_of(w, &m);
  if (p == Profile::Single) return detail::derivative(w, ctx, identity_lower<AlgForm>);
  return detail::derivative(w, ctx, [&](const AlgForm& s, int from, int) {
    return std::popcount(static_cast<unsigned>(from)) == 1 ? apply_alpha(m, s) : apply_beta(m, s);
  });
}

AlgGForm gbracket(const HigherAlgebra& m, const AlgGForm& a, const AlgGForm& b) {
  if (a.n_type() != b.n_type()) throw ProfileError("bracket of forms of different type N");
  const Profile pa = profile_of(a, &m);
  const Profile pb = profile_of(b, &m);
  if (pa != pb) throw ProfileError("bracket of forms with different profiles");
  if (pa == Profile::Single) {
    if (a.slot(0).algebra() != b.slot(0).algebra()) throw ProfileError("bracket of forms in different algebras");
    return detail::product<AlgForm>(a, b, [](const AlgForm& x, const AlgForm& y) { return bracket(x, y); });
  }
  const int p = a.degree();
  const int q = b.degree();
  const Rational spq(parity_sign(p * q));
  const auto& U1 = a.slot(0);
  const auto& U2 = b.slot(0);
  std::vector<AlgForm> out;
  out.push_back(bracket(U1, U2));
  if (pa == Profile::TwoAlgebra) {
    out.push_back(act(m, U1, b.slot(1)) - act(m, U2, a.slot(1)) * spq);
    return AlgGForm(1, p + q, std::move(out));
  }
  out.push_back(act(m, U1, b.slot(1)) - act(m, U2, a.slot(1)) * spq);
  out.push_back(act(m, U1, b.slot(2)) - act(m, U2, a.slot(2)) * spq);
  AlgForm top = act(m, U1, b.slot(3)) - act(m, U2, a.slot(3)) * spq;
  top += peiffer(m, a.slot(1), b.slot(2)) * Rational(parity_sign(q + 1));
  top -= peiffer(m, b.slot(1), a.slot(2)) * Rational(parity_sign(p * q + p + 1));
  out.push_back(std::move(top));
  return AlgGForm(2, p + q, std::move(out));
}

OrdinaryForm gpairing(const HigherAlgebra& m, const AlgGForm& a, const AlgGForm& b, const DerivativeContext& ctx) {
  if (a.n_type() != b.n_type() || ctx.n_type != a.n_type()) throw ProfileError("pairing of mismatched types N");
  const Profile pa = profile_of(a, &m);
  if (pa != profile_of(b, &m)) throw ProfileError("pairing of forms with different profiles");
  const Rational spq(parity_sign(a.degree() * b.degree()));
  if (pa == Profile::TwoAlgebra) {
    return pair_forms(m, a.slot(0), b.slot(1), PairingKind::GH) +
           pair_forms(m, b.slot(0), a.slot(1), PairingKind::GH) * spq;
  }
  if (pa == Profile::ThreeAlgebra) {
    OrdinaryForm r = pair_forms(m, a.slot(0), b.slot(3), PairingKind::GL) +
                     pair_forms(m, b.slot(0), a.slot(3), PairingKind::GL) * spq;
    if (!ctx.k1.is_zero()) r -= pair_forms(m, a.slot(1), b.slot(2), PairingKind::HAnti) * ctx.k1;
    if (!ctx.k2.is_zero()) r -= pair_forms(m, b.slot(1), a.slot(2), PairingKind::HAnti) * (spq * ctx.k2);
    return r;
  }
  throw ProfileError("graded pairing needs a 2-algebra (N=1) or 3-algebra (N=2) profile");
}

namespace {

Rational slot_inner(const HigherAlgebra& m, const AlgForm& x, const AlgForm& y) {
  if (x.algebra() != y.algebra()) throw ProfileError("inner product of forms in different algebras");
  PairingKind kind;
  if (x.algebra() == m.g) {
    kind = PairingKind::SymG;
  } else if (x.algebra() == m.h) {
    kind = PairingKind::SymH;
  } else if (x.algebra() == m.l) {
    kind = PairingKind::SymL;
  } else {
    throw ProfileError("slot algebra does not belong to the model");
  }
  const auto& sym = m.pairings.get(kind);
  if (!sym) throw ProfileError(std::string("model has no ") + std::string(to_string(kind)) + " form");
  Rational r;
  for (int i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < y.size(); ++j) {
      const Rational& c = (*sym)(i, j);
      if (!c.is_zero() && !y[j].is_zero()) r += c * inner(x[i], y[j]);
    }
  }
  return r;
}

}  // namespace

Rational ginner(const HigherAlgebra& m, const AlgGForm& a, const AlgGForm& b) {
  if (a.n_type() != b.n_type()) throw ProfileError("inner product of mismatched types N");
  if (a.degree() != b.degree()) throw DimensionError("inner product needs equal degrees");
  Rational r;
  for (int s = 0; s < a.num_slots(); ++s) r += slot_inner(m, a.slot(s), b.slot(s));
  return r;
}

Rational ginner(const RealGForm& a, const RealGForm& b) {
  if (a.n_type() != b.n_type()) throw ProfileError("inner product of mismatched types N");
  if (a.degree() != b.degree()) throw DimensionError("inner product needs equal degrees");
  Rational r;
  for (int s = 0; s < a.num_slots(); ++s) r += inner(a.slot(s), b.slot(s));
  return r;
}

AlgGForm zero_like(const AlgGForm& like, int degree) {
  std::vector<AlgForm> slots;
  for (int s = 0; s < like.num_slots(); ++s) {
    slots.emplace_back(like.slot(s).algebra(), like.dim(), degree + std::popcount(static_cast<unsigned>(s)));
  }
  return AlgGForm(like.n_type(), degree, std::move(slots));
}

AlgGForm zero_gform(const HigherAlgebra& m, int n_type, int dim, int degree) {
  std::vector<AlgForm> slots;
  if (n_type == 0) {
    slots.emplace_back(m.g, dim, degree);
  } else if (n_type == 1) {
    if (!m.h) throw ProfileError("type N=1 forms need a crossed module");
    slots.emplace_back(m.g, dim, degree);
    slots.emplace_back(m.h, dim, degree + 1);
  } else if (n_type == 2) {
    if (!m.h || !m.l) throw ProfileError("type N=2 forms need a 2-crossed module");
    slots.emplace_back(m.g, dim, degree);
    slots.emplace_back(m.h, dim, degree + 1);
    slots.emplace_back(m.h, dim, degree + 1);
    slots.emplace_back(m.l, dim, degree + 2);
  } else {
    throw ProfileError("type N must be 0, 1 or 2");
  }
  return AlgGForm(n_type, degree, std::move(slots));
}

RealGForm zero_real(int n_type, int dim, int degree) {
  if (n_type < 0 || n_type > 2) throw ProfileError("type N must be 0, 1 or 2");
  std::vector<OrdinaryForm> slots;
  for (int s = 0; s < (1 << n_type); ++s) slots.emplace_back(dim, degree + std::popcount(static_cast<unsigned>(s)));
  return RealGForm(n_type, degree, std::move(slots));
}

RealGForm real_one(int n_type, int dim) {
  RealGForm z = zero_real(n_type, dim, 0);
  std::vector<OrdinaryForm> slots = z.slots();
  slots[0] = OrdinaryForm::constant(dim, Rational(1));
  return RealGForm(n_type, 0, std::move(slots));
}

}  // namespace hgf
