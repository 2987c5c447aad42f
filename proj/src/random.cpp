#include "hgf/random.hpp"

#include <vector>

namespace hgf {

int Rng::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next() % span);
}

Rational Rng::rational(int max_coeff) {
  int n = uniform(1, max_coeff);
  if (coin()) n = -n;
  return Rational(n, uniform(1, 2));
}

Polynomial Rng::polynomial(int dim, const RandomLimits& lim) {
  std::vector<Term> terms;
  const int count = uniform(1, lim.max_terms);
  for (int t = 0; t < count; ++t) {
    std::vector<int> exps(dim, 0);
    const int deg = uniform(0, lim.max_degree);
    for (int k = 0; k < deg && dim > 0; ++k) ++exps[uniform(0, dim - 1)];
    terms.push_back({make_monomial(exps), rational(lim.max_coeff)});
  }
  return Polynomial::from_terms(dim, std::move(terms));
}

OrdinaryForm Rng::form(int dim, int degree, const RandomLimits& lim) {
  OrdinaryForm f(dim, degree);
  if (degree < 0 || degree > dim) return f;
  std::vector<IndexSet> sets;
  for (IndexSet s = 0; s < (IndexSet{1} << dim); ++s)
    if (index_count(s) == degree) sets.push_back(s);
  // Roughly half of the basis components, at least one.
  bool any = false;
  for (IndexSet s : sets) {
    if (coin()) {
      f.add_component(s, polynomial(dim, lim));
      any = true;
    }
  }
  if (!any) f.add_component(sets[uniform(0, static_cast<int>(sets.size()) - 1)], polynomial(dim, lim));
  return f;
}

AlgForm Rng::alg_form(const AlgebraPtr& alg, int dim, int degree, const RandomLimits& lim) {
  AlgForm a(alg, dim, degree);
  for (int i = 0; i < alg->dim; ++i) {
    if (coin()) a.add(i, form(dim, degree, lim));
  }
  return a;
}

}  // namespace hgf
