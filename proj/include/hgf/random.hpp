#pragma once

#include <cstdint>
#include <random>

#include "hgf/algebra.hpp"

namespace hgf {

struct RandomLimits {
  int max_degree = 2;  // total polynomial degree
  int max_terms = 3;   // terms per polynomial
  int max_coeff = 3;   // |numerator| bound
};

/// Seeded deterministic generator. Integer draws use plain modulo reduction on
/// mt19937_64 output so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform-ish integer in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return (next() & 1u) != 0; }
  /// Nonzero rational n/d with |n| <= max_coeff and d in {1, 2}.
  Rational rational(int max_coeff);

  Polynomial polynomial(int dim, const RandomLimits& lim);
  /// Random p-form with a random subset of components filled.
  OrdinaryForm form(int dim, int degree, const RandomLimits& lim);
  AlgForm alg_form(const AlgebraPtr& alg, int dim, int degree, const RandomLimits& lim);

 private:
  std::mt19937_64 eng_;
};

}  // namespace hgf
