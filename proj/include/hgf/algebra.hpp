#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgf/form.hpp"
#include "hgf/linalg.hpp"

namespace hgf {

/// Finite-dimensional Lie algebra given by structure constants
/// [X_a, X_b] = f[a,b,c] X_c.
struct LieAlgebra {
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;
  Bilinear f;

  Vec bracket(const Vec& x, const Vec& y) const { return f.apply(x, y); }
};
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Normalizes f and fills default labels ("X1", ...) when none are given.
AlgebraPtr make_lie_algebra(std::string name, int dim, Bilinear f, std::vector<std::string> labels = {});
AlgebraPtr make_abelian(std::string name, int dim, std::vector<std::string> labels = {});

/// Algebra-valued p-form A = A^a (x) X_a.
class AlgForm {
 public:
  AlgForm() = default;
  /// The zero form.
  AlgForm(AlgebraPtr alg, int dim, int degree);
  AlgForm(AlgebraPtr alg, std::vector<OrdinaryForm> comps);
  /// f (x) X_a.
  static AlgForm basis(AlgebraPtr alg, const OrdinaryForm& f, int a);

  const AlgebraPtr& algebra() const { return alg_; }
  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(comps_.size()); }
  const OrdinaryForm& operator[](int a) const { return comps_.at(a); }
  const std::vector<OrdinaryForm>& components() const { return comps_; }
  bool is_zero() const;
  std::size_t term_count() const;

  void add(int a, const OrdinaryForm& f);
  void add_wedge(int a, const OrdinaryForm& x, const OrdinaryForm& y, const Rational& c);

  AlgForm& operator+=(const AlgForm& o);
  AlgForm& operator-=(const AlgForm& o);
  AlgForm& operator*=(const Rational& c);
  friend AlgForm operator+(AlgForm a, const AlgForm& b) { return a += b; }
  friend AlgForm operator-(AlgForm a, const AlgForm& b) { return a -= b; }
  friend AlgForm operator*(AlgForm a, const Rational& c) { return a *= c; }
  friend AlgForm operator*(const Rational& c, AlgForm a) { return a *= c; }
  AlgForm operator-() const;
  friend bool operator==(const AlgForm& a, const AlgForm& b);
  friend bool operator!=(const AlgForm& a, const AlgForm& b) { return !(a == b); }

  std::string str() const;

 private:
  void check_compatible(const AlgForm& o) const;

  AlgebraPtr alg_;
  int dim_ = 0;
  int degree_ = 0;
  std::vector<OrdinaryForm> comps_;
};

AlgForm ext_d(const AlgForm& a);
AlgForm hodge(const AlgForm& a);
AlgForm wedge(const OrdinaryForm& f, const AlgForm& a);
AlgForm wedge(const AlgForm& a, const OrdinaryForm& f);
/// out^c = sum T[a,b,c] x^a ^ y^b.
AlgForm contract(const Bilinear& t, const AlgForm& x, const AlgForm& y, const AlgebraPtr& out);
/// out^i = sum m(i,j) x^j.
AlgForm apply_linear(const Matrix& m, const AlgForm& x, const AlgebraPtr& out);
/// sum p(a,b) x^a ^ y^b.
OrdinaryForm pair_matrix(const Matrix& p, const AlgForm& x, const AlgForm& y);
/// [A,B] = A^a ^ B^b (x) [X_a, X_b].
AlgForm bracket(const AlgForm& a, const AlgForm& b);

enum class ModelLevel { Lie, Crossed, TwoCrossed };
enum class PairingKind { GH, GL, HAnti, SymG, SymH, SymL };
std::string_view to_string(ModelLevel l);
std::string_view to_string(PairingKind k);

struct PairingData {
  std::optional<Matrix> gh;      // g x h
  std::optional<Matrix> gl;      // g x l
  std::optional<Matrix> h_anti;  // antisymmetric invariant form on h
  std::optional<Matrix> sym_g;
  std::optional<Matrix> sym_h;
  std::optional<Matrix> sym_l;

  const std::optional<Matrix>& get(PairingKind k) const;
  bool empty() const { return !gh && !gl && !h_anti && !sym_g && !sym_h && !sym_l; }
};

/// Lie algebra, differential crossed module, or differential 2-crossed module.
///
/// Unused levels leave the corresponding algebras null. Actions are stored as
/// tensors X_a |> Y_b = act_h[a,b,c] Y_c and {Y_a, Y_b} = peiffer[a,b,c] Z_c.
struct HigherAlgebra {
  std::string name;
  ModelLevel level = ModelLevel::Lie;
  AlgebraPtr g;
  AlgebraPtr h;
  AlgebraPtr l;
  Matrix alpha;  // dim h columns -> dim g rows
  Matrix beta;   // dim l columns -> dim h rows
  Bilinear act_h;
  Bilinear act_l;
  Bilinear peiffer;
  bool fine = false;
  bool abelian_h = false;
  PairingData pairings;
};
using ModelPtr = std::shared_ptr<const HigherAlgebra>;

AlgForm apply_alpha(const HigherAlgebra& m, const AlgForm& b);
AlgForm apply_beta(const HigherAlgebra& m, const AlgForm& c);
/// A |> E for E valued in h or l.
AlgForm act(const HigherAlgebra& m, const AlgForm& a, const AlgForm& e);
/// Y |>' Z = -{beta(Z), Y}.
AlgForm act_prime(const HigherAlgebra& m, const AlgForm& y, const AlgForm& z);
AlgForm peiffer(const HigherAlgebra& m, const AlgForm& y1, const AlgForm& y2);
/// <A, B> for the selected pairing. Mixed pairings (GH, GL) accept either
/// argument order; the matrix is always indexed (g, h|l).
OrdinaryForm pair_forms(const HigherAlgebra& m, const AlgForm& a, const AlgForm& b, PairingKind which);

struct Violation {
  std::string axiom;
  std::string detail;
};

/// Violations keyed by axiom name; only the first few instances of each
/// axiom keep a detail string, the rest are counted.
class ValidationReport {
 public:
  void add(const std::string& axiom, const std::string& detail);
  void merge(const ValidationReport& o);
  bool ok() const { return counts_.empty(); }
  bool has(std::string_view axiom) const;
  int count(std::string_view axiom) const;
  /// Distinct violated axioms in first-seen order.
  const std::vector<std::string>& axioms() const { return order_; }
  const std::vector<Violation>& violations() const { return violations_; }
  std::string summary() const;

 private:
  static constexpr int kDetailsPerAxiom = 3;
  std::vector<Violation> violations_;
  std::vector<std::string> order_;
  std::map<std::string, int, std::less<>> counts_;
};

ValidationReport validate_lie_algebra(const LieAlgebra& d);
ValidationReport validate_crossed_module(const HigherAlgebra& d);
ValidationReport validate_two_crossed_module(const HigherAlgebra& d);
ValidationReport validate_pairings(const HigherAlgebra& d);
/// Every applicable validator for the model's level, pairings included.
ValidationReport validate_model(const HigherAlgebra& d);

}  // namespace hgf
