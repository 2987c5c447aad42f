#include "hgf/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace hgf {

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::MustPass: return "must-pass";
    case Severity::Reported: return "reported";
    case Severity::Informational: return "informational";
  }
  return "?";
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Reported: return "reported";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

template <class E>
E parse_enum(const std::string& s, std::initializer_list<E> all, const char* what) {
  for (E e : all)
    if (to_string(e) == s) return e;
  fail(std::string("unknown ") + what + " '" + s + "'");
}

// ---------------------------------------------------------------- residuals

class Residuals {
 public:
  template <class T>
  void add(const std::string& name, const T& value, Severity sev = Severity::MustPass) {
    ResidualSummary& r = slot(name, sev);
    ++r.instances;
    if (!value.is_zero() && r.nonzero++ == 0) r.leading = leading_term(value);
  }
  void add_all(const std::string& prefix, const std::vector<AlgForm>& values, Severity sev = Severity::MustPass) {
    for (std::size_t i = 0; i < values.size(); ++i) add(prefix + " " + std::to_string(i + 1), values[i], sev);
  }
  void add_flag(const std::string& name, bool ok, const std::string& what, Severity sev = Severity::MustPass) {
    ResidualSummary& r = slot(name, sev);
    ++r.instances;
    if (!ok && r.nonzero++ == 0) r.leading = what;
  }
  std::vector<ResidualSummary> take() { return std::move(list_); }

 private:
  ResidualSummary& slot(const std::string& name, Severity sev) {
    for (auto& r : list_)
      if (r.name == name) return r;
    list_.push_back({name, sev});
    return list_.back();
  }
  std::vector<ResidualSummary> list_;
};

void finish(CheckResult& c) {
  bool failed = false;
  bool reported = false;
  bool only_reported = !c.residuals.empty();
  for (const auto& r : c.residuals) {
    if (r.severity == Severity::MustPass) failed = failed || r.nonzero > 0;
    if (r.severity == Severity::Reported) reported = reported || r.nonzero > 0;
    only_reported = only_reported && r.severity == Severity::Reported;
  }
  if (failed) {
    c.status = CheckStatus::Fail;
  } else if (reported || only_reported) {
    c.status = CheckStatus::Reported;
  } else {
    c.status = CheckStatus::Pass;
  }
}

// FNV-1a, so per-check streams do not depend on check order or the standard library.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (char ch : id) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------- inputs

std::vector<TwoConnection> inputs2(const Scenario& s, Rng& rng) {
  std::vector<TwoConnection> out;
  if (s.conn2) out.push_back(*s.conn2);
  for (int i = 0; i < s.rng.samples; ++i) out.push_back(random_connection2(s.m(), rng, s.dim, s.limits()));
  return out;
}

std::vector<ThreeConnection> inputs3(const Scenario& s, Rng& rng) {
  std::vector<ThreeConnection> out;
  if (s.conn3) out.push_back(*s.conn3);
  for (int i = 0; i < s.rng.samples; ++i) out.push_back(random_connection3(s.m(), rng, s.dim, s.limits()));
  return out;
}

GroupElement element_for(const Scenario& s, Rng& rng, std::size_t i) {
  if (i == 0 && s.element) return *s.element;
  return random_group_element(*s.group, rng, s.n_type(), s.dim, s.limits());
}

// ---------------------------------------------------------------- checks

struct CheckContext {
  const Scenario& s;
  Rng& rng;
  Residuals& res;
  std::string& note;
};

void add_violations(Residuals& res, const ValidationReport& rep) {
  for (const auto& axiom : rep.axioms()) {
    std::string detail = "violated";
    for (const auto& v : rep.violations()) {
      if (v.axiom == axiom) {
        detail = v.detail;
        break;
      }
    }
    for (int i = 0; i < rep.count(axiom); ++i) res.add_flag(axiom, false, detail);
  }
}

void check_validate_algebra(CheckContext& c) {
  ValidationReport rep = validate_model(c.s.m());
  if (rep.ok()) {
    c.res.add_flag("axioms", true, "");
    return;
  }
  add_violations(c.res, rep);
  c.note = rep.summary();
}

void check_validate_group(CheckContext& c) {
  ValidationReport rep = validate_group_model(*c.s.group, c.rng, c.s.dim, std::max(1, c.s.rng.samples));
  if (rep.ok()) {
    c.res.add_flag("group relations", true, "");
    return;
  }
  add_violations(c.res, rep);
  c.note = rep.summary();
}

void check_dgla(CheckContext& c) {
  const Scenario& s = c.s;
  const HigherAlgebra& m = s.m();
  const int n = s.n_type();
  const Severity leibniz = (n == 2 && !m.abelian_h) ? Severity::Reported : Severity::MustPass;
  for (int i = 0; i < std::max(1, s.rng.samples); ++i) {
    const int p = c.rng.uniform(-n, 1);
    const int q = c.rng.uniform(-n, 1);
    const int r = c.rng.uniform(-n, 0);
    AlgGForm a = random_gform(m, c.rng, n, s.dim, p, s.limits());
    AlgGForm b = random_gform(m, c.rng, n, s.dim, q, s.limits());
    AlgGForm e = random_gform(m, c.rng, n, s.dim, r, s.limits());
    const Rational spq(parity_sign(p * q));
    c.res.add("graded antisymmetry", gbracket(m, a, b) + gbracket(m, b, a) * spq);
    c.res.add("graded Jacobi", gbracket(m, a, gbracket(m, b, e)) - gbracket(m, gbracket(m, a, b), e) -
                                   gbracket(m, b, gbracket(m, a, e)) * spq);
    c.res.add("graded Leibniz",
              gderiv(m, gbracket(m, a, b), s.ctx) - gbracket(m, gderiv(m, a, s.ctx), b) -
                  gbracket(m, a, gderiv(m, b, s.ctx)) * Rational(parity_sign(p)),
              leibniz);
  }
  if (leibniz == Severity::Reported) c.note = "nonabelian h: Leibniz is reported, not asserted";
}

void check_curvature(CheckContext& c) {
  const Scenario& s = c.s;
  const HigherAlgebra& m = s.m();
  const Severity sev = s.default_ctx ? Severity::MustPass : Severity::Reported;
  if (s.n_type() == 1) {
    for (const auto& conn : inputs2(s, c.rng)) {
      AlgGForm F = generalized_curvature(m, as_generalized(conn), s.ctx);
      CurvatureSet cs = curvature2(m, conn);
      c.res.add("U slot - omega1", F.slot(0) - cs.omega1, sev);
      c.res.add("V slot - omega2", F.slot(1) - cs.omega2, sev);
    }
  } else {
    for (const auto& conn : inputs3(s, c.rng)) {
      AlgGForm F = generalized_curvature(m, as_generalized(conn), s.ctx);
      CurvatureSet cs = curvature3(m, conn);
      c.res.add("U slot - omega1", F.slot(0) - cs.omega1, sev);
      c.res.add("V slot - omega2", F.slot(1) - cs.omega2, sev);
      c.res.add("V' slot - omega2 - beta(C)", F.slot(2) - cs.omega2 - apply_beta(m, conn.C), sev);
      c.res.add("W slot - omega3", F.slot(3) - *cs.omega3, sev);
    }
  }
  if (!s.default_ctx) c.note = "slot equality is only asserted for the default constants";
}

void check_bianchi(CheckContext& c) {
  const Scenario& s = c.s;
  const HigherAlgebra& m = s.m();
  if (s.n_type() == 1) {
    for (const auto& conn : inputs2(s, c.rng)) {
      c.res.add_all("Bianchi", bianchi_residual(m, conn));
      c.res.add("generalized Bianchi", generalized_bianchi(m, as_generalized(conn), s.ctx));
    }
    return;
  }
  const Severity gen = m.abelian_h ? Severity::MustPass : Severity::Reported;
  for (const auto& conn : inputs3(s, c.rng)) {
    c.res.add_all("Bianchi", bianchi_residual(m, conn));
    c.res.add("generalized Bianchi", generalized_bianchi(m, as_generalized(conn), s.ctx), gen);
  }
  if (gen == Severity::Reported) c.note = "nonabelian h: the generalized Bianchi identity is reported, not asserted";
}

void check_mc(CheckContext& c) {
  const Scenario& s = c.s;
  Severity sev = Severity::MustPass;
  if (s.n_type() == 2 && s.ctx.k1 != s.ctx.k2) {
    sev = Severity::Reported;
    c.note = "k1 != k2: the 3-Maurer-Cartan equation is not guaranteed";
  }
  const std::size_t count = static_cast<std::size_t>(s.rng.samples) + (s.element ? 1 : 0);
  for (std::size_t i = 0; i < count; ++i) {
    c.res.add("Maurer-Cartan", mc_residual(*s.group, element_for(s, c.rng, i), s.ctx), sev);
  }
}

void check_adjoint(CheckContext& c) {
  const Scenario& s = c.s;
  const HigherAlgebra& m = s.m();
  if (s.n_type() != 1) {
    c.note = "the N=2 adjoint action has no asserted properties";
    return;
  }
  const std::size_t count = static_cast<std::size_t>(std::max(1, s.rng.samples)) + (s.element ? 1 : 0);
  for (std::size_t i = 0; i < count; ++i) {
    GroupElement G = element_for(s, c.rng, i);
    const int p = c.rng.uniform(-1, 1);
    const int q = c.rng.uniform(-1, 1);
    AlgGForm a = random_gform(m, c.rng, 1, s.dim, p, s.limits());
    AlgGForm b = random_gform(m, c.rng, 1, s.dim, q, s.limits());
    AlgGForm ga = adjoint(*s.group, G, a);
    AlgGForm gb = adjoint(*s.group, G, b);
    c.res.add("bracket commutation", adjoint(*s.group, G, gbracket(m, a, b)) - gbracket(m, ga, gb));
    if (m.pairings.gh) {
      c.res.add("pairing invariance", gpairing(m, ga, gb, s.ctx) - gpairing(m, a, b, s.ctx));
    }
  }
}

void check_gauge_covariance(CheckContext& c) {
  const Scenario& s = c.s;
  const HigherAlgebra& m = s.m();
  const GroupModel& gm = *s.group;
  const Severity sev = s.default_ctx ? Severity::MustPass : Severity::Reported;
  if (s.n_type() == 1) {
    auto conns = inputs2(s, c.rng);
    for (std::size_t i = 0; i < conns.size(); ++i) {
      const TwoConnection& conn = conns[i];
      GroupElement G = element_for(s, c.rng, i);
      TwoConnection t = gauge_transform2(gm, conn, G, s.ctx);
      AlgGForm F = generalized_curvature(m, as_generalized(conn), s.ctx);
      c.res.add("F' - Ad F", generalized_curvature(m, as_generalized(t), s.ctx) - adjoint(gm, inverse(gm, G), F));
      CurvatureSet cs = curvature2(m, conn);
      CurvatureSet ct = curvature2(m, t);
      UnipotentMatrix gi = G.g.inverse();
      c.res.add("omega1' component form", ct.omega1 - gm.act(gi, cs.omega1), sev);
      c.res.add("omega2' component form", ct.omega2 - gm.act(gi, cs.omega2 + act(m, cs.omega1, G.phi[0])), sev);
      TwoConnection left = gauge_transform2_left(gm, conn, inverse(gm, G));
      c.res.add("A' left form", left.A - t.A, sev);
      c.res.add("B' left form", left.B - t.B, sev);
    }
  } else {
    auto conns = inputs3(s, c.rng);
    for (std::size_t i = 0; i < conns.size(); ++i) {
      const ThreeConnection& conn = conns[i];
      GroupElement G = element_for(s, c.rng, i);
      ThreeConnection t = gauge_transform3(gm, conn, G, s.ctx);
      UnipotentMatrix gi = G.g.inverse();
      const AlgForm& phi = G.phi[0];
      const AlgForm& psi = *G.psi;
      c.res.add("A' display",
                t.A - gm.act(gi, conn.A) - gm.maurer_cartan(G.g) - gm.act(gi, apply_alpha(m, phi)), sev);
      c.res.add("B' display",
                t.B - gm.act(gi, conn.B + act(m, conn.A, phi) + ext_d(phi) + bracket(phi, phi) * Rational(1, 2) +
                                     apply_beta(m, psi)),
                sev);
      c.res.add("C' display",
                t.C - gm.act(gi, conn.C + act(m, conn.A, psi) + peiffer(m, conn.B, phi) - peiffer(m, phi, conn.B) +
                                     ext_d(psi) + act_prime(m, phi, psi)),
                sev);
    }
  }
  if (!s.default_ctx) c.note = "component forms are only asserted for the default constants";
}

void check_chern_weil_2(CheckContext& c) {
  const Scenario& s = c.s;
  const HigherAlgebra& m = s.m();
  auto conns = inputs2(s, c.rng);
  for (std::size_t i = 0; i < conns.size(); ++i) {
    const TwoConnection& conn = conns[i];
    CurvatureSet cs = curvature2(m, conn);
    OrdinaryForm p5 = chern5(m, cs);
    c.res.add("d(CS4) - P5", ext_d(cs4(m, conn)) - p5);
    c.res.add("CS4 two paths", cs4(m, conn) - cs4_generalized(m, conn));
    c.res.add("P5 two paths", p5 - chern5_generalized(m, conn));
    if (s.group) {
      TwoConnection t = gauge_transform2(*s.group, conn, element_for(s, c.rng, i));
      c.res.add("P5 gauge invariance", chern5(m, curvature2(m, t)) - p5);
    }
  }
  if (s.dim < 5) c.note = "charts below dimension 5 make d(CS4) = P5 vacuous";
}

void check_chern_weil_3(CheckContext& c) {
  const Scenario& s = c.s;
  const HigherAlgebra& m = s.m();
  for (const auto& conn : inputs3(s, c.rng)) {
    CurvatureSet cs = curvature3(m, conn);
    OrdinaryForm p6 = chern6(m, cs);
    c.res.add("d(CS5) - P6", ext_d(cs5(m, conn)) - p6);
    c.res.add("P6 two paths", p6 - chern6_generalized(m, conn));
    c.res.add("CS5 two paths", cs5(m, conn) - cs5_generalized(m, conn));
  }
  if (s.dim < 6) c.note = "charts below dimension 6 make d(CS5) = P6 vacuous";
}

void check_cs4_variation(CheckContext& c) {
  const Scenario& s = c.s;
  auto conns = inputs2(s, c.rng);
  for (std::size_t i = 0; i < conns.size(); ++i) {
    Cs4Variation v = cs4_gauge_variation(*s.group, conns[i], element_for(s, c.rng, i));
    c.res.add("d(CS4' - CS4)", ext_d(v.difference));
    c.res.add("CS4' - CS4 + d(boundary)", v.residual, Severity::Reported);
  }
  c.note = "boundary term uses F(phi) = dphi + 1/2[phi,phi]";
}

struct ActionValue {
  std::string name;
  Rational value;
};

std::vector<ActionKind> default_actions(const Scenario& s) {
  const HigherAlgebra& m = s.m();
  std::vector<ActionKind> out;
  if (m.pairings.sym_g) out.push_back(ActionKind::YM);
  if (s.n_type() == 1) {
    if (m.pairings.sym_g && m.pairings.sym_h) out.push_back(ActionKind::YM2);
    if (m.pairings.gh && s.dim == 4) out.push_back(ActionKind::CS2);
  }
  if (s.n_type() == 2) {
    if (m.pairings.sym_g && m.pairings.sym_h && m.pairings.sym_l) out.push_back(ActionKind::YM3);
    if (m.pairings.gl && m.pairings.h_anti && s.dim == 5) out.push_back(ActionKind::CS3);
  }
  return out;
}

Rational evaluate(const Scenario& s, ActionKind k, Rng& rng, std::size_t i) {
  const HigherAlgebra& m = s.m();
  auto pick2 = [&] { return i == 0 && s.conn2 ? *s.conn2 : random_connection2(m, rng, s.dim, s.limits()); };
  auto pick3 = [&] { return i == 0 && s.conn3 ? *s.conn3 : random_connection3(m, rng, s.dim, s.limits()); };
  switch (k) {
    case ActionKind::YM: {
      if (i == 0 && s.lie_connection) return action_ym(m, *s.lie_connection);
      if (i == 0 && s.conn2) return action_ym(m, s.conn2->A);
      if (i == 0 && s.conn3) return action_ym(m, s.conn3->A);
      return action_ym(m, rng.alg_form(m.g, s.dim, 1, s.limits()));
    }
    case ActionKind::YM2: return action_2ym(m, pick2());
    case ActionKind::CS2: return action_2cs(m, pick2());
    case ActionKind::YM3: return action_3ym(m, pick3());
    case ActionKind::CS3: return action_3cs(m, pick3());
  }
  return Rational(0);
}

bool explicit_input(const Scenario& s) { return s.lie_connection || s.conn2 || s.conn3; }

void action_values(const Scenario& s, const std::vector<ActionKind>& kinds, Rng& rng, Residuals& res,
                   std::vector<NamedValue>& values) {
  const std::size_t count = static_cast<std::size_t>(s.rng.samples) + (explicit_input(s) ? 1 : 0);
  for (ActionKind k : kinds) {
    for (std::size_t i = 0; i < std::max<std::size_t>(count, 1); ++i) {
      Rational v = evaluate(s, k, rng, explicit_input(s) ? i : i + 1);
      std::string name = std::string(to_string(k)) + (explicit_input(s) && i == 0 ? " (given)" : " (sample " + std::to_string(explicit_input(s) ? i : i + 1) + ")");
      values.push_back({name, v});
      const bool ym = k == ActionKind::YM || k == ActionKind::YM2 || k == ActionKind::YM3;
      if (ym) res.add_flag(std::string(to_string(k)) + " >= 0", v >= Rational(0), "negative: " + v.str());
    }
  }
}

using CheckFn = std::function<void(CheckContext&)>;

struct CheckSpec {
  std::string id;
  CheckFn fn;
  int min_n;  // lowest type the check applies to
  bool needs_group;
  int max_n = 2;
};

const std::vector<CheckSpec>& specs() {
  static const std::vector<CheckSpec> all = {
      {"validate_algebra", check_validate_algebra, 0, false},
      {"validate_group", check_validate_group, 0, true},
      {"dgla", check_dgla, 0, false},
      {"curvature", check_curvature, 1, false},
      {"bianchi", check_bianchi, 1, false},
      {"mc", check_mc, 1, true},
      {"mc2", check_mc, 1, true, 1},
      {"mc3", check_mc, 2, true, 2},
      {"adjoint", check_adjoint, 1, true},
      {"gauge_covariance", check_gauge_covariance, 1, true},
      {"chern_weil_2", check_chern_weil_2, 1, false},
      {"chern_weil_3", check_chern_weil_3, 2, false},
      {"cs4_variation", check_cs4_variation, 1, true},
      {"actions", nullptr, 0, false},
  };
  return all;
}

const CheckSpec& spec(const std::string& id) {
  for (const auto& s : specs())
    if (s.id == id) return s;
  fail("unknown check '" + id + "'");
}

// ---------------------------------------------------------------- loading

DerivativeContext default_context(int n) {
  if (n == 1) return DerivativeContext::type1(Rational(-1));
  if (n == 2) return DerivativeContext::type2(Rational(0), Rational(-1));
  return DerivativeContext::type0();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ProfileError(what);
}

void check_requirements(const Scenario& s) {
  const HigherAlgebra& m = s.m();
  const int n = s.n_type();
  for (const auto& id : s.checks) {
    const CheckSpec& c = spec(id);
    require(n >= c.min_n, "check '" + id + "' needs a " + (c.min_n == 2 ? "2-crossed module" : "crossed module"));
    require(n <= c.max_n, "check '" + id + "' needs a crossed module");
    require(!c.needs_group || s.group, "check '" + id + "' needs a builtin model with a group realization");
    if (id == "chern_weil_2") require(m.pairings.gh.has_value(), "chern_weil_2 needs the gh pairing");
    if (id == "chern_weil_3") {
      require(m.pairings.gl && m.pairings.h_anti, "chern_weil_3 needs the gl and h pairings");
    }
    if (id == "cs4_variation") require(n == 1 && m.pairings.gh, "cs4_variation needs a crossed module with gh");
  }
  for (ActionKind k : s.actions) {
    switch (k) {
      case ActionKind::YM:
        require(m.pairings.sym_g.has_value(), "YM needs sym_g");
        break;
      case ActionKind::YM2:
        require(n == 1 && m.pairings.sym_g && m.pairings.sym_h, "2YM needs a crossed module with sym_g, sym_h");
        break;
      case ActionKind::YM3:
        require(n == 2 && m.pairings.sym_g && m.pairings.sym_h && m.pairings.sym_l,
                "3YM needs a 2-crossed module with sym_g, sym_h, sym_l");
        break;
      case ActionKind::CS2:
        require(n == 1 && m.pairings.gh, "2CS needs a crossed module with gh");
        if (s.dim != 4) throw DimensionError("2CS needs a 4-dimensional chart");
        break;
      case ActionKind::CS3:
        require(n == 2 && m.pairings.gl && m.pairings.h_anti, "3CS needs a 2-crossed module with gl and h");
        if (s.dim != 5) throw DimensionError("3CS needs a 5-dimensional chart");
        break;
    }
  }
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const char* where) {
  if (!j.is_object()) fail(std::string(where) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
    if (!ok) fail(std::string("unknown field '") + key + "' in " + where);
  }
}

int small_int(const Json& j, const char* what, int lo, int hi) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  long v = j.get<long>();
  if (v < lo || v > hi) fail(std::string(what) + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  return static_cast<int>(v);
}

}  // namespace

int Scenario::n_type() const {
  switch (m().level) {
    case ModelLevel::Lie: return 0;
    case ModelLevel::Crossed: return 1;
    case ModelLevel::TwoCrossed: return 2;
  }
  return 0;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& s : specs()) v.push_back(s.id);
    return v;
  }();
  return ids;
}

Scenario parse_scenario(const Json& j, const Overrides& o) {
  check_keys(j, {"name", "chart", "model", "context", "connection", "group_element", "checks", "actions", "rng"},
             "scenario");
  Scenario s;
  s.name = j.contains("name") ? j.at("name").get<std::string>() : std::string("scenario");
  if (j.contains("chart")) {
    check_keys(j.at("chart"), {"dim"}, "chart");
    if (j.at("chart").contains("dim")) s.dim = small_int(j.at("chart").at("dim"), "chart dim", 1, 8);
  }
  if (o.dim) {
    if (*o.dim < 1 || *o.dim > 8) throw DimensionError("chart dim must lie in 1..8");
    s.dim = *o.dim;
  }
  if (!j.contains("model")) fail("missing field 'model'");
  s.model = parse_model(j.at("model"));
  if (s.model.realization) s.group.emplace(s.model.model, *s.model.realization);
  const int n = s.n_type();

  s.ctx = default_context(n);
  if (j.contains("context")) {
    const Json& c = j.at("context");
    check_keys(c, {"n_type", "k", "k1", "k2"}, "context");
    if (c.contains("n_type") && small_int(c.at("n_type"), "n_type", 0, 2) != n) {
      throw ProfileError("context n_type does not match the model level");
    }
    if (n == 1 && c.contains("k")) s.ctx.k = parse_rational(c.at("k"));
    if (n == 2 && c.contains("k1")) s.ctx.k1 = parse_rational(c.at("k1"));
    if (n == 2 && c.contains("k2")) s.ctx.k2 = parse_rational(c.at("k2"));
    if ((n != 1 && c.contains("k")) || (n != 2 && (c.contains("k1") || c.contains("k2")))) {
      throw ProfileError("context constants do not match the model level");
    }
  }
  if (o.k) {
    if (n != 1) throw ProfileError("--k needs a crossed-module scenario");
    s.ctx.k = *o.k;
  }
  if (o.k1 || o.k2) {
    if (n != 2) throw ProfileError("--k1/--k2 need a 2-crossed-module scenario");
    if (o.k1) s.ctx.k1 = *o.k1;
    if (o.k2) s.ctx.k2 = *o.k2;
  }
  const DerivativeContext d = default_context(n);
  s.default_ctx = s.ctx.k == d.k && s.ctx.k1 == d.k1 && s.ctx.k2 == d.k2;

  if (j.contains("rng")) {
    const Json& r = j.at("rng");
    check_keys(r, {"seed", "max_poly_degree", "max_terms", "samples"}, "rng");
    if (r.contains("seed")) {
      if (!r.at("seed").is_number_unsigned()) fail("rng seed must be a nonnegative integer");
      s.rng.seed = r.at("seed").get<std::uint64_t>();
    }
    if (r.contains("max_poly_degree")) s.rng.max_degree = small_int(r.at("max_poly_degree"), "max_poly_degree", 0, 3);
    if (r.contains("max_terms")) s.rng.max_terms = small_int(r.at("max_terms"), "max_terms", 1, 6);
    if (r.contains("samples")) s.rng.samples = small_int(r.at("samples"), "samples", 0, 1000);
  }
  if (o.seed) s.rng.seed = *o.seed;
  if (o.max_degree) {
    if (*o.max_degree < 0 || *o.max_degree > 3) fail("--max-degree must lie in 0..3");
    s.rng.max_degree = *o.max_degree;
  }

  const HigherAlgebra& m = s.m();
  if (j.contains("connection")) {
    const Json& c = j.at("connection");
    check_keys(c, {"A", "B", "C"}, "connection");
    auto slot = [&](const char* key, const AlgebraPtr& alg, int degree) {
      if (!c.contains(key)) return AlgForm(alg, s.dim, degree);
      AlgForm f = parse_alg_form(c.at(key), alg, s.dim);
      if (f.degree() != degree) throw DimensionError(std::string(key) + " must be a " + std::to_string(degree) + "-form");
      return f;
    };
    if (n == 0) {
      if (c.contains("B") || c.contains("C")) throw ProfileError("a Lie algebra connection has only A");
      s.lie_connection = slot("A", m.g, 1);
    } else if (n == 1) {
      if (c.contains("C")) throw ProfileError("a 2-connection has no C");
      s.conn2 = make_connection2(m, slot("A", m.g, 1), slot("B", m.h, 2));
    } else {
      s.conn3 = make_connection3(m, slot("A", m.g, 1), slot("B", m.h, 2), slot("C", m.l, 3));
    }
  }
  if (j.contains("group_element")) {
    if (!s.group) throw ProfileError("group elements need a builtin model with a group realization");
    if (n == 0) throw ProfileError("group elements need a crossed module");
    check_keys(j.at("group_element"), {"values", "matrix", "phi", "psi"}, "group_element");
    s.element = parse_group_element(j.at("group_element"), *s.group, n, s.dim);
  }
  if (j.contains("checks")) {
    for (const auto& c : j.at("checks")) {
      if (!c.is_string()) fail("check identifiers must be strings");
      s.checks.push_back(c.get<std::string>());
      spec(s.checks.back());
    }
  }
  if (j.contains("actions")) {
    for (const auto& a : j.at("actions")) {
      if (!a.is_string()) fail("action kinds must be strings");
      s.actions.push_back(parse_action_kind(a.get<std::string>()));
    }
  }
  check_requirements(s);
  return s;
}

Scenario load_scenario(const std::string& path, const Overrides& o) {
  std::ifstream in(path);
  if (!in) fail("cannot open scenario file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_scenario(j, o);
  } catch (const Json::exception& e) {
    fail(std::string("bad scenario field: ") + e.what());
  }
}

// ---------------------------------------------------------------- running

namespace {

Report header(const Scenario& s, const std::string& command) {
  Report r;
  r.command = command;
  r.scenario = s.name;
  r.model = s.m().name;
  r.dim = s.dim;
  r.context = s.ctx.str();
  r.seed = s.rng.seed;
  return r;
}

CheckResult run_one(const Scenario& s, const std::string& id, std::vector<NamedValue>* values) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  CheckResult out;
  out.id = id;
  Rng rng(stream_seed(s.rng.seed, id));
  Residuals res;
  if (id == "actions") {
    std::vector<NamedValue> local;
    action_values(s, s.actions.empty() ? default_actions(s) : s.actions, rng, res, values ? *values : local);
  } else {
    CheckContext ctx{s, rng, res, out.note};
    spec(id).fn(ctx);
  }
  out.residuals = res.take();
  if (id != "actions" && out.residuals.empty() && out.note.empty()) out.note = "no inputs: samples = 0 and no explicit fields";
  finish(out);
  if (s.timings) out.millis = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  return out;
}

bool model_valid(const Scenario& s) { return validate_model(s.m()).ok(); }

void run_list(const Scenario& s, const std::vector<std::string>& ids, Report& r) {
  std::vector<std::string> list = ids;
  const bool valid = model_valid(s);
  if (!valid && std::find(list.begin(), list.end(), "validate_algebra") == list.end()) {
    list.insert(list.begin(), "validate_algebra");
  }
  for (const auto& id : list) {
    if (!valid && id != "validate_algebra") {
      CheckResult skipped;
      skipped.id = id;
      skipped.status = CheckStatus::Skipped;
      skipped.note = "model failed validation";
      r.checks.push_back(skipped);
      continue;
    }
    r.checks.push_back(run_one(s, id, &r.values));
  }
}

template <class T>
void add_form(Report& r, const std::string& name, const T& f) {
  r.forms.push_back({name, to_json(f)});
}

}  // namespace

Report run_checks(const Scenario& s) {
  Report r = header(s, "check");
  std::vector<std::string> ids = s.checks;
  if (ids.empty()) ids = {"validate_algebra"};
  run_list(s, ids, r);
  return r;
}

Report run_validate(const Scenario& s) {
  Report r = header(s, "validate");
  std::vector<std::string> ids = {"validate_algebra"};
  if (s.group) ids.push_back("validate_group");
  run_list(s, ids, r);
  return r;
}

Report run_curvature(const Scenario& s) {
  Report r = header(s, "curvature");
  const HigherAlgebra& m = s.m();
  const int n = s.n_type();
  if (n >= 1) run_list(s, {"curvature", "bianchi"}, r);
  if (!model_valid(s)) return r;
  Rng rng(stream_seed(s.rng.seed, "curvature-fields"));
  if (n == 0) {
    AlgForm A = s.lie_connection ? *s.lie_connection : rng.alg_form(m.g, s.dim, 1, s.limits());
    add_form(r, "A", A);
    add_form(r, "F", field_strength(A));
  } else if (n == 1) {
    TwoConnection c = s.conn2 ? *s.conn2 : random_connection2(m, rng, s.dim, s.limits());
    CurvatureSet cs = curvature2(m, c);
    add_form(r, "A", c.A);
    add_form(r, "B", c.B);
    add_form(r, "F", cs.F);
    add_form(r, "omega1", cs.omega1);
    add_form(r, "omega2", cs.omega2);
  } else {
    ThreeConnection c = s.conn3 ? *s.conn3 : random_connection3(m, rng, s.dim, s.limits());
    CurvatureSet cs = curvature3(m, c);
    add_form(r, "A", c.A);
    add_form(r, "B", c.B);
    add_form(r, "C", c.C);
    add_form(r, "F", cs.F);
    add_form(r, "omega1", cs.omega1);
    add_form(r, "omega2", cs.omega2);
    add_form(r, "omega3", *cs.omega3);
  }
  return r;
}

Report run_gauge(const Scenario& s) {
  Report r = header(s, "gauge");
  const int n = s.n_type();
  require(n >= 1 && s.group.has_value(), "gauge needs a crossed or 2-crossed builtin model with a group realization");
  run_list(s, {"gauge_covariance"}, r);
  if (!model_valid(s)) return r;
  const HigherAlgebra& m = s.m();
  Rng rng(stream_seed(s.rng.seed, "gauge-fields"));
  if (n == 1) {
    TwoConnection c = s.conn2 ? *s.conn2 : random_connection2(m, rng, s.dim, s.limits());
    GroupElement G = s.element ? *s.element : random_group_element(*s.group, rng, 1, s.dim, s.limits());
    TwoConnection t = gauge_transform2(*s.group, c, G, s.ctx);
    r.forms.push_back({"G", to_json(G)});
    add_form(r, "A'", t.A);
    add_form(r, "B'", t.B);
  } else {
    ThreeConnection c = s.conn3 ? *s.conn3 : random_connection3(m, rng, s.dim, s.limits());
    GroupElement G = s.element ? *s.element : random_group_element(*s.group, rng, 2, s.dim, s.limits());
    ThreeConnection t = gauge_transform3(*s.group, c, G, s.ctx);
    r.forms.push_back({"G", to_json(G)});
    add_form(r, "A'", t.A);
    add_form(r, "B'", t.B);
    add_form(r, "C'", t.C);
  }
  return r;
}

Report run_action(const Scenario& s, std::optional<ActionKind> kind) {
  Scenario local = s;
  if (kind) local.actions = {*kind};
  check_requirements(local);
  Report r = header(local, "action");
  run_list(local, {"actions"}, r);
  return r;
}

// ---------------------------------------------------------------- reports

int Report::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

int Report::exit_code() const { return count(CheckStatus::Fail) > 0 ? 1 : 0; }

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["scenario"] = r.scenario;
  j["model"] = r.model;
  j["dim"] = r.dim;
  j["context"] = r.context;
  j["seed"] = r.seed;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["id"] = c.id;
    cj["status"] = to_string(c.status);
    Json res = Json::array();
    for (const auto& x : c.residuals) {
      Json rj;
      rj["name"] = x.name;
      rj["severity"] = to_string(x.severity);
      rj["instances"] = x.instances;
      rj["nonzero"] = x.nonzero;
      rj["leading"] = x.leading;
      res.push_back(rj);
    }
    cj["residuals"] = res;
    cj["note"] = c.note;
    if (c.millis) cj["millis"] = *c.millis;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  Json values = Json::array();
  for (const auto& v : r.values) values.push_back(Json{{"name", v.name}, {"value", v.value.str()}});
  j["values"] = values;
  Json forms = Json::array();
  for (const auto& f : r.forms) forms.push_back(Json{{"name", f.name}, {"form", f.form}});
  j["forms"] = forms;
  j["summary"] = Json{{"checks", r.checks.size()},
                      {"pass", r.count(CheckStatus::Pass)},
                      {"fail", r.count(CheckStatus::Fail)},
                      {"reported", r.count(CheckStatus::Reported)},
                      {"skipped", r.count(CheckStatus::Skipped)}};
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  try {
    r.command = j.at("command").get<std::string>();
    r.scenario = j.at("scenario").get<std::string>();
    r.model = j.at("model").get<std::string>();
    r.dim = j.at("dim").get<int>();
    r.context = j.at("context").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& cj : j.at("checks")) {
      CheckResult c;
      c.id = cj.at("id").get<std::string>();
      c.status = parse_enum(cj.at("status").get<std::string>(),
                            {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Reported, CheckStatus::Skipped},
                            "status");
      for (const auto& rj : cj.at("residuals")) {
        ResidualSummary x;
        x.name = rj.at("name").get<std::string>();
        x.severity = parse_enum(rj.at("severity").get<std::string>(),
                                {Severity::MustPass, Severity::Reported, Severity::Informational}, "severity");
        x.instances = rj.at("instances").get<int>();
        x.nonzero = rj.at("nonzero").get<int>();
        x.leading = rj.at("leading").get<std::string>();
        c.residuals.push_back(x);
      }
      c.note = cj.at("note").get<std::string>();
      if (cj.contains("millis")) c.millis = cj.at("millis").get<double>();
      r.checks.push_back(c);
    }
    for (const auto& v : j.at("values")) r.values.push_back({v.at("name").get<std::string>(), parse_rational(v.at("value"))});
    for (const auto& f : j.at("forms")) r.forms.push_back({f.at("name").get<std::string>(), f.at("form")});
  } catch (const Json::exception& e) {
    fail(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.command << ": " << r.scenario << "\n";
  os << "model " << r.model << ", dim " << r.dim << ", " << r.context << ", seed " << r.seed << "\n";
  for (const auto& c : r.checks) {
    std::string tag(to_string(c.status));
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    os << "[" << tag << "] " << c.id;
    if (c.millis) os << " (" << static_cast<long>(*c.millis) << " ms)";
    os << "\n";
    for (const auto& x : c.residuals) {
      os << "    " << x.name << ": " << x.nonzero << "/" << x.instances << " nonzero";
      if (x.severity != Severity::MustPass) os << " [" << to_string(x.severity) << "]";
      if (x.nonzero > 0) os << ", leading " << x.leading;
      os << "\n";
    }
    if (!c.note.empty()) os << "    note: " << c.note << "\n";
  }
  if (!r.values.empty()) {
    os << "values:\n";
    for (const auto& v : r.values) os << "    " << v.name << " = " << v.value.str() << "\n";
  }
  if (!r.forms.empty()) {
    os << "forms:\n";
    for (const auto& f : r.forms) os << "    " << f.name << " = " << f.form.dump() << "\n";
  }
  os << "summary: " << r.checks.size() << " checks, " << r.count(CheckStatus::Pass) << " pass, "
     << r.count(CheckStatus::Fail) << " fail, " << r.count(CheckStatus::Reported) << " reported, "
     << r.count(CheckStatus::Skipped) << " skipped\n";
  return os.str();
}

}  // namespace hgf
