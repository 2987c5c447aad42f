// Acceptance suite: one line per criterion, every identity checked as an exact zero.
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hgf/errors.hpp"
#include "hgf/gauge.hpp"
#include "hgf/scenario.hpp"

using namespace hgf;

namespace {

const RandomLimits kLim{2, 2, 3};

const std::vector<std::string> kCrossed = {"adjoint_sl2", "skeletal_sl2", "skeletal_n3", "standard_sl2"};
const std::vector<std::string> kTwoCrossed = {"symplectic_sl2", "symplectic_n3", "shifted_sl2", "trivial_chain",
                                              "semidirect_sl2"};
const std::vector<std::string> kAbelianH = {"symplectic_sl2", "symplectic_n3", "shifted_sl2", "trivial_chain"};

Rational sgn(int e) { return Rational(parity_sign(e)); }
const HigherAlgebra& model(const std::string& name) { return *builtin(name).model; }

// Counts instances of one named identity and remembers the first failure.
struct Tally {
  std::string name;
  long total = 0;
  long failed = 0;
  std::string first;

  void check(bool ok, const std::string& where = "") {
    ++total;
    if (!ok && failed++ == 0) first = where;
  }
};

struct Criterion {
  std::vector<Tally> tallies;
  std::vector<std::string> notes;

  Tally& operator[](const std::string& name) {
    for (auto& t : tallies)
      if (t.name == name) return t;
    tallies.push_back({name});
    return tallies.back();
  }
};

int failures = 0;

void report(int id, const std::string& title, const Criterion& c, double seconds) {
  bool ok = !c.tallies.empty();
  std::ostringstream detail;
  for (const auto& t : c.tallies) {
    ok = ok && t.failed == 0 && t.total > 0;
    detail << "; " << t.name << " " << (t.total - t.failed) << "/" << t.total;
    if (t.failed > 0) detail << " (first failure: " << t.first << ")";
  }
  for (const auto& n : c.notes) detail << "; " << n;
  if (!ok) ++failures;
  std::printf("[%s] %2d %s%s [%.1fs]\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.str().c_str(), seconds);
  std::fflush(stdout);
}

void run(int id, const std::string& title, const std::function<void(Criterion&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c["uncaught exception"].check(false, e.what());
  }
  report(id, title, c, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

int popcount(int m) { return std::popcount(static_cast<unsigned>(m)); }

RealGForm random_real(Rng& rng, int n, int dim, int p, const RandomLimits& lim = kLim) {
  std::vector<OrdinaryForm> s;
  for (int m = 0; m < (1 << n); ++m) s.push_back(rng.form(dim, p + popcount(m), lim));
  return RealGForm(n, p, s);
}

DerivativeContext random_ctx(Rng& rng, int n) {
  if (n == 1) return DerivativeContext::type1(rng.rational(3));
  return DerivativeContext::type2(rng.coin() ? Rational(0) : rng.rational(3), rng.rational(3));
}

OrdinaryForm contract(const Matrix& M, const AlgForm& x, const AlgForm& y) {
  OrdinaryForm out(x.dim(), x.degree() + y.degree());
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < y.size(); ++b)
      if (!M(a, b).is_zero()) out.add_wedge(x[a], y[b], M(a, b));
  return out;
}

bool all_zero(const std::vector<AlgForm>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------- criteria

void exterior(Criterion& c) {
  Rng rng(101);
  const RandomLimits lim{3, 3, 3};
  for (int it = 0; it < 1000; ++it) {
    const int n = rng.uniform(1, 5);
    const int p = rng.uniform(0, n);
    const int q = rng.uniform(0, n);
    OrdinaryForm a = rng.form(n, p, lim);
    OrdinaryForm b = rng.form(n, q, lim);
    OrdinaryForm e = rng.form(n, p, lim);
    const std::string where = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
    c["graded commutativity"].check(wedge(a, b) == wedge(b, a) * sgn(p * q), where);
    c["d^2=0"].check(ext_d(ext_d(a)).is_zero(), where);
    c["Leibniz"].check(ext_d(wedge(a, b)) == wedge(ext_d(a), b) + wedge(a, ext_d(b)) * sgn(p), where);
    c["**=(-1)^{p(n-p)}"].check(hodge(hodge(a)) == a * sgn(p * (n - p)), where);
    c["inner symmetry"].check(inner(a, e) == inner(e, a), where);
    c["inner positivity"].check(a.is_zero() ? inner(a, a).is_zero() : inner(a, a) > Rational(0), where);
  }
}

void type_n_calculus(Criterion& c) {
  Rng rng(102);
  const int dim = 4;
  for (int n = 1; n <= 2; ++n) {
    for (int it = 0; it < 100; ++it) {
      DerivativeContext ctx = random_ctx(rng, n);
      RealGForm w = random_real(rng, n, dim, rng.uniform(-n, 2));
      c["gderiv^2=0 (real)"].check(gderiv(gderiv(w, ctx), ctx).is_zero(), ctx.str());
      const std::string& name = n == 1 ? kCrossed[it % kCrossed.size()] : kTwoCrossed[it % kTwoCrossed.size()];
      const HigherAlgebra& m = model(name);
      AlgGForm v = random_gform(m, rng, n, dim, rng.uniform(-n, 1), kLim);
      c["gderiv^2=0 (algebra-valued)"].check(gderiv(m, gderiv(m, v, ctx), ctx).is_zero(), name + " " + ctx.str());
    }
  }
  for (int it = 0; it < 100; ++it) {
    const int n = it % 3;
    const int p = rng.uniform(-n, 2);
    const int q = rng.uniform(-n, 2);
    const int r = rng.uniform(-n, 1);
    RealGForm a = random_real(rng, n, dim, p);
    RealGForm b = random_real(rng, n, dim, q);
    RealGForm e = random_real(rng, n, dim, r);
    c["gwedge graded commutativity"].check(gwedge(a, b) == gwedge(b, a) * sgn(p * q), "N=" + std::to_string(n));
    c["gwedge associativity"].check(gwedge(gwedge(a, b), e) == gwedge(a, gwedge(b, e)), "N=" + std::to_string(n));
    if (n >= 1) {
      auto [lo, hi] = split(a);
      c["split/join round trip"].check(join(lo, hi) == a, "N=" + std::to_string(n));
    }
  }
}

void dgla(Criterion& c) {
  Rng rng(103);
  auto triple = [&](const std::string& name, int n, int dim, const DerivativeContext& ctx) {
    const HigherAlgebra& m = model(name);
    const int p = rng.uniform(-n, 1);
    const int q = rng.uniform(-n, 1);
    const int r = rng.uniform(-n, 0);
    AlgGForm a = random_gform(m, rng, n, dim, p, kLim);
    AlgGForm b = random_gform(m, rng, n, dim, q, kLim);
    AlgGForm e = random_gform(m, rng, n, dim, r, kLim);
    const std::string where = name + " " + ctx.str();
    const std::string tag = n == 1 ? " N=1" : " N=2";
    c["antisymmetry" + tag].check(gbracket(m, a, b) == -gbracket(m, b, a) * sgn(p * q), where);
    c["Jacobi" + tag].check(gbracket(m, a, gbracket(m, b, e)) ==
                                gbracket(m, gbracket(m, a, b), e) + gbracket(m, b, gbracket(m, a, e)) * sgn(p * q),
                            where);
    c["Leibniz" + tag].check(gderiv(m, gbracket(m, a, b), ctx) ==
                                 gbracket(m, gderiv(m, a, ctx), b) + gbracket(m, a, gderiv(m, b, ctx)) * sgn(p),
                             where);
  };
  for (int it = 0; it < 120; ++it) triple(kCrossed[it % kCrossed.size()], 1, 3, random_ctx(rng, 1));
  for (int it = 0; it < 120; ++it) triple(kAbelianH[it % kAbelianH.size()], 2, 4, random_ctx(rng, 2));
  c.notes.push_back("N=2 triples on the abelian-h builtins");
}

void validators(Criterion& c) {
  for (const auto& name : builtin_names()) {
    ValidationReport r = validate_model(*builtin(name).model);
    c["builtins valid"].check(r.ok(), name + ": " + r.summary());
  }
  Rng rng(104);
  for (const auto& name : builtin_names()) {
    const Builtin& b = builtin(name);
    if (!b.realization) continue;
    ValidationReport r = validate_group_model(GroupModel(b.model, *b.realization), rng, 3, 2);
    c["group realizations valid"].check(r.ok(), name + ": " + r.summary());
  }
  for (const auto& bad : corrupted_models()) {
    ValidationReport r = validate_model(*bad.model);
    c["corrupted rejected with named axiom"].check(!r.ok() && r.has(bad.expected_axiom),
                                                   bad.name + " expected " + bad.expected_axiom + ": " + r.summary());
  }
}

void maurer_cartan(Criterion& c) {
  Rng rng(105);
  for (int it = 0; it < 100; ++it) {
    const std::string& name = kCrossed[it % kCrossed.size()];
    GroupModel gm = GroupModel::builtin(name);
    GroupElement G = random_group_element(gm, rng, 1, 3, kLim);
    DerivativeContext ctx = DerivativeContext::type1(rng.rational(3));
    c["N=1 any k"].check(mc_residual(gm, G, ctx).is_zero(), name + " " + ctx.str());
  }
  for (int it = 0; it < 100; ++it) {
    const std::string& name = kAbelianH[it % kAbelianH.size()];
    GroupModel gm = GroupModel::builtin(name);
    GroupElement G = random_group_element(gm, rng, 2, 4, kLim);
    Rational k = rng.rational(3);
    c["N=2 k1=k2"].check(mc_residual(gm, G, DerivativeContext::type2(k, k)).is_zero(), name + " k=" + k.str());
  }
  GroupModel gm = GroupModel::builtin("semidirect_sl2");
  int nonzero = 0;
  for (int it = 0; it < 10; ++it) {
    GroupElement G = random_group_element(gm, rng, 2, 4, kLim);
    nonzero += mc_residual(gm, G, DerivativeContext::type2(Rational(1), Rational(0))).is_zero() ? 0 : 1;
  }
  c["k1!=k2 counterexample nonzero"].check(nonzero > 0, "semidirect_sl2 (1,0)");
  c.notes.push_back("counterexample semidirect_sl2 at (k1,k2)=(1,0): " + std::to_string(nonzero) + "/10 nonzero");
}

void adjoint_action(Criterion& c) {
  Rng rng(106);
  for (int it = 0; it < 100; ++it) {
    const std::string& name = kCrossed[it % kCrossed.size()];
    GroupModel gm = GroupModel::builtin(name);
    const HigherAlgebra& m = gm.model();
    GroupElement G = random_group_element(gm, rng, 1, 3, kLim);
    AlgGForm a = random_gform(m, rng, 1, 3, rng.uniform(-1, 1), kLim);
    AlgGForm b = random_gform(m, rng, 1, 3, rng.uniform(-1, 1), kLim);
    c["bracket commutation"].check(adjoint(gm, G, gbracket(m, a, b)) == gbracket(m, adjoint(gm, G, a), adjoint(gm, G, b)),
                                   name);
  }
  const std::vector<std::string> paired = {"adjoint_sl2", "skeletal_sl2", "skeletal_n3"};
  for (int it = 0; it < 100; ++it) {
    const std::string& name = paired[it % paired.size()];
    GroupModel gm = GroupModel::builtin(name);
    const HigherAlgebra& m = gm.model();
    GroupElement G = random_group_element(gm, rng, 1, 3, kLim);
    AlgGForm a = random_gform(m, rng, 1, 3, rng.uniform(-1, 1), kLim);
    AlgGForm b = random_gform(m, rng, 1, 3, rng.uniform(-1, 1), kLim);
    DerivativeContext ctx = random_ctx(rng, 1);
    c["pairing invariance"].check(gpairing(m, adjoint(gm, G, a), adjoint(gm, G, b), ctx) == gpairing(m, a, b, ctx),
                                  name + " " + ctx.str());
  }
}

void curvature_bianchi(Criterion& c) {
  Rng rng(107);
  const auto k1 = DerivativeContext::type1(Rational(-1));
  const auto k2 = DerivativeContext::type2(Rational(0), Rational(-1));
  for (int it = 0; it < 100; ++it) {
    const std::string& name = kCrossed[it % kCrossed.size()];
    const HigherAlgebra& m = model(name);
    TwoConnection conn = random_connection2(m, rng, 4, kLim);
    AlgGForm F = generalized_curvature(m, as_generalized(conn), k1);
    CurvatureSet cs = curvature2(m, conn);
    c["N=1 slot equality"].check(F.slot(0) == cs.omega1 && F.slot(1) == cs.omega2, name);
    c["2-Bianchi"].check(all_zero(bianchi_residual(m, conn)), name);
    c["N=1 generalized Bianchi"].check(generalized_bianchi(m, as_generalized(conn), k1).is_zero(), name);
  }
  for (int it = 0; it < 100; ++it) {
    const std::string& name = kTwoCrossed[it % kTwoCrossed.size()];
    const HigherAlgebra& m = model(name);
    ThreeConnection conn = random_connection3(m, rng, 5, kLim);
    AlgGForm F = generalized_curvature(m, as_generalized(conn), k2);
    CurvatureSet cs = curvature3(m, conn);
    c["N=2 slot equality"].check(F.slot(0) == cs.omega1 && F.slot(1) == cs.omega2 &&
                                     F.slot(2) == cs.omega2 + apply_beta(m, conn.C) && F.slot(3) == *cs.omega3,
                                 name);
    c["3-Bianchi"].check(all_zero(bianchi_residual(m, conn)), name);
  }
  for (int it = 0; it < 100; ++it) {
    const std::string& name = kAbelianH[it % kAbelianH.size()];
    const HigherAlgebra& m = model(name);
    ThreeConnection conn = random_connection3(m, rng, 5, kLim);
    c["N=2 generalized Bianchi"].check(generalized_bianchi(m, as_generalized(conn), k2).is_zero(), name);
  }
  c.notes.push_back("N=2 generalized Bianchi on the abelian-h builtins");
}

void gauge_covariance(Criterion& c) {
  Rng rng(108);
  const auto ctx = DerivativeContext::type1(Rational(-1));
  for (int it = 0; it < 60; ++it) {
    const std::string& name = kCrossed[it % kCrossed.size()];
    GroupModel gm = GroupModel::builtin(name);
    const HigherAlgebra& m = gm.model();
    TwoConnection conn = random_connection2(m, rng, 4, kLim);
    GroupElement G = random_group_element(gm, rng, 1, 4, kLim);
    TwoConnection t = gauge_transform2(gm, conn, G);
    AlgGForm F = generalized_curvature(m, as_generalized(conn), ctx);
    c["F'=Ad F"].check(generalized_curvature(m, as_generalized(t), ctx) == adjoint(gm, inverse(gm, G), F), name);
    CurvatureSet cs = curvature2(m, conn);
    CurvatureSet ct = curvature2(m, t);
    UnipotentMatrix gi = G.g.inverse();
    c["Omega1' display"].check(ct.omega1 == gm.act(gi, cs.omega1), name);
    c["Omega2' display"].check(ct.omega2 == gm.act(gi, cs.omega2 + act(m, cs.omega1, G.phi[0])), name);
  }
  for (int it = 0; it < 60; ++it) {
    const std::string& name = kTwoCrossed[it % kTwoCrossed.size()];
    GroupModel gm = GroupModel::builtin(name);
    const HigherAlgebra& m = gm.model();
    ThreeConnection conn = random_connection3(m, rng, 4, kLim);
    GroupElement G = random_group_element(gm, rng, 2, 4, kLim);
    ThreeConnection t = gauge_transform3(gm, conn, G);
    UnipotentMatrix gi = G.g.inverse();
    const AlgForm& phi = G.phi[0];
    const AlgForm& psi = *G.psi;
    bool ok = t.A == gm.act(gi, conn.A) + gm.maurer_cartan(G.g) + gm.act(gi, apply_alpha(m, phi)) &&
              t.B == gm.act(gi, conn.B + act(m, conn.A, phi) + ext_d(phi) + bracket(phi, phi) * Rational(1, 2) +
                                    apply_beta(m, psi)) &&
              t.C == gm.act(gi, conn.C + act(m, conn.A, psi) + peiffer(m, conn.B, phi) - peiffer(m, phi, conn.B) +
                                    ext_d(psi) + act_prime(m, phi, psi));
    c["N=2 final display"].check(ok, name);
  }
}

void chern_weil(Criterion& c) {
  Rng rng(109);
  const std::vector<std::string> cs4_models = {"adjoint_sl2", "skeletal_sl2", "skeletal_n3"};
  for (int it = 0; it < 102; ++it) {
    const std::string& name = cs4_models[it % cs4_models.size()];
    const HigherAlgebra& m = model(name);
    TwoConnection conn = random_connection2(m, rng, 5, kLim);
    CurvatureSet cs = curvature2(m, conn);
    OrdinaryForm cs4c = cs4(m, conn);
    OrdinaryForm p5 = chern5(m, cs);
    c["d(CS4)=P5"].check(ext_d(cs4c) == p5, name);
    c["CS4 two paths"].check(cs4c == cs4_generalized(m, conn), name);
    c["P5 two paths"].check(p5 == chern5_generalized(m, conn), name);
  }
  const std::vector<std::string> cs5_models = {"symplectic_sl2", "symplectic_n3"};
  for (int it = 0; it < 100; ++it) {
    const std::string& name = cs5_models[it % cs5_models.size()];
    const HigherAlgebra& m = model(name);
    ThreeConnection conn = random_connection3(m, rng, 6, kLim);
    CurvatureSet cs = curvature3(m, conn);
    OrdinaryForm cs5c = cs5(m, conn);
    OrdinaryForm p6 = chern6(m, cs);
    c["d(CS5)=P6"].check(ext_d(cs5c) == p6, name);
    c["P6 two paths"].check(p6 == chern6_generalized(m, conn), name);
    c["CS5 two paths"].check(cs5c == cs5_generalized(m, conn), name);
  }
  c.notes.push_back("CS4 on 5-charts, CS5 on 6-charts");
}

void cs4_variation(Criterion& c) {
  Rng rng(110);
  const std::vector<std::string> models = {"adjoint_sl2", "skeletal_sl2", "skeletal_n3"};
  long boundary_zero = 0;
  long total = 0;
  for (int it = 0; it < 51; ++it) {
    const std::string& name = models[it % models.size()];
    GroupModel gm = GroupModel::builtin(name);
    TwoConnection conn = random_connection2(gm.model(), rng, 5, kLim);
    GroupElement G = random_group_element(gm, rng, 1, 5, kLim);
    Cs4Variation v = cs4_gauge_variation(gm, conn, G);
    c["CS4'-CS4 closed"].check(ext_d(v.difference).is_zero(), name);
    ++total;
    boundary_zero += v.residual.is_zero() ? 1 : 0;
  }
  c.notes.push_back("reported: boundary match under F(phi)=dphi+1/2[phi,phi] zero on " + std::to_string(boundary_zero) +
                    "/" + std::to_string(total));
}

void actions(Criterion& c) {
  Rng rng(111);
  const HigherAlgebra& sk = model("skeletal_sl2");
  for (int it = 0; it < 50; ++it) {
    TwoConnection conn = random_connection2(sk, rng, 4, kLim);
    Rational bf = integrate_cube(contract(*sk.pairings.gh, field_strength(conn.A) * Rational(2), conn.B));
    c["skeletal 2CS = BF"].check(action_2cs(sk, conn) == bf);
  }
  for (int it = 0; it < 60; ++it) {
    const std::string& name = kCrossed[it % kCrossed.size()];
    const HigherAlgebra& m = model(name);
    TwoConnection conn = random_connection2(m, rng, 4, kLim);
    CurvatureSet cs = curvature2(m, conn);
    Rational slotwise = integrate_cube(contract(*m.pairings.sym_g, cs.omega1, hodge(cs.omega1))) +
                        integrate_cube(contract(*m.pairings.sym_h, cs.omega2, hodge(cs.omega2)));
    Rational s2 = action_2ym(m, conn);
    c["2YM = slotwise sum"].check(s2 == slotwise, name);
    c["YM >= 0"].check(action_ym(m, conn.A) >= Rational(0), name);
    c["2YM >= 0"].check(s2 >= Rational(0), name);
  }
  for (int it = 0; it < 50; ++it) {
    const std::string& name = kTwoCrossed[it % kTwoCrossed.size()];
    const HigherAlgebra& m = model(name);
    c["3YM >= 0"].check(action_3ym(m, random_connection3(m, rng, 4, kLim)) >= Rational(0), name);
  }
}

std::string capture(const std::string& cmd, int& rc) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    rc = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void cli(Criterion& c, const std::string& exe, const std::string& dir) {
  std::ifstream cases(dir + "/cases.txt");
  if (!cases) throw std::runtime_error("cannot read " + dir + "/cases.txt");
  std::string line;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ';')) f.push_back(field);
    f.resize(5);
    const std::string cmd = "cd '" + dir + "' && '" + exe + "' " + f[1] + " '" + dir + "/" + f[2] + "' " + f[3] + " 2>&1";
    int rc1 = 0;
    int rc2 = 0;
    std::string first = capture(cmd, rc1);
    std::string second = capture(cmd, rc2);
    // Error messages mention the scenario path; goldens keep it relative.
    for (std::string* s : {&first, &second}) {
      for (std::size_t pos; (pos = s->find(dir + "/")) != std::string::npos;) s->erase(pos, dir.size() + 1);
    }
    c["golden byte-identical"].check(first == slurp(dir + "/" + f[0] + ".expected"), f[0]);
    c["deterministic rerun"].check(first == second, f[0]);
    c["exit code"].check(rc1 == std::stoi(f[4]) && rc2 == rc1, f[0] + " gave " + std::to_string(rc1));
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : HGF_CLI_PATH;
  const std::string golden = argc > 2 ? argv[2] : HGF_GOLDEN_DIR;
  const auto t0 = std::chrono::steady_clock::now();

  run(1, "Exterior core (1000 instances)", exterior);
  run(2, "Type-N calculus", type_n_calculus);
  run(3, "DGLA structure (240 triples)", dgla);
  run(4, "Axiom validators", validators);
  run(5, "Maurer-Cartan", maurer_cartan);
  run(6, "N=1 adjoint", adjoint_action);
  run(7, "Curvature and Bianchi", curvature_bianchi);
  run(8, "Gauge covariance", gauge_covariance);
  run(9, "Chern-Weil", chern_weil);
  run(10, "CS4 gauge variation", cs4_variation);
  run(11, "Actions", actions);
  run(12, "CLI goldens", [&](Criterion& c) { cli(c, exe, golden); });

  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 12 criteria failed, %.1fs total\n", failures, total);
  return failures == 0 ? 0 : 1;
}
