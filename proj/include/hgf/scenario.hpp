#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgf/gauge.hpp"
#include "hgf/io.hpp"

namespace hgf {

/// must-pass checks decide the exit code; reported ones carry results the
/// theory does not guarantee; informational ones only carry values.
enum class Severity { MustPass, Reported, Informational };
enum class CheckStatus { Pass, Fail, Reported, Skipped };
std::string_view to_string(Severity s);
std::string_view to_string(CheckStatus s);

struct ResidualSummary {
  std::string name;
  Severity severity = Severity::MustPass;
  int instances = 0;
  int nonzero = 0;
  std::string leading = "0";  // leading term of the first nonzero instance
  bool operator==(const ResidualSummary&) const = default;
};

/// Fails when a must-pass residual is nonzero; a check holding only
/// reported residuals has status Reported.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::vector<ResidualSummary> residuals;
  std::string note;
  std::optional<double> millis;  // only with timings enabled
  bool operator==(const CheckResult&) const = default;
};

struct NamedValue {
  std::string name;
  Rational value;
  bool operator==(const NamedValue&) const = default;
};

struct NamedForm {
  std::string name;
  Json form;
  bool operator==(const NamedForm&) const = default;
};

struct Report {
  std::string command;
  std::string scenario;
  std::string model;
  int dim = 0;
  std::string context;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::vector<NamedValue> values;
  std::vector<NamedForm> forms;
  bool operator==(const Report&) const = default;

  int count(CheckStatus s) const;
  /// 0 when every must-pass check passed, 1 otherwise.
  int exit_code() const;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);
std::string to_text(const Report& r);

/// Command-line overrides applied while loading.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> max_degree;
  std::optional<int> dim;
  std::optional<Rational> k;
  std::optional<Rational> k1;
  std::optional<Rational> k2;
};

struct RngSpec {
  std::uint64_t seed = 1;
  int max_degree = 2;
  int max_terms = 2;
  int samples = 2;
};

struct Scenario {
  std::string name;
  int dim = 4;
  DerivativeContext ctx;
  bool default_ctx = true;
  LoadedModel model;
  std::optional<GroupModel> group;
  std::optional<AlgForm> lie_connection;
  std::optional<TwoConnection> conn2;
  std::optional<ThreeConnection> conn3;
  std::optional<GroupElement> element;
  std::vector<std::string> checks;
  std::vector<ActionKind> actions;
  RngSpec rng;
  bool timings = false;

  const HigherAlgebra& m() const { return *model.model; }
  /// 0 for a Lie algebra, 1 for a crossed module, 2 for a 2-crossed module.
  int n_type() const;
  RandomLimits limits() const { return {rng.max_degree, rng.max_terms, 3}; }
};

/// Check identifiers understood by `check`.
const std::vector<std::string>& check_ids();

/// Throws ParseError, DimensionError, AlgebraError or ProfileError for an
/// invalid scenario.
Scenario parse_scenario(const Json& j, const Overrides& o = {});
Scenario load_scenario(const std::string& path, const Overrides& o = {});

Report run_checks(const Scenario& s);
Report run_validate(const Scenario& s);
Report run_curvature(const Scenario& s);
Report run_gauge(const Scenario& s);
/// Evaluates `kind`, or the scenario's action list when empty.
Report run_action(const Scenario& s, std::optional<ActionKind> kind);

}  // namespace hgf
