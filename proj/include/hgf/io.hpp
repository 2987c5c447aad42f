#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hgf/group.hpp"

namespace hgf {

using Json = nlohmann::ordered_json;

/// Rationals travel as "num/den" strings; plain integers are accepted on input.
Rational parse_rational(const Json& j);
Json to_json(const Rational& r);

/// Sums of terms like "3/2*x1^2*x3" or "-x2"; variables are x1..x<dim>.
Polynomial parse_polynomial(std::string_view text, int dim);

/// {"degree": p, "terms": [{"dx": [1, 2], "coeff": "x1 - 1/2"}, ...]}
OrdinaryForm parse_form(const Json& j, int dim);
Json to_json(const OrdinaryForm& f);

/// Same layout with an extra "basis" label per term.
AlgForm parse_alg_form(const Json& j, const AlgebraPtr& alg, int dim);
Json to_json(const AlgForm& f);

/// {"builtin": name}, {"corrupted": name} or an explicit description with
/// level, g/h/l (dim, labels, brackets), alpha, beta, act_h, act_l, peiffer
/// and pairings. Only builtins carry a group realization.
struct LoadedModel {
  ModelPtr model;
  std::optional<Realization> realization;
  std::string source;  // "builtin", "corrupted" or "explicit"
};
LoadedModel parse_model(const Json& j);

/// {"values": [poly per free position]} or {"matrix": [[poly]]}, plus
/// "phi" (N=1), "phi"/"psi" (N=2) forms. Missing forms are zero.
GroupElement parse_group_element(const Json& j, const GroupModel& gm, int n_type, int dim);
Json to_json(const GroupElement& G);

/// Highest-order term of the first nonzero component, or "0".
std::string leading_term(const OrdinaryForm& f);
std::string leading_term(const AlgForm& f);
std::string leading_term(const AlgGForm& f);

}  // namespace hgf
