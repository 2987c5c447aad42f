#include "hgf/io.hpp"

#include <cctype>
#include <map>

namespace hgf {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

int need_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string need_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

class PolyParser {
 public:
  PolyParser(std::string_view s, int dim) : s_(s), dim_(dim) {}

  Polynomial parse() {
    Polynomial out(dim_);
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = Rational(-1);
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-' in polynomial '" + std::string(s_) + "'");
      }
      first = false;
      out += term() * sign;
      skip();
    }
    return out;
  }

 private:
  Polynomial term() {
    Polynomial t = Polynomial::constant(dim_, Rational(1));
    while (true) {
      skip();
      if (at_end()) fail("dangling operator in polynomial '" + std::string(s_) + "'");
      if (peek() == 'x') {
        ++pos_;
        int v = integer();
        if (v < 1 || v > dim_) fail("variable x" + std::to_string(v) + " outside the chart");
        int e = 1;
        skip();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip();
          e = integer();
        }
        for (int i = 0; i < e; ++i) t = t * Polynomial::variable(dim_, v - 1);
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
        try {
          t *= Rational::parse(s_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        } catch (const std::domain_error& e) {
          fail(e.what());
        }
      } else {
        fail("unexpected character '" + std::string(1, peek()) + "' in polynomial");
      }
      skip();
      if (at_end() || peek() != '*') return t;
      ++pos_;
    }
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 3) fail("expected a small integer in polynomial '" + std::string(s_) + "'");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  std::string_view s_;
  int dim_;
  std::size_t pos_ = 0;
};

// Indices in any order; the permutation sign goes into the coefficient.
OrdinaryForm parse_term(const Json& t, int dim, int degree) {
  const Json& j = need(t, "dx");
  if (!j.is_array()) fail("'dx' must be an array of 1-based indices");
  std::vector<int> idx;
  for (const auto& x : j) {
    int i = need_int(x, "dx index");
    if (i < 1 || i > dim) throw DimensionError("dx index " + std::to_string(i) + " outside a " + std::to_string(dim) + "-chart");
    idx.push_back(i);
  }
  if (static_cast<int>(idx.size()) != degree) throw DimensionError("dx list length does not match the form degree");
  return OrdinaryForm::monomial(parse_polynomial(need_string(need(t, "coeff"), "coeff"), dim), idx);
}

int parse_degree(const Json& j, int dim) {
  int p = need_int(need(j, "degree"), "degree");
  if (p < 0 || p > dim) throw DimensionError("form degree " + std::to_string(p) + " on a " + std::to_string(dim) + "-chart");
  return p;
}

Json terms_json(const OrdinaryForm& f, const std::string* label) {
  Json terms = Json::array();
  for (const auto& [s, p] : f.components()) {
    Json t;
    if (label) t["basis"] = *label;
    t["dx"] = index_list(s);
    t["coeff"] = p.str();
    terms.push_back(t);
  }
  return terms;
}

Matrix parse_matrix(const Json& j, int rows, int cols, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) fail(std::string(what) + " must have " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      fail(std::string(what) + " must have " + std::to_string(cols) + " columns");
    }
    for (int k = 0; k < cols; ++k) m(i, k) = parse_rational(row[k]);
  }
  return m;
}

int label_index(const LieAlgebra& a, const Json& j) {
  if (j.is_number_integer()) {
    int i = j.get<int>();
    if (i < 0 || i >= a.dim) fail("basis index out of range for " + a.name);
    return i;
  }
  std::string s = need_string(j, "basis label");
  for (int i = 0; i < a.dim; ++i)
    if (a.labels[i] == s) return i;
  fail("unknown basis label '" + s + "' in " + a.name);
}

AlgebraPtr parse_algebra(const Json& j, const std::string& name) {
  int dim = need_int(need(j, "dim"), "algebra dim");
  if (dim < 1 || dim > 8) fail("algebra dimensions must lie in 1..8");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) labels.push_back(need_string(l, "label"));
    if (static_cast<int>(labels.size()) != dim) fail("label count != dim for " + name);
  }
  AlgebraPtr bare = make_abelian(name, dim, labels);
  Bilinear f(dim, dim, dim);
  if (j.contains("brackets")) {
    for (const auto& e : j.at("brackets")) {
      if (!e.is_array() || e.size() != 4) fail("bracket entries are [a, b, c, value]");
      f.add(label_index(*bare, e[0]), label_index(*bare, e[1]), label_index(*bare, e[2]), parse_rational(e[3]));
    }
  }
  return make_lie_algebra(name, dim, f, bare->labels);
}

Bilinear parse_tensor(const Json& j, const LieAlgebra& a, const LieAlgebra& b, const LieAlgebra& c) {
  Bilinear t(a.dim, b.dim, c.dim);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) fail("tensor entries are [a, b, c, value]");
    t.add(label_index(a, e[0]), label_index(b, e[1]), label_index(c, e[2]), parse_rational(e[3]));
  }
  t.normalize();
  return t;
}

LoadedModel explicit_model(const Json& j) {
  auto m = std::make_shared<HigherAlgebra>();
  m->name = j.contains("name") ? need_string(j.at("name"), "model name") : std::string("explicit");
  std::string level = need_string(need(j, "level"), "level");
  if (level == "lie") {
    m->level = ModelLevel::Lie;
  } else if (level == "crossed") {
    m->level = ModelLevel::Crossed;
  } else if (level == "two_crossed") {
    m->level = ModelLevel::TwoCrossed;
  } else {
    fail("level must be lie, crossed or two_crossed");
  }
  m->g = parse_algebra(need(j, "g"), m->name + "_g");
  if (m->level != ModelLevel::Lie) {
    m->h = parse_algebra(need(j, "h"), m->name + "_h");
    m->alpha = j.contains("alpha") ? parse_matrix(j.at("alpha"), m->g->dim, m->h->dim, "alpha")
                                   : Matrix(m->g->dim, m->h->dim);
    m->act_h = j.contains("act_h") ? parse_tensor(j.at("act_h"), *m->g, *m->h, *m->h)
                                   : Bilinear(m->g->dim, m->h->dim, m->h->dim);
  }
  if (m->level == ModelLevel::TwoCrossed) {
    m->l = parse_algebra(need(j, "l"), m->name + "_l");
    m->beta = j.contains("beta") ? parse_matrix(j.at("beta"), m->h->dim, m->l->dim, "beta")
                                 : Matrix(m->h->dim, m->l->dim);
    m->act_l = j.contains("act_l") ? parse_tensor(j.at("act_l"), *m->g, *m->l, *m->l)
                                   : Bilinear(m->g->dim, m->l->dim, m->l->dim);
    m->peiffer = j.contains("peiffer") ? parse_tensor(j.at("peiffer"), *m->h, *m->h, *m->l)
                                       : Bilinear(m->h->dim, m->h->dim, m->l->dim);
    m->fine = j.value("fine", false);
  }
  m->abelian_h = m->h && m->h->f.entries.empty();
  if (j.contains("pairings")) {
    const Json& p = j.at("pairings");
    auto dim_of = [&](const AlgebraPtr& a, const char* what) {
      if (!a) fail(std::string("pairing ") + what + " refers to a missing algebra");
      return a->dim;
    };
    if (p.contains("gh")) m->pairings.gh = parse_matrix(p.at("gh"), dim_of(m->g, "gh"), dim_of(m->h, "gh"), "gh");
    if (p.contains("gl")) m->pairings.gl = parse_matrix(p.at("gl"), dim_of(m->g, "gl"), dim_of(m->l, "gl"), "gl");
    if (p.contains("h_anti")) {
      m->pairings.h_anti = parse_matrix(p.at("h_anti"), dim_of(m->h, "h_anti"), dim_of(m->h, "h_anti"), "h_anti");
    }
    if (p.contains("sym_g")) m->pairings.sym_g = parse_matrix(p.at("sym_g"), dim_of(m->g, "sym_g"), m->g->dim, "sym_g");
    if (p.contains("sym_h")) m->pairings.sym_h = parse_matrix(p.at("sym_h"), dim_of(m->h, "sym_h"), m->h->dim, "sym_h");
    if (p.contains("sym_l")) m->pairings.sym_l = parse_matrix(p.at("sym_l"), dim_of(m->l, "sym_l"), m->l->dim, "sym_l");
  }
  return {m, std::nullopt, "explicit"};
}

}  // namespace

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  std::string s = need_string(j, "rational");
  try {
    return Rational::parse(s);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  } catch (const std::domain_error& e) {
    fail(e.what());
  }
}

Json to_json(const Rational& r) { return r.str(); }

Polynomial parse_polynomial(std::string_view text, int dim) { return PolyParser(text, dim).parse(); }

OrdinaryForm parse_form(const Json& j, int dim) {
  int p = parse_degree(j, dim);
  OrdinaryForm f(dim, p);
  if (j.contains("terms")) {
    for (const auto& t : j.at("terms")) {
      f += parse_term(t, dim, p);
    }
  }
  return f;
}

Json to_json(const OrdinaryForm& f) {
  Json j;
  j["degree"] = f.degree();
  j["terms"] = terms_json(f, nullptr);
  return j;
}

AlgForm parse_alg_form(const Json& j, const AlgebraPtr& alg, int dim) {
  int p = parse_degree(j, dim);
  AlgForm out(alg, dim, p);
  if (j.contains("terms")) {
    for (const auto& t : j.at("terms")) {
      int a = label_index(*alg, need(t, "basis"));
      out.add(a, parse_term(t, dim, p));
    }
  }
  return out;
}

Json to_json(const AlgForm& f) {
  Json j;
  j["degree"] = f.degree();
  Json terms = Json::array();
  for (int a = 0; a < f.size(); ++a) {
    for (auto& t : terms_json(f[a], &f.algebra()->labels[a])) terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

LoadedModel parse_model(const Json& j) {
  if (j.is_string()) return parse_model(Json{{"builtin", j}});
  if (!j.is_object()) fail("model must be an object or a builtin name");
  if (j.contains("builtin")) {
    std::string name = need_string(j.at("builtin"), "builtin");
    try {
      const Builtin& b = builtin(name);
      return {b.model, b.realization, "builtin"};
    } catch (const AlgebraError&) {
      fail("unknown builtin model '" + name + "'");
    }
  }
  if (j.contains("corrupted")) {
    std::string name = need_string(j.at("corrupted"), "corrupted");
    for (const auto& c : corrupted_models()) {
      if (c.name == name) return {c.model, std::nullopt, "corrupted"};
    }
    fail("unknown corrupted model '" + name + "'");
  }
  return explicit_model(j);
}

GroupElement parse_group_element(const Json& j, const GroupModel& gm, int n_type, int dim) {
  const HigherAlgebra& m = gm.model();
  UnipotentMatrix g = UnipotentMatrix::identity(gm.r(), dim);
  if (j.contains("values")) {
    std::vector<Polynomial> vals;
    for (const auto& v : j.at("values")) vals.push_back(parse_polynomial(need_string(v, "value"), dim));
    if (vals.size() != gm.realization().free_positions.size()) {
      fail("group element needs " + std::to_string(gm.realization().free_positions.size()) + " values");
    }
    g = gm.element(vals);
  } else if (j.contains("matrix")) {
    const Json& rows = j.at("matrix");
    if (!rows.is_array() || static_cast<int>(rows.size()) != gm.r()) fail("group matrix has the wrong size");
    PolyMatrix p(gm.r(), gm.r(), dim);
    for (int i = 0; i < gm.r(); ++i) {
      if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != gm.r()) fail("group matrix has the wrong size");
      for (int k = 0; k < gm.r(); ++k) p(i, k) = parse_polynomial(need_string(rows[i][k], "entry"), dim);
    }
    g = UnipotentMatrix(p);
    // Must lie in the realized group: its Maurer-Cartan form has to be g-valued.
    gm.maurer_cartan(g);
  }
  auto form_or_zero = [&](const char* key, const AlgebraPtr& alg, int degree) {
    if (!j.contains(key)) return AlgForm(alg, dim, degree);
    AlgForm f = parse_alg_form(j.at(key), alg, dim);
    if (f.degree() != degree) throw DimensionError(std::string(key) + " must be a " + std::to_string(degree) + "-form");
    return f;
  };
  if (n_type == 1) return make_element1(gm, g, form_or_zero("phi", m.h, 1));
  return make_element2(gm, g, form_or_zero("phi", m.h, 1), AlgForm(m.h, dim, 1), form_or_zero("psi", m.l, 2));
}

Json to_json(const GroupElement& G) {
  Json j;
  Json rows = Json::array();
  const PolyMatrix& p = G.g.matrix();
  for (int i = 0; i < p.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < p.cols(); ++k) row.push_back(p(i, k).str());
    rows.push_back(row);
  }
  j["matrix"] = rows;
  j["phi"] = to_json(G.phi.at(0));
  if (G.psi) j["psi"] = to_json(*G.psi);
  return j;
}

std::string leading_term(const OrdinaryForm& f) {
  if (f.is_zero()) return "0";
  const auto& [s, p] = f.components().front();
  std::string out = "(" + Polynomial::from_terms(p.dim(), {p.terms().back()}).str() + ")";
  bool w = false;
  for (int i : index_list(s)) {
    out += (w ? "^" : " ") + std::string("dx") + std::to_string(i);
    w = true;
  }
  return out;
}

std::string leading_term(const AlgForm& f) {
  for (int a = 0; a < f.size(); ++a) {
    if (!f[a].is_zero()) return leading_term(f[a]) + " " + f.algebra()->labels[a];
  }
  return "0";
}

std::string leading_term(const AlgGForm& f) {
  for (int s = 0; s < f.num_slots(); ++s) {
    if (!f.slot(s).is_zero()) return "[" + slot_name(f.n_type(), s) + "] " + leading_term(f.slot(s));
  }
  return "0";
}

}  // namespace hgf
