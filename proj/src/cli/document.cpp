#include <json.hpp>

#include "metlie/cli.hpp"
#include "metlie/error.hpp"
#include "metlie/lie_algebra.hpp"

namespace metlie::cli {

using nlohmann::json;

namespace {

std::pair<int, int> line_col(const std::string& text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Semantic errors point at the first occurrence of the offending token.
[[noreturn]] void fail_at(const std::string& text, const std::string& token, const std::string& msg) {
  std::size_t pos = token.empty() ? std::string::npos : text.find(token);
  auto [l, c] = line_col(text, pos == std::string::npos ? 0 : pos);
  throw ParseError(msg, l, c);
}

struct Reader {
  const std::string& text;

  Rational rational(const json& v, const std::string& where) const {
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
    if (!v.is_string()) fail_at(text, v.dump(), where + ": expected a rational string like \"3/4\"");
    try {
      return parse_rational(v.get<std::string>());
    } catch (const PreconditionError& e) {
      fail_at(text, "\"" + v.get<std::string>() + "\"", where + ": " + e.what());
    }
  }

  std::size_t index(const json& v, std::size_t dim, const std::string& where) const {
    if (!v.is_number_unsigned() || v.get<std::size_t>() >= dim)
      fail_at(text, "", where + ": index " + v.dump() + " out of range for dimension " + std::to_string(dim));
    return v.get<std::size_t>();
  }

  Vector vector(const json& v, std::size_t dim, const std::string& where) const {
    if (!v.is_array() || v.size() != dim)
      fail_at(text, "", where + ": expected an array of " + std::to_string(dim) + " rationals");
    Vector out;
    for (std::size_t k = 0; k < dim; ++k) out.push_back(rational(v[k], where));
    return out;
  }
};

json rat(const Rational& q) { return q.get_str(); }

json vec_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat(x));
  return a;
}

}  // namespace

AlgebraDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [l, c] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    auto p = what.find("syntax error");
    throw ParseError(p == std::string::npos ? "malformed JSON" : what.substr(p), l, c);
  }
  Reader rd{text};
  if (!j.is_object()) fail_at(text, "", "document must be a JSON object");
  AlgebraDocument d;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail_at(text, "\"name\"", "name must be a string");
    d.name = j["name"].get<std::string>();
  }
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) fail_at(text, "\"dim\"", "dim must be a nonnegative integer");
  d.dim = j["dim"].get<std::size_t>();
  if (j.contains("basis")) {
    const json& b = j["basis"];
    if (!b.is_array() || b.size() != d.dim) fail_at(text, "\"basis\"", "basis must list dim names");
    for (const auto& s : b) {
      if (!s.is_string()) fail_at(text, "\"basis\"", "basis names must be strings");
      d.basis.push_back(s.get<std::string>());
    }
  } else {
    for (std::size_t k = 0; k < d.dim; ++k) d.basis.push_back("e" + std::to_string(k + 1));
  }
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) fail_at(text, "\"brackets\"", "brackets must be an array");
    for (const auto& e : j["brackets"]) {
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("coeffs"))
        fail_at(text, "\"brackets\"", "bracket entries need i, j and coeffs");
      BracketEntry be;
      be.i = rd.index(e["i"], d.dim, "bracket i");
      be.j = rd.index(e["j"], d.dim, "bracket j");
      if (be.i >= be.j) fail_at(text, "\"brackets\"", "bracket entries need i < j");
      if (!e["coeffs"].is_object()) fail_at(text, "\"coeffs\"", "coeffs must map indices to rationals");
      for (const auto& [key, val] : e["coeffs"].items()) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          k = std::stoul(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          fail_at(text, "\"" + key + "\"", "coefficient key '" + key + "' is not an index");
        }
        if (k >= d.dim) fail_at(text, "\"" + key + "\"", "coefficient index " + key + " out of range");
        be.coeffs[k] = rd.rational(val, "bracket coefficient");
      }
      for (const auto& prev : d.brackets)
        if (prev.i == be.i && prev.j == be.j) fail_at(text, "\"brackets\"", "duplicate bracket entry");
      d.brackets.push_back(std::move(be));
    }
  }
  if (j.contains("form") && !j["form"].is_null()) {
    const json& f = j["form"];
    if (!f.is_array() || f.size() != d.dim) fail_at(text, "\"form\"", "form must be a dim x dim matrix");
    Matrix G(d.dim, d.dim);
    for (std::size_t r = 0; r < d.dim; ++r) {
      Vector row = rd.vector(f[r], d.dim, "form row " + std::to_string(r));
      for (std::size_t c = 0; c < d.dim; ++c) G(r, c) = row[c];
    }
    if (!(G == G.transpose())) fail_at(text, "\"form\"", "form is not symmetric");
    d.form = G;
  }
  if (j.contains("hints") && j["hints"].contains("nilradical")) {
    std::vector<Vector> hs;
    for (const auto& v : j["hints"]["nilradical"]) hs.push_back(rd.vector(v, d.dim, "nilradical hint"));
    d.nilradical_hint = hs;
  }
  return d;
}

std::string emit_document(const AlgebraDocument& d) {
  json j;
  j["name"] = d.name;
  j["dim"] = d.dim;
  j["basis"] = d.basis;
  json br = json::array();
  for (const auto& b : d.brackets) {
    json c = json::object();
    for (const auto& [k, v] : b.coeffs) c[std::to_string(k)] = rat(v);
    br.push_back({{"i", b.i}, {"j", b.j}, {"coeffs", c}});
  }
  j["brackets"] = br;
  if (d.form) {
    json f = json::array();
    for (std::size_t r = 0; r < d.dim; ++r) f.push_back(vec_json(d.form->row(r)));
    j["form"] = f;
  }
  if (d.nilradical_hint) {
    json h = json::array();
    for (const auto& v : *d.nilradical_hint) h.push_back(vec_json(v));
    j["hints"] = {{"nilradical", h}};
  }
  return j.dump(2);
}

AlgebraDocument to_document(const LieAlgebra& L, const std::optional<Matrix>& form, const std::string& name) {
  AlgebraDocument d;
  d.name = name;
  d.dim = L.dim();
  d.basis = L.names();
  for (const auto& [i, j, v] : L.nonzero_brackets()) {
    BracketEntry b{i, j, {}};
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) b.coeffs[k] = v[k];
    d.brackets.push_back(std::move(b));
  }
  d.form = form;
  return d;
}

AlgebraDocument to_document(const MetricLieAlgebra& M) {
  return to_document(M.algebra(), M.form().gram(), M.name());
}

LieAlgebra algebra_of(const AlgebraDocument& d) {
  LieAlgebra L(d.dim, d.basis);
  for (const auto& b : d.brackets) {
    Vector v = zero_vector(d.dim);
    for (const auto& [k, c] : b.coeffs) v[k] = c;
    L.set_bracket(b.i, b.j, v);
  }
  return L;
}

MetricLieAlgebra metric_of(const AlgebraDocument& d) {
  Matrix G = d.form ? *d.form : Matrix(d.dim, d.dim);
  return MetricLieAlgebra(algebra_of(d), SymBilinearForm(G), d.name);
}

}  // namespace metlie::cli
