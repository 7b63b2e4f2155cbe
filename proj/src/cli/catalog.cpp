#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "metlie/builders.hpp"
#include "metlie/cli.hpp"
#include "metlie/einstein.hpp"
#include "metlie/error.hpp"

namespace metlie::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Matrix matrix_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw PreconditionError(what + " must be a square matrix of rationals");
  const std::size_t n = j.size();
  Matrix M(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw PreconditionError(what + " must be square");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& v = j[r][c];
      M(r, c) = v.is_number_integer() ? Rational(Integer(v.dump())) : parse_rational(v.get<std::string>());
    }
  }
  return M;
}

// Delta file: a matrix, or {"delta": matrix, "base_form": matrix}.
std::pair<Matrix, std::optional<Matrix>> read_delta(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError("delta file '" + path + "': " + e.what());
  }
  if (j.is_object()) {
    std::optional<Matrix> bf;
    if (j.contains("base_form")) bf = matrix_from_json(j["base_form"], "base_form");
    return {matrix_from_json(j.at("delta"), "delta"), bf};
  }
  return {matrix_from_json(j, "delta"), std::nullopt};
}

std::size_t to_size(const std::string& s) { return static_cast<std::size_t>(std::stoul(s)); }

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"ab(n,s)", "heis3", "sl2", "su2", "su2xsl2", "osc4", "example42", "ko1(n,s,<delta-file>)", "spiral(b1,b2)"};
}

std::optional<AlgebraDocument> catalog_lookup(const std::string& name) {
  std::smatch m;
  static const std::regex ab(R"(ab\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  static const std::regex ko1(R"(ko1\(\s*(\d+)\s*,\s*(\d+)\s*,\s*([^)]+?)\s*\))");
  static const std::regex spiral(R"(spiral\(\s*([-+0-9/]+)\s*,\s*([-+0-9/]+)\s*\))");
  if (std::regex_match(name, m, ab)) {
    auto M = build_ab(to_size(m[1]), to_size(m[2]));
    return to_document(M.algebra(), M.form().gram(), name);
  }
  if (std::regex_match(name, m, ko1)) {
    auto [delta, bf] = read_delta(m[3]);
    auto M = build_ko1(to_size(m[1]), to_size(m[2]), delta, bf);
    return to_document(M.algebra(), M.form().gram(), name);
  }
  if (std::regex_match(name, m, spiral)) {
    auto M = build_ko1(8, 2, spiral_delta(parse_rational(m[1].str()), parse_rational(m[2].str())), spiral_base_form());
    return to_document(M.algebra(), M.form().gram(), name);
  }
  if (name == "heis3") return to_document(build_heis3(), std::nullopt, name);
  if (name == "sl2") {
    LieAlgebra L = build_sl2();
    return to_document(L, killing_form(L).gram(), name);
  }
  if (name == "su2") return to_document(build_su2(), Matrix::identity(3), name);
  if (name == "su2xsl2") {
    LieAlgebra L = direct_sum(build_su2(), build_sl2());
    return to_document(L, block_diag(Matrix::identity(3), killing_form(build_sl2()).gram()), name);
  }
  if (name == "osc4") {
    auto M = build_oscillator();
    return to_document(M.algebra(), M.form().gram(), name);
  }
  if (name == "example42") {
    auto M = build_example42();
    return to_document(M.algebra(), M.form().gram(), name);
  }
  return std::nullopt;
}

std::vector<std::string> catalog_suggestions(const std::string& name) {
  std::string head = name.substr(0, name.find('('));
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& c : catalog_names()) {
    std::string ch = c.substr(0, c.find('('));
    std::size_t d = edit_distance(head, ch);
    if (d <= 3 || (!head.empty() && ch.rfind(head, 0) == 0)) scored.emplace_back(d, c);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (const auto& [d, c] : scored) out.push_back(c);
  return out;
}

AlgebraDocument resolve_algebra(const std::string& ref) {
  if (auto d = catalog_lookup(ref)) return *d;
  std::ifstream probe(ref);
  if (probe) return parse_document(read_file(ref));
  std::string msg = "unknown algebra '" + ref + "'";
  auto s = catalog_suggestions(ref);
  if (!s.empty()) {
    msg += "; did you mean";
    for (std::size_t k = 0; k < s.size(); ++k) msg += (k ? ", " : " ") + s[k];
    msg += "?";
  }
  msg += " (catalog:";
  for (const auto& c : catalog_names()) msg += " " + c;
  msg += ")";
  throw PreconditionError(msg);
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace metlie::cli
