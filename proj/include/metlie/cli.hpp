#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "metlie/redext.hpp"

namespace metlie::cli {

struct BracketEntry {
  std::size_t i = 0, j = 0;  // 0-based, i < j
  std::map<std::size_t, Rational> coeffs;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

struct AlgebraDocument {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
  std::optional<Matrix> form;
  std::optional<std::vector<Vector>> nilradical_hint;
  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

// Throws ParseError (syntax, with line and column) or PreconditionError.
AlgebraDocument parse_document(const std::string& text);
std::string emit_document(const AlgebraDocument& doc);

AlgebraDocument to_document(const LieAlgebra& L, const std::optional<Matrix>& form, const std::string& name);
AlgebraDocument to_document(const MetricLieAlgebra& M);
LieAlgebra algebra_of(const AlgebraDocument& doc);
// Missing forms become the zero form.
MetricLieAlgebra metric_of(const AlgebraDocument& doc);

// Built-in algebras: ab(n,s), heis3, sl2, su2, su2xsl2, osc4, example42,
// ko1(n,s,<delta-file>), spiral(b1,b2).
std::vector<std::string> catalog_names();
std::optional<AlgebraDocument> catalog_lookup(const std::string& name);
std::vector<std::string> catalog_suggestions(const std::string& name);
// Catalog name or path to a JSON document.
AlgebraDocument resolve_algebra(const std::string& ref);

std::uint64_t fnv1a64(const std::string& data);

// Exit codes: 0 success, 2 precondition or usage failure, 3 certificate or
// internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metlie::cli
