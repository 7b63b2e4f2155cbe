#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metlie/algebraic.hpp"
#include "metlie/forms.hpp"

namespace metlie {

enum class CaseTag { case1_nonzero_real_part, case2_imaginary_pair, out_of_scope_n_gt_5, nilpotent, unclassified };
enum class Verdict { obstructed, schanuel_conditional, inapplicable };
std::string to_string(CaseTag c);
std::string to_string(Verdict v);

inline constexpr const char* kRuleGelfondSchneider = "gelfond-schneider";
inline constexpr const char* kRuleSchanuel = "schanuel-conditional";

struct Hypothesis {
  std::string name;
  bool holds = false;
  std::string detail;
};

// Exponent (re + i*im) * base of an eigenvalue e^{...} of exp(X).
struct ExpExponent {
  int re = 0, im = 0;
  friend bool operator==(const ExpExponent&, const ExpExponent&) = default;
};

struct ObstructionReport {
  EigenvalueData input_spectrum;
  std::size_t n = 0;
  CaseTag case_tag = CaseTag::unclassified;
  std::string base;  // "alpha = ..." or "lambda = ..."
  std::vector<ExpExponent> exponents;
  std::vector<std::string> exp_eigenvalue_patterns;
  bool patterns_closed_under_power_i = false;
  Verdict verdict = Verdict::inapplicable;
  std::string rule_cited;
  std::vector<Hypothesis> hypotheses;
  Rational residual;
};

// Throws PreconditionError when the eigenvalue condition fails on a
// non-nilpotent spectrum.
ObstructionReport lemma52_verdict(const EigenvalueData& E, std::size_t n);
ObstructionReport lemma52_verdict(const Matrix& A);

struct ElementObstruction {
  Subspace restriction;  // defaults to the image of the semisimple part of ad(a)
  Matrix restricted;     // ad(a) on the restriction, in its generator coordinates
  ObstructionReport report;
};
ElementObstruction obstruct_element(const MetricLieAlgebra& M, const Vector& a,
                                    const std::optional<Subspace>& restriction = std::nullopt);

struct RelationBasis {
  std::vector<AlgebraicNumber> numbers;
  Poly field_minpoly;           // common field Q(theta)
  std::optional<AlgebraicNumber> theta;
  std::vector<Poly> representations;  // numbers[k] = representations[k](theta)
  std::vector<Vector> relations;      // sum_k c_k numbers[k] = 0
  // sum of squares of the listed numbers, computed in the field. For a
  // conjugation-closed list this is the eigenvalue condition after writing
  // Re z = (z + conj z)/2 and Im z = i(conj z - z)/2.
  Poly sum_of_squares;
  bool conjugation_closed = false;
  bool quadratic_relation_holds = false;
  std::string quadratic_relation;
};

inline constexpr std::size_t kDefaultFieldDegreeBound = 64;
RelationBasis qlinear_relations(const std::vector<AlgebraicNumber>& eigs,
                                std::size_t degree_bound = kDefaultFieldDegreeBound);

struct ProbeRow {
  Rational t;
  bool trivial = false;   // t = 0
  bool excluded = false;  // some coefficient interval contains no integer
  std::optional<std::size_t> witness;  // index k of the coefficient of x^{n-k}
  // certified enclosures of the characteristic polynomial coefficients of
  // exp(t ad a), highest degree first
  std::vector<std::pair<Rational, Rational>> coefficients;
};
std::vector<ProbeRow> integer_exponential_probe(const MetricLieAlgebra& M, const Vector& a,
                                                const std::vector<Rational>& t_grid);
std::vector<ProbeRow> integer_exponential_probe(const Matrix& A, const std::vector<Rational>& t_grid);

}  // namespace metlie
