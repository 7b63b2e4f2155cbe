#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metlie/forms.hpp"

namespace metlie {

struct ReductionStep {
  Subspace j;
  WittBasis witt;               // v spans j, v_star spans the complement a, w is raw
  Matrix basis_change;          // columns v_star, w, v
  MetricLieAlgebra quotient;    // on the w basis
  LieAlgebra a_algebra;         // a = g / j^perp on the v_star basis
  // omega[i][k]: coordinates in the v basis of omega(w_i, w_k)
  std::vector<std::vector<Vector>> omega;
  std::vector<Matrix> delta;    // delta[l] acts on the quotient, one per v_star[l]
  std::vector<Matrix> xi;       // xi[l]: quotient -> j, dim(j) x dim(quotient)
};

struct DoubleExtensionSpec {
  MetricLieAlgebra base;
  LieAlgebra a_algebra;
  std::vector<Matrix> delta;    // one skew derivation of the base per basis element of a
};

struct ReductionChain {
  std::vector<ReductionStep> steps;
  MetricLieAlgebra final;
};

ReductionStep reduce_by_ideal(const MetricLieAlgebra& M, const Subspace& j);
ReductionChain complete_reduction(const MetricLieAlgebra& M);
// Basis order of the result: a, base, a*. Names of a* are the a names with a
// trailing '*' unless given.
MetricLieAlgebra double_extend(const DoubleExtensionSpec& spec, std::vector<std::string> dual_names = {});
void check_spec(const DoubleExtensionSpec& spec);

MetricLieAlgebra build_ab(std::size_t n, std::size_t s);
MetricLieAlgebra build_example42();
// delta acts on ab^{n-2}_{s-1}; base_form overrides the diagonal form.
MetricLieAlgebra build_ko1(std::size_t n, std::size_t s, const Matrix& delta,
                           const std::optional<Matrix>& base_form = std::nullopt);
// The 4-dimensional oscillator: definite ab^2 extended by a rotation.
MetricLieAlgebra build_oscillator();
// Delta of the sharp 6-dimensional example in the basis (b, x1, x2, y) and
// the matching base form.
Matrix example42_delta();
Matrix example42_base_form();

}  // namespace metlie
