#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "metlie/lie_algebra.hpp"

namespace metlie {

struct Signature {
  std::size_t p = 0, q = 0, r = 0;
  std::size_t witt_index() const { return p < q ? p : q; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

class MetricLieAlgebra {
 public:
  MetricLieAlgebra() = default;
  MetricLieAlgebra(LieAlgebra algebra, SymBilinearForm form, std::string name = "");

  const LieAlgebra& algebra() const { return algebra_; }
  const SymBilinearForm& form() const { return form_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return algebra_.dim(); }
  bool invariant() const { return invariant_; }
  bool nondegenerate() const { return nondegenerate_; }

 private:
  LieAlgebra algebra_;
  SymBilinearForm form_;
  std::string name_;
  bool invariant_ = false;
  bool nondegenerate_ = false;
};

struct InvarianceResult {
  bool ok = true;
  // (x, y1, y2) basis indices with <[x,y1],y2> + <y1,[x,y2]> = value != 0.
  std::optional<std::array<std::size_t, 3>> witness;
  Rational value = 0;
};

struct NilinvarianceResult {
  bool pass = true;  // a pass is evidence only; a fail is conclusive
  std::optional<Vector> witness;
  std::size_t checked = 0;
};

struct WittBasis {
  std::vector<Vector> v;
  std::vector<Vector> w;
  std::vector<Vector> v_star;
  std::vector<Rational> w_norms;  // <w_i, w_i>
};

Signature signature(const SymBilinearForm& B);
// Congruence diagonalisation: columns of T with T^T B T diagonal.
Matrix diagonalizing_basis(const Matrix& B);
Subspace metric_radical(const MetricLieAlgebra& M);
InvarianceResult is_invariant(const LieAlgebra& L, const SymBilinearForm& B);
InvarianceResult is_invariant(const MetricLieAlgebra& M);
// Invariance only for x ranging over the given vectors.
InvarianceResult invariance_under(const LieAlgebra& L, const SymBilinearForm& B, const std::vector<Vector>& xs);
NilinvarianceResult nilinvariance_probe(const MetricLieAlgebra& M, std::size_t samples, std::uint64_t seed = 1);
bool totally_isotropic(const SymBilinearForm& B, const Subspace& U);
// With orthogonalize = false the w part is the raw orthogonal complement basis.
WittBasis witt_basis(const MetricLieAlgebra& M, const Subspace& U, bool orthogonalize = true);
Subspace orthogonal_complement(const SymBilinearForm& B, const Subspace& U);
Subspace j0_ideal(const MetricLieAlgebra& M);
// nullopt means "abelian".
std::optional<Subspace> central_isotropic_ideal(const MetricLieAlgebra& M);

}  // namespace metlie
