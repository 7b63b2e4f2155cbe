#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "metlie/matrix.hpp"
#include "metlie/subspace.hpp"

namespace metlie {

using LinearMap = Matrix;

// Finite-dimensional Lie algebra over Q given by structure constants
// [b_i, b_j] = sum_k c_ij^k b_k. Only i < j is stored; the rest follows by
// antisymmetry.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim = 0, std::vector<std::string> names = {});

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  // Sets [b_i, b_j] = v (and [b_j, b_i] = -v). Requires i != j.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);
  // [b_i, b_j] for any i, j.
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  Matrix ad(const Vector& x) const;
  Matrix ad_basis(std::size_t i) const;
  bool is_abelian() const { return nonzero_.empty(); }
  // Nonzero brackets (i < j, value).
  const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& nonzero_brackets() const { return nonzero_; }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

 private:
  std::size_t n_;
  std::vector<std::string> names_;
  std::vector<Vector> table_;  // index i*n+j for i<j
  std::vector<std::tuple<std::size_t, std::size_t, Vector>> nonzero_;
};

class SymBilinearForm {
 public:
  SymBilinearForm() = default;
  explicit SymBilinearForm(Matrix gram);
  const Matrix& gram() const { return g_; }
  std::size_t dim() const { return g_.rows(); }
  Rational operator()(const Vector& x, const Vector& y) const;
  friend bool operator==(const SymBilinearForm& a, const SymBilinearForm& b) { return a.g_ == b.g_; }

 private:
  Matrix g_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::array<std::size_t, 3>> jacobi_violations;  // i < j < k
};

struct SeriesReport {
  std::vector<Subspace> derived;
  std::vector<Subspace> lower_central;
  bool is_solvable = false;
  bool is_nilpotent = false;
};

struct JordanPair {
  Matrix semisimple;
  Matrix nilpotent;
  // S = s_poly(A).
  std::vector<Rational> s_poly;
};

ValidationReport validate_structure(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);
Subspace centralizer(const LieAlgebra& L, const Subspace& S);
// span{[x, y] : x in A, y in B}
Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B);
bool is_ideal(const LieAlgebra& L, const Subspace& I);
bool is_subalgebra(const LieAlgebra& L, const Subspace& S);
SeriesReport series(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);
SymBilinearForm killing_form(const LieAlgebra& L);
JordanPair jordan_chevalley(const Matrix& A);
Subspace nilradical(const LieAlgebra& L, const std::optional<Subspace>& hint = std::nullopt);

struct Quotient {
  LieAlgebra algebra;
  Matrix projection;                       // dim(L/I) x dim(L)
  std::vector<std::size_t> complement;     // ambient indices spanning the complement
};
Quotient quotient_by_ideal(const LieAlgebra& L, const Subspace& I);
// Subalgebra on the generators of S (in their stored order).
LieAlgebra restrict_to_subalgebra(const LieAlgebra& L, const Subspace& S);

}  // namespace metlie
