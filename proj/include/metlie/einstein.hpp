#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "metlie/algebraic.hpp"
#include "metlie/forms.hpp"

namespace metlie {

struct EinsteinReport {
  SymBilinearForm killing;
  SymBilinearForm ricci;
  bool is_einstein = false;
  std::optional<Rational> lambda;  // Ric = lambda * form
};

// Ricci tensor of the bi-invariant metric: -killing/4.
SymBilinearForm ricci_biinvariant(const LieAlgebra& L);
EinsteinReport einstein_check(const MetricLieAlgebra& M);

struct EigenvalueConditionResult {
  bool holds = false;
  // sum of lambda^2 + 2 alpha^2 - 2 beta^2 over the spectrum, with multiplicity
  Rational residual;
  // certified enclosure of the same sum from the isolating disks
  Rational lower, upper;
};
EigenvalueConditionResult eigenvalue_condition(const EigenvalueData& E);

struct SkewnessResult {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (i, j) with (A^T B + B A)_ij != 0
};
SkewnessResult skewness_check(const Matrix& A, const SymBilinearForm& B);

// One level of the recursive block-triangular shape
//   X = [[A, B, C], [0, X1, D], [0, 0, -A^T]]
// A is lambda (1x1) or [[alpha, -beta], [beta, alpha]] with beta != 0.
// fillers: the entries of B row by row, then (2x2 case only) the upper entry
// of the skew block C. Empty fillers means all zero. D is determined by
// skewness.
struct PWZNode {
  bool complex_block = false;
  Rational lambda = 0;
  Rational alpha = 0, beta = 0;
  std::vector<Rational> fillers;
};

// Nodes outermost first. The leaf is a compact Cartan element of so(p', q'):
// positive_rotations act on the positive definite part, negative_rotations on
// the negative one, and the extra dimensions are zero.
struct PWZBlockSpec {
  std::vector<PWZNode> nodes;
  std::vector<Rational> positive_rotations;
  std::vector<Rational> negative_rotations;
  std::size_t extra_positive = 0;
  std::size_t extra_negative = 0;
};

struct PWZTrace {
  Matrix matrix;
  Matrix form;  // X is skew for this form
  Rational trace_sq_direct;
  Rational trace_sq_recursive;
};
// Throws PreconditionError on a malformed spec.
PWZTrace pwz_assemble_and_trace(const PWZBlockSpec& spec);
std::size_t pwz_dim(const PWZBlockSpec& spec);
// Characteristic polynomial predicted by the block structure.
Poly pwz_predicted_charpoly(const PWZBlockSpec& spec);

struct EinsteinCertificate {
  Vector a;
  Matrix sigma_a;
  Subspace nilradical;
  Subspace W0, W1;
  EigenvalueData spectrum;  // of sigma_a on W1
  Subspace ideal_i;
  // Rational isotropic line in W1 when one exists. Otherwise line_L is zero
  // and indefinite_witness holds u, w in W1 with <u,u> > 0 > <w,w>, so a real
  // isotropic line lies in their span.
  Subspace line_L;
  std::optional<std::pair<Vector, Vector>> indefinite_witness;
  std::size_t dim_g = 0, dim_n = 0, index = 0;
  std::size_t dim_n_lower = 0;  // dim W1 + dim i
  std::size_t index_lower = 0;  // dim i + 1
  std::vector<std::string> verified;
  bool sharp() const { return dim_g == 6 && dim_n == 5 && index == 2; }
};
EinsteinCertificate theorem12_certificate(const MetricLieAlgebra& M);

struct SearchConfig {
  std::size_t dim_min = 3, dim_max = 8;
  std::size_t index_min = 0, index_max = 4;
  std::size_t budget = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct SearchFinding {
  std::size_t sample = 0;
  std::string spec;
  std::size_t dim = 0, dim_nilradical = 0, index = 0;
  bool einstein = false, nilpotent = false, abelian = false;
};

struct SearchResult {
  std::size_t samples = 0;
  std::size_t einstein_hits = 0;
  std::size_t nonabelian_einstein = 0;
  std::size_t nonnilpotent_einstein = 0;
  std::vector<SearchFinding> findings;  // every non-abelian Einstein hit, by sample
};

// Samples ko1 algebras (random and targeted skew deltas) and iterated double
// extensions of flat abelian algebras. Deterministic in config.seed regardless
// of the thread count.
SearchResult sharpness_search(const SearchConfig& config);

// Einstein skew delta on the diagonal ab(m, q) form built from hyperbolic
// boosts, complex blocks and rotations, conjugated by a random isometry.
// nullopt when the signature leaves no room for a solution.
std::optional<Matrix> targeted_einstein_delta(std::mt19937_64& rng, std::size_t p, std::size_t q);

// Boost lambda on a hyperbolic pair plus rotations beta1, beta2, with
// lambda^2 = beta1^2 + beta2^2 (must be a rational square). Basis
// (u, e1, e2, e3, e4, w) with <u,w> = 1 and the e_i orthonormal.
Matrix spiral_delta(const Rational& beta1, const Rational& beta2);
Matrix spiral_base_form();

}  // namespace metlie
