#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "metlie/forms.hpp"

namespace metlie {

struct SplitResult {
  std::vector<Subspace> simple_ideals;
  std::vector<bool> compact;  // per simple ideal
  Subspace compact_part;      // k
  Subspace noncompact_part;   // s
};

// Minimal ideals over Q, from the idempotents of the centroid. Throws
// PreconditionError when the Killing form is degenerate.
std::vector<Subspace> simple_decomposition(const LieAlgebra& L, std::uint64_t seed = 1);
SplitResult compact_split(const LieAlgebra& L, std::uint64_t seed = 1);

// True iff the form restricted to U is negative definite.
bool negative_definite_on(const SymBilinearForm& B, const Subspace& U);

struct Lemma61Report {
  SplitResult split;
  bool s_invariant = false;
  bool k_perp_s = false;
  bool s_cap_radical_zero = false;
  // form|_I = c * killing|_I on each noncompact simple ideal I, when it holds
  std::vector<std::optional<Rational>> ideal_c;
  std::optional<Rational> proportionality_c;  // common value if all ideals agree
};

// Throws PreconditionError("form not s-invariant ...") with the witness
// (s generator index, i, j) when <[x,b_i],b_j> + <b_i,[x,b_j]> != 0.
Lemma61Report verify_lemma61(const MetricLieAlgebra& M, std::uint64_t seed = 1);

}  // namespace metlie
