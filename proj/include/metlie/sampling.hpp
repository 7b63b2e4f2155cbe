#pragma once

#include <cstdint>
#include <random>

#include "metlie/redext.hpp"

namespace metlie {

// Deterministic per-index seed derivation (SplitMix64).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

// Rational with numerator in [-num, num] and denominator in [1, den].
Rational random_rational(std::mt19937_64& rng, int num, int den);
// B^{-1} K for a random antisymmetric K; skew with respect to B.
Matrix random_skew(std::mt19937_64& rng, const Matrix& B, int num = 2, int den = 4);
// Basis of the skew derivations of a metric Lie algebra.
std::vector<Matrix> skew_derivations(const MetricLieAlgebra& M);
// Random element of the span of skew_derivations(M).
Matrix random_skew_derivation(std::mt19937_64& rng, const MetricLieAlgebra& M, int num = 2, int den = 4);
// Random spec over `base` with an abelian a of dimension k; the deltas
// commute (later ones are multiples of the first plus inner-free parts).
DoubleExtensionSpec random_spec(std::mt19937_64& rng, const MetricLieAlgebra& base, std::size_t k);
// ab^{m}_{s0} extended `steps` times by random one-dimensional abelian a.
MetricLieAlgebra random_iterated_extension(std::mt19937_64& rng, std::size_t base_dim, std::size_t base_index,
                                           std::size_t steps);

}  // namespace metlie
