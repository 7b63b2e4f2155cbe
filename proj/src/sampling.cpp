#include "metlie/sampling.hpp"

#include "metlie/error.hpp"

namespace metlie {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational random_rational(std::mt19937_64& rng, int num, int den) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  Rational q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

Matrix random_skew(std::mt19937_64& rng, const Matrix& B, int num, int den) {
  const std::size_t n = B.rows();
  Matrix K(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      K(i, j) = random_rational(rng, num, den);
      K(j, i) = -K(i, j);
    }
  auto Binv = inverse(B);
  if (!Binv) throw PreconditionError("form is degenerate");
  return *Binv * K;
}

std::vector<Matrix> skew_derivations(const MetricLieAlgebra& M) {
  const LieAlgebra& L = M.algebra();
  const Matrix& B = M.form().gram();
  const std::size_t n = L.dim();
  // One column per unknown entry D(r, c).
  std::vector<Vector> cols;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Matrix E(n, n);
      E(r, c) = 1;
      Vector cond;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          Vector x = unit_vector(n, i), y = unit_vector(n, j);
          Vector d = vec_sub(E.apply(L.bracket(x, y)), vec_add(L.bracket(E.apply(x), y), L.bracket(x, E.apply(y))));
          cond.insert(cond.end(), d.begin(), d.end());
        }
      Matrix S = E.transpose() * B + B * E;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) cond.push_back(S(i, j));
      cols.push_back(std::move(cond));
    }
  std::vector<Matrix> out;
  for (const auto& k : kernel(Matrix::from_columns(cols))) {
    Matrix D(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) D(r, c) = k[r * n + c];
    out.push_back(std::move(D));
  }
  return out;
}

Matrix random_skew_derivation(std::mt19937_64& rng, const MetricLieAlgebra& M, int num, int den) {
  if (M.algebra().is_abelian()) return random_skew(rng, M.form().gram(), num, den);
  Matrix D(M.dim(), M.dim());
  for (const auto& b : skew_derivations(M)) D += random_rational(rng, num, den) * b;
  return D;
}

DoubleExtensionSpec random_spec(std::mt19937_64& rng, const MetricLieAlgebra& base, std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t l = 0; l < k; ++l) names.push_back("a" + std::to_string(l + 1));
  DoubleExtensionSpec spec{base, LieAlgebra(k, names), {}};
  Matrix D0 = random_skew_derivation(rng, base);
  for (std::size_t l = 0; l < k; ++l) spec.delta.push_back(l == 0 ? D0 : random_rational(rng, 2, 3) * D0);
  return spec;
}

MetricLieAlgebra random_iterated_extension(std::mt19937_64& rng, std::size_t base_dim, std::size_t base_index,
                                           std::size_t steps) {
  MetricLieAlgebra cur = build_ab(base_dim, base_index);
  for (std::size_t s = 0; s < steps; ++s) {
    DoubleExtensionSpec spec = random_spec(rng, cur, 1);
    spec.a_algebra = LieAlgebra(1, {"a" + std::to_string(s + 1)});
    cur = double_extend(spec, {"z" + std::to_string(s + 1)});
  }
  return cur;
}

}  // namespace metlie
