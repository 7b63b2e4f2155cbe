#pragma once

#include <random>

#include "metlie/matrix.hpp"
#include "metlie/poly.hpp"

namespace testsupport {

using metlie::Matrix;
using metlie::Rational;

inline Rational small_rational(std::mt19937_64& rng, int num = 3, int den = 2) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  Rational q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t n, int num = 3, int den = 2) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = small_rational(rng, num, den);
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, 2, 1);
    if (metlie::inverse(m)) return m;
  }
}

// Faddeev-LeVerrier, used as an independent characteristic polynomial oracle.
inline metlie::Poly leverrier(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * Matrix::identity(n);
    c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
  }
  return metlie::Poly(c);
}

inline Rational leibniz_det(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  Rational total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    Rational t = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) t *= a(i, p[i]);
    total += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<metlie::Vector> rs;
  for (auto r : rows) {
    metlie::Vector v;
    for (long x : r) v.emplace_back(x);
    rs.push_back(v);
  }
  return Matrix::from_rows(rs);
}

inline metlie::Vector vec(std::initializer_list<long> xs) {
  metlie::Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline metlie::Poly poly(std::initializer_list<long> low_first) {
  std::vector<Rational> c;
  for (long x : low_first) c.emplace_back(x);
  return metlie::Poly(c);
}

// Random matrix with repeated eigenvalues and nontrivial Jordan blocks,
// conjugated by a random invertible matrix.
inline Matrix random_jordan_matrix(std::mt19937_64& rng, std::size_t n) {
  Matrix j(n, n);
  std::uniform_int_distribution<int> ev(-2, 2), coin(0, 2);
  Rational cur = ev(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && coin(rng) == 0) cur = ev(rng);
    j(i, i) = cur;
    if (i + 1 < n && coin(rng) != 0) j(i, i + 1) = 1;
  }
  // Sometimes plant an irreducible quadratic block.
  if (n >= 2 && coin(rng) == 0) {
    j(0, 0) = 0;
    j(0, 1) = -2;
    j(1, 0) = 1;
    j(1, 1) = 0;
  }
  Matrix p = random_invertible(rng, n);
  return p * j * *metlie::inverse(p);
}

}  // namespace testsupport
