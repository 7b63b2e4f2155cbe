#include "metlie/semisimple.hpp"

#include <algorithm>
#include <random>

#include "metlie/error.hpp"
#include "metlie/factor.hpp"
#include "metlie/poly.hpp"

namespace metlie {

namespace {

void require_semisimple(const LieAlgebra& L) {
  if (L.dim() == 0 || rank(killing_form(L).gram()) != L.dim())
    throw PreconditionError("Killing form degenerate: not semisimple");
}

// Basis of {T : [T, ad x] = 0 for all x}.
std::vector<Matrix> centroid(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix A = L.ad_basis(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Vector row(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          row[r * n + k] += A(k, c);
          row[k * n + c] -= A(r, k);
        }
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel(Matrix::from_rows(rows, n * n))) {
    Matrix T(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) T(r, c) = v[r * n + c];
    out.push_back(std::move(T));
  }
  return out;
}

Matrix restricted_gram(const Matrix& G, const Subspace& U) {
  const auto& g = U.generators();
  Matrix R(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) R(i, j) = vec_dot(g[i], G.apply(g[j]));
  return R;
}

}  // namespace

std::vector<Subspace> simple_decomposition(const LieAlgebra& L, std::uint64_t seed) {
  require_semisimple(L);
  const std::size_t n = L.dim();
  const auto cen = centroid(L);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix c(n, n);
    for (const auto& T : cen) c = c + Rational(coef(rng)) * T;
    // centroid elements of a semisimple algebra are semisimple
    Poly mp = squarefree_part(charpoly(c));
    std::vector<Subspace> ideals;
    bool separated = true;
    for (const auto& [f, m] : factor(mp)) {
      Subspace J = Subspace::span(n, kernel(f.eval(c)));
      std::vector<Vector> flat;
      for (const auto& T : cen) {
        Matrix R = restrict_map(T, J);
        Vector v;
        for (std::size_t i = 0; i < R.rows(); ++i)
          for (std::size_t j = 0; j < R.cols(); ++j) v.push_back(R(i, j));
        flat.push_back(std::move(v));
      }
      if (rank(Matrix::from_rows(flat)) != static_cast<std::size_t>(f.degree())) {
        separated = false;
        break;
      }
      ideals.push_back(std::move(J));
    }
    if (!separated) continue;
    // post-conditions
    const Matrix K = killing_form(L).gram();
    Subspace total(n);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (!is_ideal(L, ideals[i])) throw CertificateError("centroid eigenspace is not an ideal");
      for (std::size_t j = i + 1; j < ideals.size(); ++j)
        for (const auto& u : ideals[i].generators())
          for (const auto& v : ideals[j].generators())
            if (vec_dot(u, K.apply(v)) != 0) throw CertificateError("simple ideals are not Killing-orthogonal");
      total = total.sum(ideals[i]);
    }
    if (total.dim() != n) throw CertificateError("simple ideals do not span the algebra");
    auto lead = [](const Subspace& S) {
      const Vector& v = S.basis().front();
      std::size_t k = 0;
      while (v[k] == 0) ++k;
      return k;
    };
    std::sort(ideals.begin(), ideals.end(), [&](const Subspace& a, const Subspace& b) { return lead(a) < lead(b); });
    return ideals;
  }
  throw CertificateError("could not separate the simple ideals");
}

bool negative_definite_on(const SymBilinearForm& B, const Subspace& U) {
  Signature s = signature(SymBilinearForm(restricted_gram(B.gram(), U)));
  return s.q == U.dim();
}

SplitResult compact_split(const LieAlgebra& L, std::uint64_t seed) {
  SplitResult r;
  r.simple_ideals = simple_decomposition(L, seed);
  r.compact_part = Subspace(L.dim());
  r.noncompact_part = Subspace(L.dim());
  const SymBilinearForm K = killing_form(L);
  for (const auto& I : r.simple_ideals) {
    bool c = negative_definite_on(K, I);
    r.compact.push_back(c);
    Subspace& part = c ? r.compact_part : r.noncompact_part;
    part = part.sum(I);
  }
  return r;
}

Lemma61Report verify_lemma61(const MetricLieAlgebra& M, std::uint64_t seed) {
  const LieAlgebra& L = M.algebra();
  Lemma61Report rep;
  rep.split = compact_split(L, seed);
  const Matrix& G = M.form().gram();
  const auto& sg = rep.split.noncompact_part.generators();
  for (std::size_t k = 0; k < sg.size(); ++k) {
    Matrix A = L.ad(sg[k]);
    Matrix S = A.transpose() * G + G * A;
    for (std::size_t i = 0; i < S.rows(); ++i)
      for (std::size_t j = 0; j < S.cols(); ++j)
        if (S(i, j) != 0)
          throw PreconditionError("form not s-invariant: <[s" + std::to_string(k + 1) + ", " + L.names()[i] +
                                  "], " + L.names()[j] + "> + <" + L.names()[i] + ", [s" + std::to_string(k + 1) +
                                  ", " + L.names()[j] + "]> = " + to_string(S(i, j)));
  }
  rep.s_invariant = true;
  rep.k_perp_s = true;
  for (const auto& u : rep.split.compact_part.generators())
    for (const auto& v : sg)
      if (M.form()(u, v) != 0) rep.k_perp_s = false;
  rep.s_cap_radical_zero = rep.split.noncompact_part.intersect(metric_radical(M)).is_zero();

  const Matrix K = killing_form(L).gram();
  bool all = true;
  for (std::size_t i = 0; i < rep.split.simple_ideals.size(); ++i) {
    if (rep.split.compact[i]) continue;
    const Subspace& I = rep.split.simple_ideals[i];
    Matrix k = restricted_gram(K, I), f = restricted_gram(G, I);
    std::optional<Rational> c;
    for (std::size_t a = 0; a < k.rows() && !c; ++a)
      for (std::size_t b = 0; b < k.cols() && !c; ++b)
        if (k(a, b) != 0) c = f(a, b) / k(a, b);
    if (c && !(f == *c * k)) c.reset();
    rep.ideal_c.push_back(c);
    if (!c || (rep.proportionality_c && *rep.proportionality_c != *c)) all = false;
    if (c && !rep.proportionality_c) rep.proportionality_c = c;
  }
  if (!all) rep.proportionality_c.reset();
  return rep;
}

}  // namespace metlie
