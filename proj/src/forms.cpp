#include "metlie/forms.hpp"

#include <random>

#include "metlie/error.hpp"

namespace metlie {

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra algebra, SymBilinearForm form, std::string name)
    : algebra_(std::move(algebra)), form_(std::move(form)), name_(std::move(name)) {
  if (form_.dim() != algebra_.dim()) throw PreconditionError("form dimension does not match algebra dimension");
  invariant_ = is_invariant(algebra_, form_).ok;
  nondegenerate_ = metlie::rank(form_.gram()) == algebra_.dim();
}

Matrix diagonalizing_basis(const Matrix& B0) {
  const std::size_t n = B0.rows();
  Matrix B = B0;
  Matrix T = Matrix::identity(n);
  auto col_op = [&](std::size_t dst, std::size_t src, const Rational& c) {
    // basis change e_dst += c e_src, applied as congruence
    for (std::size_t i = 0; i < n; ++i) T(i, dst) += c * T(i, src);
    for (std::size_t i = 0; i < n; ++i) B(i, dst) += c * B(i, src);
    for (std::size_t j = 0; j < n; ++j) B(dst, j) += c * B(src, j);
  };
  auto swap_op = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) std::swap(T(i, a), T(i, b));
    for (std::size_t i = 0; i < n; ++i) std::swap(B(i, a), B(i, b));
    for (std::size_t j = 0; j < n; ++j) std::swap(B(a, j), B(b, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && B(p, p) == 0) ++p;
    if (p == n) {
      // No nonzero diagonal left: create one from an off-diagonal entry.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (B(i, j) != 0) {
            col_op(i, j, 1);
            p = i;
            found = true;
          }
      if (!found) break;
    }
    if (p != k) swap_op(p, k);
    for (std::size_t j = k + 1; j < n; ++j)
      if (B(k, j) != 0) col_op(j, k, -B(k, j) / B(k, k));
  }
  return T;
}

Signature signature(const SymBilinearForm& form) {
  const Matrix& B = form.gram();
  Matrix T = diagonalizing_basis(B);
  Matrix D = T.transpose() * B * T;
  Signature s;
  for (std::size_t i = 0; i < D.rows(); ++i) {
    if (D(i, i) > 0)
      ++s.p;
    else if (D(i, i) < 0)
      ++s.q;
    else
      ++s.r;
  }
  return s;
}

Subspace metric_radical(const MetricLieAlgebra& M) {
  return Subspace::span(M.dim(), kernel(M.form().gram()));
}

InvarianceResult invariance_under(const LieAlgebra& L, const SymBilinearForm& B, const std::vector<Vector>& xs) {
  InvarianceResult res;
  const Matrix& G = B.gram();
  for (const auto& x : xs) {
    Matrix A = L.ad(x);
    Matrix S = A.transpose() * G + G * A;  // S(i,j) = <[x,b_i],b_j> + <b_i,[x,b_j]>
    for (std::size_t i = 0; i < S.rows(); ++i)
      for (std::size_t j = 0; j < S.cols(); ++j)
        if (S(i, j) != 0) {
          res.ok = false;
          res.value = S(i, j);
          // report the basis index of x when x is a unit vector
          std::size_t xi = 0;
          for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k] != 0) {
              xi = k;
              break;
            }
          res.witness = std::array<std::size_t, 3>{xi, i, j};
          return res;
        }
  }
  return res;
}

InvarianceResult is_invariant(const LieAlgebra& L, const SymBilinearForm& B) {
  std::vector<Vector> xs;
  for (std::size_t i = 0; i < L.dim(); ++i) xs.push_back(unit_vector(L.dim(), i));
  return invariance_under(L, B, xs);
}

InvarianceResult is_invariant(const MetricLieAlgebra& M) { return is_invariant(M.algebra(), M.form()); }

NilinvarianceResult nilinvariance_probe(const MetricLieAlgebra& M, std::size_t samples, std::uint64_t seed) {
  NilinvarianceResult res;
  const std::size_t n = M.dim();
  const Matrix& G = M.form().gram();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  for (std::size_t k = 0; k < n + samples; ++k) {
    Vector y(n);
    if (k < n) {
      y = unit_vector(n, k);
    } else {
      for (auto& c : y) {
        c = Rational(num(rng), den(rng));
        c.canonicalize();
      }
    }
    Matrix N = jordan_chevalley(M.algebra().ad(y)).nilpotent;
    ++res.checked;
    if (!(N.transpose() * G + G * N).is_zero()) {
      res.pass = false;
      res.witness = y;
      return res;
    }
  }
  return res;
}

bool totally_isotropic(const SymBilinearForm& B, const Subspace& U) {
  for (const auto& u : U.generators())
    for (const auto& v : U.generators())
      if (B(u, v) != 0) return false;
  return true;
}

Subspace orthogonal_complement(const SymBilinearForm& B, const Subspace& U) {
  const std::size_t n = B.dim();
  if (U.is_zero()) return Subspace::whole(n);
  std::vector<Vector> rows;
  for (const auto& u : U.generators()) rows.push_back(B.gram().apply(u));
  return Subspace::span(n, kernel(Matrix::from_rows(rows, n)));
}

namespace {

// Scale w so that <w,w> becomes a signed squarefree integer where trial
// division can find the square part.
Vector normalize_square_class(const Vector& w, const Rational& norm) {
  Integer N = abs(norm.get_num()) * norm.get_den();
  Integer s = 1;
  for (unsigned long d = 2; d < 10000 && d * d <= N; ++d) {
    Integer dd = Integer(d) * d;
    while (mpz_divisible_p(N.get_mpz_t(), dd.get_mpz_t())) {
      N /= dd;
      s *= d;
    }
  }
  if (mpz_perfect_square_p(N.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), N.get_mpz_t());
    s *= r;
  }
  Rational scale(Integer(norm.get_den()), s);
  scale.canonicalize();
  return vec_scale(scale, w);
}

}  // namespace

WittBasis witt_basis(const MetricLieAlgebra& M, const Subspace& U, bool orthogonalize) {
  const SymBilinearForm& B = M.form();
  const std::size_t n = M.dim();
  if (!M.nondegenerate()) throw PreconditionError("form is degenerate");
  const auto& gens = U.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      if (B(gens[i], gens[j]) != 0)
        throw PreconditionError("U not totally isotropic: generators " + std::to_string(i) + " and " +
                                std::to_string(j) + " pair nontrivially");
  WittBasis wb;
  wb.v = gens;
  const std::size_t k = gens.size();
  // <v_i, y_j> = delta_ij
  std::vector<Vector> rows;
  for (const auto& v : gens) rows.push_back(B.gram().apply(v));
  Matrix P = Matrix::from_rows(rows, n);
  std::vector<Vector> ys;
  for (std::size_t j = 0; j < k; ++j) {
    auto y = solve(P, unit_vector(k, j));
    if (!y) throw CertificateError("dual vectors for the Witt basis do not exist");
    ys.push_back(*y);
  }
  for (std::size_t j = 0; j < k; ++j) {
    Vector y = ys[j];
    for (std::size_t i = 0; i < k; ++i) vec_axpy(y, -B(ys[j], ys[i]) / 2, gens[i]);
    wb.v_star.push_back(std::move(y));
  }
  std::vector<Vector> all = gens;
  all.insert(all.end(), wb.v_star.begin(), wb.v_star.end());
  Subspace perp = orthogonal_complement(B, Subspace::span(n, all));
  std::vector<Vector> w = perp.generators();
  if (orthogonalize && !w.empty()) {
    Matrix G(w.size(), w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j) G(i, j) = B(w[i], w[j]);
    Matrix T = diagonalizing_basis(G);
    std::vector<Vector> ow;
    for (std::size_t c = 0; c < w.size(); ++c) {
      Vector x = zero_vector(n);
      for (std::size_t i = 0; i < w.size(); ++i) vec_axpy(x, T(i, c), w[i]);
      Rational nn = B(x, x);
      if (nn == 0) throw CertificateError("w part of the Witt basis is degenerate");
      ow.push_back(normalize_square_class(x, nn));
    }
    w = std::move(ow);
  }
  wb.w = w;
  for (const auto& x : wb.w) wb.w_norms.push_back(B(x, x));
  return wb;
}

Subspace j0_ideal(const MetricLieAlgebra& M) {
  const LieAlgebra& L = M.algebra();
  if (!is_solvable(L)) throw PreconditionError("j0 requires a solvable algebra");
  if (!M.invariant()) throw PreconditionError("j0 requires an invariant form");
  Subspace n = nilradical(L);
  Subspace zn = n.intersect(centralizer(L, n));
  Subspace gn = bracket_span(L, Subspace::whole(L.dim()), n);
  Subspace j0 = zn.intersect(gn);
  if (!totally_isotropic(M.form(), j0)) throw CertificateError("j0 is not totally isotropic");
  return j0;
}

std::optional<Subspace> central_isotropic_ideal(const MetricLieAlgebra& M) {
  if (!M.nondegenerate()) throw PreconditionError("form is degenerate");
  Subspace j0 = j0_ideal(M);
  if (M.algebra().is_abelian()) return std::nullopt;
  Subspace c = j0.intersect(center(M.algebra()));
  if (c.is_zero()) throw CertificateError("no isotropic central ideal in j0");
  return c;
}

}  // namespace metlie
