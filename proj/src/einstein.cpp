#include "metlie/einstein.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "metlie/error.hpp"
#include "metlie/factor.hpp"
#include "metlie/redext.hpp"
#include "metlie/sampling.hpp"

namespace metlie {

SymBilinearForm ricci_biinvariant(const LieAlgebra& L) {
  return SymBilinearForm(Rational(-1, 4) * killing_form(L).gram());
}

EinsteinReport einstein_check(const MetricLieAlgebra& M) {
  if (!M.invariant()) {
    auto inv = is_invariant(M);
    std::string w;
    if (inv.witness)
      w = " (fails on basis triple " + std::to_string((*inv.witness)[0]) + "," + std::to_string((*inv.witness)[1]) +
          "," + std::to_string((*inv.witness)[2]) + ")";
    throw PreconditionError("form is not invariant" + w);
  }
  if (!M.nondegenerate()) throw PreconditionError("form is degenerate");
  EinsteinReport r;
  r.killing = killing_form(M.algebra());
  r.ricci = SymBilinearForm(Rational(-1, 4) * r.killing.gram());
  const Matrix& F = M.form().gram();
  const Matrix& R = r.ricci.gram();
  const std::size_t n = F.rows();
  std::optional<Rational> lam;
  for (std::size_t i = 0; i < n && !lam; ++i)
    for (std::size_t j = 0; j < n && !lam; ++j)
      if (F(i, j) != 0) lam = R(i, j) / F(i, j);
  if (lam && R == *lam * F) {
    r.lambda = lam;
    r.is_einstein = true;
  }
  return r;
}

EigenvalueConditionResult eigenvalue_condition(const EigenvalueData& E) {
  EigenvalueConditionResult res;
  // sum over all roots of root^2 equals the left-hand side once conjugate
  // pairs are combined; per factor it is e1^2 - 2 e2.
  for (const auto& [f, m] : E.factors) {
    Poly g = f.monic();
    const int d = g.degree();
    Rational e1 = -g.coeff(d - 1);
    Rational e2 = d >= 2 ? g.coeff(d - 2) : Rational(0);
    res.residual += Rational(m) * (e1 * e1 - 2 * e2);
  }
  for (std::size_t i : E.real_eigs) {
    const Disk& d = E.roots[i].enclosure();
    Rational c = abs(d.center.re);
    Rational lo = c > d.radius ? (c - d.radius) * (c - d.radius) : Rational(0);
    Rational hi = (c + d.radius) * (c + d.radius);
    res.lower += E.multiplicity[i] * lo;
    res.upper += E.multiplicity[i] * hi;
  }
  for (std::size_t i : E.complex_pairs) {
    const Disk& d = E.roots[i].enclosure();
    Rational re = d.center.re * d.center.re - d.center.im * d.center.im;
    Rational err = 2 * modulus_upper(d.center) * d.radius + d.radius * d.radius;
    res.lower += 2 * E.multiplicity[i] * (re - err);
    res.upper += 2 * E.multiplicity[i] * (re + err);
  }
  if (res.residual < res.lower || res.residual > res.upper)
    throw CertificateError("eigenvalue condition: exact residual outside its interval enclosure");
  res.holds = res.residual == 0;
  return res;
}

SkewnessResult skewness_check(const Matrix& A, const SymBilinearForm& B) {
  if (A.rows() != B.dim() || A.cols() != B.dim()) throw PreconditionError("skewness check: dimension mismatch");
  Matrix S = A.transpose() * B.gram() + B.gram() * A;
  SkewnessResult r;
  for (std::size_t i = 0; i < S.rows() && r.ok; ++i)
    for (std::size_t j = 0; j < S.cols() && r.ok; ++j)
      if (S(i, j) != 0) {
        r.ok = false;
        r.witness = std::make_pair(i, j);
      }
  return r;
}

namespace {

std::size_t leaf_dim(const PWZBlockSpec& s) {
  return 2 * s.positive_rotations.size() + s.extra_positive + 2 * s.negative_rotations.size() + s.extra_negative;
}

}  // namespace

std::size_t pwz_dim(const PWZBlockSpec& spec) {
  std::size_t d = leaf_dim(spec);
  for (const auto& nd : spec.nodes) d += nd.complex_block ? 4 : 2;
  return d;
}

PWZTrace pwz_assemble_and_trace(const PWZBlockSpec& spec) {
  const std::size_t pp = 2 * spec.positive_rotations.size() + spec.extra_positive;
  const std::size_t m0 = leaf_dim(spec);
  Matrix X(m0, m0), G(m0, m0);
  Rational rec = 0;
  for (std::size_t i = 0; i < m0; ++i) G(i, i) = i < pp ? 1 : -1;
  auto put_rot = [&](std::size_t at, const Rational& xi) {
    X(at + 1, at) = xi;
    X(at, at + 1) = -xi;
    rec -= 2 * xi * xi;
  };
  for (std::size_t i = 0; i < spec.positive_rotations.size(); ++i) put_rot(2 * i, spec.positive_rotations[i]);
  for (std::size_t i = 0; i < spec.negative_rotations.size(); ++i) put_rot(pp + 2 * i, spec.negative_rotations[i]);

  for (std::size_t level = spec.nodes.size(); level-- > 0;) {
    const PWZNode& nd = spec.nodes[level];
    const std::size_t k = nd.complex_block ? 2 : 1;
    const std::size_t m = X.rows();
    if (nd.complex_block && nd.beta == 0) throw PreconditionError("malformed PWZ spec: complex block needs beta != 0");
    if (!nd.complex_block && (nd.alpha != 0 || nd.beta != 0))
      throw PreconditionError("malformed PWZ spec: real node carries alpha/beta");
    if (nd.complex_block && nd.lambda != 0) throw PreconditionError("malformed PWZ spec: complex node carries lambda");
    const std::size_t nf = k * m + (k == 2 ? 1 : 0);
    if (!nd.fillers.empty() && nd.fillers.size() != nf)
      throw PreconditionError("malformed PWZ spec: expected " + std::to_string(nf) + " fillers at level " +
                              std::to_string(level));
    Matrix A(k, k);
    if (k == 1) {
      A(0, 0) = nd.lambda;
      rec += 2 * nd.lambda * nd.lambda;
    } else {
      A(0, 0) = A(1, 1) = nd.alpha;
      A(0, 1) = -nd.beta;
      A(1, 0) = nd.beta;
      rec += 4 * nd.alpha * nd.alpha - 4 * nd.beta * nd.beta;
    }
    Matrix B(k, m), C(k, k);
    if (!nd.fillers.empty()) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j) B(i, j) = nd.fillers[i * m + j];
      if (k == 2) {
        C(0, 1) = nd.fillers.back();
        C(1, 0) = -nd.fillers.back();
      }
    }
    Matrix D = -(*inverse(G) * B.transpose());
    const std::size_t n = m + 2 * k;
    Matrix Xn(n, n), Gn(n, n);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Xn(i, j) = A(i, j);
        Xn(k + m + i, k + m + j) = -A(j, i);
        Xn(i, k + m + j) = C(i, j);
      }
      for (std::size_t j = 0; j < m; ++j) {
        Xn(i, k + j) = B(i, j);
        Xn(k + j, k + m + i) = D(j, i);
      }
      Gn(i, k + m + i) = Gn(k + m + i, i) = 1;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Xn(k + i, k + j) = X(i, j);
        Gn(k + i, k + j) = G(i, j);
      }
    X = std::move(Xn);
    G = std::move(Gn);
  }
  if (!skewness_check(X, SymBilinearForm(G)).ok) throw CertificateError("assembled PWZ matrix is not skew");
  return {X, G, (X * X).trace(), rec};
}

Poly pwz_predicted_charpoly(const PWZBlockSpec& spec) {
  Poly p = Poly::constant(1);
  const Poly t = Poly::t();
  for (const auto& nd : spec.nodes) {
    if (nd.complex_block) {
      Rational c = nd.alpha * nd.alpha + nd.beta * nd.beta;
      p = p * (t * t - Rational(2) * nd.alpha * t + Poly::constant(c)) *
          (t * t + Rational(2) * nd.alpha * t + Poly::constant(c));
    } else {
      p = p * (t - Poly::constant(nd.lambda)) * (t + Poly::constant(nd.lambda));
    }
  }
  for (const auto* v : {&spec.positive_rotations, &spec.negative_rotations})
    for (const auto& xi : *v) p = p * (t * t + Poly::constant(xi * xi));
  for (std::size_t i = 0; i < spec.extra_positive + spec.extra_negative; ++i) p = p * t;
  return p;
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void fail(const std::string& step) { throw CertificateError("certificate construction failed: " + step); }

Matrix gram_on(const SymBilinearForm& B, const std::vector<Vector>& vs) {
  Matrix g(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) g(i, j) = B(vs[i], vs[j]);
  return g;
}

bool orthogonal(const SymBilinearForm& B, const Subspace& U, const Subspace& V) {
  for (const auto& u : U.basis())
    for (const auto& v : V.basis())
      if (B(u, v) != 0) return false;
  return true;
}

Vector combine(const std::vector<Vector>& gens, const Vector& coords, std::size_t ambient) {
  Vector v = zero_vector(ambient);
  for (std::size_t i = 0; i < gens.size(); ++i) vec_axpy(v, coords[i], gens[i]);
  return v;
}

// Rational isotropic vector of a nondegenerate form given by its Gram matrix,
// from a diagonal pair with square ratio or a small exhaustive search.
std::optional<Vector> rational_isotropic(const Matrix& gram) {
  const std::size_t n = gram.rows();
  Matrix T = diagonalizing_basis(gram);
  Matrix D = T.transpose() * gram * T;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (D(i, i) == 0 || D(j, j) == 0 || sgn(D(i, i)) == sgn(D(j, j))) continue;
      if (auto r = rational_sqrt(-D(i, i) / D(j, j))) {
        Vector c = vec_add(T.col(i), vec_scale(*r, T.col(j)));
        return c;
      }
    }
  if (n > 6) return std::nullopt;
  std::vector<int> x(n, -2);
  for (;;) {
    Vector v(n);
    bool nz = false;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = x[i];
      nz = nz || x[i] != 0;
    }
    if (nz && vec_dot(v, gram.apply(v)) == 0) return v;
    std::size_t k = 0;
    while (k < n && ++x[k] > 2) x[k++] = -2;
    if (k == n) break;
  }
  return std::nullopt;
}

}  // namespace

EinsteinCertificate theorem12_certificate(const MetricLieAlgebra& M) {
  const LieAlgebra& L = M.algebra();
  const SymBilinearForm& B = M.form();
  const std::size_t n = L.dim();
  SeriesReport ser = series(L);
  if (ser.is_nilpotent) throw PreconditionError("nilpotent input");
  if (!ser.is_solvable) throw PreconditionError("algebra is not solvable");
  if (!M.invariant()) throw PreconditionError("form is not invariant");
  if (!M.nondegenerate()) throw PreconditionError("form is degenerate");
  if (!killing_form(L).gram().is_zero()) throw PreconditionError("scalar product is not Einstein (Killing form nonzero)");

  EinsteinCertificate c;
  c.dim_g = n;
  c.nilradical = nilradical(L);
  c.dim_n = c.nilradical.dim();
  c.index = signature(B).witt_index();

  // a outside the nilradical; for solvable g it acts non-nilpotently
  auto comp = c.nilradical.complement_units();
  if (comp.empty()) fail("nilradical is everything");
  c.a = unit_vector(n, comp.front());
  c.sigma_a = jordan_chevalley(L.ad(c.a)).semisimple;
  if (c.sigma_a.is_zero()) fail("semisimple part of ad(a) vanishes");
  c.verified.push_back("a not in nilradical, sigma_a != 0");

  c.W1 = Subspace::span(n, c.sigma_a.columns());
  c.W0 = Subspace::span(n, kernel(c.sigma_a));
  if (c.W0.dim() + c.W1.dim() != n || !c.W0.intersect(c.W1).is_zero()) fail("g != W0 + W1");
  if (!c.W0.contains(c.a)) fail("sigma_a(a) != 0");
  if (!orthogonal(B, c.W0, c.W1)) fail("W0 not orthogonal to W1");
  Subspace whole = Subspace::whole(n);
  Subspace gg = bracket_span(L, whole, whole);
  if (!gg.contains(c.W1) || !c.nilradical.contains(gg)) fail("W1 not inside [g,g] inside n");
  if (c.W1.dim() % 2 != 0 || c.W1.dim() < 4) fail("dim W1 odd or below 4");
  c.verified.push_back("g = W0 + W1, W0 perp W1, W1 in [g,g] in n, dim W1 even >= 4");

  if ((c.sigma_a * c.sigma_a).trace() != 0) fail("tr(sigma_a^2) != 0");
  Matrix S1 = restrict_map(c.sigma_a, c.W1);
  Poly chi = charpoly(S1);
  c.spectrum = eigenvalue_data(factor(chi));
  auto cond = eigenvalue_condition(c.spectrum);
  if (!cond.holds) fail("eigenvalue condition on W1");
  if (c.spectrum.complex_pairs.empty()) fail("no non-real eigenvalue on W1");
  c.verified.push_back("tr(sigma_a^2) = 0 with a non-real eigenvalue on W1");

  const auto& w1g = c.W1.generators();
  Matrix gW1 = gram_on(B, w1g);
  Signature sW1 = signature(SymBilinearForm(gW1));
  if (sW1.r != 0 || sW1.p == 0 || sW1.q == 0) fail("form on W1 is not indefinite");
  c.verified.push_back("form on W1 nondegenerate and indefinite");

  // Isotropic line: for an irreducible factor f with f(-t) not proportional
  // to f(t), ker f(sigma|W1) is totally isotropic.
  std::optional<Vector> line;
  for (const auto& [f, m] : c.spectrum.factors) {
    Poly fr = f.reflect().monic();
    if (fr == f.monic()) continue;
    auto ker = kernel(f.eval(S1));
    if (ker.empty()) continue;
    line = combine(w1g, ker.front(), n);
    break;
  }
  if (!line)
    if (auto v = rational_isotropic(gW1)) line = combine(w1g, *v, n);
  if (line) {
    if (B(*line, *line) != 0 || !c.W1.contains(*line)) fail("line L is not isotropic in W1");
    c.line_L = Subspace::span(n, {*line});
    c.verified.push_back("rational isotropic line L in W1");
  } else {
    c.line_L = Subspace(n);
    Matrix T = diagonalizing_basis(gW1);
    Matrix D = T.transpose() * gW1 * T;
    std::optional<Vector> u, w;
    for (std::size_t i = 0; i < D.rows(); ++i) {
      if (D(i, i) > 0 && !u) u = combine(w1g, T.col(i), n);
      if (D(i, i) < 0 && !w) w = combine(w1g, T.col(i), n);
    }
    if (!u || !w || B(*u, *w) != 0) fail("indefinite witness in W1");
    c.indefinite_witness = std::make_pair(*u, *w);
    c.verified.push_back("real isotropic line in span{u, w} of W1 (<u,u> > 0 > <w,w>, <u,w> = 0)");
  }

  Subspace j0 = j0_ideal(M);
  c.ideal_i = j0.intersect(center(L));
  if (c.ideal_i.is_zero()) fail("j0 meets the center trivially");
  if (!totally_isotropic(B, c.ideal_i)) fail("i not isotropic");
  if (!c.W0.contains(c.ideal_i)) fail("i not in W0");
  if (!orthogonal(B, c.ideal_i, gg)) fail("i not orthogonal to [g,g]");
  if (!orthogonal(B, c.ideal_i, c.W1)) fail("i not orthogonal to W1");
  c.verified.push_back("central isotropic ideal i in j0, i in W0, i perp [g,g]");

  c.index_lower = c.ideal_i.dim() + 1;
  if (!c.line_L.is_zero()) {
    Subspace iL = c.ideal_i.sum(c.line_L);
    if (iL.dim() != c.index_lower || !totally_isotropic(B, iL)) fail("i + L not totally isotropic");
    c.verified.push_back("i + L totally isotropic");
  }
  c.dim_n_lower = c.W1.dim() + c.ideal_i.dim();
  if (!c.nilradical.contains(c.W1.sum(c.ideal_i))) fail("W1 + i not inside n");
  if (c.dim_n < c.dim_n_lower || c.dim_g < c.dim_n + 1 || c.index < c.index_lower) fail("dimension bookkeeping");
  if (c.dim_g < 6 || c.dim_n < 5 || c.index < 2) fail("bounds 6/5/2");
  c.verified.push_back("dim g >= dim n + 1 >= dim W1 + dim i + 1 >= 6, index >= dim i + 1 >= 2");
  return c;
}

// ---------------------------------------------------------------------------

namespace {

Matrix cayley_isometry(std::mt19937_64& rng, const Matrix& B) {
  const std::size_t n = B.rows();
  for (int attempt = 0; attempt < 8; ++attempt) {
    Matrix K = random_skew(rng, B, 1, 3);
    if (auto inv = inverse(Matrix::identity(n) - K)) return *inv * (Matrix::identity(n) + K);
  }
  return Matrix::identity(n);
}

std::string compact(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::optional<Matrix> targeted_einstein_delta(std::mt19937_64& rng, std::size_t p, std::size_t q) {
  const std::size_t m = p + q;
  const std::size_t h = std::min(p, q);
  if (h == 0) return std::nullopt;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::size_t ncx = pick(0, static_cast<int>(h / 2));
    const std::size_t nb = pick(0, static_cast<int>(h - 2 * ncx));
    if (nb + ncx == 0) continue;
    const std::size_t used = nb + 2 * ncx;
    const std::size_t rp = pick(0, static_cast<int>((p - used) / 2));
    const std::size_t rn = pick(0, static_cast<int>((q - used) / 2));
    std::vector<Rational> xi(rp + rn), al(ncx), be(ncx), lam(nb);
    Rational target = 0;
    for (auto& x : xi) {
      x = pick(1, 4);
      target += x * x;
    }
    for (std::size_t j = 0; j < ncx; ++j) {
      al[j] = pick(1, 3);
      be[j] = pick(1, 3);
      target -= 2 * (al[j] * al[j] - be[j] * be[j]);
    }
    bool ok = true;
    if (nb == 0) {
      ok = target == 0;
    } else {
      for (std::size_t j = 0; j + 1 < nb; ++j) {
        lam[j] = pick(1, 4);
        target -= lam[j] * lam[j];
      }
      auto r = target > 0 ? rational_sqrt(target) : std::nullopt;
      ok = r.has_value();
      if (r) lam[nb - 1] = *r;
    }
    if (!ok) continue;

    // hyperbolic pairs u_i = e_i + f_i, w_i = (e_i - f_i)/2
    Matrix D;
    auto e = [&](std::size_t i) { return unit_vector(m, i); };
    auto u = [&](std::size_t i) { return vec_add(e(i), e(p + i)); };
    auto w = [&](std::size_t i) { return vec_scale(Rational(1, 2), vec_sub(e(i), e(p + i))); };
    // D is fixed by its images Img of the basis P.
    std::vector<Vector> P, Img;
    std::size_t pair = 0;
    for (std::size_t j = 0; j < nb; ++j, ++pair) {
      P.push_back(u(pair));
      Img.push_back(vec_scale(lam[j], u(pair)));
      P.push_back(w(pair));
      Img.push_back(vec_scale(-lam[j], w(pair)));
    }
    for (std::size_t j = 0; j < ncx; ++j, pair += 2) {
      Vector u1 = u(pair), u2 = u(pair + 1), w1 = w(pair), w2 = w(pair + 1);
      P.push_back(u1);
      Img.push_back(vec_add(vec_scale(al[j], u1), vec_scale(be[j], u2)));
      P.push_back(u2);
      Img.push_back(vec_add(vec_scale(-be[j], u1), vec_scale(al[j], u2)));
      P.push_back(w1);
      Img.push_back(vec_add(vec_scale(-al[j], w1), vec_scale(be[j], w2)));
      P.push_back(w2);
      Img.push_back(vec_add(vec_scale(-be[j], w1), vec_scale(-al[j], w2)));
    }
    std::size_t k = 0;
    auto rotate = [&](std::size_t i, std::size_t j) {
      P.push_back(e(i));
      Img.push_back(vec_scale(xi[k], e(j)));
      P.push_back(e(j));
      Img.push_back(vec_scale(-xi[k], e(i)));
      ++k;
    };
    for (std::size_t r = 0; r < rp; ++r) rotate(used + 2 * r, used + 2 * r + 1);
    for (std::size_t r = 0; r < rn; ++r) rotate(p + used + 2 * r, p + used + 2 * r + 1);
    // remaining unit vectors are killed
    Subspace cov = Subspace::span(m, P);
    for (std::size_t i : cov.complement_units()) {
      P.push_back(e(i));
      Img.push_back(zero_vector(m));
    }
    D = Matrix::from_columns(Img, m) * *inverse(Matrix::from_columns(P, m));
    Matrix F = build_ab(m, q).form().gram();
    Rational scale(pick(1, 3), pick(1, 2));
    scale.canonicalize();
    D = scale * D;
    if (pick(0, 1)) {
      Matrix Q = cayley_isometry(rng, F);
      D = Q * D * *inverse(Q);
    }
    return D;
  }
  return std::nullopt;
}

Matrix spiral_delta(const Rational& beta1, const Rational& beta2) {
  auto lam = rational_sqrt(beta1 * beta1 + beta2 * beta2);
  if (!lam) throw PreconditionError("spiral delta needs beta1^2 + beta2^2 to be a rational square");
  Matrix d(6, 6);
  d(0, 0) = *lam;
  d(5, 5) = -*lam;
  d(2, 1) = beta1;
  d(1, 2) = -beta1;
  d(4, 3) = beta2;
  d(3, 4) = -beta2;
  return d;
}

Matrix spiral_base_form() {
  Matrix f(6, 6);
  f(0, 5) = f(5, 0) = 1;
  for (std::size_t i = 1; i < 5; ++i) f(i, i) = 1;
  return f;
}

namespace {

struct Candidate {
  MetricLieAlgebra M;
  std::string spec;
};

Candidate make_candidate(std::mt19937_64& rng, std::size_t n, std::size_t s) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::string tag = "(" + std::to_string(n) + "," + std::to_string(s) + ")";
  if (s == 0) return {build_ab(n, 0), "ab" + tag};
  const int family = pick(0, 9);
  if (family >= 8 && n >= 2 * s + 1) {
    const std::size_t steps = pick(1, static_cast<int>(s));
    const std::size_t bdim = n - 2 * steps, bidx = s - steps;
    if (bdim >= 1 && 2 * bidx <= bdim) {
      std::uint64_t sub = rng();
      std::mt19937_64 r2(sub);
      return {random_iterated_extension(r2, bdim, bidx, steps),
              "ext(ab(" + std::to_string(bdim) + "," + std::to_string(bidx) + ")," + std::to_string(steps) +
                  " steps,seed=" + std::to_string(sub) + ")"};
    }
  }
  if (n < 3) return {build_ab(n, s), "ab" + tag};
  const std::size_t m = n - 2, p = m - (s - 1), q = s - 1;
  Matrix F = build_ab(m, q).form().gram();
  Matrix delta(m, m);
  std::string kind = "random";
  if (family >= 4 && family < 7) {
    if (auto d = targeted_einstein_delta(rng, p, q)) {
      delta = *d;
      kind = "targeted";
    } else {
      delta = random_skew(rng, F);
    }
  } else if (family == 7) {
    kind = "nilpotent";
    if (q >= 1 && p >= 2) {
      // null rotation: e2 -> u, w -> -e2 for u = e1 + f1, w = (e1 - f1)/2
      Vector uu = vec_add(unit_vector(m, 0), unit_vector(m, p));
      Vector ww = vec_scale(Rational(1, 2), vec_sub(unit_vector(m, 0), unit_vector(m, p)));
      std::vector<Vector> P{uu, ww, unit_vector(m, 1)}, Img{zero_vector(m), vec_scale(-1, unit_vector(m, 1)), uu};
      for (std::size_t i : Subspace::span(m, P).complement_units()) {
        P.push_back(unit_vector(m, i));
        Img.push_back(zero_vector(m));
      }
      delta = Matrix::from_columns(Img, m) * *inverse(Matrix::from_columns(P, m));
      Matrix Q = cayley_isometry(rng, F);
      delta = Q * delta * *inverse(Q);
    }
  } else {
    delta = random_skew(rng, F);
  }
  return {build_ko1(n, s, delta), "ko1" + tag + " " + kind + " delta=" + compact(delta)};
}

}  // namespace

SearchResult sharpness_search(const SearchConfig& cfg) {
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (std::size_t n = cfg.dim_min; n <= cfg.dim_max; ++n)
    for (std::size_t s = cfg.index_min; s <= cfg.index_max && 2 * s <= n; ++s) shapes.emplace_back(n, s);
  if (shapes.empty()) throw PreconditionError("search: empty dimension/index range");
  const unsigned T = std::max(1u, cfg.threads);
  std::vector<SearchResult> parts(T);
  auto work = [&](unsigned t) {
    SearchResult& r = parts[t];
    for (std::size_t k = t; k < cfg.budget; k += T) {
      std::mt19937_64 rng(split_seed(cfg.seed, k));
      auto [n, s] = shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];
      Candidate c = make_candidate(rng, n, s);
      ++r.samples;
      const LieAlgebra& L = c.M.algebra();
      if (!killing_form(L).gram().is_zero()) continue;
      ++r.einstein_hits;
      if (L.is_abelian()) continue;
      SearchFinding f;
      f.sample = k;
      f.spec = c.spec;
      f.dim = L.dim();
      f.index = signature(c.M.form()).witt_index();
      f.einstein = true;
      f.nilpotent = is_nilpotent(L);
      f.dim_nilradical = f.nilpotent ? L.dim() : nilradical(L).dim();
      ++r.nonabelian_einstein;
      if (!f.nilpotent) ++r.nonnilpotent_einstein;
      r.findings.push_back(std::move(f));
    }
  };
  if (T == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < T; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  SearchResult out;
  for (auto& r : parts) {
    out.samples += r.samples;
    out.einstein_hits += r.einstein_hits;
    out.nonabelian_einstein += r.nonabelian_einstein;
    out.nonnilpotent_einstein += r.nonnilpotent_einstein;
    for (auto& f : r.findings) out.findings.push_back(std::move(f));
  }
  std::sort(out.findings.begin(), out.findings.end(),
            [](const SearchFinding& a, const SearchFinding& b) { return a.sample < b.sample; });
  return out;
}

}  // namespace metlie
