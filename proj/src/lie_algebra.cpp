#include "metlie/lie_algebra.hpp"

#include "metlie/error.hpp"
#include "metlie/poly.hpp"

namespace metlie {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> names)
    : n_(dim), names_(std::move(names)), table_(dim * dim) {
  if (names_.empty())
    for (std::size_t i = 0; i < n_; ++i) names_.push_back("e" + std::to_string(i + 1));
  if (names_.size() != n_) throw PreconditionError("basis name count does not match dimension");
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  if (i >= n_ || j >= n_ || v.size() != n_) throw PreconditionError("bracket index or length out of range");
  if (i == j) {
    if (!vec_is_zero(v)) throw PreconditionError("[b_i, b_i] must vanish");
    return;
  }
  Vector w = i < j ? v : vec_scale(-1, v);
  if (i > j) std::swap(i, j);
  table_[i * n_ + j] = vec_is_zero(w) ? Vector{} : w;
  nonzero_.clear();
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (!table_[a * n_ + b].empty()) nonzero_.emplace_back(a, b, table_[a * n_ + b]);
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i == j) return zero_vector(n_);
  if (i < j) return table_[i * n_ + j].empty() ? zero_vector(n_) : table_[i * n_ + j];
  return table_[j * n_ + i].empty() ? zero_vector(n_) : vec_scale(-1, table_[j * n_ + i]);
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw PreconditionError("dimension mismatch in bracket");
  Vector r = zero_vector(n_);
  for (const auto& [i, j, v] : nonzero_) {
    Rational c = x[i] * y[j] - x[j] * y[i];
    if (c != 0) vec_axpy(r, c, v);
  }
  return r;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != n_) throw PreconditionError("dimension mismatch in ad");
  Matrix m(n_, n_);
  for (const auto& [i, j, v] : nonzero_) {
    // [x, b_j] gets x_i v ; [x, b_i] gets -x_j v
    for (std::size_t k = 0; k < n_; ++k) {
      if (v[k] == 0) continue;
      if (x[i] != 0) m(k, j) += x[i] * v[k];
      if (x[j] != 0) m(k, i) -= x[j] * v[k];
    }
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(n_, i)); }

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  return a.n_ == b.n_ && a.nonzero_ == b.nonzero_;
}

SymBilinearForm::SymBilinearForm(Matrix gram) : g_(std::move(gram)) {
  if (!g_.is_symmetric()) throw PreconditionError("bilinear form matrix is not symmetric");
}

Rational SymBilinearForm::operator()(const Vector& x, const Vector& y) const { return vec_dot(x, g_.apply(y)); }

ValidationReport validate_structure(const LieAlgebra& L) {
  ValidationReport rep;
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad_basis(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector s = ads[i].apply(L.basis_bracket(j, k));
        s = vec_add(s, ads[j].apply(L.basis_bracket(k, i)));
        s = vec_add(s, ads[k].apply(L.basis_bracket(i, j)));
        if (!vec_is_zero(s)) {
          rep.ok = false;
          rep.jacobi_violations.push_back({i, j, k});
        }
      }
  return rep;
}

Subspace centralizer(const LieAlgebra& L, const Subspace& S) {
  const std::size_t n = L.dim();
  // x with [x, s] = 0 for all generators s: stack ad(s)^T-style rows.
  std::vector<Vector> rows;
  for (const auto& s : S.generators()) {
    Matrix m = L.ad(s);  // [s, x] = m x
    for (std::size_t r = 0; r < n; ++r) rows.push_back(m.row(r));
  }
  if (rows.empty()) return Subspace::whole(n);
  return Subspace::span(n, kernel(Matrix::from_rows(rows, n)));
}

Subspace center(const LieAlgebra& L) { return centralizer(L, Subspace::whole(L.dim())); }

Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
  std::vector<Vector> vs;
  for (const auto& a : A.generators())
    for (const auto& b : B.generators()) vs.push_back(L.bracket(a, b));
  return Subspace::span(L.dim(), vs);
}

bool is_ideal(const LieAlgebra& L, const Subspace& I) {
  return I.contains(bracket_span(L, Subspace::whole(L.dim()), I));
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& S) { return S.contains(bracket_span(L, S, S)); }

SeriesReport series(const LieAlgebra& L) {
  SeriesReport r;
  const std::size_t n = L.dim();
  Subspace g = Subspace::whole(n);
  r.derived.push_back(g);
  for (;;) {
    Subspace next = bracket_span(L, r.derived.back(), r.derived.back());
    if (next == r.derived.back()) break;
    r.derived.push_back(next);
  }
  r.lower_central.push_back(g);
  for (;;) {
    Subspace next = bracket_span(L, g, r.lower_central.back());
    if (next == r.lower_central.back()) break;
    r.lower_central.push_back(next);
  }
  r.is_solvable = r.derived.back().is_zero();
  r.is_nilpotent = r.lower_central.back().is_zero();
  return r;
}

bool is_solvable(const LieAlgebra& L) { return series(L).is_solvable; }
bool is_nilpotent(const LieAlgebra& L) { return series(L).is_nilpotent; }

SymBilinearForm killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad_basis(i));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational t = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (ads[i](a, b) != 0 && ads[j](b, a) != 0) t += ads[i](a, b) * ads[j](b, a);
      k(i, j) = t;
      k(j, i) = t;
    }
  return SymBilinearForm(k);
}

JordanPair jordan_chevalley(const Matrix& A) {
  if (!A.is_square()) throw PreconditionError("Jordan-Chevalley decomposition needs a square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return {A, A, {}};
  Poly p = charpoly(A);
  Poly q = squarefree_part(p);
  Poly dq = q.derivative();
  Poly s = Poly::t();
  // Newton iteration in Q[t]/(p) for a root of q congruent to t modulo rad(p).
  for (int iter = 0; iter < 64; ++iter) {
    Poly qs = q.compose(s) % p;
    if (qs.is_zero()) break;
    ExtGcd e = ext_gcd(dq.compose(s) % p, p);
    if (e.g.degree() != 0) throw CertificateError("Newton step not invertible in Jordan-Chevalley decomposition");
    s = (s - (qs * e.s) % p) % p;
  }
  JordanPair jp;
  jp.semisimple = s.eval(A);
  jp.nilpotent = A - jp.semisimple;
  jp.s_poly = s.coeffs();
  if (!q.eval(jp.semisimple).is_zero() || !is_nilpotent(jp.nilpotent) ||
      !(jp.semisimple * jp.nilpotent == jp.nilpotent * jp.semisimple))
    throw CertificateError("Jordan-Chevalley certificate failed");
  return jp;
}

Subspace nilradical(const LieAlgebra& L, const std::optional<Subspace>& hint) {
  const std::size_t n = L.dim();
  SeriesReport sr = series(L);
  if (!sr.is_solvable) throw PreconditionError("not solvable");
  Subspace g = Subspace::whole(n);
  Subspace dg = sr.derived.size() > 1 ? sr.derived[1] : Subspace(n);
  if (sr.is_nilpotent) {
    if (hint && !(*hint == g)) throw PreconditionError("nilradical hint does not match");
    return g;
  }
  // Complement of [g,g] spanned by unit vectors; unital algebra generated by
  // their adjoints.
  std::vector<std::size_t> comp = dg.complement_units();
  std::vector<Matrix> gens;
  for (auto i : comp) gens.push_back(L.ad_basis(i));
  auto flat = [n](const Matrix& m) {
    Vector v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(m(i, j));
    return v;
  };
  std::vector<Matrix> alg{Matrix::identity(n)};
  Subspace algspan = Subspace::span(n * n, {flat(alg[0])});
  for (std::size_t k = 0; k < alg.size(); ++k)
    for (const auto& G : gens) {
      Matrix prod = alg[k] * G;
      Vector f = flat(prod);
      if (algspan.contains(f)) continue;
      algspan = algspan.sum(Subspace::span(n * n, {f}));
      alg.push_back(std::move(prod));
    }
  // c with sum_i c_i tr(ad(a_i) Y) = 0 for all Y.
  Matrix cond(alg.size(), comp.size());
  for (std::size_t r = 0; r < alg.size(); ++r)
    for (std::size_t i = 0; i < comp.size(); ++i) cond(r, i) = (gens[i] * alg[r]).trace();
  std::vector<Vector> vs = dg.generators();
  for (const auto& c : kernel(cond)) {
    Vector x = zero_vector(n);
    for (std::size_t i = 0; i < comp.size(); ++i) x[comp[i]] = c[i];
    vs.push_back(x);
  }
  Subspace nr = Subspace::span(n, vs);
  for (const auto& x : nr.basis())
    if (!is_nilpotent(L.ad(x))) throw CertificateError("nilradical membership certificate failed");
  if (!nr.contains(dg) || !is_ideal(L, nr)) throw CertificateError("nilradical certificate failed");
  if (hint && !(*hint == nr)) throw PreconditionError("nilradical hint does not match the certified nilradical");
  return nr;
}

Quotient quotient_by_ideal(const LieAlgebra& L, const Subspace& I) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& v : I.generators()) {
      Vector w = L.bracket(unit_vector(n, i), v);
      if (!I.contains(w))
        throw PreconditionError("not an ideal: [" + L.names()[i] + ", v] leaves the subspace");
    }
  Quotient q;
  q.complement = I.complement_units();
  const std::size_t m = q.complement.size();
  std::vector<Vector> cols;
  for (auto c : q.complement) cols.push_back(unit_vector(n, c));
  for (const auto& v : I.generators()) cols.push_back(v);
  Matrix Tinv = *inverse(Matrix::from_columns(cols, n));
  q.projection = Matrix(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) q.projection(i, j) = Tinv(i, j);
  std::vector<std::string> names;
  for (auto c : q.complement) names.push_back(L.names()[c]);
  q.algebra = LieAlgebra(m, names);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      q.algebra.set_bracket(i, j, q.projection.apply(L.basis_bracket(q.complement[i], q.complement[j])));
  return q;
}

LieAlgebra restrict_to_subalgebra(const LieAlgebra& L, const Subspace& S) {
  if (!is_subalgebra(L, S)) throw PreconditionError("not a subalgebra");
  const auto& gens = S.generators();
  LieAlgebra r(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      r.set_bracket(i, j, *S.coordinates(L.bracket(gens[i], gens[j])));
  return r;
}

}  // namespace metlie
