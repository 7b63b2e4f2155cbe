#include "metlie/redext.hpp"

#include "metlie/error.hpp"

namespace metlie {

namespace {

void names_or_default(const std::vector<Vector>& vs, const LieAlgebra& L, const std::string& prefix,
                      std::vector<std::string>& out) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::size_t nz = 0, idx = 0;
    for (std::size_t k = 0; k < vs[i].size(); ++k)
      if (vs[i][k] != 0) {
        ++nz;
        idx = k;
      }
    out.push_back(nz == 1 && vs[i][idx] == 1 ? L.names()[idx] : prefix + std::to_string(i + 1));
  }
}

Matrix gram_of(const SymBilinearForm& B, const std::vector<Vector>& vs) {
  Matrix G(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) G(i, j) = B(vs[i], vs[j]);
  return G;
}

Vector slice(const Vector& v, std::size_t from, std::size_t len) {
  return Vector(v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(from + len));
}

bool is_derivation(const LieAlgebra& L, const Matrix& D, std::string* witness) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector x = unit_vector(n, i), y = unit_vector(n, j);
      Vector lhs = D.apply(L.bracket(x, y));
      Vector rhs = vec_add(L.bracket(D.apply(x), y), L.bracket(x, D.apply(y)));
      if (lhs != rhs) {
        if (witness) *witness = "(" + L.names()[i] + ", " + L.names()[j] + ")";
        return false;
      }
    }
  return true;
}

}  // namespace

ReductionStep reduce_by_ideal(const MetricLieAlgebra& M, const Subspace& j) {
  const LieAlgebra& L = M.algebra();
  const std::size_t n = M.dim();
  if (!M.invariant()) throw PreconditionError("form is not invariant");
  if (!M.nondegenerate()) throw PreconditionError("form is degenerate");
  if (j.is_zero()) throw PreconditionError("ideal is zero");
  for (const auto& v : j.generators())
    if (!L.ad(v).is_zero())
      throw PreconditionError("ideal is not central");
  if (!totally_isotropic(M.form(), j)) throw PreconditionError("ideal is not totally isotropic");

  ReductionStep st;
  st.j = j;
  st.witt = witt_basis(M, j, false);
  const std::size_t k = st.witt.v.size(), m = st.witt.w.size();
  std::vector<Vector> cols = st.witt.v_star;
  cols.insert(cols.end(), st.witt.w.begin(), st.witt.w.end());
  cols.insert(cols.end(), st.witt.v.begin(), st.witt.v.end());
  st.basis_change = Matrix::from_columns(cols, n);
  Matrix Tinv = *inverse(st.basis_change);
  auto coords = [&](const Vector& x) { return Tinv.apply(x); };

  // Quotient algebra on w with the cocycle omega.
  std::vector<std::string> wnames, anames;
  names_or_default(st.witt.w, L, "w", wnames);
  names_or_default(st.witt.v_star, L, "a", anames);
  LieAlgebra q(m, wnames);
  st.omega.assign(m, std::vector<Vector>(m, zero_vector(k)));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vector c = coords(L.bracket(st.witt.w[a], st.witt.w[b]));
      if (!vec_is_zero(slice(c, 0, k))) throw CertificateError("[j^perp, j^perp] leaves j^perp");
      if (a < b) q.set_bracket(a, b, slice(c, k, m));
      st.omega[a][b] = slice(c, k + m, k);
    }
  st.quotient = MetricLieAlgebra(q, SymBilinearForm(gram_of(M.form(), st.witt.w)));
  if (!st.quotient.nondegenerate()) throw CertificateError("induced form is degenerate");

  // a = g / j^perp, delta and xi.
  st.a_algebra = LieAlgebra(k, anames);
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t l2 = l + 1; l2 < k; ++l2)
      st.a_algebra.set_bracket(l, l2, slice(coords(L.bracket(st.witt.v_star[l], st.witt.v_star[l2])), 0, k));
    Matrix D(m, m), X(k, m);
    for (std::size_t b = 0; b < m; ++b) {
      Vector c = coords(L.bracket(st.witt.v_star[l], st.witt.w[b]));
      if (!vec_is_zero(slice(c, 0, k))) throw CertificateError("[a, j^perp] leaves j^perp");
      for (std::size_t r = 0; r < m; ++r) D(r, b) = c[k + r];
      for (std::size_t r = 0; r < k; ++r) X(r, b) = c[k + m + r];
    }
    st.delta.push_back(D);
    st.xi.push_back(X);
  }

  // Certificates.
  const LieAlgebra& Q = st.quotient.algebra();
  const Matrix& QB = st.quotient.form().gram();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (st.omega[a][b] != vec_scale(-1, st.omega[b][a])) throw CertificateError("omega is not antisymmetric");
      for (std::size_t c = 0; c < m; ++c) {
        // omega([x,y],z) + cyclic = 0 (j is central, so the action term vanishes)
        Vector s = zero_vector(k);
        auto om = [&](const Vector& x, std::size_t z) {
          Vector r = zero_vector(k);
          for (std::size_t i = 0; i < m; ++i)
            if (x[i] != 0) vec_axpy(r, x[i], st.omega[i][z]);
          return r;
        };
        s = vec_add(s, om(Q.basis_bracket(a, b), c));
        s = vec_add(s, om(Q.basis_bracket(b, c), a));
        s = vec_add(s, om(Q.basis_bracket(c, a), b));
        if (!vec_is_zero(s)) throw CertificateError("omega fails the cocycle identity");
      }
    }
  bool a_abelian = true;
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t l2 = l + 1; l2 < k; ++l2)
      if (!vec_is_zero(L.bracket(st.witt.v_star[l], st.witt.v_star[l2]))) a_abelian = false;
  for (std::size_t l = 0; l < k; ++l) {
    const Matrix& D = st.delta[l];
    if (!(D.transpose() * QB + QB * D).is_zero()) throw CertificateError("delta is not skew");
    if (!is_derivation(Q, D, nullptr)) throw CertificateError("delta is not a derivation");
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        Rational lhs = M.form()(L.bracket(st.witt.v_star[l], st.witt.w[a]), st.witt.w[b]);
        Vector om = zero_vector(n);
        for (std::size_t i = 0; i < k; ++i) vec_axpy(om, st.omega[a][b][i], st.witt.v[i]);
        if (lhs != M.form()(om, st.witt.v_star[l])) throw CertificateError("omega pairing identity fails");
      }
    if (a_abelian && !st.xi[l].is_zero()) throw CertificateError("xi does not vanish for abelian a");
  }
  return st;
}

namespace {

// Rational isotropic vector of a diagonal indefinite form, or nullopt.
std::optional<Vector> isotropic_vector(const MetricLieAlgebra& M) {
  const std::size_t n = M.dim();
  const Matrix& G = M.form().gram();
  Matrix T = diagonalizing_basis(G);
  Matrix D = T.transpose() * G * T;
  auto lift = [&](const Vector& c) { return T.apply(c); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(D(i, i) > 0 && D(j, j) < 0)) continue;
      Rational r = -D(j, j) / D(i, i);
      if (mpz_perfect_square_p(r.get_num_mpz_t()) && mpz_perfect_square_p(r.get_den_mpz_t())) {
        Integer sn, sd;
        mpz_sqrt(sn.get_mpz_t(), r.get_num_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), r.get_den_mpz_t());
        Vector c = zero_vector(n);
        c[i] = Rational(sn, sd);
        c[i].canonicalize();
        c[j] = 1;
        return lift(c);
      }
    }
  // Small exhaustive search over up to four diagonal coordinates.
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n && idx.size() < 4; ++i)
    if (D(i, i) != 0) idx.push_back(i);
  const int R = 7;
  std::vector<int> x(idx.size(), -R);
  for (;;) {
    Rational s = 0;
    bool nz = false;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      s += D(idx[t], idx[t]) * x[t] * x[t];
      nz = nz || x[t] != 0;
    }
    if (nz && s == 0) {
      Vector c = zero_vector(n);
      for (std::size_t t = 0; t < idx.size(); ++t) c[idx[t]] = x[t];
      return lift(c);
    }
    std::size_t t = 0;
    while (t < x.size() && x[t] == R) x[t++] = -R;
    if (t == x.size()) break;
    ++x[t];
  }
  return std::nullopt;
}

}  // namespace

ReductionChain complete_reduction(const MetricLieAlgebra& M) {
  if (!is_solvable(M.algebra())) throw PreconditionError("complete reduction requires a solvable algebra");
  if (!M.invariant()) throw PreconditionError("form is not invariant");
  if (!M.nondegenerate()) throw PreconditionError("form is degenerate");
  ReductionChain chain;
  MetricLieAlgebra cur = M;
  for (;;) {
    Signature sg = signature(cur.form());
    if (sg.witt_index() == 0) break;
    std::optional<Subspace> c = central_isotropic_ideal(cur);
    Vector v;
    if (c) {
      v = c->basis().front();
    } else {
      auto iso = isotropic_vector(cur);
      if (!iso) throw PreconditionError("no rational isotropic vector found in the abelian indefinite part");
      v = *iso;
    }
    ReductionStep st = reduce_by_ideal(cur, Subspace::span(cur.dim(), {v}));
    cur = st.quotient;
    chain.steps.push_back(std::move(st));
  }
  if (!cur.algebra().is_abelian()) throw CertificateError("complete reduction ended in a non-abelian algebra");
  chain.final = cur;
  return chain;
}

void check_spec(const DoubleExtensionSpec& spec) {
  const LieAlgebra& G = spec.base.algebra();
  const Matrix& B = spec.base.form().gram();
  const LieAlgebra& A = spec.a_algebra;
  if (!spec.base.invariant()) throw PreconditionError("base form is not invariant");
  if (!spec.base.nondegenerate()) throw PreconditionError("base form is degenerate");
  if (spec.delta.size() != A.dim()) throw PreconditionError("need one delta per basis element of a");
  for (std::size_t l = 0; l < A.dim(); ++l) {
    const Matrix& D = spec.delta[l];
    if (D.rows() != G.dim() || D.cols() != G.dim()) throw PreconditionError("delta has the wrong size");
    std::string w;
    if (!is_derivation(G, D, &w))
      throw PreconditionError("delta not a derivation: delta_" + A.names()[l] + " fails on " + w);
    Matrix S = D.transpose() * B + B * D;
    for (std::size_t i = 0; i < S.rows(); ++i)
      for (std::size_t j = 0; j < S.cols(); ++j)
        if (S(i, j) != 0)
          throw PreconditionError("delta not skew: delta_" + A.names()[l] + " on (" + G.names()[i] + ", " +
                                  G.names()[j] + ")");
  }
  for (std::size_t l = 0; l < A.dim(); ++l)
    for (std::size_t l2 = l + 1; l2 < A.dim(); ++l2) {
      Matrix rhs(G.dim(), G.dim());
      Vector c = A.basis_bracket(l, l2);
      for (std::size_t t = 0; t < A.dim(); ++t)
        if (c[t] != 0) rhs += c[t] * spec.delta[t];
      if (!(bracket(spec.delta[l], spec.delta[l2]) == rhs))
        throw PreconditionError("delta not a representation on (" + A.names()[l] + ", " + A.names()[l2] + ")");
    }
}

MetricLieAlgebra double_extend(const DoubleExtensionSpec& spec, std::vector<std::string> dual_names) {
  check_spec(spec);
  const LieAlgebra& G = spec.base.algebra();
  const LieAlgebra& A = spec.a_algebra;
  const SymBilinearForm& B = spec.base.form();
  const std::size_t k = A.dim(), m = G.dim(), N = 2 * k + m;
  std::vector<std::string> names = A.names();
  names.insert(names.end(), G.names().begin(), G.names().end());
  if (dual_names.empty())
    for (const auto& s : A.names()) dual_names.push_back(s + "*");
  names.insert(names.end(), dual_names.begin(), dual_names.end());
  LieAlgebra L(N, names);
  auto aidx = [](std::size_t l) { return l; };
  auto gidx = [k](std::size_t i) { return k + i; };
  auto didx = [k, m](std::size_t l) { return k + m + l; };
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t l2 = l + 1; l2 < k; ++l2) {
      Vector v = zero_vector(N), c = A.basis_bracket(l, l2);
      for (std::size_t t = 0; t < k; ++t) v[aidx(t)] = c[t];
      L.set_bracket(aidx(l), aidx(l2), v);
    }
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t i = 0; i < m; ++i) {
      Vector v = zero_vector(N), c = spec.delta[l].col(i);
      for (std::size_t t = 0; t < m; ++t) v[gidx(t)] = c[t];
      L.set_bracket(aidx(l), gidx(i), v);
    }
    // coadjoint action: [a_l, alpha_j] = -sum_t c_{l t}^j alpha_t
    for (std::size_t j = 0; j < k; ++j) {
      Vector v = zero_vector(N);
      for (std::size_t t = 0; t < k; ++t) v[didx(t)] = -A.basis_bracket(l, t)[j];
      L.set_bracket(aidx(l), didx(j), v);
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector v = zero_vector(N), c = G.basis_bracket(i, j);
      for (std::size_t t = 0; t < m; ++t) v[gidx(t)] = c[t];
      for (std::size_t l = 0; l < k; ++l)
        v[didx(l)] = B(spec.delta[l].col(i), unit_vector(m, j));
      L.set_bracket(gidx(i), gidx(j), v);
    }
  Matrix F(N, N);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) F(gidx(i), gidx(j)) = B.gram()(i, j);
  for (std::size_t l = 0; l < k; ++l) {
    F(aidx(l), didx(l)) = 1;
    F(didx(l), aidx(l)) = 1;
  }
  MetricLieAlgebra out(L, SymBilinearForm(F));
  if (!out.invariant() || !out.nondegenerate())
    throw CertificateError("double extension did not produce an invariant scalar product");
  return out;
}

MetricLieAlgebra build_ab(std::size_t n, std::size_t s) {
  if (2 * s > n) throw PreconditionError("index out of range: need 0 <= s <= n - s");
  Matrix F(n, n);
  for (std::size_t i = 0; i < n; ++i) F(i, i) = i < n - s ? 1 : -1;
  return MetricLieAlgebra(LieAlgebra(n), SymBilinearForm(F),
                          "ab(" + std::to_string(n) + "," + std::to_string(s) + ")");
}

Matrix example42_delta() {
  Matrix d(4, 4);
  d(0, 0) = 1;
  d(2, 1) = 1;
  d(1, 2) = -1;
  d(3, 3) = -1;
  return d;
}

Matrix example42_base_form() {
  Matrix f(4, 4);
  f(0, 3) = f(3, 0) = 1;
  f(1, 1) = f(2, 2) = 1;
  return f;
}

MetricLieAlgebra build_example42() {
  LieAlgebra base(4, {"b", "x1", "x2", "y"});
  DoubleExtensionSpec spec{MetricLieAlgebra(base, SymBilinearForm(example42_base_form())),
                           LieAlgebra(1, {"a"}), {example42_delta()}};
  MetricLieAlgebra g = double_extend(spec, {"z"});
  return MetricLieAlgebra(g.algebra(), g.form(), "example42");
}

MetricLieAlgebra build_ko1(std::size_t n, std::size_t s, const Matrix& delta, const std::optional<Matrix>& base_form) {
  if (n < 3 || s < 1 || 2 * s > n) throw PreconditionError("ko1 needs n >= 3 and 1 <= s <= n - s");
  const std::size_t m = n - 2;
  Matrix F = base_form ? *base_form : build_ab(m, s - 1).form().gram();
  if (F.rows() != m) throw PreconditionError("base form has the wrong size");
  Signature sg = signature(SymBilinearForm(F));
  if (sg.p != m - (s - 1) || sg.q != s - 1) throw PreconditionError("base form has the wrong signature");
  if (delta.rows() != m || delta.cols() != m) throw PreconditionError("delta has the wrong size");
  Matrix S = delta.transpose() * F + F * delta;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (S(i, j) != 0)
        throw PreconditionError("delta not skew: fails on (e" + std::to_string(i + 1) + ", e" +
                                std::to_string(j + 1) + ")");
  DoubleExtensionSpec spec{MetricLieAlgebra(LieAlgebra(m), SymBilinearForm(F)), LieAlgebra(1, {"a"}), {delta}};
  MetricLieAlgebra g = double_extend(spec, {"z"});
  return MetricLieAlgebra(g.algebra(), g.form(), "ko1(" + std::to_string(n) + "," + std::to_string(s) + ")");
}

MetricLieAlgebra build_oscillator() {
  Matrix rot(2, 2);
  rot(1, 0) = 1;
  rot(0, 1) = -1;
  DoubleExtensionSpec spec{MetricLieAlgebra(LieAlgebra(2, {"x1", "x2"}), SymBilinearForm(Matrix::identity(2))),
                           LieAlgebra(1, {"a"}), {rot}};
  MetricLieAlgebra g = double_extend(spec, {"z"});
  return MetricLieAlgebra(g.algebra(), g.form(), "osc4");
}

}  // namespace metlie
