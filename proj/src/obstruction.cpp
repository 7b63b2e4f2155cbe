#include "metlie/obstruction.hpp"

#include <algorithm>
#include <sstream>

#include "metlie/einstein.hpp"
#include "metlie/error.hpp"
#include "metlie/factor.hpp"

namespace metlie {

std::string to_string(CaseTag c) {
  switch (c) {
    case CaseTag::case1_nonzero_real_part: return "case1_nonzero_real_part";
    case CaseTag::case2_imaginary_pair: return "case2_imaginary_pair";
    case CaseTag::out_of_scope_n_gt_5: return "out_of_scope_n_gt_5";
    case CaseTag::nilpotent: return "nilpotent";
    case CaseTag::unclassified: return "unclassified";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::obstructed: return "obstructed";
    case Verdict::schanuel_conditional: return "schanuel_conditional";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "?";
}

namespace {

Poly spectrum_charpoly(const EigenvalueData& E) {
  Poly p = Poly::constant(1);
  for (const auto& [f, m] : E.factors)
    for (int k = 0; k < m; ++k) p = p * f.monic();
  return p;
}

std::string fourth_root_text(const std::string& name, const Rational& v) {
  if (auto s = rational_sqrt(v))
    if (auto r = rational_sqrt(*s)) return name + " = " + r->get_str();
  return name + "^4 = " + v.get_str();
}

}  // namespace

ObstructionReport lemma52_verdict(const EigenvalueData& E, std::size_t n) {
  if (E.dim > n) throw PreconditionError("spectrum larger than the acting dimension");
  ObstructionReport r;
  r.input_spectrum = E;
  r.n = n;
  const Poly t = Poly::t();
  bool nilpotent = true;
  for (const auto& [f, m] : E.factors)
    if (!(f.monic() == t)) nilpotent = false;
  r.hypotheses.push_back({"not nilpotent", !nilpotent, nilpotent ? "all eigenvalues vanish" : ""});
  if (nilpotent) {
    r.case_tag = CaseTag::nilpotent;
    r.verdict = Verdict::inapplicable;
    return r;
  }
  auto cond = eigenvalue_condition(E);
  r.residual = cond.residual;
  if (!cond.holds)
    throw PreconditionError("eigenvalue condition violated: sum lambda^2 + 2 alpha^2 - 2 beta^2 = " +
                            cond.residual.get_str());
  r.hypotheses.push_back({"eigenvalue condition", true, "exact residual 0"});
  r.hypotheses.push_back({"non-real eigenvalue pair", !E.complex_pairs.empty(), ""});

  if (n >= 6) {
    r.case_tag = CaseTag::out_of_scope_n_gt_5;
    r.hypotheses.push_back({"n <= 5", false, "n = " + std::to_string(n)});
    for (const auto& z : E.roots)
      if (!z.is_zero()) r.exp_eigenvalue_patterns.push_back("e^{" + z.to_string() + "}");
    r.verdict = Verdict::schanuel_conditional;
    r.rule_cited = kRuleSchanuel;
    return r;
  }
  r.hypotheses.push_back({"n <= 5", true, "n = " + std::to_string(n)});

  Poly chi = spectrum_charpoly(E);
  Poly ref = chi.reflect();
  const bool closed = ref == chi || ref == Rational(-1) * chi;
  r.hypotheses.push_back({"spectrum closed under negation", closed, ""});
  Poly q = Poly::constant(1);
  for (const auto& [f, m] : E.factors)
    if (!(f.monic() == t))
      for (int k = 0; k < m; ++k) q = q * f.monic();
  bool shape = q.degree() == 4 && q.coeff(1) == 0 && q.coeff(2) == 0 && q.coeff(3) == 0 && q.coeff(0) != 0;
  r.hypotheses.push_back({"nonzero spectrum is the root set of t^4 + c", shape, "nonzero part " + to_string(q)});
  if (!closed || !shape || E.complex_pairs.empty()) {
    r.case_tag = CaseTag::unclassified;
    r.verdict = Verdict::inapplicable;
    return r;
  }
  const Rational c = q.coeff(0);
  // classification read off the isolating disks as an independent check
  std::size_t nreal = 0, nimag = 0, ngeneric = 0;
  for (std::size_t i = 0; i < E.roots.size(); ++i) {
    const auto& z = E.roots[i];
    if (z.is_zero()) continue;
    if (z.is_real())
      nreal += E.multiplicity[i];
    else if (z.is_imaginary())
      nimag += E.multiplicity[i];
    else
      ngeneric += E.multiplicity[i];
  }
  if (c > 0) {
    if (ngeneric != 4) throw CertificateError("root classification disagrees with t^4 + c, c > 0");
    r.case_tag = CaseTag::case1_nonzero_real_part;
    r.base = fourth_root_text("alpha", c / 4);
    r.exponents = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    r.exp_eigenvalue_patterns = {"e^{alpha(1+i)}", "e^{alpha(1-i)}", "e^{alpha(-1+i)}", "e^{alpha(-1-i)}"};
  } else {
    if (nreal != 2 || nimag != 2) throw CertificateError("root classification disagrees with t^4 + c, c < 0");
    r.case_tag = CaseTag::case2_imaginary_pair;
    r.base = fourth_root_text("lambda", -c);
    r.exponents = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    r.exp_eigenvalue_patterns = {"e^{lambda}", "e^{-lambda}", "e^{i lambda}", "e^{-i lambda}"};
  }
  // xi -> xi^i multiplies the exponent by i
  r.patterns_closed_under_power_i = std::all_of(r.exponents.begin(), r.exponents.end(), [&](const ExpExponent& e) {
    ExpExponent rot{-e.im, e.re};
    return std::find(r.exponents.begin(), r.exponents.end(), rot) != r.exponents.end();
  });
  r.hypotheses.push_back({"exp-eigenvalues closed under xi -> xi^i", r.patterns_closed_under_power_i, ""});
  if (!r.patterns_closed_under_power_i) throw CertificateError("pattern not closed under xi -> xi^i");
  r.verdict = Verdict::obstructed;
  r.rule_cited = kRuleGelfondSchneider;
  return r;
}

ObstructionReport lemma52_verdict(const Matrix& A) {
  if (!A.is_square()) throw PreconditionError("square matrix required");
  return lemma52_verdict(eigenvalue_data(A), A.rows());
}

ElementObstruction obstruct_element(const MetricLieAlgebra& M, const Vector& a,
                                    const std::optional<Subspace>& restriction) {
  if (a.size() != M.dim()) throw PreconditionError("element has the wrong dimension");
  Matrix ad = M.algebra().ad(a);
  ElementObstruction out;
  if (restriction) {
    out.restriction = *restriction;
  } else {
    Matrix s = jordan_chevalley(ad).semisimple;
    out.restriction = Subspace::span(M.dim(), s.columns());
  }
  out.restricted = restrict_map(ad, out.restriction);
  out.report = out.restricted.rows() == 0 ? lemma52_verdict(EigenvalueData{}, 0) : lemma52_verdict(out.restricted);
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic in Q(theta) = Q[t]/(F) and in Q(theta)[y].

namespace {

using KPoly = std::vector<Poly>;

Poly kinv(const Poly& a, const Poly& F) {
  ExtGcd e = ext_gcd(a, F);
  if (e.g.degree() != 0) throw CertificateError("number field element not invertible");
  return e.s % F;
}

void ktrim(KPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly kmul(const KPoly& a, const KPoly& b, const Poly& F) {
  if (a.empty() || b.empty()) return {};
  KPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % F;
  ktrim(c);
  return c;
}

KPoly kadd(KPoly a, const KPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
  ktrim(a);
  return a;
}

KPoly kmod(KPoly a, const KPoly& b, const Poly& F) {
  const Poly inv = kinv(b.back(), F);
  while (a.size() >= b.size() && !a.empty()) {
    Poly q = (a.back() * inv) % F;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] - q * b[i]) % F;
    ktrim(a);
  }
  return a;
}

KPoly kgcd(KPoly a, KPoly b, const Poly& F) {
  ktrim(a);
  ktrim(b);
  while (!b.empty()) {
    KPoly r = kmod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Poly inv = kinv(a.back(), F);
  for (auto& c : a) c = (c * inv) % F;
  return a;
}

Matrix companion(const Poly& f) {
  Poly g = f.monic();
  const int d = g.degree();
  Matrix C(d, d);
  for (int i = 1; i < d; ++i) C(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) C(i, d - 1) = -g.coeff(i);
  return C;
}

// Minimal distance between distinct roots of f, bounded below.
Rational separation_lower(const std::vector<AlgebraicNumber>& roots) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Disk& a = roots[i].enclosure();
      const Disk& b = roots[j].enclosure();
      Rational d = modulus_lower(a.center - b.center) - a.radius - b.radius;
      if (!best || d < *best) best = d;
    }
  return best ? *best : Rational(1);
}

// True iff the exact root of f inside `a` equals the root of f inside `b`,
// where `get_a(bits)` and `get_b(bits)` return ever smaller enclosures.
template <class GA, class GB>
bool same_root(const Poly& f, GA get_a, GB get_b) {
  Rational sep = separation_lower(roots_of(f));
  for (unsigned bits = 64; bits <= 8192; bits *= 2) {
    Disk a = get_a(bits), b = get_b(bits);
    if (2 * (a.radius + b.radius) < sep) return !disjoint(a, b);
  }
  throw CertificateError("precision insufficient to compare algebraic numbers");
}

struct FieldState {
  Poly F = Poly::t();  // Q itself, theta = 0
  std::optional<AlgebraicNumber> theta;
  std::vector<Poly> reps;
};

void adjoin(FieldState& K, const AlgebraicNumber& phi, std::size_t bound) {
  const Poly& m = phi.minpoly();
  if (m.degree() == 1) {
    K.reps.push_back(Poly::constant(-m.coeff(0)));
    return;
  }
  if (K.F.degree() == 1) {
    K.F = m;
    K.theta = phi;
    K.reps.push_back(Poly::t());
    return;
  }
  const Poly& F = K.F;
  const AlgebraicNumber& theta = *K.theta;
  const std::size_t dm = m.degree(), dF = F.degree();
  for (long s = 1; s < 64; ++s) {
    Matrix N = kronecker(companion(m), Matrix::identity(dF)) + Rational(s) * kronecker(Matrix::identity(dm), companion(F));
    Poly chi = charpoly(N);
    if (gcd(chi, chi.derivative()).degree() > 0) continue;
    auto facs = factor(chi);
    // locate gamma = phi + s theta among the roots of the factors
    std::optional<AlgebraicNumber> gamma;
    for (unsigned bits = 64; bits <= 8192 && !gamma; bits *= 2) {
      Disk D = phi.refined(bits).enclosure() + scale(Rational(s), theta.refined(bits).enclosure());
      std::vector<AlgebraicNumber> hits;
      for (const auto& [g, mult] : facs)
        for (const auto& z : roots_of(g))
          if (!disjoint(z.refined(bits).enclosure(), D)) hits.push_back(z.refined(bits));
      if (hits.size() == 1) gamma = hits.front();
    }
    if (!gamma) throw CertificateError("could not identify the primitive element");
    const Poly& G = gamma->minpoly();
    if (static_cast<std::size_t>(G.degree()) > bound)
      throw PreconditionError("common field degree exceeds bound " + std::to_string(bound));
    // theta is the common root of F(y) and m(gamma - s y) over Q(gamma)
    KPoly Fy;
    for (const auto& c : F.coeffs()) Fy.push_back(Poly::constant(c));
    KPoly lin{Poly::t() % G, Poly::constant(Rational(-s))};
    KPoly my;
    for (int k = m.degree(); k >= 0; --k) my = kadd(kmul(my, lin, G), KPoly{Poly::constant(m.coeff(k))});
    KPoly h = kgcd(Fy, my, G);
    if (h.size() != 2) throw CertificateError("primitive element gcd is not linear");
    Poly r = ((Rational(-1) * h[0]) % G);
    for (auto& rep : K.reps) rep = rep.compose(r) % G;
    K.reps.push_back((Poly::t() - Rational(s) * r) % G);
    K.F = G;
    K.theta = *gamma;
    return;
  }
  throw CertificateError("no separating primitive element found");
}

}  // namespace

RelationBasis qlinear_relations(const std::vector<AlgebraicNumber>& eigs, std::size_t degree_bound) {
  RelationBasis out;
  out.numbers = eigs;
  FieldState K;
  // identical inputs share one representation
  std::vector<std::size_t> first(eigs.size());
  std::vector<std::size_t> uniq;
  for (std::size_t k = 0; k < eigs.size(); ++k) {
    first[k] = k;
    for (std::size_t u : uniq)
      if (eigs[u].minpoly() == eigs[k].minpoly() && eigs[u].enclosure().center == eigs[k].enclosure().center &&
          eigs[u].enclosure().radius == eigs[k].enclosure().radius) {
        first[k] = u;
        break;
      }
    if (first[k] == k) uniq.push_back(k);
  }
  std::vector<std::size_t> slot(eigs.size());
  for (std::size_t u : uniq) {
    slot[u] = K.reps.size();
    adjoin(K, eigs[u], degree_bound);
  }
  out.field_minpoly = K.F;
  out.theta = K.theta;
  for (std::size_t k = 0; k < eigs.size(); ++k) out.representations.push_back(K.reps[slot[first[k]]]);

  // exact check of each representation, then identification of the root
  for (std::size_t k = 0; k < eigs.size(); ++k) {
    const Poly& m = eigs[k].minpoly();
    const Poly& rep = out.representations[k];
    if (!(m.compose(rep) % K.F).is_zero()) throw CertificateError("representation is not a root of the minimal polynomial");
    if (m.degree() == 1) continue;
    const AlgebraicNumber& th = *K.theta;
    bool ok = same_root(
        m, [&](unsigned b) { return eval_disk(rep, th.refined(b).enclosure(), b + 32); },
        [&](unsigned b) { return eigs[k].refined(b).enclosure(); });
    if (!ok) throw CertificateError("representation names a different conjugate");
  }

  const std::size_t d = K.F.degree();
  std::vector<Vector> cols;
  for (const auto& rep : out.representations) {
    Vector c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = rep.coeff(i);
    cols.push_back(c);
  }
  if (!cols.empty()) out.relations = kernel(Matrix::from_columns(cols, d));
  for (const auto& rel : out.relations) {
    Poly s;
    for (std::size_t k = 0; k < rel.size(); ++k) s = s + rel[k] * out.representations[k];
    if (!(s % K.F).is_zero()) throw CertificateError("relation does not vanish in the field");
  }

  Poly sq;
  for (const auto& rep : out.representations) sq = (sq + rep * rep) % K.F;
  out.sum_of_squares = sq;
  out.quadratic_relation_holds = sq.is_zero();

  // conjugation closure as a multiset
  std::vector<bool> used(eigs.size(), false);
  out.conjugation_closed = true;
  for (std::size_t k = 0; k < eigs.size() && out.conjugation_closed; ++k) {
    if (used[k]) continue;
    if (eigs[k].is_real()) {
      used[k] = true;
      continue;
    }
    bool found = false;
    for (std::size_t l = 0; l < eigs.size() && !found; ++l) {
      if (used[l] || l == k || !(eigs[l].minpoly() == eigs[k].minpoly())) continue;
      auto cj = [&](unsigned b) {
        Disk x = eigs[k].refined(b).enclosure();
        x.center = conj(x.center);
        return x;
      };
      if (same_root(eigs[k].minpoly(), cj, [&](unsigned b) { return eigs[l].refined(b).enclosure(); })) {
        used[k] = used[l] = true;
        found = true;
      }
    }
    out.conjugation_closed = found;
  }
  std::ostringstream os;
  for (std::size_t k = 0; k < eigs.size(); ++k) os << (k ? " + " : "") << "x" << k + 1 << "^2";
  os << " = 0";
  out.quadratic_relation = eigs.empty() ? "0 = 0" : os.str();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Iv {
  Rational lo, hi;
};

Rational dyadic(const Rational& x, bool up) {
  constexpr unsigned kBits = 256;
  Rational y = x;
  mpq_mul_2exp(y.get_mpq_t(), y.get_mpq_t(), kBits);
  Integer q;
  if (up)
    mpz_cdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  else
    mpz_fdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  Rational r(q);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), kBits);
  return r;
}

Iv widen(const Iv& a) { return {dyadic(a.lo, false), dyadic(a.hi, true)}; }
Iv operator+(const Iv& a, const Iv& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Iv operator-(const Iv& a, const Iv& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Iv operator*(const Iv& a, const Iv& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return widen({*std::min_element(p, p + 4), *std::max_element(p, p + 4)});
}
Iv scale(const Rational& c, const Iv& a) { return c >= 0 ? Iv{c * a.lo, c * a.hi} : Iv{c * a.hi, c * a.lo}; }

Rational inf_norm(const Matrix& A) {
  Rational best = 0;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < A.cols(); ++j) s += abs(A(i, j));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

std::vector<ProbeRow> integer_exponential_probe(const Matrix& A, const std::vector<Rational>& t_grid) {
  if (!A.is_square()) throw PreconditionError("square matrix required");
  const std::size_t n = A.rows();
  const Rational norm = inf_norm(A);
  Rational tol(1);
  mpq_div_2exp(tol.get_mpq_t(), tol.get_mpq_t(), 96);
  std::vector<Rational> tau{Rational(static_cast<long>(n))};  // tr(A^m)
  Matrix P = Matrix::identity(n);
  auto trace_pow = [&](std::size_t m) {
    while (tau.size() <= m) {
      P = P * A;
      tau.push_back(P.trace());
    }
    return tau[m];
  };
  std::vector<ProbeRow> rows;
  for (const auto& t : t_grid) {
    ProbeRow row;
    row.t = t;
    if (t == 0) {
      row.trivial = true;
      // exp(0) = I, characteristic polynomial (x - 1)^n
      Integer binom = 1;
      for (std::size_t k = 0; k <= n; ++k) {
        Rational v = (k % 2 ? -1 : 1) * Rational(binom);
        row.coefficients.emplace_back(v, v);
        binom = binom * static_cast<unsigned long>(n - k) / static_cast<unsigned long>(k + 1);
      }
      rows.push_back(std::move(row));
      continue;
    }
    // power sums p_j = tr(exp(j t A)) as rational intervals
    std::vector<Iv> p(n + 1);
    for (std::size_t j = 1; j <= n; ++j) {
      const Rational s = Rational(static_cast<long>(j)) * t;
      const Rational x = abs(s) * norm;
      Rational sum = 0, term = 1;  // term = s^m / m!
      Rational tail_term = 1;      // x^m / m!
      std::size_t mterm = 0;
      for (;; ++mterm) {
        sum += term * trace_pow(mterm);
        term = term * s / Rational(static_cast<long>(mterm + 1));
        tail_term = tail_term * x / Rational(static_cast<long>(mterm + 1));
        // remaining terms: |tr(A^k)| <= n x^k / k! for k > mterm, geometric bound
        Rational ratio = x / Rational(static_cast<long>(mterm + 2));
        if (ratio < Rational(1, 2)) {
          Rational tail = Rational(static_cast<long>(n)) * tail_term * 2;
          if (tail < tol) {
            p[j] = widen({sum - tail, sum + tail});
            break;
          }
        }
        if (mterm > 4000) throw CertificateError("exponential series did not converge");
      }
    }
    // Newton identities: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    std::vector<Iv> e(n + 1);
    e[0] = {1, 1};
    for (std::size_t k = 1; k <= n; ++k) {
      Iv acc{0, 0};
      for (std::size_t i = 1; i <= k; ++i) {
        Iv term = e[k - i] * p[i];
        acc = i % 2 ? acc + term : acc - term;
      }
      e[k] = widen(scale(Rational(1, static_cast<long>(k)), acc));
    }
    for (std::size_t k = 0; k <= n; ++k) {
      Iv c = k % 2 ? scale(-1, e[k]) : e[k];
      row.coefficients.emplace_back(c.lo, c.hi);
      Integer lo_ceil, hi_floor;
      mpz_cdiv_q(lo_ceil.get_mpz_t(), c.lo.get_num_mpz_t(), c.lo.get_den_mpz_t());
      mpz_fdiv_q(hi_floor.get_mpz_t(), c.hi.get_num_mpz_t(), c.hi.get_den_mpz_t());
      if (lo_ceil > hi_floor && !row.excluded) {
        row.excluded = true;
        row.witness = k;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ProbeRow> integer_exponential_probe(const MetricLieAlgebra& M, const Vector& a,
                                                const std::vector<Rational>& t_grid) {
  if (a.size() != M.dim()) throw PreconditionError("element has the wrong dimension");
  return integer_exponential_probe(M.algebra().ad(a), t_grid);
}

}  // namespace metlie
