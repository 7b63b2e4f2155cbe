#include "metlie/algebraic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <cstdlib>
#include <mutex>
#include <sstream>

#include "metlie/error.hpp"
#include "metlie/factor.hpp"

namespace metlie {

GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
GaussRational operator*(const GaussRational& a, const GaussRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussRational operator/(const GaussRational& a, const GaussRational& b) {
  Rational d = b.re * b.re + b.im * b.im;
  if (d == 0) throw CertificateError("division by zero in Gaussian rational arithmetic");
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
GaussRational conj(const GaussRational& a) { return {a.re, -a.im}; }

namespace {

Rational sqrt_bound(const Rational& x, mpfr_rnd_t rnd) {
  mpfr_t t;
  mpfr_init2(t, 96);
  mpfr_set_q(t, x.get_mpq_t(), rnd);
  mpfr_sqrt(t, t, rnd);
  Rational q;
  mpfr_get_q(q.get_mpq_t(), t);
  mpfr_clear(t);
  return q;
}

}  // namespace

Rational modulus_upper(const GaussRational& z) {
  if (z.im == 0) return abs(z.re);
  if (z.re == 0) return abs(z.im);
  return sqrt_bound(z.re * z.re + z.im * z.im, MPFR_RNDU);
}

Rational modulus_lower(const GaussRational& z) {
  if (z.im == 0) return abs(z.re);
  if (z.re == 0) return abs(z.im);
  return sqrt_bound(z.re * z.re + z.im * z.im, MPFR_RNDD);
}

Disk operator+(const Disk& a, const Disk& b) { return {a.center + b.center, a.radius + b.radius}; }
Disk operator-(const Disk& a, const Disk& b) { return {a.center - b.center, a.radius + b.radius}; }
Disk operator*(const Disk& a, const Disk& b) {
  return {a.center * b.center,
          modulus_upper(a.center) * b.radius + modulus_upper(b.center) * a.radius + a.radius * b.radius};
}
Disk scale(const Rational& c, const Disk& a) { return {{c * a.center.re, c * a.center.im}, abs(c) * a.radius}; }

namespace {

Rational round_to(const Rational& x, unsigned bits) {
  Integer scaled;
  Rational y = x;
  mpq_mul_2exp(y.get_mpq_t(), y.get_mpq_t(), bits);
  mpz_fdiv_q(scaled.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  Rational r(scaled);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  return r;
}

}  // namespace

Disk round_disk(const Disk& d, unsigned bits) {
  Disk r;
  r.center.re = round_to(d.center.re, bits);
  r.center.im = round_to(d.center.im, bits);
  r.radius = d.radius + abs(d.center.re - r.center.re) + abs(d.center.im - r.center.im);
  // keep the radius itself small
  Rational up = round_to(r.radius, bits + 8);
  if (up < r.radius) {
    Rational ulp(1);
    mpq_div_2exp(ulp.get_mpq_t(), ulp.get_mpq_t(), bits + 8);
    up += ulp;
  }
  r.radius = up;
  return r;
}

Disk eval_disk(const Poly& p, const Disk& z, unsigned bits) {
  Disk acc;
  for (int k = p.degree(); k >= 0; --k) {
    acc = round_disk(acc * z, bits);
    acc.center.re += p.coeffs()[k];
  }
  return acc;
}

bool disjoint(const Disk& a, const Disk& b) { return modulus_lower(a.center - b.center) > a.radius + b.radius; }
bool contains(const Disk& outer, const Disk& inner) {
  return modulus_upper(outer.center - inner.center) + inner.radius <= outer.radius;
}
bool contains_zero(const Disk& d) { return modulus_lower(d.center) <= d.radius; }

unsigned working_precision() {
  if (const char* e = std::getenv("METRIC_LIE_PRECISION")) {
    long v = std::strtol(e, nullptr, 10);
    if (v >= 32 && v <= 1 << 20) return static_cast<unsigned>(v);
  }
  return 256;
}

namespace {

using Real = boost::multiprecision::mpfr_float;
std::mutex precision_mutex;

struct Cx {
  Real re, im;
};
Cx add(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx sub(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx mul(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx divi(const Cx& a, const Cx& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real absc(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

Real from_q(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Rational to_q(const Real& r) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), r.backend().data());
  return q;
}

// Aberth-Ehrlich iteration for a monic polynomial; returns approximations.
std::vector<Cx> aberth(const Poly& f, unsigned bits) {
  const int n = f.degree();
  std::vector<Real> c;
  for (const auto& q : f.coeffs()) c.push_back(from_q(q));
  Real bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, Real(abs(c[k])));
  bound = 1 + bound;
  std::vector<Cx> z(n);
  const Real pi = boost::multiprecision::mpfr_float(boost::math::constants::pi<Real>());
  for (int k = 0; k < n; ++k) {
    Real ang = 2 * pi * k / n + Real(0.4);
    z[k] = {bound * cos(ang) / 2, bound * sin(ang) / 2};
  }
  Real tol = ldexp(Real(1), -static_cast<int>(bits) + 8);
  for (int iter = 0; iter < 2000; ++iter) {
    Real maxstep = 0;
    for (int i = 0; i < n; ++i) {
      Cx p{c[n], Real(0)}, dp{Real(0), Real(0)};
      for (int k = n - 1; k >= 0; --k) {
        dp = add(mul(dp, z[i]), p);
        p = add(mul(p, z[i]), Cx{c[k], Real(0)});
      }
      if (p.re == 0 && p.im == 0) continue;
      Cx w = divi(p, dp);
      Cx s{Real(0), Real(0)};
      for (int j = 0; j < n; ++j)
        if (j != i) s = add(s, divi(Cx{Real(1), Real(0)}, sub(z[i], z[j])));
      Cx denom = sub(Cx{Real(1), Real(0)}, mul(w, s));
      Cx step = divi(w, denom);
      z[i] = sub(z[i], step);
      Real sz = absc(step) / std::max(Real(1), absc(z[i]));
      if (sz > maxstep) maxstep = sz;
    }
    if (maxstep < tol) break;
  }
  return z;
}

enum class Parity { None, Even, Odd };

Parity parity(const Poly& f) {
  Poly r = f.reflect();
  if (r == f) return Parity::Even;
  if (r == Rational(-1) * f) return Parity::Odd;
  return Parity::None;
}

// Makes the approximations exactly closed under conjugation (and under
// negation for even/odd f). Returns false when the counts do not match.
bool symmetrize(const std::vector<Cx>& z, Parity par, unsigned bits, std::vector<GaussRational>& out) {
  const std::size_t n = z.size();
  Real eps = ldexp(Real(1), -static_cast<int>(bits / 3));
  out.clear();
  auto q = [&](const Real& x) { return to_q(x); };
  auto small = [&](const Real& x, const Cx& w) { return abs(x) < eps * std::max(Real(1), absc(w)); };
  if (par == Parity::None) {
    std::vector<GaussRational> reals, upper;
    for (const auto& w : z) {
      if (small(w.im, w))
        reals.push_back({q(w.re), 0});
      else if (w.im > 0)
        upper.push_back({q(w.re), q(w.im)});
    }
    if (reals.size() + 2 * upper.size() != n) return false;
    out = reals;
    for (const auto& u : upper) {
      out.push_back(u);
      out.push_back(conj(u));
    }
    return true;
  }
  std::vector<GaussRational> zero, rpos, ipos, quad;
  for (const auto& w : z) {
    bool sr = small(w.re, w), si = small(w.im, w);
    if (sr && si)
      zero.push_back({0, 0});
    else if (si && w.re > 0)
      rpos.push_back({q(w.re), 0});
    else if (sr && w.im > 0)
      ipos.push_back({0, q(w.im)});
    else if (!sr && !si && w.re > 0 && w.im > 0)
      quad.push_back({q(w.re), q(w.im)});
  }
  if (zero.size() > 1 || zero.size() + 2 * rpos.size() + 2 * ipos.size() + 4 * quad.size() != n) return false;
  out = zero;
  for (const auto& r : rpos) {
    out.push_back(r);
    out.push_back({-r.re, 0});
  }
  for (const auto& r : ipos) {
    out.push_back(r);
    out.push_back({0, -r.im});
  }
  for (const auto& r : quad) {
    out.push_back(r);
    out.push_back(conj(r));
    out.push_back({-r.re, r.im});
    out.push_back({-r.re, -r.im});
  }
  return true;
}

GaussRational eval_exact(const Poly& f, const GaussRational& z) {
  GaussRational acc;
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * z;
    acc.re += f.coeffs()[k];
  }
  return acc;
}

bool certify(const Poly& f, const std::vector<GaussRational>& z, Parity par, unsigned bits,
             std::vector<RootEnclosure>& out) {
  const std::size_t n = z.size();
  out.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    GaussRational prod{1, 0};
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) {
        GaussRational d = z[i] - z[j];
        if (d.re == 0 && d.im == 0) return false;
        prod = prod * d;
      }
    GaussRational w = eval_exact(f, z[i]) / prod;
    Disk d{z[i] - w, Rational(static_cast<long>(n - 1)) * modulus_upper(w)};
    out[i].disk = round_disk(d, bits);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!disjoint(out[i].disk, out[j].disk)) return false;
  for (auto& e : out) {
    const Disk& d = e.disk;
    if (d.center.im == 0) {
      e.real = true;
    } else if (abs(d.center.im) <= d.radius) {
      return false;
    }
    if (par != Parity::None && !e.real) {
      if (d.center.re == 0)
        e.imag = true;
      else if (abs(d.center.re) <= d.radius)
        return false;
    }
  }
  return true;
}

}  // namespace

std::vector<RootEnclosure> isolate_roots(const Poly& f0, unsigned bits) {
  if (f0.degree() < 1) return {};
  Poly f = f0.monic();
  if (gcd(f, f.derivative()).degree() > 0) throw PreconditionError("root isolation needs a squarefree polynomial");
  if (bits == 0) bits = working_precision();
  Parity par = parity(f);
  std::lock_guard<std::mutex> lock(precision_mutex);
  const unsigned saved = Real::default_precision();
  for (unsigned b = bits; b <= 16 * bits && b <= 65536; b *= 2) {
    Real::default_precision(static_cast<unsigned>(b * 0.30103) + 2);
    std::vector<Cx> z = aberth(f, b);
    std::vector<GaussRational> sym;
    std::vector<RootEnclosure> out;
    if (symmetrize(z, par, b, sym) && certify(f, sym, par, b, out)) {
      Real::default_precision(saved);
      std::sort(out.begin(), out.end(), [](const RootEnclosure& a, const RootEnclosure& c) {
        if (a.disk.center.re != c.disk.center.re) return a.disk.center.re < c.disk.center.re;
        return a.disk.center.im < c.disk.center.im;
      });
      return out;
    }
  }
  Real::default_precision(saved);
  throw CertificateError("precision insufficient for root isolation of " + to_string(f0));
}

AlgebraicNumber AlgebraicNumber::refined(unsigned bits) const {
  Rational target(1);
  mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), bits);
  if (enc_.disk.radius <= target) return *this;
  for (unsigned b = std::max(bits + 16, working_precision()); b <= 65536; b *= 2) {
    for (const auto& e : isolate_roots(minpoly_, b))
      if (contains(enc_.disk, e.disk) && e.disk.radius <= target) return AlgebraicNumber(minpoly_, e);
  }
  throw CertificateError("precision insufficient while refining a root of " + metlie::to_string(minpoly_));
}

double AlgebraicNumber::approx_re() const { return enc_.disk.center.re.get_d(); }
double AlgebraicNumber::approx_im() const { return enc_.disk.center.im.get_d(); }

std::string AlgebraicNumber::to_string() const {
  std::ostringstream os;
  os.precision(12);
  if (is_rational()) return Rational(-minpoly_.coeff(0)).get_str();
  if (enc_.imag) {
    os << approx_im() << "i";
    return os.str();
  }
  os << approx_re();
  if (!enc_.real) os << (approx_im() < 0 ? " - " : " + ") << std::abs(approx_im()) << "i";
  return os.str();
}

std::vector<AlgebraicNumber> roots_of(const Poly& irreducible, unsigned bits) {
  std::vector<AlgebraicNumber> out;
  Poly m = irreducible.monic();
  if (m.degree() == 1) {
    RootEnclosure e;
    e.disk.center.re = -m.coeff(0);
    e.real = true;
    out.emplace_back(m, e);
    return out;
  }
  for (auto& e : isolate_roots(m, bits)) out.emplace_back(m, e);
  return out;
}

EigenvalueData eigenvalue_data(const std::vector<std::pair<Poly, int>>& factors) {
  EigenvalueData d;
  d.factors = factors;
  for (const auto& [f, m] : factors) {
    d.dim += static_cast<std::size_t>(f.degree() * m);
    for (auto& r : roots_of(f)) {
      std::size_t idx = d.roots.size();
      if (r.is_real())
        d.real_eigs.push_back(idx);
      else if (r.enclosure().center.im > 0)
        d.complex_pairs.push_back(idx);
      d.roots.push_back(std::move(r));
      d.multiplicity.push_back(m);
    }
  }
  return d;
}

EigenvalueData eigenvalue_data(const Matrix& A) {
  if (A.rows() == 0) return {};
  return eigenvalue_data(factor(charpoly(A)));
}

std::vector<AlgebraicNumber> exact_eigenvalues(const Matrix& A) {
  EigenvalueData d = eigenvalue_data(A);
  std::vector<AlgebraicNumber> out;
  for (std::size_t i = 0; i < d.roots.size(); ++i)
    for (int k = 0; k < d.multiplicity[i]; ++k) out.push_back(d.roots[i]);
  return out;
}

}  // namespace metlie
