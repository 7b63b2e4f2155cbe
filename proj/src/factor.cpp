#include "metlie/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "metlie/error.hpp"

namespace metlie {

namespace {

using u64 = std::uint64_t;
using ZPoly = std::vector<Integer>;  // low degree first
using PPoly = std::vector<u64>;      // coefficients mod p, low degree first

// ---- arithmetic over F_p ----

struct Fp {
  u64 p;

  void trim(PPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  }
  PPoly sub(PPoly a, const PPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
  }
  PPoly mul(const PPoly& a, const PPoly& b) const {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  // Returns (q, r).
  std::pair<PPoly, PPoly> divmod(PPoly a, const PPoly& b) const {
    if (a.size() < b.size()) return {{}, a};
    PPoly q(a.size() - b.size() + 1, 0);
    u64 li = inv(b.back());
    for (std::size_t k = a.size(); k-- >= b.size();) {
      u64 c = a[k] * li % p;
      q[k - b.size() + 1] = c;
      if (c)
        for (std::size_t j = 0; j < b.size(); ++j) {
          std::size_t idx = k - b.size() + 1 + j;
          a[idx] = (a[idx] + p - c * b[j] % p) % p;
        }
      if (k == b.size() - 1) break;
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  PPoly mod(const PPoly& a, const PPoly& b) const { return divmod(a, b).second; }
  PPoly monic(PPoly a) const {
    if (a.empty()) return a;
    u64 li = inv(a.back());
    for (auto& x : a) x = x * li % p;
    return a;
  }
  PPoly gcd(PPoly a, PPoly b) const {
    while (!b.empty()) {
      PPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1 (a, b coprime).
  void bezout(const PPoly& a, const PPoly& b, PPoly& s, PPoly& t) const {
    PPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      PPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 li = inv(r0.at(0));
    s = mul(s0, {li});
    t = mul(t0, {li});
  }
  PPoly deriv(const PPoly& a) const {
    PPoly d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * (k % p) % p);
    trim(d);
    return d;
  }
  PPoly powmod(PPoly base, const Integer& e, const PPoly& m) const {
    PPoly r{1};
    base = mod(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mod(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
    }
    return r;
  }
};

PPoly reduce(const ZPoly& f, u64 p) {
  PPoly r;
  for (const auto& c : f) {
    Integer m = c % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    r.push_back(m.get_ui());
  }
  Fp{p}.trim(r);
  return r;
}

// Distinct-degree factorisation of a monic squarefree polynomial.
std::vector<std::pair<PPoly, int>> ddf(const Fp& F, PPoly f) {
  std::vector<std::pair<PPoly, int>> out;
  PPoly x{0, 1};
  PPoly h = x;
  Integer P(static_cast<unsigned long>(F.p));
  int i = 1;
  while (static_cast<int>(f.size()) - 1 >= 2 * i) {
    h = F.powmod(h, P, f);
    PPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      out.emplace_back(g, i);
      f = F.divmod(f, g).first;
      h = F.mod(h, f);
    }
    ++i;
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus, p odd).
void edf(const Fp& F, const PPoly& g, int d, std::mt19937_64& rng, std::vector<PPoly>& out) {
  int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  for (;;) {
    PPoly a(n);
    for (auto& c : a) c = dist(rng);
    F.trim(a);
    if (a.size() < 2) continue;
    PPoly b = F.sub(F.powmod(a, e, g), {1});
    PPoly h = F.gcd(b, g);
    if (h.size() > 1 && h.size() < g.size()) {
      edf(F, h, d, rng, out);
      edf(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

// ---- arithmetic modulo M over Z ----

void zmod(ZPoly& a, const Integer& M) {
  for (auto& c : a) {
    c %= M;
    if (c < 0) c += M;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& M) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  zmod(r, M);
  return r;
}

ZPoly zadd(ZPoly a, const ZPoly& b, const Integer& M) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  zmod(a, M);
  return a;
}

ZPoly zsub(ZPoly a, const ZPoly& b, const Integer& M) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  zmod(a, M);
  return a;
}

// Division by a monic polynomial modulo M.
std::pair<ZPoly, ZPoly> zdivmod_monic(ZPoly a, const ZPoly& b, const Integer& M) {
  if (a.size() < b.size()) return {{}, a};
  ZPoly q(a.size() - b.size() + 1);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    Integer c = a[k];
    q[k - b.size() + 1] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[k - b.size() + 1 + j] -= c * b[j];
    for (std::size_t j = 0; j < b.size(); ++j) {
      Integer& x = a[k - b.size() + 1 + j];
      x %= M;
      if (x < 0) x += M;
    }
    if (k == b.size() - 1) break;
  }
  zmod(a, M);
  zmod(q, M);
  return {q, a};
}

ZPoly lift_pp(const PPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// One quadratic Hensel step: inputs valid mod m, outputs valid mod m2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m2) {
  ZPoly e = zsub(f, zmul(g, h, m2), m2);
  auto [q, r] = zdivmod_monic(zmul(s, e, m2), h, m2);
  ZPoly gs = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
  ZPoly hs = zadd(h, r, m2);
  ZPoly b = zsub(zadd(zmul(s, gs, m2), zmul(t, hs, m2), m2), ZPoly{Integer(1)}, m2);
  auto [c, d] = zdivmod_monic(zmul(s, b, m2), hs, m2);
  s = zsub(s, d, m2);
  t = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, gs, m2), m2);
  g = std::move(gs);
  h = std::move(hs);
}

// f is given mod M with f = lc(f) * prod(u_i) mod p, u_i monic mod p.
// Returns monic lifts mod M.
std::vector<ZPoly> multilift(const ZPoly& f, const std::vector<PPoly>& u, u64 p, const Integer& M) {
  if (u.size() == 1) {
    Integer lc = f.back(), inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
    ZPoly r = f;
    for (auto& c : r) c *= inv;
    zmod(r, M);
    return {r};
  }
  Fp F{p};
  std::size_t half = u.size() / 2;
  std::vector<PPoly> A(u.begin(), u.begin() + half), B(u.begin() + half, u.end());
  PPoly g0 = reduce(ZPoly{f.back()}, p), h0{1};
  for (const auto& x : A) g0 = F.mul(g0, x);
  for (const auto& x : B) h0 = F.mul(h0, x);
  PPoly s0, t0;
  F.bezout(g0, h0, s0, t0);
  ZPoly g = lift_pp(g0), h = lift_pp(h0), s = lift_pp(s0), t = lift_pp(t0);
  Integer m(static_cast<unsigned long>(p));
  while (m < M) {
    Integer m2 = m * m;
    ZPoly fm = f;
    zmod(fm, m2);
    hensel_step(fm, g, h, s, t, m2);
    m = m2;
  }
  zmod(g, M);
  zmod(h, M);
  std::vector<ZPoly> out = multilift(g, A, p, M);
  std::vector<ZPoly> rest = multilift(h, B, p, M);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive(ZPoly f) {
  Integer g = content(f);
  if (g == 0) return f;
  if (f.back() < 0) g = -g;
  for (auto& c : f) c /= g;
  return f;
}

ZPoly symmetric(ZPoly a, const Integer& M) {
  Integer half = M / 2;
  for (auto& c : a)
    if (c > half) c -= M;
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ZPoly zmul_exact(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<u64> small_primes() {
  std::vector<u64> ps;
  for (u64 n = 11; ps.size() < 60; n += 2) {
    bool prime = true;
    for (u64 d = 3; d * d <= n; d += 2)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) ps.push_back(n);
  }
  return ps;
}

// f primitive, squarefree, positive leading coefficient, degree >= 1.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  static const std::vector<u64> primes = small_primes();
  u64 best_p = 0;
  std::size_t best_count = 0;
  std::vector<std::pair<PPoly, int>> best_ddf;
  int good = 0;
  for (u64 p : primes) {
    Fp F{p};
    PPoly fp = reduce(f, p);
    if (static_cast<int>(fp.size()) - 1 != n) continue;
    fp = F.monic(fp);
    if (F.gcd(fp, F.deriv(fp)).size() != 1) continue;
    auto dd = ddf(F, fp);
    std::size_t count = 0;
    for (const auto& [g, d] : dd) count += (g.size() - 1) / d;
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
      best_ddf = dd;
    }
    if (count == 1 || ++good >= 6) break;
  }
  if (best_p == 0) throw CertificateError("no suitable prime for factorisation");
  if (best_count == 1) return {f};

  Fp F{best_p};
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::vector<PPoly> u;
  for (const auto& [g, d] : best_ddf) edf(F, g, d, rng, u);

  // Coefficient bound for any factor scaled by the leading coefficient.
  Integer norm = 0;
  for (const auto& c : f) norm += abs(c);
  Integer bound = 2 * abs(f.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  Integer M(static_cast<unsigned long>(best_p));
  while (M <= bound) M = M * M;

  ZPoly fm = f;
  zmod(fm, M);
  std::vector<ZPoly> U = multilift(fm, u, best_p, M);

  std::vector<ZPoly> found;
  ZPoly rest = f;
  long trials = 0;
  std::size_t d = 1;
  while (2 * d <= U.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    for (;;) {
      if (++trials > kRecombinationBudget)
        throw PreconditionError("factorisation recombination budget exceeded");
      Integer L = rest.back();
      ZPoly G{L}, H{L};
      std::vector<bool> in(U.size(), false);
      for (auto i : idx) in[i] = true;
      for (std::size_t i = 0; i < U.size(); ++i) (in[i] ? G : H) = zmul(in[i] ? G : H, U[i], M);
      G = symmetric(G, M);
      H = symmetric(H, M);
      ZPoly Lf = rest;
      for (auto& c : Lf) c *= L;
      if (zmul_exact(G, H) == Lf) {
        found.push_back(primitive(G));
        rest = primitive(H);
        std::vector<ZPoly> keep;
        for (std::size_t i = 0; i < U.size(); ++i)
          if (!in[i]) keep.push_back(U[i]);
        U = std::move(keep);
        hit = true;
        break;
      }
      // next combination
      std::size_t k = d;
      while (k > 0 && idx[k - 1] == U.size() - d + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++d;
  }
  found.push_back(rest);
  return found;
}

Poly to_monic_rational(const ZPoly& z) {
  std::vector<Rational> c;
  for (const auto& x : z) c.emplace_back(x);
  return Poly(std::move(c)).monic();
}

ZPoly to_primitive_integer(const Poly& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : f.coeffs()) z.push_back(Integer(c * den));
  return primitive(z);
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
  if (f.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  for (const auto& [g, m] : squarefree_decomposition(f)) {
    Poly h = g;
    // Pull out the root 0 first; keeps the integer polynomial small.
    if (h.coeff(0) == 0) {
      out.emplace_back(Poly::t(), m);
      h = h / Poly::t();
    }
    if (h.degree() < 1) continue;
    for (const auto& z : zassenhaus(to_primitive_integer(h))) out.emplace_back(to_monic_rational(z), m);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace metlie
