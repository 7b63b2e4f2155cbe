#include "metlie/poly.hpp"

#include <sstream>

#include "metlie/error.hpp"

namespace metlie {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Rational inv = 1 / c_.back();
  Poly r = *this;
  for (auto& x : r.c_) x *= inv;
  return r;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::compose(const Poly& inner) const {
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + constant(*it);
  return r;
}

Matrix Poly::eval(const Matrix& a) const {
  Matrix r(a.rows(), a.cols());
  Matrix id = Matrix::identity(a.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + *it * id;
  return r;
}

Poly Poly::reflect() const {
  Poly r = *this;
  for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return Poly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly operator*(const Rational& c, const Poly& a) {
  if (c == 0) return Poly();
  Poly r = a;
  for (auto& x : r.c_) x *= c;
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t k = a.c_.size(); k-- > 0;)
    if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
  return false;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  Rational inv = 1 / b.lead();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = r[k] * inv;
    q[k - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b.coeffs()[j];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a0, const Poly& b0) {
  Poly a = a0, b = b0;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0 = Poly::constant(1), s1, t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

Poly charpoly(const Matrix& a) {
  if (!a.is_square()) throw PreconditionError("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  Matrix h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h(r, m - 1) == 0) continue;
      Rational u = h(r, m - 1) / h(m, m - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (h(m, j) != 0) h(r, j) -= u * h(m, j);
      for (std::size_t j = 0; j < n; ++j)
        if (h(j, r) != 0) h(j, m) += u * h(j, r);
    }
  }
  auto H = [&](std::size_t i, std::size_t j) -> const Rational& { return h(i - 1, j - 1); };
  std::vector<Poly> p(n + 1);
  p[0] = Poly::constant(1);
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = (Poly::t() - Poly::constant(H(m, m))) * p[m - 1];
    Rational t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t *= H(m - i + 1, m - i);
      if (t == 0) break;
      if (H(m - i, m) != 0) p[m] -= (t * H(m - i, m)) * p[m - i - 1];
    }
  }
  return p[n];
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f0) {
  std::vector<std::pair<Poly, int>> out;
  if (f0.degree() <= 0) return out;
  Poly f = f0.monic();
  Poly df = f.derivative();
  Poly a = gcd(f, df);
  Poly b = f / a;
  Poly c = df / a;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Poly squarefree_part(const Poly& f) {
  if (f.degree() <= 0) return f.is_zero() ? f : Poly::constant(1);
  Poly m = f.monic();
  return m / gcd(m, m.derivative());
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeffs()[k];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (a != 1 || k == 0) os << a.get_str() << (k ? "*" : "");
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

}  // namespace metlie
