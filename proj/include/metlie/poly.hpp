#pragma once

#include <string>
#include <utility>
#include <vector>

#include "metlie/matrix.hpp"

namespace metlie {

// Univariate polynomial over Q, coefficients stored low degree first and kept
// trimmed (no trailing zeros).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t k);
  static Poly t() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  Poly monic() const;
  Poly derivative() const;
  Rational eval(const Rational& x) const;
  Poly compose(const Poly& inner) const;
  Matrix eval(const Matrix& a) const;
  // p(-t)
  Poly reflect() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Monic gcd; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);
// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

Poly charpoly(const Matrix& a);
// Monic squarefree factors with multiplicities: f = lc * prod f_i^{m_i}.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);
Poly squarefree_part(const Poly& f);
std::string to_string(const Poly& p, const std::string& var = "t");

}  // namespace metlie
