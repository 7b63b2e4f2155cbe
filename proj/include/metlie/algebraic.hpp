#pragma once

#include <string>
#include <utility>
#include <vector>

#include "metlie/poly.hpp"

namespace metlie {

struct GaussRational {
  Rational re = 0, im = 0;
  friend bool operator==(const GaussRational&, const GaussRational&) = default;
};
GaussRational operator+(const GaussRational& a, const GaussRational& b);
GaussRational operator-(const GaussRational& a, const GaussRational& b);
GaussRational operator*(const GaussRational& a, const GaussRational& b);
GaussRational operator/(const GaussRational& a, const GaussRational& b);
GaussRational conj(const GaussRational& a);
// Rational bounds on the Euclidean modulus.
Rational modulus_upper(const GaussRational& z);
Rational modulus_lower(const GaussRational& z);

// Closed disk {z : |z - center| <= radius}.
struct Disk {
  GaussRational center;
  Rational radius = 0;
};
Disk operator+(const Disk& a, const Disk& b);
Disk operator-(const Disk& a, const Disk& b);
Disk operator*(const Disk& a, const Disk& b);
Disk scale(const Rational& c, const Disk& a);
// Rounds the center to a multiple of 2^-bits and widens the radius to match.
Disk round_disk(const Disk& d, unsigned bits);
Disk eval_disk(const Poly& p, const Disk& z, unsigned bits);
bool disjoint(const Disk& a, const Disk& b);
bool contains(const Disk& outer, const Disk& inner);
bool contains_zero(const Disk& d);

// Working precision in bits: METRIC_LIE_PRECISION or 256.
unsigned working_precision();

struct RootEnclosure {
  Disk disk;
  bool real = false;
  bool imag = false;  // purely imaginary and nonzero
};

// Certified isolating disks for all roots of a squarefree polynomial. Throws
// CertificateError ("precision insufficient") when refinement gives up.
std::vector<RootEnclosure> isolate_roots(const Poly& f, unsigned bits = 0);

class AlgebraicNumber {
 public:
  AlgebraicNumber(Poly minpoly, RootEnclosure enc) : minpoly_(std::move(minpoly)), enc_(std::move(enc)) {}

  const Poly& minpoly() const { return minpoly_; }
  const Disk& enclosure() const { return enc_.disk; }
  bool is_real() const { return enc_.real; }
  bool is_imaginary() const { return enc_.imag; }
  bool is_rational() const { return minpoly_.degree() == 1; }
  bool is_zero() const { return minpoly_.degree() == 1 && minpoly_.coeff(0) == 0; }
  // Same root with an isolating disk of radius below 2^-bits.
  AlgebraicNumber refined(unsigned bits) const;
  double approx_re() const;
  double approx_im() const;
  std::string to_string() const;

 private:
  Poly minpoly_;
  RootEnclosure enc_;
};

std::vector<AlgebraicNumber> roots_of(const Poly& irreducible, unsigned bits = 0);

// Spectrum of a rational matrix grouped by irreducible factor.
struct EigenvalueData {
  std::size_t dim = 0;
  std::vector<std::pair<Poly, int>> factors;
  std::vector<AlgebraicNumber> roots;  // distinct roots, factor by factor
  std::vector<int> multiplicity;       // parallel to roots
  std::vector<std::size_t> real_eigs;      // indices into roots
  std::vector<std::size_t> complex_pairs;  // indices of the roots with Im > 0
};

EigenvalueData eigenvalue_data(const std::vector<std::pair<Poly, int>>& factors);
EigenvalueData eigenvalue_data(const Matrix& A);
// Multiset of eigenvalues, each repeated by multiplicity.
std::vector<AlgebraicNumber> exact_eigenvalues(const Matrix& A);

}  // namespace metlie
