#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "metlie/rational.hpp"

namespace metlie {

// Dense row-major rational matrix. Also used as LinearMap: column j is the
// image of the j-th source basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  std::vector<Vector> columns() const;
  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  Vector apply(const Vector& x) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

struct Rref {
  Matrix r;
  std::vector<std::size_t> pivots;
};

Rref rref(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}; one vector per free column (free variable = 1).
std::vector<Vector> kernel(const Matrix& m);
// Some solution of m x = b with free variables set to zero.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(const Matrix& m);
Matrix power(const Matrix& m, unsigned k);
bool is_nilpotent(const Matrix& m);
// Commutator a*b - b*a.
Matrix bracket(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
std::string to_string(const Matrix& m);

}  // namespace metlie
