#include "metlie/builders.hpp"

namespace metlie {

namespace {
Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

LieAlgebra build_abelian(std::size_t n) { return LieAlgebra(n); }

LieAlgebra build_heis3() {
  LieAlgebra L(3, {"x", "y", "z"});
  L.set_bracket(0, 1, vec({0, 0, 1}));
  return L;
}

LieAlgebra build_sl2() {
  LieAlgebra L(3, {"e", "f", "h"});
  L.set_bracket(2, 0, vec({2, 0, 0}));
  L.set_bracket(2, 1, vec({0, -2, 0}));
  L.set_bracket(0, 1, vec({0, 0, 1}));
  return L;
}

LieAlgebra build_su2() {
  LieAlgebra L(3, {"e1", "e2", "e3"});
  L.set_bracket(0, 1, vec({0, 0, 1}));
  L.set_bracket(1, 2, vec({1, 0, 0}));
  L.set_bracket(2, 0, vec({0, 1, 0}));
  return L;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::string> names = a.names();
  for (const auto& s : b.names()) names.push_back(a.index_of(s) ? s + "'" : s);
  LieAlgebra L(n, names);
  for (const auto& [i, j, v] : a.nonzero_brackets()) {
    Vector w = zero_vector(n);
    for (std::size_t k = 0; k < a.dim(); ++k) w[k] = v[k];
    L.set_bracket(i, j, w);
  }
  for (const auto& [i, j, v] : b.nonzero_brackets()) {
    Vector w = zero_vector(n);
    for (std::size_t k = 0; k < b.dim(); ++k) w[a.dim() + k] = v[k];
    L.set_bracket(a.dim() + i, a.dim() + j, w);
  }
  return L;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

}  // namespace metlie
