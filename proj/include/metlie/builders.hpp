#pragma once

#include "metlie/lie_algebra.hpp"

namespace metlie {

LieAlgebra build_abelian(std::size_t n);
// Basis x, y, z with [x,y] = z.
LieAlgebra build_heis3();
// Basis e, f, h with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra build_sl2();
// Basis e1, e2, e3 with [e1,e2] = e3 and cyclic.
LieAlgebra build_su2();
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
// Block diagonal matrix.
Matrix block_diag(const Matrix& a, const Matrix& b);

}  // namespace metlie
