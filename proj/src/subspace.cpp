#include "metlie/subspace.hpp"

#include "metlie/error.hpp"

namespace metlie {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw PreconditionError("vector length does not match ambient dimension");
    if (vec_is_zero(v) || s.contains(v)) continue;
    s.gens_.push_back(v);
    Rref e = rref(Matrix::from_rows(s.gens_, ambient));
    s.basis_.clear();
    for (std::size_t k = 0; k < e.pivots.size(); ++k) s.basis_.push_back(e.r.row(k));
  }
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < ambient; ++i) units.push_back(unit_vector(ambient, i));
  return span(ambient, units);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw PreconditionError("vector length does not match ambient dimension");
  // Reduce v against the echelon basis.
  Vector r = v;
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    if (r[p] != 0) vec_axpy(r, -r[p], b);
  }
  return vec_is_zero(r);
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& v : o.basis_)
    if (!contains(v)) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (gens_.empty()) return vec_is_zero(v) ? std::optional<Vector>(Vector{}) : std::nullopt;
  return solve(Matrix::from_columns(gens_), v);
}

Subspace Subspace::sum(const Subspace& o) const {
  std::vector<Vector> all = gens_;
  all.insert(all.end(), o.gens_.begin(), o.gens_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (gens_.empty() || o.gens_.empty()) return Subspace(ambient_);
  // Solve sum a_i u_i = sum b_j w_j.
  std::vector<Vector> cols = gens_;
  for (const auto& w : o.gens_) cols.push_back(vec_scale(-1, w));
  std::vector<Vector> out;
  for (const auto& k : kernel(Matrix::from_columns(cols))) {
    Vector x = zero_vector(ambient_);
    for (std::size_t i = 0; i < gens_.size(); ++i) vec_axpy(x, k[i], gens_[i]);
    out.push_back(std::move(x));
  }
  return span(ambient_, out);
}

std::vector<std::size_t> Subspace::complement_units() const {
  std::vector<std::size_t> idx;
  Subspace cur = *this;
  for (std::size_t i = 0; i < ambient_ && cur.dim() < ambient_; ++i) {
    Vector e = unit_vector(ambient_, i);
    if (cur.contains(e)) continue;
    idx.push_back(i);
    cur = cur.sum(span(ambient_, {e}));
  }
  return idx;
}

Matrix restrict_map(const Matrix& A, const Subspace& S) {
  const auto& g = S.generators();
  Matrix R(g.size(), g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    auto c = S.coordinates(A.apply(g[j]));
    if (!c) throw PreconditionError("subspace is not invariant under the map");
    for (std::size_t i = 0; i < g.size(); ++i) R(i, j) = (*c)[i];
  }
  return R;
}

}  // namespace metlie
