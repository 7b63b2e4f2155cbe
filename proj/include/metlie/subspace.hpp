#pragma once

#include <optional>
#include <vector>

#include "metlie/matrix.hpp"

namespace metlie {

// Subspace of Q^n stored as a reduced row echelon basis, so equal subspaces
// compare equal. `generators()` keeps the vectors as the caller supplied them
// (after dropping dependent ones) when that order matters.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<Vector>& generators() const { return gens_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& o) const;
  // Coordinates of v with respect to generators(); nullopt if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  // Indices of the first ambient unit vectors that complete this subspace to
  // the whole space, chosen greedily in index order.
  std::vector<std::size_t> complement_units() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<Vector> gens_;
};

// Matrix of A restricted to an A-invariant subspace, in the coordinates of
// S.generators(). Throws PreconditionError if S is not invariant.
Matrix restrict_map(const Matrix& A, const Subspace& S);

}  // namespace metlie
