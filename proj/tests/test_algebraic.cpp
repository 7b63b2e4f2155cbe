#include <doctest.h>

#include <random>

#include "metlie/algebraic.hpp"
#include "metlie/error.hpp"
#include "support.hpp"

using namespace metlie;
using testsupport::poly;

namespace {

// Sum of disks: encloses the true sum.
Disk sum_disks(const std::vector<AlgebraicNumber>& rs) {
  Disk acc;
  for (const auto& r : rs) acc = acc + r.enclosure();
  return acc;
}

}  // namespace

TEST_CASE("isolation classifies real and imaginary roots") {
  auto i2 = roots_of(poly({1, 0, 1}));
  REQUIRE(i2.size() == 2);
  for (const auto& r : i2) {
    CHECK_FALSE(r.is_real());
    CHECK(r.is_imaginary());
  }
  auto s2 = roots_of(poly({-2, 0, 1}));
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].is_real());
  CHECK(s2[0].approx_re() == doctest::Approx(-1.41421356237));
  // t^4 + 1: four roots, none real or imaginary
  auto q = roots_of(poly({1, 0, 0, 0, 1}));
  REQUIRE(q.size() == 4);
  for (const auto& r : q) {
    CHECK_FALSE(r.is_real());
    CHECK_FALSE(r.is_imaginary());
  }
  // t^3 - 2: one real, one conjugate pair
  auto c = roots_of(poly({-2, 0, 0, 1}));
  int nreal = 0;
  for (const auto& r : c) nreal += r.is_real();
  CHECK(nreal == 1);
}

TEST_CASE("isolating disks contain roots and are disjoint") {
  Poly f = poly({-1, -1, 0, 0, 0, 1});  // t^5 - t - 1
  auto rs = roots_of(f);
  REQUIRE(rs.size() == 5);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    CHECK(contains_zero(eval_disk(f, rs[i].enclosure(), 300)));
    for (std::size_t j = i + 1; j < rs.size(); ++j) CHECK(disjoint(rs[i].enclosure(), rs[j].enclosure()));
  }
  // coefficient of t^4 is 0 = -(sum of roots)
  Disk s = sum_disks(rs);
  CHECK(contains_zero(s));
  auto fine = rs[0].refined(600);
  CHECK(fine.enclosure().radius <= Rational(1) / Rational(Integer(1) << 600));
  CHECK(contains(rs[0].enclosure(), fine.enclosure()));
}

TEST_CASE("eigenvalue data of random matrices matches trace") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 5;
    Matrix A = testsupport::random_matrix(rng, n, n, 3);
    auto ev = exact_eigenvalues(A);
    REQUIRE(ev.size() == n);
    Disk s = sum_disks(ev);
    s.center.re -= A.trace();
    CHECK(contains_zero(s));
    auto d = eigenvalue_data(A);
    std::size_t count = 0;
    for (auto i : d.real_eigs) count += d.multiplicity[i];
    for (auto i : d.complex_pairs) count += 2 * d.multiplicity[i];
    CHECK(count == n);
  }
}

TEST_CASE("non-squarefree input is rejected") {
  CHECK_THROWS_AS(isolate_roots(poly({1, 2, 1})), PreconditionError);
}
