#include <random>

#include "doctest.h"
#include "metlie/builders.hpp"
#include "metlie/error.hpp"
#include "metlie/factor.hpp"
#include "metlie/lie_algebra.hpp"
#include "support.hpp"

using namespace metlie;
using testsupport::mat;
using testsupport::poly;
using testsupport::vec;

constexpr int kIterations = 200;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational(" 6/8 ") == Rational(3, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("x"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("1/-2"), PreconditionError);
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
}

TEST_CASE("charpoly agrees with Faddeev-LeVerrier") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < kIterations; ++it) {
    std::size_t n = 1 + it % 7;
    Matrix a = testsupport::random_matrix(rng, n);
    if (it % 3 == 0) a(n - 1, 0) = 0;
    CHECK(charpoly(a) == testsupport::leverrier(a));
  }
}

TEST_CASE("determinant and inverse") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 50; ++it) {
    std::size_t n = 1 + it % 5;
    Matrix a = testsupport::random_matrix(rng, n);
    CHECK(determinant(a) == testsupport::leibniz_det(a));
    auto inv = inverse(a);
    CHECK(inv.has_value() == (determinant(a) != 0));
    if (inv) CHECK(a * *inv == Matrix::identity(n));
  }
}

TEST_CASE("kernel and subspace arithmetic") {
  Matrix a = mat({{1, 2, 3}, {2, 4, 6}});
  auto k = kernel(a);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(vec_is_zero(a.apply(v)));
  Subspace s = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  Subspace t = Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})});
  CHECK(s.intersect(t) == Subspace::span(3, {vec({0, 2, 0})}));
  CHECK(s.sum(t) == Subspace::whole(3));
  CHECK(Subspace::span(3, {vec({0, 1, 1})}).complement_units() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("polynomial gcd and squarefree decomposition") {
  Poly f = poly({-1, 0, 1}) * poly({-1, 0, 1}) * poly({2, 0, 1});  // (t^2-1)^2 (t^2+2)
  auto sq = squarefree_decomposition(f);
  REQUIRE(sq.size() == 2);
  CHECK(sq[0] == std::make_pair(poly({2, 0, 1}), 1));
  CHECK(sq[1] == std::make_pair(poly({-1, 0, 1}), 2));
  CHECK(squarefree_part(f) == poly({-1, 0, 1}) * poly({2, 0, 1}));
}

TEST_CASE("factorisation over Q") {
  SUBCASE("known factorisations") {
    auto fs = factor(poly({4, 0, 0, 0, 1}));  // t^4 + 4
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].first == poly({2, -2, 1}));
    CHECK(fs[1].first == poly({2, 2, 1}));
    CHECK(is_irreducible(poly({1, 0, 0, 0, 1})));
    CHECK(is_irreducible(poly({-2, 0, 1})));
    // Swinnerton-Dyer polynomial for sqrt2, sqrt3, sqrt5: irreducible but
    // splits into small factors modulo every prime.
    CHECK(is_irreducible(poly({576, 0, -960, 0, 352, 0, -40, 0, 1})));
    auto g = factor(poly({-3, 1}) * poly({-3, 1}) * poly({0, 1}) * poly({1, 0, 1}) * poly({-2, 0, 1}));
    REQUIRE(g.size() == 4);
    CHECK(g[0] == std::make_pair(poly({-3, 1}), 2));
    CHECK(g[1] == std::make_pair(poly({0, 1}), 1));
  }
  SUBCASE("random products reassemble") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int it = 0; it < 60; ++it) {
      Poly f = Poly::constant(c(rng) == 0 ? Rational(1) : Rational(2, 3));
      int parts = 1 + it % 4;
      for (int k = 0; k < parts; ++k) {
        std::vector<Rational> co(2 + it % 3);
        for (auto& x : co) x = c(rng);
        co.back() = 1;
        f = f * Poly(co);
      }
      auto fs = factor(f);
      Poly back = Poly::constant(f.lead());
      for (const auto& [p, m] : fs)
        for (int k = 0; k < m; ++k) back = back * p;
      CHECK(back == f);
      for (const auto& [p, m] : fs) CHECK(p.lead() == 1);
    }
  }
}

TEST_CASE("validate_structure") {
  CHECK(validate_structure(build_abelian(5)).ok);
  CHECK(validate_structure(build_heis3()).ok);
  CHECK(validate_structure(build_sl2()).ok);
  LieAlgebra bad = build_heis3();
  // [x,z] = y alone still satisfies Jacobi; [x,z] = x does not.
  LieAlgebra ok = build_heis3();
  ok.set_bracket(0, 2, vec({0, 1, 0}));
  CHECK(validate_structure(ok).ok);
  bad.set_bracket(0, 2, vec({1, 0, 0}));
  auto rep = validate_structure(bad);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.jacobi_violations.size() == 1);
  CHECK(rep.jacobi_violations[0] == std::array<std::size_t, 3>{0, 1, 2});
}

TEST_CASE("ad, center, series") {
  LieAlgebra h = build_heis3();
  Matrix adx = h.ad(vec({1, 0, 0}));
  CHECK(adx == mat({{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}));
  CHECK(h.ad(vec({0, 0, 0})).is_zero());
  CHECK(center(h) == Subspace::span(3, {vec({0, 0, 1})}));
  CHECK(center(build_abelian(4)) == Subspace::whole(4));
  auto sr = series(h);
  CHECK(sr.is_nilpotent);
  CHECK(sr.is_solvable);
  CHECK(sr.lower_central.size() == 3);
  auto sl = series(build_sl2());
  CHECK_FALSE(sl.is_solvable);
  CHECK(sl.derived.size() == 1);
}

TEST_CASE("ad is a Lie homomorphism") {
  std::mt19937_64 rng(14);
  LieAlgebra L = direct_sum(build_sl2(), build_heis3());
  for (int it = 0; it < 50; ++it) {
    Vector x(6), y(6);
    for (auto& v : x) v = testsupport::small_rational(rng);
    for (auto& v : y) v = testsupport::small_rational(rng);
    CHECK(L.ad(L.bracket(x, y)) == bracket(L.ad(x), L.ad(y)));
  }
}

TEST_CASE("Killing form") {
  auto k = killing_form(build_sl2()).gram();
  // basis e, f, h
  CHECK(k == mat({{0, 4, 0}, {4, 0, 0}, {0, 0, 8}}));
  CHECK(killing_form(build_heis3()).gram().is_zero());
  CHECK(killing_form(build_su2()).gram() == mat({{-2, 0, 0}, {0, -2, 0}, {0, 0, -2}}));
  std::mt19937_64 rng(15);
  LieAlgebra L = direct_sum(build_sl2(), build_su2());
  auto kf = killing_form(L);
  for (int it = 0; it < 30; ++it) {
    Vector x(6), y1(6), y2(6);
    for (auto* v : {&x, &y1, &y2})
      for (auto& c : *v) c = testsupport::small_rational(rng);
    CHECK(kf(L.bracket(x, y1), y2) + kf(y1, L.bracket(x, y2)) == 0);
  }
}

TEST_CASE("Jordan-Chevalley decomposition") {
  CHECK(jordan_chevalley(mat({{1, 1}, {0, 1}})).semisimple == Matrix::identity(2));
  CHECK(jordan_chevalley(mat({{1, 1}, {0, 1}})).nilpotent == mat({{0, 1}, {0, 0}}));
  Matrix N = mat({{0, 1, 2}, {0, 0, 3}, {0, 0, 0}});
  CHECK(jordan_chevalley(N).semisimple.is_zero());
  std::mt19937_64 rng(16);
  for (int it = 0; it < kIterations; ++it) {
    std::size_t n = 1 + it % 6;
    Matrix a = it % 2 ? testsupport::random_jordan_matrix(rng, n) : testsupport::random_matrix(rng, n);
    auto jp = jordan_chevalley(a);
    CHECK(jp.semisimple + jp.nilpotent == a);
    CHECK(jp.semisimple * jp.nilpotent == jp.nilpotent * jp.semisimple);
    CHECK(is_nilpotent(jp.nilpotent));
    CHECK(Poly(jp.s_poly).eval(a) == jp.semisimple);
    CHECK(squarefree_part(charpoly(a)).eval(jp.semisimple).is_zero());
  }
}

TEST_CASE("nilradical") {
  CHECK(nilradical(build_heis3()) == Subspace::whole(3));
  LieAlgebra aff(2, {"a", "x"});
  aff.set_bracket(0, 1, vec({0, 1}));
  CHECK(nilradical(aff) == Subspace::span(2, {vec({0, 1})}));
  CHECK_THROWS_AS(nilradical(build_sl2()), PreconditionError);
  CHECK_THROWS_AS(nilradical(aff, Subspace::whole(2)), PreconditionError);
  CHECK(nilradical(aff, Subspace::span(2, {vec({0, 3})})).dim() == 1);
  CHECK(nilradical(LieAlgebra(0)).dim() == 0);
  CHECK(nilradical(LieAlgebra(1)).dim() == 1);
}

TEST_CASE("quotient by ideal") {
  auto q = quotient_by_ideal(build_heis3(), Subspace::span(3, {vec({0, 0, 1})}));
  CHECK(q.algebra.dim() == 2);
  CHECK(q.algebra.is_abelian());
  auto all = quotient_by_ideal(build_sl2(), Subspace::whole(3));
  CHECK(all.algebra.dim() == 0);
  CHECK_THROWS_AS(quotient_by_ideal(build_heis3(), Subspace::span(3, {vec({1, 0, 0})})), PreconditionError);
}
