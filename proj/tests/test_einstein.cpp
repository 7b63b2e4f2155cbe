#include <doctest.h>

#include <random>

#include "metlie/builders.hpp"
#include "metlie/einstein.hpp"
#include "metlie/error.hpp"
#include "metlie/factor.hpp"
#include "metlie/redext.hpp"
#include "metlie/sampling.hpp"
#include "support.hpp"

using namespace metlie;
using testsupport::mat;
using testsupport::poly;

TEST_CASE("bi-invariant Ricci tensor") {
  CHECK(ricci_biinvariant(build_heis3()).gram().is_zero());
  Matrix r = ricci_biinvariant(build_sl2()).gram();
  CHECK(r(2, 2) == -2);
  CHECK(r(0, 1) == -1);
  CHECK(ricci_biinvariant(build_example42().algebra()).gram().is_zero());
  // definitional identity on random solvable algebras
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    MetricLieAlgebra M = random_iterated_extension(rng, 3, 1, 1);
    CHECK(ricci_biinvariant(M.algebra()).gram() + Rational(1, 4) * killing_form(M.algebra()).gram() ==
          Matrix(M.dim(), M.dim()));
  }
}

TEST_CASE("Einstein check") {
  LieAlgebra sl2 = build_sl2();
  MetricLieAlgebra half(sl2, SymBilinearForm(Rational(1, 2) * killing_form(sl2).gram()));
  auto r = einstein_check(half);
  CHECK(r.is_einstein);
  REQUIRE(r.lambda);
  CHECK(*r.lambda == Rational(-1, 2));

  auto e = einstein_check(build_example42());
  CHECK(e.is_einstein);
  CHECK(*e.lambda == 0);

  // [a,x] = x admits no invariant scalar product
  LieAlgebra aff(2, {"a", "x"});
  aff.set_bracket(0, 1, testsupport::vec({0, 1}));
  CHECK(killing_form(aff).gram()(0, 0) == 1);
  CHECK_THROWS_AS(einstein_check(MetricLieAlgebra(aff, SymBilinearForm(Matrix::identity(2)))), PreconditionError);
  CHECK_THROWS_AS(einstein_check(MetricLieAlgebra(aff, SymBilinearForm(mat({{0, 1}, {1, 0}})))), PreconditionError);

  // oscillator is solvable, invariant, and not Einstein
  auto o = einstein_check(build_oscillator());
  CHECK_FALSE(o.is_einstein);
}

TEST_CASE("eigenvalue condition on exact spectra") {
  // {sqrt2, -sqrt2, i sqrt2, -i sqrt2}
  auto a = eigenvalue_condition(eigenvalue_data({{poly({-2, 0, 1}), 1}, {poly({2, 0, 1}), 1}}));
  CHECK(a.holds);
  // (1 +- i), (-1 +- i)
  auto b = eigenvalue_condition(eigenvalue_data({{poly({4, 0, 0, 0, 1}), 1}}));
  CHECK(b.holds);
  auto c = eigenvalue_condition(eigenvalue_data({{poly({-1, 1}), 1}, {poly({1, 1}), 1}}));
  CHECK_FALSE(c.holds);
  CHECK(c.residual == 2);
  CHECK(c.lower <= 2);
  CHECK(c.upper >= 2);
}

TEST_CASE("eigenvalue condition equals tr(ad(a)^2)") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 25; ++k) {
    MetricLieAlgebra M = k % 2 ? random_iterated_extension(rng, 2 + k % 3, k % 2, 1)
                               : build_ko1(6, 2, random_skew(rng, build_ab(4, 1).form().gram()));
    Vector a(M.dim());
    for (auto& x : a) x = random_rational(rng, 2, 2);
    Matrix ad = M.algebra().ad(a);
    auto res = eigenvalue_condition(eigenvalue_data(ad));
    CHECK(res.residual == (ad * ad).trace());
  }
}

TEST_CASE("skewness") {
  CHECK(skewness_check(example42_delta(), SymBilinearForm(example42_base_form())).ok);
  auto r = skewness_check(Matrix::identity(3), SymBilinearForm(Matrix::identity(3)));
  CHECK_FALSE(r.ok);
  CHECK(r.witness == std::make_pair(std::size_t{0}, std::size_t{0}));
  CHECK(skewness_check(mat({{0, -1}, {1, 0}}), SymBilinearForm(Matrix::identity(2))).ok);
}

TEST_CASE("block-triangular trace recursion") {
  PWZBlockSpec a;
  a.nodes.push_back({false, 1, 0, 0, {}});
  CHECK(pwz_assemble_and_trace(a).trace_sq_direct == 2);
  PWZBlockSpec b;
  b.nodes.push_back({true, 0, 1, 1, {}});
  auto tb = pwz_assemble_and_trace(b);
  CHECK(tb.trace_sq_direct == 0);
  CHECK(tb.trace_sq_recursive == 0);
  PWZBlockSpec leaf;
  leaf.positive_rotations = {1, 2};
  leaf.negative_rotations = {3};
  leaf.extra_negative = 1;
  CHECK(pwz_assemble_and_trace(leaf).trace_sq_direct == -28);

  PWZBlockSpec bad;
  bad.nodes.push_back({true, 0, 1, 0, {}});
  CHECK_THROWS_AS(pwz_assemble_and_trace(bad), PreconditionError);
  PWZBlockSpec bad2;
  bad2.nodes.push_back({false, 1, 0, 0, {1, 2, 3}});
  CHECK_THROWS_AS(pwz_assemble_and_trace(bad2), PreconditionError);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> depth(0, 4), coin(0, 1), cnt(0, 2);
  for (int k = 0; k < 200; ++k) {
    PWZBlockSpec s;
    for (int i = 0, d = depth(rng); i < d; ++i) {
      PWZNode nd;
      nd.complex_block = coin(rng);
      if (nd.complex_block) {
        nd.alpha = random_rational(rng, 2, 3);
        do nd.beta = random_rational(rng, 2, 3);
        while (nd.beta == 0);
      } else {
        nd.lambda = random_rational(rng, 3, 2);
      }
      s.nodes.push_back(nd);
    }
    for (int i = 0, c = cnt(rng); i < c; ++i) s.positive_rotations.push_back(random_rational(rng, 3, 2));
    for (int i = 0, c = cnt(rng); i < c; ++i) s.negative_rotations.push_back(random_rational(rng, 3, 2));
    s.extra_positive = coin(rng);
    // fill in fillers from the inside out
    std::size_t m = pwz_dim(PWZBlockSpec{{}, s.positive_rotations, s.negative_rotations, s.extra_positive, 0});
    for (std::size_t i = s.nodes.size(); i-- > 0;) {
      const std::size_t kk = s.nodes[i].complex_block ? 2 : 1;
      if (coin(rng))
        for (std::size_t f = 0; f < kk * m + (kk == 2 ? 1 : 0); ++f) s.nodes[i].fillers.push_back(random_rational(rng, 2, 2));
      m += 2 * kk;
    }
    if (pwz_dim(s) == 0) continue;
    auto t = pwz_assemble_and_trace(s);
    CHECK(t.trace_sq_direct == t.trace_sq_recursive);
    CHECK(t.matrix.rows() == pwz_dim(s));
    CHECK(testsupport::leverrier(t.matrix) == pwz_predicted_charpoly(s));
  }
}

TEST_CASE("compact Cartan elements have negative tr(X^2)") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 50; ++k) {
    PWZBlockSpec s;
    for (int i = 0; i < 1 + k % 3; ++i) s.positive_rotations.push_back(random_rational(rng, 3, 2));
    for (int i = 0; i < k % 2; ++i) s.negative_rotations.push_back(random_rational(rng, 3, 2));
    auto t = pwz_assemble_and_trace(s);
    if (t.matrix.is_zero())
      CHECK(t.trace_sq_direct == 0);
    else
      CHECK(t.trace_sq_direct < 0);
  }
}

TEST_CASE("dimension certificate for the sharp example") {
  MetricLieAlgebra g = build_example42();
  auto c = theorem12_certificate(g);
  CHECK(c.W1.dim() == 4);
  CHECK(c.ideal_i == Subspace::span(6, {unit_vector(6, 5)}));
  CHECK(c.line_L == Subspace::span(6, {unit_vector(6, 1)}));
  CHECK(c.a == unit_vector(6, 0));
  CHECK(c.sharp());
  CHECK(c.dim_n_lower == 5);
  CHECK(c.index_lower == 2);
}

TEST_CASE("dimension certificate for the spiral algebra") {
  MetricLieAlgebra g = build_ko1(8, 2, spiral_delta(3, 4), spiral_base_form());
  CHECK(killing_form(g.algebra()).gram().is_zero());
  auto c = theorem12_certificate(g);
  CHECK(c.W1.dim() == 6);
  CHECK(c.dim_g == 8);
  CHECK_FALSE(c.sharp());
  CHECK_THROWS_WITH_AS(spiral_delta(1, 1), doctest::Contains("rational square"), PreconditionError);
}

TEST_CASE("nilpotent input has no dimension certificate") {
  MetricLieAlgebra h(build_heis3(), SymBilinearForm(Matrix::identity(3)));
  CHECK_THROWS_WITH_AS(theorem12_certificate(h), "nilpotent input", PreconditionError);
}

TEST_CASE("ko1 family: Einstein iff the delta spectrum satisfies the condition") {
  std::mt19937_64 rng(21);
  const std::pair<std::size_t, std::size_t> shapes[] = {{3, 1}, {4, 1}, {5, 1}, {2, 2}, {3, 2}, {4, 2}};
  int certified = 0;
  for (int k = 0; k < 60; ++k) {
    auto [p, q] = shapes[k % 6];
    const std::size_t m = p + q, n = m + 2, s = q + 1;
    Matrix F = build_ab(m, q).form().gram();
    Matrix d = random_skew(rng, F);
    if (k % 2 == 0)
      if (auto t = targeted_einstein_delta(rng, p, q)) d = *t;
    MetricLieAlgebra g = build_ko1(n, s, d);
    const bool einstein = killing_form(g.algebra()).gram().is_zero();
    CHECK(einstein == eigenvalue_condition(eigenvalue_data(d)).holds);
    if (einstein && !is_nilpotent(g.algebra())) {
      auto c = theorem12_certificate(g);
      CHECK(c.dim_g >= 6);
      ++certified;
    }
  }
  CHECK(certified > 5);
}

TEST_CASE("sharpness search") {
  SearchConfig cfg;
  cfg.dim_min = cfg.dim_max = 6;
  cfg.index_min = cfg.index_max = 2;
  cfg.budget = 300;
  cfg.seed = 9;
  auto r1 = sharpness_search(cfg);
  CHECK(r1.samples == 300);
  CHECK(r1.nonnilpotent_einstein >= 1);
  for (const auto& f : r1.findings)
    if (!f.nilpotent) {
      CHECK(f.dim_nilradical == 5);
      CHECK(f.index == 2);
    }
  cfg.threads = 3;
  auto r2 = sharpness_search(cfg);
  REQUIRE(r2.findings.size() == r1.findings.size());
  for (std::size_t i = 0; i < r1.findings.size(); ++i) CHECK(r1.findings[i].spec == r2.findings[i].spec);

  SearchConfig small;
  small.dim_min = 3;
  small.dim_max = 5;
  small.index_min = 0;
  small.index_max = 2;
  small.budget = 500;
  CHECK(sharpness_search(small).nonnilpotent_einstein == 0);
}
