#include <random>

#include "doctest.h"
#include "metlie/builders.hpp"
#include "metlie/error.hpp"
#include "metlie/redext.hpp"
#include "metlie/sampling.hpp"
#include "support.hpp"

using namespace metlie;
using testsupport::mat;
using testsupport::vec;

TEST_CASE("sharp 6-dimensional example builder") {
  MetricLieAlgebra g = build_example42();
  const LieAlgebra& L = g.algebra();
  CHECK(L.names() == std::vector<std::string>{"a", "b", "x1", "x2", "y", "z"});
  // [a,b]=b, [a,x1]=x2, [a,x2]=-x1, [a,y]=-y, [b,y]=z, [x1,x2]=z
  CHECK(L.basis_bracket(0, 1) == unit_vector(6, 1));
  CHECK(L.basis_bracket(0, 2) == unit_vector(6, 3));
  CHECK(L.basis_bracket(0, 3) == vec_scale(-1, unit_vector(6, 2)));
  CHECK(L.basis_bracket(0, 4) == vec_scale(-1, unit_vector(6, 4)));
  CHECK(L.basis_bracket(1, 4) == unit_vector(6, 5));
  CHECK(L.basis_bracket(2, 3) == unit_vector(6, 5));
  CHECK(L.nonzero_brackets().size() == 6);
  CHECK(g.invariant());
  CHECK(g.nondegenerate());
  CHECK(killing_form(L).gram().is_zero());
  CHECK(signature(g.form()) == Signature{4, 2, 0});
  CHECK(center(L) == Subspace::span(6, {unit_vector(6, 5)}));
  CHECK(nilradical(L).dim() == 5);
  CHECK(nilradical(L) == Subspace::span(6, {unit_vector(6, 1), unit_vector(6, 2), unit_vector(6, 3),
                                            unit_vector(6, 4), unit_vector(6, 5)}));
  auto sr = series(L);
  CHECK(sr.is_solvable);
  CHECK_FALSE(sr.is_nilpotent);
  // ad(a) is delta on span{b,x1,x2,y} and zero on a, z
  Matrix ada = L.ad(unit_vector(6, 0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(ada(1 + i, 1 + j) == example42_delta()(i, j));
  CHECK(ada.col(0) == zero_vector(6));
  CHECK(ada.col(5) == zero_vector(6));
  // j0^perp / j0 is abelian of dimension 4
  Subspace j0 = j0_ideal(g);
  Subspace perp = orthogonal_complement(g.form(), j0);
  LieAlgebra sub = restrict_to_subalgebra(L, perp);
  Subspace j0_in_sub = Subspace::span(5, {*perp.coordinates(unit_vector(6, 5))});
  auto q = quotient_by_ideal(sub, j0_in_sub);
  CHECK(q.algebra.dim() == 4);
  CHECK(q.algebra.is_abelian());
}

TEST_CASE("reduce the sharp example by span{z}") {
  MetricLieAlgebra g = build_example42();
  auto st = reduce_by_ideal(g, Subspace::span(6, {unit_vector(6, 5)}));
  CHECK(st.quotient.dim() == 4);
  CHECK(st.quotient.algebra().is_abelian());
  CHECK(signature(st.quotient.form()) == Signature{3, 1, 0});
  CHECK(st.quotient.algebra().names() == std::vector<std::string>{"b", "x1", "x2", "y"});
  REQUIRE(st.delta.size() == 1);
  CHECK(st.delta[0] == mat({{1, 0, 0, 0}, {0, 0, -1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}}));
  CHECK(st.xi[0].is_zero());
  CHECK(st.omega[1][2] == vec({1}));  // omega(x1, x2) = z
  CHECK(st.omega[0][3] == vec({1}));  // omega(b, y) = z
}

TEST_CASE("reduction of the oscillator and abelian algebras") {
  auto st = reduce_by_ideal(build_oscillator(), Subspace::span(4, {unit_vector(4, 3)}));
  CHECK(st.quotient.dim() == 2);
  CHECK(signature(st.quotient.form()) == Signature{2, 0, 0});
  MetricLieAlgebra ab = build_ab(5, 2);
  auto s2 = reduce_by_ideal(ab, Subspace::span(5, {vec({1, 0, 0, 1, 0})}));
  CHECK(s2.quotient.algebra().is_abelian());
  CHECK(signature(s2.quotient.form()) == Signature{2, 1, 0});
  CHECK_THROWS_AS(reduce_by_ideal(ab, Subspace::span(5, {unit_vector(5, 0)})), PreconditionError);
  CHECK_THROWS_AS(reduce_by_ideal(build_example42(), Subspace::span(6, {unit_vector(6, 4)})), PreconditionError);
}

TEST_CASE("complete reduction") {
  auto c = complete_reduction(build_example42());
  CHECK(c.steps.size() == 2);
  CHECK(c.final.dim() == 2);
  CHECK(signature(c.final.form()) == Signature{2, 0, 0});
  auto a = complete_reduction(build_ab(5, 2));
  CHECK(a.steps.size() == 2);
  CHECK(a.final.dim() == 1);
  auto o = complete_reduction(build_oscillator());
  CHECK(o.steps.size() == 1);
  CHECK(o.final.dim() == 2);
  CHECK(complete_reduction(build_ab(3, 0)).steps.empty());
}

TEST_CASE("double extension builders") {
  SUBCASE("trivial delta") {
    DoubleExtensionSpec spec{build_ab(2, 0), LieAlgebra(1, {"a"}), {Matrix(2, 2)}};
    MetricLieAlgebra g = double_extend(spec);
    CHECK(g.dim() == 4);
    CHECK(g.algebra().is_abelian());
    CHECK(signature(g.form()) == Signature{3, 1, 0});
  }
  SUBCASE("oscillator is neither nilpotent nor Einstein") {
    MetricLieAlgebra g = build_oscillator();
    CHECK_FALSE(is_nilpotent(g.algebra()));
    CHECK_FALSE(killing_form(g.algebra()).gram().is_zero());
  }
  SUBCASE("spec validation") {
    DoubleExtensionSpec bad{build_ab(2, 0), LieAlgebra(1, {"a"}), {Matrix::identity(2)}};
    CHECK_THROWS_AS(double_extend(bad), PreconditionError);
    MetricLieAlgebra h = build_example42();
    DoubleExtensionSpec notder{h, LieAlgebra(1, {"c"}), {Matrix(6, 6)}};
    notder.delta[0](5, 0) = 1;  // a -> z, z -> -a style skew map that is no derivation
    notder.delta[0](0, 5) = -1;
    CHECK_THROWS_WITH_AS(double_extend(notder), doctest::Contains("not a derivation"), PreconditionError);
    DoubleExtensionSpec notrep{build_ab(2, 0), LieAlgebra(2, {"p", "q"}), {Matrix(2, 2), Matrix(2, 2)}};
    notrep.a_algebra.set_bracket(0, 1, vec({0, 1}));
    notrep.delta[1] = mat({{0, -1}, {1, 0}});
    CHECK_THROWS_WITH_AS(double_extend(notrep), doctest::Contains("not a representation"), PreconditionError);
  }
  SUBCASE("non-abelian a: su(2) acting on definite R^3") {
    LieAlgebra su = build_su2();
    std::vector<Matrix> ds;
    for (std::size_t i = 0; i < 3; ++i) ds.push_back(su.ad_basis(i));
    DoubleExtensionSpec spec{build_ab(3, 0), su, ds};
    MetricLieAlgebra g = double_extend(spec);
    CHECK(g.dim() == 9);
    CHECK(g.invariant());
    CHECK(validate_structure(g.algebra()).ok);
    CHECK(signature(g.form()) == Signature{6, 3, 0});
  }
  SUBCASE("KO1") {
    MetricLieAlgebra k = build_ko1(6, 2, example42_delta(), example42_base_form());
    MetricLieAlgebra e = build_example42();
    CHECK(k.algebra() == e.algebra());
    CHECK(k.form() == e.form());
    MetricLieAlgebra z = build_ko1(5, 2, Matrix(3, 3));
    CHECK(z.algebra().is_abelian());
    CHECK(signature(z.form()) == Signature{3, 2, 0});
    CHECK_THROWS_AS(build_ko1(6, 2, example42_delta()), PreconditionError);  // not skew for the diagonal form
  }
}

TEST_CASE("reduce inverts double extension") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 40; ++it) {
    std::size_t m = 2 + it % 5, s = (it / 5) % (m / 2 + 1);
    MetricLieAlgebra base = it % 3 == 0 && m >= 2 ? random_iterated_extension(rng, m - 2 + (m == 2 ? 2 : 0), 0, 1)
                                                  : build_ab(m, s);
    std::size_t k = 1 + it % 2;
    DoubleExtensionSpec spec = random_spec(rng, base, k);
    MetricLieAlgebra g = double_extend(spec);
    std::vector<Vector> duals;
    for (std::size_t l = 0; l < k; ++l) duals.push_back(unit_vector(g.dim(), k + base.dim() + l));
    auto st = reduce_by_ideal(g, Subspace::span(g.dim(), duals));
    CHECK(st.quotient.algebra() == base.algebra());
    CHECK(st.quotient.form() == base.form());
    CHECK(st.delta == spec.delta);
    for (std::size_t i = 0; i < base.dim(); ++i)
      for (std::size_t j = 0; j < base.dim(); ++j)
        for (std::size_t l = 0; l < k; ++l)
          CHECK(st.omega[i][j][l] == base.form()(spec.delta[l].col(i), unit_vector(base.dim(), j)));
  }
}
