#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "metlie/builders.hpp"
#include "metlie/einstein.hpp"
#include "metlie/obstruction.hpp"
#include "metlie/redext.hpp"
#include "metlie/sampling.hpp"
#include "metlie/semisimple.hpp"
#include "support.hpp"

using namespace metlie;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail << "failed: " << what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void sharp_example(Check& c) {
  auto t0 = Clock::now();
  MetricLieAlgebra g = build_example42();
  const LieAlgebra& L = g.algebra();
  c.require(killing_form(L).gram().is_zero(), "killing form vanishes");
  c.require(signature(g.form()) == Signature{4, 2, 0}, "signature (4,2,0)");
  c.require(center(L) == Subspace::span(6, {unit_vector(6, 5)}), "center is span{z}");
  c.require(nilradical(L).dim() == 5, "nilradical dimension 5");
  c.require(is_solvable(L) && !is_nilpotent(L), "solvable and not nilpotent");
  auto e = einstein_check(g);
  c.require(e.is_einstein && e.lambda && *e.lambda == 0, "Einstein with lambda 0");
  auto cert = theorem12_certificate(g);
  c.require(cert.dim_g == 6 && cert.dim_n == 5 && cert.index == 2, "bounds (6,5,2)");
  c.require(cert.dim_n_lower == 5 && cert.index_lower == 2 && cert.sharp(), "bounds attained");
  double s = seconds_since(t0);
  c.require(s < 1.0, "runtime below 1 s");
  c.detail << "(" << s << " s)";
}

void round_trip(Check& c) {
  std::mt19937_64 rng(2024);
  int done = 0;
  for (int it = 0; it < 120; ++it) {
    std::size_t m = 1 + it % 8, s = (it / 8) % (m / 2 + 1);
    MetricLieAlgebra base = (it % 4 == 0 && m >= 3) ? random_iterated_extension(rng, m - 2, 0, 1) : build_ab(m, s);
    std::size_t k = 1 + it % 2;
    DoubleExtensionSpec spec = random_spec(rng, base, k);
    MetricLieAlgebra g = double_extend(spec);
    std::vector<Vector> duals;
    for (std::size_t l = 0; l < k; ++l) duals.push_back(unit_vector(g.dim(), k + base.dim() + l));
    auto st = reduce_by_ideal(g, Subspace::span(g.dim(), duals));
    bool same = st.quotient.algebra() == base.algebra() && st.quotient.form() == base.form() && st.delta == spec.delta;
    for (std::size_t i = 0; i < base.dim() && same; ++i)
      for (std::size_t j = 0; j < base.dim(); ++j)
        for (std::size_t l = 0; l < k; ++l)
          same = same && st.omega[i][j][l] == base.form()(spec.delta[l].col(i), unit_vector(base.dim(), j));
    c.require(same, "round trip " + std::to_string(it));
    ++done;
  }
  c.detail << done << " specs";
}

void complete(Check& c) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(77);
  int done = 0;
  for (int it = 0; it < 110; ++it) {
    MetricLieAlgebra M = random_iterated_extension(rng, 1 + it % 4, it % 2, 1 + it % 3);
    Signature sg = signature(M.form());
    auto ch = complete_reduction(M);
    Signature fs = signature(ch.final.form());
    c.require(ch.final.algebra().is_abelian(), "final algebra abelian");
    c.require(fs.p == 0 || fs.q == 0, "final form definite");
    c.require(fs.r == 0 && ch.final.dim() == M.dim() - 2 * sg.witt_index(), "final dimension n - 2s");
    ++done;
  }
  double s = seconds_since(t0);
  c.require(s < 60, "runtime below 60 s");
  c.detail << done << " algebras (" << s << " s)";
}

void eigenvalue_equivalence(Check& c) {
  std::mt19937_64 rng(404);
  int done = 0;
  for (int k = 0; k < 120; ++k) {
    MetricLieAlgebra M = k % 2 ? random_iterated_extension(rng, 2 + k % 3, k % 2, 1 + k % 2)
                               : build_ko1(6, 2, random_skew(rng, build_ab(4, 1).form().gram()));
    Vector a(M.dim());
    for (auto& x : a) x = random_rational(rng, 2, 2);
    Matrix ad = M.algebra().ad(a);
    auto res = eigenvalue_condition(eigenvalue_data(ad));
    Rational direct = (ad * ad).trace();
    c.require(res.residual == direct, "residual equals tr(ad(a)^2)");
    c.require(res.lower <= direct && direct <= res.upper, "disk enclosure contains tr(ad(a)^2)");
    ++done;
  }
  c.detail << done << " algebras";
}

void pwz(Check& c) {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> depth(1, 4), coin(0, 1), cnt(0, 2);
  int done = 0;
  while (done < 220) {
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
    for (int i = 0, k = cnt(rng); i < k; ++i) s.positive_rotations.push_back(random_rational(rng, 3, 2));
    for (int i = 0, k = cnt(rng); i < k; ++i) s.negative_rotations.push_back(random_rational(rng, 3, 2));
    s.extra_negative = coin(rng);
    std::size_t m = pwz_dim(PWZBlockSpec{{}, s.positive_rotations, s.negative_rotations, 0, s.extra_negative});
    for (std::size_t i = s.nodes.size(); i-- > 0;) {
      const std::size_t kk = s.nodes[i].complex_block ? 2 : 1;
      if (coin(rng))
        for (std::size_t f = 0; f < kk * m + (kk == 2 ? 1 : 0); ++f) s.nodes[i].fillers.push_back(random_rational(rng, 2, 2));
      m += 2 * kk;
    }
    auto t = pwz_assemble_and_trace(s);
    c.require(t.trace_sq_direct == t.trace_sq_recursive, "direct and recursive traces agree");
    c.require((t.matrix * t.matrix).trace() == t.trace_sq_direct, "direct trace");
    ++done;
  }
  int compact = 0;
  for (int k = 0; k < 60; ++k) {
    PWZBlockSpec s;
    for (int i = 0; i < 1 + k % 3; ++i) s.positive_rotations.push_back(random_rational(rng, 3, 2));
    for (int i = 0; i < k % 2; ++i) s.negative_rotations.push_back(random_rational(rng, 3, 2));
    auto t = pwz_assemble_and_trace(s);
    c.require(t.matrix.is_zero() ? t.trace_sq_direct == 0 : t.trace_sq_direct < 0, "compact Cartan trace negative");
    ++compact;
  }
  c.detail << done << " nested specs, " << compact << " compact";
}

bool certified(const ObstructionReport& r) {
  if (r.hypotheses.empty()) return false;
  for (const auto& h : r.hypotheses)
    if (!h.holds) return false;
  return true;
}

void verdicts(Check& c) {
  using testsupport::poly;
  auto case1 = lemma52_verdict(eigenvalue_data({{poly({4, 0, 0, 0, 1}), 1}}), 4);
  c.require(case1.case_tag == CaseTag::case1_nonzero_real_part && case1.verdict == Verdict::obstructed,
            "case 1 obstructed");
  c.require(certified(case1) && case1.rule_cited == "gelfond-schneider", "case 1 hypotheses");
  auto case2 = obstruct_element(build_example42(), unit_vector(6, 0)).report;
  c.require(case2.case_tag == CaseTag::case2_imaginary_pair && case2.verdict == Verdict::obstructed,
            "case 2 obstructed");
  c.require(certified(case2) && case2.patterns_closed_under_power_i, "case 2 hypotheses");
  // boost sqrt(3^2 + 4^2) = 5 against rotations 3 and 4, acting on W1 of dimension 6
  auto spiral = obstruct_element(build_ko1(8, 2, spiral_delta(3, 4), spiral_base_form()), unit_vector(8, 0)).report;
  c.require(spiral.n == 6 && spiral.verdict == Verdict::schanuel_conditional &&
                spiral.rule_cited == "schanuel-conditional",
            "spiral spectrum is Schanuel-conditional");
  c.require(spiral.residual == 0, "spiral spectrum satisfies the eigenvalue condition");
  c.detail << "t^4 + 4, sharp example, spiral, nilpotent";
  auto nil = lemma52_verdict(testsupport::mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  c.require(nil.case_tag == CaseTag::nilpotent && nil.verdict == Verdict::inapplicable, "nilpotent inapplicable");
  c.require(!nil.hypotheses.empty() && !nil.hypotheses.front().holds, "nilpotent input recorded as failed hypothesis");
}

void lorentzian(Check& c) {
  auto t0 = Clock::now();
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  SearchConfig lor;
  lor.dim_min = 3;
  lor.dim_max = 8;
  lor.index_min = lor.index_max = 1;
  lor.budget = 10000;
  lor.seed = 7;
  lor.threads = threads;
  auto r1 = sharpness_search(lor);
  c.require(r1.samples >= 10000 && r1.nonabelian_einstein == 0, "no non-abelian Lorentzian Einstein hit");
  SearchConfig small;
  small.dim_min = 3;
  small.dim_max = 5;
  small.index_min = 0;
  small.index_max = 4;
  small.budget = 10000;
  small.seed = 8;
  small.threads = threads;
  auto r2 = sharpness_search(small);
  c.require(r2.nonnilpotent_einstein == 0, "no non-nilpotent Einstein hit in dims 3-5");
  SearchConfig six;
  six.dim_min = six.dim_max = 6;
  six.index_min = six.index_max = 2;
  six.budget = 10000;
  six.seed = 9;
  six.threads = threads;
  auto r3 = sharpness_search(six);
  c.require(r3.nonnilpotent_einstein >= 1, "dim 6 index 2 has a non-nilpotent Einstein hit");
  double s = seconds_since(t0);
  c.require(s < 300, "runtime below 5 min");
  c.detail << "index 1: " << r1.einstein_hits << " Einstein (all abelian); dims 3-5: " << r2.nonabelian_einstein
           << " non-abelian, all nilpotent; dim 6: " << r3.nonnilpotent_einstein << " non-nilpotent (" << s << " s)";
}

void jordan(Check& c) {
  std::mt19937_64 rng(606);
  int done = 0;
  for (int it = 0; it < 240; ++it) {
    std::size_t n = 1 + it % 6;
    Matrix a = it % 2 ? testsupport::random_jordan_matrix(rng, n) : testsupport::random_matrix(rng, n);
    auto jp = jordan_chevalley(a);
    c.require(jp.semisimple + jp.nilpotent == a, "S + N = A");
    c.require(jp.semisimple * jp.nilpotent == jp.nilpotent * jp.semisimple, "S and N commute");
    c.require(is_nilpotent(jp.nilpotent), "N nilpotent");
    c.require(squarefree_part(testsupport::leverrier(a)).eval(jp.semisimple).is_zero(), "squarefree minimal polynomial");
    c.require(Poly(jp.s_poly).eval(a) == jp.semisimple, "S is a polynomial in A");
    ++done;
  }
  c.detail << done << " matrices";
}

void semisimple_split(Check& c) {
  LieAlgebra g = direct_sum(build_su2(), build_sl2());
  auto sp = compact_split(g);
  Subspace su2 = Subspace::span(6, {unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2)});
  Subspace sl2 = Subspace::span(6, {unit_vector(6, 3), unit_vector(6, 4), unit_vector(6, 5)});
  c.require(sp.simple_ideals.size() == 2 && sp.compact_part == su2 && sp.noncompact_part == sl2, "su2 + sl2 split");
  Matrix K = killing_form(g).gram();
  Matrix P = testsupport::mat({{3, 1, 0}, {1, 2, 0}, {0, 0, 1}});
  for (const Rational& cc : {Rational(1, 2), Rational(2), Rational(-3)}) {
    Matrix G(6, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        G(i, j) = P(i, j);
        G(3 + i, 3 + j) = cc * K(3 + i, 3 + j);
      }
    auto r = verify_lemma61(MetricLieAlgebra(g, SymBilinearForm(G)));
    c.require(r.s_invariant && r.k_perp_s && r.s_cap_radical_zero, "form flags");
    c.require(r.proportionality_c && *r.proportionality_c == cc, "c = " + cc.get_str());
    c.detail << "c=" << (r.proportionality_c ? r.proportionality_c->get_str() : "none") << " ";
  }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"sharp example regression", sharp_example},
      {"reduce/extend round trip", round_trip},
      {"complete reduction", complete},
      {"Einstein/eigenvalue equivalence", eigenvalue_equivalence},
      {"block-triangular trace recursion", pwz},
      {"obstruction verdicts", verdicts},
      {"Lorentzian search", lorentzian},
      {"Jordan-Chevalley invariants", jordan},
      {"semisimple split", semisimple_split},
  };
  int failed = 0, k = 0;
  for (const auto& [name, fn] : criteria) {
    ++k;
    Check c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what();
    }
    std::cout << "criterion " << k << " " << (c.ok ? "PASS" : "FAIL") << ": " << name << ": " << c.detail.str() << "\n";
    if (!c.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
