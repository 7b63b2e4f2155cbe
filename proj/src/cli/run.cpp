#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "metlie/cli.hpp"
#include "metlie/einstein.hpp"
#include "metlie/error.hpp"
#include "metlie/obstruction.hpp"
#include "metlie/semisimple.hpp"

namespace metlie::cli {

using nlohmann::json;

namespace {

json rat(const Rational& q) { return q.get_str(); }

json vec_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat(x));
  return a;
}

json mat_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec_json(m.row(r)));
  return a;
}

json space_json(const Subspace& S) {
  json a = json::array();
  for (const auto& v : S.basis()) a.push_back(vec_json(v));
  return a;
}

json vectors_json(const std::vector<Vector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

json number_json(const AlgebraicNumber& z) {
  return {{"minpoly", to_string(z.minpoly())}, {"value", z.to_string()}, {"real", z.is_real()},
          {"imaginary", z.is_imaginary()}};
}

json spectrum_json(const EigenvalueData& E) {
  json f = json::array();
  for (const auto& [p, m] : E.factors) f.push_back({{"factor", to_string(p)}, {"multiplicity", m}});
  json r = json::array();
  for (std::size_t k = 0; k < E.roots.size(); ++k) {
    json z = number_json(E.roots[k]);
    z["multiplicity"] = E.multiplicity[k];
    r.push_back(z);
  }
  return {{"dim", E.dim}, {"factors", f}, {"roots", r}};
}

json doc_json(const AlgebraDocument& d) { return json::parse(emit_document(d)); }

json signature_json(const Signature& s) { return json::array({s.p, s.q, s.r}); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational json_rational(const json& v) {
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  if (!v.is_string()) throw PreconditionError("expected a rational string, got " + v.dump());
  return parse_rational(v.get<std::string>());
}

Matrix json_matrix(const json& j) {
  if (!j.is_array()) throw PreconditionError("expected a matrix");
  const std::size_t r = j.size(), c = r ? j[0].size() : 0;
  Matrix M(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) throw PreconditionError("ragged matrix");
    for (std::size_t k = 0; k < c; ++k) M(i, k) = json_rational(j[i][k]);
  }
  return M;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

// A basis name or a comma separated list of dim rationals.
Vector parse_element(const LieAlgebra& L, const std::string& text) {
  if (auto i = L.index_of(text)) return unit_vector(L.dim(), *i);
  auto parts = split(text, ',');
  if (parts.size() != L.dim())
    throw PreconditionError("element '" + text + "' is neither a basis name nor " + std::to_string(L.dim()) +
                            " comma separated rationals");
  Vector v;
  for (const auto& p : parts) v.push_back(parse_rational(p));
  return v;
}

// ';' separated generators; "z,y" with only basis names lists unit vectors.
Subspace parse_subspace(const LieAlgebra& L, const std::string& text) {
  std::vector<Vector> gens;
  for (const auto& g : split(text, ';')) {
    auto names = split(g, ',');
    bool all_names = std::all_of(names.begin(), names.end(), [&](const std::string& n) { return L.index_of(n).has_value(); });
    if (all_names) {
      for (const auto& n : names) gens.push_back(unit_vector(L.dim(), *L.index_of(n)));
    } else {
      gens.push_back(parse_element(L, g));
    }
  }
  return Subspace::span(L.dim(), gens);
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_rational(p));
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto dash = text.find('-');
  try {
    if (dash == std::string::npos) {
      std::size_t v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dash)), std::stoul(text.substr(dash + 1))};
  } catch (const std::exception&) {
    throw PreconditionError("malformed range '" + text + "', expected a or a-b");
  }
}

std::string inline_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) return v.dump();
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + inline_value(v[k]);
  return s + "]";
}

bool is_flat(const json& v) {
  return !v.is_structured() ||
         (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); }));
}

void emit_text(std::ostream& out, const json& j, int indent);

void emit_items(std::ostream& out, const json& a, int indent) {
  const std::string pad(indent + 2, ' ');
  for (const auto& e : a) {
    if (is_flat(e)) {
      out << pad << inline_value(e) << "\n";
    } else if (e.is_object()) {
      out << pad << "-\n";
      emit_text(out, e, indent + 4);
    } else {
      out << pad << "-\n";
      emit_items(out, e, indent + 2);
    }
  }
}

void emit_text(std::ostream& out, const json& j, int indent) {
  const std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    out << pad << it.key() << ":";
    if (is_flat(v)) {
      out << " " << inline_value(v) << "\n";
    } else if (v.is_array()) {
      out << "\n";
      emit_items(out, v, indent);
    } else {
      out << "\n";
      emit_text(out, v, indent + 2);
    }
  }
}

struct Context {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string digest_input;
};

void report(std::ostream& out, Context& ctx, const std::string& command, const json& results,
            const json& certificates = json::object()) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(ctx.digest_input)));
  json r = {{"command", command}, {"inputs_digest", hex}, {"results", results}, {"certificates", certificates}};
  if (ctx.format == "json") {
    out << r.dump(2) << "\n";
  } else {
    out << "command: " << command << "\ninputs digest: " << hex << "\n";
    emit_text(out, results, 0);
    if (!certificates.empty()) {
      out << "certificates:\n";
      emit_text(out, certificates, 2);
    }
  }
}

AlgebraDocument load(Context& ctx, const std::string& ref) {
  AlgebraDocument d = resolve_algebra(ref);
  ctx.digest_input += emit_document(d);
  return d;
}

// ---------------------------------------------------------------------------

void cmd_validate(std::ostream& out, Context& ctx, const std::string& ref) {
  AlgebraDocument d = load(ctx, ref);
  MetricLieAlgebra M = metric_of(d);
  ValidationReport v = validate_structure(M.algebra());
  json viol = json::array();
  for (const auto& t : v.jacobi_violations) viol.push_back(t);
  json res = {{"name", d.name}, {"dim", d.dim}, {"jacobi", v.ok}, {"jacobi_violations", viol}, {"has_form", d.form.has_value()}};
  json cert = json::object();
  if (d.form) {
    InvarianceResult inv = is_invariant(M);
    res["invariant"] = inv.ok;
    res["nondegenerate"] = M.nondegenerate();
    if (inv.witness) {
      const auto& w = *inv.witness;
      cert["invariance_witness"] = {{"x", d.basis[w[0]]}, {"y1", d.basis[w[1]]}, {"y2", d.basis[w[2]]}, {"value", rat(inv.value)}};
    }
  }
  report(out, ctx, "validate", res, cert);
}

void cmd_analyze(std::ostream& out, Context& ctx, const std::string& ref) {
  AlgebraDocument d = load(ctx, ref);
  MetricLieAlgebra M = metric_of(d);
  const LieAlgebra& L = M.algebra();
  if (!validate_structure(L).ok) throw PreconditionError("structure constants violate the Jacobi identity");
  SeriesReport s = series(L);
  Matrix K = killing_form(L).gram();
  std::optional<Subspace> hint;
  if (d.nilradical_hint) hint = Subspace::span(d.dim, *d.nilradical_hint);
  json derived = json::array(), lower = json::array();
  for (const auto& S : s.derived) derived.push_back(S.dim());
  for (const auto& S : s.lower_central) lower.push_back(S.dim());
  json res = {{"name", d.name},
              {"dim", d.dim},
              {"basis", d.basis},
              {"killing", mat_json(K)},
              {"killing_zero", K.is_zero()},
              {"center", space_json(center(L))},
              {"center_dim", center(L).dim()},
              {"derived_series_dims", derived},
              {"lower_central_series_dims", lower},
              {"abelian", L.is_abelian()},
              {"solvable", s.is_solvable},
              {"nilpotent", s.is_nilpotent}};
  // the nilradical computation is for solvable algebras
  if (s.is_solvable) {
    Subspace n = nilradical(L, hint);
    res["nilradical"] = space_json(n);
    res["nilradical_dim"] = n.dim();
  } else {
    res["nilradical"] = nullptr;
    res["nilradical_dim"] = nullptr;
  }
  if (d.form) {
    Signature sg = signature(M.form());
    res["signature"] = signature_json(sg);
    res["index"] = sg.witt_index();
    res["invariant"] = M.invariant();
    res["nondegenerate"] = M.nondegenerate();
    if (s.is_solvable && M.invariant() && M.nondegenerate()) res["j0"] = space_json(j0_ideal(M));
  }
  report(out, ctx, "analyze", res);
}

void cmd_signature(std::ostream& out, Context& ctx, const std::string& ref) {
  AlgebraDocument d = load(ctx, ref);
  if (!d.form) throw PreconditionError("algebra '" + d.name + "' carries no form");
  Signature s = signature(SymBilinearForm(*d.form));
  report(out, ctx, "signature", {{"signature", signature_json(s)}, {"p", s.p}, {"q", s.q}, {"r", s.r}, {"witt_index", s.witt_index()}});
}

json step_json(const ReductionStep& st) {
  json delta = json::array(), xi = json::array(), omega = json::array();
  for (const auto& m : st.delta) delta.push_back(mat_json(m));
  for (const auto& m : st.xi) xi.push_back(mat_json(m));
  for (const auto& row : st.omega) {
    json r = json::array();
    for (const auto& v : row) r.push_back(vec_json(v));
    omega.push_back(r);
  }
  return {{"ideal", space_json(st.j)},
          {"witt", {{"v", vectors_json(st.witt.v)}, {"v_star", vectors_json(st.witt.v_star)}, {"w", vectors_json(st.witt.w)}}},
          {"quotient", doc_json(to_document(st.quotient))},
          {"a_dim", st.a_algebra.dim()},
          {"delta", delta},
          {"omega", omega},
          {"xi", xi}};
}

void cmd_reduce(std::ostream& out, Context& ctx, const std::string& ref, const std::string& ideal) {
  AlgebraDocument d = load(ctx, ref);
  MetricLieAlgebra M = metric_of(d);
  if (ideal.empty()) throw PreconditionError("reduce needs --ideal");
  ReductionStep st = reduce_by_ideal(M, parse_subspace(M.algebra(), ideal));
  st.quotient = MetricLieAlgebra(st.quotient.algebra(), st.quotient.form(), d.name + "/j");
  report(out, ctx, "reduce", step_json(st));
}

void cmd_complete_reduce(std::ostream& out, Context& ctx, const std::string& ref) {
  AlgebraDocument d = load(ctx, ref);
  MetricLieAlgebra M = metric_of(d);
  ReductionChain ch = complete_reduction(M);
  json steps = json::array();
  for (const auto& st : ch.steps)
    steps.push_back({{"ideal", space_json(st.j)}, {"quotient_dim", st.quotient.dim()}, {"delta", mat_json(st.delta.front())}});
  Signature s = signature(ch.final.form());
  report(out, ctx, "complete-reduce",
         {{"steps", steps},
          {"final", doc_json(to_document(ch.final))},
          {"final_dim", ch.final.dim()},
          {"final_signature", signature_json(s)},
          {"final_abelian", ch.final.algebra().is_abelian()},
          {"final_definite", s.p == 0 || s.q == 0}});
}

// Spec file: {"base": <catalog name or document>, "a": <document, optional>,
// "delta": [matrices], "dual_names": [...]}
void cmd_extend(std::ostream& out, Context& ctx, const std::string& path) {
  std::string text = read_file(path);
  ctx.digest_input += text;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("extension spec: ") + e.what());
  }
  if (!j.is_object() || !j.contains("base") || !j.contains("delta"))
    throw PreconditionError("extension spec needs base and delta");
  AlgebraDocument base = j["base"].is_string() ? resolve_algebra(j["base"].get<std::string>()) : parse_document(j["base"].dump());
  if (!base.form) throw PreconditionError("extension base carries no form");
  std::vector<Matrix> delta;
  for (const auto& m : j["delta"]) delta.push_back(json_matrix(m));
  LieAlgebra a = j.contains("a") ? algebra_of(parse_document(j["a"].dump())) : LieAlgebra(delta.size());
  std::vector<std::string> dual;
  if (j.contains("dual_names")) dual = j["dual_names"].get<std::vector<std::string>>();
  DoubleExtensionSpec spec{metric_of(base), a, delta};
  MetricLieAlgebra g = double_extend(spec, dual);
  report(out, ctx, "extend", {{"algebra", doc_json(to_document(g))}, {"invariant", g.invariant()}, {"nondegenerate", g.nondegenerate()}});
}

void cmd_einstein(std::ostream& out, Context& ctx, const std::string& ref) {
  AlgebraDocument d = load(ctx, ref);
  EinsteinReport r = einstein_check(metric_of(d));
  json res = {{"killing", mat_json(r.killing.gram())}, {"ricci", mat_json(r.ricci.gram())}, {"einstein", r.is_einstein}};
  res["lambda"] = r.lambda ? rat(*r.lambda) : json(nullptr);
  report(out, ctx, "einstein", res);
}

void cmd_certify(std::ostream& out, Context& ctx, const std::string& ref) {
  AlgebraDocument d = load(ctx, ref);
  EinsteinCertificate c = theorem12_certificate(metric_of(d));
  json res = {{"dim_g", c.dim_g},
              {"dim_n", c.dim_n},
              {"index", c.index},
              {"dim_n_lower_bound", c.dim_n_lower},
              {"index_lower_bound", c.index_lower},
              {"sharp", c.sharp()}};
  json cert = {{"a", vec_json(c.a)},
               {"sigma_a", mat_json(c.sigma_a)},
               {"nilradical", space_json(c.nilradical)},
               {"W0", space_json(c.W0)},
               {"W1", space_json(c.W1)},
               {"spectrum_on_W1", spectrum_json(c.spectrum)},
               {"ideal_i", space_json(c.ideal_i)},
               {"line_L", space_json(c.line_L)},
               {"verified", c.verified}};
  if (c.indefinite_witness)
    cert["indefinite_witness"] = {vec_json(c.indefinite_witness->first), vec_json(c.indefinite_witness->second)};
  report(out, ctx, "certify-thm12", res, cert);
}

json obstruction_json(const ObstructionReport& r) {
  json ex = json::array();
  for (const auto& e : r.exponents) ex.push_back({e.re, e.im});
  json res = {{"case", to_string(r.case_tag)},
              {"verdict", to_string(r.verdict)},
              {"rule_cited", r.rule_cited},
              {"n", r.n},
              {"base", r.base},
              {"exponents", ex},
              {"exp_eigenvalue_patterns", r.exp_eigenvalue_patterns},
              {"patterns_closed_under_power_i", r.patterns_closed_under_power_i},
              {"residual", rat(r.residual)},
              {"input_spectrum", spectrum_json(r.input_spectrum)}};
  return res;
}

json hypotheses_json(const ObstructionReport& r) {
  json h = json::array();
  for (const auto& x : r.hypotheses) h.push_back({{"name", x.name}, {"holds", x.holds}, {"detail", x.detail}});
  return h;
}

void cmd_obstruct(std::ostream& out, Context& ctx, const std::string& ref, const std::string& element,
                  const std::string& restriction, const std::string& grid) {
  AlgebraDocument d = load(ctx, ref);
  MetricLieAlgebra M = metric_of(d);
  if (element.empty()) throw PreconditionError("obstruct needs --element");
  Vector a = parse_element(M.algebra(), element);
  std::optional<Subspace> R;
  if (!restriction.empty()) R = parse_subspace(M.algebra(), restriction);
  ElementObstruction o = obstruct_element(M, a, R);
  json res = obstruction_json(o.report);
  res["restriction"] = space_json(o.restriction);
  res["restricted_map"] = mat_json(o.restricted);
  if (!grid.empty()) {
    json rows = json::array();
    for (const auto& row : integer_exponential_probe(M, a, parse_grid(grid))) {
      json cs = json::array(), approx = json::array();
      for (const auto& [lo, hi] : row.coefficients) {
        cs.push_back({rat(lo), rat(hi)});
        approx.push_back(Rational((lo + hi) / 2).get_d());
      }
      json jr = {{"t", rat(row.t)}, {"trivial", row.trivial}, {"excluded", row.excluded},
                 {"coefficients_approx", approx}, {"coefficient_bounds", cs}};
      jr["witness"] = row.witness ? json(*row.witness) : json(nullptr);
      rows.push_back(jr);
    }
    res["integer_probe"] = rows;
  }
  report(out, ctx, "obstruct", res, {{"hypotheses", hypotheses_json(o.report)}});
}

void cmd_relations(std::ostream& out, Context& ctx, const std::string& ref, const std::string& element,
                   const std::string& matrix_file) {
  Matrix A;
  if (!matrix_file.empty()) {
    std::string text = read_file(matrix_file);
    ctx.digest_input += text;
    A = json_matrix(json::parse(text));
    if (!A.is_square()) throw PreconditionError("relations needs a square matrix");
  } else {
    if (ref.empty() || element.empty()) throw PreconditionError("relations needs an algebra with --element, or --matrix");
    AlgebraDocument d = load(ctx, ref);
    MetricLieAlgebra M = metric_of(d);
    Vector a = parse_element(M.algebra(), element);
    A = obstruct_element(M, a).restricted;
  }
  auto eigs = exact_eigenvalues(A);
  RelationBasis rb = qlinear_relations(eigs);
  json nums = json::array();
  for (const auto& z : eigs) nums.push_back(number_json(z));
  json reps = json::array();
  for (const auto& p : rb.representations) reps.push_back(to_string(p, "theta"));
  report(out, ctx, "relations",
         {{"eigenvalues", nums},
          {"field_minpoly", to_string(rb.field_minpoly, "theta")},
          {"relations", vectors_json(rb.relations)},
          {"quadratic_relation", rb.quadratic_relation},
          {"quadratic_relation_holds", rb.quadratic_relation_holds},
          {"conjugation_closed", rb.conjugation_closed}},
         {{"representations", reps}});
}

void cmd_split(std::ostream& out, Context& ctx, const std::string& ref) {
  AlgebraDocument d = load(ctx, ref);
  MetricLieAlgebra M = metric_of(d);
  SplitResult s = compact_split(M.algebra(), ctx.seed);
  json ideals = json::array();
  for (std::size_t k = 0; k < s.simple_ideals.size(); ++k)
    ideals.push_back({{"basis", space_json(s.simple_ideals[k])}, {"compact", static_cast<bool>(s.compact[k])}});
  json res = {{"simple_ideals", ideals}, {"compact_part", space_json(s.compact_part)}, {"noncompact_part", space_json(s.noncompact_part)}};
  if (d.form && !d.form->is_zero()) {
    Lemma61Report r = verify_lemma61(M, ctx.seed);
    json cs = json::array();
    for (const auto& c : r.ideal_c) cs.push_back(c ? rat(*c) : json("not proportional"));
    res["form_check"] = {{"s_invariant", r.s_invariant},
                         {"k_perp_s", r.k_perp_s},
                         {"s_cap_radical_zero", r.s_cap_radical_zero},
                         {"ideal_c", cs},
                         {"proportionality_c", r.proportionality_c ? rat(*r.proportionality_c) : json("not proportional")}};
  }
  report(out, ctx, "split-semisimple", res);
}

void cmd_search(std::ostream& out, Context& ctx, const std::string& dims, const std::string& index, std::size_t budget,
                unsigned threads) {
  SearchConfig cfg;
  std::tie(cfg.dim_min, cfg.dim_max) = parse_range(dims);
  std::tie(cfg.index_min, cfg.index_max) = parse_range(index);
  if (cfg.dim_min < 3 || cfg.dim_min > cfg.dim_max) throw PreconditionError("search dims must satisfy 3 <= a <= b");
  if (cfg.index_min > cfg.index_max) throw PreconditionError("search index range is empty");
  cfg.budget = budget;
  cfg.seed = ctx.seed;
  cfg.threads = std::max(1u, threads);
  SearchResult r = sharpness_search(cfg);
  json findings = json::array();
  for (const auto& f : r.findings) {
    json line = {{"spec", f.spec}, {"dim", f.dim}, {"dim_nilradical", f.dim_nilradical}, {"index", f.index},
                 {"einstein", f.einstein}, {"nilpotent", f.nilpotent}};
    if (ctx.format == "json") out << line.dump() << "\n";
    findings.push_back(line);
  }
  json res = {{"samples", r.samples},
              {"einstein_hits", r.einstein_hits},
              {"nonabelian_einstein", r.nonabelian_einstein},
              {"nonnilpotent_einstein", r.nonnilpotent_einstein},
              {"seed", cfg.seed}};
  if (ctx.format != "json") res["findings"] = findings;
  report(out, ctx, "search", res);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with metric Lie algebras", "metlie"};
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", ctx.seed, "Seed for every randomized path");

  std::string alg, ideal, element, restriction, grid, matrix_file, dims = "3-8", index = "0-4";
  std::size_t budget = 10000;
  unsigned threads = 1;
  auto sub = [&](const char* name, const char* help, bool needs_alg = true) {
    CLI::App* s = app.add_subcommand(name, help)->fallthrough();
    if (needs_alg) s->add_option("algebra", alg, "Catalog name or JSON document")->required();
    return s;
  };
  auto* validate = sub("validate", "Check Jacobi identity and form invariance");
  auto* analyze = sub("analyze", "Killing form, series, nilradical, signature");
  auto* sig = sub("signature", "Signature of the form");
  auto* reduce = sub("reduce", "Reduce by a totally isotropic central ideal");
  reduce->add_option("--ideal", ideal, "Basis names or ';' separated vectors")->required();
  auto* creduce = sub("complete-reduce", "Iterate reductions down to an abelian algebra");
  auto* extend = app.add_subcommand("extend", "Double extension from a JSON spec")->fallthrough();
  std::string spec_file;
  extend->add_option("spec", spec_file, "JSON file with base, delta and optional a")->required();
  auto* einstein = sub("einstein", "Einstein condition for the bi-invariant metric");
  auto* certify = sub("certify-thm12", "Dimension and index bounds for a non-nilpotent Einstein algebra");
  auto* obstruct = sub("obstruct", "Lattice obstruction verdict for ad(a)");
  obstruct->add_option("--element", element, "Basis name or comma separated coordinates")->required();
  obstruct->add_option("--restriction", restriction, "Invariant subspace (default: image of the semisimple part)");
  obstruct->add_option("--t-grid", grid, "Comma separated rationals for the integrality probe");
  auto* relations = app.add_subcommand("relations", "Rational linear relations among eigenvalues")->fallthrough();
  relations->add_option("algebra", alg, "Catalog name or JSON document");
  relations->add_option("--element", element, "Basis name or comma separated coordinates");
  relations->add_option("--matrix", matrix_file, "JSON matrix file");
  auto* split_cmd = sub("split-semisimple", "Simple ideals and compact/noncompact parts");
  auto* search = app.add_subcommand("search", "Seeded search for Einstein algebras")->fallthrough();
  search->add_option("--dims", dims, "Dimension range a-b");
  search->add_option("--index", index, "Index range a-b");
  search->add_option("--budget", budget, "Number of samples");
  search->add_option("--threads", threads, "Worker threads");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  for (const auto& a : args) ctx.digest_input += a + '\0';

  try {
    if (*validate) cmd_validate(out, ctx, alg);
    else if (*analyze) cmd_analyze(out, ctx, alg);
    else if (*sig) cmd_signature(out, ctx, alg);
    else if (*reduce) cmd_reduce(out, ctx, alg, ideal);
    else if (*creduce) cmd_complete_reduce(out, ctx, alg);
    else if (*extend) cmd_extend(out, ctx, spec_file);
    else if (*einstein) cmd_einstein(out, ctx, alg);
    else if (*certify) cmd_certify(out, ctx, alg);
    else if (*obstruct) cmd_obstruct(out, ctx, alg, element, restriction, grid);
    else if (*relations) cmd_relations(out, ctx, alg, element, matrix_file);
    else if (*split_cmd) cmd_split(out, ctx, alg);
    else if (*search) cmd_search(out, ctx, dims, index, budget, threads);
  } catch (const CertificateError& e) {
    err << "certificate failure: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace metlie::cli
