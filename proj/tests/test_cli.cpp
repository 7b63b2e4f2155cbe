#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "metlie/cli.hpp"
#include "metlie/error.hpp"
#include "metlie/sampling.hpp"
#include "support.hpp"

using namespace metlie;
using namespace metlie::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = run(args, o, e);
  return {c, o.str(), e.str()};
}

json call_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  Outcome r = call(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/metlie_test_" + name;
  std::ofstream(path) << content;
  return path;
}

AlgebraDocument random_document(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dimd(0, 6), coin(0, 3);
  AlgebraDocument d;
  d.dim = dimd(rng);
  d.name = "doc" + std::to_string(coin(rng));
  for (std::size_t k = 0; k < d.dim; ++k) d.basis.push_back("b" + std::to_string(k));
  for (std::size_t i = 0; i < d.dim; ++i)
    for (std::size_t j = i + 1; j < d.dim; ++j) {
      if (coin(rng) != 0) continue;
      BracketEntry b{i, j, {}};
      for (std::size_t k = 0; k < d.dim; ++k)
        if (coin(rng) == 0) b.coeffs[k] = random_rational(rng, 9, 7);
      d.brackets.push_back(b);
    }
  if (coin(rng) != 0) {
    Matrix G(d.dim, d.dim);
    for (std::size_t i = 0; i < d.dim; ++i)
      for (std::size_t j = i; j < d.dim; ++j) G(i, j) = G(j, i) = random_rational(rng, 5, 5);
    d.form = G;
  }
  if (coin(rng) == 0 && d.dim > 0) d.nilradical_hint = std::vector<Vector>{unit_vector(d.dim, 0)};
  return d;
}

}  // namespace

TEST_CASE("document serialization round trip") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 150; ++k) {
    AlgebraDocument d = random_document(rng);
    CHECK(parse_document(emit_document(d)) == d);
  }
  // random metric algebras through the document form
  for (int k = 0; k < 20; ++k) {
    MetricLieAlgebra M = random_iterated_extension(rng, 2 + k % 3, k % 2, 1 + k % 2);
    AlgebraDocument d = to_document(M);
    MetricLieAlgebra back = metric_of(parse_document(emit_document(d)));
    CHECK(back.algebra() == M.algebra());
    CHECK(back.form() == M.form());
  }
}

TEST_CASE("document parsing errors") {
  try {
    parse_document("{\n  \"dim\": 2,\n  \"basis\": [\"a\" \"b\"]\n}");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 10);
  }
  try {
    parse_document("{\"dim\": 2,\n \"brackets\": [{\"i\": 0, \"j\": 1, \"coeffs\": {\"0\": \"3/x\"}}]}");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("malformed rational") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_document("{\"dim\": 2, \"brackets\": [{\"i\": 1, \"j\": 0, \"coeffs\": {}}]}"), ParseError);
  CHECK_THROWS_AS(parse_document("{\"dim\": 2, \"brackets\": [{\"i\": 0, \"j\": 2, \"coeffs\": {}}]}"), ParseError);
  CHECK_THROWS_WITH_AS(parse_document("{\"dim\": 2, \"form\": [[\"1\", \"2\"], [\"0\", \"1\"]]}"),
                       doctest::Contains("not symmetric"), ParseError);
  // integers are accepted as shorthand
  auto d = parse_document("{\"dim\": 2, \"form\": [[1, 0], [0, -1]]}");
  CHECK((*d.form)(1, 1) == -1);
  CHECK(d.basis == std::vector<std::string>{"e1", "e2"});
}

TEST_CASE("catalog entries satisfy the Jacobi identity") {
  std::string delta = temp_file("delta.json", "[[\"0\",\"1\",\"0\"],[\"-1\",\"0\",\"0\"],[\"0\",\"0\",\"0\"]]");
  for (const std::string& name : std::vector<std::string>{"ab(4,1)", "ab(3,0)", "heis3", "sl2", "su2", "su2xsl2", "osc4", "example42",
                                  "spiral(3,4)", std::string("ko1(5,1,") + delta + ")"}) {
    auto d = catalog_lookup(name);
    REQUIRE_MESSAGE(d.has_value(), name);
    CHECK_MESSAGE(validate_structure(algebra_of(*d)).ok, name);
    json v = call_json({"validate", name});
    CHECK(v["results"]["jacobi"] == true);
  }
  CHECK_FALSE(catalog_lookup("ab4").has_value());
  auto s = catalog_suggestions("exmple42");
  REQUIRE_FALSE(s.empty());
  CHECK(s.front() == "example42");
}

TEST_CASE("analyze the sharp example") {
  json r = call_json({"analyze", "example42"});
  const json& res = r["results"];
  CHECK(res["killing_zero"] == true);
  for (const auto& row : res["killing"])
    for (const auto& x : row) CHECK(x == "0");
  CHECK(res["signature"] == json::array({4, 2, 0}));
  CHECK(res["nilradical_dim"] == 5);
  CHECK(res["solvable"] == true);
  CHECK(res["nilpotent"] == false);
  CHECK(r["command"] == "analyze");
  CHECK(r["inputs_digest"].get<std::string>().size() == 16);
  // digest is a function of the inputs
  CHECK(call_json({"analyze", "example42"})["inputs_digest"] == r["inputs_digest"]);
  CHECK(call_json({"analyze", "osc4"})["inputs_digest"] != r["inputs_digest"]);
}

TEST_CASE("reduce the sharp example by its center") {
  json r = call_json({"reduce", "example42", "--ideal", "z"});
  const json& q = r["results"]["quotient"];
  AlgebraDocument d = parse_document(q.dump());
  CHECK(d.dim == 4);
  CHECK(d.brackets.empty());
  Signature s = signature(SymBilinearForm(*d.form));
  CHECK(s == Signature{3, 1, 0});
  const json& delta = r["results"]["delta"][0];
  CHECK(delta.size() == 4);
  CHECK(delta[0][0] == "1");
  CHECK(delta[3][3] == "-1");
}

TEST_CASE("obstruct and relations commands") {
  json r = call_json({"obstruct", "example42", "--element", "a", "--t-grid", "1/2,1,2"});
  CHECK(r["results"]["case"] == "case2_imaginary_pair");
  CHECK(r["results"]["verdict"] == "obstructed");
  CHECK(r["results"]["rule_cited"] == "gelfond-schneider");
  for (const auto& row : r["results"]["integer_probe"]) CHECK(row["excluded"] == true);
  for (const auto& h : r["certificates"]["hypotheses"]) CHECK(h["holds"] == true);

  json sp = call_json({"obstruct", "spiral(3,4)", "--element", "a"});
  CHECK(sp["results"]["verdict"] == "schanuel_conditional");
  CHECK(sp["results"]["rule_cited"] == "schanuel-conditional");

  json rel = call_json({"relations", "spiral(3,4)", "--element", "a"});
  CHECK(rel["results"]["relations"].size() == 4);
  CHECK(rel["results"]["quadratic_relation_holds"] == true);

  std::string m = temp_file("mat.json", "[[0, -1], [1, 0]]");
  json rm = call_json({"relations", "--matrix", m});
  CHECK(rm["results"]["relations"].size() == 1);
}

TEST_CASE("remaining commands") {
  json c = call_json({"certify-thm12", "example42"});
  CHECK(c["results"]["sharp"] == true);
  CHECK(c["results"]["dim_n_lower_bound"] == 5);
  json e = call_json({"einstein", "sl2"});
  CHECK(e["results"]["lambda"] == "-1/4");
  json sg = call_json({"signature", "ab(5,2)"});
  CHECK(sg["results"]["signature"] == json::array({3, 2, 0}));
  json cr = call_json({"complete-reduce", "example42"});
  CHECK(cr["results"]["final_dim"] == 2);
  CHECK(cr["results"]["final_definite"] == true);
  json ss = call_json({"split-semisimple", "su2xsl2"});
  CHECK(ss["results"]["simple_ideals"].size() == 2);
  CHECK(ss["results"]["form_check"]["proportionality_c"] == "1");

  std::string spec = temp_file("spec.json",
                               "{\"base\": \"ab(4,1)\", \"delta\": [[[\"0\",\"-1\",\"0\",\"0\"],[\"1\",\"0\",\"0\",\"0\"],"
                               "[\"0\",\"0\",\"0\",\"0\"],[\"0\",\"0\",\"0\",\"0\"]]]}");
  json x = call_json({"extend", spec});
  CHECK(x["results"]["invariant"] == true);
  CHECK(x["results"]["algebra"]["dim"] == 6);

  Outcome s = call({"search", "--dims", "6", "--index", "2", "--budget", "200", "--seed", "3", "--format", "json"});
  REQUIRE(s.code == 0);
  std::istringstream lines(s.out);
  std::string line;
  int findings = 0;
  while (std::getline(lines, line) && line.rfind("{\"dim\"", 0) == 0) {
    json f = json::parse(line);
    CHECK(f.contains("spec"));
    CHECK(f["einstein"] == true);
    ++findings;
  }
  CHECK(findings > 0);
}

TEST_CASE("exit codes") {
  CHECK(call({"analyze", "exampl42"}).code == 2);
  CHECK(call({"analyze", "exampl42"}).err.find("did you mean example42") != std::string::npos);
  CHECK(call({"certify-thm12", "heis3"}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"analyze", "example42", "--format", "yaml"}).code == 2);
  CHECK(call({"obstruct", "example42", "--element", "q"}).code == 2);
  CHECK(call({"split-semisimple", "heis3"}).err.find("Killing form degenerate") != std::string::npos);
  CHECK(call({"analyze", "sl2"}).code == 0);
  Outcome t = call({"analyze", "example42"});
  CHECK(t.code == 0);
  CHECK(t.out.find("nilradical_dim: 5") != std::string::npos);
}
