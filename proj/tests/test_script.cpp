#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "chevalg/script.hpp"

using namespace chevalg;

namespace {
GroundField field() { return parse_ground_field("F4(t)"); }

std::string run_to_string(const std::string& src, int* code = nullptr, bool json = false) {
  std::ostringstream out;
  RunOptions opts;
  opts.field = field();
  opts.json = json;
  opts.out = &out;
  int rc = run_script(parse_script(src), opts);
  if (code) *code = rc;
  return out.str();
}
}  // namespace

TEST_CASE("ground field descriptions") {
  GroundField g = parse_ground_field("F4(t)");
  CHECK(g.gf->p() == 2);
  CHECK(g.gf->m() == 2);
  CHECK(g.rational_ext);
  GroundField g2 = parse_ground_field("F9");
  CHECK(g2.gf->p() == 3);
  CHECK_FALSE(g2.rational_ext);
  CHECK_THROWS_AS(parse_ground_field("F7(t)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ground_field("Q"), std::invalid_argument);
}

TEST_CASE("parse and evaluate the reference examples") {
  int code = 0;
  // let-binding plus conjugation, evaluated through the words module.
  std::string out = run_to_string(
      "let u = e(10,x10)*e(13,x13); conj(u, e(1,1)*e(3,1))", &code);
  CHECK(code == 0);
  CHECK(out.find("e(1,1)") != std::string::npos);
  CHECK(out.find("e(11,x10)") != std::string::npos);

  // the limit computation
  out = run_to_string("limit(cochar(2,4,3,2), e(1,1)*e(3,1)*e(14,t^2))", &code);
  CHECK(code == 0);
  CHECK(out.find("e(1,1)*e(3,1)") != std::string::npos);
  CHECK(out.find("e(14") == std::string::npos);

  // no-limit is a value, not an error
  out = run_to_string("limit(cochar(2,4,3,2), e(-23,1))", &code);
  CHECK(code == 0);
  CHECK(out.find("no limit") != std::string::npos);

  // assertion from the spec: sqrt(t^2) = t is not a k-point
  out = run_to_string("assert not is_k(sqrt(t^2))", &code);
  CHECK(code == 0);

  // classification
  out = run_to_string("classify(cochar(2,4,3,2))", &code, false);
  CHECK(code == 0);
  CHECK(out.find("u_roots") != std::string::npos);
}

TEST_CASE("empty script") {
  Script sc = parse_script("");
  CHECK(sc.stmts().empty());
  int code = 0;
  run_to_string("", &code);
  CHECK(code == 0);
}

TEST_CASE("assertion failure sets the exit status") {
  int code = 0;
  run_to_string("assert is_k(t)", &code);
  CHECK(code == 1);
  run_to_string("assert not is_k(t^2)", &code);
  CHECK(code == 1);
  run_to_string("assert is_k(t^2)", &code);
  CHECK(code == 0);
}

TEST_CASE("evaluation errors carry the statement and set the exit status") {
  int code = 0;
  std::string out = run_to_string("e(1,1); unknown_fn(e(1,1))", &code);
  CHECK(code == 1);
  CHECK(out.find("statement 2") != std::string::npos);
  out = run_to_string("sqrt(t)", &code);
  CHECK(code == 1);
  out = run_to_string("let w1 = e(1,1); is_k(w1)", &code);
  CHECK(code == 1);
}

TEST_CASE("parse errors carry a location") {
  try {
    parse_script("let = 3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col >= 4);
  }
  CHECK_THROWS_AS(parse_script("e(1,"), ParseError);
  CHECK_THROWS_AS(parse_script("e(1,1"), ParseError);
  CHECK_THROWS_AS(parse_script("torus(1 2)"), ParseError);
  CHECK_THROWS_AS(parse_script("@"), ParseError);
}

TEST_CASE("parser totality: arbitrary input never crashes") {
  std::mt19937 gen(2024);
  const std::string alphabet = "en(),*+-/^;: coch ar let assert x13t2w\n\"@#";
  std::uniform_int_distribution<std::size_t> cd(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> ld(0, 60);
  for (int it = 0; it < 3000; ++it) {
    std::string src;
    int len = ld(gen);
    for (int i = 0; i < len; ++i) src += alphabet[cd(gen)];
    try {
      Script sc = parse_script(src);
      (void)sc.pretty();
    } catch (const ParseError&) {
      // located rejection is the expected outcome for garbage
    }
  }
}

TEST_CASE("pretty-print round trip is stable") {
  for (const char* src : {
           "let u = e(10,x10)*e(13,x13); conj(u, e(1,1)*e(3,1))",
           "limit(cochar(2,4,3,2), e(1,1)*e(3,1)*e(14,t^2))",
           "assert not is_k(sqrt(t^2))",
           "e(1,1)*n(13)*torus(2:w)*cochar(2,4,3,2;t)",
           "classify(cochar(2,4,3,2)); id",
       }) {
    Script once = parse_script(src);
    std::string printed = once.pretty();
    Script twice = parse_script(printed);
    CHECK(printed == twice.pretty());
  }
}

TEST_CASE("deterministic JSON output") {
  std::string src = "let u = e(10,x10); collect(u*e(13,t)); classify(cochar(2,4,3,2))";
  int c1 = 0, c2 = 0;
  std::string a = run_to_string(src, &c1, true);
  std::string b = run_to_string(src, &c2, true);
  CHECK(a == b);
  CHECK(c1 == c2);
  CHECK(a.find("\"results\"") != std::string::npos);
}

TEST_CASE("word expression helper for the CLI") {
  GroupWord w = parse_word("e(13,t^2)*n(13)", field());
  REQUIRE(w.factors().size() == 2);
  CHECK(std::get<RootFactor>(w.factors()[0]).root == 13);
  CHECK(std::get<WeylFactor>(w.factors()[1]).root == 13);
  CHECK_THROWS(parse_word("let u = e(1,1)", field()));
  Cocharacter lam = parse_cochar_coeffs("2,4,3,2", 4);
  CHECK(lam.coeffs == std::vector<int>({2, 4, 3, 2}));
  CHECK_THROWS(parse_cochar_coeffs("1,2", 4));
}

TEST_CASE("torus and cochar torus words evaluate") {
  int code = 0;
  std::string out = run_to_string("conj(torus(2:w), e(11,t))", &code);
  CHECK(code == 0);
  // <root 11, beta^vee> = -1: the parameter is scaled by w^{-1} = w+1... i.e. w^2.
  CHECK(out.find("e(11,") != std::string::npos);
  out = run_to_string("conj(cochar(2,4,3,2;t), e(13,1))", &code);
  CHECK(code == 0);
  CHECK(out.find("e(13,t^2)") != std::string::npos);  // weight 2
}

TEST_CASE("wordeq through the adjoint oracle") {
  int code = 0;
  run_to_string("assert wordeq(e(3,1)*e(1,1), e(1,1)*e(3,1))", &code);
  CHECK(code == 0);
  run_to_string("assert not wordeq(e(3,1), e(1,1))", &code);
  CHECK(code == 0);
}

TEST_CASE("fields without the rational extension reject t") {
  std::ostringstream out;
  RunOptions opts;
  opts.field = parse_ground_field("F4");
  opts.out = &out;
  int rc = run_script(parse_script("e(1,t)"), opts);
  CHECK(rc == 1);
  CHECK(out.str().find("rational extension") != std::string::npos);
  rc = run_script(parse_script("e(1,w)"), opts);
  CHECK(rc == 0);
}

TEST_CASE("repl basics") {
  std::istringstream in("let u = e(1,1)\nwordeq(u, e(1,1))\nexit\n");
  std::ostringstream out;
  RunOptions opts;
  opts.field = field();
  opts.out = &out;
  int rc = run_repl(opts, in);
  CHECK(rc == 0);
  CHECK(out.str().find("true") != std::string::npos);
}
