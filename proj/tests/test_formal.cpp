#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chevalg/fexpr.hpp"
#include "chevalg/formal.hpp"

using namespace chevalg;

namespace {
FormalPoly rand_poly(const GaloisField& f, std::mt19937& gen, const std::vector<int>& vars) {
  std::uniform_int_distribution<int> cd(0, f.q() - 1);
  std::uniform_int_distribution<int> nd(0, 3);
  std::uniform_int_distribution<std::size_t> vd(0, vars.size() - 1);
  FormalPoly p(f);
  int terms = nd(gen) + 1;
  for (int i = 0; i < terms; ++i) {
    FormalPoly term = FormalPoly::constant(
        RatFunc::constant(f, static_cast<GaloisField::Elem>(cd(gen))));
    int deg = nd(gen);
    for (int d = 0; d < deg; ++d) term = term * FormalPoly::variable(f, vars[vd(gen)]);
    p = p + term;
  }
  return p;
}
}  // namespace

TEST_CASE("ring axioms on random formal polynomials") {
  const auto& f = GaloisField::get(2, 2);
  std::vector<int> vars = {FormalVars::id("u1"), FormalVars::id("u2"), FormalVars::id("u3")};
  std::mt19937 gen(123);
  for (int it = 0; it < 150; ++it) {
    FormalPoly a = rand_poly(f, gen, vars);
    FormalPoly b = rand_poly(f, gen, vars);
    FormalPoly c = rand_poly(f, gen, vars);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == FormalPoly(f));
  }
}

TEST_CASE("substitution and evaluation agree") {
  const auto& f = GaloisField::get(2, 2);
  int x = FormalVars::id("sx");
  int y = FormalVars::id("sy");
  std::mt19937 gen(5);
  for (int it = 0; it < 60; ++it) {
    FormalPoly p = rand_poly(f, gen, {x, y});
    RatFunc vx = RatFunc::t(f) + RatFunc::from_int(f, it % 3);
    RatFunc vy = RatFunc::t(f) * RatFunc::t(f);
    RatFunc direct = p.eval({{x, vx}, {y, vy}});
    FormalPoly staged = p.subst(x, FormalPoly::constant(vx)).subst(y, FormalPoly::constant(vy));
    REQUIRE(staged.is_constant());
    CHECK(staged.constant_value() == direct);
  }
}

TEST_CASE("degrees and variable sets") {
  const auto& f = GaloisField::get(2, 2);
  int x = FormalVars::id("dx");
  int y = FormalVars::id("dy");
  FormalPoly p = FormalPoly::variable(f, x).pow(2) * FormalPoly::variable(f, y) +
                 FormalPoly::variable(f, x);
  CHECK(p.degree_in(x) == 2);
  CHECK(p.degree_in(y) == 1);
  CHECK(p.total_degree() == 3);
  CHECK(p.vars() == std::set<int>({x, y}));
  CHECK_FALSE(p.is_constant());
}

TEST_CASE("char-2 cancellation in the formal ring") {
  const auto& f = GaloisField::get(2, 2);
  FormalPoly x = FormalPoly::variable(f, "cx");
  CHECK((x + x).is_zero());
  CHECK((x.pow(2) + x * x).is_zero());
  // Frobenius: (x + y)^2 = x^2 + y^2.
  FormalPoly y = FormalPoly::variable(f, "cy");
  CHECK((x + y).pow(2) == x.pow(2) + y.pow(2));
}

TEST_CASE("field expression parsing round trips") {
  const auto& f = GaloisField::get(2, 2);
  for (const char* src : {"t^2/(t^2+1)", "x10", "w+1", "t*(t+1)", "x21^2+t^2", "(w+1)*t^2",
                          "1", "0", "t^2+w*t"}) {
    FormalPoly p = parse_field_expr(f, src);
    FormalPoly q = parse_field_expr(f, p.to_string());
    CHECK(p == q);
  }
}

TEST_CASE("field expression errors") {
  const auto& f = GaloisField::get(2, 2);
  CHECK_THROWS_AS(parse_field_expr(f, "t +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field_expr(f, "(t"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field_expr(f, "t/x10"), std::invalid_argument);  // formal divisor
  CHECK_THROWS_AS(parse_field_expr(f, "t/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat_func(f, "x10"), std::invalid_argument);      // not constant
  CHECK_THROWS_AS(parse_field_expr(GaloisField::get(2, 1), "w"), std::invalid_argument);
}

TEST_CASE("negative constant powers") {
  const auto& f = GaloisField::get(2, 2);
  FormalPoly p = parse_field_expr(f, "t^-2");
  REQUIRE(p.is_constant());
  CHECK(p.constant_value() == RatFunc::t(f).pow(-2));
}
