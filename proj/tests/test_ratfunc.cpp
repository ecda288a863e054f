#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chevalg/ratfunc.hpp"

using namespace chevalg;

namespace {

RatFunc random_rf(const GaloisField& f, std::mt19937& gen, int max_deg = 3) {
  std::uniform_int_distribution<int> cd(0, f.q() - 1);
  std::uniform_int_distribution<int> dd(0, max_deg);
  auto poly = [&]() {
    std::vector<GaloisField::Elem> c(dd(gen) + 1);
    for (auto& e : c) e = static_cast<GaloisField::Elem>(cd(gen));
    return Poly(f, c);
  };
  Poly num = poly();
  Poly den(f);
  do {
    den = poly();
  } while (den.is_zero());
  return RatFunc(num, den);
}

}  // namespace

TEST_CASE("basic identities over F2(t)") {
  const auto& f = GaloisField::get(2);
  RatFunc t = RatFunc::t(f);
  RatFunc one = RatFunc::from_int(f, 1);
  // (t/(t+1)) * ((t+1)/t) = 1
  RatFunc x = t / (t + one);
  RatFunc y = (t + one) / t;
  CHECK(x * y == one);
  // char-2 cancellation
  CHECK(t * t + t * t == RatFunc(f));
}

TEST_CASE("b^3 = 1 in F4(t)") {
  const auto& f = GaloisField::get(2, 2);
  RatFunc b = RatFunc::constant(f, f.generator());
  CHECK(b * b * b == RatFunc::from_int(f, 1));
  CHECK(b != RatFunc::from_int(f, 1));
}

TEST_CASE("canonical form and field axioms randomized") {
  for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
    const auto& f = GaloisField::get(p, m);
    std::mt19937 gen(11);
    for (int it = 0; it < 200; ++it) {
      RatFunc a = random_rf(f, gen), b = random_rf(f, gen), c = random_rf(f, gen);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == RatFunc(f));
      if (!a.is_zero()) CHECK(a * a.inv() == RatFunc::from_int(f, 1));
      // canonical invariants
      CHECK(a.den().leading() == f.one());
      CHECK(Poly::gcd(a.num(), a.den()).degree() <= 0);
    }
  }
}

TEST_CASE("k = F_q(t^2) membership") {
  const auto& f = GaloisField::get(2, 2);
  RatFunc t = RatFunc::t(f);
  CHECK(is_k_point(t * t));            // a = t^2
  CHECK_FALSE(is_k_point(t));          // sqrt(a)
  CHECK(is_k_point(RatFunc(f)));       // zero
  CHECK(is_k_point(RatFunc::from_int(f, 1)));

  std::mt19937 gen(3);
  for (int it = 0; it < 200; ++it) {
    RatFunc x = random_rf(f, gen);
    CHECK(is_k_point(x * x));  // Frobenius image lies in k
  }
}

TEST_CASE("k is a subfield: closed under add, mul, inv") {
  const auto& f = GaloisField::get(2, 2);
  std::mt19937 gen(5);
  for (int it = 0; it < 200; ++it) {
    RatFunc x = random_rf(f, gen) * random_rf(f, gen);
    x = x * x;  // in k
    RatFunc y = random_rf(f, gen);
    y = y * y;
    CHECK(is_k_point(x + y));
    CHECK(is_k_point(x * y));
    if (!x.is_zero()) CHECK(is_k_point(x.inv()));
  }
}

TEST_CASE("square roots in characteristic 2") {
  const auto& f = GaloisField::get(2, 2);
  RatFunc t = RatFunc::t(f);
  CHECK(sqrt_char2(t * t) == t);
  CHECK_FALSE(sqrt_char2(t).has_value());
  CHECK(sqrt_char2(RatFunc::from_int(f, 1)) == RatFunc::from_int(f, 1));

  std::mt19937 gen(9);
  for (int it = 0; it < 200; ++it) {
    RatFunc x = random_rf(f, gen);
    auto r = sqrt_char2(x * x);
    REQUIRE(r.has_value());
    CHECK(*r * *r == x * x);
    // k-points always have a root in K (F_q perfect).
    if (is_k_point(x)) CHECK(sqrt_char2(x).has_value());
  }
}

TEST_CASE("sqrt and is_k reject odd characteristic") {
  const auto& f3 = GaloisField::get(3);
  CHECK_THROWS_AS(is_k_point(RatFunc::t(f3)), std::domain_error);
  CHECK_THROWS_AS(sqrt_char2(RatFunc::t(f3)), std::domain_error);
}
