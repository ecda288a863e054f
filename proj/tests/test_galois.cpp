#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chevalg/galois.hpp"

using namespace chevalg;

TEST_CASE("prime field arithmetic") {
  const auto& f5 = GaloisField::get(5);
  CHECK(f5.q() == 5);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.neg(2) == 3);
  CHECK(f5.inv(3) == 2);
  CHECK_THROWS_AS(f5.inv(0), std::domain_error);
}

TEST_CASE("F4 has an element of order 3") {
  const auto& f4 = GaloisField::get(2, 2);
  CHECK(f4.q() == 4);
  auto b = f4.generator();
  CHECK(b != f4.one());
  CHECK(f4.mul(f4.mul(b, b), b) == f4.one());
  CHECK(f4.mul(b, b) != f4.one());
}

TEST_CASE("field axioms on random elements") {
  for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
    const auto& f = GaloisField::get(p, m);
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> d(0, f.q() - 1);
    for (int it = 0; it < 300; ++it) {
      auto a = static_cast<GaloisField::Elem>(d(gen));
      auto b = static_cast<GaloisField::Elem>(d(gen));
      auto c = static_cast<GaloisField::Elem>(d(gen));
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == f.zero());
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
      // Frobenius inverse really is the p-th root.
      CHECK(f.pow(f.pth_root(a), p) == a);
    }
  }
}

TEST_CASE("generator has full order") {
  for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
    const auto& f = GaloisField::get(p, m);
    auto g = f.generator();
    int ord = 0;
    GaloisField::Elem x = f.one();
    do {
      x = f.mul(x, g);
      ++ord;
    } while (x != f.one());
    CHECK(ord == f.q() - 1);
  }
}
