#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "chevalg/chevlie.hpp"
#include "chevalg/words.hpp"

using namespace chevalg;

namespace {

const RootSystem& f4() {
  static RootSystem rs = RootSystem::build("F4");
  return rs;
}
const ChevalleyData& f4c() {
  static ChevalleyData c(f4());
  return c;
}

RatFunc rand_rf(const GaloisField& f, std::mt19937& gen) {
  std::uniform_int_distribution<int> cd(0, f.q() - 1);
  std::vector<GaloisField::Elem> c(3);
  for (auto& e : c) e = static_cast<GaloisField::Elem>(cd(gen));
  return RatFunc(Poly(f, c), Poly::constant(f, 1));
}

}  // namespace

TEST_CASE("Jacobi identity holds on the integral basis") {
  CHECK(f4c().jacobi_holds());
  RootSystem b3 = RootSystem::build("B3");
  CHECK(ChevalleyData(b3).jacobi_holds());
  RootSystem g2 = RootSystem::build("G2");
  CHECK(ChevalleyData(g2).jacobi_holds());
  RootSystem a2 = RootSystem::build("A2");
  CHECK(ChevalleyData(a2).jacobi_holds());
}

TEST_CASE("structure constants: chain lengths, antisymmetry, negation") {
  const auto& chev = f4c();
  const auto& rs = f4();
  int np = rs.num_positive();
  int defined = 0;
  for (int a = -np; a <= np; ++a) {
    if (a == 0) continue;
    for (int b = -np; b <= np; ++b) {
      if (b == 0 || b == a || b == -a) continue;
      auto n = chev.N(a, b);
      if (!rs.sum(a, b)) {
        CHECK_FALSE(n.has_value());
        continue;
      }
      ++defined;
      REQUIRE(n.has_value());
      CHECK(std::abs(*n) == chev.chain_down(a, b) + 1);
      CHECK(*chev.N(b, a) == -*n);
      CHECK(*chev.N(-a, -b) == -*n);
    }
  }
  CHECK(defined > 0);
}

TEST_CASE("extraspecial pairs carry positive signs") {
  const auto& chev = f4c();
  const auto& rs = f4();
  for (int g = 1; g <= rs.num_positive(); ++g) {
    if (rs.height(g) == 1) continue;
    // The decomposition with the smallest first label.
    for (int e = 1; e <= rs.num_positive(); ++e) {
      auto h = rs.sum(g, -e);
      if (h && *h > 0) {
        CHECK(*chev.N(e, *h) > 0);
        break;
      }
    }
  }
}

TEST_CASE("reflection equivariance of |N|") {
  const auto& chev = f4c();
  const auto& rs = f4();
  int np = rs.num_positive();
  for (int xi : {1, 2, 3, 17}) {
    for (int a = -np; a <= np; ++a) {
      if (a == 0) continue;
      for (int b = -np; b <= np; ++b) {
        if (b == 0 || b == a || b == -a) continue;
        if (!rs.sum(a, b)) continue;
        int sa = rs.reflect(xi, a), sb = rs.reflect(xi, b);
        REQUIRE(rs.sum(sa, sb).has_value());
        CHECK(std::abs(*chev.N(sa, sb)) == std::abs(*chev.N(a, b)));
      }
    }
  }
}

TEST_CASE("reference values: N(3,17) and absent pairs") {
  const auto& chev = f4c();
  const auto& rs = f4();
  // 3 + 17 = (0,0,1,1) = root 18.
  CHECK(rs.sum(3, 17) == 18);
  REQUIRE(chev.N(3, 17).has_value());
  CHECK(std::abs(*chev.N(3, 17)) == 1);
  // 1 + 3 is not a root: no constant.
  CHECK_FALSE(rs.sum(1, 3).has_value());
  CHECK_FALSE(chev.N(1, 3).has_value());
}

TEST_CASE("commutator coefficients for the pair (21, 1)") {
  const auto& chev = f4c();
  // Oracle: enumerate i*21 + j*1 in the root list directly.
  const auto& rs = f4();
  std::set<std::pair<int, int>> expect;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      std::vector<int> c(4);
      for (int k = 0; k < 4; ++k)
        c[k] = i * rs.root(21).coeffs[k] + j * rs.root(1).coeffs[k];
      if (rs.label_of(c)) expect.insert({i, j});
    }
  CHECK(expect == std::set<std::pair<int, int>>({{1, 1}, {2, 1}}));

  const auto& terms = chev.comm_terms(21, 1);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].i == 1);
  CHECK(terms[0].j == 1);
  CHECK(terms[0].root == 22);
  CHECK(std::abs(terms[0].coeff) == 1);
  CHECK(terms[1].i == 2);
  CHECK(terms[1].j == 1);
  CHECK(terms[1].root == 14);
  CHECK(std::abs(terms[1].coeff) == 1);  // the quadratic term survives char 2
}

TEST_CASE("commutator coefficients stay within the Chevalley bounds") {
  for (const char* type : {"F4", "G2", "B3"}) {
    RootSystem rs = RootSystem::build(type);
    ChevalleyData chev(rs);
    int np = rs.num_positive();
    for (int a = -np; a <= np; ++a) {
      if (a == 0) continue;
      for (int b = -np; b <= np; ++b) {
        if (b == 0 || b == a || b == -a) continue;
        for (const auto& t : chev.comm_terms(a, b)) {
          CHECK(std::abs(t.coeff) >= 1);
          CHECK(std::abs(t.coeff) <= 3);
        }
      }
    }
  }
}

// The key convention test: the reorder identity
//   eps_a(x) eps_b(y) = eps_b(y) eps_a(x) [eps_a(x), eps_b(y)]
// checked through the adjoint representation over odd-characteristic fields,
// where every sign is visible.
TEST_CASE("commutator expansion matches the adjoint oracle") {
  for (auto [type, p] : {std::pair<const char*, int>{"F4", 3},
                         {"F4", 2},
                         {"G2", 5},
                         {"G2", 3},
                         {"B3", 5}}) {
    RootSystem rs = RootSystem::build(type);
    ChevalleyData chev(rs);
    const GaloisField& f = GaloisField::get(p, 1);
    std::mt19937 gen(42 + p);
    std::uniform_int_distribution<int> rd(1, rs.num_positive());
    std::uniform_int_distribution<int> sd(0, 1);
    int checked = 0;
    for (int it = 0; it < 200 && checked < 60; ++it) {
      int a = rd(gen) * (sd(gen) ? 1 : -1);
      int b = rd(gen) * (sd(gen) ? 1 : -1);
      if (a == b || a == -b) continue;
      FormalPoly x = FormalPoly::constant(rand_rf(f, gen));
      FormalPoly y = FormalPoly::constant(rand_rf(f, gen));
      GroupWord lhs = GroupWord::root_elem(a, x) * GroupWord::root_elem(b, y);
      GroupWord rhs = GroupWord::root_elem(b, y) * GroupWord::root_elem(a, x) *
                      commutator_expansion(chev, b, y, a, x);
      CHECK(words_equal_ad(chev, f, lhs, rhs));
      ++checked;
    }
    CHECK(checked >= 50);
  }
}

TEST_CASE("commutator expansion rejects alpha = +-beta") {
  const auto& chev = f4c();
  const GaloisField& f = GaloisField::get(2, 2);
  FormalPoly one = FormalPoly::from_int(f, 1);
  CHECK_THROWS_AS(commutator_expansion(chev, 5, one, 5, one), std::invalid_argument);
  CHECK_THROWS_AS(commutator_expansion(chev, 5, one, -5, one), std::invalid_argument);
}

TEST_CASE("commuting pair gives the empty word") {
  const auto& chev = f4c();
  const GaloisField& f = GaloisField::get(2, 2);
  // 1 + 3 is not a root and no i*1 + j*3 is: the commutator is trivial.
  GroupWord w = commutator_expansion(chev, 1, FormalPoly::from_int(f, 1), 3,
                                     FormalPoly::from_int(f, 1));
  CHECK(w.empty());
}

TEST_CASE("divided powers are integral and nilpotent") {
  const auto& chev = f4c();
  for (int lab : {1, 13, 21, -5, -24}) {
    int n = chev.nilpotency_degree(lab);
    CHECK(n >= 2);
    CHECK(n <= 5);
    CHECK(chev.ad_divided_power(lab, n).empty());
    CHECK_FALSE(chev.ad_divided_power(lab, n - 1).empty());
  }
}

TEST_CASE("Weyl representative signs match the adjoint action") {
  for (auto [type, p] : {std::pair<const char*, int>{"F4", 3}, {"B3", 5}}) {
    RootSystem rs = RootSystem::build(type);
    ChevalleyData chev(rs);
    const GaloisField& f = GaloisField::get(p, 1);
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> rd(1, rs.num_positive());
    for (int it = 0; it < 25; ++it) {
      int xi = rd(gen);
      int zeta = rd(gen) * (it % 2 ? 1 : -1);
      RatFunc c = rand_rf(f, gen);
      if (c.is_zero()) continue;
      GroupWord w = GroupWord::root_elem(zeta, FormalPoly::constant(c));
      GroupWord conj = GroupWord::weyl_elem(xi) * w * GroupWord::weyl_elem(xi).inverse();
      GroupWord mapped = conj_by_weyl(chev, xi, w);
      CHECK(words_equal_ad(chev, f, conj, mapped));
      GroupWord conj_inv = GroupWord::weyl_elem(xi).inverse() * w * GroupWord::weyl_elem(xi);
      GroupWord mapped_inv = conj_by_weyl(chev, xi, w, /*inverse=*/true);
      CHECK(words_equal_ad(chev, f, conj_inv, mapped_inv));
    }
  }
}

TEST_CASE("group/Lie compatibility: first-order conjugation is the bracket") {
  // The coefficient of s*y at root a+b in eps_a(s) eps_b(y) eps_a(s)^{-1}
  // equals N_{a,b}; visible over an odd-characteristic field.
  const GaloisField& f = GaloisField::get(5, 1);
  RootSystem rs = RootSystem::build("F4");
  ChevalleyData chev(rs);
  CollectContext ctx;
  ctx.chev = &chev;
  Cocharacter lam = coroot_cochar(rs, 13);
  ctx.grading = lam;
  FormalPoly s = FormalPoly::variable(f, "lin_s");
  FormalPoly y = FormalPoly::variable(f, "lin_y");
  Monomial sy = Monomial::var(FormalVars::id("lin_s")) * Monomial::var(FormalVars::id("lin_y"));
  int checked = 0;
  for (auto [a, b] : {std::pair{17, 3}, {10, 1}, {13, 3}, {20, 3}, {21, 1}}) {
    auto sum = rs.sum(a, b);
    REQUIRE(sum.has_value());
    GroupWord conj = conj_by_unipotent(chev, GroupWord::root_elem(a, s),
                                       GroupWord::root_elem(b, y), ctx);
    CollectedWord c = collect(conj, ctx);
    auto param = c.param_of(*sum);
    long long n = *chev.N(a, b);
    RatFunc coeff = param ? param->coeff(sy) : RatFunc(f);
    CHECK(coeff == RatFunc::from_int(f, n));
    ++checked;
  }
  CHECK(checked == 5);
}

TEST_CASE("structure constant JSON export") {
  auto j = f4c().to_json();
  CHECK(j["type"] == "F4");
  CHECK(j["N"].size() > 0);
  CHECK(j["commutator_coefficients"].size() > 0);
  // Every exported N entry matches the table.
  for (const auto& e : j["N"]) {
    auto n = f4c().N(e["a"].get<int>(), e["b"].get<int>());
    REQUIRE(n.has_value());
    CHECK(*n == e["N"].get<long long>());
  }
}

TEST_CASE("n_xi on its own root element flips the root") {
  const auto& chev = f4c();
  const GaloisField& f = GaloisField::get(2, 2);
  for (int xi = 1; xi <= 24; ++xi) {
    GroupWord w = GroupWord::root_elem(xi, FormalPoly::constant(RatFunc::t(f)));
    GroupWord img = conj_by_weyl(chev, xi, w);
    REQUIRE(img.factors().size() == 1);
    CHECK(std::get<RootFactor>(img.factors()[0]).root == -xi);
  }
}
