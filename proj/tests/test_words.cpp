#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

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
const GaloisField& gf4() { return GaloisField::get(2, 2); }

FormalPoly fp_int(long long v) { return FormalPoly::from_int(gf4(), v); }
FormalPoly fp_t() { return FormalPoly::constant(RatFunc::t(gf4())); }

CollectContext positive_ctx() {
  CollectContext ctx;
  ctx.chev = &f4c();
  std::set<int> pos;
  for (int i = 1; i <= 24; ++i) pos.insert(i);
  ctx.allowed = pos;
  return ctx;
}

CollectContext graded_ctx() {
  CollectContext ctx;
  ctx.chev = &f4c();
  ctx.grading = coroot_cochar(f4(), 13);
  return ctx;
}

RatFunc rand_poly(const GaloisField& f, std::mt19937& gen, int max_deg = 2) {
  std::uniform_int_distribution<int> cd(0, f.q() - 1);
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::vector<GaloisField::Elem> c(dd(gen) + 1);
  for (auto& e : c) e = static_cast<GaloisField::Elem>(cd(gen));
  return RatFunc(Poly(f, c), Poly::constant(f, 1));
}

GroupWord rand_word(std::mt19937& gen, const std::vector<int>& roots, int lo, int hi) {
  std::uniform_int_distribution<int> ld(lo, hi);
  std::uniform_int_distribution<std::size_t> rd(0, roots.size() - 1);
  GroupWord w;
  int len = ld(gen);
  for (int i = 0; i < len; ++i)
    w = w * GroupWord::root_elem(roots[rd(gen)], FormalPoly::constant(rand_poly(gf4(), gen)));
  return w;
}

}  // namespace

TEST_CASE("collect: simple swap with empty chain") {
  // eps3(1) eps1(1) -> eps1(1) eps3(1); 1 + 3 is not a root, so no tail.
  GroupWord w = GroupWord::root_elem(3, fp_int(1)) * GroupWord::root_elem(1, fp_int(1));
  CollectedWord c = collect(w, positive_ctx());
  REQUIRE(c.factors.size() == 2);
  CHECK(c.factors[0].root == 1);
  CHECK(c.factors[1].root == 3);
  CHECK_FALSE(c.torus.has_value());
  CHECK(words_equal_ad(f4c(), gf4(), w, c.to_word()));
}

TEST_CASE("collect: empty word") {
  CollectedWord c = collect(GroupWord::identity(), positive_ctx());
  CHECK(c.factors.empty());
  CHECK_FALSE(c.torus.has_value());
}

TEST_CASE("collect: zero parameters vanish and equal roots merge") {
  GroupWord w = GroupWord::root_elem(5, fp_t()) * GroupWord::root_elem(5, fp_t()) *
                GroupWord::root_elem(7, FormalPoly(gf4()));
  CollectedWord c = collect(w, positive_ctx());
  CHECK(c.factors.empty());  // t + t = 0 in characteristic 2
}

TEST_CASE("collect: the reference conjugation identity") {
  // u eps1(1) eps3(1) u^{-1} with u = eps10 eps13 eps16 eps17 eps20 eps21 eps24
  // collects to eps1(1) eps3(1) eps11(x10) eps14(x21^2) eps18(x17) eps22(x20+x21).
  auto xv = [&](int i) { return FormalPoly::variable(gf4(), "x" + std::to_string(i)); };
  GroupWord u;
  for (int i : {10, 13, 16, 17, 20, 21, 24}) u = u * GroupWord::root_elem(i, xv(i));
  GroupWord base = GroupWord::root_elem(1, fp_int(1)) * GroupWord::root_elem(3, fp_int(1));
  CollectedWord got = collect(u * base * u.inverse(), graded_ctx());

  REQUIRE(got.factors.size() == 6);
  CHECK(got.factors[0].root == 1);
  CHECK(got.factors[1].root == 3);
  CHECK(got.factors[2].root == 11);
  CHECK(got.factors[2].param == xv(10));
  CHECK(got.factors[3].root == 14);
  CHECK(got.factors[3].param == xv(21).pow(2));
  CHECK(got.factors[4].root == 18);
  CHECK(got.factors[4].param == xv(17));
  CHECK(got.factors[5].root == 22);
  CHECK(got.factors[5].param == xv(20) + xv(21));
}

TEST_CASE("collect: torus factors normalize to the front") {
  TorusFactor s;
  s.set(1, RatFunc::constant(gf4(), gf4().generator()));  // beta^vee(b)
  GroupWord w = GroupWord::root_elem(10, fp_t()) * GroupWord::torus_elem(s) *
                GroupWord::root_elem(11, fp_t());
  CollectedWord c = collect(w, graded_ctx());
  REQUIRE(c.torus.has_value());
  CHECK(*c.torus == s);
  CHECK(words_equal_ad(f4c(), gf4(), w, c.to_word()));
}

TEST_CASE("collect: opposite roots are indeterminate") {
  GroupWord w = GroupWord::root_elem(2, fp_t()) * GroupWord::root_elem(-2, fp_t());
  CollectContext ctx;
  ctx.chev = &f4c();
  // In the graded context both +-2 sit in the Levi bucket and must cross.
  ctx.grading = coroot_cochar(f4(), 13);
  CHECK_THROWS_AS(collect(w, ctx), CollectError);
}

TEST_CASE("collect: factors outside the declared set are rejected") {
  GroupWord w = GroupWord::root_elem(-5, fp_t());
  CHECK_THROWS_AS(collect(w, positive_ctx()), std::invalid_argument);
  // A declared set that is not closed under addition is rejected.
  CollectContext bad;
  bad.chev = &f4c();
  bad.allowed = std::set<int>({3, 17});  // 3 + 17 = 18 escapes
  CHECK_THROWS_AS(collect(GroupWord::root_elem(3, fp_t()), bad), std::invalid_argument);
}

TEST_CASE("collection confluence on random unipotent words") {
  std::vector<int> uroots;
  for (int i = 10; i <= 24; ++i) uroots.push_back(i);
  CollectContext left, right;
  left.chev = right.chev = &f4c();
  left.allowed = right.allowed = std::set<int>(uroots.begin(), uroots.end());
  right.rightmost = true;
  std::mt19937 gen(99);
  for (int it = 0; it < 300; ++it) {
    GroupWord w = rand_word(gen, uroots, 4, 12);
    CHECK(collect(w, left) == collect(w, right));
  }
  // Same over the positive roots of B3.
  RootSystem b3 = RootSystem::build("B3");
  ChevalleyData cb3(b3);
  std::vector<int> b3pos;
  for (int i = 1; i <= b3.num_positive(); ++i) b3pos.push_back(i);
  CollectContext l3, r3;
  l3.chev = r3.chev = &cb3;
  l3.allowed = r3.allowed = std::set<int>(b3pos.begin(), b3pos.end());
  r3.rightmost = true;
  for (int it = 0; it < 300; ++it) {
    GroupWord w = rand_word(gen, b3pos, 4, 12);
    CHECK(collect(w, l3) == collect(w, r3));
  }
}

TEST_CASE("collected words agree with the adjoint representation") {
  std::vector<int> uroots;
  for (int i = 10; i <= 24; ++i) uroots.push_back(i);
  auto ctx = positive_ctx();
  std::mt19937 gen(7);
  for (int it = 0; it < 30; ++it) {
    GroupWord w = rand_word(gen, uroots, 3, 10);
    CHECK(words_equal_ad(f4c(), gf4(), w, collect(w, ctx).to_word()));
  }
}

TEST_CASE("conjugation operators are homomorphisms after collection") {
  std::vector<int> uroots;
  for (int i = 10; i <= 24; ++i) uroots.push_back(i);
  auto pctx = positive_ctx();
  std::mt19937 gen(13);
  TorusFactor s;
  s.set(1, RatFunc::constant(gf4(), gf4().generator()));
  for (int it = 0; it < 40; ++it) {
    GroupWord w1 = rand_word(gen, uroots, 2, 6);
    GroupWord w2 = rand_word(gen, uroots, 2, 6);
    // torus
    CHECK(collect(conj_by_torus(f4c(), s, w1 * w2), pctx) ==
          collect(conj_by_torus(f4c(), s, w1) * conj_by_torus(f4c(), s, w2), pctx));
    // weyl representative on the Levi root 2 maps U to itself up to signs;
    // compare through the adjoint.
    CHECK(words_equal_ad(f4c(), gf4(), conj_by_weyl(f4c(), 2, w1 * w2),
                         conj_by_weyl(f4c(), 2, w1) * conj_by_weyl(f4c(), 2, w2)));
    // unipotent
    GroupWord u = rand_word(gen, uroots, 1, 3);
    auto gctx = graded_ctx();
    CHECK(collect(conj_by_unipotent(f4c(), u, w1 * w2, gctx), gctx) ==
          collect(conj_by_unipotent(f4c(), u, w1, gctx) *
                      conj_by_unipotent(f4c(), u, w2, gctx),
                  gctx));
  }
}

TEST_CASE("Weyl and torus conjugation are compatible") {
  // n_xi s n_xi^{-1} = s_xi(s), so conj_by_weyl(xi) after conj_by_torus(s)
  // equals conj_by_torus(s_xi(s)) after conj_by_weyl(xi).
  std::mt19937 gen(17);
  std::vector<int> uroots;
  for (int i = 10; i <= 24; ++i) uroots.push_back(i);
  TorusFactor s;
  s.set(1, RatFunc::constant(gf4(), gf4().generator()));
  s.set(2, RatFunc::t(gf4()));
  for (int xi : {2, 5, 13}) {
    // transform s by the reflection
    const auto& R = f4c().coroot_reflection(xi);
    TorusFactor s_ref;
    for (int j = 0; j < 4; ++j) {
      RatFunc v = RatFunc::from_int(gf4(), 1);
      for (auto& [i, ti] : s.values) v = v * ti.pow(R[j][i]);
      if (!v.is_one()) s_ref.set(j, v);
    }
    for (int it = 0; it < 10; ++it) {
      GroupWord w = rand_word(gen, uroots, 2, 5);
      GroupWord lhs = conj_by_weyl(f4c(), xi, conj_by_torus(f4c(), s, w));
      GroupWord rhs = conj_by_torus(f4c(), s_ref, conj_by_weyl(f4c(), xi, w));
      CHECK(words_equal_ad(f4c(), gf4(), lhs, rhs));
    }
  }
}

TEST_CASE("conj_by_weyl: the reference computation") {
  // n13^{-1} . (eps18(1) eps-5(sqrt a)) = eps-23(1) eps-5(sqrt a), a = t^2.
  RatFunc sqrt_a = RatFunc::t(gf4());
  GroupWord w = GroupWord::root_elem(18, fp_int(1)) *
                GroupWord::root_elem(-5, FormalPoly::constant(sqrt_a));
  GroupWord img = conj_by_weyl(f4c(), 13, w, /*inverse=*/true);
  REQUIRE(img.factors().size() == 2);
  CHECK(std::get<RootFactor>(img.factors()[0]).root == -23);
  CHECK(std::get<RootFactor>(img.factors()[0]).param == fp_int(1));
  CHECK(std::get<RootFactor>(img.factors()[1]).root == -5);
  CHECK(std::get<RootFactor>(img.factors()[1]).param == FormalPoly::constant(sqrt_a));
}

TEST_CASE("conj_by_weyl applied twice is the identity in characteristic 2") {
  std::mt19937 gen(23);
  std::vector<int> all;
  for (int i = 1; i <= 24; ++i) {
    all.push_back(i);
    all.push_back(-i);
  }
  for (int it = 0; it < 30; ++it) {
    GroupWord w = rand_word(gen, all, 1, 4);
    GroupWord twice = conj_by_weyl(f4c(), 13, conj_by_weyl(f4c(), 13, w));
    CHECK(words_equal_ad(f4c(), gf4(), w, twice));
  }
}

TEST_CASE("conj_by_weyl rejects Weyl factors in the input") {
  GroupWord w = GroupWord::weyl_elem(5);
  CHECK_THROWS_AS(conj_by_weyl(f4c(), 13, w), std::invalid_argument);
}

TEST_CASE("conj_by_torus examples") {
  TorusFactor s;
  s.set(1, RatFunc::constant(gf4(), gf4().generator()));  // beta^vee(b)
  // <root 10, beta^vee> = 0: fixed.
  GroupWord w10 = GroupWord::root_elem(10, fp_t());
  CHECK(collect(conj_by_torus(f4c(), s, w10), positive_ctx()) ==
        collect(w10, positive_ctx()));
  // <root 11, beta^vee> = -1: parameter scales by b^{-1}.
  GroupWord w11 = GroupWord::root_elem(11, fp_t());
  GroupWord img = conj_by_torus(f4c(), s, w11);
  RatFunc binv = RatFunc::constant(gf4(), gf4().inv(gf4().generator()));
  CHECK(std::get<RootFactor>(img.factors()[0]).param ==
        FormalPoly::constant(RatFunc::t(gf4()) * binv));
  // zero parameter: the factor is the identity and stays the identity.
  GroupWord zero = GroupWord::root_elem(11, FormalPoly(gf4()));
  CHECK(conj_by_torus(f4c(), s, zero).empty());
}

TEST_CASE("conj_by_unipotent examples") {
  auto gctx = graded_ctx();
  GroupWord w = GroupWord::root_elem(1, fp_int(1));
  // identity conjugator
  CHECK(collect(conj_by_unipotent(f4c(), GroupWord::identity(), w, gctx), gctx) ==
        collect(w, gctx));
  // single factor u = eps21(x): yields eps1(1) eps14(x^2) eps22(x).
  FormalPoly x = FormalPoly::variable(gf4(), "cx21");
  GroupWord u = GroupWord::root_elem(21, x);
  CollectedWord got = collect(conj_by_unipotent(f4c(), u, w, gctx), gctx);
  REQUIRE(got.factors.size() == 3);
  CHECK(got.factors[0].root == 1);
  CHECK(got.factors[1].root == 14);
  CHECK(got.factors[1].param == x.pow(2));
  CHECK(got.factors[2].root == 22);
  CHECK(got.factors[2].param == x);
}

TEST_CASE("take_limit examples") {
  const auto& chev = f4c();
  Cocharacter lam = coroot_cochar(f4(), 13);
  RatFunc a = RatFunc::t(gf4()).pow(2);
  // eps1(1) eps3(1) eps14(a) -> eps1(1) eps3(1)
  GroupWord v = GroupWord::root_elem(1, fp_int(1)) * GroupWord::root_elem(3, fp_int(1)) *
                GroupWord::root_elem(14, FormalPoly::constant(a));
  auto lim = take_limit(chev, lam, v);
  REQUIRE(lim.has_value());
  GroupWord expect = GroupWord::root_elem(1, fp_int(1)) * GroupWord::root_elem(3, fp_int(1));
  CHECK(collect(*lim, graded_ctx()) == collect(expect, graded_ctx()));
  // torus factors are fixed
  TorusFactor s;
  s.set(1, RatFunc::constant(gf4(), gf4().generator()));
  auto lim2 = take_limit(chev, lam, GroupWord::torus_elem(s));
  REQUIRE(lim2.has_value());
  CHECK(collect(*lim2, graded_ctx()) == collect(GroupWord::torus_elem(s), graded_ctx()));
  // negative weight: no limit
  CHECK_FALSE(take_limit(chev, lam, GroupWord::root_elem(-23, fp_int(1))).has_value());
}

TEST_CASE("take_limit is idempotent and multiplicative") {
  const auto& chev = f4c();
  Cocharacter lam = coroot_cochar(f4(), 13);
  std::mt19937 gen(31);
  std::vector<int> proots;
  for (int i = 1; i <= 24; ++i) proots.push_back(i);
  auto gctx = graded_ctx();
  for (int it = 0; it < 40; ++it) {
    GroupWord w1 = rand_word(gen, proots, 1, 5);
    GroupWord w2 = rand_word(gen, proots, 1, 5);
    auto l1 = take_limit(chev, lam, w1);
    auto l2 = take_limit(chev, lam, w2);
    auto l12 = take_limit(chev, lam, w1 * w2);
    REQUIRE(l1.has_value());
    REQUIRE(l2.has_value());
    REQUIRE(l12.has_value());
    // idempotent
    auto ll = take_limit(chev, lam, *l1);
    REQUIRE(ll.has_value());
    CHECK(collect(*ll, gctx) == collect(*l1, gctx));
    // multiplicative
    CHECK(collect(*l12, gctx) == collect(*l1 * *l2, gctx));
  }
}

TEST_CASE("in_parabolic examples") {
  const auto& chev = f4c();
  Cocharacter lam = coroot_cochar(f4(), 13);
  RatFunc sqrt_a = RatFunc::t(gf4());
  GroupWord bad = GroupWord::root_elem(-23, fp_int(1)) *
                  GroupWord::root_elem(-5, FormalPoly::constant(sqrt_a));
  CHECK_FALSE(in_parabolic(chev, bad, lam));
  auto an = in_parabolic_analysis(chev, bad, lam);
  CHECK(an.certain);
  GroupWord good = GroupWord::root_elem(18, fp_int(1)) *
                   GroupWord::root_elem(-5, FormalPoly::constant(sqrt_a));
  CHECK(in_parabolic(chev, good, lam));
  std::mt19937 gen(37);
  std::vector<int> uroots;
  for (int i = 10; i <= 24; ++i) uroots.push_back(i);
  for (int it = 0; it < 20; ++it)
    CHECK(in_parabolic(chev, rand_word(gen, uroots, 1, 6), lam));
}

TEST_CASE("word JSON round trip") {
  std::mt19937 gen(41);
  std::vector<int> all;
  for (int i = 1; i <= 24; ++i) {
    all.push_back(i);
    all.push_back(-i);
  }
  auto gctx = graded_ctx();
  for (int it = 0; it < 30; ++it) {
    GroupWord w = rand_word(gen, all, 1, 5);
    // add a torus and a Weyl factor sometimes
    if (it % 3 == 0) {
      TorusFactor s;
      s.set(0, RatFunc::t(gf4()) + RatFunc::from_int(gf4(), 1));
      w = GroupWord::torus_elem(s) * w * GroupWord::weyl_elem(13);
    }
    GroupWord back = GroupWord::from_json(gf4(), w.to_json());
    CHECK(words_equal_ad(f4c(), gf4(), w, back));
  }
  // formal parameters survive the trip exactly
  GroupWord wf = GroupWord::root_elem(21, FormalPoly::variable(gf4(), "x21"));
  GroupWord back = GroupWord::from_json(gf4(), wf.to_json());
  REQUIRE(back.factors().size() == 1);
  CHECK(std::get<RootFactor>(back.factors()[0]).param ==
        FormalPoly::variable(gf4(), "x21"));
}

TEST_CASE("word inverse really inverts") {
  std::mt19937 gen(43);
  std::vector<int> all;
  for (int i = 1; i <= 24; ++i) {
    all.push_back(i);
    all.push_back(-i);
  }
  for (int it = 0; it < 20; ++it) {
    GroupWord w = rand_word(gen, all, 1, 5);
    if (it % 2) w = w * GroupWord::weyl_elem(7);
    CHECK(words_equal_ad(f4c(), gf4(), w * w.inverse(), GroupWord::identity()));
  }
}
