#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chevalg/liecent.hpp"
#include "chevalg/scenarios.hpp"

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

std::vector<LieGenerator> m_generators() {
  ScenarioContext ctx = make_f4_context(f4c(), gf4(), RatFunc::t(gf4()).pow(2));
  std::vector<LieGenerator> gens;
  for (const auto& fam : subgroup_M(ctx).gens) gens.push_back({fam.word, fam.var});
  return gens;
}

std::set<int> unipotent_roots() {
  std::set<int> s;
  for (int i = 10; i <= 24; ++i) s.insert(i);
  return s;
}
}  // namespace

TEST_CASE("the fixed space of M on the unipotent radical contains e20 + e21") {
  auto basis = lie_centralizer(f4c(), gf4(), m_generators(), unipotent_roots());
  CHECK_FALSE(basis.empty());
  LieElement v = lie_basis_vector(f4c(), gf4(), 20);
  v.coeffs[f4c().basis_root(21)] = RatFunc::from_int(gf4(), 1);
  CHECK(in_span(basis, v, gf4()));
}

TEST_CASE("e20 alone is not fixed") {
  auto basis = lie_centralizer(f4c(), gf4(), m_generators(), unipotent_roots());
  LieElement e20 = lie_basis_vector(f4c(), gf4(), 20);
  CHECK_FALSE(in_span(basis, e20, gf4()));
  // Direct adjoint computation of one generator on e20.
  auto gens = m_generators();
  auto ad = ad_matrix_at(f4c(), gf4(), gens[2].word,
                         {{*gens[2].var, RatFunc::from_int(gf4(), 1)}});
  CHECK_FALSE(ad.apply(e20.coeffs) == e20.coeffs);
}

TEST_CASE("the identity fixes the whole subspace") {
  std::vector<LieGenerator> id = {{GroupWord::identity(), std::nullopt}};
  auto basis = lie_centralizer(f4c(), gf4(), id, unipotent_roots());
  CHECK(basis.size() == unipotent_roots().size());
}

TEST_CASE("non-stable subspaces are rejected") {
  // span(e_20) alone is not stable under M.
  CHECK_THROWS_AS(lie_centralizer(f4c(), gf4(), m_generators(), {20}),
                  std::invalid_argument);
}

TEST_CASE("span membership edge cases") {
  LieElement zero{std::vector<RatFunc>(f4c().dim(), RatFunc(gf4()))};
  CHECK(in_span({}, zero, gf4()));
  LieElement e5 = lie_basis_vector(f4c(), gf4(), 5);
  CHECK_FALSE(in_span({}, e5, gf4()));
  CHECK(in_span({e5}, e5, gf4()));
}
