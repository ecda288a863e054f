#include <benchmark/benchmark.h>

#include <random>

#include "chevalg/scenarios.hpp"
#include "chevalg/words.hpp"

namespace {

using namespace chevalg;

const RootSystem& f4() {
  static RootSystem rs = RootSystem::build("F4");
  return rs;
}
const ChevalleyData& f4c() {
  static ChevalleyData c(f4());
  return c;
}
const GaloisField& gf4() { return GaloisField::get(2, 2); }

GroupWord random_unipotent_word(std::mt19937& gen, int len) {
  std::uniform_int_distribution<int> rd(10, 24);
  std::uniform_int_distribution<int> cd(0, 3);
  GroupWord w;
  for (int i = 0; i < len; ++i) {
    std::vector<GaloisField::Elem> c(cd(gen) + 1);
    for (auto& e : c) e = static_cast<GaloisField::Elem>(cd(gen));
    w = w * GroupWord::root_elem(rd(gen),
                                 FormalPoly::constant(RatFunc(Poly(gf4(), c),
                                                              Poly::constant(gf4(), 1))));
  }
  return w;
}

void BM_structure_constants(benchmark::State& state) {
  for (auto _ : state) {
    ChevalleyData chev(f4());
    benchmark::DoNotOptimize(chev.N(3, 17));
  }
}
BENCHMARK(BM_structure_constants)->Unit(benchmark::kMillisecond);

void BM_collect(benchmark::State& state) {
  std::mt19937 gen(1);
  std::vector<GroupWord> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_unipotent_word(gen, state.range(0)));
  CollectContext ctx;
  ctx.chev = &f4c();
  std::set<int> uroots;
  for (int i = 10; i <= 24; ++i) uroots.insert(i);
  ctx.allowed = uroots;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(collect(words[i++ % words.size()], ctx));
  }
}
BENCHMARK(BM_collect)->Arg(8)->Arg(16)->Arg(32);

void BM_adjoint_matrix(benchmark::State& state) {
  std::mt19937 gen(2);
  GroupWord w = random_unipotent_word(gen, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ad_matrix_at(f4c(), gf4(), w, {}));
  }
}
BENCHMARK(BM_adjoint_matrix);

void BM_ratfunc_arith(benchmark::State& state) {
  const GaloisField& f = gf4();
  RatFunc x = (RatFunc::t(f).pow(3) + RatFunc::from_int(f, 1)) /
              (RatFunc::t(f).pow(2) + RatFunc::t(f));
  RatFunc y = RatFunc::t(f).pow(2) / (RatFunc::t(f) + RatFunc::from_int(f, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y + x);
  }
}
BENCHMARK(BM_ratfunc_arith);

void BM_obstruction(benchmark::State& state) {
  auto ctx = make_f4_context(f4c(), gf4(), RatFunc::t(gf4()).pow(2));
  std::set<int> uroots;
  for (int i = 10; i <= 24; ++i) uroots.insert(i);
  auto vanishing = torus_centralizer_constraint(ctx, ctx.beta_torus(), uroots);
  GroupWord m_gen = GroupWord::root_elem(1, FormalPoly::from_int(gf4(), 1)) *
                    GroupWord::root_elem(3, FormalPoly::from_int(gf4(), 1));
  std::vector<GroupWord> v = {GroupWord::torus_elem(ctx.beta_torus()),
                              m_gen * GroupWord::root_elem(14, ctx.fp(ctx.a))};
  std::vector<GroupWord> vl = {GroupWord::torus_elem(ctx.beta_torus()), m_gen};
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjugacy_obstruction(ctx, v, vl, ctx.lambda, vanishing));
  }
}
BENCHMARK(BM_obstruction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
