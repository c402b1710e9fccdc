#include <benchmark/benchmark.h>

#include "noether/catalog.hpp"
#include "noether/invariants.hpp"
#include "noether/oracles.hpp"
#include "noether/parse.hpp"
#include "noether/rationality.hpp"
#include "noether/wreath.hpp"

using namespace noether;

static void BM_EnumerateSymmetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    PermGroup g = PermGroup::symmetric(n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_EnumerateSymmetric)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ConjugacyWreathToCatalog(benchmark::State& state) {
  PermGroup g4 = catalog_entry("G4").group();
  for (auto _ : state) {
    PermGroup w = wreath_product({PermGroup::symmetric(3), PermGroup::symmetric(2)});
    benchmark::DoNotOptimize(are_conjugate(6, w, g4).conjugate);
  }
}
BENCHMARK(BM_ConjugacyWreathToCatalog)->Unit(benchmark::kMillisecond);

static void BM_SylowThreeNine(benchmark::State& state) {
  for (auto _ : state) {
    PermGroup s = sylow_subgroup_sn(3, 9);
    benchmark::DoNotOptimize(s.order());
  }
}
BENCHMARK(BM_SylowThreeNine)->Unit(benchmark::kMillisecond);

static void BM_PolyMultiply(benchmark::State& state) {
  ExprParser p(Field(), VarList::indexed("x", 4));
  MultiPoly a = p.parse_poly("(x1 + 2*x2 - x3 + x4 + 1)^" + std::to_string(state.range(0)));
  MultiPoly b = p.parse_poly("(x1 - x2 + 3*x3 - x4 + 2)^" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize((a * b).size());
}
BENCHMARK(BM_PolyMultiply)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

static void BM_PolyMultiplyF7(benchmark::State& state) {
  ExprParser p(Field::prime(7), VarList::indexed("x", 4));
  MultiPoly a = p.parse_poly("(x1 + 2*x2 - x3 + x4 + 1)^5");
  MultiPoly b = p.parse_poly("(x1 - x2 + 3*x3 - x4 + 2)^5");
  for (auto _ : state) benchmark::DoNotOptimize((a * b).size());
}
BENCHMARK(BM_PolyMultiplyF7)->Unit(benchmark::kMicrosecond);

static void BM_MolienCatalog(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& e : catalog()) benchmark::DoNotOptimize(molien_coefficients(e.group(), 6));
  }
}
BENCHMARK(BM_MolienCatalog)->Unit(benchmark::kMillisecond);

static void BM_WreathExampleVerify(benchmark::State& state) {
  Field f7 = Field::prime(7);
  auto h = LinearAction::from_images(f7, VarList::indexed("y", 3), {{"y1", "w*y2", "w^2*y3"}}, {"tau"}, {{"w", 2}});
  ExprParser py(f7, VarList::indexed("y", 3));
  std::vector<MultiPoly> F{py.parse_poly("y1"), py.parse_poly("y2^3"), py.parse_poly("y2*y3"), py.parse_poly("y3^3")};
  std::vector<MultiPoly> H = polarize_elementary(2, 4, 1, f7);
  for (auto& f : polarize_elementary(2, 4, 2, f7)) H.push_back(f);
  auto gens = wreath_invariant_generators(F, H, 2, 3, 4);
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LinearAction action = LinearAction::wreath(PermGroup::symmetric(2), h);
    benchmark::DoNotOptimize(verify_invariant_generators(gens, action, degree).pass);
  }
}
BENCHMARK(BM_WreathExampleVerify)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_VerifyCase(benchmark::State& state) {
  const auto& ids = builtin_case_ids();
  const std::string id = ids[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(id);
  for (auto _ : state) benchmark::DoNotOptimize(verify_case(id).claims.size());
}
BENCHMARK(BM_VerifyCase)->DenseRange(1, 8)->Unit(benchmark::kMillisecond);

static void BM_FiberCount(benchmark::State& state) {
  ExprParser p(Field(), VarList::indexed("x", 3));
  std::vector<RatFunc> maps{p.parse("x1+x2+x3"), p.parse("x1*x2+x1*x3+x2*x3"), p.parse("x1*x2*x3")};
  for (auto _ : state) benchmark::DoNotOptimize(generic_fiber_count(maps, 101, 10, 0).modal_count);
}
BENCHMARK(BM_FiberCount)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
