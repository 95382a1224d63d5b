#include <benchmark/benchmark.h>

#include "dlseq/meta.hpp"
#include "dlseq/oracle.hpp"
#include "dlseq/parser.hpp"
#include "dlseq/prover.hpp"
#include "generators.hpp"

using namespace dlseq;

static void BM_ProveTransitivity(benchmark::State& state) {
  LanguageProfile p;
  p.with_ddr("Trans");
  Calculus c = assemble_calculus(p);
  ParseOptions o;
  o.profile = p;
  Sequent s = parse_sequent("Trans(r), r(a,b), r(b,c), r(c,d) |- r(a,d)", o);
  for (auto _ : state) benchmark::DoNotOptimize(prove(s, c));
}
BENCHMARK(BM_ProveTransitivity);

static void BM_ProveRandomCorpus(benchmark::State& state) {
  auto profiles = testing::rotation_profiles();
  std::vector<Calculus> calculi;
  std::vector<Sequent> roots;
  for (std::size_t i = 0; i < 50; ++i) {
    const auto& p = profiles[i % profiles.size()];
    testing::Generator g(p, i);
    roots.push_back(g.sequent());
    calculi.push_back(assemble_calculus(p));
  }
  Budget b;
  b.steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    for (std::size_t i = 0; i < roots.size(); ++i) benchmark::DoNotOptimize(prove(roots[i], calculi[i], b));
}
BENCHMARK(BM_ProveRandomCorpus)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_Countermodel(benchmark::State& state) {
  Sequent s = parse_sequent("a:(some r C), C sub D |- a:(all r D), b:C");
  for (auto _ : state) benchmark::DoNotOptimize(find_countermodel(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Countermodel)->DenseRange(1, 3);

static void BM_DeriveIdentity(benchmark::State& state) {
  Calculus c = assemble_calculus(full_profile());
  Formula f = parse_sequent("|- a:(atmost 3 r (some s (C or not D)))").side(Side::right)[0];
  for (auto _ : state) benchmark::DoNotOptimize(derive_identity(c, f));
}
BENCHMARK(BM_DeriveIdentity);
BENCHMARK_MAIN();
