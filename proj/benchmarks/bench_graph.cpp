#include <benchmark/benchmark.h>

#include <string>

#include "darg/graph.hpp"
#include "darg/instantiate.hpp"
#include "darg/kb.hpp"

using namespace darg;

namespace {

// Directed cycle over n nodes plus a chord every third node.
ArgGraph cycle_graph(int n) {
  ArgGraph g;
  for (int i = 0; i < n; ++i) g.add_node(ArgNode{"A" + std::to_string(i + 1), {}});
  for (int i = 0; i < n; ++i) {
    g.add_attack("A" + std::to_string(i + 1), "A" + std::to_string((i + 1) % n + 1));
    if (i % 3 == 0) g.add_attack("A" + std::to_string(i + 1), "A" + std::to_string((i + 2) % n + 1));
  }
  return g;
}

void BM_Semantics(benchmark::State& state) {
  const ArgGraph g = cycle_graph(static_cast<int>(state.range(0)));
  const auto sem = static_cast<Semantics>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(extensions(g, sem));
}
BENCHMARK(BM_Semantics)
    ->ArgsProduct({{8, 16, 24}, {static_cast<long>(Semantics::Grounded),
                                 static_cast<long>(Semantics::Preferred),
                                 static_cast<long>(Semantics::Stable)}});

void BM_GenerateSimpleGraph(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  std::string text = "logic simple.\n";
  for (int i = 0; i < n; ++i) {
    const auto s = std::to_string(i);
    text += "fact a" + s + ".\nrule a" + s + " -> b" + s + ".\nrule a" + s + " -> !b" +
            std::to_string((i + 1) % n) + ".\n";
  }
  const auto doc = parse_kb(text);
  for (auto _ : state) benchmark::DoNotOptimize(generate_graph(doc.kb, doc.config));
}
BENCHMARK(BM_GenerateSimpleGraph)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
