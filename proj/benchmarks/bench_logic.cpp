#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "darg/classical.hpp"
#include "darg/default_logic.hpp"
#include "darg/entailment.hpp"
#include "darg/kb.hpp"
#include "darg/parser.hpp"
#include "darg/system_p.hpp"

using namespace darg;

namespace {

// p0 -> p1 -> ... -> pn, query p0 |- pn.
void BM_EntailChain(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  std::vector<Formula> gamma{parse_formula("p0")};
  for (int i = 0; i < n; ++i)
    gamma.push_back(parse_formula("p" + std::to_string(i) + " -> p" + std::to_string(i + 1)));
  const Formula goal = parse_formula("p" + std::to_string(n));
  for (auto _ : state) benchmark::DoNotOptimize(entails(gamma, goal));
}
BENCHMARK(BM_EntailChain)->Arg(4)->Arg(8)->Arg(16)->Arg(22);

void BM_ClassicalArguments(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  std::vector<Formula> delta;
  for (int i = 0; i < n; ++i) {
    delta.push_back(parse_formula("a" + std::to_string(i)));
    delta.push_back(parse_formula("a" + std::to_string(i) + " -> goal"));
  }
  const Formula claim = parse_formula("goal");
  for (auto _ : state) benchmark::DoNotOptimize(classical::arguments(delta, claim));
}
BENCHMARK(BM_ClassicalArguments)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

// n independent Nixon diamonds give 2^n extensions.
void BM_DefaultExtensions(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  std::string text = "logic default.\n";
  for (int i = 0; i < n; ++i) {
    const auto s = std::to_string(i);
    text += "fact q" + s + ".\nfact r" + s + ".\n";
    text += "default q" + s + " : p" + s + " / p" + s + ".\n";
    text += "default r" + s + " : !p" + s + " / !p" + s + ".\n";
  }
  const auto theory = std::get<defaults::Theory>(parse_kb(text).kb);
  for (auto _ : state) benchmark::DoNotOptimize(defaults::extensions(theory));
}
BENCHMARK(BM_DefaultExtensions)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_PEntailsPenguin(benchmark::State& state) {
  const auto doc = parse_kb(
      "logic conditional.\n"
      "cond bird => fly.\n"
      "cond penguin => bird.\n"
      "cond penguin => !fly.\n"
      "cond bird => wings.\n");
  const auto& kb = std::get<preferential::ConditionalBase>(doc.kb);
  const preferential::Conditional q{parse_formula("penguin"), parse_formula("wings")};
  for (auto _ : state) benchmark::DoNotOptimize(preferential::p_entailment(kb, q));
}
BENCHMARK(BM_PEntailsPenguin);

}  // namespace
