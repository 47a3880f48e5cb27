#include <benchmark/benchmark.h>

#include "twoadic/canonical.hpp"
#include "twoadic/decompose.hpp"
#include "twoadic/notation.hpp"
#include "twoadic/oracle.hpp"

using namespace twoadic;

namespace {

const char* kExample =
    "1^2_II [2^-2 4^3]_3 16^1_1 32^2_II 64^-2_II [128^1 256^1]_0 512^-4_II";

GramMatrix example_gram() {
  return gram_of(fine_refinement(parse_symbol(kExample)));
}

void BM_SymbolOfGram(benchmark::State& state) {
  const GramMatrix g = example_gram();
  for (auto _ : state) benchmark::DoNotOptimize(symbol_of(g));
}
BENCHMARK(BM_SymbolOfGram);

void BM_SymbolOfDenseGram(benchmark::State& state) {
  const GramMatrix g = random_lattice(static_cast<int>(state.range(0)), 0, 3, 99);
  for (auto _ : state) benchmark::DoNotOptimize(symbol_of(g));
}
BENCHMARK(BM_SymbolOfDenseGram)->DenseRange(2, 6);

void BM_CanonicalForm(benchmark::State& state) {
  const TwoAdicSymbol s = parse_symbol(kExample);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(s));
}
BENCHMARK(BM_CanonicalForm);

void BM_ParsePrint(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(print_symbol(parse_symbol(kExample)));
}
BENCHMARK(BM_ParsePrint);

void BM_OracleWitness(benchmark::State& state) {
  const GramMatrix a = GramMatrix::diagonal({Rational(1), Rational(2)});
  const GramMatrix b = GramMatrix::diagonal({Rational(3), Rational(6)});
  for (auto _ : state) benchmark::DoNotOptimize(isometric_mod(a, b, 4));
}
BENCHMARK(BM_OracleWitness);

void BM_OracleExhaust(benchmark::State& state) {
  const GramMatrix a = GramMatrix::diagonal({Rational(1), Rational(1)});
  const GramMatrix b = GramMatrix::diagonal({Rational(3), Rational(3)});
  for (auto _ : state) benchmark::DoNotOptimize(isometric_mod(a, b, 5));
}
BENCHMARK(BM_OracleExhaust);

}  // namespace

BENCHMARK_MAIN();
