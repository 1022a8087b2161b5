#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>

#include "goursat/analysis.hpp"
#include "goursat/closed_form.hpp"
#include "goursat/recurrence.hpp"
#include "goursat/word.hpp"

namespace {

using namespace goursat;

ClassCode fib_class(int r) {
  return parse("GG" + std::string(static_cast<std::size_t>(r - 2), 'S'));
}

void BM_Enumerate(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  std::uint64_t count = 0;
  for (auto _ : state) {
    for (Enumerator e(r); !e.done(); e.advance()) {
      benchmark::DoNotOptimize(e.word());
      ++count;
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(count));
}
BENCHMARK(BM_Enumerate)->Arg(10)->Arg(12)->Arg(14);

// The all-S class has the fastest-growing entries, so this is the big-integer
// stress path of the recurrence.
void BM_DeriveRecurrence(benchmark::State& state) {
  ClassCode code = fib_class(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(derive_recurrence(code));
  }
}
BENCHMARK(BM_DeriveRecurrence)->Arg(12)->Arg(64)->Arg(256);

void BM_DerivedClosed(benchmark::State& state) {
  ClassCode code = fib_class(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(derived_closed(code));
  }
}
BENCHMARK(BM_DerivedClosed)->Arg(12)->Arg(64)->Arg(256);

void BM_VerifyEquivalence(benchmark::State& state) {
  const int r_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    EquivalenceSummary s = verify_equivalence(r_max);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_VerifyEquivalence)->Arg(8)->Arg(10)->Arg(12)
    ->Unit(benchmark::kMillisecond);

void BM_DegreeSpectrum(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SpectrumReport s = degree_spectrum(r);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_DegreeSpectrum)->Arg(8)->Arg(10)->Arg(12)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
