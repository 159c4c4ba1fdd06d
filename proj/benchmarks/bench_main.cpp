#include <benchmark/benchmark.h>

#include <random>

#include "grpinv/catalog.hpp"
#include "grpinv/fingerprint.hpp"
#include "grpinv/groebner.hpp"
#include "grpinv/ideals.hpp"
#include "grpinv/rankloci.hpp"

using namespace grpinv;

namespace {

LinFormMatrix random_skew(std::uint32_t p, std::size_t n, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
  LinFormMatrix m(PrimeField(p), n, n, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::int64_t c = coeff(rng);
        m.set(k, i, j, c);
        m.set(k, j, i, -c);
      }
  return m;
}

// Adjoint profile of a 5 x 5 matrix in 4 variables: p^5 points of a 5 x 4 matrix.
void BM_AdjointProfile(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const LinFormMatrix b = random_skew(p, 5, 4, 1);
  EnumerationOptions o;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(adjoint_rank_profile(b, o));
  std::uint64_t points = 1;
  for (int i = 0; i < 5; ++i) points *= p;
  state.counters["points/s"] = benchmark::Counter(static_cast<double>(points), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_AdjointProfile)->Arg(7)->Arg(13)->Arg(19)->Unit(benchmark::kMillisecond);

// Affine enumeration without the projective shortcut, for comparison.
void BM_AffineProfile(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const LinFormMatrix b = adjoint(random_skew(p, 5, 4, 1));
  EnumerationOptions o;
  o.threads = 1;
  o.projective = false;
  for (auto _ : state) benchmark::DoNotOptimize(rank_profile(b, o));
}
BENCHMARK(BM_AffineProfile)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

// Groebner basis of the 4 x 4 minors of a padded 5 x 5 matrix in three variables.
void BM_GroebnerMinors(benchmark::State& state) {
  const LinFormMatrix b = padded_family()[static_cast<std::size_t>(state.range(0))].matrix.over(7);
  const RingPtr ring = make_ring(7, b.nvars());
  const auto gens = minors(b, 4, ring);
  for (auto _ : state) benchmark::DoNotOptimize(groebner(ring, gens));
}
BENCHMARK(BM_GroebnerMinors)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

// 3 x 3 minors of the adjoint of the same matrices: five variables.
void BM_GroebnerAdjointMinors(benchmark::State& state) {
  const LinFormMatrix a = adjoint(padded_family()[static_cast<std::size_t>(state.range(0))].matrix.over(7));
  const RingPtr ring = make_ring(7, a.nvars());
  const auto gens = minors(a, 3, ring);
  for (auto _ : state) benchmark::DoNotOptimize(groebner(ring, gens));
}
BENCHMARK(BM_GroebnerAdjointMinors)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_FingerprintSection4(benchmark::State& state) {
  FingerprintOptions o;
  o.primes = {static_cast<std::uint32_t>(state.range(0))};
  o.threads = 1;
  const auto family = four_generator_family();
  for (auto _ : state)
    for (const auto& m : family) benchmark::DoNotOptimize(fingerprint(m.matrix, o));
}
BENCHMARK(BM_FingerprintSection4)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
