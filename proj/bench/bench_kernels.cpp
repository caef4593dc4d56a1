// Serial reference loops against their OpenMP counterparts.
#include "pcert/parser.hpp"
#include "pcert/polytope.hpp"
#include "pcert/puiseux.hpp"

#include <benchmark/benchmark.h>

#include <functional>

namespace {

using namespace pcert;

std::vector<MultiPoly> order_system() {
  const std::vector<std::string> names{"x1", "x2", "x3"};
  std::vector<MultiPoly> out;
  for (int k = 1; k <= 16; ++k)
    out.push_back(parse_polynomial("(x1 - " + std::to_string(k) + "*x2)^6*(x3 + x1^2)^2 - x2^" +
                                       std::to_string(k % 5 + 1),
                                   names));
  return out;
}

PuiseuxVector order_theta() {
  const Rational zero(0);
  std::vector<PuiseuxPoly> c{PuiseuxPoly::identity(zero)};
  c.push_back(PuiseuxPoly(zero, {{Rational(1), Rational(1)}, {ratio(3, 2), Rational(2)}, {ratio(7, 3), Rational(-1)}}));
  c.push_back(PuiseuxPoly(zero, {{Rational(2), ratio(1, 3)}, {ratio(5, 2), Rational(1)}}));
  return PuiseuxVector::make(std::move(c));
}

std::vector<Support> dense_supports(std::size_t n, int degree) {
  std::vector<Support> out;
  for (std::size_t i = 0; i < n; ++i) {
    Support s{n, {}};
    LatticePoint p(n, 0);
    // All exponent vectors of total degree <= degree + i.
    std::function<void(std::size_t, int)> fill = [&](std::size_t k, int left) {
      if (k == n) {
        s.points.push_back(p);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        p[k] = e;
        fill(k + 1, left - e);
      }
      p[k] = 0;
    };
    fill(0, degree + static_cast<int>(i));
    out.push_back(std::move(s));
  }
  return out;
}

void BM_OrderProfileSerial(benchmark::State& state) {
  const auto system = order_system();
  const auto theta = order_theta();
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::vanishing_order_profile(system, theta));
}

void BM_OrderProfileParallel(benchmark::State& state) {
  const auto system = order_system();
  const auto theta = order_theta();
  for (auto _ : state)
    benchmark::DoNotOptimize(vanishing_order_profile(system, theta));
}

void BM_MixedVolumeSerial(benchmark::State& state) {
  const auto supports = dense_supports(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::mixed_volume(supports));
}

void BM_MixedVolumeParallel(benchmark::State& state) {
  const auto supports = dense_supports(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(mixed_volume(supports));
}

} // namespace

BENCHMARK(BM_OrderProfileSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrderProfileParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MixedVolumeSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MixedVolumeParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
