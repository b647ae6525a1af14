#include <benchmark/benchmark.h>

#include "pego/criteria.hpp"
#include "pego/diagnosis.hpp"
#include "pego/transform.hpp"

using namespace pego;
using HF = HalfLineFunction;

namespace {

const TimeGrid kGrid;  // default dt 1e-3, t_max 40
const FrequencyGrid kYGrid = default_frequency_grid(kGrid);
const TimeGrid kSmall(0.02, 20.0);
const FrequencyGrid kSmallY = default_frequency_grid(kSmall);

void bm_laplace_line_fft(benchmark::State& state) {
  const auto f = HF::exponential(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(laplace_line(f, Order(0.0), kGrid, kYGrid));
  }
}
BENCHMARK(bm_laplace_line_fft);

void bm_laplace_line_direct(benchmark::State& state) {
  const auto f = HF::exponential(1.0);
  const FrequencyGrid narrow(kSmallY.dy * 1.01, 50.0);  // mismatched: node-by-node path
  for (auto _ : state) {
    benchmark::DoNotOptimize(laplace_line(f, Order(0.0), kSmall, narrow));
  }
}
BENCHMARK(bm_laplace_line_direct);

void bm_convolve(benchmark::State& state) {
  const auto f = HF::indicator(0.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve(f, f, kGrid));
  }
}
BENCHMARK(bm_convolve);

void bm_shift_modulus(benchmark::State& state) {
  const auto f = HF::indicator(0.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shift_modulus(f, Order(0.0), kGrid, 0.02));
  }
}
BENCHMARK(bm_shift_modulus);

void bm_net_oracle(benchmark::State& state) {
  std::vector<HF> members;
  for (int i = 0; i < 16; ++i) members.push_back(HF::exponential(1.0 + 0.1 * i));
  const PegoFamily family(members, Order(0.0), kSmall);
  for (auto _ : state) {
    benchmark::DoNotOptimize(epsilon_net_oracle(family, 0.15));
  }
}
BENCHMARK(bm_net_oracle);

}  // namespace

BENCHMARK_MAIN();
