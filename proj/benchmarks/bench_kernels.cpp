#include <benchmark/benchmark.h>

#include <vector>

#include "logstrain/constitutive.hpp"
#include "logstrain/kinematics.hpp"
#include "logstrain/random.hpp"
#include "logstrain/tensor.hpp"
#include "logstrain/verify.hpp"

using namespace logstrain;

namespace {

std::vector<SymMat3> spd_inputs() {
  Sampler s(1);
  std::vector<SymMat3> v;
  for (int k = 0; k < 1024; ++k) v.push_back(s.spd());
  return v;
}

std::vector<Mat3> f_inputs() {
  Sampler s(2);
  std::vector<Mat3> v;
  for (int k = 0; k < 1024; ++k) v.push_back(s.rotation() * s.spd(0.2, 5.0).full());
  return v;
}

void BM_EigSym(benchmark::State& state) {
  const auto in = spd_inputs();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eig_sym(in[i++ & 1023]));
}
BENCHMARK(BM_EigSym);

void BM_MatLog(benchmark::State& state) {
  const auto in = spd_inputs();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mat_log(in[i++ & 1023]));
}
BENCHMARK(BM_MatLog);

void BM_BeckerBiot(benchmark::State& state) {
  const auto in = spd_inputs();
  const Moduli m = Moduli::from_lame(1.0, 0.5);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(becker_biot(in[i++ & 1023], m));
}
BENCHMARK(BM_BeckerBiot);

void BM_BeckerInverse(benchmark::State& state) {
  Sampler s(3);
  std::vector<SymMat3> in;
  for (int k = 0; k < 1024; ++k) in.push_back(s.symmetric());
  const Moduli m = Moduli::from_lame(1.0, 0.5);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(becker_inverse(in[i++ & 1023], m));
}
BENCHMARK(BM_BeckerInverse);

void BM_PolarDecompose(benchmark::State& state) {
  const auto in = f_inputs();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(polar_decompose(in[i++ & 1023]));
}
BENCHMARK(BM_PolarDecompose);

void BM_CycleWork(benchmark::State& state) {
  const Moduli m = Moduli::from_lame(1.0, 1.0);
  const LawId becker = LawId::of(LawId::Tag::Becker);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify::polyline_work(verify::diagonal_cycle(), true, becker, m, 1e-8));
}
BENCHMARK(BM_CycleWork)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
