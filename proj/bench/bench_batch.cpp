// Serial vs OpenMP timings for the sample-parallel kernels.
// usage: bench_batch [samples] [repeats]
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "kah/batch.hpp"

using namespace kah;
using namespace kah::batch;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, int repeats, const std::function<void(Exec)>& fn) {
  fn(Exec::Serial);  // warm-up: first use builds the cached bases
  const double s = best_of(repeats, [&] { fn(Exec::Serial); });
  const double p = best_of(repeats, [&] { fn(Exec::Parallel); });
  std::printf("%-28s %10.4f %10.4f %8.2fx\n", name, s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  std::printf("samples %zu, repeats %d, threads %d\n", n, repeats, omp_get_max_threads());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  row("sample_group spin7c", repeats,
      [&](Exec e) { sample_group(GroupTag::Spin7C, 1, n, 2.0, e); });
  const auto spin = sample_group(GroupTag::Spin7C, 1, n, 2.0);
  row("classify_all spin7c", repeats, [&](Exec e) { classify_all(spin, 1e-9, e); });
  for (PairType p : {PairType::R1, PairType::R1prime, PairType::R2}) {
    const auto gs = sample_group(ambient_group(p), 2, n, 2.0);
    const std::string d = std::string("decompose_all ") + std::string(to_string(p));
    row(d.c_str(), repeats, [&](Exec e) { decompose_all(p, gs, 1e-7, e); });
    const std::string s = std::string("check_s2_all ") + std::string(to_string(p));
    row(s.c_str(), repeats, [&](Exec e) { check_s2_all(p, gs, kS2Tol, 1e-7, e); });
  }
  return 0;
}
