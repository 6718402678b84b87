// Serial vs OpenMP direct kernels on a few tuples.
#include "sozeta/direct.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace sozeta;

template <class F>
static double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main(int argc, char** argv) {
  long cutoff = argc > 1 ? std::atol(argv[1]) : 8192;
  const ZetaSoArgs tuples[] = {{1, 0, 0, 2}, {1, 1, 1, 1}, {2, 2, 2, 2}, {0, 0, 3, 0}};
  std::printf("threads %d, cutoff %ld\n", omp_get_max_threads(), cutoff);
  std::printf("%-12s %12s %12s %8s %12s\n", "tuple", "serial s", "omp s", "speedup", "|diff|");
  for (const auto& a : tuples) {
    KernelSum s, p;
    double ts = seconds([&] {
      s = rows_serial(a, 1, cutoff, 1e-20L);
      KernelSum c = columns_serial(a, cutoff, 1e-20L);
      s.value += c.value;
    });
    double tp = seconds([&] {
      p = rows_parallel(a, 1, cutoff, 1e-20L);
      KernelSum c = columns_parallel(a, cutoff, 1e-20L);
      p.value += c.value;
    });
    std::printf("%-12s %12.4f %12.4f %8.2f %12.3Le\n", to_string(a).c_str(), ts, tp, ts / tp,
                s.value > p.value ? s.value - p.value : p.value - s.value);
  }
}
