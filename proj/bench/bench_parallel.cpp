// Timing comparison between the serial reference and the OpenMP-parallel
// Monte Carlo estimator. Also asserts that both paths produce bit-identical
// estimates, which the partitioned counter-based RNG guarantees.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nomasec/monte_carlo.hpp"
#include "nomasec/types.hpp"

using namespace nomasec;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t samples = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 4'000'000ull;

  const SystemParams params = SystemParams::make(1.0, 3.0, 50.0, 100.0, 1e7, 0.1);
  const SecrecyTargets targets = SecrecyTargets::make(0.5, 0.1);
  SimulationConfig cfg;
  cfg.sample_count = samples;
  cfg.seed = 20240917;
  cfg.partition_count = 64;

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not enabled in this build\n");
#endif
  std::printf("samples: %llu, partitions: %u\n\n", static_cast<unsigned long long>(samples),
              cfg.partition_count);
  std::printf("%-8s %12s %12s %10s\n", "order", "serial [s]", "parallel [s]", "speedup");

  for (int o = 1; o <= 4; ++o) {
    const DecodingOrder order = DecodingOrder::from_index(o);

    auto t0 = std::chrono::steady_clock::now();
    const auto serial = estimate_sop_both_serial(order, targets, 0.4, params, cfg);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = estimate_sop_both(order, targets, 0.4, params, cfg);
    const double t_parallel = seconds_since(t0);

    if (serial[0].value != parallel[0].value || serial[1].value != parallel[1].value) {
      std::fprintf(stderr, "FATAL: serial and parallel estimates differ for %s\n",
                   order.name().c_str());
      return 1;
    }
    std::printf("%-8s %12.3f %12.3f %9.2fx   (s1=%.5f s2=%.5f)\n", order.name().c_str(), t_serial,
                t_parallel, t_serial / t_parallel, parallel[0].value, parallel[1].value);
  }
  return 0;
}
