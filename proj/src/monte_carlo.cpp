#include "nomasec/monte_carlo.hpp"

#include <cmath>

#include "nomasec/model.hpp"

namespace nomasec {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;
constexpr int kPhiloxRounds = 10;

inline void philox_round(std::uint32_t c[4], std::uint32_t k0, std::uint32_t k1) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  c[0] = hi1 ^ c[1] ^ k0;
  c[1] = lo1;
  c[2] = hi0 ^ c[3] ^ k1;
  c[3] = lo0;
}

inline double uniform_open_closed(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;  // (0, 1]
}

struct OutageCounts {
  std::uint64_t near = 0;
  std::uint64_t far = 0;
};

OutageCounts partition_counts(const DecodingOrder& order, const SecrecyTargets& targets,
                              double alpha, const SystemParams& params, std::uint64_t seed,
                              std::uint32_t partition, std::uint64_t samples) {
  CounterRng rng(seed, partition);
  OutageCounts counts;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const ChannelRealization ch = sample_channels(params, rng);
    const SecrecyRates rates = secrecy_rates(sinr_set(order, ch, alpha, params));
    counts.near += rates.rate_near < targets.threshold_near;
    counts.far += rates.rate_far < targets.threshold_far;
  }
  return counts;
}

std::array<SopEstimate, 2> estimate_pair(const DecodingOrder& order, const SecrecyTargets& targets,
                                         double alpha, const SystemParams& params,
                                         const SimulationConfig& cfg, bool run_parallel) {
  validate(cfg);
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("power allocation alpha must lie strictly inside (0, 1)");
  (void)run_parallel;  // consumed by the pragma; unused in non-OpenMP builds

  const std::uint64_t total = cfg.sample_count;
  const std::uint64_t partitions = cfg.partition_count;
  const std::uint64_t base = total / partitions;
  const std::uint64_t remainder = total % partitions;

  std::uint64_t outage_near = 0;
  std::uint64_t outage_far = 0;
  // Integer count merging is exact, so the reduction order cannot change the result.
#pragma omp parallel for schedule(static) reduction(+ : outage_near, outage_far) \
    if (run_parallel)
  for (long long p = 0; p < static_cast<long long>(partitions); ++p) {
    const std::uint64_t samples = base + (static_cast<std::uint64_t>(p) < remainder ? 1 : 0);
    const OutageCounts counts = partition_counts(order, targets, alpha, params, cfg.seed,
                                                 static_cast<std::uint32_t>(p), samples);
    outage_near += counts.near;
    outage_far += counts.far;
  }

  auto to_estimate = [total](std::uint64_t outages) {
    const double value = static_cast<double>(outages) / static_cast<double>(total);
    const double stderr_ = std::sqrt(value * (1.0 - value) / static_cast<double>(total));
    return SopEstimate{value, stderr_, total, Method::monte_carlo};
  };
  return {to_estimate(outage_near), to_estimate(outage_far)};
}

}  // namespace

void validate(const SimulationConfig& cfg) {
  if (cfg.sample_count < 1) throw std::domain_error("sample count must be at least 1");
  if (cfg.partition_count < 1) throw std::domain_error("partition count must be at least 1");
}

std::array<double, 2> CounterRng::next_uniform_pair() {
  std::uint32_t c[4] = {static_cast<std::uint32_t>(block_),
                        static_cast<std::uint32_t>(block_ >> 32), stream_, 0x4E4F4D41u};
  std::uint32_t k0 = key0_, k1 = key1_;
  for (int r = 0; r < kPhiloxRounds; ++r) {
    philox_round(c, k0, k1);
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  ++block_;
  return {uniform_open_closed(c[0], c[1]), uniform_open_closed(c[2], c[3])};
}

ChannelRealization sample_channels(const SystemParams& params, CounterRng& rng) {
  const std::array<double, 2> u = rng.next_uniform_pair();
  return {-params.mean_gain_near * std::log(u[0]), -params.mean_gain_far * std::log(u[1])};
}

SopEstimate estimate_sop(const DecodingOrder& order, int user, const SecrecyTargets& targets,
                         double alpha, const SystemParams& params, const SimulationConfig& cfg) {
  if (user != 1 && user != 2) throw std::domain_error("user index must be 1 or 2");
  return estimate_pair(order, targets, alpha, params, cfg, true)[user - 1];
}

std::array<SopEstimate, 2> estimate_sop_both(const DecodingOrder& order,
                                             const SecrecyTargets& targets, double alpha,
                                             const SystemParams& params,
                                             const SimulationConfig& cfg) {
  return estimate_pair(order, targets, alpha, params, cfg, true);
}

SopEstimate estimate_sop_serial(const DecodingOrder& order, int user, const SecrecyTargets& targets,
                                double alpha, const SystemParams& params,
                                const SimulationConfig& cfg) {
  if (user != 1 && user != 2) throw std::domain_error("user index must be 1 or 2");
  return estimate_pair(order, targets, alpha, params, cfg, false)[user - 1];
}

std::array<SopEstimate, 2> estimate_sop_both_serial(const DecodingOrder& order,
                                                    const SecrecyTargets& targets, double alpha,
                                                    const SystemParams& params,
                                                    const SimulationConfig& cfg) {
  return estimate_pair(order, targets, alpha, params, cfg, false);
}

}  // namespace nomasec
