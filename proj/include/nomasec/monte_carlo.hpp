#pragma once

#include <array>
#include <cstdint>

#include "nomasec/types.hpp"

namespace nomasec {

struct SimulationConfig {
  std::uint64_t sample_count = 1'000'000;
  std::uint64_t seed = 424242;
  std::uint32_t partition_count = 64;  // parallel shards; each owns an RNG substream
};

void validate(const SimulationConfig& cfg);

/// Counter-based generator (Philox 4x32, 10 rounds) keyed by (seed, stream).
///
/// Every 128-bit block is a pure function of (seed, stream, block index), so
/// a partitioned simulation produces the same numbers no matter how many
/// threads execute it or in which order partitions finish.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint32_t stream)
      : key0_(static_cast<std::uint32_t>(seed)),
        key1_(static_cast<std::uint32_t>(seed >> 32)),
        stream_(stream) {}

  /// Two independent uniforms in (0, 1], one block per call.
  std::array<double, 2> next_uniform_pair();

 private:
  std::uint32_t key0_, key1_, stream_;
  std::uint64_t block_ = 0;
};

/// One independent draw of the two channel power gains:
/// gain_near ~ Exp(mean lambda_1), gain_far ~ Exp(mean lambda_2), sampled by
/// inverse CDF (-lambda ln u). No gain ordering is imposed.
ChannelRealization sample_channels(const SystemParams& params, CounterRng& rng);

/// Monte Carlo outage estimate for one user: the fraction of realizations
/// whose secrecy rate falls below the user's threshold, evaluated through
/// sinr_set/secrecy_rates under the given decoding order. OpenMP-parallel
/// across partitions; estimates are bit-identical for a fixed
/// (seed, partition_count) regardless of thread count.
SopEstimate estimate_sop(const DecodingOrder& order, int user, const SecrecyTargets& targets,
                         double alpha, const SystemParams& params, const SimulationConfig& cfg);

/// Both users' estimates from a single pass over the sample stream.
std::array<SopEstimate, 2> estimate_sop_both(const DecodingOrder& order,
                                             const SecrecyTargets& targets, double alpha,
                                             const SystemParams& params,
                                             const SimulationConfig& cfg);

/// Serial reference implementations: same partition arithmetic without the
/// OpenMP worksharing. Kept for testing; results are bit-identical to the
/// parallel path.
SopEstimate estimate_sop_serial(const DecodingOrder& order, int user, const SecrecyTargets& targets,
                                double alpha, const SystemParams& params,
                                const SimulationConfig& cfg);
std::array<SopEstimate, 2> estimate_sop_both_serial(const DecodingOrder& order,
                                                    const SecrecyTargets& targets, double alpha,
                                                    const SystemParams& params,
                                                    const SimulationConfig& cfg);

}  // namespace nomasec
