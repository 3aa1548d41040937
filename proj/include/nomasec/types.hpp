#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "nomasec/errors.hpp"

namespace nomasec {

enum class Method { analytic, asymptotic, monte_carlo };

std::string to_string(Method method);
Method method_from_string(std::string_view name);  // "analytic" | "asymptotic" | "mc"

/// Static scenario description of the two-user downlink.
///
/// All SNRs are stored as linear ratios; decibels appear only at the CLI
/// boundary. Mean channel gains are derived from the distances via the
/// path-loss law and are recomputed by make() — construct a new value to
/// change distances.
struct SystemParams {
  double path_loss_constant = 1.0;     // L_p
  double path_loss_exponent = 3.0;     // e
  double distance_near_m = 50.0;       // d_1
  double distance_far_m = 100.0;       // d_2
  double transmit_snr = 1e7;           // rho_t = P_t / sigma^2, linear
  double residual_interference = 0.1;  // beta in [0, 1]; 0 = perfect SIC
  double mean_gain_near = 0.0;         // lambda_1 = L_p d_1^-e
  double mean_gain_far = 0.0;          // lambda_2 = L_p d_2^-e

  static SystemParams make(double path_loss_constant, double path_loss_exponent,
                           double distance_near_m, double distance_far_m,
                           double transmit_snr, double residual_interference);

  /// Average received SNR at the far user, rho_r = rho_t * lambda_2 (linear).
  double received_snr() const { return transmit_snr * mean_gain_far; }
};

/// One draw of the two channel power gains (|h_1|^2, |h_2|^2).
struct ChannelRealization {
  double gain_near = 0.0;
  double gain_far = 0.0;
};

/// SIC sequence matrix: column m holds the order in which user m decodes
/// the two signals. Only the four valid orders are constructible.
class DecodingOrder {
 public:
  static DecodingOrder d1() { return DecodingOrder({{{2, 1}, {2, 1}}}); }  // both decode far first
  static DecodingOrder d2() { return DecodingOrder({{{2, 1}, {1, 2}}}); }  // each decodes the other first
  static DecodingOrder d3() { return DecodingOrder({{{1, 2}, {2, 1}}}); }  // each decodes itself first
  static DecodingOrder d4() { return DecodingOrder({{{1, 2}, {1, 2}}}); }  // both decode near first

  static DecodingOrder from_index(int order_index);
  static DecodingOrder from_string(std::string_view name);  // "D1".."D4"

  int index() const;
  std::string name() const;

  /// User index (1 or 2) decoded by `user` at `stage` (both 1-based).
  int decoded_at(int user, int stage) const { return seq_[user - 1][stage - 1]; }
  int first_decoded(int user) const { return decoded_at(user, 1); }

  bool operator==(const DecodingOrder&) const = default;

 private:
  explicit DecodingOrder(std::array<std::array<int, 2>, 2> seq) : seq_(seq) {}
  std::array<std::array<int, 2>, 2> seq_;  // seq_[m-1][k-1]
};

/// Threshold secrecy rates and their linearized forms Pi_n = 2^threshold.
struct SecrecyTargets {
  double threshold_near = 0.5;  // R_s1^th, bits/s/Hz
  double threshold_far = 0.1;   // R_s2^th, bits/s/Hz
  double pi_near = 0.0;         // 2^threshold_near, >= 1
  double pi_far = 0.0;          // 2^threshold_far, >= 1

  static SecrecyTargets make(double threshold_near, double threshold_far);
};

/// The four SINRs Gamma_nm: signal of user n as decoded at user m.
struct SinrSet {
  std::array<std::array<double, 2>, 2> gamma{};  // gamma[n-1][m-1]

  double at(int signal_user, int at_user) const { return gamma[signal_user - 1][at_user - 1]; }
  double& at(int signal_user, int at_user) { return gamma[signal_user - 1][at_user - 1]; }

  double g11() const { return at(1, 1); }
  double g12() const { return at(1, 2); }
  double g21() const { return at(2, 1); }
  double g22() const { return at(2, 2); }
};

/// Per-link data rates R_nm = log2(1 + Gamma_nm) and the secrecy rates
/// R_s1 = R_11 - R_12, R_s2 = R_22 - R_21 (kept signed; no clamping).
struct SecrecyRates {
  std::array<std::array<double, 2>, 2> data_rate{};  // data_rate[n-1][m-1]
  double rate_near = 0.0;
  double rate_far = 0.0;

  double at(int signal_user, int at_user) const { return data_rate[signal_user - 1][at_user - 1]; }
  double secrecy_rate(int user) const { return user == 1 ? rate_near : rate_far; }
};

/// Power-allocation interval for positive secrecy rates under D2.
struct PaBounds {
  double lower = 0.0;
  double upper = 1.0;
};

/// A secrecy outage probability with provenance.
struct SopEstimate {
  double value = 0.0;
  double standard_error = 0.0;     // sqrt(v(1-v)/n) for Monte Carlo, 0 otherwise
  std::uint64_t sample_count = 0;  // Monte Carlo only
  Method method = Method::analytic;
};

}  // namespace nomasec
