#pragma once

#include <cmath>
#include <numbers>

#include "nomasec/types.hpp"

namespace nomasec {

/// Mean channel power gain lambda = L_p * d^-e for a link of length d.
inline double mean_channel_gain(double distance_m, double path_loss_constant,
                                double path_loss_exponent) {
  if (!(distance_m > 0.0)) throw std::domain_error("distance must be positive");
  if (!(path_loss_constant > 0.0)) throw std::domain_error("path loss constant must be positive");
  return path_loss_constant * std::pow(distance_m, -path_loss_exponent);
}

/// Transmit SNR (linear) from the average received SNR at the far user in dB:
/// rho_r is read as rho_t * lambda_2, so rho_t = 10^(rho_r_db/10) / lambda_2.
inline double rho_t_from_rho_r(double rho_r_db, double mean_gain_far) {
  if (!(mean_gain_far > 0.0)) throw std::domain_error("far-user mean gain must be positive");
  return std::pow(10.0, rho_r_db / 10.0) / mean_gain_far;
}

/// SINRs for every (signal, receiver) pair under the given decoding order
/// with the linear residual-interference model.
///
/// At each receiver the stage-1 signal sees the other signal at full power;
/// the stage-2 signal sees a fraction beta of the already-cancelled one.
inline SinrSet sinr_set(const DecodingOrder& order, const ChannelRealization& ch, double alpha,
                        const SystemParams& params) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("power allocation alpha must lie strictly inside (0, 1)");
  if (!(ch.gain_near >= 0.0) || !(ch.gain_far >= 0.0) || !std::isfinite(ch.gain_near) ||
      !std::isfinite(ch.gain_far))
    throw std::domain_error("channel power gains must be finite and non-negative");

  const double inv_rho = 1.0 / params.transmit_snr;
  const double beta = params.residual_interference;
  const double gain[2] = {ch.gain_near, ch.gain_far};
  const double power[2] = {alpha, 1.0 - alpha};

  SinrSet s;
  for (int m = 1; m <= 2; ++m) {
    const double h = gain[m - 1];
    const int first = order.decoded_at(m, 1);
    const int second = order.decoded_at(m, 2);
    s.at(first, m) = power[first - 1] * h / (power[second - 1] * h + inv_rho);
    s.at(second, m) = power[second - 1] * h / (beta * power[first - 1] * h + inv_rho);
  }
  return s;
}

/// Data rates R_nm = log2(1 + Gamma_nm) and signed secrecy rates.
inline SecrecyRates secrecy_rates(const SinrSet& sinrs) {
  SecrecyRates r;
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m)
      r.data_rate[n - 1][m - 1] = std::log1p(sinrs.at(n, m)) / std::numbers::ln2;
  r.rate_near = r.at(1, 1) - r.at(1, 2);
  r.rate_far = r.at(2, 2) - r.at(2, 1);
  return r;
}

/// Power-allocation interval (lower, 1 + lower) whose interior gives both
/// users a positive secrecy rate under D2, with
/// lower = (|h_1|^2 - |h_2|^2) / (|h_1|^2 |h_2|^2 rho_t (1 - beta)).
/// Requires gain_near >= gain_far > 0 and beta < 1.
inline PaBounds pa_bounds(const ChannelRealization& ch, const SystemParams& params) {
  const double x = ch.gain_near, y = ch.gain_far;
  if (!(y > 0.0) || !(x >= y))
    throw ordering_error("PA bounds require gain_near >= gain_far > 0");
  if (params.residual_interference >= 1.0)
    throw degenerate_parameter_error("PA bounds are undefined at beta = 1");
  const double gap =
      (x - y) / (x * y * params.transmit_snr * (1.0 - params.residual_interference));
  return {gap, 1.0 + gap};
}

}  // namespace nomasec
