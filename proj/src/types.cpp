#include "nomasec/types.hpp"

#include <cmath>

#include "nomasec/model.hpp"

namespace nomasec {

std::string to_string(Method method) {
  switch (method) {
    case Method::analytic: return "analytic";
    case Method::asymptotic: return "asymptotic";
    case Method::monte_carlo: return "mc";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  if (name == "analytic") return Method::analytic;
  if (name == "asymptotic") return Method::asymptotic;
  if (name == "mc" || name == "monte-carlo" || name == "monte_carlo") return Method::monte_carlo;
  throw validation_error("unknown method '" + std::string(name) + "' (expected analytic|asymptotic|mc)");
}

SystemParams SystemParams::make(double path_loss_constant, double path_loss_exponent,
                                double distance_near_m, double distance_far_m,
                                double transmit_snr, double residual_interference) {
  if (!(path_loss_constant > 0.0)) throw std::domain_error("path loss constant must be positive");
  if (!(distance_near_m > 0.0) || !(distance_far_m > 0.0))
    throw std::domain_error("distances must be positive");
  if (!(transmit_snr > 0.0)) throw std::domain_error("transmit SNR must be positive");
  if (!(residual_interference >= 0.0 && residual_interference <= 1.0))
    throw std::domain_error("residual interference factor must lie in [0, 1]");

  SystemParams p;
  p.path_loss_constant = path_loss_constant;
  p.path_loss_exponent = path_loss_exponent;
  p.distance_near_m = distance_near_m;
  p.distance_far_m = distance_far_m;
  p.transmit_snr = transmit_snr;
  p.residual_interference = residual_interference;
  p.mean_gain_near = mean_channel_gain(distance_near_m, path_loss_constant, path_loss_exponent);
  p.mean_gain_far = mean_channel_gain(distance_far_m, path_loss_constant, path_loss_exponent);
  return p;
}

SecrecyTargets SecrecyTargets::make(double threshold_near, double threshold_far) {
  if (!(threshold_near >= 0.0) || !(threshold_far >= 0.0))
    throw std::domain_error("threshold secrecy rates must be non-negative");
  SecrecyTargets t;
  t.threshold_near = threshold_near;
  t.threshold_far = threshold_far;
  t.pi_near = std::exp2(threshold_near);
  t.pi_far = std::exp2(threshold_far);
  return t;
}

DecodingOrder DecodingOrder::from_index(int order_index) {
  switch (order_index) {
    case 1: return d1();
    case 2: return d2();
    case 3: return d3();
    case 4: return d4();
    default: throw std::domain_error("decoding order index must be in 1..4");
  }
}

DecodingOrder DecodingOrder::from_string(std::string_view name) {
  if (name.size() == 2 && (name[0] == 'D' || name[0] == 'd') && name[1] >= '1' && name[1] <= '4')
    return from_index(name[1] - '0');
  throw validation_error("unknown decoding order '" + std::string(name) + "' (expected D1..D4)");
}

int DecodingOrder::index() const {
  // The per-user first-decoded pair identifies the order uniquely.
  const int f1 = first_decoded(1), f2 = first_decoded(2);
  if (f1 == 2 && f2 == 2) return 1;
  if (f1 == 2 && f2 == 1) return 2;
  if (f1 == 1 && f2 == 2) return 3;
  return 4;
}

std::string DecodingOrder::name() const { return "D" + std::to_string(index()); }

}  // namespace nomasec
