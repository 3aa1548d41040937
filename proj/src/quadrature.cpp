#include "nomasec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace nomasec {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

constexpr int kMaxSubdivisions = 4000;

struct Interval {
  double a, b;
  double value;
  double error;
};

bool operator<(const Interval& lhs, const Interval& rhs) { return lhs.error < rhs.error; }

Interval gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * fsum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.relative_tolerance > 0.0) || !(cfg.absolute_tolerance > 0.0))
    throw std::domain_error("quadrature tolerances must be positive");
  if (!(cfg.tail_cutoff_mean_multiples >= 10.0))
    throw std::domain_error("tail cutoff must be at least 10 mean multiples");
}

double integrate_decaying(const std::function<double(double)>& f, double lower, double upper,
                          const QuadratureConfig& cfg, double decay_mean) {
  validate(cfg);
  if (std::isinf(upper)) {
    if (!(decay_mean > 0.0))
      throw std::domain_error("infinite upper limit requires a positive decay mean");
    upper = lower + cfg.tail_cutoff_mean_multiples * decay_mean;
  }
  if (!(upper >= lower)) throw std::domain_error("upper limit must not precede lower limit");
  if (upper == lower) return 0.0;

  std::priority_queue<Interval> queue;
  queue.push(gauss_kronrod_15(f, lower, upper));
  double total_value = queue.top().value;
  double total_error = queue.top().error;

  while (total_error > std::max(cfg.absolute_tolerance,
                                cfg.relative_tolerance * std::abs(total_value))) {
    if (static_cast<int>(queue.size()) >= kMaxSubdivisions)
      throw convergence_error("quadrature failed to converge within the subdivision budget",
                              total_value, total_error);
    const Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw convergence_error("quadrature interval collapsed below machine resolution",
                              total_value, total_error);
    const Interval left = gauss_kronrod_15(f, worst.a, mid);
    const Interval right = gauss_kronrod_15(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  return total_value;
}

}  // namespace nomasec
