#include "cascade/correlations.hpp"

#include <cmath>

#include "cascade/threading.hpp"

namespace cascade {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

complexd pair_detection_amplitude(double t, double tau, const EmitterParams& p) {
  const double support = unit_step(t) * unit_step(tau);
  if (support == 0.0) return {0.0, 0.0};
  const double amp = p.scale * std::sqrt(p.gamma_alpha * p.gamma_beta);
  const complexd first = std::exp(complexd(-p.gamma_alpha * t, -(p.omega_alpha + p.omega_beta) * t));
  const complexd second = std::exp(complexd(-p.gamma_beta * tau, -p.omega_beta * tau));
  return -amp * first * second;
}

double g2_cross_time(double t, double tau, const EmitterParams& p) {
  const double ga = p.gamma_alpha, gb = p.gamma_beta;
  const double pref =
      (p.scale * p.scale / (kPi * kPi)) * ga * gb * (gb / ga - 1.0);
  const double term1 =
      unit_step(t) * std::exp(-2.0 * ga * t) * unit_step(tau) * std::exp(-2.0 * gb * tau);
  const double term2 = unit_step(-tau) * std::exp(2.0 * (gb - ga) * tau) * unit_step(t + tau) *
                       std::exp(-2.0 * ga * t);
  return pref * (term1 + term2);
}

double g2_cross_tau(double tau, const EmitterParams& p) {
  // theta(tau) e^{-2 gb tau} + theta(-tau) e^{2 gb tau} with the half-step
  // convention at tau = 0, i.e. e^{-2 gb |tau|}; the two branches would
  // otherwise double-count the peak.
  const double gb = p.gamma_beta;
  const double pref = (p.scale / kPi) * gb * (gb / p.gamma_alpha - 1.0);
  return pref * std::exp(-2.0 * gb * std::abs(tau));
}

double g2_cross_freq(double omega, double omega_prime, const EmitterParams& p) {
  const double ga = p.gamma_alpha, gb = p.gamma_beta;
  const double s = omega + omega_prime - p.omega_alpha - p.omega_beta;
  const double v = omega_prime - p.omega_beta;
  const double pref = (ga * gb / (kPi * kPi)) * (gb / ga - 1.0);
  const double num = 4.0 * ga * gb + s * v;
  const double den = (s * s + 4.0 * ga * ga) * (v * v + 4.0 * gb * gb);
  return pref * num / den;
}

G2Surface g2_time_surface(const FrequencyGrid& t_axis, const FrequencyGrid& tau_axis,
                          const EmitterParams& p, unsigned threads) {
  G2Surface surf;
  surf.axis1 = t_axis;
  surf.axis2 = tau_axis;
  surf.domain = G2Domain::time_t_tau;
  surf.values = RealMatrix(t_axis.n_points(), tau_axis.n_points());
  parallel_for(t_axis.n_points(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < tau_axis.n_points(); ++j)
        surf.values(i, j) = g2_cross_time(t_axis.at(i), tau_axis.at(j), p);
  });
  return surf;
}

G2Surface g2_freq_surface(const FrequencyGrid& w_axis, const FrequencyGrid& wprime_axis,
                          const EmitterParams& p, unsigned threads) {
  G2Surface surf;
  surf.axis1 = w_axis;
  surf.axis2 = wprime_axis;
  surf.domain = G2Domain::freq_w_wprime;
  surf.log_scale_hint = true;
  surf.values = RealMatrix(w_axis.n_points(), wprime_axis.n_points());
  parallel_for(w_axis.n_points(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < wprime_axis.n_points(); ++j)
        surf.values(i, j) = g2_cross_freq(w_axis.at(i), wprime_axis.at(j), p);
  });
  return surf;
}

}  // namespace cascade
