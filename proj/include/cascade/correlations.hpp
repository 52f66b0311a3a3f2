#pragma once

#include <vector>

#include "cascade/matrix.hpp"
#include "cascade/params.hpp"

namespace cascade {

// Step convention: theta(0) = 1 (detection at t and t + tau, the second
// photon never precedes the first).
inline double unit_step(double x) { return x >= 0.0 ? 1.0 : 0.0; }

// Two-photon detection amplitude for detection at t and t + tau:
//   -scale sqrt(g_a g_b) e^{-(i(w_a+w_b)+g_a) t} theta(t) e^{-(i w_b+g_b) tau} theta(tau)
complexd pair_detection_amplitude(double t, double tau, const EmitterParams& p);

// Normalized cross correlation in time, two step-function terms:
//   (scale^2 g_a g_b / pi^2)(g_b/g_a - 1) [ theta(t) e^{-2 g_a t} theta(tau) e^{-2 g_b tau}
//     + theta(-tau) e^{2(g_b-g_a) tau} theta(t+tau) e^{-2 g_a t} ]
double g2_cross_time(double t, double tau, const EmitterParams& p);

// Long-time average over t; even in tau:
//   (scale g_b / pi)(g_b/g_a - 1) [ theta(tau) e^{-2 g_b tau} + theta(-tau) e^{2 g_b tau} ]
double g2_cross_tau(double tau, const EmitterParams& p);

// Frequency-domain cross correlation:
//   (g_a g_b / pi^2)(g_b/g_a - 1) *
//     [4 g_a g_b + (w+w'-w_a-w_b)(w'-w_b)] /
//     ([(w+w'-w_a-w_b)^2 + 4 g_a^2][(w'-w_b)^2 + 4 g_b^2])
double g2_cross_freq(double omega, double omega_prime, const EmitterParams& p);

enum class G2Domain { time_t_tau, freq_w_wprime };

struct G2Surface {
  FrequencyGrid axis1;  // t (ns) or omega (GHz)
  FrequencyGrid axis2;  // tau (ns) or omega' (GHz)
  RealMatrix values;
  G2Domain domain = G2Domain::time_t_tau;
  bool log_scale_hint = false;
};

G2Surface g2_time_surface(const FrequencyGrid& t_axis, const FrequencyGrid& tau_axis,
                          const EmitterParams& p, unsigned threads = 1);
G2Surface g2_freq_surface(const FrequencyGrid& w_axis, const FrequencyGrid& wprime_axis,
                          const EmitterParams& p, unsigned threads = 1);

}  // namespace cascade
