#pragma once

#include <vector>

#include "cascade/kernels.hpp"
#include "cascade/matrix.hpp"
#include "cascade/params.hpp"

namespace cascade {

// Weisskopf-Wigner amplitudes of the three-level cascade, continuum
// normalization: the coupling constants are scale*sqrt(gamma/pi) per branch,
// so that the long-time pair amplitude integrates to |scale|^4 over both
// frequencies. Discrete-mode amplitudes are these times sqrt(dw) per axis.

// Amplitude of |m, 1_k> at time t (one photon emitted, emitter intermediate).
// Removable singularity at (omega_k = omega_alpha, gamma_alpha = gamma_beta)
// evaluated by its series limit when |denominator| < 1e-9.
complexd single_photon_amplitude(double omega_k, double t, const EmitterParams& p);

// Amplitude of |g, 1_k, 1_q> at time t (both photons emitted). Converges
// pointwise to jsa_amplitude as t -> infinity.
complexd two_photon_amplitude(double omega_k, double omega_q, double t,
                              const EmitterParams& p);

// Long-time joint spectral amplitude,
//   N / ((w_q - w_b + i g_b)(w_k + w_q - w_a - w_b + i g_a)),
// N = scale^2 sqrt(g_a g_b) / pi. Integrates to 1 over the full plane at
// scale = 1.
complexd jsa_amplitude(double omega_k, double omega_q, const EmitterParams& p);

// JSA sampled on a rectangular grid. Values carry the closed form rescaled so
// the discrete quadrature sum |values|^2 dk dq is exactly 1: the finite window
// and sampling otherwise leave a few-percent mass defect (see raw_grid_mass).
class JointSpectralAmplitude {
 public:
  JointSpectralAmplitude(FrequencyGrid grid_k, FrequencyGrid grid_q, ComplexMatrix values,
                         double norm_constant, double raw_grid_mass);

  const FrequencyGrid& grid_k() const { return grid_k_; }
  const FrequencyGrid& grid_q() const { return grid_q_; }
  const ComplexMatrix& values() const { return values_; }
  // Effective numerator constant after grid renormalization.
  double norm_constant() const { return norm_constant_; }
  // Quadrature mass of the raw closed form on this grid (diagnostic).
  double raw_grid_mass() const { return raw_grid_mass_; }

  double cell_weight() const { return grid_k_.step() * grid_q_.step(); }
  // Recomputes sum |values|^2 dk dq (row-major, serial).
  double quadrature_mass() const;

 private:
  FrequencyGrid grid_k_, grid_q_;
  ComplexMatrix values_;
  double norm_constant_ = 0.0;
  double raw_grid_mass_ = 0.0;
};

JointSpectralAmplitude make_jsa(const FrequencyGrid& grid_k, const FrequencyGrid& grid_q,
                                const EmitterParams& p, Backend backend = Backend::scalar,
                                unsigned threads = 1);

// Sampled solution of the coupled mode equations (the oracle for the closed
// forms above). Mode frequencies are the grid points; couplings are
// scale*sqrt(gamma dw / pi) per branch.
struct CascadeAmplitudes {
  std::vector<double> times;
  std::vector<complexd> eta_e;          // per save point
  ComplexMatrix eta_m;                  // save point x k-mode
  std::vector<ComplexMatrix> eta_g;     // per save point, k-mode x q-mode
  std::vector<double> probability;      // total norm per save point
};

struct IntegrationOptions {
  // RK4 step = (1/gamma_beta) / step_divisor
  double step_divisor = 400.0;
};

// Fixed-step RK4 integration of the interaction-picture equations of motion.
// time_grid.start must be 0 (the emitter starts excited). Throws
// IntegrationError if the state norm leaves [0.5, 1.5] or goes non-finite.
CascadeAmplitudes integrate_equations_of_motion(const EmitterParams& p,
                                                const FrequencyGrid& grid_k,
                                                const FrequencyGrid& grid_q,
                                                const TimeGrid& time_grid,
                                                const IntegrationOptions& opts = {});

}  // namespace cascade
