#pragma once

#include <cstddef>

namespace cascade {

// The two emission branches of the cascade: alpha is the upper (first)
// transition, beta the lower (second).
enum class Branch { alpha, beta };

// Physical constant bundle for the dipole-to-rate conversion. Defaults are
// dimensionless (all ones) so callers control the unit system; SI values are
// available for convenience.
struct PhysicalConstants {
  double eps0 = 1.0;
  double hbar = 1.0;
  double c = 1.0;

  static PhysicalConstants si();
};

// Radiative decay half-rate gamma = (1/4 pi eps0) * 4 w^3 mu^2 / (3 hbar c^3).
// Monotone increasing in both omega and dipole_sq; throws on non-positive input.
double decay_rate_from_dipole(double omega, double dipole_sq,
                              const PhysicalConstants& k = PhysicalConstants{});

// Three-level cascade emitter. Frequencies and half-rates in GHz, hbar = 1.
// `scale` is a dimensionless overall prefactor standing in for the quantization
// volume factors; all normalized quantities are independent of it.
struct EmitterParams {
  double gamma_alpha = 0.005;  // upper (biexciton) transition half-rate
  double gamma_beta = 0.2;     // lower (exciton) transition half-rate
  double omega_alpha = 1.5;    // upper transition center frequency
  double omega_beta = 3.5;     // lower transition center frequency
  double scale = 1.0;

  // Natural full widths of the two emission lines.
  double fwhm_alpha() const { return 2.0 * (gamma_alpha + gamma_beta); }
  double fwhm_beta() const { return 2.0 * gamma_beta; }

  void validate() const;  // throws ConfigError on non-positive values
};

// Reference parameter set: gamma_alpha = 0.005 GHz, omega_alpha = 1.5 GHz,
// omega_beta = 3.5 GHz, gamma_beta = ratio * gamma_alpha.
EmitterParams default_params(double ratio = 40.0);

// Uniform frequency axis [start, stop], n_points >= 2 samples inclusive.
class FrequencyGrid {
 public:
  FrequencyGrid() = default;
  FrequencyGrid(double start, double stop, std::size_t n_points);

  static FrequencyGrid centered(double center, double half_span, std::size_t n_points);

  double start() const { return start_; }
  double stop() const { return stop_; }
  std::size_t n_points() const { return n_; }
  double step() const { return (stop_ - start_) / static_cast<double>(n_ - 1); }
  double at(std::size_t i) const { return start_ + static_cast<double>(i) * step(); }
  double span() const { return stop_ - start_; }

 private:
  double start_ = 0.0;
  double stop_ = 1.0;
  std::size_t n_ = 2;
};

class TimeGrid {
 public:
  TimeGrid() = default;
  TimeGrid(double start, double stop, std::size_t n_points);

  double start() const { return start_; }
  double stop() const { return stop_; }
  std::size_t n_points() const { return n_; }
  double step() const { return (stop_ - start_) / static_cast<double>(n_ - 1); }
  double at(std::size_t i) const { return start_ + static_cast<double>(i) * step(); }

 private:
  double start_ = 0.0;
  double stop_ = 1.0;
  std::size_t n_ = 2;
};

// Default sampling windows: +-`linewidths` natural full widths around each
// line center. Lorentzian tails decay slowly; narrower windows visibly bias
// the purity integrals.
FrequencyGrid default_grid_k(const EmitterParams& p, std::size_t n_points = 512,
                             double linewidths = 40.0);
FrequencyGrid default_grid_q(const EmitterParams& p, std::size_t n_points = 512,
                             double linewidths = 40.0);

}  // namespace cascade
