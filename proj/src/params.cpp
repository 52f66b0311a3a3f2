#include "cascade/params.hpp"

#include <cmath>
#include <string>

#include "cascade/errors.hpp"

namespace cascade {

PhysicalConstants PhysicalConstants::si() {
  return PhysicalConstants{8.8541878128e-12, 1.054571817e-34, 2.99792458e8};
}

double decay_rate_from_dipole(double omega, double dipole_sq, const PhysicalConstants& k) {
  if (!(omega > 0.0)) throw ConfigError("decay_rate_from_dipole: omega must be > 0");
  if (!(dipole_sq > 0.0)) throw ConfigError("decay_rate_from_dipole: dipole_sq must be > 0");
  if (!(k.eps0 > 0.0 && k.hbar > 0.0 && k.c > 0.0))
    throw ConfigError("decay_rate_from_dipole: constants must be > 0");
  const double pi = 3.14159265358979323846;
  return (1.0 / (4.0 * pi * k.eps0)) * (4.0 * omega * omega * omega * dipole_sq) /
         (3.0 * k.hbar * k.c * k.c * k.c);
}

void EmitterParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw ConfigError(std::string("EmitterParams: ") + name + " must be positive and finite");
  };
  positive(gamma_alpha, "gamma_alpha");
  positive(gamma_beta, "gamma_beta");
  positive(omega_alpha, "omega_alpha");
  positive(omega_beta, "omega_beta");
  positive(scale, "scale");
}

EmitterParams default_params(double ratio) {
  if (!(ratio > 0.0)) throw ConfigError("default_params: ratio must be > 0");
  EmitterParams p;
  p.gamma_alpha = 0.005;
  p.gamma_beta = ratio * p.gamma_alpha;
  p.omega_alpha = 1.5;
  p.omega_beta = 3.5;
  p.scale = 1.0;
  return p;
}

FrequencyGrid::FrequencyGrid(double start, double stop, std::size_t n_points)
    : start_(start), stop_(stop), n_(n_points) {
  if (!(stop > start)) throw ConfigError("FrequencyGrid: stop must exceed start");
  if (n_points < 2) throw ConfigError("FrequencyGrid: n_points must be >= 2");
}

FrequencyGrid FrequencyGrid::centered(double center, double half_span, std::size_t n_points) {
  return FrequencyGrid(center - half_span, center + half_span, n_points);
}

TimeGrid::TimeGrid(double start, double stop, std::size_t n_points)
    : start_(start), stop_(stop), n_(n_points) {
  if (!(stop > start)) throw ConfigError("TimeGrid: stop must exceed start");
  if (n_points < 2) throw ConfigError("TimeGrid: n_points must be >= 2");
}

FrequencyGrid default_grid_k(const EmitterParams& p, std::size_t n_points, double linewidths) {
  return FrequencyGrid::centered(p.omega_alpha, linewidths * p.fwhm_alpha(), n_points);
}

FrequencyGrid default_grid_q(const EmitterParams& p, std::size_t n_points, double linewidths) {
  return FrequencyGrid::centered(p.omega_beta, linewidths * p.fwhm_beta(), n_points);
}

}  // namespace cascade
