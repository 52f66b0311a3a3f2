#include "cascade/spectra.hpp"

#include <cmath>

#include "cascade/errors.hpp"

namespace cascade {

complexd g1(double tau, Branch branch, const EmitterParams& p) {
  const double at = std::abs(tau);
  if (branch == Branch::alpha)
    return std::exp(complexd(-(p.gamma_alpha + p.gamma_beta) * at, p.omega_alpha * tau));
  return std::exp(complexd(-p.gamma_beta * at, p.omega_beta * tau));
}

namespace {

double s_alpha_at(double w, const EmitterParams& p) {
  const double g = p.gamma_alpha + p.gamma_beta;
  const double d = w - p.omega_alpha;
  return p.scale * g / (d * d + g * g);
}

double s_beta_at(double w, const EmitterParams& p) {
  const double d = w - p.omega_beta;
  return p.scale * p.gamma_beta / (d * d + p.gamma_beta * p.gamma_beta);
}

}  // namespace

SpectrumCurve power_spectrum(SpectrumKind kind, const FrequencyGrid& grid,
                             const EmitterParams& p) {
  p.validate();
  SpectrumCurve curve;
  curve.grid = grid;
  curve.kind = kind;
  curve.values.resize(grid.n_points());
  for (std::size_t i = 0; i < grid.n_points(); ++i) {
    const double w = grid.at(i);
    switch (kind) {
      case SpectrumKind::alpha: curve.values[i] = s_alpha_at(w, p); break;
      case SpectrumKind::beta: curve.values[i] = s_beta_at(w, p); break;
      case SpectrumKind::total: curve.values[i] = s_alpha_at(w, p) + s_beta_at(w, p); break;
    }
  }
  return curve;
}

double fitted_fwhm(const FrequencyGrid& grid, const std::vector<double>& values) {
  if (values.size() != grid.n_points() || values.size() < 3)
    throw ComputeError("fitted_fwhm: values do not match the grid");
  std::size_t peak = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[peak]) peak = i;
  const double half = values[peak] / 2.0;

  auto cross = [&](std::size_t from, int dir) -> double {
    std::size_t i = from;
    while (true) {
      const std::size_t next = i + dir;
      if (next >= values.size()) throw ComputeError("fitted_fwhm: half level not crossed");
      if (values[next] <= half) {
        // linear interpolation between samples i and next
        const double f = (values[i] - half) / (values[i] - values[next]);
        return grid.at(i) + f * (grid.at(next) - grid.at(i));
      }
      i = next;
      if (i == 0 || i + 1 == values.size()) {
        if (values[i] > half) throw ComputeError("fitted_fwhm: half level not crossed");
      }
    }
  };
  const double right = cross(peak, +1);
  const double left = cross(peak, -1);
  return right - left;
}

}  // namespace cascade
