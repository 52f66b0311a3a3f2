#include "cascade/polarization.hpp"

#include <cmath>

#include "cascade/amplitudes.hpp"
#include "cascade/errors.hpp"
#include "cascade/threading.hpp"

namespace cascade {

void PolarizedCascadeParams::validate() const {
  branch_h.validate();
  branch_v.validate();
  if (!std::isfinite(delta_fss) || !std::isfinite(tau_e))
    throw ConfigError("PolarizedCascadeParams: delta_fss and tau_e must be finite");
  if (!std::isfinite(phi())) throw ConfigError("PolarizedCascadeParams: phase must be finite");
}

std::pair<complexd, complexd> polarized_amplitudes(double omega_xx, double omega_x,
                                                   const PolarizedCascadeParams& p) {
  return {jsa_amplitude(omega_xx, omega_x, p.branch_h),
          jsa_amplitude(omega_xx, omega_x, p.branch_v)};
}

RealMatrix polarized_jsd(const FrequencyGrid& grid_xx, const FrequencyGrid& grid_x,
                         const PolarizedCascadeParams& p, unsigned threads) {
  p.validate();
  const complexd phase = std::polar(1.0, p.phi());
  RealMatrix out(grid_xx.n_points(), grid_x.n_points());
  parallel_for(grid_xx.n_points(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double wxx = grid_xx.at(i);
      double* row = out.row(i);
      for (std::size_t j = 0; j < grid_x.n_points(); ++j) {
        const auto [eh, ev] = polarized_amplitudes(wxx, grid_x.at(j), p);
        row[j] = 0.5 * std::norm(eh + phase * ev);
      }
    }
  });
  return out;
}

}  // namespace cascade
