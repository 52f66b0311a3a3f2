#pragma once

#include <optional>
#include <utility>

#include "cascade/kernels.hpp"
#include "cascade/matrix.hpp"
#include "cascade/params.hpp"

namespace cascade {

// Four-level biexciton cascade: two polarization branches (H/V) with their
// own transition parameters, plus the fine-structure phase accumulated while
// the emitter waits in the split intermediate level.
struct PolarizedCascadeParams {
  EmitterParams branch_h;
  EmitterParams branch_v;
  double delta_fss = 0.0;          // splitting energy [GHz], hbar = 1
  double tau_e = 0.02;             // emission delay [ns]
  std::optional<double> phi_override;  // use this phase directly when set

  double phi() const { return phi_override ? *phi_override : delta_fss * tau_e; }
  void validate() const;
};

// Branch amplitudes at one grid point of the shared (omega_xx, omega_x) plane.
// Each branch is the cascade JSA closed form with its own parameters,
// N_i = scale^2 sqrt(g_ai g_bi) / pi.
std::pair<complexd, complexd> polarized_amplitudes(double omega_xx, double omega_x,
                                                   const PolarizedCascadeParams& p);

// Polarized joint spectral density, 1/2 |eta_H + e^{i phi} eta_V|^2 per cell
// (the global 1/2 from the superposition normalization).
RealMatrix polarized_jsd(const FrequencyGrid& grid_xx, const FrequencyGrid& grid_x,
                         const PolarizedCascadeParams& p, unsigned threads = 1);

}  // namespace cascade
