#pragma once

#include <optional>
#include <string>

#include "cascade/params.hpp"
#include "cascade/polarization.hpp"

namespace cascade {

// Run inputs assembled from a JSON document plus CLI overrides. Every grid is
// optional; commands fall back to the parameter-derived defaults.
struct RunInputs {
  EmitterParams emitter;
  std::optional<FrequencyGrid> grid_k;
  std::optional<FrequencyGrid> grid_q;
  std::optional<TimeGrid> time_grid;
  std::optional<PolarizedCascadeParams> polarized;
};

// Parses a config document. Recognized top-level keys:
//   gamma_alpha, gamma_beta, omega_alpha, omega_beta, scale,
//   grid_k {start, stop, n}, grid_q {start, stop, n},
//   time_grid {start, stop, n},
//   polarized { branch_h {...}, branch_v {...}, delta_fss, tau_e, phi }
// Unknown keys are rejected with an error naming the key.
RunInputs parse_config_json(const std::string& text);
RunInputs load_config_file(const std::string& path);

}  // namespace cascade
