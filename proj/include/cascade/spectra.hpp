#pragma once

#include <vector>

#include "cascade/matrix.hpp"
#include "cascade/params.hpp"

namespace cascade {

enum class SpectrumKind { alpha, beta, total };

// Normalized first-order coherence:
//   alpha: exp(i w_a tau - (g_a + g_b)|tau|)
//   beta:  exp(i w_b tau - g_b |tau|)
complexd g1(double tau, Branch branch, const EmitterParams& p);

struct SpectrumCurve {
  FrequencyGrid grid;
  std::vector<double> values;
  SpectrumKind kind = SpectrumKind::total;
};

// Emission power spectrum, a blend of two Lorentzians:
//   S_a(w) = scale (g_a+g_b) / ((w-w_a)^2 + (g_a+g_b)^2)
//   S_b(w) = scale  g_b      / ((w-w_b)^2 + g_b^2)
//   S_total = S_a + S_b, summed pointwise.
SpectrumCurve power_spectrum(SpectrumKind kind, const FrequencyGrid& grid,
                             const EmitterParams& p);

// Full width at half maximum of a sampled peak, bracketing samples
// interpolated linearly. Throws ComputeError if the half level is not
// crossed on both sides.
double fitted_fwhm(const FrequencyGrid& grid, const std::vector<double>& values);

}  // namespace cascade
