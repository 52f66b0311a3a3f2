#pragma once

#include <cstddef>
#include <vector>

#include "cascade/amplitudes.hpp"
#include "cascade/kernels.hpp"
#include "cascade/matrix.hpp"
#include "cascade/params.hpp"

namespace cascade {

// Result of the Schmidt analysis of a sampled two-photon state.
// Invariants: lambda_k >= 0, non-increasing, sum = 1; kappa >= 1;
// purity = 1/kappa by construction.
struct SchmidtResult {
  std::vector<double> coefficients;  // lambda_k, descending
  double schmidt_number = 1.0;       // kappa = 1 / sum lambda^2
  double purity = 1.0;               // sum lambda^2
  std::size_t rank_effective = 0;    // # lambda above threshold
  double rank_threshold = 1e-6;
  FrequencyGrid grid_k, grid_q;
};

// Discrete reduced density matrix of one photon, unit trace. Entries are the
// partial trace of the cell-weighted state: rho = W W^H (or W^T conj(W)) with
// W(i,j) = eta(w_i, w_j) sqrt(dk dq). The continuum kernel is rho / dw.
struct ReducedDensity {
  FrequencyGrid basis_grid;
  ComplexMatrix matrix;
};

// Which subsystem to trace out. trace_out = beta yields rho_alpha.
ReducedDensity reduced_density(const JointSpectralAmplitude& jsa, Branch trace_out,
                               Backend backend = Backend::scalar, unsigned threads = 1);

// Tr(rho^2): heralded-photon purity by the density-matrix route.
double density_purity(const ReducedDensity& rho);

// Schmidt spectrum from singular values of the cell-weighted amplitude
// matrix; identical (to numerical precision) whether derived through rho_a
// or rho_b. Throws on degenerate grids (n < 2).
SchmidtResult schmidt_decompose(const JointSpectralAmplitude& jsa,
                                Backend backend = Backend::scalar);

// Closed form kappa = 1 + gamma_beta / gamma_alpha.
double schmidt_number_analytic(const EmitterParams& p);

// Piecewise-basis approximation to the Schmidt coefficients: lambda_s =
// (g_b/pi) 2 g_a / ((2 g_a N_s - w_b)^2 + g_b^2) on an integer window of
// n_terms centered where 2 g_a N_s = w_b. Throws if the window captures less
// than 99.9% of the Lorentzian mass, reporting the captured fraction.
std::vector<double> schmidt_coefficients_analytic(const EmitterParams& p, std::size_t n_terms);

double purity(const SchmidtResult& result);  // sum lambda^2 = 1/kappa

// |eta|^2 elementwise; integrates to 1 under the cell weights.
RealMatrix joint_spectral_density(const JointSpectralAmplitude& jsa,
                                  Backend backend = Backend::scalar, unsigned threads = 1);

// Marginal over the other axis: sum_j |eta(i,j)|^2 dw_other. The beta
// marginal approximates the Lorentzian line g_b/pi / ((w-w_b)^2 + g_b^2).
std::vector<double> jsd_marginal(const JointSpectralAmplitude& jsa, Branch keep);

}  // namespace cascade
