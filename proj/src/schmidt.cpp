#include "cascade/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cascade/errors.hpp"
#include "cascade/svd.hpp"
#include "cascade/threading.hpp"

namespace cascade {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMassTol = 1e-2;  // precondition bound on the quadrature mass

void require_normalized(const JointSpectralAmplitude& jsa, const char* where) {
  const double mass = jsa.quadrature_mass();
  if (std::abs(mass - 1.0) > kMassTol)
    throw ComputeError(std::string(where) + ": jsa quadrature mass " + std::to_string(mass) +
                       " deviates from 1 by more than 1e-2");
}

// Cell-weighted amplitude matrix W(i,j) = eta(w_i, w_j) sqrt(dk dq); W has
// unit Frobenius norm when the jsa is grid-normalized.
ComplexMatrix weighted_matrix(const JointSpectralAmplitude& jsa) {
  ComplexMatrix w = jsa.values();
  const double f = std::sqrt(jsa.cell_weight());
  for (std::size_t i = 0; i < w.size(); ++i) w.data()[i] *= f;
  return w;
}

}  // namespace

ReducedDensity reduced_density(const JointSpectralAmplitude& jsa, Branch trace_out,
                               Backend backend, unsigned threads) {
  require_normalized(jsa, "reduced_density");
  ComplexMatrix w = weighted_matrix(jsa);
  ReducedDensity rho;
  if (trace_out == Branch::beta) {
    // rho_alpha(k,k') = sum_q W(k,q) conj(W(k',q))
    rho.basis_grid = jsa.grid_k();
    rho.matrix = gram_rows(w, backend, threads);
  } else {
    // rho_beta(q,q') = sum_k W(k,q) conj(W(k,q')): transpose, then row Gram.
    ComplexMatrix wt(w.cols(), w.rows());
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) wt(j, i) = w(i, j);
    rho.basis_grid = jsa.grid_q();
    rho.matrix = gram_rows(wt, backend, threads);
  }
  return rho;
}

double density_purity(const ReducedDensity& rho) {
  // Tr(rho^2) = sum_{ij} |rho_ij|^2 for Hermitian rho
  double acc = 0.0;
  for (std::size_t i = 0; i < rho.matrix.rows(); ++i)
    acc += kernels::sum_abs2(rho.matrix.row(i), rho.matrix.cols(), Backend::scalar);
  return acc;
}

SchmidtResult schmidt_decompose(const JointSpectralAmplitude& jsa, Backend backend) {
  if (jsa.grid_k().n_points() < 2 || jsa.grid_q().n_points() < 2)
    throw ComputeError("schmidt_decompose: degenerate grid (n < 2)");
  require_normalized(jsa, "schmidt_decompose");

  SvdOptions opts;
  opts.backend = backend;
  const std::vector<double> sv = singular_values(weighted_matrix(jsa), opts);

  double total = 0.0;
  for (double s : sv) total += s * s;

  SchmidtResult res;
  res.grid_k = jsa.grid_k();
  res.grid_q = jsa.grid_q();
  res.coefficients.resize(sv.size());
  double sum2 = 0.0;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    res.coefficients[i] = sv[i] * sv[i] / total;
    sum2 += res.coefficients[i] * res.coefficients[i];
  }
  res.purity = sum2;
  res.schmidt_number = 1.0 / sum2;
  res.rank_effective = static_cast<std::size_t>(std::count_if(
      res.coefficients.begin(), res.coefficients.end(),
      [&](double l) { return l > res.rank_threshold; }));
  return res;
}

double schmidt_number_analytic(const EmitterParams& p) {
  p.validate();
  return 1.0 + p.gamma_beta / p.gamma_alpha;
}

std::vector<double> schmidt_coefficients_analytic(const EmitterParams& p, std::size_t n_terms) {
  p.validate();
  if (n_terms < 3) throw ConfigError("schmidt_coefficients_analytic: n_terms must be >= 3");
  const double ga = p.gamma_alpha, gb = p.gamma_beta;
  // integer index where the 2 g_a comb crosses the beta line center
  const long long center = std::llround(p.omega_beta / (2.0 * ga));
  const long long half = static_cast<long long>(n_terms / 2);

  std::vector<double> lambda;
  lambda.reserve(n_terms);
  double captured = 0.0;
  for (long long s = center - half; s <= center + half; ++s) {
    const double x = 2.0 * ga * static_cast<double>(s) - p.omega_beta;
    const double l = (gb / kPi) * 2.0 * ga / (x * x + gb * gb);
    lambda.push_back(l);
    captured += l;
  }
  if (captured < 0.999)
    throw ComputeError("schmidt_coefficients_analytic: window too narrow, captured mass " +
                       std::to_string(captured));
  std::sort(lambda.begin(), lambda.end(), std::greater<double>());
  return lambda;
}

double purity(const SchmidtResult& result) {
  double sum2 = 0.0;
  for (double l : result.coefficients) sum2 += l * l;
  return sum2;
}

RealMatrix joint_spectral_density(const JointSpectralAmplitude& jsa, Backend backend,
                                  unsigned threads) {
  const ComplexMatrix& v = jsa.values();
  RealMatrix out(v.rows(), v.cols());
  parallel_for(v.rows(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      kernels::abs2(v.row(i), out.row(i), v.cols(), backend);
  });
  return out;
}

std::vector<double> jsd_marginal(const JointSpectralAmplitude& jsa, Branch keep) {
  const ComplexMatrix& v = jsa.values();
  if (keep == Branch::alpha) {
    // integrate over omega_q: rows are contiguous
    std::vector<double> out(v.rows());
    for (std::size_t i = 0; i < v.rows(); ++i)
      out[i] = kernels::sum_abs2(v.row(i), v.cols(), Backend::scalar) * jsa.grid_q().step();
    return out;
  }
  std::vector<double> out(v.cols(), 0.0);
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const complexd* row = v.row(i);
    for (std::size_t j = 0; j < v.cols(); ++j) out[j] += std::norm(row[j]);
  }
  const double dk = jsa.grid_k().step();
  for (double& x : out) x *= dk;
  return out;
}

}  // namespace cascade
