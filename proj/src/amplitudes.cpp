#include "cascade/amplitudes.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cascade/errors.hpp"
#include "cascade/threading.hpp"

namespace cascade {

namespace {

constexpr double kPi = 3.14159265358979323846;
// |denominator| below this triggers the removable-singularity branch
// (gamma_alpha = gamma_beta and omega_k = omega_alpha).
constexpr double kSingularTol = 1e-9;

complexd cexp(double re, double im) { return std::exp(complexd(re, im)); }

}  // namespace

complexd single_photon_amplitude(double omega_k, double t, const EmitterParams& p) {
  if (t < 0.0) throw std::invalid_argument("single_photon_amplitude: t must be >= 0");
  const double g_a = p.scale * std::sqrt(p.gamma_alpha / kPi);
  const double s = omega_k - p.omega_alpha;
  const complexd denom(s, p.gamma_alpha - p.gamma_beta);
  const double decay2 = std::exp(-p.gamma_beta * t);
  if (std::abs(denom) < kSingularTol) {
    // (e^{iDt} - 1)/D -> i t as D -> 0
    return -g_a * decay2 * complexd(0.0, t);
  }
  const complexd e1 = cexp(-p.gamma_alpha * t, s * t);
  return -g_a * (e1 - decay2) / denom;
}

complexd two_photon_amplitude(double omega_k, double omega_q, double t,
                              const EmitterParams& p) {
  if (t < 0.0) throw std::invalid_argument("two_photon_amplitude: t must be >= 0");
  const double g_ab = p.scale * p.scale * std::sqrt(p.gamma_alpha * p.gamma_beta) / kPi;
  const double s = omega_k - p.omega_alpha;
  const double u = omega_q - p.omega_beta;
  const complexd denom(s, p.gamma_alpha - p.gamma_beta);
  const complexd z1(u, p.gamma_beta);
  const complexd e_beta = cexp(-p.gamma_beta * t, u * t);
  if (std::abs(denom) < kSingularTol) {
    // L'Hopital limit of (br1 - br2)/D with z2 = z1 + D and the second
    // exponent differing by e^{iDt}.
    return g_ab * (complexd(0.0, t) * e_beta * z1 + (1.0 - e_beta)) / (z1 * z1);
  }
  const complexd z2(s + u, p.gamma_alpha);
  const complexd e_alpha = cexp(-p.gamma_alpha * t, (s + u) * t);
  const complexd br1 = (1.0 - e_beta) / z1;
  const complexd br2 = (1.0 - e_alpha) / z2;
  return g_ab * (br1 - br2) / denom;
}

complexd jsa_amplitude(double omega_k, double omega_q, const EmitterParams& p) {
  const double norm = p.scale * p.scale * std::sqrt(p.gamma_alpha * p.gamma_beta) / kPi;
  const complexd z1(omega_q - p.omega_beta, p.gamma_beta);
  const complexd z2(omega_k + omega_q - p.omega_alpha - p.omega_beta, p.gamma_alpha);
  return norm / (z1 * z2);
}

JointSpectralAmplitude::JointSpectralAmplitude(FrequencyGrid grid_k, FrequencyGrid grid_q,
                                               ComplexMatrix values, double norm_constant,
                                               double raw_grid_mass)
    : grid_k_(grid_k),
      grid_q_(grid_q),
      values_(std::move(values)),
      norm_constant_(norm_constant),
      raw_grid_mass_(raw_grid_mass) {}

double JointSpectralAmplitude::quadrature_mass() const {
  const double w = cell_weight();
  double total = 0.0;
  for (std::size_t i = 0; i < values_.rows(); ++i)
    total += kernels::sum_abs2(values_.row(i), values_.cols(), Backend::scalar) * w;
  return total;
}

JointSpectralAmplitude make_jsa(const FrequencyGrid& grid_k, const FrequencyGrid& grid_q,
                                const EmitterParams& p, Backend backend, unsigned threads) {
  p.validate();
  const std::size_t nk = grid_k.n_points();
  const std::size_t nq = grid_q.n_points();
  ComplexMatrix values(nk, nq);
  std::vector<double> row_mass(nk, 0.0);

  parallel_for(nk, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double wk = grid_k.at(i);
      complexd* row = values.row(i);
      for (std::size_t j = 0; j < nq; ++j) row[j] = jsa_amplitude(wk, grid_q.at(j), p);
      row_mass[i] = kernels::sum_abs2(row, nq, backend);
    }
  });

  const double cell = grid_k.step() * grid_q.step();
  double mass = 0.0;
  for (double rm : row_mass) mass += rm;
  mass *= cell;
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw ComputeError("make_jsa: grid quadrature mass is not positive/finite");

  const double rescale = 1.0 / std::sqrt(mass);
  parallel_for(nk, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      kernels::scale(values.row(i), nq, rescale, backend);
  });

  const double norm0 = p.scale * p.scale * std::sqrt(p.gamma_alpha * p.gamma_beta) / kPi;
  return JointSpectralAmplitude(grid_k, grid_q, std::move(values), norm0 * rescale, mass);
}

namespace {

// Flattened cascade state for the mode-equation integrator.
struct OdeState {
  complexd e;
  std::vector<complexd> m;  // nk
  std::vector<complexd> g;  // nk * nq, row-major in k
};

void rhs(const OdeState& s, OdeState& out, const std::vector<complexd>& phase_a,
         const std::vector<complexd>& phase_b, double g_ak, double g_bq, std::size_t nk,
         std::size_t nq) {
  const complexd minus_i(0.0, -1.0);
  complexd acc(0.0, 0.0);
  for (std::size_t k = 0; k < nk; ++k) acc += s.m[k] * phase_a[k];
  out.e = minus_i * g_ak * acc;
  for (std::size_t k = 0; k < nk; ++k) {
    const complexd* row = s.g.data() + k * nq;
    complexd sum_q(0.0, 0.0);
    for (std::size_t q = 0; q < nq; ++q) sum_q += row[q] * phase_b[q];
    out.m[k] = minus_i * (g_ak * s.e * std::conj(phase_a[k]) + g_bq * sum_q);
  }
  for (std::size_t k = 0; k < nk; ++k) {
    const complexd c = minus_i * g_bq * s.m[k];
    complexd* row = out.g.data() + k * nq;
    for (std::size_t q = 0; q < nq; ++q) row[q] = c * std::conj(phase_b[q]);
  }
}

void add_scaled(const OdeState& a, double w, const OdeState& b, OdeState& out) {
  out.e = a.e + w * b.e;
  for (std::size_t i = 0; i < a.m.size(); ++i) out.m[i] = a.m[i] + w * b.m[i];
  for (std::size_t i = 0; i < a.g.size(); ++i) out.g[i] = a.g[i] + w * b.g[i];
}

double state_norm(const OdeState& s) {
  double n = std::norm(s.e);
  n += kernels::sum_abs2(s.m.data(), s.m.size(), Backend::scalar);
  n += kernels::sum_abs2(s.g.data(), s.g.size(), Backend::scalar);
  return n;
}

}  // namespace

CascadeAmplitudes integrate_equations_of_motion(const EmitterParams& p,
                                                const FrequencyGrid& grid_k,
                                                const FrequencyGrid& grid_q,
                                                const TimeGrid& time_grid,
                                                const IntegrationOptions& opts) {
  p.validate();
  if (time_grid.start() != 0.0)
    throw ConfigError("integrate_equations_of_motion: time_grid must start at 0");
  if (!(opts.step_divisor >= 200.0))
    throw ConfigError("integrate_equations_of_motion: step_divisor must be >= 200");

  const std::size_t nk = grid_k.n_points();
  const std::size_t nq = grid_q.n_points();
  const double g_ak = p.scale * std::sqrt(p.gamma_alpha * grid_k.step() / kPi);
  const double g_bq = p.scale * std::sqrt(p.gamma_beta * grid_q.step() / kPi);

  std::vector<double> det_k(nk), det_q(nq);
  for (std::size_t i = 0; i < nk; ++i) det_k[i] = grid_k.at(i) - p.omega_alpha;
  for (std::size_t j = 0; j < nq; ++j) det_q[j] = grid_q.at(j) - p.omega_beta;

  const double interval = time_grid.step();
  const double base_step = (1.0 / p.gamma_beta) / opts.step_divisor;
  const std::size_t substeps = static_cast<std::size_t>(std::ceil(interval / base_step));
  const double h = interval / static_cast<double>(substeps);

  OdeState y{complexd(1.0, 0.0), std::vector<complexd>(nk, complexd{}),
             std::vector<complexd>(nk * nq, complexd{})};
  OdeState k1 = y, k2 = y, k3 = y, k4 = y, tmp = y;

  // phase_a[k](t) = e^{i(w_a - w_k) t}; advanced by half-step multipliers so
  // the RK4 stages reuse exact complex rotations instead of trig calls.
  std::vector<complexd> pa(nk), pb(nq), pa_half(nk), pb_half(nq);
  std::vector<complexd> pa_mid(nk), pb_mid(nq), pa_end(nk), pb_end(nq);
  for (std::size_t i = 0; i < nk; ++i) {
    pa[i] = 1.0;
    pa_half[i] = std::polar(1.0, -det_k[i] * h / 2.0);
  }
  for (std::size_t j = 0; j < nq; ++j) {
    pb[j] = 1.0;
    pb_half[j] = std::polar(1.0, -det_q[j] * h / 2.0);
  }

  CascadeAmplitudes out;
  out.times.resize(time_grid.n_points());
  out.eta_e.resize(time_grid.n_points());
  out.eta_m = ComplexMatrix(time_grid.n_points(), nk);
  out.eta_g.reserve(time_grid.n_points());
  out.probability.resize(time_grid.n_points());

  auto save = [&](std::size_t idx, double t) {
    out.times[idx] = t;
    out.eta_e[idx] = y.e;
    for (std::size_t k = 0; k < nk; ++k) out.eta_m(idx, k) = y.m[k];
    ComplexMatrix g(nk, nq);
    for (std::size_t k = 0; k < nk; ++k)
      for (std::size_t q = 0; q < nq; ++q) g(k, q) = y.g[k * nq + q];
    out.eta_g.push_back(std::move(g));
    out.probability[idx] = state_norm(y);
  };

  save(0, 0.0);
  double t = 0.0;
  for (std::size_t seg = 1; seg < time_grid.n_points(); ++seg) {
    for (std::size_t step = 0; step < substeps; ++step) {
      for (std::size_t i = 0; i < nk; ++i) {
        pa_mid[i] = pa[i] * pa_half[i];
        pa_end[i] = pa_mid[i] * pa_half[i];
      }
      for (std::size_t j = 0; j < nq; ++j) {
        pb_mid[j] = pb[j] * pb_half[j];
        pb_end[j] = pb_mid[j] * pb_half[j];
      }
      rhs(y, k1, pa, pb, g_ak, g_bq, nk, nq);
      add_scaled(y, h / 2.0, k1, tmp);
      rhs(tmp, k2, pa_mid, pb_mid, g_ak, g_bq, nk, nq);
      add_scaled(y, h / 2.0, k2, tmp);
      rhs(tmp, k3, pa_mid, pb_mid, g_ak, g_bq, nk, nq);
      add_scaled(y, h, k3, tmp);
      rhs(tmp, k4, pa_end, pb_end, g_ak, g_bq, nk, nq);

      y.e += (h / 6.0) * (k1.e + 2.0 * k2.e + 2.0 * k3.e + k4.e);
      for (std::size_t i = 0; i < nk; ++i)
        y.m[i] += (h / 6.0) * (k1.m[i] + 2.0 * k2.m[i] + 2.0 * k3.m[i] + k4.m[i]);
      for (std::size_t i = 0; i < y.g.size(); ++i)
        y.g[i] += (h / 6.0) * (k1.g[i] + 2.0 * k2.g[i] + 2.0 * k3.g[i] + k4.g[i]);
      pa.swap(pa_end);
      pb.swap(pb_end);
      t += h;

      const double nrm = state_norm(y);
      if (!std::isfinite(nrm) || nrm < 0.5 || nrm > 1.5)
        throw IntegrationError("integrate_equations_of_motion: state norm left [0.5, 1.5]", t);
    }
    save(seg, time_grid.at(seg));
  }
  return out;
}

}  // namespace cascade
