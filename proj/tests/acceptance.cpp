// Acceptance suite: one criterion per --criterion index, one line per
// sub-check. Every bound is fixed here in code; measured values are printed
// so a failing line documents itself. The exit code is the number of failed
// sub-checks.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "cascade/amplitudes.hpp"
#include "cascade/correlations.hpp"
#include "cascade/io.hpp"
#include "cascade/kernels.hpp"
#include "cascade/polarization.hpp"
#include "cascade/schmidt.hpp"
#include "cascade/spectra.hpp"

using namespace cascade;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

void report(bool pass, const char* name, double measured, double bound) {
  if (!pass) ++g_failures;
  std::printf("[%s] %-52s measured % .6e  bound % .3e\n", pass ? "PASS" : "FAIL", name, measured,
              bound);
}

void report_le(const char* name, double measured, double bound) {
  report(measured <= bound, name, measured, bound);
}

// ---------------------------------------------------------------- C1
// Schmidt-number closure at the golden configuration.
void criterion1() {
  const Backend be = detect_backend();
  const auto t0 = std::chrono::steady_clock::now();
  for (double r : {1.0, 5.0, 20.0, 40.0}) {
    const EmitterParams p = default_params(r);
    const auto jsa = make_jsa(default_grid_k(p, 512), default_grid_q(p, 512), p, be, 0 + 2);
    const auto res = schmidt_decompose(jsa, be);
    const double rel = std::abs(res.schmidt_number / schmidt_number_analytic(p) - 1.0);
    char name[96];
    std::snprintf(name, sizeof(name), "C1 kappa(512, ratio %g) = %.4f vs %g", r,
                  res.schmidt_number, schmidt_number_analytic(p));
    report_le(name, rel, 0.02);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report_le("C1 runtime [s]", secs, 30.0);
}

// ---------------------------------------------------------------- C2
// Purity identity: partial-trace route == SVD route; closure vs 1/kappa.
void criterion2() {
  const Backend be = detect_backend();
  {
    const EmitterParams p = default_params(1.0);
    const auto jsa = make_jsa(default_grid_k(p, 512), default_grid_q(p, 512), p, be, 2);
    const auto res = schmidt_decompose(jsa, be);
    const double tr2 = density_purity(reduced_density(jsa, Branch::beta, be, 2));
    report_le("C2 |Tr(rho_a^2) - sum lambda^2| (ratio 1)", std::abs(tr2 - res.purity), 1e-6);
    report_le("C2 |purity * kappa_analytic - 1| (ratio 1)",
              std::abs(res.purity * schmidt_number_analytic(p) - 1.0), 0.02);
  }
  {
    const EmitterParams p = default_params(40.0);
    const auto jsa = make_jsa(default_grid_k(p, 256), default_grid_q(p, 256), p, be, 2);
    const auto res = schmidt_decompose(jsa, be);
    const double tr2 = density_purity(reduced_density(jsa, Branch::beta, be, 2));
    report_le("C2 |Tr(rho_a^2) - sum lambda^2| (ratio 40)", std::abs(tr2 - res.purity), 1e-6);
  }
}

// ---------------------------------------------------------------- C3
// JSA normalization and the brute-force kappa denominator.
void criterion3() {
  const Backend be = detect_backend();
  {
    const EmitterParams p = default_params();
    const auto jsa = make_jsa(default_grid_k(p, 512), default_grid_q(p, 512), p, be, 2);
    const double mass = jsa.quadrature_mass();
    const bool pass = mass >= 0.997 && mass <= 1.0 + 1e-12;
    report(pass, "C3 grid quadrature of |eta|^2 in [0.997, 1]", mass, 1.0);
    std::printf("       (raw closed-form mass on this window: %.6f)\n", jsa.raw_grid_mass());
  }
  {
    // literal evaluation of sum_mn |sum_k eta_km eta*_kn|^2 on 96x96
    const EmitterParams p = default_params(1.0);
    const auto gk = default_grid_k(p, 96);
    const auto gq = default_grid_q(p, 96);
    const auto jsa = make_jsa(gk, gq, p, be, 2);
    const double w = std::sqrt(jsa.cell_weight());
    const std::size_t n = 96;
    double denom = 0.0;
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t nn = 0; nn < n; ++nn) {
        complexd acc = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          acc += (w * jsa.values()(k, m)) * std::conj(w * jsa.values()(k, nn));
        denom += std::norm(acc);
      }
    const double rel = std::abs(denom * schmidt_number_analytic(p) - 1.0);
    report_le("C3 brute-force kappa denominator vs 1/kappa (96^2)", rel, 0.05);
  }
}

// ---------------------------------------------------------------- C4
// Spectral widths and the g1 <-> spectrum Fourier pair.
void criterion4() {
  const EmitterParams p = default_params();
  {
    const FrequencyGrid gk = default_grid_k(p, 2048);
    const auto sa = power_spectrum(SpectrumKind::alpha, gk, p);
    report_le("C4 |FWHM(S_alpha) - 2(ga+gb)|",
              std::abs(fitted_fwhm(gk, sa.values) - p.fwhm_alpha()), gk.step());
    const FrequencyGrid gq = default_grid_q(p, 2048);
    const auto sb = power_spectrum(SpectrumKind::beta, gq, p);
    report_le("C4 |FWHM(S_beta) - 2 gb|", std::abs(fitted_fwhm(gq, sb.values) - p.fwhm_beta()),
              gq.step());
  }
  {
    const FrequencyGrid grid(0.0, 5.0, 301);
    const auto sa = power_spectrum(SpectrumKind::alpha, grid, p);
    const auto sb = power_spectrum(SpectrumKind::beta, grid, p);
    const auto st = power_spectrum(SpectrumKind::total, grid, p);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.n_points(); ++i)
      worst = std::max(worst, std::abs(st.values[i] - (sa.values[i] + sb.values[i])));
    report_le("C4 S_total - (S_alpha + S_beta), exact", worst, 0.0);
  }
  {
    // trapezoid transform of g1_alpha against the closed-form curve
    const FrequencyGrid grid = default_grid_k(p, 33);
    const auto spec = power_spectrum(SpectrumKind::alpha, grid, p);
    const double g = p.gamma_alpha + p.gamma_beta;
    const double tau_max = 40.0 / g;
    const std::size_t nt = 40001;
    const double dt = tau_max / (nt - 1);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.n_points(); ++i) {
      const double w = grid.at(i);
      double acc = 0.5;
      for (std::size_t k = 1; k < nt - 1; ++k) {
        const double tau = static_cast<double>(k) * dt;
        acc += (g1(tau, Branch::alpha, p) * std::exp(complexd(0.0, -w * tau))).real();
      }
      worst = std::max(worst, std::abs(acc * dt / spec.values[i] - 1.0));
    }
    report_le("C4 Fourier[g1_alpha] vs S_alpha, worst relative", worst, 1e-2);
  }
}

// ---------------------------------------------------------------- C5
// Mode-equation oracle against the closed forms.
void criterion5() {
  const EmitterParams p = default_params(40.0);
  // the 64-mode window is capped by the discrete-reservoir recurrence time
  // 2 pi / dw > 10 / gamma_beta
  const double half_span = 3.465;
  const auto gk = FrequencyGrid::centered(p.omega_alpha, half_span, 64);
  const auto gq = FrequencyGrid::centered(p.omega_beta, half_span, 64);
  const TimeGrid tg(0.0, 10.0 / p.gamma_beta, 11);
  const auto amp = integrate_equations_of_motion(p, gk, gq, tg);
  const double rtk = std::sqrt(gk.step()), rtq = std::sqrt(gq.step());
  for (std::size_t idx : {std::size_t{1}, std::size_t{10}}) {
    const double t = amp.times[idx];
    double dm = 0.0, dg = 0.0;
    for (std::size_t k = 0; k < 64; ++k) {
      dm = std::max(dm,
                    std::abs(amp.eta_m(idx, k) - rtk * single_photon_amplitude(gk.at(k), t, p)));
      for (std::size_t q = 0; q < 64; ++q)
        dg = std::max(dg, std::abs(amp.eta_g[idx](k, q) -
                                   rtk * rtq * two_photon_amplitude(gk.at(k), gq.at(q), t, p)));
    }
    char name[80];
    std::snprintf(name, sizeof(name), "C5 max|eta_m - closed| at t = %.0f ns", t);
    report_le(name, dm, 1e-3);
    std::snprintf(name, sizeof(name), "C5 max|eta_g - closed| at t = %.0f ns", t);
    report_le(name, dg, 1e-3);
  }
  double worst = 0.0;
  for (double pr : amp.probability) worst = std::max(worst, std::abs(pr - 1.0));
  report_le("C5 probability conservation, worst |sum - 1|", worst, 1e-3);
}

// ---------------------------------------------------------------- C6
// Correlation-function properties.
void criterion6() {
  const EmitterParams p = default_params(40.0);
  {
    double worst = 0.0;
    for (double tau : {0.3, 1.1, 2.9, 7.7})
      worst = std::max(worst, std::abs(g2_cross_tau(tau, p) - g2_cross_tau(-tau, p)));
    report_le("C6 g2x(tau) evenness, worst |f(t)-f(-t)|", worst, 0.0);
  }
  {
    // log-linear decay fit over tau > 0
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = 60;
    for (int i = 0; i < n; ++i) {
      const double tau = 0.1 + 0.2 * i;
      const double y = std::log(g2_cross_tau(tau, p));
      sx += tau; sy += y; sxx += tau * tau; sxy += tau * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    report_le("C6 g2x(tau) decay-rate fit vs 2 gb, relative",
              std::abs(-slope / (2.0 * p.gamma_beta) - 1.0), 0.02);
  }
  {
    EmitterParams peq = p;
    peq.gamma_beta = peq.gamma_alpha;
    double worst = 0.0;
    for (double t : {0.0, 1.0, 10.0, 300.0})
      for (double tau : {-5.0, 0.0, 2.0})
        worst = std::max(worst, std::abs(g2_cross_time(t, tau, peq)));
    report_le("C6 g2x(t,t+tau) vanishes at gamma_a = gamma_b", worst, 0.0);
  }
  {
    const bool pos = g2_cross_freq(p.omega_alpha, p.omega_beta, p) > 0.0;
    EmitterParams inv = default_params(0.5);
    const bool neg = g2_cross_freq(inv.omega_alpha, inv.omega_beta, inv) < 0.0;
    report(pos && neg, "C6 on-resonance sign = sign(gb/ga - 1)", pos && neg ? 1.0 : 0.0, 1.0);
  }
  {
    const FrequencyGrid cut = FrequencyGrid::centered(p.omega_alpha, 20.0 * p.gamma_alpha, 1601);
    std::vector<double> vals(cut.n_points());
    for (std::size_t i = 0; i < cut.n_points(); ++i)
      vals[i] = g2_cross_freq(cut.at(i), p.omega_beta, p);
    const double half_width = fitted_fwhm(cut, vals) / 2.0;
    report_le("C6 anti-diagonal cut half-width vs 2 ga",
              std::abs(half_width - 2.0 * p.gamma_alpha), cut.step());
  }
}

// ---------------------------------------------------------------- C7
// Polarized JSD identities and the frozen golden panels.
PolarizedCascadeParams golden_polarized(double ratio) {
  PolarizedCascadeParams pp;
  const EmitterParams base = default_params(ratio);
  const double fss = 0.08;
  pp.branch_h = base;
  pp.branch_h.omega_alpha = base.omega_alpha - fss / 2.0;
  pp.branch_h.omega_beta = base.omega_beta + fss / 2.0;
  pp.branch_v = base;
  pp.branch_v.omega_alpha = base.omega_alpha + fss / 2.0;
  pp.branch_v.omega_beta = base.omega_beta - fss / 2.0;
  pp.delta_fss = fss;
  pp.phi_override = kPi / 4.0;
  return pp;
}

void criterion7() {
  const EmitterParams base = default_params(40.0);
  const FrequencyGrid gxx = FrequencyGrid::centered(base.omega_alpha, 1.2, 48);
  const FrequencyGrid gx = FrequencyGrid::centered(base.omega_beta, 1.2, 48);
  {
    PolarizedCascadeParams pp;
    pp.branch_h = pp.branch_v = base;
    pp.phi_override = 0.0;
    const auto jsd = polarized_jsd(gxx, gx, pp, 2);
    double worst = 0.0;
    for (std::size_t i = 0; i < gxx.n_points(); ++i)
      for (std::size_t j = 0; j < gx.n_points(); ++j) {
        const double single = std::norm(jsa_amplitude(gxx.at(i), gx.at(j), base));
        worst = std::max(worst, std::abs(jsd(i, j) - 2.0 * single) / (2.0 * single));
      }
    report_le("C7 identical branches, phi=0: (1/2)|2 eta|^2 = 2|eta|^2", worst, 1e-12);

    pp.phi_override = kPi;
    const auto jsd_pi = polarized_jsd(gxx, gx, pp, 2);
    worst = 0.0;
    for (std::size_t i = 0; i < jsd_pi.size(); ++i)
      worst = std::max(worst, std::abs(jsd_pi.data()[i]));
    report_le("C7 identical branches, phi=pi: zero everywhere", worst, 1e-12);
  }
  {
    PolarizedCascadeParams pp = golden_polarized(40.0);
    pp.phi_override = 0.9;
    const auto a = polarized_jsd(gxx, gx, pp, 2);
    pp.phi_override = 0.9 + kPi;
    const auto b = polarized_jsd(gxx, gx, pp, 2);
    double scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) scale = std::max(scale, a.data()[i]);
    double worst = 0.0;
    for (std::size_t i = 0; i < gxx.n_points(); ++i)
      for (std::size_t j = 0; j < gx.n_points(); ++j) {
        const auto [h, v] = polarized_amplitudes(gxx.at(i), gx.at(j), pp);
        worst = std::max(worst,
                         std::abs(a(i, j) + b(i, j) - (std::norm(h) + std::norm(v))) / scale);
      }
    report_le("C7 JSD(phi) + JSD(phi+pi) = |H|^2 + |V|^2, relative", worst, 1e-12);
  }
  // frozen golden panels, bit-exact through the CSV writer (scalar backend)
  for (double ratio : {40.0, 10.0, 2.0}) {
    const PolarizedCascadeParams pp = golden_polarized(ratio);
    const EmitterParams b = default_params(ratio);
    const double half = 8.0 * b.gamma_beta;
    const FrequencyGrid pgxx = FrequencyGrid::centered(b.omega_alpha, half, 64);
    const FrequencyGrid pgx = FrequencyGrid::centered(b.omega_beta, half, 64);
    const auto jsd = polarized_jsd(pgxx, pgx, pp, 1);
    const fs::path tmp = fs::temp_directory_path() / "cascade_acceptance_pol.csv";
    write_real_surface_csv(tmp.string(), "omega_xx_ghz", "omega_x_ghz", "density", pgxx, pgx,
                           jsd);
    char name[96];
    std::snprintf(name, sizeof(name), "%s/polarized_jsd_r%.0f_phi_pi4.csv", CASCADE_GOLDEN_DIR,
                  ratio);
    const bool same = read_text_file(tmp.string()) == read_text_file(name);
    std::snprintf(name, sizeof(name), "C7 golden panel bit-exact (ratio %g, phi=pi/4)", ratio);
    report(same, name, same ? 0.0 : 1.0, 0.0);
    fs::remove(tmp);
  }
}

// ---------------------------------------------------------------- C8
// Thread-count determinism of the artifacts.
void criterion8() {
  const Backend be = detect_backend();
  {
    const EmitterParams p = default_params(20.0);
    const auto gk = default_grid_k(p, 128);
    const auto gq = default_grid_q(p, 128);
    const auto a = make_jsa(gk, gq, p, be, 1);
    const auto b = make_jsa(gk, gq, p, be, 5);
    report(a.values() == b.values() && a.norm_constant() == b.norm_constant(),
           "C8 jsa values bitwise equal, 1 vs 5 threads", 0.0, 0.0);
    const auto r1 = reduced_density(a, Branch::beta, be, 1);
    const auto r5 = reduced_density(b, Branch::beta, be, 5);
    report(r1.matrix == r5.matrix, "C8 reduced density bitwise equal, 1 vs 5 threads", 0.0, 0.0);
  }
  {
    // end to end through the CLI: identical artifact bytes
    const fs::path d1 = fs::temp_directory_path() / "cascade_acc_det1";
    const fs::path d2 = fs::temp_directory_path() / "cascade_acc_det2";
    fs::remove_all(d1);
    fs::remove_all(d2);
    const std::string base = std::string(CASCADE_CLI_PATH) +
                             " jsd --ratio 20 --grid-n 96 >/dev/null 2>&1 ";
    const int rc1 = std::system((base + "--threads 1 --out " + d1.string()).c_str());
    const int rc2 = std::system((base + "--threads 4 --out " + d2.string()).c_str());
    bool same = rc1 == 0 && rc2 == 0 &&
                read_text_file((d1 / "jsd.csv").string()) ==
                    read_text_file((d2 / "jsd.csv").string());
    report(same, "C8 CLI jsd artifact identical, 1 vs 4 threads", same ? 0.0 : 1.0, 0.0);
    fs::remove_all(d1);
    fs::remove_all(d2);
  }
}

}  // namespace

int main(int argc, char** argv) {
  int which = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0) which = std::atoi(argv[i + 1]);

  using Fn = void (*)();
  const Fn criteria[8] = {criterion1, criterion2, criterion3, criterion4,
                          criterion5, criterion6, criterion7, criterion8};
  if (which >= 1 && which <= 8) {
    criteria[which - 1]();
  } else {
    for (Fn fn : criteria) fn();
  }
  if (g_failures)
    std::printf("%d sub-check(s) failed\n", g_failures);
  else
    std::printf("all sub-checks passed\n");
  return g_failures;
}
