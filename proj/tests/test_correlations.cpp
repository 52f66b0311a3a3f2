#include <doctest.h>

#include <cmath>
#include <vector>

#include "cascade/amplitudes.hpp"
#include "cascade/correlations.hpp"
#include "cascade/io.hpp"
#include "cascade/spectra.hpp"
#include "oracle_helpers.hpp"

using namespace cascade;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("pair amplitude vanishes off its step-function support") {
  const EmitterParams p = default_params();
  CHECK(pair_detection_amplitude(-1.0, 0.5, p) == complexd(0.0, 0.0));
  CHECK(pair_detection_amplitude(1.0, -0.5, p) == complexd(0.0, 0.0));
  CHECK(std::abs(pair_detection_amplitude(0.0, 0.0, p)) > 0.0);  // theta(0) = 1
}

TEST_CASE("pair amplitude modulus factorizes into the two decays") {
  const EmitterParams p = default_params();
  const double p00 = std::norm(pair_detection_amplitude(0.0, 0.0, p));
  oracle::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const double t = rng.range(0.0, 30.0), tau = rng.range(0.0, 10.0);
    const double got = std::norm(pair_detection_amplitude(t, tau, p)) / p00;
    const double want = std::exp(-2.0 * p.gamma_alpha * t - 2.0 * p.gamma_beta * tau);
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("mode-sum detection density equals the projector route exactly") {
  // |<0|E+E+|2P>|^2 computed once as |sum eta e^{...}|^2 and once as the
  // expanded double sum over mode pairs; the vacuum projector makes these
  // identical up to roundoff even on a coarse 16x16 mode set.
  const EmitterParams p = default_params();
  const auto gk = FrequencyGrid::centered(p.omega_alpha, 8.0 * p.gamma_beta, 16);
  const auto gq = FrequencyGrid::centered(p.omega_beta, 8.0 * p.gamma_beta, 16);
  const double rt = std::sqrt(gk.step() * gq.step());
  ComplexMatrix eta(16, 16);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) eta(i, j) = rt * jsa_amplitude(gk.at(i), gq.at(j), p);

  for (auto [t, tau] : {std::pair{1.5, 0.3}, {8.0, 2.0}}) {
    complexd amp = 0;
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j)
        amp += eta(i, j) * std::exp(complexd(0.0, -gk.at(i) * t - gq.at(j) * (t + tau)));
    const double route_a = std::norm(amp);

    double route_b = 0.0;  // sum over (kq),(k'q') of eta* eta e^{i(...)}
    complexd acc = 0;
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j)
        for (std::size_t i2 = 0; i2 < 16; ++i2)
          for (std::size_t j2 = 0; j2 < 16; ++j2) {
            const double phase = (gk.at(i) - gk.at(i2)) * t + (gq.at(j) - gq.at(j2)) * (t + tau);
            acc += std::conj(eta(i2, j2)) * eta(i, j) * std::exp(complexd(0.0, -phase));
          }
    route_b = acc.real();
    CHECK(std::abs(route_a - route_b) <= 1e-6 * route_a);
  }
}

TEST_CASE("resolved mode-sum reproduces the closed-form pair amplitude") {
  // The transform of the 1/(v + i gamma) tails converges only like
  // 1/(window * time), so the comparison needs a wide window, a mode
  // spacing below gamma_alpha, and times a few lifetimes in.
  const EmitterParams p = default_params();
  const std::size_t n = 2048;
  const auto gk = FrequencyGrid::centered(p.omega_alpha, 20.0 * p.gamma_beta, n);
  const auto gq = FrequencyGrid::centered(p.omega_beta, 20.0 * p.gamma_beta, n);
  const double conv = 4.0 * kPi / std::sqrt(gk.step() * gq.step());
  std::vector<complexd> row_phase(n), col_phase(n);
  for (auto [t, tau] : {std::pair{15.0, 2.0}, {25.0, 3.0}}) {
    for (std::size_t i = 0; i < n; ++i) {
      row_phase[i] = std::exp(complexd(0.0, -gk.at(i) * t));
      col_phase[i] = std::exp(complexd(0.0, -gq.at(i) * (t + tau)));
    }
    complexd amp = 0;
    for (std::size_t i = 0; i < n; ++i) {
      complexd inner = 0;
      for (std::size_t j = 0; j < n; ++j)
        inner += jsa_amplitude(gk.at(i), gq.at(j), p) * col_phase[j];
      amp += std::sqrt(gk.step() * gq.step()) * inner * row_phase[i];
    }
    const double got = std::abs(amp);
    const double want = conv * std::abs(pair_detection_amplitude(t, tau, p));
    CHECK(got == doctest::Approx(want).epsilon(0.10));
  }
}

TEST_CASE("g2 time correlation vanishes for equal decay rates") {
  EmitterParams p = default_params();
  p.gamma_beta = p.gamma_alpha;
  oracle::Rng rng(17);
  for (int i = 0; i < 100; ++i)
    CHECK(g2_cross_time(rng.range(0.0, 100.0), rng.range(-50.0, 50.0), p) == 0.0);
}

TEST_CASE("g2 time correlation scales exponentially on the positive-tau support") {
  const EmitterParams p = default_params();
  const double base = g2_cross_time(1.0, 0.5, p);
  CHECK(base > 0.0);
  CHECK(g2_cross_time(1.0, 1.0, p) / base ==
        doctest::Approx(std::exp(-2.0 * p.gamma_beta * 0.5)).epsilon(1e-12));
}

TEST_CASE("g2 time surface decays at 2 gamma_alpha in t and 2 gamma_beta in tau") {
  const EmitterParams p = default_params();
  const FrequencyGrid t_axis(0.0, 4.0 / p.gamma_alpha, 33);
  const FrequencyGrid tau_axis(-1.5 / p.gamma_alpha, 1.5 / p.gamma_alpha, 25);
  const auto surf = g2_time_surface(t_axis, tau_axis, p, 2);

  // log-linear slope along t at fixed positive tau
  std::size_t j0 = 0;
  while (tau_axis.at(j0) <= 0.0) ++j0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < t_axis.n_points(); ++i) {
    const double x = t_axis.at(i), y = std::log(surf.values(i, j0));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double nn = t_axis.n_points();
  const double slope_t = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
  CHECK(std::abs(-slope_t / (2.0 * p.gamma_alpha) - 1.0) < 0.02);

  // slope along tau > 0 at fixed t
  sx = sy = sxx = sxy = 0;
  std::size_t cnt = 0;
  for (std::size_t j = j0; j < tau_axis.n_points(); ++j) {
    const double x = tau_axis.at(j), y = std::log(surf.values(4, j));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++cnt;
  }
  const double slope_tau = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  CHECK(std::abs(-slope_tau / (2.0 * p.gamma_beta) - 1.0) < 0.02);

  // support: the first term needs tau >= 0, the second t + tau >= 0,
  // and nothing fires before the pair exists
  CHECK(surf.values(0, 0) == g2_cross_time(0.0, tau_axis.at(0), p));
  CHECK(g2_cross_time(1.0, -2.0, p) == 0.0);  // t + tau < 0
  CHECK(g2_cross_time(-0.5, 1.0, p) == 0.0);  // t < 0
  CHECK(g2_cross_time(-3.0, -1.0, p) == 0.0);
}

TEST_CASE("time-averaged g2 is even and normalized to its peak") {
  const EmitterParams p = default_params();
  oracle::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const double tau = rng.range(0.0, 20.0);
    CHECK(g2_cross_tau(tau, p) == g2_cross_tau(-tau, p));
    CHECK(g2_cross_tau(tau, p) / g2_cross_tau(0.0, p) ==
          doctest::Approx(std::exp(-2.0 * p.gamma_beta * tau)).epsilon(1e-12));
  }
}

TEST_CASE("time average of the two-time correlation matches the closed form") {
  // The quadrature of g2(t, t+tau) over t reproduces the closed-form tau
  // dependence exactly; the absolute normalizations of the two printed
  // forms differ by 2 pi (integral vs averaged convention), applied here.
  const EmitterParams p = default_params();
  const double T = 50.0 / p.gamma_alpha;
  const std::size_t nt = 400001;
  const double dt = T / (nt - 1);
  auto quad = [&](double tau) {
    double acc = 0.0;
    for (std::size_t k = 0; k < nt; ++k)
      acc += oracle::trapezoid_weight(k, nt) * g2_cross_time(k * dt, tau, p);
    return acc * dt;
  };
  const double qref = quad(0.4);
  for (double tau : {0.8, -1.6, 2.4}) {
    const double q = quad(tau);
    CHECK(q / qref == doctest::Approx(std::exp(-2.0 * p.gamma_beta * (std::abs(tau) - 0.4)))
                          .epsilon(1e-3));
    CHECK(2.0 * kPi * q == doctest::Approx(g2_cross_tau(tau, p)).epsilon(1e-2));
  }
  // exactly at tau = 0 both step branches of the two-time form fire
  // (theta(0) = 1), doubling the measure-zero line
  CHECK(2.0 * kPi * quad(0.0) == doctest::Approx(2.0 * g2_cross_tau(0.0, p)).epsilon(1e-2));
}

TEST_CASE("frequency correlation at the on-resonance point") {
  const EmitterParams p = default_params();
  const double got = g2_cross_freq(p.omega_alpha, p.omega_beta, p);
  const double pref =
      (p.gamma_alpha * p.gamma_beta / (kPi * kPi)) * (p.gamma_beta / p.gamma_alpha - 1.0);
  CHECK(got == doctest::Approx(pref / (4.0 * p.gamma_alpha * p.gamma_beta)).epsilon(1e-12));
  CHECK(got > 0.0);  // gamma_beta > gamma_alpha here

  EmitterParams inv = p;
  inv.gamma_beta = 0.5 * p.gamma_alpha;  // gamma_alpha > gamma_beta
  CHECK(g2_cross_freq(inv.omega_alpha, inv.omega_beta, inv) <= 0.0);
}

TEST_CASE("anti-diagonal cut has half-width 2 gamma_alpha") {
  const EmitterParams p = default_params();
  // cut at omega' = omega_beta: only the sum coordinate varies
  const FrequencyGrid cut =
      FrequencyGrid::centered(p.omega_alpha, 20.0 * p.gamma_alpha, 1601);
  std::vector<double> vals(cut.n_points());
  for (std::size_t i = 0; i < cut.n_points(); ++i)
    vals[i] = g2_cross_freq(cut.at(i), p.omega_beta, p);
  const double half_width = fitted_fwhm(cut, vals) / 2.0;
  CHECK(std::abs(half_width - 2.0 * p.gamma_alpha) <= cut.step());
}

TEST_CASE("on-resonance sign follows the rate-ratio sign rule") {
  for (double ratio : {40.0, 5.0, 2.0}) {
    const EmitterParams p = default_params(ratio);
    CHECK(g2_cross_freq(p.omega_alpha, p.omega_beta, p) > 0.0);
    CHECK(g2_cross_tau(0.0, p) > 0.0);
  }
  for (double ratio : {0.5, 0.1}) {
    const EmitterParams p = default_params(ratio);
    CHECK(g2_cross_freq(p.omega_alpha, p.omega_beta, p) < 0.0);
    CHECK(g2_cross_tau(0.0, p) < 0.0);
  }
}

TEST_CASE("g2 time surface matches the frozen golden file") {
  const EmitterParams p = default_params(40.0);
  const FrequencyGrid t_axis(0.0, 800.0, 33);
  const FrequencyGrid tau_axis(-300.0, 300.0, 25);
  const auto surf = g2_time_surface(t_axis, tau_axis, p, 2);
  const auto rows = read_csv_rows(std::string(CASCADE_GOLDEN_DIR) + "/g2_time_r40.csv");
  REQUIRE(rows.size() == 33 * 25);
  std::size_t r = 0;
  for (std::size_t i = 0; i < 33; ++i)
    for (std::size_t j = 0; j < 25; ++j, ++r) {
      CHECK(rows[r][0] == t_axis.at(i));
      CHECK(rows[r][1] == tau_axis.at(j));
      CHECK(rows[r][2] == surf.values(i, j));
    }
}

TEST_CASE("frequency surface carries the log-scale hint") {
  const EmitterParams p = default_params();
  const auto surf = g2_freq_surface(FrequencyGrid::centered(p.omega_alpha, 0.1, 8),
                                    FrequencyGrid::centered(p.omega_beta, 1.0, 8), p, 1);
  CHECK(surf.log_scale_hint);
  CHECK(surf.domain == G2Domain::freq_w_wprime);
}
