#include "cascade/svd.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cascade {

// One-sided (Hestenes) Jacobi: orthogonalize column pairs with unitary plane
// rotations until every pair is numerically orthogonal; the singular values
// are the final column norms. Values-only, single-threaded; the column
// kernels carry the vectorization.
std::vector<double> singular_values(const ComplexMatrix& a, const SvdOptions& opts,
                                    SvdDiagnostics* diag) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  // column-major working copy
  std::vector<complexd> work(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) work[j * m + i] = a(i, j);
  auto col = [&](std::size_t j) { return work.data() + j * m; };

  std::vector<double> norm2(n);
  auto refresh_norms = [&] {
    double top = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      norm2[j] = kernels::sum_abs2(col(j), m, opts.backend);
      top = std::max(top, norm2[j]);
    }
    // columns this far below the largest are numerical zeros; excluding them
    // keeps the relative off-diagonal metric meaningful
    const double floor2 = top * 1e-28;
    for (std::size_t j = 0; j < n; ++j)
      if (norm2[j] <= floor2) norm2[j] = 0.0;
  };
  refresh_norms();

  const double tol2 = opts.tol * opts.tol;
  int sweep = 0;
  double max_off2 = 0.0;
  for (; sweep < opts.max_sweeps; ++sweep) {
    max_off2 = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double scale2 = norm2[p] * norm2[q];
        if (scale2 <= 0.0) continue;  // a numerically zero column
        const complexd gamma = kernels::cdot(col(p), col(q), m, opts.backend);
        const double ag2 = std::norm(gamma);
        const double rel2 = ag2 / scale2;
        max_off2 = std::max(max_off2, rel2);
        if (rel2 <= tol2) continue;

        const double ag = std::sqrt(ag2);
        const complexd rho = gamma / ag;
        const double tau = (norm2[q] - norm2[p]) / (2.0 * ag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        kernels::rotate_pair(col(p), col(q), m, c, s * rho, opts.backend);
        // running norms; cancellation can push a tiny one below zero
        const double np = c * c * norm2[p] - 2.0 * c * s * ag + s * s * norm2[q];
        const double nq = s * s * norm2[p] + 2.0 * c * s * ag + c * c * norm2[q];
        norm2[p] = std::max(np, 0.0);
        norm2[q] = std::max(nq, 0.0);
      }
    }
    refresh_norms();  // guard against drift of the incremental updates
    if (max_off2 <= tol2) break;
  }

  if (diag) {
    diag->sweeps = sweep + 1;
    diag->max_offdiag = std::sqrt(max_off2);
  }

  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) sv[j] = std::sqrt(norm2[j]);
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  sv.resize(std::min(m, n));
  return sv;
}

}  // namespace cascade
