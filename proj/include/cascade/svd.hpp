#pragma once

#include <vector>

#include "cascade/kernels.hpp"
#include "cascade/matrix.hpp"

namespace cascade {

struct SvdOptions {
  double tol = 3e-13;   // relative off-diagonal threshold
  int max_sweeps = 40;
  Backend backend = Backend::scalar;
};

struct SvdDiagnostics {
  int sweeps = 0;
  double max_offdiag = 0.0;  // last sweep's max |a_p^H a_q| / (|a_p||a_q|)
};

// Singular values of a dense complex matrix by one-sided (Hestenes) Jacobi,
// descending order. Values only; no U/V accumulation.
std::vector<double> singular_values(const ComplexMatrix& a, const SvdOptions& opts = {},
                                    SvdDiagnostics* diag = nullptr);

}  // namespace cascade
