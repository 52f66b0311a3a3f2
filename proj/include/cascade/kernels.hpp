#pragma once

#include <cstddef>
#include <string>

#include "cascade/matrix.hpp"

namespace cascade {

// Compute backend for the arithmetic inner loops. `scalar` is the reference
// implementation; `avx2` is selected at runtime when the CPU supports it.
enum class Backend { scalar, avx2 };

// Best backend available on this machine.
Backend detect_backend();
bool backend_available(Backend b);

// "auto" | "scalar" | "avx2"; throws ConfigError on anything else.
Backend backend_from_name(const std::string& name);
const char* backend_name(Backend b);

namespace kernels {

// sum_i conj(x[i]) * y[i]
complexd cdot(const complexd* x, const complexd* y, std::size_t n, Backend b);

// sum_i |x[i]|^2
double sum_abs2(const complexd* x, std::size_t n, Backend b);

// out[i] = |x[i]|^2, elementwise (bit-identical across backends)
void abs2(const complexd* x, double* out, std::size_t n, Backend b);

// Plane rotation of two complex columns with c real, srho = s * e^{i phi}:
//   x[i] <- c * x[i] - conj(srho) * y[i]
//   y[i] <- srho * x_old[i] + c * y[i]
// (bit-identical across backends)
void rotate_pair(complexd* x, complexd* y, std::size_t n, double c, complexd srho, Backend b);

// scale in place: x[i] *= a
void scale(complexd* x, std::size_t n, double a, Backend b);

}  // namespace kernels

// G = A * A^H restricted to rows: G(i,j) = sum_q A(i,q) conj(A(j,q)).
// Hermitian result; each entry accumulated serially in ascending q so the
// value is independent of the thread count.
ComplexMatrix gram_rows(const ComplexMatrix& a, Backend b, unsigned threads);

}  // namespace cascade
