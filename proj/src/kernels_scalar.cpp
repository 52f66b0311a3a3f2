#include "kernels_impl.hpp"

// Complex arithmetic is written out on explicit re/im parts so the vector
// backends can reproduce the exact operation sequence per element.

namespace cascade::kernels::detail {

complexd cdot_scalar(const complexd* x, const complexd* y, std::size_t n) {
  double acc_re = 0.0, acc_im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    acc_re += xr * yr + xi * yi;
    acc_im += xr * yi - xi * yr;
  }
  return {acc_re, acc_im};
}

double sum_abs2_scalar(const complexd* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    acc += xr * xr + xi * xi;
  }
  return acc;
}

void abs2_scalar(const complexd* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    out[i] = xr * xr + xi * xi;
  }
}

void rotate_pair_scalar(complexd* x, complexd* y, std::size_t n, double c, complexd srho) {
  const double sr = srho.real(), si = srho.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    // x <- c x - conj(srho) y ; y <- srho x + c y
    const double nxr = c * xr - (sr * yr + si * yi);
    const double nxi = c * xi - (sr * yi - si * yr);
    const double nyr = (sr * xr - si * xi) + c * yr;
    const double nyi = (sr * xi + si * xr) + c * yi;
    x[i] = {nxr, nxi};
    y[i] = {nyr, nyi};
  }
}

void scale_scalar(complexd* x, std::size_t n, double a) {
  for (std::size_t i = 0; i < n; ++i) x[i] = {x[i].real() * a, x[i].imag() * a};
}

}  // namespace cascade::kernels::detail
