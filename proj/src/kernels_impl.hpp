#pragma once

// Internal: per-backend kernel entry points. The scalar versions are the
// reference; vector versions must match them bit-for-bit on elementwise maps
// and within a small ulp bound on reductions (summation order differs).

#include <cstddef>

#include "cascade/matrix.hpp"

namespace cascade::kernels::detail {

complexd cdot_scalar(const complexd* x, const complexd* y, std::size_t n);
double sum_abs2_scalar(const complexd* x, std::size_t n);
void abs2_scalar(const complexd* x, double* out, std::size_t n);
void rotate_pair_scalar(complexd* x, complexd* y, std::size_t n, double c, complexd srho);
void scale_scalar(complexd* x, std::size_t n, double a);

#if defined(CASCADE_HAVE_AVX2_BUILD)
complexd cdot_avx2(const complexd* x, const complexd* y, std::size_t n);
double sum_abs2_avx2(const complexd* x, std::size_t n);
void abs2_avx2(const complexd* x, double* out, std::size_t n);
void rotate_pair_avx2(complexd* x, complexd* y, std::size_t n, double c, complexd srho);
void scale_avx2(complexd* x, std::size_t n, double a);
#endif

}  // namespace cascade::kernels::detail
