#include "cascade/kernels.hpp"

#include "cascade/errors.hpp"
#include "cascade/threading.hpp"
#include "kernels_impl.hpp"

namespace cascade {

bool backend_available(Backend b) {
  if (b == Backend::scalar) return true;
#if defined(CASCADE_HAVE_AVX2_BUILD)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect_backend() {
  return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

Backend backend_from_name(const std::string& name) {
  if (name == "auto") return detect_backend();
  if (name == "scalar") return Backend::scalar;
  if (name == "avx2") {
    if (!backend_available(Backend::avx2))
      throw ConfigError("simd backend 'avx2' is not available on this machine");
    return Backend::avx2;
  }
  throw ConfigError("unknown simd backend '" + name + "' (expected auto|scalar|avx2)");
}

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

namespace kernels {

using namespace detail;

complexd cdot(const complexd* x, const complexd* y, std::size_t n, Backend b) {
#if defined(CASCADE_HAVE_AVX2_BUILD)
  if (b == Backend::avx2) return cdot_avx2(x, y, n);
#endif
  return cdot_scalar(x, y, n);
}

double sum_abs2(const complexd* x, std::size_t n, Backend b) {
#if defined(CASCADE_HAVE_AVX2_BUILD)
  if (b == Backend::avx2) return sum_abs2_avx2(x, n);
#endif
  return sum_abs2_scalar(x, n);
}

void abs2(const complexd* x, double* out, std::size_t n, Backend b) {
#if defined(CASCADE_HAVE_AVX2_BUILD)
  if (b == Backend::avx2) return abs2_avx2(x, out, n);
#endif
  return abs2_scalar(x, out, n);
}

void rotate_pair(complexd* x, complexd* y, std::size_t n, double c, complexd srho, Backend b) {
#if defined(CASCADE_HAVE_AVX2_BUILD)
  if (b == Backend::avx2) return rotate_pair_avx2(x, y, n, c, srho);
#endif
  return rotate_pair_scalar(x, y, n, c, srho);
}

void scale(complexd* x, std::size_t n, double a, Backend b) {
#if defined(CASCADE_HAVE_AVX2_BUILD)
  if (b == Backend::avx2) return scale_avx2(x, n, a);
#endif
  return scale_scalar(x, n, a);
}

}  // namespace kernels

ComplexMatrix gram_rows(const ComplexMatrix& a, Backend b, unsigned threads) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  ComplexMatrix g(n, n);
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        // G(i,j) = sum_q A(i,q) conj(A(j,q))
        const complexd v = kernels::cdot(a.row(j), a.row(i), m, b);
        g(i, j) = v;
      }
    }
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) g(i, j) = std::conj(g(j, i));
  return g;
}

}  // namespace cascade
