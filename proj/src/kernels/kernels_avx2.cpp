// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels/kernels_internal.hpp"

namespace kagome::detail {

namespace {

inline __m256d load2(const std::complex<double>* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }

/// [re0, im0, re1, im1] -> [im0, re0, im1, re1]
inline __m256d swap_pairs(__m256d x) { return _mm256_permute_pd(x, 0b0101); }

inline double hsum(__m256d x) {
  const __m128d lo = _mm256_castpd256_pd128(x);
  const __m128d hi = _mm256_extractf128_pd(x, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

std::complex<double> dotu_avx2(const std::complex<double>* a, const std::complex<double>* b, std::size_t n) {
  // acc_rr = [ar br, ai bi, ...], acc_ri = [ar bi, ai br, ...]
  __m256d acc_rr = _mm256_setzero_pd();
  __m256d acc_ri = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d x = load2(a + j);
    const __m256d y = load2(b + j);
    acc_rr = _mm256_fmadd_pd(x, y, acc_rr);
    acc_ri = _mm256_fmadd_pd(x, swap_pairs(y), acc_ri);
  }
  const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  double re = hsum(_mm256_mul_pd(acc_rr, sign));
  double im = hsum(acc_ri);
  for (; j < n; ++j) {
    re += a[j].real() * b[j].real() - a[j].imag() * b[j].imag();
    im += a[j].real() * b[j].imag() + a[j].imag() * b[j].real();
  }
  return {re, im};
}

void her2_row_avx2(std::complex<double>* row, std::complex<double> vi, std::complex<double> wi,
                   const std::complex<double>* v, const std::complex<double>* w, std::size_t n) {
  // s conj(z) = [sr zr + si zi, si zr - sr zi]
  //           = [sr, -sr] * [zr, zi] + [si, si] * [zi, zr]
  const __m256d vr = _mm256_setr_pd(vi.real(), -vi.real(), vi.real(), -vi.real());
  const __m256d vim = _mm256_set1_pd(vi.imag());
  const __m256d wr = _mm256_setr_pd(wi.real(), -wi.real(), wi.real(), -wi.real());
  const __m256d wim = _mm256_set1_pd(wi.imag());
  auto* out = reinterpret_cast<double*>(row);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d wj = load2(w + j);
    const __m256d vj = load2(v + j);
    __m256d t = _mm256_mul_pd(vim, swap_pairs(wj));
    t = _mm256_fmadd_pd(vr, wj, t);
    t = _mm256_fmadd_pd(wim, swap_pairs(vj), t);
    t = _mm256_fmadd_pd(wr, vj, t);
    _mm256_storeu_pd(out + 2 * j, _mm256_sub_pd(_mm256_loadu_pd(out + 2 * j), t));
  }
  for (; j < n; ++j) row[j] -= vi * std::conj(w[j]) + wi * std::conj(v[j]);
}

}  // namespace kagome::detail
