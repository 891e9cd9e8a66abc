#include "kernels/kernels_internal.hpp"

namespace kagome::detail {

std::complex<double> dotu_scalar(const std::complex<double>* a, const std::complex<double>* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    re += a[j].real() * b[j].real() - a[j].imag() * b[j].imag();
    im += a[j].real() * b[j].imag() + a[j].imag() * b[j].real();
  }
  return {re, im};
}

void her2_row_scalar(std::complex<double>* row, std::complex<double> vi, std::complex<double> wi,
                     const std::complex<double>* v, const std::complex<double>* w, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) row[j] -= vi * std::conj(w[j]) + wi * std::conj(v[j]);
}

}  // namespace kagome::detail
