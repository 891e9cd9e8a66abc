#pragma once

#include <complex>
#include <cstddef>

namespace kagome::detail {

std::complex<double> dotu_scalar(const std::complex<double>* a, const std::complex<double>* b, std::size_t n);
void her2_row_scalar(std::complex<double>* row, std::complex<double> vi, std::complex<double> wi,
                     const std::complex<double>* v, const std::complex<double>* w, std::size_t n);

#ifdef KAGOME_HAVE_AVX2
std::complex<double> dotu_avx2(const std::complex<double>* a, const std::complex<double>* b, std::size_t n);
void her2_row_avx2(std::complex<double>* row, std::complex<double> vi, std::complex<double> wi,
                   const std::complex<double>* v, const std::complex<double>* w, std::size_t n);
#endif

}  // namespace kagome::detail
