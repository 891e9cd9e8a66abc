#pragma once

// Inner loops of the Hermitian eigensolver, with a scalar reference version
// and an AVX2/FMA version picked at runtime.
//
// Set KAGOME_KERNELS=scalar to force the reference path.

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>

namespace kagome {

enum class KernelIsa { scalar, avx2 };

struct KernelTable {
  KernelIsa isa;
  /// sum_j a_j b_j (no conjugation).
  std::complex<double> (*dotu)(const std::complex<double>* a, const std::complex<double>* b, std::size_t n);
  /// row_j -= vi conj(w_j) + wi conj(v_j) for j < n.
  void (*her2_row)(std::complex<double>* row, std::complex<double> vi, std::complex<double> wi,
                   const std::complex<double>* v, const std::complex<double>* w, std::size_t n);
};

const KernelTable& scalar_kernels();
/// The AVX2 table if it was compiled in and the CPU supports AVX2 and FMA.
std::optional<KernelTable> avx2_kernels();
/// Best available table, unless KAGOME_KERNELS=scalar. Resolved once.
const KernelTable& active_kernels();

std::string_view to_string(KernelIsa isa);

}  // namespace kagome
