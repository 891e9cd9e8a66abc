#include <cstdlib>
#include <string_view>

#include "kagome/kernels.hpp"
#include "kernels/kernels_internal.hpp"

namespace kagome {

const KernelTable& scalar_kernels() {
  static const KernelTable table{KernelIsa::scalar, detail::dotu_scalar, detail::her2_row_scalar};
  return table;
}

std::optional<KernelTable> avx2_kernels() {
#ifdef KAGOME_HAVE_AVX2
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return KernelTable{KernelIsa::avx2, detail::dotu_avx2, detail::her2_row_avx2};
  }
#endif
  return std::nullopt;
}

const KernelTable& active_kernels() {
  static const KernelTable table = [] {
    const char* env = std::getenv("KAGOME_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    return avx2_kernels().value_or(scalar_kernels());
  }();
  return table;
}

std::string_view to_string(KernelIsa isa) {
  switch (isa) {
    case KernelIsa::scalar:
      return "scalar";
    case KernelIsa::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace kagome
