#pragma once

#include "lehmer/gf2_kernels.hpp"

namespace lehmer::kernels {

#if defined(LEHMER_HAVE_PCLMUL_TU)
const KernelTable& pclmul_table() noexcept;
#endif
#if defined(LEHMER_HAVE_NEON_TU)
const KernelTable& neon_table() noexcept;
#endif

}  // namespace lehmer::kernels
