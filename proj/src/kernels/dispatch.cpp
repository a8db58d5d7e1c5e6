#include <atomic>

#include "kernels_impl.hpp"
#include <stdexcept>

#if defined(LEHMER_HAVE_NEON_TU) && defined(__linux__)
#include <asm/hwcap.h>
#include <sys/auxv.h>
#endif

namespace lehmer::kernels {

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Pclmul:
#if defined(LEHMER_HAVE_PCLMUL_TU)
      __builtin_cpu_init();
      return __builtin_cpu_supports("pclmul") && __builtin_cpu_supports("sse4.1");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(LEHMER_HAVE_NEON_TU) && defined(__linux__)
      return (getauxval(AT_HWCAP) & HWCAP_PMULL) != 0;
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Pclmul, Isa::Neon})
    if (isa_supported(isa)) out.push_back(isa);
  return out;
}

const KernelTable& table_for(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("kernel ISA not supported on this CPU");
  switch (isa) {
#if defined(LEHMER_HAVE_PCLMUL_TU)
    case Isa::Pclmul:
      return pclmul_table();
#endif
#if defined(LEHMER_HAVE_NEON_TU)
    case Isa::Neon:
      return neon_table();
#endif
    default:
      return scalar_table();
  }
}

namespace {

const KernelTable* best_table() noexcept {
  if (isa_supported(Isa::Pclmul)) return &table_for(Isa::Pclmul);
  if (isa_supported(Isa::Neon)) return &table_for(Isa::Neon);
  return &scalar_table();
}

std::atomic<const KernelTable*>& slot() noexcept {
  static std::atomic<const KernelTable*> s{best_table()};
  return s;
}

}  // namespace

const KernelTable& active() noexcept { return *slot().load(std::memory_order_acquire); }

void force_isa(Isa isa) { slot().store(&table_for(isa), std::memory_order_release); }

}  // namespace lehmer::kernels
