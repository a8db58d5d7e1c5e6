// AArch64 PMULL variants (crypto extension). Entered only after the runtime
// hwcap check in dispatch.cpp.

#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace lehmer::kernels {
namespace {

inline Bits clmul_lo(Bits a, Bits b) {
  poly128_t r = vmull_p64(static_cast<poly64_t>(a), static_cast<poly64_t>(b));
  return vgetq_lane_u64(vreinterpretq_u64_p128(r), 0);
}

inline Bits reduce(const Reducer& red, Bits x) {
  Bits q = clmul_lo(x >> red.m, red.mu) >> red.m;
  return (x ^ clmul_lo(q, red.modulus)) & red.mask;
}

Bits dot(const Reducer& red, const Bits* a, const Bits* b, std::size_t n) {
  Bits s0 = 0, s1 = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    s0 ^= clmul_lo(a[i], b[i]);
    s1 ^= clmul_lo(a[i + 1], b[i + 1]);
  }
  for (; i < n; ++i) s0 ^= clmul_lo(a[i], b[i]);
  return reduce(red, s0 ^ s1);
}

void axpy(const Reducer& red, Bits c, const Bits* x, Bits* y, std::size_t n) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) y[i] ^= reduce(red, clmul_lo(c, x[i]));
}

void mul_many(const Reducer& red, const Bits* a, const Bits* b, Bits* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = reduce(red, clmul_lo(a[i], b[i]));
}

}  // namespace

const KernelTable& neon_table() noexcept {
  static const KernelTable table{Isa::Neon, "neon-pmull", &dot, &axpy, &mul_many};
  return table;
}

}  // namespace lehmer::kernels
