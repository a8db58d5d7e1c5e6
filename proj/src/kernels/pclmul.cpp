// x86-64 PCLMULQDQ variants. This translation unit is built with -mpclmul and
// must only be entered after the runtime check in dispatch.cpp.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace lehmer::kernels {
namespace {

inline Bits clmul_lo(Bits a, Bits b) {
  __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                   _mm_cvtsi64_si128(static_cast<long long>(b)), 0x00);
  return static_cast<Bits>(_mm_cvtsi128_si64(r));
}

inline Bits reduce(const Reducer& red, Bits x) {
  Bits q = clmul_lo(x >> red.m, red.mu) >> red.m;
  return (x ^ clmul_lo(q, red.modulus)) & red.mask;
}

// Two lanes per step; products of two sub-2^32 operands stay in the low
// 64 bits of each 128-bit result, so high halves are discarded.
Bits dot(const Reducer& red, const Bits* a, const Bits* b, std::size_t n) {
  __m128i acc = _mm_setzero_si128();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m128i va = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i));
    __m128i vb = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i));
    acc = _mm_xor_si128(acc, _mm_clmulepi64_si128(va, vb, 0x00));
    acc = _mm_xor_si128(acc, _mm_clmulepi64_si128(va, vb, 0x11));
  }
  Bits s = static_cast<Bits>(_mm_cvtsi128_si64(acc));
  for (; i < n; ++i) s ^= clmul_lo(a[i], b[i]);
  return reduce(red, s);
}

void axpy(const Reducer& red, Bits c, const Bits* x, Bits* y, std::size_t n) {
  if (c == 0) return;
  const __m128i vc = _mm_set1_epi64x(static_cast<long long>(c));
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m128i vx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
    __m128i p0 = _mm_clmulepi64_si128(vx, vc, 0x00);
    __m128i p1 = _mm_clmulepi64_si128(vx, vc, 0x01);
    y[i] ^= reduce(red, static_cast<Bits>(_mm_cvtsi128_si64(p0)));
    y[i + 1] ^= reduce(red, static_cast<Bits>(_mm_cvtsi128_si64(p1)));
  }
  for (; i < n; ++i) y[i] ^= reduce(red, clmul_lo(c, x[i]));
}

void mul_many(const Reducer& red, const Bits* a, const Bits* b, Bits* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = reduce(red, clmul_lo(a[i], b[i]));
}

}  // namespace

const KernelTable& pclmul_table() noexcept {
  static const KernelTable table{Isa::Pclmul, "pclmul", &dot, &axpy, &mul_many};
  return table;
}

}  // namespace lehmer::kernels
