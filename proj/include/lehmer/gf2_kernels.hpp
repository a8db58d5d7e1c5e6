#pragma once

// Bulk GF(2^m) arithmetic kernels.
//
// Every kernel has a portable scalar reference and, where the CPU offers a
// carry-less multiplier, an intrinsic variant (PCLMULQDQ on x86-64, PMULL on
// AArch64). The variant is picked once at runtime; tests force each available
// variant and check it against the scalar one.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lehmer::kernels {

using Bits = std::uint64_t;

// Barrett reducer for GF(2)[t] / (modulus), deg(modulus) = m <= 32.
struct Reducer {
  int m = 1;
  Bits modulus = 0b11;
  Bits mu = 0;  // floor(t^(2m) / modulus)
  Bits mask = 1;

  static Reducer make(int m, Bits modulus);
};

// Portable carry-less product; inputs below 2^32.
constexpr Bits clmul_scalar(Bits a, Bits b) noexcept {
  Bits r = 0;
  while (b != 0) {
    r ^= a << __builtin_ctzll(b);
    b &= b - 1;
  }
  return r;
}

// Reduce a product of degree <= 2m-2.
constexpr Bits reduce_scalar(const Reducer& red, Bits x) noexcept {
  Bits q = clmul_scalar(x >> red.m, red.mu) >> red.m;
  return (x ^ clmul_scalar(q, red.modulus)) & red.mask;
}

enum class Isa { Scalar, Pclmul, Neon };

struct KernelTable {
  Isa isa;
  std::string_view name;
  // sum_i a[i] * b[i]
  Bits (*dot)(const Reducer&, const Bits* a, const Bits* b, std::size_t n);
  // y[i] += c * x[i]
  void (*axpy)(const Reducer&, Bits c, const Bits* x, Bits* y, std::size_t n);
  // out[i] = a[i] * b[i]
  void (*mul_many)(const Reducer&, const Bits* a, const Bits* b, Bits* out, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

bool isa_supported(Isa isa) noexcept;
std::vector<Isa> supported_isas();

// The table used by the library. Chosen on first use: the best supported ISA.
const KernelTable& active() noexcept;
const KernelTable& table_for(Isa isa);
// Overrides the automatic choice (tests, benchmarks). Throws if unsupported.
void force_isa(Isa isa);

inline Bits dot(const Reducer& red, std::span<const Bits> a, std::span<const Bits> b) {
  return active().dot(red, a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline void axpy(const Reducer& red, Bits c, std::span<const Bits> x, std::span<Bits> y) {
  active().axpy(red, c, x.data(), y.data(), x.size() < y.size() ? x.size() : y.size());
}

}  // namespace lehmer::kernels
