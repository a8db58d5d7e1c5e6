#include "kernels_impl.hpp"

namespace lehmer::kernels {

Reducer Reducer::make(int m, Bits modulus) {
  Reducer r;
  r.m = m;
  r.modulus = modulus;
  r.mask = (Bits{1} << m) - 1;
  // long division of t^(2m) by the modulus
  unsigned __int128 num = static_cast<unsigned __int128>(1) << (2 * m);
  Bits quot = 0;
  for (int i = 2 * m; i >= m; --i) {
    if ((num >> i) & 1) {
      quot |= Bits{1} << (i - m);
      num ^= static_cast<unsigned __int128>(modulus) << (i - m);
    }
  }
  r.mu = quot;
  return r;
}

namespace scalar {

Bits dot(const Reducer& red, const Bits* a, const Bits* b, std::size_t n) {
  Bits acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc ^= clmul_scalar(a[i], b[i]);
  return reduce_scalar(red, acc);
}

void axpy(const Reducer& red, Bits c, const Bits* x, Bits* y, std::size_t n) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) y[i] ^= reduce_scalar(red, clmul_scalar(c, x[i]));
}

void mul_many(const Reducer& red, const Bits* a, const Bits* b, Bits* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = reduce_scalar(red, clmul_scalar(a[i], b[i]));
}

}  // namespace scalar

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{Isa::Scalar, "scalar", &scalar::dot, &scalar::axpy,
                                 &scalar::mul_many};
  return table;
}

}  // namespace lehmer::kernels
