#pragma once

// Arithmetic in GF(2^m), m <= 32, in the polynomial basis over GF(2).
//
// Field contexts are interned: field_make() returns a pointer that stays
// valid for the lifetime of the process, and two calls with the same
// (m, modulus) return the same pointer. Elements carry that pointer, so
// mixing elements of different fields is detected at the operation.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lehmer/error.hpp"
#include "lehmer/gf2_kernels.hpp"

namespace lehmer::gf2m {

using Bits = std::uint64_t;

inline constexpr int kMaxDegree = 32;
// Largest degree for which a full log/antilog table is built.
inline constexpr int kTableDegree = 20;

class FieldCtx {
 public:
  FieldCtx(int m, Bits modulus);
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  int degree() const noexcept { return m_; }
  // Includes the leading t^m bit.
  Bits modulus() const noexcept { return modulus_; }
  std::vector<int> modulus_bits() const;
  // True iff the class of t generates the multiplicative group.
  bool generator_check() const noexcept { return generator_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << m_; }
  std::uint64_t group_order() const noexcept { return size() - 1; }
  const kernels::Reducer& reducer() const noexcept { return reducer_; }
  std::string name() const;

  Bits mul(Bits a, Bits b) const noexcept {
    if (!exp_.empty()) {
      if (a == 0 || b == 0) return 0;
      return exp_[log_[a] + log_[b]];
    }
    return kernels::reduce_scalar(reducer_, kernels::clmul_scalar(a, b));
  }
  Bits sqr(Bits a) const noexcept { return mul(a, a); }
  Bits inv(Bits a) const;
  Bits pow(Bits a, std::int64_t e) const;
  // Unique square root (inverse Frobenius).
  Bits sqrt(Bits a) const noexcept;
  Bits frobenius(Bits a, unsigned k) const noexcept;
  // Class of t raised to k; any integer k.
  Bits generator_power(std::int64_t k) const;
  // k in [0, 2^m - 2] with t^k = a.
  std::uint64_t dlog(Bits a) const;
  std::uint64_t multiplicative_order(Bits a) const;
  // Smallest-bit-pattern primitive element.
  Bits primitive_element() const noexcept { return primitive_; }
  // Distinct primes dividing 2^m - 1.
  const std::vector<std::uint64_t>& group_order_primes() const noexcept { return order_primes_; }

 private:
  std::uint64_t dlog_bsgs(Bits a) const;

  int m_;
  Bits modulus_;
  bool generator_ = false;
  Bits primitive_ = 1;
  kernels::Reducer reducer_;
  std::vector<std::uint64_t> order_primes_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1) when tabulated
  std::vector<std::uint32_t> log_;
};

using Field = const FieldCtx*;

// Irreducibility over GF(2) by the x^(2^d) - x criterion.
bool is_irreducible(Bits poly);
int bit_degree(Bits poly) noexcept;
Bits smallest_irreducible(int m);

// Throws ReducibleModulus or DegreeMismatch.
Field field_make(int m, Bits modulus);
// Coefficient bit list, low degree first.
Field field_make(int m, std::span<const int> modulus_bits);
// GF(2^m) with the lexicographically smallest irreducible modulus.
Field gf2(int m);
// The canonical GF(32): t^5 + t^2 + 1, which is also gf2(5).
Field gf32();

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field f, Bits v) : field_(f), v_(v) {}

  static FieldElement zero(Field f) { return {f, 0}; }
  static FieldElement one(Field f) { return {f, 1}; }
  // Class of t to the k-th power.
  static FieldElement gen(Field f, std::int64_t k = 1) { return {f, f->generator_power(k)}; }

  Field field() const noexcept { return field_; }
  Bits bits() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }

  FieldElement& operator+=(const FieldElement& o) {
    check(o);
    v_ ^= o.v_;
    return *this;
  }
  FieldElement& operator-=(const FieldElement& o) { return *this += o; }
  FieldElement& operator*=(const FieldElement& o) {
    check(o);
    v_ = field_->mul(v_, o.v_);
    return *this;
  }
  FieldElement& operator/=(const FieldElement& o) {
    check(o);
    v_ = field_->mul(v_, field_->inv(o.v_));
    return *this;
  }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const { return *this; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }

  FieldElement inv() const { return {field_, field_->inv(v_)}; }
  FieldElement pow(std::int64_t e) const { return {field_, field_->pow(v_, e)}; }
  FieldElement sqrt() const { return {field_, field_->sqrt(v_)}; }

 private:
  void check(const FieldElement& o) const {
    if (field_ != o.field_) throw Error(ErrorKind::ContextMismatch, "elements of different fields");
  }

  Field field_ = nullptr;
  Bits v_ = 0;
};

enum class ArithOp { Add, Mul, Inv, Pow };

// Uniform entry point: add/mul take two operands, inv one, pow one plus the
// exponent.
FieldElement field_arith(ArithOp op, const FieldElement& a, const FieldElement& b = {},
                         std::int64_t exponent = 0);

std::uint64_t dlog(const FieldElement& x);
FieldElement frobenius(const FieldElement& x, unsigned k);
// Image under the cached embedding GF(2^d) -> GF(2^M), d | M.
FieldElement embed(const FieldElement& x, Field sup);
// Root of sub's modulus in sup that defines the embedding.
FieldElement embedding_root(Field sub, Field sup);
// Preimage of x under the embedding sub -> field(x), if x lies in the image.
std::optional<FieldElement> restrict_to(const FieldElement& x, Field sub);
// Smallest d with x in GF(2^d).
int minimal_degree(const FieldElement& x);

// Textual format: "0", "1", "g", "g^k" (powers of the context generator) or a
// raw bit string "0b0101" (low degree first). Fields without a primitive t
// always print bit strings.
std::string format(const FieldElement& x);
FieldElement parse_element(std::string_view text, Field f);
// Header form "g^5=g^2+1".
Field parse_field_header(std::string_view text);
std::string format_field_header(Field f);

}  // namespace lehmer::gf2m
