#include "lehmer/gf2m.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <unordered_map>

namespace lehmer::gf2m {

namespace {

// GF(2)[t] helpers on single words; degrees stay below 64.
Bits poly_mod(Bits a, Bits f) noexcept {
  int df = bit_degree(f);
  for (int i = bit_degree(a); i >= df; --i)
    if ((a >> i) & 1) a ^= f << (i - df);
  return a;
}

Bits poly_mulmod(Bits a, Bits b, Bits f) noexcept {
  // operands have degree < deg f <= 32, so the product fits in 63 bits
  return poly_mod(kernels::clmul_scalar(a, b), f);
}

Bits poly_gcd(Bits a, Bits b) noexcept {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::int64_t parse_int(std::string_view s, std::string_view context) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::ParseError, "bad integer in '" + std::string(context) + "'");
  return v;
}

}  // namespace

int bit_degree(Bits poly) noexcept { return poly == 0 ? -1 : 63 - __builtin_clzll(poly); }

bool is_irreducible(Bits f) {
  int d = bit_degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  if ((f & 1) == 0) return false;
  if (d > kMaxDegree) throw Error(ErrorKind::DegreeMismatch, "degree above 32");
  // x^(2^k) mod f for k = 0..d
  std::vector<Bits> frob(static_cast<std::size_t>(d) + 1);
  frob[0] = poly_mod(0b10, f);
  for (int k = 1; k <= d; ++k) frob[k] = poly_mulmod(frob[k - 1], frob[k - 1], f);
  if (frob[d] != frob[0]) return false;
  for (std::uint64_t p : distinct_prime_factors(static_cast<std::uint64_t>(d))) {
    Bits h = frob[d / p] ^ frob[0];
    if (bit_degree(poly_gcd(f, h)) != 0) return false;
  }
  return true;
}

Bits smallest_irreducible(int m) {
  if (m < 1 || m > kMaxDegree) throw Error(ErrorKind::DegreeMismatch, "degree out of range");
  for (Bits f = (Bits{1} << m) | 1; f < (Bits{1} << (m + 1)); f += 2)
    if (is_irreducible(f)) return f;
  throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

FieldCtx::FieldCtx(int m, Bits modulus) : m_(m), modulus_(modulus) {
  reducer_ = kernels::Reducer::make(m, modulus);
  order_primes_ = distinct_prime_factors(group_order());
  Bits t = poly_mod(0b10, modulus);
  generator_ = multiplicative_order(t) == group_order();
  if (generator_) {
    primitive_ = t;
  } else {
    for (Bits a = 1; a < size(); ++a) {
      if (multiplicative_order(a) == group_order()) {
        primitive_ = a;
        break;
      }
    }
  }
  if (generator_ && m <= kTableDegree) {
    std::uint64_t q1 = group_order();
    exp_.resize(2 * q1);
    log_.assign(size(), 0);
    Bits x = 1;
    for (std::uint64_t i = 0; i < q1; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      exp_[i + q1] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = kernels::reduce_scalar(reducer_, kernels::clmul_scalar(x, t));
    }
  }
}

std::vector<int> FieldCtx::modulus_bits() const {
  std::vector<int> out(static_cast<std::size_t>(m_) + 1);
  for (int i = 0; i <= m_; ++i) out[i] = static_cast<int>((modulus_ >> i) & 1);
  return out;
}

std::string FieldCtx::name() const { return "GF(2^" + std::to_string(m_) + ")"; }

Bits FieldCtx::pow(Bits a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
    return e == 0 ? 1 : 0;
  }
  auto q1 = static_cast<std::int64_t>(group_order());
  std::int64_t r = e % q1;
  if (r < 0) r += q1;
  if (!exp_.empty()) return exp_[(static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r)) % group_order()];
  Bits result = 1, base = a;
  auto k = static_cast<std::uint64_t>(r);
  while (k != 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Bits FieldCtx::inv(Bits a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return pow(a, -1);
}

Bits FieldCtx::sqrt(Bits a) const noexcept { return frobenius(a, static_cast<unsigned>(m_ - 1)); }

Bits FieldCtx::frobenius(Bits a, unsigned k) const noexcept {
  k %= static_cast<unsigned>(m_);
  for (unsigned i = 0; i < k; ++i) a = mul(a, a);
  return a;
}

Bits FieldCtx::generator_power(std::int64_t k) const { return pow(poly_mod(0b10, modulus_), k); }

std::uint64_t FieldCtx::multiplicative_order(Bits a) const {
  if (a == 0) throw Error(ErrorKind::LogOfZero, "order of zero");
  std::uint64_t n = group_order();
  for (std::uint64_t p : order_primes_) {
    while (n % p == 0 && pow(a, static_cast<std::int64_t>(n / p)) == 1) n /= p;
  }
  return n;
}

std::uint64_t FieldCtx::dlog(Bits a) const {
  if (a == 0) throw Error(ErrorKind::LogOfZero, "log of zero");
  if (!generator_) throw Error(ErrorKind::NotPrimitive, "t does not generate the group of " + name());
  if (!log_.empty()) return log_[a];
  return dlog_bsgs(a);
}

std::uint64_t FieldCtx::dlog_bsgs(Bits a) const {
  std::uint64_t n = group_order();
  std::uint64_t s = 1;
  while (s * s < n) ++s;
  Bits t = generator_power(1);
  std::unordered_map<Bits, std::uint64_t> baby;
  baby.reserve(s);
  Bits x = 1;
  for (std::uint64_t j = 0; j < s; ++j) {
    baby.emplace(x, j);
    x = mul(x, t);
  }
  Bits giant = pow(t, -static_cast<std::int64_t>(s));
  Bits y = a;
  for (std::uint64_t i = 0; i <= s; ++i) {
    if (auto it = baby.find(y); it != baby.end()) return (i * s + it->second) % n;
    y = mul(y, giant);
  }
  throw Error(ErrorKind::NotPrimitive, "discrete log not found");
}

namespace {

struct Registry {
  std::mutex mu;
  std::map<std::pair<int, Bits>, std::unique_ptr<FieldCtx>> fields;
  std::map<int, Field> canonical;
  std::map<std::pair<Field, Field>, Bits> roots;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Field field_make(int m, Bits modulus) {
  if (m < 1 || m > kMaxDegree) throw Error(ErrorKind::DegreeMismatch, "degree must lie in [1, 32]");
  if (bit_degree(modulus) != m)
    throw Error(ErrorKind::DegreeMismatch,
                "modulus has degree " + std::to_string(bit_degree(modulus)) + ", expected " + std::to_string(m));
  if (!is_irreducible(modulus)) throw Error(ErrorKind::ReducibleModulus, "modulus factors over GF(2)");
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto& slot = reg.fields[{m, modulus}];
  if (!slot) slot = std::make_unique<FieldCtx>(m, modulus);
  return slot.get();
}

Field field_make(int m, std::span<const int> modulus_bits) {
  if (modulus_bits.size() > 64) throw Error(ErrorKind::DegreeMismatch, "modulus too long");
  Bits f = 0;
  for (std::size_t i = 0; i < modulus_bits.size(); ++i)
    if (modulus_bits[i] & 1) f |= Bits{1} << i;
  return field_make(m, f);
}

Field gf2(int m) {
  {
    auto& reg = registry();
    std::lock_guard lock(reg.mu);
    if (auto it = reg.canonical.find(m); it != reg.canonical.end()) return it->second;
  }
  Field f = field_make(m, smallest_irreducible(m));
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  reg.canonical[m] = f;
  return f;
}

Field gf32() { return field_make(5, 0b100101); }

FieldElement field_arith(ArithOp op, const FieldElement& a, const FieldElement& b, std::int64_t exponent) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Inv:
      return a.inv();
    case ArithOp::Pow:
      return a.pow(exponent);
  }
  return a;
}

std::uint64_t dlog(const FieldElement& x) { return x.field()->dlog(x.bits()); }

FieldElement frobenius(const FieldElement& x, unsigned k) {
  return {x.field(), x.field()->frobenius(x.bits(), k)};
}

FieldElement embedding_root(Field sub, Field sup) {
  if (sub == sup) return FieldElement::gen(sup, 1);
  if (sup->degree() % sub->degree() != 0)
    throw Error(ErrorKind::NoEmbedding, sub->name() + " does not embed in " + sup->name());
  auto& reg = registry();
  {
    std::lock_guard lock(reg.mu);
    if (auto it = reg.roots.find({sub, sup}); it != reg.roots.end()) return {sup, it->second};
  }
  // Roots of sub's modulus all lie in the subfield of order 2^d, which is
  // generated by h = prim^((2^M-1)/(2^d-1)). Take the smallest root.
  const int d = sub->degree();
  const std::uint64_t sub_order = (std::uint64_t{1} << d) - 1;
  Bits h = sup->pow(sup->primitive_element(), static_cast<std::int64_t>(sup->group_order() / sub_order));
  Bits best = 0;
  bool found = false;
  Bits y = 1;
  for (std::uint64_t k = 0; k < sub_order; ++k) {
    // evaluate sub's modulus at y by Horner
    Bits acc = 0;
    for (int i = d; i >= 0; --i) acc = sup->mul(acc, y) ^ ((sub->modulus() >> i) & 1);
    if (acc == 0 && (!found || y < best)) {
      best = y;
      found = true;
    }
    y = sup->mul(y, h);
  }
  if (!found) throw Error(ErrorKind::NoEmbedding, "no root of the modulus found");
  std::lock_guard lock(reg.mu);
  reg.roots.emplace(std::pair{sub, sup}, best);
  return {sup, best};
}

FieldElement embed(const FieldElement& x, Field sup) {
  Field sub = x.field();
  if (sub == sup) return x;
  FieldElement r = embedding_root(sub, sup);
  // image of sum c_i t^i is sum c_i r^i
  Bits acc = 0, rp = 1;
  for (int i = 0; i < sub->degree(); ++i) {
    if ((x.bits() >> i) & 1) acc ^= rp;
    rp = sup->mul(rp, r.bits());
  }
  return {sup, acc};
}

std::optional<FieldElement> restrict_to(const FieldElement& x, Field sub) {
  Field sup = x.field();
  if (sub == sup) return x;
  if (sup->degree() % sub->degree() != 0) return std::nullopt;
  FieldElement r = embedding_root(sub, sup);
  const int d = sub->degree();
  // Solve sum c_i r^i = x over GF(2): columns r^i as M-bit words.
  std::vector<Bits> rows;  // each row: image bits | (coefficient tag << 32)
  Bits rp = 1;
  for (int i = 0; i < d; ++i) {
    rows.push_back(rp | (Bits{1} << (32 + i)));
    rp = sup->mul(rp, r.bits());
  }
  // reduce x against an echelon basis of the images
  std::vector<Bits> basis;
  for (Bits row : rows) {
    for (Bits b : basis) {
      int p = bit_degree(b & 0xffffffffu);
      if ((row >> p) & 1) row ^= b;
    }
    if ((row & 0xffffffffu) != 0) basis.push_back(row);
    std::sort(basis.begin(), basis.end(), [](Bits a, Bits b) { return (a & 0xffffffffu) > (b & 0xffffffffu); });
  }
  Bits target = x.bits();
  Bits coeffs = 0;
  for (Bits b : basis) {
    int p = bit_degree(b & 0xffffffffu);
    if ((target >> p) & 1) {
      target ^= b & 0xffffffffu;
      coeffs ^= b >> 32;
    }
  }
  if (target != 0) return std::nullopt;
  return FieldElement(sub, coeffs);
}

int minimal_degree(const FieldElement& x) {
  const int m = x.field()->degree();
  for (int d = 1; d <= m; ++d)
    if (m % d == 0 && x.field()->frobenius(x.bits(), static_cast<unsigned>(d)) == x.bits()) return d;
  return m;
}

std::string format(const FieldElement& x) {
  if (x.field() == nullptr) return "<unset>";
  if (x.is_zero()) return "0";
  Field f = x.field();
  if (f->generator_check()) {
    std::uint64_t k = f->dlog(x.bits());
    if (k == 0) return "1";
    if (k == 1) return "g";
    return "g^" + std::to_string(k);
  }
  std::string s = "0b";
  for (int i = 0; i < f->degree(); ++i) s += ((x.bits() >> i) & 1) ? '1' : '0';
  return s;
}

FieldElement parse_element(std::string_view text, Field f) {
  std::string s = trim(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty field element");
  if (s == "0") return FieldElement::zero(f);
  if (s == "1") return FieldElement::one(f);
  if (s == "g") return FieldElement::gen(f, 1);
  if (s.rfind("g^", 0) == 0) return FieldElement::gen(f, parse_int(std::string_view(s).substr(2), s));
  if (s.rfind("0b", 0) == 0) {
    std::string_view body = std::string_view(s).substr(2);
    if (body.empty() || static_cast<int>(body.size()) > f->degree())
      throw Error(ErrorKind::ParseError, "bit string '" + s + "' does not fit " + f->name());
    Bits v = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '1')
        v |= Bits{1} << i;
      else if (body[i] != '0')
        throw Error(ErrorKind::ParseError, "bad bit string '" + s + "'");
    }
    return {f, v};
  }
  throw Error(ErrorKind::ParseError, "unrecognised field element '" + s + "'");
}

Field parse_field_header(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto eq = s.find('=');
  if (eq == std::string::npos || s.rfind("g^", 0) != 0)
    throw Error(ErrorKind::ParseError, "field header must read g^m=...");
  auto m = parse_int(std::string_view(s).substr(2, eq - 2), s);
  if (m < 1 || m > kMaxDegree) throw Error(ErrorKind::ParseError, "field degree out of range");
  Bits rhs = 0;
  std::string_view rest = std::string_view(s).substr(eq + 1);
  while (!rest.empty()) {
    auto plus = rest.find('+');
    std::string_view term = rest.substr(0, plus);
    std::int64_t k = 0;
    if (term == "1")
      k = 0;
    else if (term == "g")
      k = 1;
    else if (term.rfind("g^", 0) == 0)
      k = parse_int(term.substr(2), s);
    else
      throw Error(ErrorKind::ParseError, "bad term in field header '" + s + "'");
    if (k < 0 || k >= m) throw Error(ErrorKind::ParseError, "field header term out of range");
    rhs ^= Bits{1} << k;
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  return field_make(static_cast<int>(m), (Bits{1} << m) | rhs);
}

std::string format_field_header(Field f) {
  std::string s = "g^" + std::to_string(f->degree()) + "=";
  bool first = true;
  for (int i = f->degree() - 1; i >= 0; --i) {
    if (((f->modulus() >> i) & 1) == 0) continue;
    if (!first) s += "+";
    first = false;
    s += i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i);
  }
  if (first) s += "0";
  return s;
}

}  // namespace lehmer::gf2m
