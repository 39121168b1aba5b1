// GF(p^k) arithmetic on packed element codes.
//
// An element is a single integer code whose digit string gives its
// polynomial-basis coordinates. Two code widths are instantiated:
//
//   uint64_t        base-p packed (codes are exactly 0..q-1); fields with
//                   q <= 2^20 get exp/log tables for O(1) mul and inv.
//   unsigned __int128  bit-packed digits (shift/mask extraction, no division
//                   in the hot path) for the occasional large splitting
//                   field; no tables.
//
// Call sites never interpret codes arithmetically; they go through digits(),
// from_digits() and nth_element(), which hide the packing.
#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "msalg/common.hpp"

namespace msalg {

using u128 = unsigned __int128;

template <class Code>
struct code_traits;

template <>
struct code_traits<std::uint64_t> {
  static constexpr std::uint64_t q_cap = 1ULL << 62;
  static constexpr std::uint32_t max_digits = 62;
  static constexpr bool bit_packed = false;
  static constexpr bool use_tables = true;
  static constexpr const char* name = "u64";
};

template <>
struct code_traits<u128> {
  static constexpr u128 q_cap = static_cast<u128>(1) << 120;
  static constexpr std::uint32_t max_digits = 120;
  static constexpr bool bit_packed = true;
  static constexpr bool use_tables = false;
  static constexpr const char* name = "u128";
};

inline constexpr std::uint32_t kFqTableCap = 1u << 20;
inline constexpr std::uint32_t kFqMaxPrime = 1u << 20;

template <class Code>
class FqField {
 public:
  using code = Code;
  static constexpr bool kBitPacked = code_traits<Code>::bit_packed;

  // The modulus must be a monic irreducible of degree k over GF(p); use
  // make_field() to obtain the canonical (lexicographically smallest) one.
  FqField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
      : p_(p), k_(k), mod_(std::move(modulus)) {
    require(is_prime_u64(p_), Err::ParameterOutOfRange, "characteristic must be prime");
    require(p_ < kFqMaxPrime, Err::ParameterOutOfRange, "prime too large for packed representation");
    require(k_ >= 1, Err::ParameterOutOfRange, "extension degree must be >= 1");
    require(mod_.size() == k_ + 1 && mod_[k_] == 1, Err::ParameterOutOfRange, "modulus must be monic of degree k");
    for (std::uint32_t c : mod_) require(c < p_, Err::ParameterOutOfRange, "modulus digit out of range");
    if constexpr (kBitPacked) {
      shift_ = std::bit_width(p_ - 1);
      if (p_ == 2) shift_ = 1;
      require(static_cast<std::uint64_t>(shift_) * k_ <= 120, Err::DegreeCap,
              "field size exceeds the packed-code capacity");
      mask_ = (static_cast<Code>(1) << shift_) - 1;
    }
    // q = p^k, also bounded by the code capacity in the base-p case
    q_ = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      require(q_ <= code_traits<Code>::q_cap / p_, Err::DegreeCap, "field size exceeds the packed-code capacity");
      q_ *= p_;
    }
    if constexpr (!kBitPacked) {
      pw_.resize(k_ + 1);
      pw_[0] = 1;
      for (std::uint32_t i = 1; i <= k_; ++i) pw_[i] = pw_[i - 1] * p_;
      // reciprocal for division-free digit extraction: ceil(2^128 / p)
      u128 magic = (~static_cast<u128>(0)) / p_ + 1;
      magic_hi_ = static_cast<std::uint64_t>(magic >> 64);
      magic_lo_ = static_cast<std::uint64_t>(magic);
    }
    if (code_traits<Code>::use_tables && q_ <= kFqTableCap) build_tables();
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  Code q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }
  bool has_tables() const { return has_tables_; }
  // deterministic generator of the multiplicative group (table fields only)
  Code table_generator() const {
    require(has_tables_, Err::InternalInconsistency, "generator cached only for table-backed fields");
    return gen_;
  }

  Code zero() const { return 0; }
  Code one() const { return 1; }

  Code from_u64(std::uint64_t v) const { return static_cast<Code>(v % p_); }
  Code from_i64(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Code>(r);
  }

  std::uint32_t digit(Code a, std::uint32_t i) const {
    if constexpr (kBitPacked) return static_cast<std::uint32_t>((a >> (i * shift_)) & mask_);
    return static_cast<std::uint32_t>((a / pw_[i]) % p_);
  }

  Code from_digits(const std::vector<std::uint32_t>& d) const {
    require(d.size() <= k_, Err::ParameterOutOfRange, "too many digits");
    Code a = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
      require(d[i] < p_, Err::ParameterOutOfRange, "digit out of range");
      if constexpr (kBitPacked)
        a = (a << shift_) | d[i];
      else
        a = a * p_ + d[i];
    }
    return a;
  }

  std::vector<std::uint32_t> digits(Code a) const {
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t i = 0; i < k_; ++i) d[i] = digit(a, i);
    return d;
  }

  // dense enumeration 0..q-1 -> code, in digit-lexicographic order (identity
  // for base-p packing)
  Code nth_element(Code index) const {
    if constexpr (!kBitPacked) return index;
    Code a = 0;
    std::uint32_t pos = 0;
    while (index) {
      a |= static_cast<Code>(static_cast<std::uint32_t>(index % p_)) << (pos * shift_);
      index /= p_;
      ++pos;
    }
    return a;
  }

  bool in_prime_field(Code a) const { return a < p_; }

  Code add(Code a, Code b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) {
      Code s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if constexpr (kBitPacked) {
      Code r = 0;
      for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t s = static_cast<std::uint32_t>(a & mask_) + static_cast<std::uint32_t>(b & mask_);
        if (s >= p_) s -= p_;
        r |= static_cast<Code>(s) << (i * shift_);
        a >>= shift_;
        b >>= shift_;
      }
      return r;
    } else {
      Code r = 0, mult = 1;
      for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint64_t qa = quot_p(a), qb = quot_p(b);
        std::uint32_t s = static_cast<std::uint32_t>(a - qa * p_) + static_cast<std::uint32_t>(b - qb * p_);
        if (s >= p_) s -= p_;
        r += mult * s;
        a = qa;
        b = qb;
        mult *= p_;
      }
      return r;
    }
  }

  Code neg(Code a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return a == 0 ? 0 : static_cast<Code>(p_) - a;
    Code r = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      std::uint32_t d = digit(a, i);
      std::uint32_t nd = d == 0 ? 0 : p_ - d;
      if constexpr (kBitPacked)
        r |= static_cast<Code>(nd) << (i * shift_);
      else
        r += pw_[i] * nd;
    }
    return r;
  }

  Code sub(Code a, Code b) const { return add(a, neg(b)); }

  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables_) {
      std::uint32_t s = log_[static_cast<std::uint32_t>(a)] + log_[static_cast<std::uint32_t>(b)];
      if (s >= qm1_) s -= qm1_;
      return exp_[s];
    }
    if (k_ == 1) return (a * b) % p_;
    return mul_generic(a, b);
  }

  Code inv(Code a) const {
    require(a != 0, Err::ParameterOutOfRange, "inverse of zero");
    if (has_tables_) {
      std::uint32_t l = log_[static_cast<std::uint32_t>(a)];
      return exp_[l == 0 ? 0 : qm1_ - l];
    }
    if (k_ == 1) return static_cast<Code>(modinv_u64(static_cast<std::uint64_t>(a), p_));
    return pow(a, q_ - 2);
  }

  Code div(Code a, Code b) const { return mul(a, inv(b)); }

  Code pow(Code a, Code e) const {
    Code r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Code pow_u64(Code a, std::uint64_t e) const { return pow(a, static_cast<Code>(e)); }

  // multiplicative order; intended for small/table fields and tests
  std::uint64_t mult_order(Code a) const {
    require(a != 0, Err::ParameterOutOfRange, "order of zero");
    std::uint64_t n = 1;
    Code x = a;
    while (x != 1) {
      x = mul(x, a);
      ++n;
    }
    return n;
  }

  std::string to_string(Code a) const {
    auto d = digits(a);
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + "]";
  }

 private:
  // floor(a / p) via the precomputed 128-bit reciprocal (exact for a < 2^64)
  std::uint64_t quot_p(std::uint64_t a) const {
    u128 t1 = static_cast<u128>(magic_hi_) * a;
    u128 t2 = static_cast<u128>(magic_lo_) * a;
    return static_cast<std::uint64_t>(t1 >> 64) +
           static_cast<std::uint64_t>(((t1 & 0xffffffffffffffffULL) + (t2 >> 64)) >> 64);
  }

  void unpack(Code a, std::uint32_t* out) const {
    if constexpr (kBitPacked) {
      for (std::uint32_t i = 0; i < k_; ++i) {
        out[i] = static_cast<std::uint32_t>(a & mask_);
        a >>= shift_;
      }
    } else {
      if (p_ == 2) {
        for (std::uint32_t i = 0; i < k_; ++i) out[i] = static_cast<std::uint32_t>((a >> i) & 1);
        return;
      }
      for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint64_t q = quot_p(a);
        out[i] = static_cast<std::uint32_t>(a - q * p_);
        a = q;
      }
    }
  }

  Code pack(const std::uint64_t* acc) const {
    Code r = 0;
    if constexpr (kBitPacked) {
      for (std::uint32_t i = k_; i-- > 0;) r = (r << shift_) | static_cast<Code>(acc[i] % p_);
    } else {
      for (std::uint32_t i = k_; i-- > 0;) r = r * p_ + static_cast<Code>(acc[i] % p_);
    }
    return r;
  }

  Code mul_generic(Code a, Code b) const {
    std::array<std::uint64_t, 2 * code_traits<Code>::max_digits> acc{};
    std::array<std::uint32_t, code_traits<Code>::max_digits> da, db;
    unpack(a, da.data());
    unpack(b, db.data());
    for (std::uint32_t i = 0; i < k_; ++i) {
      if (!da[i]) continue;
      for (std::uint32_t j = 0; j < k_; ++j) acc[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
    // reduce by the monic modulus, top down
    for (std::uint32_t j = 2 * k_ - 2; j >= k_; --j) {
      std::uint64_t c = acc[j] % p_;
      if (c) {
        for (std::uint32_t i = 0; i < k_; ++i) {
          if (mod_[i]) acc[j - k_ + i] += c * (p_ - mod_[i]);
        }
      }
      if (j == k_) break;
    }
    return pack(acc.data());
  }

  void build_tables() {
    const std::uint32_t q = static_cast<std::uint32_t>(q_);
    qm1_ = q - 1;
    auto fac = factor_u64(qm1_ == 0 ? 1 : qm1_);
    // smallest code with full multiplicative order
    Code g = 1;
    if (q > 2) {
      for (g = 2; g < q_; ++g) {
        bool ok = true;
        for (auto [ell, e] : fac) {
          (void)e;
          if (pow_no_tables(g, qm1_ / ell) == 1) {
            ok = false;
            break;
          }
        }
        if (ok) break;
      }
      require(g < q_, Err::InternalInconsistency, "no generator found");
    }
    gen_ = g;
    exp_.assign(qm1_ ? qm1_ : 1, 1);
    log_.assign(q, 0);
    Code cur = 1;
    for (std::uint32_t i = 0; i < qm1_; ++i) {
      exp_[i] = static_cast<std::uint32_t>(cur);
      log_[static_cast<std::uint32_t>(cur)] = i;
      cur = k_ == 1 ? (cur * g) % p_ : mul_generic(cur, g);
    }
    require(cur == 1, Err::InternalInconsistency, "generator order defect");
    has_tables_ = true;
  }

  Code pow_no_tables(Code a, std::uint64_t e) const {
    Code r = 1;
    while (e) {
      if (e & 1) r = k_ == 1 ? (r * a) % p_ : mul_generic(r, a);
      a = k_ == 1 ? (a * a) % p_ : mul_generic(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t p_ = 0, k_ = 0;
  Code q_ = 0;
  std::vector<std::uint32_t> mod_;
  std::vector<Code> pw_;  // base-p packing only
  std::uint64_t magic_hi_ = 0, magic_lo_ = 0;
  std::uint32_t shift_ = 0;
  Code mask_ = 0;
  bool has_tables_ = false;
  std::uint32_t qm1_ = 0;
  Code gen_ = 0;
  std::vector<std::uint32_t> exp_, log_;
};

template <class Code>
inline bool same_field(const FqField<Code>& a, const FqField<Code>& b) {
  return a.p() == b.p() && a.k() == b.k() && a.modulus() == b.modulus();
}

// Value wrapper for tests and call sites that prefer operator syntax.
template <class Code>
struct FqElem {
  const FqField<Code>* F = nullptr;
  Code v = 0;

  friend FqElem operator+(FqElem a, FqElem b) { return {a.F, a.F->add(a.v, b.v)}; }
  friend FqElem operator-(FqElem a, FqElem b) { return {a.F, a.F->sub(a.v, b.v)}; }
  friend FqElem operator*(FqElem a, FqElem b) { return {a.F, a.F->mul(a.v, b.v)}; }
  friend FqElem operator/(FqElem a, FqElem b) { return {a.F, a.F->div(a.v, b.v)}; }
  friend FqElem operator-(FqElem a) { return {a.F, a.F->neg(a.v)}; }
  friend bool operator==(FqElem a, FqElem b) { return a.v == b.v; }
  friend bool operator!=(FqElem a, FqElem b) { return a.v != b.v; }
};

using Fq64 = FqField<std::uint64_t>;
using Fq128 = FqField<u128>;

}  // namespace msalg
