// Shared plumbing: error codes, seeded randomness, small number-theory helpers.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace msalg {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

enum class Err {
  UnknownFamily,
  ParameterOutOfRange,
  OrderCap,
  ParseError,
  NotAssociative,
  NoIdentity,
  NotLatinSquare,
  NotNormal,
  NotCoprime,
  DegreeCap,
  NoSuchRoot,
  AlgebraMismatch,
  NotAlmostIdempotent,
  CharDividesH,
  NotIdempotent,
  NotCommutative,
  NotClosed,
  NotSemisimple,
  NotSplit,
  DimsMismatch,
  InternalInconsistency,
  BudgetExceeded,
  TooManyBlocks,
  IoError,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::UnknownFamily: return "UnknownFamily";
    case Err::ParameterOutOfRange: return "ParameterOutOfRange";
    case Err::OrderCap: return "OrderCap";
    case Err::ParseError: return "ParseError";
    case Err::NotAssociative: return "NotAssociative";
    case Err::NoIdentity: return "NoIdentity";
    case Err::NotLatinSquare: return "NotLatinSquare";
    case Err::NotNormal: return "NotNormal";
    case Err::NotCoprime: return "NotCoprime";
    case Err::DegreeCap: return "DegreeCap";
    case Err::NoSuchRoot: return "NoSuchRoot";
    case Err::AlgebraMismatch: return "AlgebraMismatch";
    case Err::NotAlmostIdempotent: return "NotAlmostIdempotent";
    case Err::CharDividesH: return "CharDividesH";
    case Err::NotIdempotent: return "NotIdempotent";
    case Err::NotCommutative: return "NotCommutative";
    case Err::NotClosed: return "NotClosed";
    case Err::NotSemisimple: return "NotSemisimple";
    case Err::NotSplit: return "NotSplit";
    case Err::DimsMismatch: return "DimsMismatch";
    case Err::InternalInconsistency: return "InternalInconsistency";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::TooManyBlocks: return "TooManyBlocks";
    case Err::IoError: return "IoError";
  }
  return "UnknownError";
}

class MsError : public std::runtime_error {
 public:
  MsError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw MsError(code, what); }

inline void require(bool cond, Err code, const std::string& what) {
  if (!cond) fail(code, what);
}

// ---------------------------------------------------------------------------
// Seeded randomness. One seed drives the whole run; concurrent tasks derive
// independent streams from (seed, stream) so results do not depend on
// scheduling.

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t x = seed ^ (stream * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    std::seed_seq seq{splitmix64(x), splitmix64(x), splitmix64(x), splitmix64(x)};
    gen_.seed(seq);
  }
  std::uint64_t u64() { return gen_(); }
  // uniform in [0, n), n >= 1; rejection sampling keeps it unbiased
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (top % n + 1) % n;  // 2^64 mod n
    std::uint64_t v = gen_();
    if (rem != 0) {
      while (v > top - rem) v = gen_();
    }
    return v % n;
  }

 private:
  std::mt19937_64 gen_;
};

// Process-wide seed: MSALG_SEED environment variable, overridable by the CLI.
inline std::uint64_t& global_seed_ref() {
  static std::uint64_t seed = [] {
    if (const char* env = std::getenv("MSALG_SEED")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0') return static_cast<std::uint64_t>(v);
    }
    return kDefaultSeed;
  }();
  return seed;
}

inline std::uint64_t global_seed() { return global_seed_ref(); }
inline void set_global_seed(std::uint64_t s) { global_seed_ref() = s; }

// ---------------------------------------------------------------------------
// Small integer number theory.

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Trial-division factorization; adequate for the small integers used here
// (group orders, subgroup index d, table-sized q-1).
inline std::vector<std::pair<std::uint64_t, std::uint32_t>> factor_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      std::uint32_t e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint32_t valuation_u64(std::uint64_t n, std::uint64_t p) {
  std::uint32_t v = 0;
  while (n && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline std::uint64_t modinv_u64(std::uint64_t a, std::uint64_t m) {
  // extended Euclid; a and m must be coprime
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  require(r == 1, Err::NotCoprime, "no modular inverse");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace msalg
