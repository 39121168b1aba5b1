// Univariate polynomials over GF(q): arithmetic, gcd, modular powers, and
// full factorization (squarefree / distinct-degree / equal-degree splitting),
// plus canonical field construction and root-of-unity selection.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "msalg/common.hpp"
#include "msalg/fq.hpp"

namespace msalg {

template <class Code>
struct Poly {
  const FqField<Code>* F = nullptr;
  std::vector<Code> c;  // c[i] = coefficient of x^i, no trailing zeros

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Code lead() const { return c.back(); }
  Code at(std::size_t i) const { return i < c.size() ? c[i] : 0; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
};

template <class Code>
inline Poly<Code> poly_zero(const FqField<Code>& F) {
  return {&F, {}};
}

template <class Code>
inline Poly<Code> poly_const(const FqField<Code>& F, Code v) {
  Poly<Code> f{&F, {v}};
  f.trim();
  return f;
}

template <class Code>
inline Poly<Code> poly_x(const FqField<Code>& F) {
  return {&F, {0, 1}};
}

template <class Code>
inline Poly<Code> poly_from(const FqField<Code>& F, std::vector<Code> coeffs) {
  Poly<Code> f{&F, std::move(coeffs)};
  f.trim();
  return f;
}

template <class Code>
inline Poly<Code> poly_add(const Poly<Code>& a, const Poly<Code>& b) {
  const auto& F = *a.F;
  Poly<Code> r{a.F, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.at(i), b.at(i));
  r.trim();
  return r;
}

template <class Code>
inline Poly<Code> poly_sub(const Poly<Code>& a, const Poly<Code>& b) {
  const auto& F = *a.F;
  Poly<Code> r{a.F, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a.at(i), b.at(i));
  r.trim();
  return r;
}

template <class Code>
inline Poly<Code> poly_scale(const Poly<Code>& a, Code s) {
  const auto& F = *a.F;
  Poly<Code> r{a.F, a.c};
  for (auto& x : r.c) x = F.mul(x, s);
  r.trim();
  return r;
}

template <class Code>
inline Poly<Code> poly_mul(const Poly<Code>& a, const Poly<Code>& b) {
  if (a.is_zero() || b.is_zero()) return poly_zero(*a.F);
  const auto& F = *a.F;
  Poly<Code> r{a.F, std::vector<Code>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  r.trim();
  return r;
}

// quotient/remainder; divisor must be nonzero
template <class Code>
inline std::pair<Poly<Code>, Poly<Code>> poly_divmod(const Poly<Code>& a, const Poly<Code>& b) {
  require(!b.is_zero(), Err::ParameterOutOfRange, "division by zero polynomial");
  const auto& F = *a.F;
  if (a.deg() < b.deg()) return {poly_zero(F), a};
  Poly<Code> rem = a;
  Poly<Code> quo{a.F, std::vector<Code>(a.c.size() - b.c.size() + 1, 0)};
  Code lead_inv = F.inv(b.lead());
  for (int i = rem.deg(); i >= b.deg() && !rem.is_zero(); i = rem.deg()) {
    Code factor = F.mul(rem.c[i], lead_inv);
    std::size_t shift = static_cast<std::size_t>(i - b.deg());
    quo.c[shift] = factor;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      rem.c[shift + j] = F.sub(rem.c[shift + j], F.mul(factor, b.c[j]));
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

template <class Code>
inline Poly<Code> poly_mod(const Poly<Code>& a, const Poly<Code>& b) {
  return poly_divmod(a, b).second;
}

template <class Code>
inline Poly<Code> poly_div_exact(const Poly<Code>& a, const Poly<Code>& b) {
  auto [q, r] = poly_divmod(a, b);
  require(r.is_zero(), Err::InternalInconsistency, "division was not exact");
  return q;
}

template <class Code>
inline Poly<Code> poly_make_monic(const Poly<Code>& a) {
  if (a.is_zero() || a.lead() == 1) return a;
  return poly_scale(a, a.F->inv(a.lead()));
}

template <class Code>
inline Poly<Code> poly_gcd(Poly<Code> a, Poly<Code> b) {
  while (!b.is_zero()) {
    Poly<Code> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(a);
}

// extended Euclid restricted to what coprime interpolation needs:
// returns s with s*a = 1 (mod m); a and m must be coprime
template <class Code>
inline Poly<Code> poly_invmod(const Poly<Code>& a, const Poly<Code>& m) {
  const auto& F = *a.F;
  Poly<Code> r0 = m, r1 = poly_mod(a, m);
  Poly<Code> s0 = poly_zero(F), s1 = poly_const(F, F.one());
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly<Code> s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  require(r0.deg() == 0, Err::NotCoprime, "polynomials are not coprime");
  return poly_mod(poly_scale(s0, F.inv(r0.c[0])), m);
}

template <class Code>
inline Poly<Code> poly_mulmod(const Poly<Code>& a, const Poly<Code>& b, const Poly<Code>& m) {
  return poly_mod(poly_mul(a, b), m);
}

template <class Code>
inline Poly<Code> poly_powmod(Poly<Code> base, Code e, const Poly<Code>& m) {
  Poly<Code> r = poly_const(*base.F, base.F->one());
  base = poly_mod(base, m);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m);
    base = poly_mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

template <class Code>
inline Poly<Code> poly_derivative(const Poly<Code>& a) {
  const auto& F = *a.F;
  Poly<Code> r{a.F, {}};
  if (a.deg() < 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    Code m = F.from_u64(i % F.p());
    r.c[i - 1] = F.mul(a.c[i], m);
  }
  r.trim();
  return r;
}

template <class Code>
inline Code poly_eval(const Poly<Code>& a, Code x) {
  const auto& F = *a.F;
  Code r = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
  return r;
}

// f(x) = g(x^p) -> g, taking p-th roots of coefficients (a^(q/p) = a^(p^(k-1)))
template <class Code>
inline Poly<Code> poly_pth_root(const Poly<Code>& f) {
  const auto& F = *f.F;
  const std::uint32_t p = F.p();
  Poly<Code> g{f.F, {}};
  g.c.resize(f.c.size() / p + 1, 0);
  Code root_exp = 1;
  for (std::uint32_t i = 0; i + 1 < F.k(); ++i) root_exp *= p;  // p^(k-1)
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i] == 0) continue;
    require(i % p == 0, Err::InternalInconsistency, "not a p-th power");
    g.c[i / p] = F.pow(f.c[i], root_exp);
  }
  g.trim();
  return g;
}

// ---------------------------------------------------------------------------
// Factorization

template <class Code>
struct PolyFactor {
  Poly<Code> factor;       // monic irreducible
  std::uint32_t multiplicity = 0;
};

namespace detail {

// squarefree decomposition in characteristic p
template <class Code>
inline void sff(const Poly<Code>& f, std::uint32_t mult, std::vector<std::pair<Poly<Code>, std::uint32_t>>& out) {
  const auto& F = *f.F;
  if (f.deg() == 0) return;
  Poly<Code> d = poly_derivative(f);
  if (d.is_zero()) {
    sff(poly_pth_root(f), mult * F.p(), out);
    return;
  }
  Poly<Code> c = poly_gcd(f, d);
  Poly<Code> w = poly_div_exact(f, c);
  std::uint32_t i = 1;
  while (w.deg() > 0) {
    Poly<Code> y = poly_gcd(w, c);
    Poly<Code> z = poly_div_exact(w, y);
    if (z.deg() > 0) out.emplace_back(poly_make_monic(z), mult * i);
    w = std::move(y);
    c = poly_div_exact(c, w);
    ++i;
  }
  if (c.deg() > 0) sff(poly_pth_root(c), mult * F.p(), out);
}

// distinct-degree: f monic squarefree -> (product of irreducibles of degree d, d)
template <class Code>
inline std::vector<std::pair<Poly<Code>, std::uint32_t>> ddf(Poly<Code> f) {
  const auto& F = *f.F;
  std::vector<std::pair<Poly<Code>, std::uint32_t>> out;
  Poly<Code> h = poly_mod(poly_x(F), f);
  std::uint32_t i = 0;
  while (f.deg() >= static_cast<int>(2 * (i + 1))) {
    ++i;
    h = poly_powmod(h, F.q(), f);
    Poly<Code> g = poly_gcd(poly_sub(h, poly_x(F)), f);
    if (g.deg() > 0) {
      out.emplace_back(g, i);
      f = poly_div_exact(f, g);
      h = poly_mod(h, f);
    }
  }
  if (f.deg() > 0) out.emplace_back(f, static_cast<std::uint32_t>(f.deg()));
  return out;
}

template <class Code>
inline Poly<Code> random_poly_below(const FqField<Code>& F, int deg_bound, Rng& rng) {
  // uniform coefficients, degree < deg_bound
  std::vector<Code> c(static_cast<std::size_t>(deg_bound));
  for (auto& x : c) {
    std::vector<std::uint32_t> d(F.k());
    for (auto& di : d) di = static_cast<std::uint32_t>(rng.below(F.p()));
    x = F.from_digits(d);
  }
  return poly_from(F, std::move(c));
}

// equal-degree splitting: f = product of distinct irreducibles of degree d
template <class Code>
inline void edf(const Poly<Code>& f, std::uint32_t d, Rng& rng, std::vector<Poly<Code>>& out) {
  const auto& F = *f.F;
  if (f.deg() == static_cast<int>(d)) {
    out.push_back(poly_make_monic(f));
    return;
  }
  for (;;) {
    Poly<Code> h = random_poly_below(F, f.deg(), rng);
    if (h.deg() < 1) continue;
    Poly<Code> g;
    if (F.p() == 2) {
      // absolute trace map over GF(2)
      Poly<Code> t = poly_mod(h, f);
      Poly<Code> acc = t;
      std::uint64_t steps = static_cast<std::uint64_t>(F.k()) * d;
      for (std::uint64_t i = 1; i < steps; ++i) {
        t = poly_mulmod(t, t, f);
        acc = poly_add(acc, t);
      }
      g = acc;
    } else {
      // norm to GF(q) via Frobenius, then the (q-1)/2 power test
      Poly<Code> t = poly_mod(h, f);
      Poly<Code> acc = t;
      for (std::uint32_t i = 1; i < d; ++i) {
        t = poly_powmod(t, F.q(), f);
        acc = poly_mulmod(acc, t, f);
      }
      Poly<Code> s = poly_powmod(acc, (F.q() - 1) / 2, f);
      g = poly_sub(s, poly_const(F, F.one()));
    }
    Poly<Code> split = poly_gcd(g, f);
    if (split.deg() > 0 && split.deg() < f.deg()) {
      edf(split, d, rng, out);
      edf(poly_div_exact(f, split), d, rng, out);
      return;
    }
  }
}

}  // namespace detail

// Canonical factor order: by degree, then coefficient codes from the constant
// term up.
template <class Code>
inline bool poly_before(const Poly<Code>& a, const Poly<Code>& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  }
  return false;
}

// Complete factorization of a nonzero polynomial. Randomized equal-degree
// splitting is driven by the supplied stream, so output is reproducible for a
// fixed seed; the factor list itself is seed-independent (sorted).
template <class Code>
inline std::vector<PolyFactor<Code>> poly_factor(const Poly<Code>& f, Rng& rng) {
  require(!f.is_zero(), Err::ParameterOutOfRange, "cannot factor the zero polynomial");
  std::vector<PolyFactor<Code>> out;
  if (f.deg() == 0) return out;
  std::vector<std::pair<Poly<Code>, std::uint32_t>> square_free;
  detail::sff(poly_make_monic(f), 1, square_free);
  for (auto& [part, mult] : square_free) {
    for (auto& [prod, d] : detail::ddf(std::move(part))) {
      std::vector<Poly<Code>> irr;
      detail::edf(prod, d, rng, irr);
      for (auto& g : irr) out.push_back({std::move(g), mult});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PolyFactor<Code>& a, const PolyFactor<Code>& b) { return poly_before(a.factor, b.factor); });
  return out;
}

template <class Code>
inline std::vector<PolyFactor<Code>> poly_factor(const Poly<Code>& f) {
  Rng rng(global_seed(), fnv1a("poly_factor"));
  return poly_factor(f, rng);
}

// Rabin irreducibility test over the coefficient field.
template <class Code>
inline bool poly_is_irreducible(const Poly<Code>& f) {
  const auto& F = *f.F;
  if (f.deg() < 1) return false;
  if (f.deg() == 1) return true;
  const std::uint32_t n = static_cast<std::uint32_t>(f.deg());
  // x^(q^i) mod f for i = 1..n
  std::vector<Poly<Code>> frob(n + 1, poly_zero(F));
  frob[0] = poly_mod(poly_x(F), f);
  for (std::uint32_t i = 1; i <= n; ++i) frob[i] = poly_powmod(frob[i - 1], F.q(), f);
  if (!(frob[n] == frob[0])) return false;
  for (auto [ell, e] : factor_u64(n)) {
    (void)e;
    Poly<Code> g = poly_sub(frob[n / ell], frob[0]);
    if (poly_gcd(g, f).deg() != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Field construction

// smallest k >= 1 with p^k = 1 (mod d)
inline std::uint32_t order_mod(std::uint64_t p, std::uint64_t d) {
  require(d >= 1, Err::ParameterOutOfRange, "d must be positive");
  if (d == 1) return 1;
  require(std::gcd(p, d) == 1, Err::NotCoprime, "p and d share a factor");
  std::uint64_t acc = p % d;
  std::uint32_t k = 1;
  while (acc != 1) {
    acc = mulmod_u64(acc, p % d, d);
    ++k;
    require(k <= d, Err::InternalInconsistency, "order search overran");
  }
  return k;
}

// GF(p^k) with the lexicographically smallest monic irreducible modulus
// (coefficients compared constant term first); deterministic across runs.
template <class Code = std::uint64_t>
inline FqField<Code> make_field(std::uint32_t p, std::uint32_t k) {
  require(is_prime_u64(p), Err::ParameterOutOfRange, "p must be prime");
  require(p < kFqMaxPrime, Err::ParameterOutOfRange, "prime too large for packed representation");
  require(k >= 1, Err::ParameterOutOfRange, "k must be >= 1");
  {
    Code q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      require(q <= code_traits<Code>::q_cap / p, Err::DegreeCap, "field size exceeds the packed-code capacity");
      q *= p;
    }
  }
  if (k == 1) return FqField<Code>(p, 1, {0, 1});
  FqField<Code> prime_field(p, 1, {0, 1});
  // enumerate (c_0, ..., c_{k-1}) in lexicographic order; x | f iff c_0 = 0,
  // so the constant-0 block is skipped outright
  std::vector<Code> pw(k);
  pw[0] = 1;
  for (std::uint32_t i = 1; i < k; ++i) pw[i] = pw[i - 1] * p;
  for (Code v = pw[k - 1]; ; ++v) {
    require(v < pw[k - 1] * p, Err::InternalInconsistency, "no irreducible polynomial found");
    std::vector<Code> coeffs(k + 1, 0);
    coeffs[k] = 1;
    for (std::uint32_t i = 0; i < k; ++i) coeffs[i] = (v / pw[k - 1 - i]) % p;
    Poly<Code> f = poly_from(prime_field, coeffs);
    if (poly_is_irreducible(f)) {
      std::vector<std::uint32_t> digits(k + 1);
      for (std::uint32_t i = 0; i <= k; ++i) digits[i] = static_cast<std::uint32_t>(f.at(i));
      return FqField<Code>(p, k, digits);
    }
  }
}

// Splitting field for a group of the given order in characteristic p:
// |G| = p^r * d with p not dividing d, and k = order of p mod d.
template <class Code = std::uint64_t>
inline FqField<Code> splitting_field_for_order(std::uint64_t group_order, std::uint64_t p) {
  require(is_prime_u64(p), Err::ParameterOutOfRange, "p must be prime");
  std::uint64_t d = group_order;
  while (d % p == 0) d /= p;
  return make_field<Code>(static_cast<std::uint32_t>(p), order_mod(p, d));
}

// required extension degree without constructing the field
inline std::uint32_t splitting_degree_for_order(std::uint64_t group_order, std::uint64_t p) {
  std::uint64_t d = group_order;
  while (d % p == 0) d /= p;
  return order_mod(p, d);
}

// Element of multiplicative order exactly d. Table-backed fields use the
// cached generator; otherwise successive bases are tried until the order
// certificate (all maximal proper power residues differ from 1) passes.
template <class Code>
inline Code primitive_root_of_unity(const FqField<Code>& F, std::uint64_t d) {
  require(d >= 1, Err::ParameterOutOfRange, "d must be positive");
  if (d == 1) return F.one();
  require((F.q() - 1) % d == 0, Err::NoSuchRoot, "d does not divide q-1");
  Code exponent = (F.q() - 1) / static_cast<Code>(d);
  auto order_is_exact = [&](Code y) {
    if (y == 1) return false;
    for (auto [ell, e] : factor_u64(d)) {
      (void)e;
      if (F.pow_u64(y, d / ell) == 1) return false;
    }
    return true;
  };
  if (F.has_tables()) {
    Code y = F.pow(F.table_generator(), exponent);
    require(order_is_exact(y), Err::InternalInconsistency, "generator produced a deficient root");
    return y;
  }
  for (Code i = 2; i < F.q(); ++i) {
    Code y = F.pow(F.nth_element(i), exponent);
    if (order_is_exact(y)) return y;
  }
  fail(Err::NoSuchRoot, "no primitive root found");
}

}  // namespace msalg
