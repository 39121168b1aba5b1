// Finite groups as explicit Cayley tables: builtin families, permutation
// closures, user tables, conjugacy classes, p-regular structure, normal
// Sylow detection, quotients and direct products.
//
// Elements are indices 0..order-1 with the identity at index 0; all
// downstream coefficient vectors use this ordering.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "msalg/common.hpp"

namespace msalg {

// Single configuration constant: keeps O(n^3) validation and algebra
// products at desk scale.
inline constexpr std::uint32_t kOrderCap = 1024;
// Builtin constructions above this order skip the O(n^3) associativity
// sweep; user-supplied tables are always checked in full.
inline constexpr std::uint32_t kAssocCheckCap = 512;

using elt = std::uint16_t;

struct FiniteGroup {
  std::uint32_t order = 0;
  std::vector<elt> cayley;  // row-major order x order
  std::vector<elt> inverses;
  std::string label;

  elt mul(elt g, elt h) const { return cayley[static_cast<std::size_t>(g) * order + h]; }
  elt inv(elt g) const { return inverses[g]; }
};

struct ConjClass {
  elt representative = 0;
  std::vector<elt> members;
};

struct PSplit {
  std::uint64_t p = 0;
  std::uint32_t r = 0;   // |G| = p^r * d
  std::uint64_t d = 1;
};

struct Subgroup {
  std::vector<elt> members;  // sorted, contains 0
  std::uint32_t order() const { return static_cast<std::uint32_t>(members.size()); }
};

struct GroupHom {
  std::vector<elt> image;  // image[g] in the codomain
};

struct QuotientResult {
  FiniteGroup group;
  GroupHom hom;
  std::vector<elt> coset_rep;  // smallest source element per coset, rep[0] = 0
};

// ---------------------------------------------------------------------------
// Validation

namespace detail {

inline void check_latin_identity(const FiniteGroup& G) {
  const std::uint32_t n = G.order;
  std::vector<char> seen(n);
  for (std::uint32_t g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t h = 0; h < n; ++h) {
      elt v = G.mul(static_cast<elt>(g), static_cast<elt>(h));
      require(v < n, Err::NotLatinSquare, "table entry out of range");
      require(!seen[v], Err::NotLatinSquare, "repeated entry in row " + std::to_string(g));
      seen[v] = 1;
    }
  }
  for (std::uint32_t h = 0; h < n; ++h) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t g = 0; g < n; ++g) {
      elt v = G.mul(static_cast<elt>(g), static_cast<elt>(h));
      require(!seen[v], Err::NotLatinSquare, "repeated entry in column " + std::to_string(h));
      seen[v] = 1;
    }
  }
  for (std::uint32_t g = 0; g < n; ++g) {
    require(G.mul(0, static_cast<elt>(g)) == g && G.mul(static_cast<elt>(g), 0) == g, Err::NoIdentity,
            "element 0 is not a two-sided identity");
  }
}

inline void check_associative(const FiniteGroup& G) {
  const std::uint32_t n = G.order;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      elt ab = G.mul(static_cast<elt>(a), static_cast<elt>(b));
      for (std::uint32_t c = 0; c < n; ++c) {
        if (G.mul(ab, static_cast<elt>(c)) !=
            G.mul(static_cast<elt>(a), G.mul(static_cast<elt>(b), static_cast<elt>(c))))
          fail(Err::NotAssociative, "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c) + ")");
      }
    }
}

inline void fill_inverses(FiniteGroup& G) {
  G.inverses.assign(G.order, 0);
  for (std::uint32_t g = 0; g < G.order; ++g) {
    bool found = false;
    for (std::uint32_t h = 0; h < G.order; ++h) {
      if (G.mul(static_cast<elt>(g), static_cast<elt>(h)) == 0) {
        G.inverses[g] = static_cast<elt>(h);
        found = true;
        break;
      }
    }
    require(found, Err::NotLatinSquare, "no inverse for element " + std::to_string(g));
  }
}

// force_assoc: run the O(n^3) sweep regardless of order (user tables).
inline void finalize(FiniteGroup& G, bool force_assoc) {
  require(G.order >= 1 && G.order <= kOrderCap, Err::OrderCap,
          "group order " + std::to_string(G.order) + " exceeds cap " + std::to_string(kOrderCap));
  check_latin_identity(G);
  if (force_assoc || G.order <= kAssocCheckCap) check_associative(G);
  fill_inverses(G);
}

}  // namespace detail

// Public re-validation hook, used by tests.
inline void validate_group(const FiniteGroup& G) {
  FiniteGroup copy = G;
  detail::finalize(copy, true);
  require(copy.inverses == G.inverses, Err::InternalInconsistency, "inverse table mismatch");
}

// ---------------------------------------------------------------------------
// Builtin families

namespace detail {

inline FiniteGroup from_mul_fn(std::uint32_t n, const std::string& label, auto&& mulfn, bool force_assoc = false) {
  require(n >= 1 && n <= kOrderCap, Err::OrderCap, "order " + std::to_string(n));
  FiniteGroup G;
  G.order = n;
  G.label = label;
  G.cayley.resize(static_cast<std::size_t>(n) * n);
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h) G.cayley[static_cast<std::size_t>(g) * n + h] = static_cast<elt>(mulfn(g, h));
  finalize(G, force_assoc);
  return G;
}

using Perm = std::vector<std::uint8_t>;

inline Perm perm_compose(const Perm& f, const Perm& g) {
  // (f*g)(x) = f(g(x))
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

inline bool perm_is_even(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int parity = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = p[j];
      ++len;
    }
    parity ^= static_cast<int>((len - 1) & 1);
  }
  return parity == 0;
}

inline FiniteGroup from_permutation_list(std::vector<Perm> elems, const std::string& label) {
  // identity must be placed first by the caller
  std::map<Perm, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  const std::uint32_t n = static_cast<std::uint32_t>(elems.size());
  return from_mul_fn(
      n, label, [&](std::uint32_t g, std::uint32_t h) { return index.at(perm_compose(elems[g], elems[h])); });
}

}  // namespace detail

inline FiniteGroup build_cyclic(std::uint32_t n) {
  require(n >= 1, Err::ParameterOutOfRange, "cyclic requires n >= 1");
  return detail::from_mul_fn(n, "cyclic:" + std::to_string(n),
                             [n](std::uint32_t g, std::uint32_t h) { return (g + h) % n; });
}

inline FiniteGroup build_dihedral(std::uint32_t n) {
  // order 2n; index s*n + i encodes rot^i (s=0) or refl*rot^i (s=1)
  require(n >= 1, Err::ParameterOutOfRange, "dihedral requires n >= 1");
  require(2 * n <= kOrderCap, Err::OrderCap, "dihedral order " + std::to_string(2 * n));
  return detail::from_mul_fn(2 * n, "dihedral:" + std::to_string(n), [n](std::uint32_t g, std::uint32_t h) {
    std::uint32_t s1 = g / n, i1 = g % n, s2 = h / n, i2 = h % n;
    if (s2 == 0) return s1 * n + (i1 + i2) % n;
    // rot^i * refl*rot^j = refl*rot^(j-i); refl*rot^i * refl*rot^j = rot^(j-i)
    std::uint32_t i = (i2 + n - i1) % n;
    return (s1 == 0) ? n + i : i;
  });
}

inline FiniteGroup build_symmetric(std::uint32_t n) {
  require(n >= 1 && n <= 7, Err::ParameterOutOfRange, "symmetric requires 1 <= n <= 7");
  std::uint64_t fact = 1;
  for (std::uint32_t i = 2; i <= n; ++i) fact *= i;
  require(fact <= kOrderCap, Err::OrderCap, "symmetric:" + std::to_string(n) + " has order " + std::to_string(fact));
  detail::Perm p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
  std::vector<detail::Perm> elems;  // lexicographic, identity first
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return detail::from_permutation_list(std::move(elems), "symmetric:" + std::to_string(n));
}

inline FiniteGroup build_alternating(std::uint32_t n) {
  require(n >= 1 && n <= 7, Err::ParameterOutOfRange, "alternating requires 1 <= n <= 7");
  std::uint64_t fact = 1;
  for (std::uint32_t i = 2; i <= n; ++i) fact *= i;
  std::uint64_t order = (n <= 2) ? 1 : fact / 2;
  require(order <= kOrderCap, Err::OrderCap, "alternating:" + std::to_string(n) + " has order " + std::to_string(order));
  detail::Perm p(std::max<std::uint32_t>(n, 1));
  for (std::uint32_t i = 0; i < p.size(); ++i) p[i] = static_cast<std::uint8_t>(i);
  std::vector<detail::Perm> elems;
  do {
    if (detail::perm_is_even(p)) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return detail::from_permutation_list(std::move(elems), "alternating:" + std::to_string(n));
}

inline FiniteGroup build_quaternion8() {
  // 0..7 = +1,+i,+j,+k,-1,-i,-j,-k
  auto mulq = [](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    // unit quaternion multiplication on {1,i,j,k} with signs
    std::uint32_t sa = a / 4, ua = a % 4, sb = b / 4, ub = b % 4;
    static constexpr std::uint8_t base[4][4] = {
        {0, 1, 2, 3},
        {1, 4, 3, 6},  // i*1=i, i*i=-1, i*j=k, i*k=-j
        {2, 7, 4, 1},  // j*i=-k, j*j=-1, j*k=i
        {3, 2, 5, 4},  // k*i=j, k*j=-i, k*k=-1
    };
    std::uint32_t r = base[ua][ub];
    std::uint32_t sign = (sa + sb + r / 4) % 2;
    return sign * 4 + r % 4;
  };
  return detail::from_mul_fn(8, "quaternion:8", mulq);
}

inline FiniteGroup build_elementary_abelian(std::uint32_t p, std::uint32_t k) {
  require(is_prime_u64(p), Err::ParameterOutOfRange, "elemabelian requires prime p");
  require(k >= 1, Err::ParameterOutOfRange, "elemabelian requires k >= 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    order *= p;
    require(order <= kOrderCap, Err::OrderCap, "elemabelian order exceeds cap");
  }
  auto mulv = [p, k](std::uint32_t g, std::uint32_t h) {
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      r += mult * ((g % p + h % p) % p);
      g /= p;
      h /= p;
      mult *= p;
    }
    return r;
  };
  return detail::from_mul_fn(static_cast<std::uint32_t>(order),
                             "elemabelian:" + std::to_string(p) + ":" + std::to_string(k), mulv);
}

inline FiniteGroup build_builtin(const std::string& family, const std::vector<std::uint32_t>& params) {
  auto need = [&](std::size_t n) {
    require(params.size() == n, Err::ParameterOutOfRange,
            family + " expects " + std::to_string(n) + " parameter(s)");
  };
  if (family == "cyclic") {
    need(1);
    return build_cyclic(params[0]);
  }
  if (family == "dihedral") {
    need(1);
    return build_dihedral(params[0]);
  }
  if (family == "symmetric") {
    need(1);
    return build_symmetric(params[0]);
  }
  if (family == "alternating") {
    need(1);
    return build_alternating(params[0]);
  }
  if (family == "quaternion8" || family == "quaternion") {
    if (!params.empty()) require(params.size() == 1 && params[0] == 8, Err::ParameterOutOfRange, "quaternion:8 only");
    return build_quaternion8();
  }
  if (family == "elementary_abelian" || family == "elemabelian") {
    need(2);
    return build_elementary_abelian(params[0], params[1]);
  }
  fail(Err::UnknownFamily, family);
}

// ---------------------------------------------------------------------------
// Permutation generators: comma-separated products of cycles on points 1..m,
// e.g. "(1 2 3)(4 5), (2 3)".

namespace detail {

inline std::vector<std::vector<std::vector<std::uint32_t>>> parse_cycle_strings(const std::string& text) {
  std::vector<std::vector<std::vector<std::uint32_t>>> gens;  // generator -> cycles -> points
  std::vector<std::vector<std::uint32_t>> cur;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] == '(') {
      ++i;
      std::vector<std::uint32_t> cycle;
      for (;;) {
        skip_ws();
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        require(i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])), Err::ParseError,
                "expected point in cycle");
        std::uint32_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<std::uint32_t>(text[i] - '0');
          require(v <= 100000, Err::ParseError, "point too large");
          ++i;
        }
        require(v >= 1, Err::ParseError, "points are 1-based");
        cycle.push_back(v);
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          // commas inside a cycle are tolerated: "(1, 2, 3)"
          ++i;
        }
      }
      require(!cycle.empty(), Err::ParseError, "empty cycle");
      cur.push_back(std::move(cycle));
    } else if (text[i] == ',') {
      ++i;
      if (!cur.empty()) gens.push_back(std::move(cur));
      cur.clear();
    } else {
      fail(Err::ParseError, std::string("unexpected character '") + text[i] + "'");
    }
    skip_ws();
  }
  if (!cur.empty()) gens.push_back(std::move(cur));
  require(!gens.empty(), Err::ParseError, "no generators");
  return gens;
}

}  // namespace detail

inline FiniteGroup from_permutations(const std::string& text, const std::string& label = "") {
  auto cyc = detail::parse_cycle_strings(text);
  std::uint32_t m = 1;
  for (const auto& gen : cyc)
    for (const auto& c : gen)
      for (std::uint32_t v : c) m = std::max(m, v);
  require(m <= 255, Err::ParseError, "supports at most 255 points");
  std::vector<detail::Perm> gens;
  for (const auto& gen : cyc) {
    detail::Perm p(m);
    for (std::uint32_t i = 0; i < m; ++i) p[i] = static_cast<std::uint8_t>(i);
    for (const auto& c : gen) {
      // apply cycle: c[0] -> c[1] -> ... -> c[0]; cycles in one generator are
      // composed left to right
      detail::Perm q(m);
      for (std::uint32_t i = 0; i < m; ++i) q[i] = static_cast<std::uint8_t>(i);
      for (std::size_t j = 0; j < c.size(); ++j) {
        std::uint32_t from = c[j] - 1, to = c[(j + 1) % c.size()] - 1;
        require(q[from] == from || c.size() == 1, Err::ParseError, "point repeated within a cycle");
        q[from] = static_cast<std::uint8_t>(to);
      }
      p = detail::perm_compose(q, p);
    }
    gens.push_back(std::move(p));
  }
  // breadth-first closure, identity first, discovery order
  std::vector<detail::Perm> elems;
  std::map<detail::Perm, std::uint32_t> index;
  detail::Perm id(m);
  for (std::uint32_t i = 0; i < m; ++i) id[i] = static_cast<std::uint8_t>(i);
  elems.push_back(id);
  index[id] = 0;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      detail::Perm prod = detail::perm_compose(elems[head], g);
      if (index.emplace(prod, static_cast<std::uint32_t>(elems.size())).second) {
        elems.push_back(std::move(prod));
        require(elems.size() <= kOrderCap, Err::OrderCap, "permutation closure exceeds order cap");
      }
    }
  }
  return detail::from_permutation_list(std::move(elems), label.empty() ? "perm:" + text : label);
}

// ---------------------------------------------------------------------------
// Cayley file format: line 1 = order n; lines 2..n+1 = n 0-based indices.

inline FiniteGroup from_cayley_table(const std::string& text, const std::string& label = "cayley") {
  std::istringstream in(text);
  long long n_signed;
  require(static_cast<bool>(in >> n_signed), Err::ParseError, "missing order line");
  require(n_signed >= 1 && n_signed <= static_cast<long long>(kOrderCap), Err::OrderCap,
          "order must be in 1.." + std::to_string(kOrderCap));
  std::uint32_t n = static_cast<std::uint32_t>(n_signed);
  FiniteGroup G;
  G.order = n;
  G.label = label;
  G.cayley.resize(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < G.cayley.size(); ++i) {
    long long v;
    require(static_cast<bool>(in >> v), Err::ParseError, "table truncated");
    require(v >= 0 && v < n_signed, Err::ParseError, "entry out of range");
    G.cayley[i] = static_cast<elt>(v);
  }
  long long extra;
  require(!(in >> extra), Err::ParseError, "trailing data after table");
  detail::finalize(G, /*force_assoc=*/true);
  return G;
}

// ---------------------------------------------------------------------------
// Structure queries

inline std::uint32_t element_order(const FiniteGroup& G, elt g) {
  std::uint32_t k = 1;
  elt x = g;
  while (x != 0) {
    x = G.mul(x, g);
    ++k;
  }
  return k;
}

inline elt element_power(const FiniteGroup& G, elt g, std::uint64_t e) {
  elt r = 0, base = g;
  while (e) {
    if (e & 1) r = G.mul(r, base);
    base = G.mul(base, base);
    e >>= 1;
  }
  return r;
}

inline bool is_abelian(const FiniteGroup& G) {
  for (std::uint32_t g = 0; g < G.order; ++g)
    for (std::uint32_t h = g + 1; h < G.order; ++h)
      if (G.mul(static_cast<elt>(g), static_cast<elt>(h)) != G.mul(static_cast<elt>(h), static_cast<elt>(g)))
        return false;
  return true;
}

inline std::vector<ConjClass> conjugacy_classes(const FiniteGroup& G) {
  const std::uint32_t n = G.order;
  std::vector<std::int32_t> cls(n, -1);
  std::vector<ConjClass> classes;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    ConjClass c;
    // orbit of x under conjugation
    std::vector<elt> stack{static_cast<elt>(x)};
    cls[x] = static_cast<std::int32_t>(classes.size());
    while (!stack.empty()) {
      elt y = stack.back();
      stack.pop_back();
      c.members.push_back(y);
      for (std::uint32_t g = 0; g < n; ++g) {
        elt z = G.mul(G.mul(static_cast<elt>(g), y), G.inv(static_cast<elt>(g)));
        if (cls[z] < 0) {
          cls[z] = cls[x];
          stack.push_back(z);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members.front() < b.members.front();
  });
  return classes;
}

inline PSplit p_split(const FiniteGroup& G, std::uint64_t p) {
  PSplit s;
  s.p = p;
  s.d = G.order;
  while (s.d % p == 0) {
    s.d /= p;
    ++s.r;
  }
  return s;
}

// g = g_p * g_p' with commuting p-power / p'-order parts, both powers of g.
inline std::pair<elt, elt> p_prime_decomposition(const FiniteGroup& G, elt g, std::uint64_t p) {
  require(is_prime_u64(p), Err::ParameterOutOfRange, "p must be prime");
  std::uint64_t ord = element_order(G, g);
  std::uint64_t pa = 1, m = ord;
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  if (pa == 1) return {0, g};
  if (m == 1) return {g, 0};
  // CRT exponents: u = 0 mod m, 1 mod pa; v = 1 mod m, 0 mod pa
  std::uint64_t u = m * modinv_u64(m % pa, pa);
  std::uint64_t v = pa * modinv_u64(pa % m, m);
  return {element_power(G, g, u), element_power(G, g, v)};
}

inline std::vector<elt> p_regular_set(const FiniteGroup& G, std::uint64_t p) {
  require(is_prime_u64(p), Err::ParameterOutOfRange, "p must be prime");
  std::vector<elt> out;
  for (std::uint32_t g = 0; g < G.order; ++g)
    if (element_order(G, static_cast<elt>(g)) % p != 0) out.push_back(static_cast<elt>(g));
  return out;
}

inline std::uint32_t count_p_regular_classes(const FiniteGroup& G, std::uint64_t p) {
  std::uint32_t s = 0;
  for (const auto& c : conjugacy_classes(G))
    if (element_order(G, c.representative) % p != 0) ++s;
  return s;
}

// The set of p-elements is the unique Sylow p-subgroup exactly when it has
// Sylow order and is closed under multiplication.
inline std::optional<Subgroup> normal_sylow_p(const FiniteGroup& G, std::uint64_t p) {
  require(is_prime_u64(p), Err::ParameterOutOfRange, "p must be prime");
  PSplit sp = p_split(G, p);
  std::uint64_t sylow_order = G.order / sp.d;
  std::vector<elt> pelts;
  for (std::uint32_t g = 0; g < G.order; ++g) {
    std::uint64_t ord = element_order(G, static_cast<elt>(g));
    while (ord % p == 0) ord /= p;
    if (ord == 1) pelts.push_back(static_cast<elt>(g));
  }
  if (pelts.size() != sylow_order) return std::nullopt;
  std::vector<char> in_set(G.order, 0);
  for (elt g : pelts) in_set[g] = 1;
  for (elt g : pelts)
    for (elt h : pelts)
      if (!in_set[G.mul(g, h)]) return std::nullopt;
  return Subgroup{std::move(pelts)};
}

inline bool subgroup_contains(const Subgroup& S, elt g) {
  return std::binary_search(S.members.begin(), S.members.end(), g);
}

inline bool is_subgroup(const FiniteGroup& G, const Subgroup& S) {
  if (S.members.empty() || S.members.front() != 0) return false;
  for (elt a : S.members) {
    if (!subgroup_contains(S, G.inv(a))) return false;
    for (elt b : S.members)
      if (!subgroup_contains(S, G.mul(a, b))) return false;
  }
  return true;
}

inline bool is_normal(const FiniteGroup& G, const Subgroup& S) {
  for (std::uint32_t g = 0; g < G.order; ++g)
    for (elt s : S.members)
      if (!subgroup_contains(S, G.mul(G.mul(static_cast<elt>(g), s), G.inv(static_cast<elt>(g))))) return false;
  return true;
}

inline Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<elt>& gens) {
  std::vector<char> in_set(G.order, 0);
  std::vector<elt> members{0};
  in_set[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (elt g : gens) {
      elt x = G.mul(members[head], g);
      if (!in_set[x]) {
        in_set[x] = 1;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

inline Subgroup center_subgroup(const FiniteGroup& G) {
  std::vector<elt> members;
  for (std::uint32_t z = 0; z < G.order; ++z) {
    bool central = true;
    for (std::uint32_t g = 0; g < G.order && central; ++g)
      central = G.mul(static_cast<elt>(z), static_cast<elt>(g)) == G.mul(static_cast<elt>(g), static_cast<elt>(z));
    if (central) members.push_back(static_cast<elt>(z));
  }
  return Subgroup{std::move(members)};
}

// Quotient by a normal subgroup. Cosets are ordered by smallest member, so
// the identity coset is element 0 and output is deterministic.
inline QuotientResult quotient(const FiniteGroup& G, const Subgroup& N) {
  require(is_subgroup(G, N), Err::NotNormal, "not a subgroup");
  require(is_normal(G, N), Err::NotNormal, "subgroup is not normal");
  const std::uint32_t n = G.order;
  std::vector<std::int32_t> coset_of(n, -1);
  std::vector<elt> reps;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (coset_of[g] >= 0) continue;
    std::int32_t id = static_cast<std::int32_t>(reps.size());
    reps.push_back(static_cast<elt>(g));  // g is the smallest member of its coset
    for (elt h : N.members) coset_of[G.mul(static_cast<elt>(g), h)] = id;
  }
  const std::uint32_t q = static_cast<std::uint32_t>(reps.size());
  require(q * N.order() == n, Err::InternalInconsistency, "coset count mismatch");
  QuotientResult out;
  out.coset_rep = reps;
  out.group = detail::from_mul_fn(q, G.label + "/N" + std::to_string(N.order()), [&](std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(coset_of[G.mul(reps[a], reps[b])]);
  });
  out.hom.image.resize(n);
  for (std::uint32_t g = 0; g < n; ++g) out.hom.image[g] = static_cast<elt>(coset_of[g]);
  return out;
}

inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  std::uint64_t order = static_cast<std::uint64_t>(A.order) * B.order;
  require(order <= kOrderCap, Err::OrderCap, "product order " + std::to_string(order));
  std::uint32_t nb = B.order;
  return detail::from_mul_fn(static_cast<std::uint32_t>(order), "product(" + A.label + "," + B.label + ")",
                             [&](std::uint32_t g, std::uint32_t h) {
                               std::uint32_t ga = g / nb, gb = g % nb, ha = h / nb, hb = h % nb;
                               return static_cast<std::uint32_t>(A.mul(static_cast<elt>(ga), static_cast<elt>(ha))) * nb +
                                      B.mul(static_cast<elt>(gb), static_cast<elt>(hb));
                             });
}

}  // namespace msalg
