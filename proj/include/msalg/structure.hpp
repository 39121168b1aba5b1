// Algebra decomposition: primitive idempotents of commutative subalgebras,
// Wedderburn component degrees of semisimple group algebras, and block
// idempotents of Z(KG) with traces, dimensions and full-defect flags.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <vector>

#include "msalg/algebra.hpp"
#include "msalg/common.hpp"

namespace msalg {

// Plain summary that survives without element data (JSON, verdicts).
struct BlockSummary {
  std::vector<std::uint32_t> traces;  // prime-field residues
  std::vector<std::uint64_t> dims;
  std::vector<std::uint8_t> full_defect;

  std::size_t count() const { return traces.size(); }
};

template <class Code>
struct WedderburnData {
  std::vector<std::uint32_t> degrees;              // sorted ascending
  std::vector<std::uint64_t> component_dims;       // degrees[i]^2, aligned
  std::vector<AlgElem<Code>> central_idempotents;  // aligned with degrees
};

template <class Code>
struct BlockData {
  std::vector<AlgElem<Code>> idempotents;
  BlockSummary summary;
};

namespace detail {

template <class Code>
inline bool elem_lex_before(const AlgElem<Code>& a, const AlgElem<Code>& b) {
  return a.c < b.c;
}

// Distinct irreducible factors, with a flag for "all factors linear".
template <class Code>
struct MinPolyShape {
  std::vector<PolyFactor<Code>> factors;
  bool splits_f() const { return factors.size() >= 2; }
  bool linear_only() const {
    for (const auto& f : factors)
      if (f.factor.deg() != 1) return false;
    return true;
  }
};

// Split f along the coprime decomposition of the minimal polynomial of
// w = f*z: evaluate the standard interpolants h_i (h_i = 1 mod q_i^{m_i},
// 0 mod the rest) at w. The images are nonzero orthogonal idempotents
// summing to f.
template <class Code>
inline std::vector<AlgElem<Code>> split_by_interpolants(const AlgElem<Code>& f, const AlgElem<Code>& w,
                                                        const Poly<Code>& m,
                                                        const std::vector<PolyFactor<Code>>& factors) {
  const auto& F = *f.alg.field;
  std::vector<AlgElem<Code>> parts;
  for (const auto& fac : factors) {
    Poly<Code> prime_power = poly_const(F, F.one());
    for (std::uint32_t i = 0; i < fac.multiplicity; ++i) prime_power = poly_mul(prime_power, fac.factor);
    Poly<Code> rest = poly_div_exact(m, prime_power);
    Poly<Code> h = poly_mod(poly_mul(rest, poly_invmod(rest, prime_power)), m);
    parts.push_back(eval_poly_at(h, w, f));
  }
  // structural sanity on every split
  AlgElem<Code> total = alg_zero(f.alg);
  for (const auto& e : parts) {
    require(!e.is_zero(), Err::InternalInconsistency, "interpolant image collapsed");
    require(is_idempotent(e), Err::InternalInconsistency, "interpolant image is not idempotent");
    total = add(total, e);
  }
  require(total == f, Err::InternalInconsistency, "split does not resum to the parent idempotent");
  return parts;
}

}  // namespace detail

// Pairwise orthogonal primitive idempotents of the unital commutative
// subalgebra spanned by `basis`, summing to 1.
//
// Worklist splitting: for each candidate idempotent f and basis element z,
// the minimal polynomial of f*z inside fZ either is a prime power (no
// information) or factors and splits f. A candidate whose generators all
// have prime powers of *linear* polynomials as minimal polynomials generates
// f*K plus nilpotents, hence is primitive and the scan can stop early;
// otherwise products of basis pairs are tried before declaring primitivity.
template <class Code>
inline std::vector<AlgElem<Code>> primitive_idempotents_commutative(const std::vector<AlgElem<Code>>& basis, Rng& rng,
                                                                    bool validate = true) {
  require(!basis.empty(), Err::ParameterOutOfRange, "empty basis");
  const GroupAlgebra<Code>& A = basis.front().alg;
  const auto& F = *A.field;
  if (validate) {
    for (const auto& z : basis)
      require(z.alg.same_as(A), Err::AlgebraMismatch, "basis spans several algebras");
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        require(multiply(basis[i], basis[j]) == multiply(basis[j], basis[i]), Err::NotCommutative,
                "basis elements do not commute");
    SpanBuilder<Code> span(F, A.dim());
    for (const auto& z : basis) span.offer(z.c);
    require(span.contains(alg_one(A).c), Err::NotClosed, "span does not contain the unit");
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j)
        require(span.contains(multiply(basis[i], basis[j]).c), Err::NotClosed,
                "span is not closed under multiplication");
  }

  std::vector<AlgElem<Code>> primitive;
  std::deque<AlgElem<Code>> worklist;
  worklist.push_back(alg_one(A));
  while (!worklist.empty()) {
    AlgElem<Code> f = std::move(worklist.front());
    worklist.pop_front();
    bool split = false;
    bool linear_certificate = true;
    auto try_candidate = [&](const AlgElem<Code>& z) -> bool {
      AlgElem<Code> w = multiply(f, z);
      Poly<Code> m = min_poly_with_unit(w, f);
      auto factors = poly_factor(m, rng);
      detail::MinPolyShape<Code> shape{factors};
      if (!shape.linear_only()) linear_certificate = false;
      if (!shape.splits_f()) return false;
      for (auto& part : detail::split_by_interpolants(f, w, m, factors)) worklist.push_back(std::move(part));
      return true;
    };
    for (const auto& z : basis) {
      if (try_candidate(z)) {
        split = true;
        break;
      }
    }
    if (!split && !linear_certificate) {
      for (std::size_t i = 0; i < basis.size() && !split; ++i)
        for (std::size_t j = i; j < basis.size() && !split; ++j) split = try_candidate(multiply(basis[i], basis[j]));
    }
    if (!split) primitive.push_back(std::move(f));
  }
  std::sort(primitive.begin(), primitive.end(), detail::elem_lex_before<Code>);
  return primitive;
}

template <class Code>
inline std::vector<AlgElem<Code>> primitive_idempotents_commutative(const std::vector<AlgElem<Code>>& basis,
                                                                    bool validate = true) {
  Rng rng(global_seed(), fnv1a("primitive-idempotents"));
  return primitive_idempotents_commutative(basis, rng, validate);
}

namespace detail {

template <class Code>
inline void assert_orthogonal_partition(const std::vector<AlgElem<Code>>& idems, const GroupAlgebra<Code>& A) {
  AlgElem<Code> total = alg_zero(A);
  for (std::size_t i = 0; i < idems.size(); ++i) {
    require(is_idempotent(idems[i]), Err::InternalInconsistency, "non-idempotent component");
    require(is_central(idems[i]), Err::InternalInconsistency, "component idempotent is not central");
    total = add(total, idems[i]);
    for (std::size_t j = i + 1; j < idems.size(); ++j)
      require(multiply(idems[i], idems[j]).is_zero(), Err::InternalInconsistency, "components are not orthogonal");
  }
  require(total == alg_one(A), Err::InternalInconsistency, "components do not sum to 1");
}

inline std::uint64_t exact_isqrt(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// residue of the p-integral rational num/den modulo p (den's p-part must not
// exceed num's)
inline std::uint32_t p_integral_residue(std::uint64_t num, std::uint64_t den, std::uint64_t p) {
  std::uint32_t vn = valuation_u64(num, p), vd = valuation_u64(den, p);
  require(vn >= vd, Err::InternalInconsistency, "rational is not p-integral");
  for (std::uint32_t i = 0; i < vd; ++i) {
    num /= p;
    den /= p;
  }
  if (vn > vd) return 0;
  return static_cast<std::uint32_t>(mulmod_u64(num % p, modinv_u64(den % p, p), p));
}

}  // namespace detail

// Wedderburn degrees of a semisimple group algebra over a splitting field:
// decompose the center, then read each component's dimension as a perfect
// square. Component order: ascending degree, ties by idempotent coefficients.
template <class Code>
inline WedderburnData<Code> wedderburn_degrees(const GroupAlgebra<Code>& A, Rng& rng) {
  const auto& F = *A.field;
  require(A.group->order % F.p() != 0, Err::NotSemisimple, "characteristic divides the group order");
  auto prims = primitive_idempotents_commutative(class_sums(A), rng, /*validate=*/false);
  detail::assert_orthogonal_partition(prims, A);
  require(prims.size() == A.classes->size(), Err::NotSplit,
          "component count differs from the p-regular class count");

  struct Comp {
    std::uint32_t degree;
    std::uint64_t dim;
    AlgElem<Code> idem;
  };
  std::vector<Comp> comps;
  auto sums = class_sums(A);
  std::uint64_t total = 0;
  for (auto& f : prims) {
    std::uint64_t dim = translate_span_dim(f);
    std::uint64_t deg = detail::exact_isqrt(dim);
    require(deg * deg == dim, Err::NotSplit, "component dimension is not a perfect square");
    SpanBuilder<Code> central_part(F, A.dim());
    for (const auto& z : sums) central_part.offer(multiply(f, z).c);
    require(central_part.rank() == 1, Err::NotSplit, "component has a center larger than the base field");
    total += dim;
    comps.push_back({static_cast<std::uint32_t>(deg), dim, std::move(f)});
  }
  require(total == A.group->order, Err::InternalInconsistency, "component dimensions do not sum to |G|");
  std::sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return detail::elem_lex_before(a.idem, b.idem);
  });
  WedderburnData<Code> out;
  for (auto& c : comps) {
    out.degrees.push_back(c.degree);
    out.component_dims.push_back(c.dim);
    out.central_idempotents.push_back(std::move(c.idem));
  }
  return out;
}

template <class Code>
inline WedderburnData<Code> wedderburn_degrees(const GroupAlgebra<Code>& A) {
  Rng rng(global_seed(), fnv1a("wedderburn"));
  return wedderburn_degrees(A, rng);
}

// Block decomposition of KG in any characteristic: primitive idempotents of
// the center, their traces (prime-field residues by Zalesskii's theorem),
// block dimensions, and the full-defect flag (trace nonzero). Every block is
// checked against the rational form tr f_i = d_i / |G| (mod p).
template <class Code>
inline BlockData<Code> block_idempotents(const GroupAlgebra<Code>& A, Rng& rng) {
  const auto& F = *A.field;
  auto prims = primitive_idempotents_commutative(class_sums(A), rng, /*validate=*/false);
  detail::assert_orthogonal_partition(prims, A);
  std::sort(prims.begin(), prims.end(), detail::elem_lex_before<Code>);

  BlockData<Code> out;
  std::uint64_t dim_total = 0;
  for (auto& f : prims) {
    Code t = trace(f);
    require(F.in_prime_field(t), Err::InternalInconsistency, "block trace leaves the prime field");
    std::uint32_t residue = static_cast<std::uint32_t>(t);
    std::uint64_t dim = translate_span_dim(f);
    dim_total += dim;
    // bridge to the rational formulation: tr f_i = d_i / |G| in K
    std::uint32_t expected = detail::p_integral_residue(dim, A.group->order, F.p());
    require(expected == residue, Err::InternalInconsistency, "block trace disagrees with d_i/|G| mod p");
    out.summary.traces.push_back(residue);
    out.summary.dims.push_back(dim);
    out.summary.full_defect.push_back(residue != 0 ? 1 : 0);
    out.idempotents.push_back(std::move(f));
  }
  require(dim_total == A.group->order, Err::InternalInconsistency, "block dimensions do not sum to |G|");
  return out;
}

template <class Code>
inline BlockData<Code> block_idempotents(const GroupAlgebra<Code>& A) {
  Rng rng(global_seed(), fnv1a("blocks"));
  return block_idempotents(A, rng);
}

}  // namespace msalg
