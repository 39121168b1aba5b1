// The group algebra KG: dense coefficient vectors over the group-element
// basis, convolution products, traces, the center, the commutator subspace,
// minimal polynomials, and the two idempotent-lifting constructions.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "msalg/common.hpp"
#include "msalg/fq.hpp"
#include "msalg/groups.hpp"
#include "msalg/linalg.hpp"
#include "msalg/poly.hpp"

namespace msalg {

template <class Code>
struct GroupAlgebra {
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const FqField<Code>> field;
  std::shared_ptr<const std::vector<ConjClass>> classes;  // cached partition

  std::uint32_t dim() const { return group->order; }
  bool same_as(const GroupAlgebra& o) const {
    return group.get() == o.group.get() && field.get() == o.field.get();
  }
};

template <class Code>
inline GroupAlgebra<Code> make_algebra(std::shared_ptr<const FiniteGroup> G, std::shared_ptr<const FqField<Code>> F) {
  auto classes = std::make_shared<const std::vector<ConjClass>>(conjugacy_classes(*G));
  return {std::move(G), std::move(F), std::move(classes)};
}

template <class Code>
inline GroupAlgebra<Code> make_algebra(FiniteGroup G, FqField<Code> F) {
  return make_algebra(std::make_shared<const FiniteGroup>(std::move(G)),
                      std::make_shared<const FqField<Code>>(std::move(F)));
}

template <class Code>
inline FqField<Code> splitting_field_for(const FiniteGroup& G, std::uint64_t p) {
  return splitting_field_for_order<Code>(G.order, p);
}

template <class Code>
struct AlgElem {
  GroupAlgebra<Code> alg;
  std::vector<Code> c;  // indexed by group element, c[0] = trace

  const FqField<Code>& F() const { return *alg.field; }
  const FiniteGroup& G() const { return *alg.group; }
  bool is_zero() const {
    for (Code x : c)
      if (x != 0) return false;
    return true;
  }
  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.c == b.c; }
};

template <class Code>
inline AlgElem<Code> alg_zero(const GroupAlgebra<Code>& A) {
  return {A, std::vector<Code>(A.dim(), 0)};
}

template <class Code>
inline AlgElem<Code> alg_one(const GroupAlgebra<Code>& A) {
  AlgElem<Code> e = alg_zero(A);
  e.c[0] = 1;
  return e;
}

// the basis element g as an algebra element
template <class Code>
inline AlgElem<Code> alg_basis(const GroupAlgebra<Code>& A, elt g) {
  AlgElem<Code> e = alg_zero(A);
  e.c[g] = 1;
  return e;
}

template <class Code>
inline AlgElem<Code> alg_scalar(const GroupAlgebra<Code>& A, Code v) {
  AlgElem<Code> e = alg_zero(A);
  e.c[0] = v;
  return e;
}

template <class Code>
inline AlgElem<Code> add(const AlgElem<Code>& a, const AlgElem<Code>& b) {
  require(a.alg.same_as(b.alg), Err::AlgebraMismatch, "operands live in different algebras");
  AlgElem<Code> r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.F().add(r.c[i], b.c[i]);
  return r;
}

template <class Code>
inline AlgElem<Code> sub(const AlgElem<Code>& a, const AlgElem<Code>& b) {
  require(a.alg.same_as(b.alg), Err::AlgebraMismatch, "operands live in different algebras");
  AlgElem<Code> r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.F().sub(r.c[i], b.c[i]);
  return r;
}

template <class Code>
inline AlgElem<Code> scale(const AlgElem<Code>& a, Code s) {
  AlgElem<Code> r = a;
  for (auto& x : r.c) x = a.F().mul(x, s);
  return r;
}

// convolution: (ab)[k] = sum over g*h = k of a[g] b[h]
template <class Code>
inline AlgElem<Code> multiply(const AlgElem<Code>& a, const AlgElem<Code>& b) {
  require(a.alg.same_as(b.alg), Err::AlgebraMismatch, "operands live in different algebras");
  const auto& F = a.F();
  const auto& G = a.G();
  AlgElem<Code> r = alg_zero(a.alg);
  for (std::uint32_t g = 0; g < G.order; ++g) {
    if (a.c[g] == 0) continue;
    const elt* row = &G.cayley[static_cast<std::size_t>(g) * G.order];
    for (std::uint32_t h = 0; h < G.order; ++h) {
      if (b.c[h] == 0) continue;
      elt k = row[h];
      r.c[k] = F.add(r.c[k], F.mul(a.c[g], b.c[h]));
    }
  }
  return r;
}

template <class Code>
inline Code trace(const AlgElem<Code>& a) {
  return a.c[0];
}

template <class Code>
inline bool is_idempotent(const AlgElem<Code>& a) {
  return multiply(a, a) == a;
}

// one element per conjugacy class, coefficient 1 on the class; these span the
// center
template <class Code>
inline std::vector<AlgElem<Code>> class_sums(const GroupAlgebra<Code>& A) {
  std::vector<AlgElem<Code>> out;
  for (const auto& cls : *A.classes) {
    AlgElem<Code> e = alg_zero(A);
    for (elt m : cls.members) e.c[m] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

// central iff coefficients are constant on conjugacy classes
template <class Code>
inline bool is_central(const AlgElem<Code>& a) {
  for (const auto& cls : *a.alg.classes) {
    Code v = a.c[cls.members.front()];
    for (elt m : cls.members)
      if (a.c[m] != v) return false;
  }
  return true;
}

// membership in [KG, KG]: the coefficient sum over every conjugacy class
// vanishes
template <class Code>
inline bool commutator_contains(const AlgElem<Code>& a) {
  const auto& F = a.F();
  for (const auto& cls : *a.alg.classes) {
    Code s = 0;
    for (elt m : cls.members) s = F.add(s, a.c[m]);
    if (s != 0) return false;
  }
  return true;
}

// Minimal polynomial of a: the first Krylov relation of 1, a, a^2, ... The
// regular representation is faithful, so this agrees with the minimal
// polynomial of the left-multiplication matrix.
template <class Code>
inline Poly<Code> element_min_poly(const AlgElem<Code>& a) {
  const auto& F = a.F();
  RelationFinder<Code> rf(F, a.c.size());
  AlgElem<Code> power = alg_one(a.alg);
  std::optional<std::vector<Code>> rel;
  while (!(rel = rf.offer(power.c))) power = multiply(power, a);
  return poly_from(F, std::move(*rel));
}

template <class Code>
inline MatFq<Code> left_regular_matrix(const AlgElem<Code>& a) {
  const auto& G = a.G();
  MatFq<Code> m = MatFq<Code>::zero(a.F(), G.order, G.order);
  for (std::uint32_t g = 0; g < G.order; ++g) {
    if (a.c[g] == 0) continue;
    for (std::uint32_t h = 0; h < G.order; ++h) m.at(G.mul(static_cast<elt>(g), static_cast<elt>(h)), h) = a.c[g];
  }
  return m;
}

// Idempotent lift along a nilpotent defect: in characteristic p,
// (a^p)^2 - a^p = (a^2 - a)^p inside the commutative subalgebra K[a], so
// repeated p-th powers converge once p^m reaches the nilpotency index.
template <class Code>
inline AlgElem<Code> nilpotent_lift(const AlgElem<Code>& a) {
  const auto& F = a.F();
  const std::uint32_t n = a.G().order;
  AlgElem<Code> defect = sub(multiply(a, a), a);
  AlgElem<Code> probe = defect;
  std::uint64_t pow2 = 1;
  while (!probe.is_zero() && pow2 < 2ULL * n) {
    probe = multiply(probe, probe);
    pow2 *= 2;
  }
  require(probe.is_zero(), Err::NotAlmostIdempotent, "a^2 - a is not nilpotent");
  AlgElem<Code> r = a;
  std::uint64_t reached = 1;
  while (reached < n) {
    AlgElem<Code> next = alg_one(a.alg);
    // r^p by square-and-multiply
    std::uint64_t e = F.p();
    AlgElem<Code> base = r;
    while (e) {
      if (e & 1) next = multiply(next, base);
      e >>= 1;
      if (e) base = multiply(base, base);
    }
    r = std::move(next);
    reached *= F.p();
  }
  require(is_idempotent(r), Err::InternalInconsistency, "lift failed to reach an idempotent");
  return r;
}

// ---------------------------------------------------------------------------
// Quotient algebra map K[G] -> K[G/N]

template <class Code>
struct AlgebraQuotient {
  GroupAlgebra<Code> source;
  GroupAlgebra<Code> target;  // K[G/N], same field
  GroupHom hom;
  std::vector<elt> coset_rep;
  Subgroup kernel_subgroup;

  // coefficient of a coset = sum of coefficients over that coset
  AlgElem<Code> apply(const AlgElem<Code>& a) const {
    require(a.alg.same_as(source), Err::AlgebraMismatch, "element is not in the source algebra");
    AlgElem<Code> out = alg_zero(target);
    const auto& F = *source.field;
    for (std::size_t g = 0; g < a.c.size(); ++g) {
      if (a.c[g] != 0) out.c[hom.image[g]] = F.add(out.c[hom.image[g]], a.c[g]);
    }
    return out;
  }
};

template <class Code>
inline AlgebraQuotient<Code> quotient_hom(const GroupAlgebra<Code>& A, const Subgroup& N) {
  QuotientResult q = quotient(*A.group, N);
  AlgebraQuotient<Code> out;
  out.source = A;
  out.target = make_algebra<Code>(std::make_shared<const FiniteGroup>(std::move(q.group)), A.field);
  out.hom = std::move(q.hom);
  out.coset_rep = std::move(q.coset_rep);
  out.kernel_subgroup = N;
  return out;
}

// averaging idempotent E_H = |H|^-1 sum_{h in H} h; requires p coprime to |H|
template <class Code>
inline AlgElem<Code> averaging_idempotent(const GroupAlgebra<Code>& A, const Subgroup& H) {
  const auto& F = *A.field;
  require(H.order() % F.p() != 0, Err::CharDividesH, "characteristic divides |H|");
  Code inv_h = F.inv(F.from_u64(H.order()));
  AlgElem<Code> e = alg_zero(A);
  for (elt h : H.members) e.c[h] = inv_h;
  return e;
}

// Lift an idempotent e of K[G/H] (H normal, p coprime to |H|) to an
// idempotent u = E_H * (sum_i c_i g_i) of KG with rho(u) = e and
// tr u = |H|^-1 tr e. All three postconditions are asserted.
template <class Code>
inline AlgElem<Code> p_prime_quotient_lift(const AlgebraQuotient<Code>& q, const AlgElem<Code>& e) {
  require(e.alg.same_as(q.target), Err::AlgebraMismatch, "idempotent is not in the quotient algebra");
  const auto& F = *q.source.field;
  require(q.kernel_subgroup.order() % F.p() != 0, Err::CharDividesH, "characteristic divides |H|");
  require(is_idempotent(e), Err::NotIdempotent, "input is not idempotent");
  AlgElem<Code> big_e = averaging_idempotent(q.source, q.kernel_subgroup);
  AlgElem<Code> v = alg_zero(q.source);
  for (std::size_t j = 0; j < e.c.size(); ++j) v.c[q.coset_rep[j]] = e.c[j];
  AlgElem<Code> u = multiply(big_e, v);
  require(is_idempotent(u), Err::InternalInconsistency, "lift is not idempotent");
  require(q.apply(u) == e, Err::InternalInconsistency, "lift does not project back");
  Code expected = F.mul(F.inv(F.from_u64(q.kernel_subgroup.order())), trace(e));
  require(trace(u) == expected, Err::InternalInconsistency, "trace relation violated");
  return u;
}

// ---------------------------------------------------------------------------
// Support helpers shared by structure/oracle code

// dimension of span{f*g : g in G} (the two-sided ideal of a central
// idempotent); columns are right translates of f
template <class Code>
inline std::size_t translate_span_dim(const AlgElem<Code>& f) {
  const auto& G = f.G();
  SpanBuilder<Code> span(f.F(), G.order);
  std::size_t dim = 0;
  for (std::uint32_t g = 0; g < G.order; ++g) {
    std::vector<Code> v(G.order);
    for (std::uint32_t x = 0; x < G.order; ++x) v[G.mul(static_cast<elt>(x), static_cast<elt>(g))] = f.c[x];
    if (span.offer(std::move(v))) ++dim;
  }
  return dim;
}

// Minimal polynomial of w inside a unital commutative subalgebra whose unit
// is `unit` (w = unit * w assumed): first relation among unit, w, w^2, ...
// The proportional case w = c * unit short-circuits to x - c.
template <class Code>
inline Poly<Code> min_poly_with_unit(const AlgElem<Code>& w, const AlgElem<Code>& unit) {
  const auto& F = w.F();
  std::size_t pivot = 0;
  while (pivot < unit.c.size() && unit.c[pivot] == 0) ++pivot;
  if (pivot < unit.c.size()) {
    Code ratio = F.div(w.c[pivot], unit.c[pivot]);
    bool proportional = true;
    for (std::size_t i = 0; i < w.c.size() && proportional; ++i)
      proportional = (w.c[i] == F.mul(ratio, unit.c[i]));
    if (proportional) return poly_from(F, {F.neg(ratio), F.one()});
  }
  RelationFinder<Code> rf(F, w.c.size());
  AlgElem<Code> power = unit;
  std::optional<std::vector<Code>> rel;
  while (!(rel = rf.offer(power.c))) power = multiply(power, w);
  return poly_from(F, std::move(*rel));
}

// evaluate h at w with x^0 = unit
template <class Code>
inline AlgElem<Code> eval_poly_at(const Poly<Code>& h, const AlgElem<Code>& w, const AlgElem<Code>& unit) {
  AlgElem<Code> acc = alg_zero(w.alg);
  for (std::size_t i = h.c.size(); i-- > 0;) {
    acc = multiply(acc, w);
    if (h.c[i] != 0) acc = add(acc, scale(unit, h.c[i]));
  }
  return acc;
}

}  // namespace msalg
