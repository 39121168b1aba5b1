// Decision procedures for the Mathieu-subspace property of the trace-zero
// subspace V_G and its central part V_G n Z(KG): the bounded zero-sum
// condition on irreducible degrees, the subset-sum conditions on block
// traces and block dimensions, and the implication cross-checks between
// them.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msalg/algebra.hpp"
#include "msalg/common.hpp"
#include "msalg/structure.hpp"

namespace msalg {

enum class Subject { VG, VG_CENTRAL };

enum class Reason {
  CHAR_ZERO_OR_LARGE_P,
  ZERO_SUM_HOLDS,
  ZERO_SUM_FAILS,
  NO_NORMAL_SYLOW,
  SUBSET_SUM_OK,
  SUBSET_SUM_ZERO,
  P_GROUP_LOCAL,
};

inline const char* subject_name(Subject s) { return s == Subject::VG ? "vg" : "central"; }

inline const char* reason_name(Reason r) {
  switch (r) {
    case Reason::CHAR_ZERO_OR_LARGE_P: return "CHAR_ZERO_OR_LARGE_P";
    case Reason::ZERO_SUM_HOLDS: return "ZERO_SUM_HOLDS";
    case Reason::ZERO_SUM_FAILS: return "ZERO_SUM_FAILS";
    case Reason::NO_NORMAL_SYLOW: return "NO_NORMAL_SYLOW";
    case Reason::SUBSET_SUM_OK: return "SUBSET_SUM_OK";
    case Reason::SUBSET_SUM_ZERO: return "SUBSET_SUM_ZERO";
    case Reason::P_GROUP_LOCAL: return "P_GROUP_LOCAL";
  }
  return "?";
}

struct ZeroSumWitness {
  std::vector<std::uint32_t> coefficients;  // 0 <= c_i <= n_i, not all zero
};

struct SylowWitness {
  std::uint64_t p_element_count = 0;
  std::uint64_t sylow_order = 0;
};

struct MsVerdict {
  Subject subject = Subject::VG;
  std::string group_label;
  std::uint64_t group_order = 0;
  std::uint64_t p = 0;  // 0 marks characteristic zero
  std::optional<std::pair<std::uint64_t, std::uint32_t>> field_pk;
  bool is_ms = false;
  Reason reason = Reason::CHAR_ZERO_OR_LARGE_P;
  std::optional<ZeroSumWitness> zero_sum_witness;
  std::optional<std::vector<std::uint32_t>> subset_witness;  // 0-based block indices
  std::optional<SylowWitness> sylow_witness;
  std::optional<std::vector<std::uint32_t>> degrees;
  bool degrees_on_quotient = false;
  std::uint64_t quotient_order = 0;
  std::optional<BlockSummary> blocks;
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Reachability DP shared by the zero-sum and subset-sum conditions: decide
// whether some not-all-zero tuple 0 <= c_i <= bounds[i] has
// sum c_i * weights[i] = 0 (mod p), reconstructing one such tuple.

struct BoundedZeroSum {
  bool holds = true;                                   // no such tuple exists
  std::optional<std::vector<std::uint32_t>> witness;   // tuple when holds is false
};

inline BoundedZeroSum bounded_zero_sum_dp(const std::vector<std::uint64_t>& weights,
                                          const std::vector<std::uint32_t>& bounds, std::uint64_t p) {
  require(p >= 2, Err::ParameterOutOfRange, "modulus must be at least 2");
  require(weights.size() == bounds.size(), Err::ParameterOutOfRange, "weights/bounds length mismatch");
  const std::size_t s = weights.size();
  const std::size_t states = 2 * p;  // residue + "some c_i > 0" flag
  auto state_of = [&](std::uint64_t r, bool flag) { return (flag ? p : 0) + r; };
  std::vector<std::vector<std::int32_t>> choice(s + 1);
  std::vector<std::vector<std::int32_t>> parent(s + 1);
  std::vector<char> reach(states, 0), next(states, 0);
  reach[state_of(0, false)] = 1;
  for (std::size_t i = 0; i < s; ++i) {
    choice[i + 1].assign(states, -1);
    parent[i + 1].assign(states, -1);
    std::fill(next.begin(), next.end(), 0);
    std::uint64_t w = weights[i] % p;
    for (std::size_t st = 0; st < states; ++st) {
      if (!reach[st]) continue;
      std::uint64_t r = st % p;
      bool flag = st >= p;
      for (std::uint32_t c = 0; c <= bounds[i]; ++c) {
        std::uint64_t nr = (r + c * w) % p;
        std::size_t nst = state_of(nr, flag || c > 0);
        if (!next[nst]) {
          next[nst] = 1;
          choice[i + 1][nst] = static_cast<std::int32_t>(c);
          parent[i + 1][nst] = static_cast<std::int32_t>(st);
        }
      }
    }
    reach.swap(next);
  }
  std::size_t target = state_of(0, true);
  if (!reach[target]) return {true, std::nullopt};
  std::vector<std::uint32_t> tuple(s, 0);
  std::size_t st = target;
  for (std::size_t i = s; i-- > 0;) {
    tuple[i] = static_cast<std::uint32_t>(choice[i + 1][st]);
    st = static_cast<std::size_t>(parent[i + 1][st]);
  }
  return {false, std::move(tuple)};
}

// Condition (*): no not-all-zero tuple 0 <= c_i <= n_i has
// sum c_i n_i = 0 (mod p). Equivalently, the multiset of n_i copies of n_i
// (mod p) is a zero-sum-free sequence over Z_p.
inline BoundedZeroSum zero_sum_condition(const std::vector<std::uint32_t>& degrees, std::uint64_t p) {
  require(!degrees.empty(), Err::ParameterOutOfRange, "degree list is empty");
  for (std::uint32_t n : degrees) require(n >= 1, Err::ParameterOutOfRange, "degrees must be positive");
  std::vector<std::uint64_t> w(degrees.begin(), degrees.end());
  return bounded_zero_sum_dp(w, degrees, p);
}

// Every nonempty subset of the residues must have nonzero sum mod p.
struct SubsetCheck {
  bool holds = true;
  std::optional<std::vector<std::uint32_t>> witness;  // indices of a zero-sum subset
};

inline SubsetCheck central_subset_check(const std::vector<std::uint32_t>& traces, std::uint64_t p) {
  require(!traces.empty(), Err::ParameterOutOfRange, "trace list is empty");
  std::vector<std::uint64_t> w(traces.begin(), traces.end());
  std::vector<std::uint32_t> bounds(traces.size(), 1);
  auto dp = bounded_zero_sum_dp(w, bounds, p);
  if (dp.holds) return {true, std::nullopt};
  std::vector<std::uint32_t> subset;
  for (std::uint32_t i = 0; i < dp.witness->size(); ++i)
    if ((*dp.witness)[i]) subset.push_back(i);
  return {false, std::move(subset)};
}

// Corollary form over block dimensions: for every nonempty J the reduced
// numerator and denominator of (sum_{i in J} d_i) / |G| must be coprime to p.
// In reduced form that holds iff v_p(sum_{i in J} d_i) = v_p(|G|): writing
// a = v_p(|G|), a singleton with v_p(d_i) != a already fails, and when every
// v_p(d_i) = a the sum is p^a * sum u_i with u_i = d_i / p^a, so the
// condition is exactly that no nonempty subset of the u_i sums to 0 mod p.
// Integer arithmetic only; no rational type needed.
inline SubsetCheck rational_block_check(const std::vector<std::uint64_t>& dims, std::uint64_t group_order,
                                        std::uint64_t p) {
  require(!dims.empty(), Err::ParameterOutOfRange, "dimension list is empty");
  std::uint64_t total = 0;
  for (std::uint64_t d : dims) total += d;
  require(total == group_order, Err::DimsMismatch, "block dimensions do not sum to the group order");
  const std::uint32_t a = valuation_u64(group_order, p);
  std::vector<std::uint64_t> units;
  for (std::uint32_t i = 0; i < dims.size(); ++i) {
    if (valuation_u64(dims[i], p) != a) return {false, std::vector<std::uint32_t>{i}};
    std::uint64_t u = dims[i];
    for (std::uint32_t j = 0; j < a; ++j) u /= p;
    units.push_back(u % p);
  }
  std::vector<std::uint32_t> bounds(dims.size(), 1);
  auto dp = bounded_zero_sum_dp(units, bounds, p);
  if (dp.holds) return {true, std::nullopt};
  std::vector<std::uint32_t> subset;
  for (std::uint32_t i = 0; i < dp.witness->size(); ++i)
    if ((*dp.witness)[i]) subset.push_back(i);
  return {false, std::move(subset)};
}

// ---------------------------------------------------------------------------
// Degree extraction, with the modular case routed through the normal Sylow
// quotient (the degrees of G and G/H agree when H is a normal p-subgroup
// with semisimple quotient).

struct DegreeInfo {
  bool no_normal_sylow = false;
  std::optional<SylowWitness> sylow_witness;
  std::vector<std::uint32_t> degrees;
  bool on_quotient = false;
  std::uint64_t quotient_order = 0;
  std::optional<std::pair<std::uint64_t, std::uint32_t>> field_pk;
};

namespace detail {

inline bool field_fits_u64(std::uint64_t group_order, std::uint64_t p) {
  std::uint32_t k = splitting_degree_for_order(group_order, p);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (q > code_traits<std::uint64_t>::q_cap / p) return false;
    q *= p;
  }
  return true;
}

template <class Code>
inline DegreeInfo compute_degrees_impl(const FiniteGroup& G, std::uint64_t p, Rng& rng) {
  DegreeInfo info;
  if (G.order % p == 0) {
    auto sylow = normal_sylow_p(G, p);
    if (!sylow) {
      info.no_normal_sylow = true;
      std::uint64_t count = 0;
      for (std::uint32_t g = 0; g < G.order; ++g) {
        std::uint64_t ord = element_order(G, static_cast<elt>(g));
        while (ord % p == 0) ord /= p;
        if (ord == 1) ++count;
      }
      info.sylow_witness = SylowWitness{count, G.order / p_split(G, p).d};
      return info;
    }
    auto q = quotient(G, *sylow);
    auto F = splitting_field_for<Code>(q.group, p);
    info.field_pk = {F.p(), F.k()};
    info.on_quotient = true;
    info.quotient_order = q.group.order;
    auto A = make_algebra(std::move(q.group), std::move(F));
    info.degrees = wedderburn_degrees(A, rng).degrees;
    return info;
  }
  auto F = splitting_field_for<Code>(G, p);
  info.field_pk = {F.p(), F.k()};
  auto A = make_algebra(G, std::move(F));
  info.degrees = wedderburn_degrees(A, rng).degrees;
  return info;
}

}  // namespace detail

// Irreducible degrees of KG over the canonical splitting field, or the
// no-normal-Sylow notice when p divides |G| and the degrees are not computed
// on this path.
inline DegreeInfo compute_degrees(const FiniteGroup& G, std::uint64_t p, std::uint64_t seed) {
  require(is_prime_u64(p), Err::ParameterOutOfRange, "p must be prime");
  std::uint64_t d = p_split(G, p).d;
  Rng rng(seed, fnv1a(G.label + "|degrees|" + std::to_string(p)));
  if (detail::field_fits_u64(d, p)) return detail::compute_degrees_impl<std::uint64_t>(G, p, rng);
  return detail::compute_degrees_impl<u128>(G, p, rng);
}

inline BlockSummary compute_blocks_summary(const FiniteGroup& G, std::uint64_t p, std::uint64_t seed) {
  require(is_prime_u64(p), Err::ParameterOutOfRange, "p must be prime");
  Rng rng(seed, fnv1a(G.label + "|blocks|" + std::to_string(p)));
  std::uint64_t d = p_split(G, p).d;
  if (detail::field_fits_u64(d, p)) {
    auto A = make_algebra(G, splitting_field_for<std::uint64_t>(G, p));
    return block_idempotents(A, rng).summary;
  }
  auto A = make_algebra(G, splitting_field_for<u128>(G, p));
  return block_idempotents(A, rng).summary;
}

// ---------------------------------------------------------------------------
// Verdicts

inline MsVerdict decide_vg(const FiniteGroup& G, std::uint64_t p, std::uint64_t seed = global_seed()) {
  MsVerdict v;
  v.subject = Subject::VG;
  v.group_label = G.label;
  v.group_order = G.order;
  v.p = p;
  v.seed = seed;
  if (p == 0 || p > G.order) {
    require(p == 0 || is_prime_u64(p), Err::ParameterOutOfRange, "p must be 0 or prime");
    v.is_ms = true;
    v.reason = Reason::CHAR_ZERO_OR_LARGE_P;
    return v;
  }
  require(is_prime_u64(p), Err::ParameterOutOfRange, "p must be prime");
  if (p_split(G, p).d == 1) {
    // KG is local for a p-group; only the idempotents 0 and 1 exist
    v.is_ms = true;
    v.reason = Reason::P_GROUP_LOCAL;
    v.degrees = std::vector<std::uint32_t>{1};
    v.degrees_on_quotient = true;
    v.quotient_order = 1;
    v.field_pk = {p, 1};
    return v;
  }
  DegreeInfo info = compute_degrees(G, p, seed);
  if (info.no_normal_sylow) {
    // the Mathieu property forces a normal Sylow p-subgroup; degrees are not
    // computed on this path
    v.is_ms = false;
    v.reason = Reason::NO_NORMAL_SYLOW;
    v.sylow_witness = info.sylow_witness;
    return v;
  }
  v.field_pk = info.field_pk;
  v.degrees = info.degrees;
  v.degrees_on_quotient = info.on_quotient;
  v.quotient_order = info.quotient_order;
  auto zs = zero_sum_condition(info.degrees, p);
  v.is_ms = zs.holds;
  v.reason = zs.holds ? Reason::ZERO_SUM_HOLDS : Reason::ZERO_SUM_FAILS;
  if (!zs.holds) v.zero_sum_witness = ZeroSumWitness{std::move(*zs.witness)};
  return v;
}

inline MsVerdict decide_central(const FiniteGroup& G, std::uint64_t p, std::uint64_t seed = global_seed()) {
  MsVerdict v;
  v.subject = Subject::VG_CENTRAL;
  v.group_label = G.label;
  v.group_order = G.order;
  v.p = p;
  v.seed = seed;
  if (p == 0 || p > G.order) {
    require(p == 0 || is_prime_u64(p), Err::ParameterOutOfRange, "p must be 0 or prime");
    v.is_ms = true;
    v.reason = Reason::CHAR_ZERO_OR_LARGE_P;
    return v;
  }
  require(is_prime_u64(p), Err::ParameterOutOfRange, "p must be prime");
  BlockSummary blocks = compute_blocks_summary(G, p, seed);
  v.field_pk = {p, splitting_degree_for_order(G.order, p)};
  v.blocks = blocks;

  // Three formulations of the same theorem, evaluated independently; any
  // disagreement is a hard fault, not a test failure.
  auto by_traces = central_subset_check(blocks.traces, p);
  auto by_dims = rational_block_check(blocks.dims, G.order, p);
  require(by_traces.holds == by_dims.holds, Err::InternalInconsistency,
          "trace subset-sum and dimension valuation formulations disagree");
  if (G.order % p != 0) {
    // semisimple: block dims are n_i^2, so the subset condition on squares
    // must coincide as well
    std::vector<std::uint64_t> squares_mod(blocks.dims.size());
    for (std::size_t i = 0; i < blocks.dims.size(); ++i) squares_mod[i] = blocks.dims[i] % p;
    std::vector<std::uint32_t> bounds(blocks.dims.size(), 1);
    auto by_squares = bounded_zero_sum_dp(squares_mod, bounds, p);
    require(by_squares.holds == by_traces.holds, Err::InternalInconsistency,
            "degree-square subset-sum formulation disagrees");
  }

  v.is_ms = by_traces.holds;
  v.reason = by_traces.holds ? Reason::SUBSET_SUM_OK : Reason::SUBSET_SUM_ZERO;
  if (!by_traces.holds) v.subset_witness = by_traces.witness;
  return v;
}

inline MsVerdict decide(const FiniteGroup& G, Subject subject, std::uint64_t p, std::uint64_t seed = global_seed()) {
  return subject == Subject::VG ? decide_vg(G, p, seed) : decide_central(G, p, seed);
}

// ---------------------------------------------------------------------------
// Implication report: the one-way consequences the theory guarantees,
// evaluated on concrete data.

struct ImplicationCheck {
  std::string name;
  bool applicable = false;
  bool pass = true;
  std::string detail;
};

struct ImplicationReport {
  MsVerdict vg;
  MsVerdict central;
  std::vector<ImplicationCheck> checks;
  bool all_pass = true;

  void add(std::string name, bool applicable, bool pass, std::string detail = "") {
    if (applicable && !pass) all_pass = false;
    checks.push_back({std::move(name), applicable, pass, std::move(detail)});
  }
};

inline ImplicationReport implication_check(const FiniteGroup& G, std::uint64_t p, std::uint64_t seed = global_seed()) {
  ImplicationReport rep;
  rep.vg = decide_vg(G, p, seed);
  rep.central = decide_central(G, p, seed);

  rep.add("vg_ms_implies_central_ms", true, !rep.vg.is_ms || rep.central.is_ms);

  std::optional<std::vector<std::uint32_t>> degrees = rep.vg.degrees;
  if (!degrees && p >= 2) {
    DegreeInfo info = compute_degrees(G, p, seed);
    if (!info.no_normal_sylow) degrees = info.degrees;
  }
  if (degrees) {
    std::uint64_t sum = 0, sum_sq = 0;
    for (std::uint32_t n : *degrees) {
      sum += n;
      sum_sq += static_cast<std::uint64_t>(n) * n;
    }
    rep.add("ms_implies_p_gt_sum_degrees", rep.vg.is_ms, !rep.vg.is_ms || p > sum,
            "sum n_i = " + std::to_string(sum));
    rep.add("p_gt_sum_squares_implies_ms", p > sum_sq, !(p > sum_sq) || rep.vg.is_ms,
            "sum n_i^2 = " + std::to_string(sum_sq));
    if (rep.vg.is_ms) {
      std::uint32_t maxdeg = *std::max_element(degrees->begin(), degrees->end());
      rep.add("ms_implies_max_degree_lt_p", true, maxdeg < p, "max degree = " + std::to_string(maxdeg));
    }
  } else {
    rep.add("ms_implies_p_gt_sum_degrees", false, true, "degrees unavailable");
    rep.add("p_gt_sum_squares_implies_ms", false, true, "degrees unavailable");
  }

  if (rep.vg.is_ms && p >= 2) {
    BlockSummary blocks = rep.central.blocks ? *rep.central.blocks : compute_blocks_summary(G, p, seed);
    rep.add("ms_implies_block_count_lt_p", true, blocks.count() < p,
            "t = " + std::to_string(blocks.count()));
  }
  return rep;
}

}  // namespace msalg
