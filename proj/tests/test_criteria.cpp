#include <catch2/catch_amalgamated.hpp>

#include "msalg/criteria.hpp"

using namespace msalg;

namespace {

// independent oracle: full tuple enumeration
BoundedZeroSum naive_zero_sum_check(const std::vector<std::uint32_t>& degrees, std::uint64_t p) {
  std::vector<std::uint32_t> c(degrees.size(), 0);
  for (;;) {
    std::size_t pos = 0;
    while (pos < c.size() && ++c[pos] > degrees[pos]) c[pos++] = 0;
    if (pos == c.size()) break;
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < c.size(); ++i) sum += static_cast<std::uint64_t>(c[i]) * degrees[i];
    if (sum % p == 0) return {false, c};
  }
  return {true, std::nullopt};
}

void check_zero_sum_witness(const std::vector<std::uint32_t>& degrees, std::uint64_t p,
                            const std::vector<std::uint32_t>& w) {
  REQUIRE(w.size() == degrees.size());
  std::uint64_t sum = 0;
  bool any = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(w[i] <= degrees[i]);
    any |= (w[i] > 0);
    sum += static_cast<std::uint64_t>(w[i]) * degrees[i];
  }
  CHECK(any);
  CHECK(sum % p == 0);
}

}  // namespace

TEST_CASE("zero_sum_condition agrees with exhaustive enumeration") {
  CHECK(zero_sum_condition({1}, 2).holds);
  CHECK(zero_sum_condition({1}, 7).holds);

  // the degree list of S3 with p = 5: c = (1,0,2) sums to 5
  auto r = zero_sum_condition({1, 1, 2}, 5);
  CHECK_FALSE(r.holds);
  check_zero_sum_witness({1, 1, 2}, 5, *r.witness);

  auto r2 = zero_sum_condition({1, 1, 1, 1, 2}, 3);
  CHECK_FALSE(r2.holds);
  check_zero_sum_witness({1, 1, 1, 1, 2}, 3, *r2.witness);

  CHECK(zero_sum_condition({1, 1}, 5).holds);
  CHECK(zero_sum_condition({1, 1}, 3).holds);
  CHECK_FALSE(zero_sum_condition({1, 1}, 2).holds);

  Rng rng(global_seed(), fnv1a("zero-sum-vs-naive"));
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t s = 1 + rng.below(5);
    std::vector<std::uint32_t> degrees(s);
    for (auto& n : degrees) n = 1 + static_cast<std::uint32_t>(rng.below(6));
    std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13}[rng.below(6)];
    auto fast = zero_sum_condition(degrees, p);
    auto slow = naive_zero_sum_check(degrees, p);
    INFO("p=" << p);
    CHECK(fast.holds == slow.holds);
    if (!fast.holds) check_zero_sum_witness(degrees, p, *fast.witness);
  }
}

TEST_CASE("central_subset_check") {
  CHECK(central_subset_check({1}, 2).holds);
  CHECK(central_subset_check({2, 2}, 3).holds);
  auto r = central_subset_check({1, 1, 1}, 2);
  REQUIRE_FALSE(r.holds);
  CHECK(r.witness->size() == 2);

  // agreement with full subset enumeration
  Rng rng(global_seed(), fnv1a("subset-vs-naive"));
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t t = 1 + rng.below(8);
    std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[rng.below(4)];
    std::vector<std::uint32_t> traces(t);
    for (auto& x : traces) x = static_cast<std::uint32_t>(rng.below(p));
    auto fast = central_subset_check(traces, p);
    bool naive_holds = true;
    for (std::size_t mask = 1; mask < (1u << t); ++mask) {
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < t; ++i)
        if (mask & (1u << i)) sum += traces[i];
      if (sum % p == 0) naive_holds = false;
    }
    CHECK(fast.holds == naive_holds);
    if (!fast.holds) {
      std::uint64_t sum = 0;
      for (auto i : *fast.witness) sum += traces[i];
      CHECK_FALSE(fast.witness->empty());
      CHECK(sum % p == 0);
    }
  }
}

TEST_CASE("rational_block_check") {
  CHECK(rational_block_check({6}, 6, 3).holds);
  CHECK(rational_block_check({1, 1}, 2, 3).holds);
  auto r = rational_block_check({1, 1, 1, 1, 4}, 8, 3);
  REQUIRE_FALSE(r.holds);
  {
    std::uint64_t sum = 0;
    std::vector<std::uint64_t> dims{1, 1, 1, 1, 4};
    for (auto i : *r.witness) sum += dims[i];
    CHECK(valuation_u64(sum, 3) != valuation_u64(8, 3));
  }
  // singleton failure: v_2(4) = 2 but v_2(6) = 1
  auto r2 = rational_block_check({2, 4}, 6, 2);
  REQUIRE_FALSE(r2.holds);
  CHECK(*r2.witness == std::vector<std::uint32_t>{1});
  CHECK_THROWS_MATCHES(rational_block_check({1, 2}, 5, 3), MsError,
                       Catch::Matchers::Predicate<MsError>([](const MsError& e) {
                         return e.code() == Err::DimsMismatch;
                       }));
}

TEST_CASE("decide_vg: characteristic zero and large p") {
  auto C4 = build_cyclic(4);
  auto v0 = decide_vg(C4, 0);
  CHECK(v0.is_ms);
  CHECK(v0.reason == Reason::CHAR_ZERO_OR_LARGE_P);
  auto v7 = decide_vg(C4, 7);
  CHECK(v7.is_ms);
  CHECK(v7.reason == Reason::CHAR_ZERO_OR_LARGE_P);
}

TEST_CASE("decide_vg: p-groups are Mathieu by locality") {
  for (auto [G, p] : std::vector<std::pair<FiniteGroup, std::uint64_t>>{{build_cyclic(4), 2},
                                                                        {build_quaternion8(), 2},
                                                                        {build_cyclic(27), 3},
                                                                        {build_elementary_abelian(5, 2), 5}}) {
    auto v = decide_vg(G, p);
    INFO(G.label);
    CHECK(v.is_ms);
    CHECK(v.reason == Reason::P_GROUP_LOCAL);
  }
}

TEST_CASE("decide_vg: quotient route and zero-sum verdicts") {
  auto S3 = build_symmetric(3);
  auto v = decide_vg(S3, 3);
  CHECK(v.is_ms);
  CHECK(v.reason == Reason::ZERO_SUM_HOLDS);
  REQUIRE(v.degrees.has_value());
  CHECK(*v.degrees == std::vector<std::uint32_t>{1, 1});
  CHECK(v.degrees_on_quotient);
  CHECK(v.quotient_order == 2);

  auto c6 = decide_vg(build_cyclic(6), 5);
  CHECK_FALSE(c6.is_ms);
  CHECK(c6.reason == Reason::ZERO_SUM_FAILS);
  REQUIRE(c6.zero_sum_witness.has_value());
  check_zero_sum_witness(*c6.degrees, 5, c6.zero_sum_witness->coefficients);

  // semisimple with p <= |G|: S3 at p = 5 admits c = (1,0,2)
  auto s3p5 = decide_vg(S3, 5);
  CHECK_FALSE(s3p5.is_ms);
  CHECK(*s3p5.degrees == std::vector<std::uint32_t>{1, 1, 2});
  CHECK_FALSE(s3p5.degrees_on_quotient);
  REQUIRE(s3p5.zero_sum_witness.has_value());
  check_zero_sum_witness({1, 1, 2}, 5, s3p5.zero_sum_witness->coefficients);
}

TEST_CASE("decide_vg: missing normal Sylow subgroup is decisive") {
  auto v = decide_vg(build_symmetric(4), 2);
  CHECK_FALSE(v.is_ms);
  CHECK(v.reason == Reason::NO_NORMAL_SYLOW);
  CHECK_FALSE(v.degrees.has_value());
  REQUIRE(v.sylow_witness.has_value());
  CHECK(v.sylow_witness->p_element_count == 16);
  CHECK(v.sylow_witness->sylow_order == 8);

  CHECK_FALSE(decide_vg(build_symmetric(3), 2).is_ms);
}

TEST_CASE("decide_vg: characteristic 2 ground truth on small groups") {
  // MS exactly for 2-groups
  CHECK(decide_vg(build_cyclic(8), 2).is_ms);
  CHECK(decide_vg(build_dihedral(4), 2).is_ms);
  CHECK(decide_vg(build_quaternion8(), 2).is_ms);
  CHECK_FALSE(decide_vg(build_cyclic(3), 2).is_ms);
  CHECK_FALSE(decide_vg(build_cyclic(6), 2).is_ms);
  CHECK_FALSE(decide_vg(build_symmetric(3), 2).is_ms);
  CHECK_FALSE(decide_vg(build_dihedral(3), 2).is_ms);
  CHECK_FALSE(decide_vg(build_alternating(4), 2).is_ms);
}

TEST_CASE("decide_vg: abelian ground truth is p > d") {
  for (std::uint32_t n : {2u, 3u, 4u, 6u, 9u, 12u, 15u}) {
    auto G = build_cyclic(n);
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
      std::uint64_t d = p_split(G, p).d;
      INFO("cyclic:" << n << " p=" << p);
      CHECK(decide_vg(G, p).is_ms == (p > d));
    }
  }
}

TEST_CASE("decide_central: frozen cases") {
  auto s33 = decide_central(build_symmetric(3), 3);
  CHECK(s33.is_ms);
  CHECK(s33.reason == Reason::SUBSET_SUM_OK);
  REQUIRE(s33.blocks.has_value());
  CHECK(s33.blocks->traces == std::vector<std::uint32_t>{1});

  auto c32 = decide_central(build_cyclic(3), 2);
  CHECK_FALSE(c32.is_ms);
  CHECK(c32.reason == Reason::SUBSET_SUM_ZERO);
  REQUIRE(c32.subset_witness.has_value());
  CHECK(c32.subset_witness->size() == 2);  // two of the three trace-1 blocks

  auto q83 = decide_central(build_quaternion8(), 3);
  CHECK_FALSE(q83.is_ms);
  REQUIRE(q83.subset_witness.has_value());
  CHECK(q83.subset_witness->size() == 3);  // three trace-2 blocks sum to 6

  // V_G fails but the central subspace is Mathieu: S4 at p = 2 has a single
  // block of full defect
  auto s42 = decide_central(build_symmetric(4), 2);
  CHECK(s42.is_ms);
  CHECK(s42.blocks->count() == 1);
  CHECK_FALSE(decide_vg(build_symmetric(4), 2).is_ms);

  // S3 at p = 2: the defect-zero block alone is a witness
  auto s32 = decide_central(build_symmetric(3), 2);
  CHECK_FALSE(s32.is_ms);
  REQUIRE(s32.subset_witness.has_value());
  CHECK(s32.subset_witness->size() == 1);
  CHECK(s32.blocks->full_defect[(*s32.subset_witness)[0]] == 0);
}

TEST_CASE("decide_central: large prime branch") {
  auto v = decide_central(build_cyclic(4), 7);
  CHECK(v.is_ms);
  CHECK(v.reason == Reason::CHAR_ZERO_OR_LARGE_P);
  CHECK_FALSE(v.blocks.has_value());
}

TEST_CASE("verdicts are invariant under the factorization seed") {
  for (std::uint64_t seed : {0ULL, 42ULL, 0xC0FFEEULL}) {
    auto v = decide_vg(build_dihedral(6), 3, seed);
    CHECK_FALSE(v.is_ms);
    auto c = decide_central(build_dihedral(6), 3, seed);
    CHECK(c.blocks->dims == decide_central(build_dihedral(6), 3, 777).blocks->dims);
  }
}

TEST_CASE("implication report") {
  auto rep = implication_check(build_symmetric(3), 3);
  CHECK(rep.all_pass);
  CHECK(rep.vg.is_ms);
  CHECK(rep.central.is_ms);

  auto rep2 = implication_check(build_quaternion8(), 3);
  CHECK(rep2.all_pass);  // both fail, implications hold vacuously
  CHECK_FALSE(rep2.vg.is_ms);
  CHECK_FALSE(rep2.central.is_ms);

  auto rep3 = implication_check(build_cyclic(6), 7);
  CHECK(rep3.all_pass);
  CHECK(rep3.vg.is_ms);

  // catalog-flavored sweep: implications hold everywhere
  for (auto& G : {build_symmetric(4), build_dihedral(5), build_cyclic(9), build_alternating(4)}) {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      auto rep4 = implication_check(G, p);
      INFO(G.label << " p=" << p);
      CHECK(rep4.all_pass);
    }
  }
}

TEST_CASE("decide_vg matches decide on quotients by normal p-subgroups") {
  auto S3 = build_symmetric(3);
  auto A3 = normal_sylow_p(S3, 3).value();
  auto q = quotient(S3, A3);
  CHECK(decide_vg(S3, 3).is_ms == decide_vg(q.group, 3).is_ms);

  auto Q8 = build_quaternion8();
  auto G = direct_product(build_cyclic(3), Q8);
  auto H = normal_sylow_p(G, 3).value();
  auto q2 = quotient(G, H);
  CHECK(decide_vg(G, 3).is_ms == decide_vg(q2.group, 3).is_ms);
  CHECK_FALSE(decide_vg(G, 3).is_ms);

  auto D4 = build_dihedral(4);
  auto Z = center_subgroup(D4);
  CHECK(Z.order() == 2);
  auto q3 = quotient(D4, Z);
  CHECK(decide_vg(D4, 2).is_ms == decide_vg(q3.group, 2).is_ms);
}

TEST_CASE("verdicts fit very large splitting fields") {
  // cyclic:29 at p = 11 needs GF(11^28), past 64-bit codes
  auto G = build_cyclic(29);
  auto v = decide_vg(G, 11);
  CHECK_FALSE(v.is_ms);  // abelian: 11 > 29 fails
  REQUIRE(v.field_pk.has_value());
  CHECK(v.field_pk->second == 28);
  REQUIRE(v.degrees.has_value());
  CHECK(v.degrees->size() == 29);
  auto c = decide_central(G, 11);
  CHECK_FALSE(c.is_ms);
}
