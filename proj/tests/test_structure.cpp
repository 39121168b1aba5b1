#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "msalg/structure.hpp"

using namespace msalg;

namespace {

using Alg = GroupAlgebra<std::uint64_t>;
using El = AlgElem<std::uint64_t>;

Alg alg(const FiniteGroup& G, std::uint32_t p, std::uint32_t k) { return make_algebra(G, make_field(p, k)); }

std::set<std::vector<std::uint64_t>> coeff_set(const std::vector<El>& v) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& e : v) out.insert(e.c);
  return out;
}

// complete idempotent scan of the center, coefficients over the class-sum
// basis; the independent oracle for small centers
std::set<std::vector<std::uint64_t>> central_idempotent_scan(const Alg& A) {
  auto sums = class_sums(A);
  const std::uint64_t q = A.field->q();
  std::set<std::vector<std::uint64_t>> found;
  std::vector<std::uint64_t> digits(sums.size(), 0);
  for (;;) {
    El e = alg_zero(A);
    for (std::size_t i = 0; i < sums.size(); ++i)
      if (digits[i] != 0) e = add(e, scale(sums[i], digits[i]));
    if (is_idempotent(e)) found.insert(e.c);
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return found;
}

}  // namespace

TEST_CASE("primitive idempotents: trivial span") {
  auto A = alg(build_cyclic(4), 3, 1);
  auto prims = primitive_idempotents_commutative(std::vector<El>{alg_one(A)});
  REQUIRE(prims.size() == 1);
  CHECK(prims[0] == alg_one(A));
}

TEST_CASE("primitive idempotents of GF(4)[C3] are the Fourier idempotents") {
  auto A = alg(build_cyclic(3), 2, 2);
  std::vector<El> basis{alg_one(A), alg_basis(A, 1), alg_basis(A, 2)};
  auto prims = primitive_idempotents_commutative(basis);
  REQUIRE(prims.size() == 3);
  CHECK(coeff_set(prims) == std::set<std::vector<std::uint64_t>>{{1, 1, 1}, {1, 2, 3}, {1, 3, 2}});
  // orthogonal, idempotent, sum to 1
  El total = alg_zero(A);
  for (std::size_t i = 0; i < prims.size(); ++i) {
    CHECK(is_idempotent(prims[i]));
    total = add(total, prims[i]);
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(multiply(prims[i], prims[j]).is_zero());
  }
  CHECK(total == alg_one(A));
}

TEST_CASE("the center of GF(3)[S3] is local") {
  auto A = alg(build_symmetric(3), 3, 1);
  auto prims = primitive_idempotents_commutative(class_sums(A));
  REQUIRE(prims.size() == 1);
  CHECK(prims[0] == alg_one(A));
}

TEST_CASE("primitive idempotent input validation") {
  auto A = alg(build_symmetric(3), 5, 1);
  std::vector<elt> transpositions;
  for (std::uint32_t g = 0; g < 6; ++g)
    if (element_order(*A.group, static_cast<elt>(g)) == 2) transpositions.push_back(static_cast<elt>(g));
  std::vector<El> bad{alg_one(A), alg_basis(A, transpositions[0]), alg_basis(A, transpositions[1])};
  CHECK_THROWS_MATCHES(primitive_idempotents_commutative(bad), MsError,
                       Catch::Matchers::Predicate<MsError>([](const MsError& e) {
                         return e.code() == Err::NotCommutative;
                       }));
  auto C3 = alg(build_cyclic(3), 2, 2);
  std::vector<El> open{alg_one(C3), alg_basis(C3, 1)};
  CHECK_THROWS_MATCHES(primitive_idempotents_commutative(open), MsError,
                       Catch::Matchers::Predicate<MsError>([](const MsError& e) { return e.code() == Err::NotClosed; }));
}

TEST_CASE("wedderburn degrees: frozen catalog cases") {
  CHECK(wedderburn_degrees(alg(build_cyclic(1), 5, 1)).degrees == std::vector<std::uint32_t>{1});
  CHECK(wedderburn_degrees(alg(build_symmetric(3), 5, 2)).degrees == std::vector<std::uint32_t>{1, 1, 2});
  CHECK(wedderburn_degrees(alg(build_cyclic(3), 2, 2)).degrees == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(wedderburn_degrees(alg(build_quaternion8(), 3, 2)).degrees == std::vector<std::uint32_t>{1, 1, 1, 1, 2});
  CHECK(wedderburn_degrees(alg(build_dihedral(4), 3, 2)).degrees == std::vector<std::uint32_t>{1, 1, 1, 1, 2});
  // A4 over GF(25) (d = 12, ord_12(5) = 2) and S4 over GF(5)
  CHECK(wedderburn_degrees(alg(build_alternating(4), 5, 2)).degrees == std::vector<std::uint32_t>{1, 1, 1, 3});
  CHECK(wedderburn_degrees(alg(build_symmetric(4), 5, 1)).degrees == std::vector<std::uint32_t>{1, 1, 2, 3, 3});
}

TEST_CASE("wedderburn structural identities") {
  for (auto [G, p] : std::vector<std::pair<FiniteGroup, std::uint32_t>>{{build_symmetric(3), 5},
                                                                        {build_quaternion8(), 3},
                                                                        {build_cyclic(6), 5},
                                                                        {build_dihedral(5), 3}}) {
    auto F = splitting_field_for<std::uint64_t>(G, p);
    auto A = make_algebra(G, F);
    auto W = wedderburn_degrees(A);
    INFO(G.label << " p=" << p);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < W.degrees.size(); ++i) {
      CHECK(static_cast<std::uint64_t>(W.degrees[i]) * W.degrees[i] == W.component_dims[i]);
      total += W.component_dims[i];
    }
    CHECK(total == G.order);
    CHECK(W.degrees.size() == conjugacy_classes(G).size());
    CHECK(std::is_sorted(W.degrees.begin(), W.degrees.end()));
  }
}

TEST_CASE("wedderburn rejects modular and non-splitting inputs") {
  CHECK_THROWS_MATCHES(wedderburn_degrees(alg(build_symmetric(3), 3, 1)), MsError,
                       Catch::Matchers::Predicate<MsError>([](const MsError& e) {
                         return e.code() == Err::NotSemisimple;
                       }));
  // GF(3) does not split C4 (x^4 - 1 has an irreducible quadratic factor)
  CHECK_THROWS_MATCHES(wedderburn_degrees(alg(build_cyclic(4), 3, 1)), MsError,
                       Catch::Matchers::Predicate<MsError>([](const MsError& e) { return e.code() == Err::NotSplit; }));
}

TEST_CASE("wedderburn degrees are invariant under enlarging the field") {
  auto base = wedderburn_degrees(alg(build_symmetric(3), 5, 2)).degrees;
  auto doubled = wedderburn_degrees(alg(build_symmetric(3), 5, 4)).degrees;
  CHECK(base == doubled);
}

TEST_CASE("block data: frozen examples") {
  auto C2 = alg(build_cyclic(2), 3, 1);
  auto B = block_idempotents(C2);
  REQUIRE(B.idempotents.size() == 2);
  CHECK(B.idempotents[0].c == std::vector<std::uint64_t>{2, 1});
  CHECK(B.idempotents[1].c == std::vector<std::uint64_t>{2, 2});
  CHECK(B.summary.traces == std::vector<std::uint32_t>{2, 2});
  CHECK(B.summary.dims == std::vector<std::uint64_t>{1, 1});
  CHECK(B.summary.full_defect == std::vector<std::uint8_t>{1, 1});

  auto S3 = alg(build_symmetric(3), 3, 1);
  auto BS = block_idempotents(S3);
  REQUIRE(BS.idempotents.size() == 1);
  CHECK(BS.idempotents[0] == alg_one(S3));
  CHECK(BS.summary.traces == std::vector<std::uint32_t>{1});
  CHECK(BS.summary.dims == std::vector<std::uint64_t>{6});
  CHECK(BS.summary.full_defect == std::vector<std::uint8_t>{1});

  auto C3 = alg(build_cyclic(3), 2, 2);
  auto BC = block_idempotents(C3);
  CHECK(BC.summary.traces == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(BC.summary.dims == std::vector<std::uint64_t>{1, 1, 1});

  // modular, non-abelian, several blocks: GF(4)[S3] has the principal block
  // (dim 2, trace 1) and a defect-zero block (dim 4, trace 0)
  auto S3mod = alg(build_symmetric(3), 2, 2);
  auto BM = block_idempotents(S3mod);
  REQUIRE(BM.summary.count() == 2);
  std::multiset<std::uint64_t> dims(BM.summary.dims.begin(), BM.summary.dims.end());
  CHECK(dims == std::multiset<std::uint64_t>{2, 4});
  for (std::size_t i = 0; i < 2; ++i) {
    if (BM.summary.dims[i] == 2) {
      CHECK(BM.summary.traces[i] == 1);
      CHECK(BM.summary.full_defect[i] == 1);
    } else {
      CHECK(BM.summary.traces[i] == 0);
      CHECK(BM.summary.full_defect[i] == 0);
    }
  }

  // GF(4)[C6]: three blocks of dimension 2, all full defect
  auto C6 = alg(build_cyclic(6), 2, 2);
  auto B6 = block_idempotents(C6);
  CHECK(B6.summary.dims == std::vector<std::uint64_t>{2, 2, 2});
  CHECK(B6.summary.traces == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("GF(4)[S4] is a single block, confirmed by a complete center scan") {
  auto A = alg(build_symmetric(4), 2, 2);
  auto B = block_idempotents(A);
  REQUIRE(B.summary.count() == 1);
  CHECK(B.summary.dims == std::vector<std::uint64_t>{24});
  CHECK(B.summary.traces == std::vector<std::uint32_t>{1});
  // the center has dimension 5; scanning all 4^5 central elements must find
  // exactly the idempotents 0 and 1
  auto found = central_idempotent_scan(A);
  CHECK(found == std::set<std::vector<std::uint64_t>>{alg_zero(A).c, alg_one(A).c});
}

TEST_CASE("block decomposition agrees with complete center scans on small cases") {
  for (auto [G, p, k] : std::vector<std::tuple<FiniteGroup, std::uint32_t, std::uint32_t>>{
           {build_cyclic(2), 3, 1}, {build_cyclic(3), 2, 2}, {build_symmetric(3), 3, 1}, {build_cyclic(4), 2, 1},
           {build_dihedral(4), 2, 1}}) {
    auto A = alg(G, p, k);
    auto B = block_idempotents(A);
    INFO(G.label << " over GF(" << p << "^" << k << ")");
    // every subset sum of block idempotents is a central idempotent; the scan
    // must find exactly those
    std::set<std::vector<std::uint64_t>> expect;
    const std::size_t t = B.idempotents.size();
    for (std::size_t mask = 0; mask < (1u << t); ++mask) {
      El e = alg_zero(A);
      for (std::size_t i = 0; i < t; ++i)
        if (mask & (1u << i)) e = add(e, B.idempotents[i]);
      expect.insert(e.c);
    }
    CHECK(central_idempotent_scan(A) == expect);
  }
}

TEST_CASE("block output is deterministic and seed-independent") {
  auto G = build_dihedral(6);
  auto A = alg(G, 5, 2);
  Rng r1(1, 0), r2(99999, 7);
  auto B1 = block_idempotents(A, r1);
  auto B2 = block_idempotents(A, r2);
  REQUIRE(B1.idempotents.size() == B2.idempotents.size());
  for (std::size_t i = 0; i < B1.idempotents.size(); ++i) CHECK(B1.idempotents[i] == B2.idempotents[i]);
  CHECK(B1.summary.dims == B2.summary.dims);
}
