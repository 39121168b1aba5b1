#include <catch2/catch_amalgamated.hpp>

#include "msalg/algebra.hpp"

using namespace msalg;

namespace {

using Alg = GroupAlgebra<std::uint64_t>;
using El = AlgElem<std::uint64_t>;

Alg alg(const FiniteGroup& G, std::uint32_t p, std::uint32_t k) { return make_algebra(G, make_field(p, k)); }

El from_coeffs(const Alg& A, std::vector<std::uint64_t> cs) { return {A, std::move(cs)}; }

El random_elem(const Alg& A, Rng& rng) {
  El e = alg_zero(A);
  for (auto& x : e.c) x = rng.below(A.field->q());
  return e;
}

// transposition class sum in K[S3]
El transposition_sum(const Alg& A) {
  El e = alg_zero(A);
  for (std::uint32_t g = 0; g < A.group->order; ++g)
    if (element_order(*A.group, static_cast<elt>(g)) == 2) e.c[g] = 1;
  return e;
}

}  // namespace

TEST_CASE("multiply: unit, frozen squares, mismatch") {
  auto C2 = alg(build_cyclic(2), 2, 1);
  El one_plus_g = from_coeffs(C2, {1, 1});
  CHECK(multiply(one_plus_g, alg_one(C2)) == one_plus_g);
  CHECK(multiply(one_plus_g, one_plus_g).is_zero());  // (1+g)^2 = 0 in GF(2)[C2]

  auto C3 = alg(build_cyclic(3), 2, 2);
  El gg = from_coeffs(C3, {0, 1, 1});  // g + g^2
  CHECK(multiply(gg, gg) == gg);       // idempotent in GF(4)[C3]
  CHECK(is_idempotent(gg));
  CHECK_FALSE(is_idempotent(one_plus_g));
  CHECK(is_idempotent(alg_zero(C3)));
  CHECK(is_idempotent(alg_one(C3)));

  auto other = alg(build_cyclic(3), 2, 2);
  CHECK_THROWS_MATCHES(multiply(gg, alg_one(other)), MsError, Catch::Matchers::Predicate<MsError>([](const MsError& e) {
                         return e.code() == Err::AlgebraMismatch;
                       }));
}

TEST_CASE("trace reads the identity coefficient") {
  auto C2 = alg(build_cyclic(2), 5, 1);
  CHECK(trace(alg_one(C2)) == 1);
  CHECK(trace(alg_basis(C2, 1)) == 0);
  CHECK(trace(from_coeffs(C2, {3, 2})) == 3);
}

TEST_CASE("bilinearity, associativity, and trace symmetry on seeded samples") {
  Rng rng(global_seed(), fnv1a("algebra-props"));
  std::vector<Alg> algebras;
  algebras.push_back(alg(build_symmetric(3), 5, 2));
  algebras.push_back(alg(build_quaternion8(), 3, 2));
  algebras.push_back(alg(build_cyclic(6), 2, 2));
  for (const auto& A : algebras) {
    INFO(A.group->label << " over GF(" << A.field->p() << "^" << A.field->k() << ")");
    for (int i = 0; i < 1000; ++i) {
      El a = random_elem(A, rng), b = random_elem(A, rng), c = random_elem(A, rng);
      CHECK(multiply(a, multiply(b, c)) == multiply(multiply(a, b), c));
      CHECK(multiply(add(a, b), c) == add(multiply(a, c), multiply(b, c)));
      CHECK(trace(multiply(a, b)) == trace(multiply(b, a)));
    }
  }
}

TEST_CASE("class sums span the center") {
  auto S3 = alg(build_symmetric(3), 5, 2);
  auto sums = class_sums(S3);
  REQUIRE(sums.size() == 3);
  std::multiset<std::size_t> sizes;
  for (const auto& s : sums) {
    std::size_t support = 0;
    for (auto x : s.c) support += (x != 0);
    sizes.insert(support);
    CHECK(is_central(s));
  }
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

  auto C4 = alg(build_cyclic(4), 3, 1);
  CHECK(class_sums(C4).size() == 4);
  Rng rng(global_seed(), fnv1a("central-abelian"));
  CHECK(is_central(random_elem(C4, rng)));

  // a single transposition is not central in K[S3]
  El t = alg_basis(S3, [&] {
    for (std::uint32_t g = 1; g < 6; ++g)
      if (element_order(*S3.group, static_cast<elt>(g)) == 2) return static_cast<elt>(g);
    return static_cast<elt>(0);
  }());
  CHECK_FALSE(is_central(t));
  // and centrality agrees with commuting against every basis element
  for (std::uint32_t g = 0; g < 6; ++g) {
    El bg = alg_basis(S3, static_cast<elt>(g));
    if (multiply(t, bg) == multiply(bg, t)) continue;
    SUCCEED();
    return;
  }
  FAIL("transposition commuted with the whole basis");
}

TEST_CASE("commutator subspace membership") {
  auto S3 = alg(build_symmetric(3), 5, 2);
  Rng rng(global_seed(), fnv1a("commutators"));
  for (int i = 0; i < 50; ++i) {
    El x = random_elem(S3, rng), y = random_elem(S3, rng);
    CHECK(commutator_contains(sub(multiply(x, y), multiply(y, x))));
  }
  CHECK_FALSE(commutator_contains(alg_one(S3)));

  // difference of two same-class transpositions
  std::vector<elt> transpositions;
  for (std::uint32_t g = 0; g < 6; ++g)
    if (element_order(*S3.group, static_cast<elt>(g)) == 2) transpositions.push_back(static_cast<elt>(g));
  REQUIRE(transpositions.size() == 3);
  CHECK(commutator_contains(sub(alg_basis(S3, transpositions[0]), alg_basis(S3, transpositions[1]))));

  // the class-sum criterion agrees with the explicit commutator span, and the
  // span has dimension |G| - #classes
  SpanBuilder<std::uint64_t> span(*S3.field, 6);
  for (std::uint32_t g = 0; g < 6; ++g)
    for (std::uint32_t h = 0; h < 6; ++h) {
      El c = sub(multiply(alg_basis(S3, static_cast<elt>(g)), alg_basis(S3, static_cast<elt>(h))),
                 multiply(alg_basis(S3, static_cast<elt>(h)), alg_basis(S3, static_cast<elt>(g))));
      span.offer(c.c);
    }
  CHECK(span.rank() == 6 - 3);
  for (int i = 0; i < 200; ++i) {
    El e = random_elem(S3, rng);
    CHECK(commutator_contains(e) == span.contains(e.c));
  }
}

TEST_CASE("element minimal polynomials") {
  auto S3 = alg(build_symmetric(3), 3, 1);
  CHECK(element_min_poly(alg_zero(S3)).c == std::vector<std::uint64_t>{0, 1});
  CHECK(element_min_poly(alg_one(S3)).c == std::vector<std::uint64_t>{2, 1});  // x - 1

  El n = transposition_sum(S3);
  CHECK(element_min_poly(n).c == std::vector<std::uint64_t>{0, 0, 1});  // x^2: n^2 = 0 in char 3

  // agreement with the left-regular matrix route
  Rng rng(global_seed(), fnv1a("minpoly-agree"));
  auto Q8 = alg(build_quaternion8(), 3, 2);
  for (int i = 0; i < 10; ++i) {
    El a = random_elem(Q8, rng);
    CHECK(element_min_poly(a) == min_poly_matrix(left_regular_matrix(a)));
  }
}

TEST_CASE("nilpotent lift") {
  auto S3 = alg(build_symmetric(3), 3, 1);
  El n = transposition_sum(S3);
  El a = add(alg_one(S3), n);
  El lifted = nilpotent_lift(a);
  CHECK(lifted == alg_one(S3));
  CHECK(nilpotent_lift(alg_zero(S3)).is_zero());

  auto C3 = alg(build_cyclic(3), 2, 2);
  El gg = from_coeffs(C3, {0, 1, 1});
  CHECK(nilpotent_lift(gg) == gg);  // idempotents are fixed points

  // g in GF(4)[C3]: g^2 - g has (g^2+g)^2 = g^2+g, never nilpotent
  CHECK_THROWS_MATCHES(nilpotent_lift(alg_basis(C3, 1)), MsError,
                       Catch::Matchers::Predicate<MsError>([](const MsError& e) {
                         return e.code() == Err::NotAlmostIdempotent;
                       }));

  // the lift stays congruent to the input modulo nilpotents
  El diff = sub(lifted, a);
  El probe = diff;
  for (int i = 0; i < 4; ++i) probe = multiply(probe, probe);
  CHECK(probe.is_zero());
}

TEST_CASE("quotient algebra map") {
  auto S3G = build_symmetric(3);
  auto A = alg(S3G, 5, 1);
  auto A3 = normal_sylow_p(S3G, 3).value();
  auto q = quotient_hom(A, A3);
  CHECK(q.target.dim() == 2);

  // rho(1 + (123)) = 2 * identity coset: both land in the trivial coset
  elt threecycle = 0;
  for (std::uint32_t g = 1; g < 6; ++g)
    if (element_order(S3G, static_cast<elt>(g)) == 3) {
      threecycle = static_cast<elt>(g);
      break;
    }
  El x = add(alg_one(A), alg_basis(A, threecycle));
  El img = q.apply(x);
  CHECK(img.c == std::vector<std::uint64_t>{2, 0});

  // rho(h) = identity coset for h in N; kernel contains n*g - g
  for (elt h : A3.members) CHECK(q.apply(alg_basis(A, h)).c == std::vector<std::uint64_t>{1, 0});
  Rng rng(global_seed(), fnv1a("quotient-map"));
  for (int i = 0; i < 100; ++i) {
    El a = random_elem(A, rng), b = random_elem(A, rng);
    CHECK(q.apply(multiply(a, b)) == multiply(q.apply(a), q.apply(b)));
    CHECK(q.apply(add(a, b)) == add(q.apply(a), q.apply(b)));
  }
  CHECK(q.apply(alg_one(A)) == alg_one(q.target));
  for (elt h : A3.members) {
    El k = sub(multiply(alg_basis(A, h), alg_basis(A, threecycle)), alg_basis(A, threecycle));
    CHECK(q.apply(k).is_zero());
  }

  // trivial kernel: coefficient-preserving relabeling
  auto qt = quotient_hom(A, Subgroup{{0}});
  El a = random_elem(A, rng);
  CHECK(qt.apply(a).c == a.c);
}

TEST_CASE("averaging idempotent") {
  auto S3G = build_symmetric(3);
  auto A = alg(S3G, 5, 1);
  auto A3 = normal_sylow_p(S3G, 3).value();
  El e = averaging_idempotent(A, A3);
  CHECK(is_idempotent(e));
  CHECK(is_central(e));
  for (elt h : A3.members) CHECK(multiply(e, alg_basis(A, h)) == e);

  auto A2 = alg(S3G, 3, 1);
  CHECK_THROWS_MATCHES(averaging_idempotent(A2, A3), MsError, Catch::Matchers::Predicate<MsError>([](const MsError& e2) {
                         return e2.code() == Err::CharDividesH;
                       }));
}

TEST_CASE("p' quotient lift: S3 over GF(5) through A3") {
  auto S3G = build_symmetric(3);
  auto A = alg(S3G, 5, 1);
  auto A3 = normal_sylow_p(S3G, 3).value();
  auto q = quotient_hom(A, A3);

  // all idempotents of GF(5)[C2]: 0, 1, 3+3g, 3+2g
  std::vector<El> idems;
  for (std::uint64_t c0 = 0; c0 < 5; ++c0)
    for (std::uint64_t c1 = 0; c1 < 5; ++c1) {
      El e = from_coeffs(q.target, {c0, c1});
      if (is_idempotent(e)) idems.push_back(e);
    }
  REQUIRE(idems.size() == 4);
  std::set<std::vector<std::uint64_t>> found;
  for (const auto& e : idems) found.insert(e.c);
  CHECK(found.count({3, 3}) == 1);
  CHECK(found.count({3, 2}) == 1);

  for (const auto& e : idems) {
    El u = p_prime_quotient_lift(q, e);
    CHECK(is_idempotent(u));
    CHECK(q.apply(u) == e);
    CHECK(trace(u) == A.field->mul(A.field->inv(3), trace(e)));
  }

  // e = 1 lifts to E_H; e = 3+3g lifts to the all-ones element (trace 1)
  CHECK(p_prime_quotient_lift(q, alg_one(q.target)) == averaging_idempotent(A, A3));
  El u = p_prime_quotient_lift(q, from_coeffs(q.target, {3, 3}));
  CHECK(u.c == std::vector<std::uint64_t>(6, 1));
  CHECK(trace(u) == 1);

  CHECK_THROWS_MATCHES(p_prime_quotient_lift(q, from_coeffs(q.target, {1, 1})), MsError,
                       Catch::Matchers::Predicate<MsError>([](const MsError& e2) {
                         return e2.code() == Err::NotIdempotent;
                       }));

  // p = 3 divides |A3|
  auto A3alg = alg(S3G, 3, 1);
  auto q3 = quotient_hom(A3alg, A3);
  CHECK_THROWS_MATCHES(p_prime_quotient_lift(q3, alg_one(q3.target)), MsError,
                       Catch::Matchers::Predicate<MsError>([](const MsError& e2) {
                         return e2.code() == Err::CharDividesH;
                       }));
}
