#include <catch2/catch_amalgamated.hpp>

#include "qstab/hua.hpp"
#include "qstab/oracle.hpp"

using namespace qstab;

namespace {

Quiver kronecker(long long arrows) {
  Quiver q(2);
  q.add_arrows(0, 1, arrows);
  return q;
}

Quiver s2() {
  Quiver q(2);
  q.add_arrows(0, 1, 2);
  q.add_arrows(1, 0, 2);
  return q;
}

} // namespace

TEST_CASE("thin oracle") {
  CHECK(thin_kac(kronecker(2), {1, 1}) == from_int_coeffs({1, 1}));
  CHECK(thin_kac(kronecker(3), {1, 1}) == from_int_coeffs({1, 1, 1}));
  CHECK(thin_kac(kronecker(1), {1, 1}) == QPolynomial::constant(1));
  CHECK(thin_kac(kronecker(1), {1, 0}) == QPolynomial::constant(1));
  CHECK(thin_kac(s2(), {1, 1}) == from_int_coeffs({1, 1, 1, 1}));

  // a loop contributes q at its vertex
  Quiver jordan(1);
  jordan.add_arrows(0, 0, 1);
  CHECK(thin_kac(jordan, {1}) == QPolynomial::monomial(1));

  // disconnected support: no connecting subset
  Quiver disc(2);
  CHECK(thin_kac(disc, {1, 1}).is_zero());

  CHECK_THROWS_AS(thin_kac(kronecker(2), {2, 1}), validation_error);
  CHECK_THROWS_AS(thin_kac(kronecker(2), {0, 0}), validation_error);
}

TEST_CASE("finite field linear algebra") {
  CHECK(fp::is_prime(2));
  CHECK(fp::is_prime(13));
  CHECK_FALSE(fp::is_prime(1));
  CHECK_FALSE(fp::is_prime(9));

  const long long p = 5;
  fp::Matrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 1;
  m.at(1, 1) = 3;
  auto inv = fp::inverse(m, p);
  REQUIRE(inv.has_value());
  fp::Matrix prod = fp::mul(m, *inv, p);
  CHECK(prod.at(0, 0) == 1);
  CHECK(prod.at(0, 1) == 0);
  CHECK(prod.at(1, 1) == 1);

  fp::Matrix sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(1, 0) = 2;
  CHECK_FALSE(fp::inverse(sing, p).has_value());

  fp::Matrix nil(2, 2);
  nil.at(0, 1) = 1;
  CHECK(fp::is_nilpotent(nil, p));
  CHECK_FALSE(fp::is_nilpotent(fp::Matrix::identity(2), p));

  // rank 2 map F_5^3 -> F_5^2: nullity 1, and the basis vector solves it
  fp::Matrix r1(2, 3);
  r1.at(0, 0) = 1;
  r1.at(0, 1) = 2;
  r1.at(0, 2) = 3;
  r1.at(1, 1) = 1;
  r1.at(1, 2) = 1;
  auto basis = fp::nullspace(r1, p);
  REQUIRE(basis.size() == 1);
  for (const auto& v : basis) {
    CHECK((v[0] + 2 * v[1] + 3 * v[2]) % p == 0);
    CHECK((v[1] + v[2]) % p == 0);
  }
}

TEST_CASE("census on tiny instances") {
  // Jordan quiver, d = (1): 1x1 matrices, all fixed by conjugation
  Quiver jordan(1);
  jordan.add_arrows(0, 0, 1);
  auto c1 = census(jordan, {1}, 3);
  CHECK(c1.total == 3);
  CHECK(c1.classes == 3);
  CHECK(c1.indecomposable == 3);
  CHECK(c1.abs_indecomposable == 3);

  // Jordan d = (2), p = 2: classical conjugacy classes of M_2(F_2)
  auto c2 = census(jordan, {2}, 2);
  CHECK(c2.total == 16);
  CHECK(c2.classes == 6);
  CHECK(c2.indecomposable == 3);
  CHECK(c2.abs_indecomposable == 2);  // the irreducible char poly splits over the closure

  // K2 (1,1), p = 2: only (0,0) decomposes
  auto c3 = census(kronecker(2), {1, 1}, 2);
  CHECK(c3.total == 4);
  CHECK(c3.abs_indecomposable == 3);
  CHECK(c3.abs_indecomposable == c3.indecomposable);

  // census counts match the Kac polynomial evaluations
  QPolynomial a = kac_polynomial(kronecker(3), {1, 1});
  for (long long p : {2, 3, 5})
    CHECK(Rat(census(kronecker(3), {1, 1}, p).abs_indecomposable) == a(Rat(p)));

  CHECK_THROWS_AS(census(jordan, {1}, 4), validation_error);
  CHECK_THROWS_AS(census(jordan, {0}, 2), validation_error);
  CensusCaps tight;
  tight.rep_cap = 4;
  CHECK_THROWS_AS(census(jordan, {2}, 2, tight), infeasible_error);
}

TEST_CASE("interpolation") {
  // recover q^2 + 1 from samples
  std::vector<std::pair<long long, Int>> pts{{0, 1}, {1, 2}, {2, 5}, {3, 10}};
  CHECK(interpolate(pts, 2) == from_int_coeffs({1, 0, 1}));
  // over-determined consistency is enforced
  pts.back().second = 11;
  CHECK_THROWS_AS(interpolate(pts, 2), validation_error);
  CHECK_THROWS_AS(interpolate({{1, 1}}, 1), validation_error);
  CHECK_THROWS_AS(interpolate({{1, 1}, {1, 2}}, 0), validation_error);
}

TEST_CASE("brute force kac") {
  CHECK(brute_force_kac(kronecker(2), {1, 1}, {2, 3}) == from_int_coeffs({1, 1}));
  CHECK(brute_force_kac(kronecker(3), {1, 1}, {2, 3, 5}) == from_int_coeffs({1, 1, 1}));
  // degree bound 1 - <d,d> = 2 needs three primes
  CHECK_THROWS_AS(brute_force_kac(kronecker(3), {1, 1}, {2, 3}), validation_error);
}
