#include <catch2/catch_amalgamated.hpp>

#include "qstab/hua.hpp"
#include "qstab/nakajima.hpp"

using namespace qstab;

namespace {

Quiver k2() {
  Quiver q(2);
  q.add_arrows(0, 1, 2);
  return q;
}

Quiver hyperbolic() {
  Quiver q(3);
  q.add_arrows(0, 1, 2);
  q.add_arrows(1, 2, 1);
  return q;
}

} // namespace

TEST_CASE("instance plumbing") {
  NakajimaInstance inst(k2(), {0, 1}, {0, 0}, {1, 1});
  CHECK(inst.cb.n_vertices() == 3);
  CHECK(inst.cb.arrows(2, 1) == 1);
  CHECK(inst.cb_d() == DimVector{0, 0, 1});
  CHECK(inst.cb_delta() == DimVector{1, 1, 0});
  CHECK(inst.tau(3) == DimVector{3, 3});
  CHECK_THROWS_AS(NakajimaInstance(k2(), {0, 0}, {0, 0}, {1, 1}), validation_error);
}

TEST_CASE("hypothesis checks") {
  NakajimaInstance good(hyperbolic(), {0, 0, 1}, {6, 7, 3}, {1, 1, 0});
  auto one = check_nakajima_hypotheses(good, NakajimaMode::one);
  CHECK(one.star_ok);
  CHECK(one.extra_ok);
  CHECK(one.ok);
  // strict star fails at the vertices pairing to zero
  auto two = check_nakajima_hypotheses(good, NakajimaMode::two);
  CHECK_FALSE(two.star_ok);
  CHECK_FALSE(two.ok);

  // d = 0 kills the vertex-pairing condition of mode (i)
  NakajimaInstance flat(k2(), {0, 1}, {0, 0}, {1, 1});
  CHECK_FALSE(check_nakajima_hypotheses(flat, NakajimaMode::one).ok);
}

TEST_CASE("nakajima limit series") {
  NakajimaInstance inst(k2(), {0, 1}, {0, 0}, {1, 1});
  auto lim = nakajima_limit_series(inst, 3);
  long long expect[] = {1, 2, 5, 10};  // p^2
  for (std::size_t k = 0; k <= 3; ++k) CHECK(lim.coeff(k) == Rat(expect[k]));

  // vertices outside supp delta divide by phi_{d_i}
  NakajimaInstance part(hyperbolic(), {0, 0, 1}, {0, 0, 2}, {1, 1, 0});
  auto lp = nakajima_limit_series(part, 2);
  // p^2 / phi_2 = (1,2,5,...) * (1,1,2,...)
  CHECK(lp.coeff(0) == Rat(1));
  CHECK(lp.coeff(1) == Rat(3));
}

TEST_CASE("sweep through the framed ray") {
  // A_{(n,n,1)} on the CB quiver of K2 with w = (0,1)
  NakajimaInstance inst(k2(), {0, 1}, {0, 0}, {1, 1});
  QPolynomial a2 = kac_polynomial(inst.cb, {2, 2, 1});
  CHECK(a2 == from_int_coeffs({2, 2, 1}));
  QPolynomial a4 = kac_polynomial(inst.cb, {4, 4, 1});
  CHECK(a4 == from_int_coeffs({5, 7, 5, 2, 1}));

  SweepReport rep = nakajima_kac_sweep(inst, 1, 4, 2);
  REQUIRE(rep.rows.size() == 4);
  for (const auto& row : rep.rows) CHECK(row.indivisible);  // 1 at infinity
  CHECK(rep.limit == std::vector<Rat>{Rat(1), Rat(2), Rat(5)});

  CHECK(rep.coefficients[0].stabilized);
  CHECK(rep.coefficients[0].stable_value == 1);
  CHECK(rep.coefficients[0].verdict == Verdict::matches_limit);
  CHECK(rep.coefficients[1].stabilized);
  CHECK(rep.coefficients[1].stable_value == 2);
  CHECK(rep.coefficients[1].verdict == Verdict::matches_limit);
  // a_2 is still moving at this range
  CHECK_FALSE(rep.coefficients[2].stabilized);
  CHECK(rep.coefficients[2].verdict == Verdict::not_stabilized_in_range);
}

TEST_CASE("hilbert series") {
  BivariateSeries h = hilbert_series(1, 4, 4);
  long long grid[5][5] = {{1, 1, 1, 1, 1},
                          {0, 1, 2, 2, 2},
                          {0, 0, 2, 4, 5},
                          {0, 0, 0, 3, 7},
                          {0, 0, 0, 0, 5}};
  for (std::size_t i = 0; i <= 4; ++i)
    for (std::size_t j = 0; j <= 4; ++j) CHECK(h.coeff(i, j) == Rat(grid[i][j]));

  // columns match the Kac polynomials along the framed ray:
  // [t^i q^n] = [q^{n-i}] A_{(n,n,1)}
  Quiver cb = crawley_boevey(k2(), {0, 1});
  for (long long n = 1; n <= 4; ++n) {
    QPolynomial a = kac_polynomial(cb, {n, n, 1});
    for (long long i = 0; i <= n; ++i)
      CHECK(h.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(n)) ==
            a.coeff(static_cast<std::size_t>(n - i)));
  }

  CHECK(hilbert_series_for_rank(2, 2, 2).coeff(1, 1) == Rat(1));
  CHECK_THROWS_AS(hilbert_series_for_rank(1, 2, 2), validation_error);
  CHECK_THROWS_AS(hilbert_series(-1, 2, 2), validation_error);
}

TEST_CASE("hilbert coefficient identity") {
  for (long long b = 0; b <= 2; ++b)
    for (long long k = 0; k <= 6; ++k)
      for (long long a = 0; a <= 7; ++a) {
        auto id = hilbert_coefficient_identity_check(b, k, a);
        CHECK(id.equal);
        if (a >= k) {
          REQUIRE(id.limit.has_value());
          CHECK(id.limit_equal);
          // saturated: coefficient k of p^{b+1}
          CHECK(id.lhs == partition_gf(b + 1, static_cast<std::size_t>(k))
                              .coeff(static_cast<std::size_t>(k)));
        }
      }
  // lhs is nondecreasing in a at fixed (b, k)
  for (long long a = 1; a <= 8; ++a)
    CHECK(hilbert_coefficient_identity_check(2, 5, a).lhs >=
          hilbert_coefficient_identity_check(2, 5, a - 1).lhs);
  CHECK(p_at_most(2, 4) == 3);  // 4, 3+1, 2+2
}

TEST_CASE("multiplicity bound") {
  auto b1 = multiplicity_bound_report(hyperbolic(), {3, 3, 1});
  CHECK(b1.half_norm == 3);
  CHECK(b1.bound == 10);
  auto b2 = multiplicity_bound_report(hyperbolic(), {1, 1, 1});
  CHECK(b2.half_norm == 1);
  CHECK(b2.bound == 2);

  Quiver jordan(1);
  jordan.add_arrows(0, 0, 1);
  CHECK_THROWS_AS(multiplicity_bound_report(jordan, {1}), validation_error);
  // (d,d) > 2 has a negative index
  Quiver a2q(2);
  a2q.add_arrows(0, 1, 1);
  CHECK_THROWS_AS(multiplicity_bound_report(a2q, {2, 0}), validation_error);
}
