#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qstab/quiver.hpp"

using namespace qstab;

namespace {

Quiver k2() {
  Quiver q(2);
  q.add_arrows(0, 1, 2);
  return q;
}

Quiver k3() {
  Quiver q(2);
  q.add_arrows(0, 1, 3);
  return q;
}

Quiver a2() {
  Quiver q(2);
  q.add_arrows(0, 1, 1);
  return q;
}

Quiver s2() { return double_quiver(k2()); }

Quiver hyperbolic() {
  Quiver q(3);
  q.add_arrows(0, 1, 2);
  q.add_arrows(1, 2, 1);
  return q;
}

Quiver transpose(const Quiver& q) {
  Quiver r(q.n_vertices(), q.labels());
  for (std::size_t i = 0; i < q.n_vertices(); ++i)
    for (std::size_t j = 0; j < q.n_vertices(); ++j) r.add_arrows(j, i, q.arrows(i, j));
  return r;
}

} // namespace

TEST_CASE("euler and cartan forms") {
  CHECK(euler_form(k3(), {1, 1}, {1, 1}) == -1);
  CHECK(cartan_form(s2(), {1, 1}, {1, 1}) == -4);
  CHECK(euler_form(a2(), {1, 0}, {0, 1}) == -1);
  CHECK(euler_form(a2(), {0, 1}, {1, 0}) == 0);

  // cartan is symmetric; euler generally is not
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> dim(0, 4);
  for (int t = 0; t < 20; ++t) {
    Quiver q(3);
    q.add_arrows(rng() % 3, rng() % 3, 1 + rng() % 2);
    DimVector d{dim(rng), dim(rng), dim(rng)};
    DimVector v{dim(rng), dim(rng), dim(rng)};
    CHECK(cartan_form(q, d, v) == cartan_form(q, v, d));
    CHECK(cartan_form(q, d, v) == euler_form(q, d, v) + euler_form(q, v, d));
    // cartan only sees the underlying graph
    CHECK(cartan_form(q, d, v) == cartan_form(transpose(q), d, v));
  }
  CHECK_THROWS_AS(euler_form(k2(), {1}, {1, 1}), validation_error);
}

TEST_CASE("symmetry and loops") {
  CHECK(is_symmetric(s2()));
  CHECK_FALSE(is_symmetric(k3()));
  CHECK(is_symmetric(Quiver(1)));
  Quiver j(1);
  j.add_arrows(0, 0, 1);
  CHECK(j.has_loops());
  CHECK_FALSE(k2().has_loops());
  CHECK(j.underlying_edges(0, 0) == 1);
  CHECK(k2().underlying_edges(1, 0) == 2);
}

TEST_CASE("support components and distances") {
  // path 1 - 2 - 3, delta on the endpoints
  Quiver p(3);
  p.add_arrows(0, 1, 1);
  p.add_arrows(1, 2, 1);
  auto sc = support_components(p, {1, 0, 1});
  REQUIRE(sc.components.size() == 2);
  CHECK(sc.distances[0][1] == 2);

  auto one = support_components(p, {1, 1, 0});
  CHECK(one.components.size() == 1);

  // unreachable components
  Quiver disc(4);
  disc.add_arrows(0, 1, 1);
  disc.add_arrows(2, 3, 1);
  auto far = support_components(disc, {1, 0, 1, 0});
  REQUIRE(far.components.size() == 2);
  CHECK(far.distances[0][1] == -1);
}

TEST_CASE("star condition") {
  // S2: <e_i, delta> = -1 at every vertex
  auto rep = check_star(s2(), {1, 1}, BilinearForm::euler, Strictness::strict);
  CHECK(rep.overall);
  CHECK(rep.vertices[0].left_pairing == -1);

  // doubled A2: pairings hit 0, so strict fails but weak holds
  auto da2 = double_quiver(a2());
  CHECK_FALSE(check_star(da2, {1, 1}, BilinearForm::cartan, Strictness::strict).overall);
  CHECK(check_star(da2, {1, 1}, BilinearForm::cartan, Strictness::weak).overall);
  // plain A2 even fails weakly: <e_1, delta> = 1
  CHECK_FALSE(check_star(a2(), {1, 1}, BilinearForm::euler, Strictness::weak).overall);

  // distance-2 components pass under the proof reading, fail literally
  Quiver p(3);
  p.add_arrows(0, 1, 1);
  p.add_arrows(1, 2, 1);
  auto proof = check_star(p, {1, 0, 1}, BilinearForm::cartan, Strictness::weak,
                          DistInterpretation::proof);
  auto literal = check_star(p, {1, 0, 1}, BilinearForm::cartan, Strictness::weak,
                            DistInterpretation::literal);
  CHECK(proof.components_ok);
  CHECK_FALSE(literal.components_ok);
  CHECK(proof.max_component_distance == 2);

  // hyperbolic quiver, delta = (1,1,0): weak holds over cartan, strict fails
  CHECK(check_star(hyperbolic(), {1, 1, 0}, BilinearForm::cartan, Strictness::weak).overall);
  CHECK_FALSE(
      check_star(hyperbolic(), {1, 1, 0}, BilinearForm::cartan, Strictness::strict).overall);

  CHECK_THROWS_AS(check_star(k2(), {0, 0}, BilinearForm::euler, Strictness::strict),
                  validation_error);
}

TEST_CASE("root types by reflection") {
  CHECK(root_type(k2(), {1, 0}) == RootType::real);
  CHECK(root_type(k2(), {1, 1}) == RootType::imaginary);  // null root of affine A1
  CHECK(root_type(k2(), {2, 1}) == RootType::real);
  CHECK(root_type(k3(), {1, 1}) == RootType::imaginary);
  CHECK(root_type(k3(), {2, 1}) == RootType::imaginary);
  CHECK(root_type(a2(), {1, 1}) == RootType::real);
  CHECK(root_type(a2(), {2, 1}) == RootType::not_root);
  // disconnected support cannot be a root
  Quiver disc(2);
  CHECK(root_type(disc, {1, 1}) == RootType::not_root);
  Quiver j(1);
  j.add_arrows(0, 0, 1);
  CHECK_THROWS_AS(root_type(j, {1}), validation_error);
  CHECK_THROWS_AS(root_type(k2(), {0, 0}), validation_error);
}

TEST_CASE("slopes and generic characters") {
  CHECK(slope({1, 0}, {1, 1}) == Rat(1, 2));
  CHECK(slope({-2, 1}, {2, 1}) == Rat(-1));
  CHECK_THROWS_AS(slope({1}, {1, 1}), validation_error);

  CHECK_FALSE(is_generic(k2(), {1, 1}, {0, 0}));
  CHECK(is_generic(k2(), {1, 1}, {-1, 0}));
  Character chi = generic_character(k2(), {1, 1});
  CHECK(chi == Character{-1, 0});  // deterministic search order
  CHECK(is_generic(k2(), {1, 1}, chi));

  // divisible d has no generic character at all
  CHECK_FALSE(is_generic(k2(), {2, 2}, {-1, 0}));
  CHECK_THROWS_AS(generic_character(k2(), {2, 2}), validation_error);

  // every vector of smaller max-norm is non-generic
  Character chi3 = generic_character(k3(), {2, 1});
  for (long long a = -1; a <= 1; ++a)
    for (long long b = -1; b <= 1; ++b)
      if (std::max(std::abs(a), std::abs(b)) <
          std::max(std::abs(chi3[0]), std::abs(chi3[1])))
        CHECK_FALSE(is_generic(k3(), {2, 1}, {a, b}));
}

TEST_CASE("derived quivers") {
  Quiver dbl = double_quiver(k2());
  CHECK(dbl.arrows(0, 1) == 2);
  CHECK(dbl.arrows(1, 0) == 2);
  CHECK(is_symmetric(dbl));

  Quiver fr = framed_quiver(k2());
  REQUIRE(fr.n_vertices() == 4);
  CHECK(fr.arrows(2, 0) == 1);
  CHECK(fr.arrows(3, 1) == 1);
  CHECK(fr.labels()[2] == "f:1");

  Quiver cb = crawley_boevey(k2(), {0, 1});
  REQUIRE(cb.n_vertices() == 3);
  CHECK(cb.labels()[2] == "inf");
  CHECK(cb.arrows(2, 1) == 1);
  CHECK(cb.arrows(2, 0) == 0);
  CHECK(cb_dim_vector({2, 2}) == DimVector{2, 2, 1});
  CHECK(is_indivisible(cb_dim_vector({4, 6})));
  CHECK_THROWS_AS(crawley_boevey(k2(), {0, 0}), validation_error);

  // <(d,1),(v,1)> on Q_w = <d,v> on Q + 1 - w.v
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> small(0, 3);
  for (int t = 0; t < 20; ++t) {
    Quiver q(2);
    q.add_arrows(rng() % 2, rng() % 2 ? 1 : 0, small(rng));
    DimVector w{small(rng), 1 + small(rng)};
    DimVector d{small(rng), small(rng)}, v{small(rng), small(rng)};
    Quiver qw = crawley_boevey(q, w);
    long long wv = w[0] * v[0] + w[1] * v[1];
    CHECK(euler_form(qw, cb_dim_vector(d), cb_dim_vector(v)) ==
          euler_form(q, d, v) + 1 - wv);
  }
}

TEST_CASE("finite field counts") {
  auto c = finite_field_counts(k2(), {1, 1});
  CHECK(c.rep_count == QPolynomial::monomial(2));
  // |GL_1|^2 = (q-1)^2
  CHECK(c.gl_count == from_int_coeffs({1, -2, 1}));
  auto c2 = finite_field_counts(a2(), {2, 1});
  CHECK(c2.rep_count == QPolynomial::monomial(2));
  // |GL_2| |GL_1| = (q^2-1)(q^2-q)(q-1)
  CHECK(c2.gl_count(Rat(2)) == Rat(3 * 2 * 1));
  CHECK(c2.gl_count(Rat(3)) == Rat(8 * 6 * 2));
}

TEST_CASE("dimension vector helpers") {
  CHECK(total({1, 2, 3}) == 6);
  CHECK(is_zero(DimVector{0, 0}));
  CHECK(is_indivisible(DimVector{2, 3}));
  CHECK_FALSE(is_indivisible(DimVector{2, 4}));
  CHECK_THROWS_AS(is_indivisible(DimVector{0, 0}), validation_error);
  CHECK(support(DimVector{0, 2, 0, 1}) == std::vector<std::size_t>{1, 3});
  CHECK(leq({1, 2}, {1, 3}));
  CHECK_FALSE(leq({2, 0}, {1, 3}));
}
