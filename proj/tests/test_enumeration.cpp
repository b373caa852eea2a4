#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace flagsub;
using namespace testsupport;

TEST_CASE("h-polynomials of standard complexes") {
  CHECK(h_polynomial(simplex({"a", "b", "c"})) == IntPolynomial{1});
  CHECK(h_polynomial(simplex_boundary({"a", "b", "c", "d"})) == IntPolynomial{1, 1, 1, 1});
  for (int d = 1; d <= 6; ++d) CHECK(h_polynomial(cross_polytope(d)) == IntPolynomial::one_plus_x_pow(d));
  CHECK(h_polynomial(SimplicialComplex{}) == IntPolynomial{1});
}

TEST_CASE("h-polynomial matches the face-by-face expansion") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const auto k = random_complex(rng, 1 + rng() % 8, 5);
    CHECK(h_polynomial(k) == brute_force_h(k));
    // h(1) is the number of top-dimensional faces
    CHECK(h_polynomial(k).eval(1) == BigInt(f_vector(k).counts.back()));
  }
}

TEST_CASE("h is multiplicative under joins") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_complex(rng, 1 + rng() % 5, 3);
    const auto b0 = random_complex(rng, 1 + rng() % 5, 3);
    const SimplicialComplex b(labels(b0.ground_size(), "y"), b0.facets());
    CHECK(h_polynomial(join(a, b)) == h_polynomial(a) * h_polynomial(b));
  }
}

TEST_CASE("gamma-vectors of cycles and cross-polytopes") {
  for (std::size_t n = 3; n <= 12; ++n) {
    auto g = gamma_vector(cycle(n));
    REQUIRE(std::holds_alternative<GammaVector>(g));
    CHECK(std::get<GammaVector>(g).gammas == std::vector<BigInt>{1, BigInt(static_cast<long long>(n) - 4)});
  }
  for (int d = 1; d <= 6; ++d) {
    auto g = std::get<GammaVector>(gamma_vector(cross_polytope(d)));
    CHECK(g.polynomial() == IntPolynomial{1});
  }
}

TEST_CASE("asymmetric h reports the first failing pair") {
  const auto g = gamma_vector(simplex({"a", "b", "c"}));
  REQUIRE(std::holds_alternative<SymmetryFailure>(g));
  CHECK(std::get<SymmetryFailure>(g) == SymmetryFailure{0, 3});
  CHECK_THROWS_AS(gamma_from_symmetric(IntPolynomial{1, 1, 1}, 1), Error);
}

TEST_CASE("gamma round trip") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = static_cast<int>(rng() % 9);
    std::vector<BigInt> gam;
    for (int i = 0; i <= d / 2; ++i) gam.emplace_back(static_cast<long long>(rng() % 41) - 20);
    const IntPolynomial h = expand_gamma(gam, d);
    const auto back = gamma_from_symmetric(h, d);
    REQUIRE(std::holds_alternative<GammaVector>(back));
    CHECK(std::get<GammaVector>(back).gammas == gam);
  }
}

TEST_CASE("Eulerian detection") {
  CHECK(is_eulerian(cross_polytope(3)));
  CHECK(is_eulerian(cycle(7)));
  CHECK(is_eulerian(simplex_boundary({"a", "b", "c", "d"})));
  CHECK_FALSE(is_eulerian(simplex({"a", "b", "c"})));
  CHECK_FALSE(is_eulerian(SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}})));
  CHECK(reduced_euler_characteristic(cross_polytope(3)) == 1);
  CHECK(reduced_euler_characteristic(simplex({"a", "b"})) == 0);
}

TEST_CASE("interior h-polynomial requires faces of the complex") {
  const auto k = simplex({"a", "b"});
  CHECK(interior_h_polynomial(k, {k.ground()}) == IntPolynomial{0, 0, 1});
  CHECK_THROWS_AS(interior_h_polynomial(k, {Face::singleton(5)}), Error);
}
