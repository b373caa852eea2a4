#include <catch_amalgamated.hpp>

#include <random>

#include "flagsub/polynomial.hpp"

using flagsub::BigInt;
using flagsub::IntPolynomial;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng) {
  std::vector<BigInt> c(rng() % 6);
  for (auto& x : c) x = static_cast<long long>(rng() % 21) - 10;
  return IntPolynomial(c);
}

}  // namespace

TEST_CASE("normalization and degree") {
  CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
}

TEST_CASE("formatting") {
  CHECK(IntPolynomial{0, 1, 7, -1}.str() == "x + 7x^2 - x^3");
  CHECK(IntPolynomial{0, 0, -1}.str() == "-x^2");
  CHECK(IntPolynomial{}.str() == "0");
  CHECK(IntPolynomial{1}.str() == "1");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK((a * b).eval(3) == a.eval(3) * b.eval(3));
  }
}

TEST_CASE("reversal") {
  CHECK(IntPolynomial{1, 2}.reversed(3) == IntPolynomial{0, 0, 2, 1});
  CHECK_THROWS(IntPolynomial{1, 2, 3}.reversed(1));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(rng);
    CHECK(a.reversed(6).reversed(6) == a);
  }
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
  const auto p = IntPolynomial::one_plus_x_pow(100);
  CHECK(p[50] == BigInt("100891344545564193334812497256"));
  CHECK(p.eval(1) == BigInt(1) << 100);
}

TEST_CASE("order predicates") {
  CHECK(dominates(IntPolynomial{1, 2}, IntPolynomial{1, 1}));
  CHECK_FALSE(dominates(IntPolynomial{1}, IntPolynomial{1, 1}));
  CHECK(IntPolynomial{1, 3, 3, 1}.unimodal());
  CHECK_FALSE(IntPolynomial{1, 0, 1}.unimodal());
  CHECK(IntPolynomial{0, 1, 1}.unimodal());
  CHECK_FALSE(IntPolynomial{0, 1, -2}.nonnegative());
}
