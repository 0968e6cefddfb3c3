#include <random>

#include "doctest.h"
#include "torusalg/lattice.hpp"

using namespace torusalg;

TEST_SUITE("lattice") {
  TEST_CASE("standard direction triple") {
    const DirectionTriple& d = DirectionTriple::standard();
    CHECK(d.gamma()[0] == FieldScalar(2) - FieldScalar::sqrt3());
    CHECK(d.gamma()[1] == FieldScalar(3) - FieldScalar::sqrt2());
    CHECK(d.gamma()[2] == FieldScalar(1) - FieldScalar::sqrt6());
    CHECK(crossf(d.alpha(), d.beta()) == d.gamma());
    CHECK(dot(d.alpha(), d.alpha()) == FieldScalar(6));
    CHECK(dot(d.alpha(), d.gamma()).is_zero());
    CHECK(dot(d.beta(), d.gamma()).is_zero());
    CHECK(d.checked_range() == 8);
  }

  TEST_CASE("dot and cross") {
    const DirectionTriple& d = DirectionTriple::standard();
    CHECK(d.alpha_dot({1, 0, 0}) == FieldScalar(1));
    CHECK(d.beta_dot({0, -1, 0}) == FieldScalar(-1));
    // gamma.(1,1,1) = 6 - sqrt2 - sqrt3 - sqrt6
    CHECK(d.gamma_dot({1, 1, 1}) ==
          FieldScalar(Rational(6), Rational(-1), Rational(-1), Rational(-1)));
    CHECK(cross(WaveVector{1, 0, 0}, WaveVector{0, 1, 0}) == WaveVector{0, 0, 1});
    // alpha x (1,0,0) = (0, sqrt3, -sqrt2)
    Vec3F am = crossf(d.alpha(), WaveVector{1, 0, 0});
    CHECK(am[0].is_zero());
    CHECK(am[1] == FieldScalar::sqrt3());
    CHECK(am[2] == -FieldScalar::sqrt2());

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> c(-9, 9);
    for (int t = 0; t < 100; ++t) {
      WaveVector m{c(rng), c(rng), c(rng)}, n{c(rng), c(rng), c(rng)};
      CHECK(cross(m, n) == -cross(n, m));
      CHECK(cross(m, m).is_zero());
      CHECK(dot(cross(m, n), m) == 0);
    }
  }

  TEST_CASE("no-resonance") {
    const DirectionTriple& d = DirectionTriple::standard();
    CHECK(d.no_resonance({1, 0, 0}));
    CHECK(d.no_resonance({0, 0, 1}));
    CHECK(d.no_resonance({2, -3, 1}));
    CHECK_THROWS_AS(d.no_resonance({0, 0, 0}), std::domain_error);

    // gamma.m = (2m1+3m2+m3) - m2 sqrt2 - m1 sqrt3 - m3 sqrt6: vanishes only at m = 0
    for (std::int64_t x = -8; x <= 8; ++x)
      for (std::int64_t y = -8; y <= 8; ++y)
        for (std::int64_t z = -8; z <= 8; ++z) {
          WaveVector m{x, y, z};
          if (m.is_zero()) continue;
          FieldScalar g = d.gamma_dot(m);
          CHECK(g == FieldScalar(Rational(2 * x + 3 * y + z), Rational(-y), Rational(-x),
                                 Rational(-z)));
          if (!d.no_resonance(m)) FAIL("resonance at ", m.str());
        }
  }

  TEST_CASE("construction rejects resonant triples") {
    // beta = -alpha makes gamma = 0: resonant immediately
    Vec3F alpha = {FieldScalar(1), FieldScalar::sqrt2(), FieldScalar::sqrt3()};
    Vec3F beta = {-FieldScalar(1), -FieldScalar::sqrt2(), -FieldScalar::sqrt3()};
    CHECK_THROWS_AS(DirectionTriple::make(alpha, beta, 2), std::domain_error);
    // rational alpha resonates against integer vectors
    Vec3F ra = {FieldScalar(1), FieldScalar(2), FieldScalar(3)};
    Vec3F rb = {FieldScalar::sqrt3(), FieldScalar(1), FieldScalar::sqrt2()};
    CHECK_THROWS_AS(DirectionTriple::make(ra, rb, 2), std::domain_error);
  }
}
