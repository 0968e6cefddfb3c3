#include <random>

#include "doctest.h"
#include "torusalg/numfield.hpp"

using namespace torusalg;

namespace {

FieldScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return FieldScalar(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
                     make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
}

}  // namespace

TEST_SUITE("numfield") {
  TEST_CASE("multiplication table") {
    CHECK(FieldScalar::sqrt2() * FieldScalar::sqrt3() == FieldScalar::sqrt6());
    CHECK(FieldScalar::sqrt6() * FieldScalar::sqrt6() == FieldScalar(6));
    CHECK(FieldScalar::sqrt2() * FieldScalar::sqrt6() ==
          FieldScalar(2) * FieldScalar::sqrt3());

    // (1+sqrt2)(-1+sqrt2) = 1
    FieldScalar a = FieldScalar(1) + FieldScalar::sqrt2();
    FieldScalar b = FieldScalar(-1) + FieldScalar::sqrt2();
    CHECK(a * b == FieldScalar(1));

    // (2-sqrt3)(3-sqrt2) = 6 - 2 sqrt2 - 3 sqrt3 + sqrt6
    FieldScalar c = (FieldScalar(2) - FieldScalar::sqrt3()) * (FieldScalar(3) - FieldScalar::sqrt2());
    CHECK(c == FieldScalar(Rational(6), Rational(-2), Rational(-3), Rational(1)));
  }

  TEST_CASE("inverses") {
    CHECK((FieldScalar(1) + FieldScalar::sqrt2()).inverse() ==
          FieldScalar(-1) + FieldScalar::sqrt2());
    CHECK(FieldScalar::sqrt6().inverse() ==
          FieldScalar(Rational(0), Rational(0), Rational(0), make_rational(1, 6)));
    CHECK((FieldScalar(2) - FieldScalar::sqrt3()).inverse() ==
          FieldScalar(2) + FieldScalar::sqrt3());
    CHECK_THROWS_AS(FieldScalar(0).inverse(), std::domain_error);
  }

  TEST_CASE("sign determination") {
    CHECK(FieldScalar(0).sign() == 0);
    CHECK((FieldScalar(1) - FieldScalar::sqrt6()).sign() == -1);
    // 3 - sqrt2 - sqrt3/10 > 0
    FieldScalar x = FieldScalar(3) - FieldScalar::sqrt2() -
                    FieldScalar(Rational(0), Rational(0), make_rational(1, 10), Rational(0));
    CHECK(x.sign() == 1);
    // a value that needs some refinement: sqrt2 + sqrt3 - sqrt6/1 + tiny
    FieldScalar y = FieldScalar::sqrt2() * FieldScalar(239) - FieldScalar(338);  // 239 sqrt2 ~ 337.997
    CHECK(y.sign() == -1);
    CHECK((-y).sign() == 1);
  }

  TEST_CASE("ring axioms and sign compatibility on random elements") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
      FieldScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
      CHECK(a * (b * c) == (a * b) * c);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a * b).sign() == a.sign() * b.sign());
      CHECK((a.is_zero()) == (a.sign() == 0));
      if (!a.is_zero()) CHECK(a * a.inverse() == FieldScalar(1));
    }
  }

  TEST_CASE("complex field") {
    CFieldScalar i = CFieldScalar::i();
    CHECK(i * i == CFieldScalar(-1));
    CHECK(CFieldScalar::i_times(FieldScalar::sqrt2()) * CFieldScalar::i_times(FieldScalar::sqrt3()) ==
          CFieldScalar(-FieldScalar::sqrt6()));
    // 1/(i(2-sqrt3)) = -i(2+sqrt3)
    CFieldScalar z = CFieldScalar::i_times(FieldScalar(2) - FieldScalar::sqrt3());
    CHECK(z.inverse() == CFieldScalar(FieldScalar(0), -(FieldScalar(2) + FieldScalar::sqrt3())));
    CHECK_THROWS_AS(CFieldScalar().inverse(), std::domain_error);

    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
      CFieldScalar a(random_scalar(rng), random_scalar(rng));
      CFieldScalar b(random_scalar(rng), random_scalar(rng));
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == CFieldScalar(1));
      CHECK((a * b).conj() == a.conj() * b.conj());
    }
  }

  TEST_CASE("text round-trip") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
      FieldScalar a = random_scalar(rng);
      CHECK(FieldScalar::parse(a.str()) == a);
    }
    CHECK(FieldScalar::parse("0") == FieldScalar(0));
    CHECK(FieldScalar::parse("-299 - 79*sqrt2 + 222*sqrt3 + 12*sqrt6") ==
          FieldScalar(Rational(-299), Rational(-79), Rational(222), Rational(12)));
    CHECK(FieldScalar::parse("1/2 + sqrt2") ==
          FieldScalar(make_rational(1, 2), Rational(1), Rational(0), Rational(0)));
    CHECK(FieldScalar::parse(" - sqrt6 ") == -FieldScalar::sqrt6());
    CHECK_THROWS_AS(FieldScalar::parse("sqrt5"), std::invalid_argument);
    CHECK_THROWS_AS(FieldScalar::parse("1 + + 2"), std::invalid_argument);
    CHECK_THROWS_AS(FieldScalar::parse(""), std::invalid_argument);
  }
}
