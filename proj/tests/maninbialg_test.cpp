#include <random>
#include <sstream>

#include "doctest.h"
#include "torusalg/maninbialg.hpp"

using namespace torusalg;

namespace {
const DirectionTriple& D() { return DirectionTriple::standard(); }
}

TEST_SUITE("maninbialg") {
  TEST_CASE("duality normalization") {
    for (WaveVector m : {WaveVector{1, 0, 0}, WaveVector{1, -2, 1}, WaveVector{0, 2, 1}}) {
      CHECK(pairing_invariant(x_lower(m, D()), x_upper(m, D())) == CFieldScalar(1));
      CHECK(pairing_invariant(x_lower(m, D()), x_upper(-m, D())).is_zero());
    }
    DirectionTriple bad = DirectionTriple::unchecked(
        D().alpha(), D().beta(), Vec3F{FieldScalar(1), FieldScalar(0), FieldScalar(1)});
    CHECK_THROWS_AS(x_upper({0, 1, 0}, bad), std::domain_error);
  }

  TEST_CASE("structure constants") {
    CHECK(gamma_const({1, 0, 0}, {0, 1, 0}, D()) == FieldScalar::sqrt3());
    CHECK(gamma_const({1, 2, 1}, {1, 2, 1}, D()).is_zero());

    // mu((1,0,0),(0,1,0)) = i sqrt2 (5 - sqrt2 - sqrt3) / ((2-sqrt3)(3-sqrt2)),
    // canonically (2 + 17 sqrt2 + 7 sqrt6)/7 times i
    CFieldScalar mu = mu_const({1, 0, 0}, {0, 1, 0}, D());
    FieldScalar expected = FieldScalar::sqrt2() *
                           (FieldScalar(5) - FieldScalar::sqrt2() - FieldScalar::sqrt3()) *
                           ((FieldScalar(2) - FieldScalar::sqrt3()) *
                            (FieldScalar(3) - FieldScalar::sqrt2()))
                               .inverse();
    CHECK(mu == CFieldScalar::i_times(expected));
    CHECK(mu.re().is_zero());
    // canonical form (2 + 17 sqrt2 + 7 sqrt6)/7
    CHECK(mu.im() ==
          FieldScalar(make_rational(2, 7), make_rational(17, 7), Rational(0), Rational(1)));

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> c(-3, 3);
    for (int t = 0; t < 60; ++t) {
      WaveVector m{c(rng), c(rng), c(rng)}, n{c(rng), c(rng), c(rng)};
      if (m.is_zero() || n.is_zero()) continue;
      CHECK(gamma_const(m, n, D()) == -gamma_const(n, m, D()));
      CHECK(mu_const(m, n, D()) == -mu_const(n, m, D()));
      CHECK(mu_const(m, n, D()).re().is_zero());
    }
    CHECK(mu_const({1, 2, 0}, {-1, -2, 0}, D()).is_zero());
    CHECK_THROWS_AS(mu_const({0, 0, 0}, {1, 0, 0}, D()), std::domain_error);
  }

  TEST_CASE("bracket tables at range 1") {
    VerifyReport r = verify_bracket_tables(1, D());
    CHECK(r.all_pass());
    long total = 0;
    for (const auto& f : r.families) total += f.checked;
    CHECK(total > 26 * 26 * 3);
  }

  TEST_CASE("pairing table and bialgebra at range 1") {
    CHECK(verify_pairing_table(1, D()).all_pass());
    CHECK(verify_bialgebra(1, D()).all_pass());
  }

  TEST_CASE("corrupted gamma is caught") {
    Vec3F bad_gamma = D().gamma();
    bad_gamma[0] = bad_gamma[0] + FieldScalar(1);
    DirectionTriple bad = DirectionTriple::unchecked(D().alpha(), D().beta(), bad_gamma);
    VerifyReport r = verify_bracket_tables(1, bad);
    CHECK(!r.all_pass());
    bool lemma_failed = false;
    for (const auto& f : r.families)
      if (f.name.find("vector identity") != std::string::npos && f.failed > 0) lemma_failed = true;
    CHECK(lemma_failed);
  }

  TEST_CASE("structure table csv") {
    std::ostringstream os;
    structure_table_csv(1, D(), os);
    std::string text = os.str();
    CHECK(text.rfind("constant,m1,m2,m3,n1,n2,n3,k1,k2,k3,re,im\n", 0) == 0);
    long rows = -1;  // header
    for (char ch : text)
      if (ch == '\n') ++rows;
    CHECK(rows == 2 * 26 * 26);
    CHECK(text.find("gamma,1,0,0,0,1,0,1,1,0,sqrt3,0") != std::string::npos);
  }
}
