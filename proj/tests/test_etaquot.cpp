#include <doctest.h>

#include <random>
#include <vector>

#include "eispart/etaquot.hpp"

using namespace eispart;

TEST_SUITE("etaquot") {

TEST_CASE("cusp orders of eta quotients") {
  // eta(z)^2 eta(2z)^2 eta(3z)^2 eta(6z)^2, the first weight-4 cusp form on
  // Gamma_0(6): simple zero at every cusp.
  EtaQuotient s1 = s_basis_exponents(2, 1);
  for (long c : {1L, 2L, 3L, 6L}) CHECK(eta_cusp_order(s1, c) == Rational(1));
  CuspOrderTable t1 = total_cusp_order(s1);
  CHECK(t1.total == Rational(4));

  // eta(z)^16 / eta(2z)^8 vanishes only at the cusp 1 of Gamma_0(2)...
  EtaQuotient a(Level(2), {{1, 16}, {2, -8}});
  CHECK(eta_cusp_order(a, 1) == Rational(1));
  CHECK(eta_cusp_order(a, 2) == Rational(0));
  CHECK(total_cusp_order(a).total == Rational(1));

  // ... and eta(2z)^16 / eta(z)^8 only at the cusp 2 (infinity).
  EtaQuotient b(Level(2), {{1, -8}, {2, 16}});
  CHECK(eta_cusp_order(b, 1) == Rational(0));
  CHECK(eta_cusp_order(b, 2) == Rational(1));
  CHECK(total_cusp_order(b).total == Rational(1));

  // Orders need not be integers: eta(z)^2/eta(2z) has order 1/8 at cusp 1.
  EtaQuotient g(Level(2), {{1, 2}, {2, -1}});
  CHECK(eta_cusp_order(g, 1) == Rational(1, 8));
  CHECK(eta_cusp_order(g, 2) == Rational(0));
  CHECK(total_cusp_order(g).total == Rational(1, 8));

  CHECK_THROWS_AS(eta_cusp_order(a, 3), std::invalid_argument);

  // The order at each cusp is linear in the exponent vector.
  EtaQuotient q(Level(6), {{1, 3}, {2, -1}, {3, 2}, {6, -2}});
  EtaQuotient q2(Level(6), {{1, 6}, {2, -2}, {3, 4}, {6, -4}});
  for (long c : {1L, 2L, 3L, 6L})
    CHECK(eta_cusp_order(q2, c) == Rational(2) * eta_cusp_order(q, c));
}

TEST_CASE("total cusp order is forced by the exponent sum") {
  std::mt19937_64 rng(0x70707ULL);
  std::uniform_int_distribution<long> small(-4, 4);
  int done = 0;
  while (done < 8) {
    std::map<long, long> exps;
    long sum = 0;
    for (long d : {1L, 2L, 3L, 6L}) {
      exps[d] = small(rng);
      sum += exps[d];
    }
    if (exps[1] == 0 && exps[2] == 0 && exps[3] == 0 && exps[6] == 0) continue;
    CuspOrderTable t = total_cusp_order(EtaQuotient(Level(6), exps));
    CHECK(t.total == Rational(sum, 24) * Rational(12));
    ++done;
  }
}

TEST_CASE("triangular basis exponents") {
  EtaQuotient s1 = s_basis_exponents(2, 1);
  CHECK(s1.exponent_at(1) == 2);
  CHECK(s1.exponent_at(2) == 2);
  CHECK(s1.exponent_at(3) == 2);
  CHECK(s1.exponent_at(6) == 2);

  for (long k = 2; k <= 6; ++k)
    for (long i = 1; i <= 2 * k - 3; ++i) {
      EtaQuotient e = s_basis_exponents(k, i);
      // Weight 2k and leading power q^i.
      CHECK(e.exponent_sum() == 4 * k);
      CHECK(e.prefactor_exponent() == Rational(i));
    }

  CHECK_THROWS_WITH_AS(s_basis_exponents(2, 2),
                       "basis index i must satisfy 1 <= i <= 2k-3 (got i=2 "
                       "for k=2)",
                       std::invalid_argument);
  CHECK_THROWS_AS(s_basis_exponents(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(s_basis_exponents(1, 1), std::invalid_argument);
}

TEST_CASE("weight-4 basis element expansion") {
  QSeries s = s_basis_element(2, 1, 16);
  std::vector<long> expected{0, 1, -2, -3, 4,  6,   6,  -16,
                             -8, 9, -12, 12, -12, 38, 32, -18};
  for (long n = 0; n < 16; ++n)
    CHECK(s[n] == Rational(expected[static_cast<size_t>(n)]));
}

TEST_CASE("basis is triangular with unit leading coefficients") {
  for (long k = 2; k <= 5; ++k) {
    std::vector<QSeries> basis = s_basis(k, 2 * k + 5);
    REQUIRE(basis.size() == static_cast<size_t>(2 * k - 3));
    for (long i = 1; i <= 2 * k - 3; ++i) {
      const QSeries& s = basis[static_cast<size_t>(i - 1)];
      for (long j = 0; j < i; ++j) CHECK(s[j] == Rational(0));
      CHECK(s[i] == Rational(1));
      // The order at the cusp 6 (infinity) matches the leading power, and the
      // orders over all cusps add up to the weight count 2k.
      EtaQuotient e = s_basis_exponents(k, i);
      CHECK(eta_cusp_order(e, 6) == Rational(i));
      CHECK(total_cusp_order(e).total == Rational(2 * k));
    }
    // The cache hands out identical copies.
    CHECK(s_basis(k, 2 * k + 5) == basis);
  }
}

TEST_CASE("decomposition against the triangular basis") {
  // Recompose-then-decompose round trip at weight 6 (three basis elements).
  std::vector<Rational> want{Rational(3), Rational(0), Rational(-7, 2)};
  std::vector<QSeries> basis = s_basis(3, 15);
  QSeries f(15);
  for (size_t i = 0; i < want.size(); ++i)
    f = series_add(f, series_scale(want[i], basis[i]));
  CHECK(decompose_cusp_level6(f, 3) == want);

  // The zero series decomposes with all-zero coefficients.
  CHECK(decompose_cusp_level6(QSeries(12), 4) ==
        std::vector<Rational>(5, Rational(0)));

  // A series outside the span leaves a nonzero remainder.
  QSeries outside(std::vector<Rational>(8, Rational(1)));
  outside.at(0) = Rational(0);
  CHECK_THROWS_AS(decompose_cusp_level6(outside, 2), verification_error);

  // Too few coefficients to reach every leading term.
  CHECK_THROWS_AS(decompose_cusp_level6(QSeries(3), 4), std::invalid_argument);
}

TEST_CASE("signed and unsigned square generating functions") {
  QSeries g = g_series(20);
  std::vector<long> expected{1, -2, 0, 0, 2, 0, 0, 0, 0, -2,
                             0, 0,  0, 0, 0, 0, 2, 0, 0, 0};
  for (long n = 0; n < 20; ++n)
    CHECK(g[n] == Rational(expected[static_cast<size_t>(n)]));

  CHECK(phi_series(20) == half_shift(g));

  // phi is the theta series of Z: 1 at 0 and 2 at each positive square.
  QSeries phi = phi_series(201);
  for (long n = 0; n < 201; ++n) {
    long root = 0;
    while (root * root < n) ++root;
    Rational expect = (n == 0) ? Rational(1)
                               : (root * root == n ? Rational(2) : Rational(0));
    if (phi[n] != expect) FAIL("phi coefficient wrong at n=", n);
  }
}

}  // TEST_SUITE
