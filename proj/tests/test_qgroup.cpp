#include "doctest.h"

#include <vector>

#include "qtoda/errors.hpp"
#include "qtoda/qgroup.hpp"

using namespace qtoda;

namespace {

QPoly pascal_low(int m, int k) {
  if (k < 0 || k > m) return QPoly(0);
  if (k == 0 || k == m) return QPoly::one(0);
  return pascal_low(m - 1, k - 1) + QPoly::q_power(0, k) * pascal_low(m - 1, k);
}

QPoly pascal_high(int m, int k) {
  if (k < 0 || k > m) return QPoly(0);
  if (k == 0 || k == m) return QPoly::one(0);
  return QPoly::q_power(0, m - k) * pascal_high(m - 1, k - 1) + pascal_high(m - 1, k);
}

Rational binomial(int m, int k) {
  Rational out(1);
  for (int j = 1; j <= k; ++j) {
    out *= m - k + j;
    out /= j;
  }
  return out;
}

}  // namespace

TEST_CASE("gaussian binomial values") {
  for (int m = 0; m <= 10; ++m) {
    CHECK(q_binomial(m, 0) == QRational::one(0));
    CHECK(q_binomial(m, m) == QRational::one(0));
  }

  QPoly two_one = QPoly::one(0) + QPoly::q_power(0, 1);
  CHECK(q_binomial(2, 1) == QRational::from_qpoly(two_one));

  QPoly four_two = QPoly::one(0) + QPoly::q_power(0, 1) +
                   QPoly::q_power(0, 2, ScalarField::constant(0, 2)) +
                   QPoly::q_power(0, 3) + QPoly::q_power(0, 4);
  CHECK(q_binomial(4, 2) == QRational::from_qpoly(four_two));

  CHECK_THROWS_AS(q_binomial(2, 3), Error);
  CHECK_THROWS_AS(q_binomial(2, -1), Error);
}

TEST_CASE("both pascal recurrences agree with the product form") {
  for (int m = 0; m <= 10; ++m)
    for (int k = 0; k <= m; ++k) {
      QPoly prod = q_binomial_poly(0, m, k);
      CHECK(prod == pascal_low(m, k));
      CHECK(prod == pascal_high(m, k));
    }
}

TEST_CASE("gaussian symmetry and classical limit") {
  for (int m = 0; m <= 10; ++m)
    for (int k = 0; k <= m; ++k) {
      QPoly b = q_binomial_poly(0, m, k);
      CHECK(b == q_binomial_poly(0, m, m - k));

      ScalarField at_one(0);
      for (int t = 0; t <= b.degree(); ++t) at_one = at_one + b.coeff(t);
      CHECK(at_one == ScalarField::constant(0, binomial(m, k)));
    }
}

TEST_CASE("q-binomial identity") {
  for (int m = 0; m <= 8; ++m) CHECK(verify_qbinom_identity(m));
}

TEST_CASE("serre scalar admissibility in type A") {
  for (int r = 1; r <= 5; ++r) {
    CartanData cd = cartan_type_a(r);
    REQUIRE(cd.rank == r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (i == j) continue;
        CHECK(serre_scalar_check(cd, i, j, 1));
        CHECK(serre_scalar_check(cd, i, j, -1));
      }
  }

  CartanData cd = cartan_type_a(3);
  CHECK_THROWS_AS(serre_scalar_check(cd, 1, 1, 1), Error);
  CHECK_THROWS_AS(serre_scalar_check(cd, 0, 1, 2), Error);

  // An offset off the admissible set is rejected: x = q^{-4} lies past the
  // last root q^{-2} of the collapsed product.
  cd.offset[1][0] = 3;
  CHECK_FALSE(serre_scalar_check(cd, 0, 1, -1));
}

TEST_CASE("cartan data shape") {
  CartanData cd = cartan_type_a(4);
  for (int i = 0; i < 4; ++i) {
    CHECK(cd.a[i][i] == 2);
    CHECK(cd.sym[i] == 1);
    for (int j = 0; j < 4; ++j) {
      if (std::abs(i - j) == 1) {
        CHECK(cd.a[i][j] == -1);
        CHECK(cd.offset[i][j] == (i > j ? 1 : -1));
      } else if (i != j) {
        CHECK(cd.a[i][j] == 0);
        CHECK(cd.offset[i][j] == 0);
      }
    }
  }
}
