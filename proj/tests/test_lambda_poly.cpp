#include "doctest.h"

#include <random>

#include "qtoda/errors.hpp"
#include "qtoda/lambda_poly.hpp"
#include "qtoda/limits.hpp"
#include "qtoda/parse.hpp"

using namespace qtoda;

namespace {

LambdaPoly L(int rank, int j, int p = 1) { return LambdaPoly::lambda_power(rank, j, p); }

LambdaPoly random_poly(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<int> nterms(1, 4), expo(-2, 2), coef(-3, 3);
  LambdaPoly p(rank);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    ExpVec e(rank);
    for (int i = 0; i < rank; ++i) e[i] = expo(rng);
    p.add_term(e, Rational(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("constants and zero handling") {
  LambdaPoly z(2);
  CHECK(z.is_zero());
  CHECK(z.str() == "0");
  CHECK(LambdaPoly::constant(2, 0).is_zero());
  LambdaPoly one = LambdaPoly::constant(2, 1);
  CHECK(one.is_one());
  CHECK(one.is_constant());
  CHECK(one.str() == "1");

  LambdaPoly p = L(2, 1);
  p.add_term({1, 0}, Rational(-1));
  CHECK(p.is_zero());
  CHECK((one - one).is_zero());
}

TEST_CASE("lambda_power expands the determinant relation") {
  CHECK(L(2, 0) == LambdaPoly::monomial(2, {-1, -1}));
  CHECK(L(2, 0, -2) == LambdaPoly::monomial(2, {2, 2}));
  CHECK(L(2, 2, -3) == LambdaPoly::monomial(2, {0, -3}));
  // Rank one: Λ0 is Λ1 inverted.
  CHECK(L(1, 0) == LambdaPoly::monomial(1, {-1}));
  CHECK(L(1, 0, 2) * L(1, 1, 2) == LambdaPoly::constant(1, 1));
  // Λ0·Λ1·...·Λr = 1 at any rank.
  for (int r = 1; r <= 3; ++r) {
    LambdaPoly prod = LambdaPoly::constant(r, 1);
    for (int j = 0; j <= r; ++j) prod = prod * L(r, j);
    CHECK(prod.is_one());
  }
}

TEST_CASE("graded-lex ordering and printing") {
  LambdaPoly p = L(2, 1) + L(2, 2) + LambdaPoly::constant(2, 1);
  CHECK(p.str() == "Λ1 + Λ2 + 1");
  CHECK(p.leading_exponent() == ExpVec{1, 0});

  LambdaPoly q = L(2, 2, 2) - L(2, 1);
  CHECK(q.str() == "Λ2^2 - Λ1");
  CHECK(q.leading_exponent() == ExpVec{0, 2});
  CHECK(q.leading_coeff() == 1);

  LambdaPoly m = LambdaPoly::monomial(2, {2, 1}, Rational(-3)) +
                 LambdaPoly::monomial(2, {-1, 0}, Rational(1, 2));
  CHECK(m.str() == "-3*Λ1^2*Λ2 + 1/2*Λ1^-1");
}

TEST_CASE("ring arithmetic") {
  LambdaPoly a = L(2, 1) + LambdaPoly::constant(2, 1);
  LambdaPoly b = L(2, 1) - LambdaPoly::constant(2, 1);
  CHECK(a * b == L(2, 1, 2) - LambdaPoly::constant(2, 1));
  CHECK(a * b == b * a);
  CHECK((-a) + a == LambdaPoly(2));
  CHECK(a.coeff({1, 0}) == 1);
  CHECK(a.coeff({0, 1}) == 0);
  CHECK((a * b).coeff_sum() == 0);

  std::mt19937 rng(20260815);
  for (int it = 0; it < 40; ++it) {
    LambdaPoly x = random_poly(rng, 2), y = random_poly(rng, 2), z = random_poly(rng, 2);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
  }
}

TEST_CASE("exponent floor and monomial content") {
  LambdaPoly p = L(1, 1, -2) + L(1, 1, 1);
  CHECK(p.exponent_floor() == ExpVec{-2});
  LambdaPoly lifted = p.times_monomial({2});
  CHECK(lifted == LambdaPoly::constant(1, 1) + L(1, 1, 3));
  CHECK(lifted.times_monomial({-2}) == p);

  LambdaPoly c1 = LambdaPoly::constant(1, 2) * L(1, 1) + LambdaPoly::constant(1, 4);
  CHECK(c1.content() == 2);
  LambdaPoly c2 = LambdaPoly::monomial(1, {1}, Rational(1, 2)) +
                  LambdaPoly::monomial(1, {-1}, Rational(3, 4));
  CHECK(c2.content() == Rational(1, 4));
  CHECK((-c1).content() == 2);
  CHECK(LambdaPoly(1).content() == 0);
}

TEST_CASE("permutation action") {
  // Rank one: the transposition swaps Λ0 and Λ1, so Λ1 -> Λ0 = Λ1^-1.
  CHECK(L(1, 1).permuted({1, 0}) == L(1, 0));
  CHECK(L(1, 1).permuted({0, 1}) == L(1, 1));

  // Λj -> Λpi[j], with the Λ0 relation maintained.
  std::vector<int> pi = {1, 0, 2};
  CHECK(L(2, 1).permuted(pi) == L(2, 0));
  CHECK(L(2, 0).permuted(pi) == L(2, 1));
  CHECK(L(2, 2).permuted(pi) == L(2, 2));

  std::vector<int> rho = {2, 0, 1};
  std::mt19937 rng(7);
  for (int it = 0; it < 20; ++it) {
    LambdaPoly x = random_poly(rng, 2), y = random_poly(rng, 2);
    CHECK((x * y).permuted(rho) == x.permuted(rho) * y.permuted(rho));
    CHECK((x + y).permuted(rho) == x.permuted(rho) + y.permuted(rho));
    // rho has order three.
    CHECK(x.permuted(rho).permuted(rho).permuted(rho) == x);
  }
}

TEST_CASE("exact division in the Laurent ring") {
  LambdaPoly a = L(1, 1, 2) - LambdaPoly::constant(1, 1);
  LambdaPoly b = L(1, 1) - LambdaPoly::constant(1, 1);
  auto q = LambdaPoly::try_divide(a, b);
  REQUIRE(q.has_value());
  CHECK(*q == L(1, 1) + LambdaPoly::constant(1, 1));

  // Monomial shifts are units, so Laurent content never blocks division.
  LambdaPoly a2 = L(1, 1) - L(1, 1, -1);
  LambdaPoly b2 = LambdaPoly::constant(1, 1) - L(1, 1, -1);
  auto q2 = LambdaPoly::try_divide(a2, b2);
  REQUIRE(q2.has_value());
  CHECK(*q2 == L(1, 1) + LambdaPoly::constant(1, 1));

  CHECK(!LambdaPoly::try_divide(b, a).has_value());
  // Dividing by a bare monomial always works: monomials are units here.
  CHECK(LambdaPoly::try_divide(L(2, 1) + LambdaPoly::constant(2, 1), L(2, 2)).has_value());
  CHECK(!LambdaPoly::try_divide(L(2, 1) + LambdaPoly::constant(2, 1),
                                L(2, 2) + LambdaPoly::constant(2, 1))
             .has_value());
  CHECK_THROWS_AS((void)LambdaPoly::try_divide(a, LambdaPoly(1)), DivisionByZero);
  CHECK(LambdaPoly::try_divide(LambdaPoly(1), b)->is_zero());

  // Multivariate case with a nontrivial quotient.
  LambdaPoly u = (L(2, 1) + L(2, 2)) * (L(2, 1, 3) - L(2, 2));
  auto q3 = LambdaPoly::try_divide(u, L(2, 1) + L(2, 2));
  REQUIRE(q3.has_value());
  CHECK(*q3 == L(2, 1, 3) - L(2, 2));
}

TEST_CASE("term limit guard trips and restores") {
  std::size_t saved = term_limit();
  set_term_limit(8);
  LambdaPoly small = (L(2, 1) + LambdaPoly::constant(2, 1)) * (L(2, 2) + LambdaPoly::constant(2, 1));
  CHECK(small.term_count() == 4);
  LambdaPoly wide(2);
  for (int k = 0; k < 6; ++k) wide.add_term({k, 0}, Rational(1));
  LambdaPoly tall(2);
  for (int k = 0; k < 6; ++k) tall.add_term({0, k}, Rational(1));
  CHECK_THROWS_AS(wide * tall, ResourceLimit);
  set_term_limit(saved);
  CHECK((wide * tall).term_count() == 36);
}

TEST_CASE("string round trip") {
  std::mt19937 rng(99);
  for (int it = 0; it < 30; ++it) {
    LambdaPoly x = random_poly(rng, 2);
    CHECK(parse_lambda_poly(2, x.str()) == x);
  }
  CHECK(parse_lambda_poly(2, "Λ0^2") == L(2, 0, 2));
  CHECK(parse_lambda_poly(1, "-Λ1^-1 + 2") == LambdaPoly::constant(1, 2) - L(1, 1, -1));
  CHECK_THROWS_AS(parse_lambda_poly(1, "Λ2"), ParseError);
  CHECK_THROWS_AS(parse_lambda_poly(1, "1 +"), ParseError);
}
