#include "doctest.h"

#include <random>

#include "qtoda/errors.hpp"
#include "qtoda/parse.hpp"
#include "qtoda/scalar_field.hpp"

using namespace qtoda;

namespace {

ScalarField S(int rank, const std::string& s) { return parse_scalar_field(rank, s); }

ScalarField random_scalar(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<int> nterms(1, 3), expo(-1, 2), coef(-2, 2);
  auto poly = [&] {
    LambdaPoly p(rank);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
      ExpVec e(rank);
      for (int i = 0; i < rank; ++i) e[i] = expo(rng);
      p.add_term(e, Rational(coef(rng)));
    }
    return p;
  };
  LambdaPoly den;
  do {
    den = poly();
  } while (den.is_zero());
  return ScalarField(poly(), den);
}

}  // namespace

TEST_CASE("construction and canonical shape") {
  ScalarField one = ScalarField::one(2);
  CHECK(one.is_one());
  CHECK(one.is_polynomial());
  CHECK(ScalarField::constant(2, 0).is_zero());

  // Monomial denominators are units and must be absorbed into the numerator.
  ScalarField m(LambdaPoly::constant(2, 1), LambdaPoly::lambda_power(2, 1, 2));
  CHECK(m.is_polynomial());
  CHECK(m.num() == LambdaPoly::lambda_power(2, 1, -2));

  // Denominator exponent floor is stripped and its leading coefficient is 1.
  ScalarField f = S(1, "1/(2*Λ1^-1 - 2*Λ1^-2)");
  CHECK(f.den().leading_coeff() == 1);
  CHECK(f.den().exponent_floor() == ExpVec{0});
  CHECK(f == S(1, "Λ1^2") / S(1, "2*Λ1 - 2"));

  CHECK_THROWS_AS(ScalarField(LambdaPoly::constant(1, 1), LambdaPoly(1)), DivisionByZero);
}

TEST_CASE("reduction catches exact quotients") {
  CHECK(S(1, "(1 - Λ1^2)/(1 - Λ1)") == S(1, "1 + Λ1"));
  CHECK(S(1, "(1 - Λ1^2)/(1 - Λ1)").is_polynomial());
  CHECK(S(2, "(Λ1^2 - Λ2^2)/(Λ1 + Λ2)") == S(2, "Λ1 - Λ2"));
  // Reciprocal of a polynomial quotient reduces too.
  CHECK(S(1, "(1 - Λ1)/(1 - Λ1^2)") * S(1, "1 + Λ1") == ScalarField::one(1));
}

TEST_CASE("telescoping sum over a two-point orbit") {
  // 1/(1-x) + 1/(1-1/x) = 1, the heart of every fixed-point cancellation.
  ScalarField x = S(2, "Λ1/Λ2");
  ScalarField lhs = (ScalarField::one(2) - x).inverse() +
                    (ScalarField::one(2) - x.inverse()).inverse();
  CHECK(lhs == ScalarField::one(2));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(20260815);
  for (int it = 0; it < 25; ++it) {
    ScalarField a = random_scalar(rng, 2), b = random_scalar(rng, 2), c = random_scalar(rng, 2);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == ScalarField(2));
    if (!b.is_zero()) {
      CHECK((a / b) * b == a);
      CHECK(b * b.inverse() == ScalarField::one(2));
    }
  }
}

TEST_CASE("division by zero is refused") {
  CHECK_THROWS_AS(ScalarField::one(1) / ScalarField(1), DivisionByZero);
  CHECK_THROWS_AS(ScalarField(1).inverse(), DivisionByZero);
}

TEST_CASE("permutation action is a field homomorphism") {
  std::vector<int> rho = {2, 0, 1};
  std::mt19937 rng(11);
  for (int it = 0; it < 15; ++it) {
    ScalarField a = random_scalar(rng, 2), b = random_scalar(rng, 2);
    CHECK((a * b).permuted(rho) == a.permuted(rho) * b.permuted(rho));
    CHECK((a + b).permuted(rho) == a.permuted(rho) + b.permuted(rho));
    CHECK(a.permuted(rho).permuted(rho).permuted(rho) == a);
  }
  CHECK(S(2, "Λ0").permuted({1, 0, 2}) == S(2, "Λ1"));
}

TEST_CASE("equality is semantic, not representational") {
  ScalarField a = S(2, "(1 - Λ1^2*Λ2)/(1 - Λ1*Λ2)");
  ScalarField b = S(2, "(Λ1^-1 - Λ1*Λ2)/(Λ1^-1 - Λ2)");
  CHECK(a == b);
  CHECK_FALSE(a == a + ScalarField::one(2));
}

TEST_CASE("string round trip") {
  std::mt19937 rng(5);
  for (int it = 0; it < 25; ++it) {
    ScalarField a = random_scalar(rng, 2);
    CHECK(parse_scalar_field(2, a.str()) == a);
  }
  CHECK_THROWS_AS(parse_scalar_field(1, "1 - q"), ParseError);
}
