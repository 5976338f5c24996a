#include "doctest.h"

#include <random>

#include "qtoda/errors.hpp"
#include "qtoda/parse.hpp"
#include "qtoda/qrational.hpp"

using namespace qtoda;

namespace {

QRational R(int rank, const std::string& s) { return parse_qrational(rank, s); }

QPoly random_qpoly(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<int> deg(0, 3), expo(-1, 1), coef(-2, 2), nterm(1, 2);
  QPoly p(rank);
  int d = deg(rng);
  for (int k = 0; k <= d; ++k) {
    LambdaPoly c(rank);
    int n = nterm(rng);
    for (int t = 0; t < n; ++t) {
      ExpVec e(rank);
      for (int i = 0; i < rank; ++i) e[i] = expo(rng);
      c.add_term(e, Rational(coef(rng)));
    }
    p.set_coeff(k, ScalarField::from_poly(c));
  }
  return p;
}

QRational random_qrational(std::mt19937& rng, int rank) {
  QPoly den;
  do {
    den = random_qpoly(rng, rank);
  } while (den.is_zero());
  return QRational(random_qpoly(rng, rank), den);
}

}  // namespace

TEST_CASE("rational arithmetic reference points") {
  CHECK(R(1, "1/(1-q) + 1/(1-q^-1)") == QRational::one(1));
  CHECK(R(1, "(1-q^2)/(1-q)") == R(1, "1 + q"));
  CHECK(R(1, "(Λ1/(1-q)) * ((1-q)/Λ1)") == QRational::one(1));
  CHECK((R(1, "Λ1/(1-q)") * R(1, "(1-q)/Λ1")).is_one());
}

TEST_CASE("q-degree gap") {
  CHECK(R(1, "1/(1-q)").q_degree_gap() == 1);
  CHECK(R(1, "(1-q^3)/(1-q)").q_degree_gap() == -2);
  CHECK(R(1, "1/((1-q)*(1-Λ1^-2*q))").q_degree_gap() == 2);
  CHECK(QRational::one(1).q_degree_gap() == 0);
  CHECK(R(2, "q^-3").q_degree_gap() == 3);
}

TEST_CASE("substitution") {
  QRational qinv = R(1, "q^-1");
  CHECK(R(1, "1/(1-q)").substituted_q(qinv) == R(1, "-q/(1-q)"));
  CHECK(R(1, "q").substituted_q(R(1, "q^2")) == R(1, "q^2"));
  CHECK(R(1, "(1+q)/(1-Λ1*q)").substituted_q(qinv) == R(1, "(1+q^-1)/(1-Λ1*q^-1)"));
  CHECK(R(1, "1/(1-q)").substituted_q(R(1, "2")) == -QRational::one(1));
  CHECK_THROWS_AS(R(1, "1/(1-q)").substituted_q(QRational::one(1)), PoleError);
}

TEST_CASE("power substitution is the fast path of substitution") {
  std::mt19937 rng(20260815);
  for (int it = 0; it < 20; ++it) {
    QRational x = random_qrational(rng, 1);
    CHECK(x.substituted_q_power(-1) == x.substituted_q(R(1, "q^-1")));
    CHECK(x.substituted_q_power(2) == x.substituted_q(R(1, "q^2")));
    CHECK(x.substituted_q_power(-1).substituted_q_power(-1) == x);
  }
}

TEST_CASE("canonical shape") {
  QRational a = R(1, "(1-q^3)/(1-q)");
  CHECK(a.den().is_one());
  CHECK(a.num().degree() == 2);
  CHECK(a.str() == "q^2 + q + 1");

  // Common q-powers move wholly to one side; the denominator stays monic.
  QRational m = QRational::q_monomial(ScalarField::one(1), -2);
  CHECK(m.num().is_one());
  CHECK(m.den().degree() == 2);
  CHECK(m.den().valuation() == 2);
  CHECK(m.str() == "(1)/(q^2)");

  QRational g = R(2, "((1-Λ1*q)*(1-Λ1*q))/((1-Λ1*q)*(1-Λ2*q))");
  CHECK(g == R(2, "(1-Λ1*q)/(1-Λ2*q)"));
  CHECK(g.den().leading().is_one());
  CHECK(g.num().degree() == 1);

  QRational h = R(1, "(q^2 + q^3)/(q^4)");
  CHECK(h.num().valuation() == 0);
  CHECK(h.den().degree() == 2);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(31337);
  for (int it = 0; it < 15; ++it) {
    QRational a = random_qrational(rng, 1), b = random_qrational(rng, 1),
              c = random_qrational(rng, 1);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QRational::zero(1));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
  CHECK_THROWS_AS(QRational::one(1) / QRational::zero(1), DivisionByZero);
}

TEST_CASE("scalar bridge") {
  QRational c = R(2, "Λ1/(1 - Λ1*Λ2)");
  CHECK(c.is_q_constant());
  CHECK(c.as_scalar() == parse_scalar_field(2, "Λ1/(1 - Λ1*Λ2)"));
  CHECK(QRational::from_scalar(c.as_scalar()) == c);
  CHECK_FALSE(R(2, "1 - q").is_q_constant());
  CHECK(R(1, "1/(1-q)").scale(parse_scalar_field(1, "Λ1")) == R(1, "Λ1/(1-q)"));
}

TEST_CASE("permutation action") {
  std::vector<int> rho = {2, 0, 1};
  QRational x = R(2, "(1 - Λ1*q)/(1 - Λ2^-1*q^2)");
  CHECK(x.permuted(rho) == R(2, "(1 - Λ0*q)/(1 - Λ1^-1*q^2)"));
  CHECK(x.permuted(rho).permuted(rho).permuted(rho) == x);
}

TEST_CASE("qpoly exact division and gcd") {
  QPoly a = R(1, "(1-q^3)").num();
  QPoly b = R(1, "(1-q)").num();
  CHECK(qpoly_divide_exact(a, b) == R(1, "1+q+q^2").num());
  CHECK_THROWS_AS(qpoly_divide_exact(b, a), Error);

  QPoly g = qpoly_gcd(R(1, "(1-q^2)*(1-Λ1*q)").num(), R(1, "(1-q)*(1-q^3)").num());
  // gcd is monic and associates to (1 - q).
  CHECK(g.degree() == 1);
  CHECK(g.leading().is_one());
  CHECK(qpoly_divide_exact(R(1, "1-q").num(), g).is_constant());

  QPoly one = qpoly_gcd(R(1, "1-Λ1*q").num(), R(1, "1-Λ1^-1*q").num());
  CHECK(one.is_constant());
}

TEST_CASE("string round trip") {
  std::mt19937 rng(404);
  for (int it = 0; it < 25; ++it) {
    QRational x = random_qrational(rng, 2);
    CHECK(parse_qrational(2, x.str()) == x);
  }
  CHECK_THROWS_AS(parse_qrational(1, "q^"), ParseError);
  CHECK_THROWS_AS(parse_qrational(1, "(1"), ParseError);
  CHECK_THROWS_AS(parse_qrational(1, "1//2"), ParseError);
}
