#pragma once

#include <string>
#include <vector>

#include "qtoda/lambda_poly.hpp"

namespace qtoda {

// Element of the fraction field Q(Λ1..Λr), stored as num/den with den != 0.
// Canonical shape after normalize(): den has no monomial content (its
// exponent floor is zero), den's leading coefficient is 1, and the fraction
// has been put through the reduction ladder below.  Reduction is best-effort
// (monomial content, full divisibility either way); semantic equality is
// always decided by cross-multiplication, so an unreduced survivor is slower,
// never wrong.
class ScalarField {
 public:
  ScalarField() : num_(0), den_(LambdaPoly::constant(0, 1)) {}
  explicit ScalarField(int rank)
      : num_(rank), den_(LambdaPoly::constant(rank, 1)) {}
  ScalarField(LambdaPoly num, LambdaPoly den);

  static ScalarField constant(int rank, const Rational& c);
  static ScalarField from_poly(LambdaPoly p);
  static ScalarField monomial(int rank, const ExpVec& e, const Rational& c = Rational(1));
  static ScalarField lambda_power(int rank, int j, int power = 1);
  static ScalarField one(int rank) { return constant(rank, 1); }

  int rank() const { return num_.rank(); }
  const LambdaPoly& num() const { return num_; }
  const LambdaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(const ScalarField& o);
  ScalarField& operator/=(const ScalarField& o);
  ScalarField operator-() const;
  ScalarField inverse() const;

  friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
  friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
  friend ScalarField operator*(ScalarField a, const ScalarField& b) { return a *= b; }
  friend ScalarField operator/(ScalarField a, const ScalarField& b) { return a /= b; }

  ScalarField permuted(const std::vector<int>& pi) const;
  ScalarField inverted_lambda() const;

  // Field equality by cross-multiplication.
  bool operator==(const ScalarField& o) const;

  std::string str() const;

 private:
  void normalize();
  LambdaPoly num_, den_;
};

}  // namespace qtoda
