#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtoda/scalar_field.hpp"

namespace qtoda {

// Polynomial in q with ScalarField coefficients, dense, trailing coefficient
// of the vector (the q-leading one) nonzero.
class QPoly {
 public:
  QPoly() : rank_(0) {}
  explicit QPoly(int rank) : rank_(rank) {}

  static QPoly constant(ScalarField c);
  static QPoly one(int rank) { return constant(ScalarField::one(rank)); }
  static QPoly q_power(int rank, int k, ScalarField c);  // c * q^k, k >= 0
  static QPoly q_power(int rank, int k);

  int rank() const { return rank_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int valuation() const;                                          // lowest nonzero power
  const ScalarField& coeff(int k) const;
  const ScalarField& leading() const;
  void set_coeff(int k, ScalarField v);

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator-() const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);

  QPoly scaled(const ScalarField& s) const;
  QPoly times_q(int k) const;       // multiply by q^k, k >= 0
  QPoly shifted_down(int k) const;  // divide by q^k, requires valuation >= k

  QPoly permuted(const std::vector<int>& pi) const;
  QPoly inverted_lambda() const;

  // Coefficientwise field equality.
  bool operator==(const QPoly& o) const;

  std::string str() const;

 private:
  void trim();
  int rank_;
  std::vector<ScalarField> c_;
};

// Quotient with zero remainder; throws Error otherwise.
QPoly qpoly_divide_exact(const QPoly& a, const QPoly& b);

// Quotient when the division is exact, nothing otherwise.
std::optional<QPoly> qpoly_try_divide(const QPoly& a, const QPoly& b);

// Monic gcd over the coefficient field (subresultant remainder sequence on
// denominator-cleared polynomials).
QPoly qpoly_gcd(const QPoly& a, const QPoly& b);

}  // namespace qtoda
