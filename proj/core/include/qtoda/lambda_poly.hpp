#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtoda/rational.hpp"

namespace qtoda {

// Exponent vector for the torus characters Λ1..Λr.  Λ0 is not an independent
// variable: Λ0·Λ1···Λr = 1, so Λ0 enters every formula as the monomial
// (Λ1···Λr)^-1 and exponent vectors stay in Z^r.
using ExpVec = std::vector<int>;

int total_degree(const ExpVec& e);

// Graded-lexicographic order, larger terms first, so begin() of a term map is
// the leading term and printing follows map order.
struct GradedLexBefore {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Laurent polynomial in Λ1..Λr with exact rational coefficients.  The term
// map never stores a zero coefficient, which makes representational equality
// the same thing as algebraic equality.
class LambdaPoly {
 public:
  using TermMap = std::map<ExpVec, Rational, GradedLexBefore>;

  LambdaPoly() : rank_(0) {}
  explicit LambdaPoly(int rank) : rank_(rank) {}

  static LambdaPoly constant(int rank, const Rational& c);
  static LambdaPoly monomial(int rank, const ExpVec& e, const Rational& c = Rational(1));
  // Λj^power with 0 <= j <= rank; j = 0 expands through the product relation.
  static LambdaPoly lambda_power(int rank, int j, int power = 1);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  const ExpVec& leading_exponent() const;
  const Rational& leading_coeff() const;
  Rational coeff(const ExpVec& e) const;
  // Evaluation at Λ1 = ... = Λr = 1 (dimension counts in character tests).
  Rational coeff_sum() const;

  void add_term(const ExpVec& e, const Rational& c);

  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  LambdaPoly& operator*=(const Rational& c);
  LambdaPoly operator-() const;

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);

  // Componentwise minimum of all exponent vectors (the monomial content).
  ExpVec exponent_floor() const;
  LambdaPoly times_monomial(const ExpVec& e, const Rational& c = Rational(1)) const;
  // gcd of numerators over lcm of denominators, always >= 0; 0 for the zero poly.
  Rational content() const;

  // Λj -> Λpi[j] for a permutation pi of {0..rank}; the Λ0 relation is kept.
  LambdaPoly permuted(const std::vector<int>& pi) const;

  // Λj -> Λj^-1 for every j (a ring automorphism compatible with the Λ0
  // relation): negates every exponent vector.
  LambdaPoly inverted_lambda() const;

  // Exact quotient a/b in the Laurent ring, or nullopt when b does not divide a.
  static std::optional<LambdaPoly> try_divide(const LambdaPoly& a, const LambdaPoly& b);

  bool operator==(const LambdaPoly& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

  std::string str() const;

 private:
  int rank_;
  TermMap terms_;
};

}  // namespace qtoda
