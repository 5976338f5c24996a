#pragma once

#include <string>
#include <vector>

#include "qtoda/qpoly.hpp"

namespace qtoda {

// Rational function in q over ScalarField.  Canonical shape: num/den with
// gcd(num, den) = 1, num and den not both divisible by q, den monic in its
// leading q-coefficient.  Negative q-powers live in the denominator.
class QRational {
 public:
  QRational() : num_(0) {}
  explicit QRational(int rank) : num_(rank) {}
  QRational(QPoly num, QPoly den);

  static QRational zero(int rank) { return QRational(rank); }
  static QRational one(int rank);
  static QRational constant(int rank, const Rational& c);
  static QRational from_scalar(const ScalarField& s);
  static QRational from_qpoly(QPoly p);
  static QRational lambda_power(int rank, int j, int power = 1);
  // s * q^k with k of either sign.
  static QRational q_monomial(const ScalarField& s, int k);
  static QRational q_power(int rank, int k) { return q_monomial(ScalarField::one(rank), k); }

  int rank() const { return num_.rank(); }
  const QPoly& num() const { return num_; }
  std::size_t factor_count() const { return fac_.size(); }
  const std::vector<QPoly>& factors() const { return fac_; }
  // Expanded denominator, assembled from the factor list on demand.
  QPoly den() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return fac_.empty() && num_.is_one(); }
  bool is_q_constant() const { return num_.is_constant() && fac_.empty(); }
  ScalarField as_scalar() const;  // requires is_q_constant

  QRational& operator+=(const QRational& o);
  QRational& operator-=(const QRational& o);
  QRational& operator*=(const QRational& o);
  QRational& operator/=(const QRational& o);
  QRational operator-() const;
  QRational inverse() const;

  friend QRational operator+(QRational a, const QRational& b) { return a += b; }
  friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
  friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
  friend QRational operator/(QRational a, const QRational& b) { return a /= b; }

  QRational& scale(const ScalarField& s);

  // deg den - deg num, the vanishing order at q = infinity.
  int q_degree_gap() const;

  // q := v; throws PoleError when v lands on a zero of the denominator.
  QRational substituted_q(const QRational& v) const;
  // Fast path for q := q^k, k != 0 (so k = -1 is the standard involution).
  QRational substituted_q_power(int k) const;

  QRational permuted(const std::vector<int>& pi) const;
  QRational inverted_lambda() const;

  // Field equality by cross-multiplication.
  bool operator==(const QRational& o) const;

  std::string str() const;

 private:
  void normalize();
  QPoly num_;
  // Denominator factor list: monic, non-constant factors whose product is the
  // reduced denominator; an empty list means 1.  Keeping factors instead of
  // the expanded product lets sums and products cancel by exact trial
  // division, guided by a rational specialization that cheaply certifies
  // non-divisibility and coprimality, so the remainder-sequence gcd only runs
  // on small residual pairs.  The expanded polynomial is only assembled when
  // den() is asked for.
  std::vector<QPoly> fac_;
};

}  // namespace qtoda
