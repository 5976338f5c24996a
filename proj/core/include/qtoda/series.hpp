#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtoda/flag.hpp"

namespace qtoda {

// Degree vector (d_1..d_r) of a Q-monomial Q_1^{d_1}···Q_r^{d_r}; the virtual
// boundary entries d_0 = d_{r+1} = 0 are supplied by the accessors.
using DegreeVector = std::vector<int>;

int degree_total(const DegreeVector& d);
int degree_entry(const DegreeVector& d, int i);  // i in 0..r+1, boundary zeros

// All componentwise-nonnegative degrees with |d| <= D, graded ascending and
// lexicographic within a layer: a deterministic enumeration order shared by
// the solver, the reports and the JSON export.
std::vector<DegreeVector> degrees_up_to(int r, int D);

// The series I = p^{ln Q/ln q}·Σ_d J_d Q^d through its coefficients J_d, each
// known by fixed-point restrictions.
struct TwistedSeries {
  int rank = 0;
  int truncation = -1;
  std::map<DegreeVector, LocalizedClass> coeffs;

  bool has(const DegreeVector& d) const { return coeffs.count(d) != 0; }
  const LocalizedClass& at(const DegreeVector& d) const;
  const QRational& at(const DegreeVector& d, int sigma_index) const;
};

// Factor produced by the j-th elementary translation on the degree-d twisted
// monomial: Λ_{σ(j)}^{-1} q^{d_{j+1}-d_j}.
QRational shift_action(int j, const DegreeVector& d, const FlagPoint& p);

// Finite-difference operator Σ_m T_m ∘ c_m(Q): for each shift m the
// translation is applied after multiplication by the coefficient, exactly as
// the terms of the Toda operator are written.  Coefficients are Laurent
// polynomials in Q_1..Q_r with scalar (q,Λ)-rational entries.
struct DifferenceOperator {
  using Coeff = std::map<DegreeVector, QRational>;

  int rank = 0;
  std::map<std::vector<int>, Coeff> terms;  // shift (m_0..m_r) -> coefficient

  static DifferenceOperator zero(int r) { return DifferenceOperator{r, {}}; }
  static DifferenceOperator identity(int r);
  static DifferenceOperator translation(int r, const std::vector<int>& m);

  void add(const std::vector<int>& m, const DegreeVector& k, const QRational& c);
  bool is_zero() const { return terms.empty(); }
  // Largest total Q-degree over all coefficient monomials, at least 0.
  int q_degree() const;

  DifferenceOperator& operator+=(const DifferenceOperator& o);
  DifferenceOperator& operator-=(const DifferenceOperator& o);
  DifferenceOperator scaled(const QRational& c) const;
  friend DifferenceOperator operator+(DifferenceOperator a, const DifferenceOperator& b) {
    return a += b;
  }
  friend DifferenceOperator operator-(DifferenceOperator a, const DifferenceOperator& b) {
    return a -= b;
  }

  bool operator==(const DifferenceOperator& o) const;
  std::string str() const;
};

// Ĥ = T_{e_0} + Σ_{j=1}^{r} T_{e_j}∘(1 - Q_j).
DifferenceOperator build_toda_operator(int r);

// Operator composition A∘B, coefficients merged by total shift.
DifferenceOperator compose(const DifferenceOperator& a, const DifferenceOperator& b);

// Action on the twisted series, truncating to S.truncation - D.q_degree().
TwistedSeries apply_operator(const DifferenceOperator& d, const TwistedSeries& s);

// Solves the eigenfunction recursion degree layer by degree layer.  The
// solver never routes through apply_operator, so eigenchecks exercise an
// independent code path.  invert_q flips every q-exponent the recursion
// produces (used by the q-inversion symmetry test).
TwistedSeries solve_jseries(int r, int truncation, bool invert_q = false);

// Product-formula coefficients, restricted to the fixed points.
LocalizedClass closed_form_r1(int d);
LocalizedClass closed_form_r2(const DegreeVector& d);

// ΣΛ_j^{-1}, the Toda eigenvalue.
QRational toda_eigenvalue(int r);

struct EigenFailure {
  DegreeVector degree;
  FlagPoint point;
};

struct EigenReport {
  bool pass = true;
  int checked_degrees = 0;
  std::vector<EigenFailure> failures;
};

// Verifies apply_operator(Ĥ, S) = (ΣΛ_j^{-1})·S coefficientwise for all
// |d| <= S.truncation - 1.
EigenReport check_eigen(const TwistedSeries& s);

}  // namespace qtoda
