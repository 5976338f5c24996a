#pragma once

#include <vector>

#include "qtoda/series.hpp"

namespace qtoda {

// Search space for conservation laws: operators Σ x_{m,k} T_m∘Q^k with
// shifts m drawn from a finite set and coefficient monomials Q^k of total
// degree at most q_degree_bound, scalar unknowns x_{m,k}.
struct OperatorAnsatz {
  std::vector<std::vector<int>> shifts;  // each of length rank+1
  int q_degree_bound = 1;

  // All shifts with entries in {0,1}, the shape of the Toda operator itself,
  // in lexicographic order.
  static OperatorAnsatz standard(int r);
};

// Basis of the ansatz operators commuting with the Toda operator: the exact
// nullspace of D -> compose(Ĥ,D) - compose(D,Ĥ) over the (q,Λ)-rational
// scalars, by Gauss-Jordan elimination with first-nonzero pivoting, reported
// in reduced echelon coordinates (one basis vector per free column, in
// column order).
std::vector<DifferenceOperator> commutant_search(int r, const OperatorAnsatz& ansatz);

// Whether d is a scalar combination of the given operators.
bool operator_in_span(const std::vector<DifferenceOperator>& basis,
                      const DifferenceOperator& d);

// Common-eigenfunction check: the candidate eigenvalue is the degree-zero
// ratio (D·I)_0^σ / I_0^σ, which must not depend on σ; then (D·I)_d = λ·I_d
// is required for every |d| <= truncation - q_degree(D).
struct CommonEigenReport {
  bool pass = false;
  bool scalar_ratio = false;  // the degree-zero ratio was σ-independent
  QRational eigenvalue;
  int checked_degrees = 0;
  std::vector<EigenFailure> failures;
};

CommonEigenReport verify_common_eigen(const DifferenceOperator& d,
                                      const TwistedSeries& s);

}  // namespace qtoda
