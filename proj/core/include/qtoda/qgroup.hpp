#pragma once

#include <vector>

#include "qtoda/qpoly.hpp"
#include "qtoda/qrational.hpp"

namespace qtoda {

// Simple-root data of a symmetrized Cartan matrix together with the
// antisymmetric part of the m-matrix choice.  Roots are indexed 0..rank-1;
// a[j][i] is the entry a_{ji} = 2(α_i,α_j)/(α_i,α_i), sym[i] = (α_i,α_i)/2,
// offset[j][i] = m_{ji} - m_{ij}.
struct CartanData {
  int rank = 0;
  std::vector<std::vector<int>> a;
  std::vector<int> sym;
  std::vector<std::vector<int>> offset;
};

// Type-A data: a_{ii} = 2, a_{ji} = -1 on Dynkin edges, all symmetrizers 1,
// edges oriented i -> i+1 with offset m_{(i+1)i} - m_{i(i+1)} = +1.
CartanData cartan_type_a(int r);

// Gaussian binomial by the product formula Π_{j=1}^k (1-q^{m-k+j})/(1-q^j),
// carried out as one exact polynomial division.  Coefficients have the given
// Λ-rank so the result can enter larger expressions.
QPoly q_binomial_poly(int rank, int m, int k);

// The same polynomial as a rank-0 rational value.
QRational q_binomial(int m, int k);

// Checks the expansion (1-x)(1-qx)···(1-q^{m-1}x) =
// Σ_k (-1)^k binom(m,k)_q q^{k(k-1)/2} x^k symbolically in a fresh variable.
bool verify_qbinom_identity(int m);

// Scalar admissibility of the Serre relation for the ordered pair (i, j),
// i != j: with scalar generators the relation collapses, via the q-binomial
// identity in base q_i², to Π_{l=0}^{-a_{ji}} (1 - q_i^{2l}·x) = 0 at
// x = q_i^{a_{ji} + sign·2(m_{ji}-m_{ij})/(α_i,α_i)}, which holds iff the
// x-exponent is -2l for some 0 <= l <= -a_{ji}.  Pairs with a_{ji} = 0
// degenerate to plain commutation and pass.
bool serre_scalar_check(const CartanData& cd, int i, int j, int sign);

}  // namespace qtoda
