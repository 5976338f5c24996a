#pragma once

#include <map>
#include <vector>

#include "qtoda/series.hpp"

namespace qtoda {

// Torus weights of the ambient space whose projectivization compactifies the
// degree-d maps CP^1 -> CP^r: the (r+1)(d+1) monomials Λ_j q^{-m}, j = 0..r,
// m = 0..d.
struct WeightedProjectiveData {
  int rank = 0;    // r
  int degree = 0;  // d
  std::vector<QRational> weights;
};

WeightedProjectiveData quasimap_weights(int r, int d);

// Equivariant Euler characteristic of the z-th tensor power of the dual
// tautological line bundle on the weighted projective space, by the
// fixed-point sum chi = Σ_f (w_f^{-1})^z / Π_{g≠f}(1 - w_f w_g^{-1}).
// Requires pairwise distinct weights (isolated fixed points, simple poles).
QRational chi_projective(const WeightedProjectiveData& wd, int z);

// Independent oracle: the character of Sym^z of the dual space is the
// complete homogeneous symmetric polynomial h_z of the inverse weights,
// computed by direct monomial enumeration.  Requires z >= 0.
QRational symmetric_h_oracle(const WeightedProjectiveData& wd, int z);

// Coefficients of the factorized generating function: the entry at degree d
// is Σ_{d⁺+d⁻=d} q^{z·d⁻} · ⟨J_{d⁺}(q) · p^{-z} · J_{d⁻}(q^{-1})⟩ followed
// by Λj -> Λj^-1, where ⟨·⟩ is the fixed-point sum with Euler factors
// Π (1 - w) over tangent weights.  Degreewise it reproduces chi_projective
// in rank 1 and residue_G_r2 in rank 2; entries cover all |d| <= truncation.
std::map<DegreeVector, QRational> genfun_G(int r, const std::vector<int>& z, int truncation);

// The r=2 double contour integral evaluated as an iterated residue sum over
// the simple poles P_1 = Λ_j^{-1}q^m (m <= d_1) and P_2 = Λ_j q^{m'}
// (m' <= d_2), with the twist P_1^{-z_1}P_2^{-z_2} and a final full torus
// inversion (Λj -> Λj^-1, q -> q^-1) matching genfun_G.  Throws PoleError
// if a pole fails to be simple.
QRational residue_G_r2(const std::vector<int>& z, const DegreeVector& d);

// True when x is a Laurent polynomial in q and the Λ's: canonical
// denominator 1 or a bare power of q.
bool is_laurent(const QRational& x);

}  // namespace qtoda
