#pragma once

#include <string>
#include <vector>

#include "qtoda/qrational.hpp"

namespace qtoda {

// Torus-fixed point of the complete flag manifold of flags in C^{r+1},
// recorded as the permutation sending chain slot i to the coordinate line
// spanned by e_{sigma[i]}.
struct FlagPoint {
  std::vector<int> sigma;  // images of 0..r, a bijection

  bool operator==(const FlagPoint&) const = default;
  auto operator<=>(const FlagPoint&) const = default;
  std::string str() const;
};

// All (r+1)! fixed points in lexicographic order of sigma.
std::vector<FlagPoint> fixed_points(int r);

int fixed_point_index(int r, const FlagPoint& p);

// Restriction of the tautological class p_i = det(C^i subbundle)^-1 to a
// fixed point: (Λ_{σ(0)}···Λ_{σ(i-1)})^-1.  p_0 and p_{r+1} restrict to 1.
ScalarField restrict_p(int r, const FlagPoint& p, int i);

// Restriction of p_1^{z_1}···p_r^{z_r}; z entries may be negative.
ScalarField restrict_monomial(int r, const FlagPoint& p, const std::vector<int>& z);

// Tangent weights at a fixed point: Λ_{σ(j)}/Λ_{σ(i)} for 0 <= i < j <= r.
std::vector<ScalarField> tangent_weights(int r, const FlagPoint& p);

// K-theory class known through its fixed-point restrictions, stored in
// fixed_points(r) order.
struct LocalizedClass {
  int rank = 0;
  std::vector<QRational> values;

  static LocalizedClass ones(int r);
  static LocalizedClass from_scalar(int r, const ScalarField& s);
  const QRational& at(int r, const FlagPoint& p) const;

  LocalizedClass& operator*=(const LocalizedClass& o);
  LocalizedClass& scale(const QRational& s);
  bool operator==(const LocalizedClass& o) const;
};

// Common denominator of the fixed-point formula: Π over ordered pairs
// a != b of (1 - Λ_a/Λ_b).
LambdaPoly euler_denominator(int r);

// The factors of euler_denominator complementary to the tangent Euler
// product Π_w (1 - w^{-1}) at p, i.e. Π_{i<j} (1 - Λ_{σ(j)}/Λ_{σ(i)}).
LambdaPoly euler_complement(int r, const FlagPoint& p);

// Equivariant Euler characteristic by the fixed-point formula
//   χ(Φ) = Σ_σ Φ^σ / Π_w (1 - w^{-1}),  w running over tangent weights.
// Internally the sum is assembled over the common denominator
// Π_{a≠b}(1 - Λ_a/Λ_b) so polynomial answers reduce to denominator 1.
QRational chi_flag(const LocalizedClass& phi);

// χ of the pointwise product.
QRational pairing(const LocalizedClass& a, const LocalizedClass& b);

// Irreducible character with highest weight Σ z_i ω_i, as a Laurent
// polynomial in the inverse torus characters (alternant ratio).  Requires
// z_i >= 0.
LambdaPoly weyl_character(int r, const std::vector<int>& z);

}  // namespace qtoda
