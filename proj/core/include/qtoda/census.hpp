#pragma once

#include <string>
#include <vector>

#include "qtoda/series.hpp"

namespace qtoda {

// Torus-fixed point of the degree-d hyperquot scheme: a flag fixed point
// together with two lower-triangular r x r defect matrices.  Row i of each
// matrix holds the entries m_{i1}..m_{ii}.
struct HQFixedPoint {
  FlagPoint sigma;
  std::vector<std::vector<int>> delta_plus;
  std::vector<std::vector<int>> delta_minus;

  bool operator==(const HQFixedPoint&) const = default;
  std::string str() const;
};

// The admissibility constraints on the defect matrices: nonnegative entries,
// rows nondecreasing within each matrix, and joint column sums
// Σ_{i=j}^r (m⁺_{ij} + m⁻_{ij}) = d_{r+1-j}.  Shape errors return false.
bool hq_admissible(int r, const DegreeVector& d, const HQFixedPoint& p);

// Complete enumeration, deterministic: sigma runs through fixed_points(r),
// and for each sigma the matrix pairs appear in lexicographic order of the
// entry list (Δ⁺ rows top to bottom, then Δ⁻ rows).
std::vector<HQFixedPoint> enumerate_hq_fixed_points(int r, const DegreeVector& d);

// k_d = d_1+...+d_r + (1/2)·Σ_{i=1}^{r+1} (d_i - d_{i-1})² with the boundary
// convention d_0 = d_{r+1} = 0; the squared-difference sum is always even.
int k_d(int r, const DegreeVector& d);

// Exponent data of the canonical twist at degree d: q^{-k_d}·Π_i P_i^{e_i}
// with e_i = 2 - d_{i-1} + 2d_i - d_{i+1}.  Satisfies Σ_i d_i·e_i = 2k_d.
struct CanonicalClassData {
  int k_d = 0;
  std::vector<int> p_exponents;
};

CanonicalClassData canonical_exponents(int r, const DegreeVector& d);

// One margin of the pole-gap estimate: the vanishing order of J_d^σ at
// q = infinity must be at least k_d.
struct PoleGapEntry {
  DegreeVector degree;
  FlagPoint point;
  int gap = 0;
  int bound = 0;
};

struct PoleGapReport {
  bool pass = true;
  int checked = 0;
  std::vector<PoleGapEntry> margins;   // every (degree, point) visited
  std::vector<PoleGapEntry> failures;  // entries with gap < bound
};

// Checks gap >= k_d for every coefficient of a solved series and reports all
// margins.
PoleGapReport verify_pole_gap(const TwistedSeries& s);

}  // namespace qtoda
