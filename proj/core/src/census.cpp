#include "qtoda/census.hpp"

#include <sstream>

namespace qtoda {

namespace {

using Matrix = std::vector<std::vector<int>>;

std::string matrix_str(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? " " : "") << m[i][j];
  }
  os << "]";
  return os.str();
}

bool triangular_shape(int r, const Matrix& m) {
  if (static_cast<int>(m.size()) != r) return false;
  for (int i = 0; i < r; ++i)
    if (static_cast<int>(m[i].size()) != i + 1) return false;
  return true;
}

bool rows_admissible(const Matrix& m) {
  for (const auto& row : m) {
    int prev = 0;
    for (int v : row) {
      if (v < prev) return false;
      prev = v;
    }
  }
  return true;
}

// Column targets in matrix indexing: column j (1-based) must sum to
// d_{r+1-j} across both matrices.
std::vector<int> column_targets(int r, const DegreeVector& d) {
  std::vector<int> t(r);
  for (int j = 1; j <= r; ++j) t[j - 1] = degree_entry(d, r + 1 - j);
  return t;
}

// Recursive lexicographic generation of the matrix pairs: rows of delta_plus
// first, then rows of delta_minus, each row nondecreasing, pruned by the
// remaining column budgets and checked for exact fill at the end.
void extend(int r, int slot, Matrix& plus, Matrix& minus, std::vector<int>& rem,
            std::vector<std::pair<Matrix, Matrix>>& out) {
  if (slot == 2 * r) {
    for (int v : rem)
      if (v != 0) return;
    out.emplace_back(plus, minus);
    return;
  }
  Matrix& target = slot < r ? plus : minus;
  int i = slot < r ? slot : slot - r;  // row index, 0-based
  auto& row = target[i];

  // Enumerate the nondecreasing row in lexicographic order.
  auto fill = [&](auto&& self, int j, int floor_val) -> void {
    if (j == i + 1) {
      extend(r, slot + 1, plus, minus, rem, out);
      return;
    }
    for (int v = floor_val; v <= rem[j]; ++v) {
      row[j] = v;
      rem[j] -= v;
      self(self, j + 1, v);
      rem[j] += v;
    }
    row[j] = 0;
  };
  fill(fill, 0, 0);
}

}  // namespace

std::string HQFixedPoint::str() const {
  return sigma.str() + " Δ⁺=" + matrix_str(delta_plus) +
         " Δ⁻=" + matrix_str(delta_minus);
}

bool hq_admissible(int r, const DegreeVector& d, const HQFixedPoint& p) {
  if (static_cast<int>(p.sigma.sigma.size()) != r + 1) return false;
  if (!triangular_shape(r, p.delta_plus) || !triangular_shape(r, p.delta_minus))
    return false;
  for (const auto* m : {&p.delta_plus, &p.delta_minus})
    for (const auto& row : *m)
      for (int v : row)
        if (v < 0) return false;
  if (!rows_admissible(p.delta_plus) || !rows_admissible(p.delta_minus)) return false;
  const std::vector<int> targets = column_targets(r, d);
  for (int j = 0; j < r; ++j) {
    int sum = 0;
    for (int i = j; i < r; ++i) sum += p.delta_plus[i][j] + p.delta_minus[i][j];
    if (sum != targets[j]) return false;
  }
  return true;
}

std::vector<HQFixedPoint> enumerate_hq_fixed_points(int r, const DegreeVector& d) {
  Matrix plus(r), minus(r);
  for (int i = 0; i < r; ++i) {
    plus[i].assign(i + 1, 0);
    minus[i].assign(i + 1, 0);
  }
  std::vector<int> rem = column_targets(r, d);
  std::vector<std::pair<Matrix, Matrix>> pairs;
  extend(r, 0, plus, minus, rem, pairs);

  std::vector<HQFixedPoint> out;
  const auto points = fixed_points(r);
  out.reserve(points.size() * pairs.size());
  for (const FlagPoint& p : points)
    for (const auto& [dp, dm] : pairs) out.push_back({p, dp, dm});
  return out;
}

int k_d(int r, const DegreeVector& d) {
  int linear = 0;
  for (int i = 1; i <= r; ++i) linear += degree_entry(d, i);
  int squares = 0;
  for (int i = 1; i <= r + 1; ++i) {
    int step = degree_entry(d, i) - degree_entry(d, i - 1);
    squares += step * step;
  }
  return linear + squares / 2;
}

CanonicalClassData canonical_exponents(int r, const DegreeVector& d) {
  CanonicalClassData out;
  out.k_d = k_d(r, d);
  out.p_exponents.reserve(r);
  for (int i = 1; i <= r; ++i)
    out.p_exponents.push_back(2 - degree_entry(d, i - 1) + 2 * degree_entry(d, i) -
                              degree_entry(d, i + 1));
  return out;
}

PoleGapReport verify_pole_gap(const TwistedSeries& s) {
  PoleGapReport rep;
  const auto points = fixed_points(s.rank);
  for (const auto& [d, cls] : s.coeffs) {
    const int bound = k_d(s.rank, d);
    for (std::size_t k = 0; k < points.size(); ++k) {
      PoleGapEntry entry{d, points[k], cls.values[k].q_degree_gap(), bound};
      ++rep.checked;
      if (entry.gap < entry.bound) {
        rep.pass = false;
        rep.failures.push_back(entry);
      }
      rep.margins.push_back(std::move(entry));
    }
  }
  return rep;
}

}  // namespace qtoda
