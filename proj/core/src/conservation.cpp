#include "qtoda/conservation.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>

#include "qtoda/errors.hpp"

namespace qtoda {

namespace {

// Coordinate label of one ansatz column: (shift, Q-monomial).
using Key = std::pair<std::vector<int>, DegreeVector>;

std::map<Key, QRational> coordinates(const DifferenceOperator& d) {
  std::map<Key, QRational> out;
  for (const auto& [m, coeff] : d.terms)
    for (const auto& [k, c] : coeff)
      if (!c.is_zero()) out.emplace(Key{m, k}, c);
  return out;
}

// In-place reduction to reduced row echelon form; pivots take the first
// column with a nonzero entry in row order, so the result is deterministic.
// Returns the pivot columns.
std::vector<int> rref(std::vector<std::vector<QRational>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows[0].size());
  std::size_t row = 0;
  for (int col = 0; col < cols && row < rows.size(); ++col) {
    std::size_t sel = row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[row], rows[sel]);
    const QRational inv = rows[row][col].inverse();
    for (int j = col; j < cols; ++j) rows[row][j] = rows[row][j] * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == row || rows[i][col].is_zero()) continue;
      const QRational f = rows[i][col];
      for (int j = col; j < cols; ++j)
        rows[i][j] = rows[i][j] - f * rows[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// The ansatz columns in deterministic order, with their unit operators.
struct ColumnSpace {
  std::vector<Key> labels;
  std::vector<DifferenceOperator> units;
};

ColumnSpace ansatz_columns(int r, const OperatorAnsatz& ansatz) {
  if (ansatz.q_degree_bound < 0) throw Error("negative Q-degree bound");
  ColumnSpace out;
  const auto monos = degrees_up_to(r, ansatz.q_degree_bound);
  for (const auto& m : ansatz.shifts) {
    if (static_cast<int>(m.size()) != r + 1)
      throw Error("ansatz shift has wrong length");
    for (const auto& k : monos) {
      DifferenceOperator unit = DifferenceOperator::zero(r);
      unit.add(m, k, QRational::one(r));
      out.labels.push_back({m, k});
      out.units.push_back(std::move(unit));
    }
  }
  return out;
}

// Rows of the coordinate matrix of the given operators over the union of
// their supports (map order: deterministic).
std::vector<std::vector<QRational>> coordinate_rows(
    int r, const std::vector<const DifferenceOperator*>& ops) {
  std::map<Key, int> index;
  std::vector<std::map<Key, QRational>> coords;
  coords.reserve(ops.size());
  for (const DifferenceOperator* op : ops) {
    coords.push_back(coordinates(*op));
    for (const auto& [key, c] : coords.back()) index.emplace(key, 0);
  }
  int next = 0;
  for (auto& [key, pos] : index) pos = next++;
  std::vector<std::vector<QRational>> rows;
  rows.reserve(ops.size());
  for (const auto& coord : coords) {
    std::vector<QRational> row(index.size(), QRational(r));
    for (const auto& [key, c] : coord) row[index.at(key)] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

OperatorAnsatz OperatorAnsatz::standard(int r) {
  OperatorAnsatz out;
  const int n = r + 1;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = (mask >> (n - 1 - i)) & 1;
    out.shifts.push_back(std::move(m));
  }
  std::sort(out.shifts.begin(), out.shifts.end());
  return out;
}

std::vector<DifferenceOperator> commutant_search(int r, const OperatorAnsatz& ansatz) {
  const DifferenceOperator toda = build_toda_operator(r);
  ColumnSpace cols = ansatz_columns(r, ansatz);
  const std::size_t ncols = cols.units.size();

  // Constraint matrix: one row per (shift, monomial) in the support of any
  // commutator, one column per ansatz unknown.
  std::vector<std::map<Key, QRational>> images;
  images.reserve(ncols);
  std::map<Key, int> row_index;
  for (const DifferenceOperator& unit : cols.units) {
    DifferenceOperator bracket = compose(toda, unit) - compose(unit, toda);
    images.push_back(coordinates(bracket));
    for (const auto& [key, c] : images.back()) row_index.emplace(key, 0);
  }
  int next = 0;
  for (auto& [key, pos] : row_index) pos = next++;

  std::vector<std::vector<QRational>> mat(
      row_index.size(), std::vector<QRational>(ncols, QRational(r)));
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& [key, v] : images[c]) mat[row_index.at(key)][c] = v;

  const std::vector<int> pivots = rref(mat);

  // One basis vector per free column: unit there, minus the reduced column
  // on the pivot coordinates.
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<DifferenceOperator> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    DifferenceOperator d = DifferenceOperator::zero(r);
    d.add(cols.labels[f].first, cols.labels[f].second, QRational::one(r));
    for (std::size_t t = 0; t < pivots.size(); ++t) {
      const QRational& entry = mat[t][f];
      if (entry.is_zero()) continue;
      const Key& label = cols.labels[pivots[t]];
      d.add(label.first, label.second, -entry);
    }
    basis.push_back(std::move(d));
  }
  return basis;
}

bool operator_in_span(const std::vector<DifferenceOperator>& basis,
                      const DifferenceOperator& d) {
  if (d.is_zero()) return true;
  if (basis.empty()) return false;
  const int r = basis.front().rank;
  std::vector<const DifferenceOperator*> ops;
  for (const auto& b : basis) ops.push_back(&b);
  ops.push_back(&d);
  auto rows = coordinate_rows(r, ops);
  std::vector<std::vector<QRational>> without(rows.begin(), rows.end() - 1);
  const std::size_t rank_without = rref(without).size();
  const std::size_t rank_with = rref(rows).size();
  return rank_with == rank_without;
}

CommonEigenReport verify_common_eigen(const DifferenceOperator& d,
                                      const TwistedSeries& s) {
  CommonEigenReport rep;
  const TwistedSeries ds = apply_operator(d, s);
  const auto pts = fixed_points(s.rank);
  const DegreeVector zero(s.rank, 0);
  const LocalizedClass& s0 = s.at(zero);
  const LocalizedClass& d0 = ds.at(zero);

  QRational lambda(s.rank);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (s0.values[k].is_zero())
      throw Error("series vanishes at degree zero");
    const QRational ratio = d0.values[k] * s0.values[k].inverse();
    if (k == 0) {
      lambda = ratio;
    } else if (!(ratio == lambda)) {
      rep.failures.push_back({zero, pts[k]});
    }
  }
  if (!rep.failures.empty()) return rep;  // not an eigenfunction candidate
  rep.scalar_ratio = true;
  rep.eigenvalue = lambda;
  rep.pass = true;

  for (const auto& [deg, cls] : ds.coeffs) {
    ++rep.checked_degrees;
    const LocalizedClass& expect = s.at(deg);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (!(cls.values[k] == lambda * expect.values[k])) {
        rep.pass = false;
        rep.failures.push_back({deg, pts[k]});
      }
    }
  }
  return rep;
}

}  // namespace qtoda
