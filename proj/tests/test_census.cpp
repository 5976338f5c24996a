#include "doctest.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "qtoda/census.hpp"
#include "qtoda/series.hpp"

using namespace qtoda;

namespace {

using Matrix = std::vector<std::vector<int>>;

// Independent generate-and-filter pass: odometer over the full bounding box
// of entry lists (lexicographic, first entry most significant), kept when
// hq_admissible accepts.  Returns matrix pairs only; the constraints do not
// involve sigma.
std::vector<std::pair<Matrix, Matrix>> filtered_pairs(int r, const DegreeVector& d) {
  int entries_per_matrix = r * (r + 1) / 2;
  int total = 2 * entries_per_matrix;
  int bound = 0;
  for (int v : d) bound = std::max(bound, v);

  auto unpack = [&](const std::vector<int>& flat) {
    std::pair<Matrix, Matrix> out;
    int pos = 0;
    for (Matrix* m : {&out.first, &out.second}) {
      m->resize(r);
      for (int i = 0; i < r; ++i) {
        (*m)[i].assign(flat.begin() + pos, flat.begin() + pos + i + 1);
        pos += i + 1;
      }
    }
    return out;
  };

  std::vector<std::pair<Matrix, Matrix>> out;
  std::vector<int> flat(total, 0);
  FlagPoint id;
  for (int i = 0; i <= r; ++i) id.sigma.push_back(i);
  while (true) {
    auto [dp, dm] = unpack(flat);
    if (hq_admissible(r, d, {id, dp, dm})) out.emplace_back(dp, dm);
    int pos = total - 1;
    while (pos >= 0 && flat[pos] == bound) flat[pos--] = 0;
    if (pos < 0) break;
    ++flat[pos];
  }
  return out;
}

}  // namespace

TEST_CASE("rank one census counts") {
  for (int deg = 0; deg <= 8; ++deg) {
    auto pts = enumerate_hq_fixed_points(1, {deg});
    CHECK(pts.size() == static_cast<std::size_t>(2 * (deg + 1)));
    for (const auto& p : pts) CHECK(hq_admissible(1, {deg}, p));
  }

  auto pts = enumerate_hq_fixed_points(1, {2});
  REQUIRE(pts.size() == 6);
  // sigma-major, matrix pairs lexicographic: (0,2), (1,1), (2,0).
  CHECK(pts[0].sigma.sigma == std::vector<int>{0, 1});
  CHECK(pts[0].delta_plus == Matrix{{0}});
  CHECK(pts[0].delta_minus == Matrix{{2}});
  CHECK(pts[1].delta_plus == Matrix{{1}});
  CHECK(pts[1].delta_minus == Matrix{{1}});
  CHECK(pts[2].delta_plus == Matrix{{2}});
  CHECK(pts[2].delta_minus == Matrix{{0}});
  CHECK(pts[3].sigma.sigma == std::vector<int>{1, 0});
}

TEST_CASE("degree zero census is the flag census") {
  for (int r = 1; r <= 3; ++r) {
    DegreeVector zero(r, 0);
    auto pts = enumerate_hq_fixed_points(r, zero);
    REQUIRE(pts.size() == fixed_points(r).size());
    for (const auto& p : pts) {
      for (const auto& row : p.delta_plus)
        for (int v : row) CHECK(v == 0);
      for (const auto& row : p.delta_minus)
        for (int v : row) CHECK(v == 0);
    }
  }
}

TEST_CASE("enumeration matches the generate-and-filter oracle") {
  for (const DegreeVector& d : degrees_up_to(2, 3)) {
    auto pairs = filtered_pairs(2, d);
    auto pts = enumerate_hq_fixed_points(2, d);
    REQUIRE(pts.size() == 6 * pairs.size());
    // Same pairs in the same order under every sigma.
    for (std::size_t k = 0; k < pts.size(); ++k) {
      CHECK(pts[k].delta_plus == pairs[k % pairs.size()].first);
      CHECK(pts[k].delta_minus == pairs[k % pairs.size()].second);
      CHECK(pts[k].sigma == fixed_points(2)[k / pairs.size()]);
    }
  }

  // Row monotonicity binds each matrix separately: the pair with a jump in
  // one matrix compensated in the other is admissible.
  HQFixedPoint mixed{{{0, 1, 2}}, {{0}, {0, 1}}, {{1}, {0, 0}}};
  CHECK(hq_admissible(2, {1, 1}, mixed));
  HQFixedPoint bad{{{0, 1, 2}}, {{0}, {1, 0}}, {{1}, {0, 1}}};
  CHECK_FALSE(hq_admissible(2, {2, 1}, bad));
}

TEST_CASE("canonical degree values") {
  CHECK(k_d(1, {0}) == 0);
  CHECK(k_d(1, {1}) == 2);
  CHECK(k_d(1, {2}) == 6);
  CHECK(k_d(1, {3}) == 12);
  CHECK(k_d(2, {0, 0}) == 0);
  CHECK(k_d(2, {1, 1}) == 3);
  CHECK(k_d(2, {1, 0}) == 2);
  CHECK(k_d(3, {1, 1, 1}) == 4);
}

TEST_CASE("canonical exponents and the degree identity") {
  auto c1 = canonical_exponents(1, {1});
  CHECK(c1.k_d == 2);
  CHECK(c1.p_exponents == std::vector<int>{4});

  auto c2 = canonical_exponents(2, {0, 0});
  CHECK(c2.k_d == 0);
  CHECK(c2.p_exponents == std::vector<int>{2, 2});

  auto c3 = canonical_exponents(2, {1, 1});
  CHECK(c3.k_d == 3);
  CHECK(c3.p_exponents == std::vector<int>{3, 3});

  // Σ d_i·e_i = 2·k_d pins the boundary convention of the k_d formula.
  for (int r = 1; r <= 3; ++r) {
    for (const DegreeVector& d : degrees_up_to(r, 4)) {
      auto c = canonical_exponents(r, d);
      REQUIRE(c.p_exponents.size() == static_cast<std::size_t>(r));
      int pairing = 0;
      for (int i = 0; i < r; ++i) pairing += d[i] * c.p_exponents[i];
      CHECK(pairing == 2 * c.k_d);
      CHECK(c.k_d >= 0);
    }
  }
}

TEST_CASE("pole gap estimate on solver output") {
  auto s1 = solve_jseries(1, 6);
  auto rep1 = verify_pole_gap(s1);
  CHECK(rep1.pass);
  CHECK(rep1.failures.empty());
  CHECK(rep1.checked == 7 * 2);
  // Equality in rank one at every degree and point.
  for (const auto& m : rep1.margins) CHECK(m.gap == m.bound);
  for (const auto& m : rep1.margins) {
    if (m.degree == DegreeVector{1}) CHECK(m.gap == 2);
    if (m.degree == DegreeVector{2}) CHECK(m.gap == 6);
  }

  auto rep2 = verify_pole_gap(solve_jseries(2, 3));
  CHECK(rep2.pass);
  CHECK(rep2.checked == 10 * 6);

  auto rep3 = verify_pole_gap(solve_jseries(3, 2));
  CHECK(rep3.pass);
}
