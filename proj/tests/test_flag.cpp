#include "doctest.h"

#include "qtoda/errors.hpp"
#include "qtoda/flag.hpp"
#include "qtoda/parse.hpp"

using namespace qtoda;

namespace {

LocalizedClass p_power_class(int r, const std::vector<int>& z) {
  LocalizedClass cls;
  cls.rank = r;
  for (const FlagPoint& p : fixed_points(r))
    cls.values.push_back(QRational::from_scalar(restrict_monomial(r, p, z)));
  return cls;
}

}  // namespace

TEST_CASE("fixed points enumerate the Weyl group") {
  auto pts1 = fixed_points(1);
  REQUIRE(pts1.size() == 2);
  CHECK(pts1[0].sigma == std::vector<int>{0, 1});
  CHECK(pts1[1].sigma == std::vector<int>{1, 0});

  auto pts2 = fixed_points(2);
  REQUIRE(pts2.size() == 6);
  CHECK(pts2.front().sigma == std::vector<int>{0, 1, 2});
  CHECK(pts2.back().sigma == std::vector<int>{2, 1, 0});
  for (int k = 0; k < 6; ++k) CHECK(fixed_point_index(2, pts2[k]) == k);
}

TEST_CASE("tautological restrictions") {
  FlagPoint id1{{0, 1}};
  CHECK(restrict_p(1, id1, 0).is_one());
  CHECK(restrict_p(1, id1, 2).is_one());
  CHECK(restrict_p(1, id1, 1) == parse_scalar_field(1, "Λ0^-1"));

  FlagPoint id2{{0, 1, 2}};
  CHECK(restrict_p(2, id2, 2) == parse_scalar_field(2, "Λ2"));
  CHECK(restrict_p(2, id2, 3).is_one());
  FlagPoint tau{{1, 2, 0}};
  CHECK(restrict_p(2, tau, 1) == parse_scalar_field(2, "Λ1^-1"));
  CHECK(restrict_p(2, tau, 2) == parse_scalar_field(2, "Λ1^-1*Λ2^-1"));

  // restrict_monomial is the product of powers, negative exponents included.
  CHECK(restrict_monomial(2, tau, {2, -1}) ==
        restrict_p(2, tau, 1) * restrict_p(2, tau, 1) / restrict_p(2, tau, 2));
}

TEST_CASE("tangent weights") {
  for (int r = 1; r <= 3; ++r) {
    for (const FlagPoint& p : fixed_points(r)) {
      auto w = tangent_weights(r, p);
      CHECK(static_cast<int>(w.size()) == r * (r + 1) / 2);
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) CHECK_FALSE(w[i] == w[j]);
    }
  }
  FlagPoint id1{{0, 1}};
  CHECK(tangent_weights(1, id1) == std::vector<ScalarField>{parse_scalar_field(1, "Λ1/Λ0")});
}

TEST_CASE("structure sheaf has Euler characteristic one") {
  for (int r = 1; r <= 3; ++r) CHECK(chi_flag(LocalizedClass::ones(r)) == QRational::one(r));
}

TEST_CASE("first tautological class pairs to the dual vector representation") {
  CHECK(chi_flag(p_power_class(1, {1})) == parse_qrational(1, "Λ0^-1 + Λ1^-1"));
  CHECK(chi_flag(p_power_class(2, {1, 0})) == parse_qrational(2, "Λ0^-1 + Λ1^-1 + Λ2^-1"));
}

TEST_CASE("negative twists") {
  // O(-1) on the projective line is cohomology-free; O(-2) has a line of H^1.
  CHECK(chi_flag(p_power_class(1, {-1})).is_zero());
  CHECK(chi_flag(p_power_class(1, {-2})) == -QRational::one(1));
}

TEST_CASE("characters match the alternant construction") {
  for (int r = 1; r <= 3; ++r) {
    std::vector<int> zero(r, 0);
    CHECK(weyl_character(r, zero).is_one());
  }
  CHECK(weyl_character(2, {1, 0}) == parse_lambda_poly(2, "Λ0^-1 + Λ1^-1 + Λ2^-1"));
  CHECK(weyl_character(1, {2}) == parse_lambda_poly(1, "Λ1^2 + 1 + Λ1^-2"));
  CHECK(weyl_character(2, {1, 1}).coeff_sum() == 8);
  CHECK(weyl_character(2, {2, 0}).coeff_sum() == 6);
  CHECK(weyl_character(3, {1, 0, 0}).coeff_sum() == 4);
  CHECK_THROWS_AS(weyl_character(1, {-1}), Error);
}

TEST_CASE("localization agrees with the alternant for dominant twists") {
  struct Case {
    int r;
    std::vector<int> z;
  };
  for (const Case& c : {Case{1, {1}}, Case{1, {3}}, Case{2, {1, 0}}, Case{2, {0, 2}},
                        Case{2, {1, 1}}, Case{3, {1, 0, 1}}}) {
    QRational chi = chi_flag(p_power_class(c.r, c.z));
    CHECK(chi.is_q_constant());
    CHECK(chi.as_scalar().is_polynomial());
    CHECK(chi == QRational::from_qpoly(QPoly::constant(
                     ScalarField::from_poly(weyl_character(c.r, c.z)))));
  }
}

TEST_CASE("characters are Weyl invariant") {
  QRational chi = chi_flag(p_power_class(2, {1, 1}));
  for (const FlagPoint& p : fixed_points(2)) CHECK(chi.permuted(p.sigma) == chi);
}

TEST_CASE("pairing is chi of the product") {
  LocalizedClass a = p_power_class(2, {1, 0});
  LocalizedClass b = p_power_class(2, {0, 1});
  LocalizedClass ab = a;
  ab *= b;
  CHECK(pairing(a, b) == chi_flag(ab));
  CHECK(pairing(a, b) == chi_flag(p_power_class(2, {1, 1})));

  LocalizedClass scaled = LocalizedClass::ones(2);
  scaled.scale(parse_qrational(2, "Λ1*q"));
  CHECK(pairing(scaled, LocalizedClass::ones(2)) == parse_qrational(2, "Λ1*q"));
}

TEST_CASE("localized class bookkeeping") {
  LocalizedClass ones = LocalizedClass::ones(2);
  CHECK(ones.values.size() == 6);
  FlagPoint tau{{1, 0, 2}};
  CHECK(ones.at(2, tau).is_one());
  LocalizedClass s = LocalizedClass::from_scalar(2, parse_scalar_field(2, "Λ1"));
  CHECK(s.at(2, tau) == parse_qrational(2, "Λ1"));
  CHECK_FALSE(s == ones);
}
