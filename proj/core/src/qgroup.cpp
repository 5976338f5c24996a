#include "qtoda/qgroup.hpp"

#include <cstdlib>

#include "qtoda/errors.hpp"

namespace qtoda {

namespace {

// Long division by a polynomial with invertible leading coefficient; the
// quotient must be exact.
QPoly exact_div(QPoly num, const QPoly& den) {
  const int dd = den.degree();
  if (dd < 0) throw DivisionByZero("polynomial division by zero");
  const ScalarField lead_inv = den.coeff(dd).inverse();
  QPoly quot(num.rank());
  while (!num.is_zero() && num.degree() >= dd) {
    const int s = num.degree() - dd;
    const ScalarField c = num.coeff(num.degree()) * lead_inv;
    quot.set_coeff(s, c);
    num -= den * QPoly::q_power(num.rank(), s, c);
  }
  if (!num.is_zero()) throw Error("inexact polynomial division");
  return quot;
}

QPoly one_minus_q_power(int rank, int j) {
  return QPoly::one(rank) - QPoly::q_power(rank, j);
}

}  // namespace

CartanData cartan_type_a(int r) {
  CartanData cd;
  cd.rank = r;
  cd.a.assign(r, std::vector<int>(r, 0));
  cd.sym.assign(r, 1);
  cd.offset.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) {
    cd.a[i][i] = 2;
    if (i + 1 < r) {
      cd.a[i][i + 1] = cd.a[i + 1][i] = -1;
      cd.offset[i + 1][i] = 1;
      cd.offset[i][i + 1] = -1;
    }
  }
  return cd;
}

QPoly q_binomial_poly(int rank, int m, int k) {
  if (k < 0 || m < k) throw Error("q_binomial out of range");
  QPoly num = QPoly::one(rank);
  QPoly den = QPoly::one(rank);
  for (int j = 1; j <= k; ++j) {
    num = num * one_minus_q_power(rank, m - k + j);
    den = den * one_minus_q_power(rank, j);
  }
  return exact_div(std::move(num), den);
}

QRational q_binomial(int m, int k) {
  return QRational::from_qpoly(q_binomial_poly(0, m, k));
}

bool verify_qbinom_identity(int m) {
  if (m < 0) throw Error("q-binomial identity needs m >= 0");
  const ScalarField x = ScalarField::lambda_power(1, 1);
  QPoly lhs = QPoly::one(1);
  for (int l = 0; l < m; ++l) lhs = lhs * (QPoly::one(1) - QPoly::q_power(1, l, x));

  QPoly rhs(1);
  ScalarField xk = ScalarField::one(1);
  for (int k = 0; k <= m; ++k) {
    ScalarField c = xk;
    if (k % 2) c = c * ScalarField::constant(1, -1);
    rhs += q_binomial_poly(1, m, k) * QPoly::q_power(1, k * (k - 1) / 2, c);
    xk = xk * x;
  }
  return lhs == rhs;
}

bool serre_scalar_check(const CartanData& cd, int i, int j, int sign) {
  if (i == j || i < 0 || j < 0 || i >= cd.rank || j >= cd.rank)
    throw Error("serre_scalar_check needs distinct root indices");
  if (sign != 1 && sign != -1) throw Error("orientation sign must be +1 or -1");
  const int aji = cd.a[j][i];
  if (aji == 0) return true;
  const int twice_off = 2 * cd.offset[j][i];
  const int alpha_sq = 2 * cd.sym[i];
  if (twice_off % alpha_sq != 0) return false;  // x is not a power of q_i
  const int e = aji + sign * (twice_off / alpha_sq);
  if (e > 0 || e % 2 != 0) return false;
  return -e / 2 <= -aji;
}

}  // namespace qtoda
