#include "qtoda/flag.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qtoda/errors.hpp"

namespace qtoda {

std::string FlagPoint::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < sigma.size(); ++i) os << (i ? "," : "") << sigma[i];
  os << ")";
  return os.str();
}

std::vector<FlagPoint> fixed_points(int r) {
  if (r < 1) throw Error("rank must be >= 1");
  std::vector<int> s(r + 1);
  std::iota(s.begin(), s.end(), 0);
  std::vector<FlagPoint> out;
  do {
    out.push_back(FlagPoint{s});
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

namespace {

void check_point(int r, const FlagPoint& p) {
  if (static_cast<int>(p.sigma.size()) != r + 1) throw Error("fixed point size != rank+1");
  std::vector<bool> seen(r + 1, false);
  for (int v : p.sigma) {
    if (v < 0 || v > r || seen[v]) throw Error("fixed point is not a permutation");
    seen[v] = true;
  }
}

// Exponent vector of Λ_j as a Laurent monomial in Λ1..Λr.
ExpVec lambda_exp(int r, int j, int power) {
  ExpVec e(r, 0);
  if (j == 0) {
    for (int& x : e) x = -power;
  } else {
    e[j - 1] = power;
  }
  return e;
}

void add_exp(ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

}  // namespace

int fixed_point_index(int r, const FlagPoint& p) {
  check_point(r, p);
  // Lexicographic rank of the permutation (factorial number system).
  long idx = 0;
  std::vector<int> rest(p.sigma.begin(), p.sigma.end());
  for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
    int smaller = 0;
    for (std::size_t j = i + 1; j < rest.size(); ++j)
      if (rest[j] < rest[i]) ++smaller;
    long f = 1;
    for (std::size_t k = 2; k < rest.size() - i; ++k) f *= static_cast<long>(k);
    idx += smaller * f;
  }
  return static_cast<int>(idx);
}

ScalarField restrict_p(int r, const FlagPoint& p, int i) {
  check_point(r, p);
  if (i < 0 || i > r + 1) throw Error("p index out of range");
  ExpVec e(r, 0);
  for (int k = 0; k < i && k <= r; ++k) add_exp(e, lambda_exp(r, p.sigma[k], -1));
  return ScalarField::monomial(r, e);
}

ScalarField restrict_monomial(int r, const FlagPoint& p, const std::vector<int>& z) {
  check_point(r, p);
  if (static_cast<int>(z.size()) != r) throw Error("z size != rank");
  ExpVec e(r, 0);
  for (int i = 1; i <= r; ++i) {
    if (z[i - 1] == 0) continue;
    for (int k = 0; k < i; ++k) add_exp(e, lambda_exp(r, p.sigma[k], -z[i - 1]));
  }
  return ScalarField::monomial(r, e);
}

std::vector<ScalarField> tangent_weights(int r, const FlagPoint& p) {
  check_point(r, p);
  std::vector<ScalarField> out;
  out.reserve(r * (r + 1) / 2);
  for (int i = 0; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      ExpVec e = lambda_exp(r, p.sigma[j], 1);
      add_exp(e, lambda_exp(r, p.sigma[i], -1));
      out.push_back(ScalarField::monomial(r, e));
    }
  return out;
}

LocalizedClass LocalizedClass::ones(int r) {
  LocalizedClass c;
  c.rank = r;
  c.values.assign(fixed_points(r).size(), QRational::one(r));
  return c;
}

LocalizedClass LocalizedClass::from_scalar(int r, const ScalarField& s) {
  LocalizedClass c;
  c.rank = r;
  c.values.assign(fixed_points(r).size(), QRational::from_scalar(s));
  return c;
}

const QRational& LocalizedClass::at(int r, const FlagPoint& p) const {
  return values.at(fixed_point_index(r, p));
}

LocalizedClass& LocalizedClass::operator*=(const LocalizedClass& o) {
  if (rank != o.rank || values.size() != o.values.size())
    throw Error("localized class mismatch in *");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] *= o.values[i];
  return *this;
}

LocalizedClass& LocalizedClass::scale(const QRational& s) {
  for (auto& v : values) v *= s;
  return *this;
}

bool LocalizedClass::operator==(const LocalizedClass& o) const {
  if (rank != o.rank || values.size() != o.values.size()) return false;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!(values[i] == o.values[i])) return false;
  return true;
}

LambdaPoly euler_denominator(int r) {
  LambdaPoly prod = LambdaPoly::constant(r, 1);
  for (int a = 0; a <= r; ++a)
    for (int b = 0; b <= r; ++b) {
      if (a == b) continue;
      LambdaPoly f = LambdaPoly::constant(r, 1);
      ExpVec e = lambda_exp(r, a, 1);
      add_exp(e, lambda_exp(r, b, -1));
      f.add_term(e, -1);
      prod = prod * f;
    }
  return prod;
}

LambdaPoly euler_complement(int r, const FlagPoint& p) {
  LambdaPoly prod = LambdaPoly::constant(r, 1);
  for (int i = 0; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      LambdaPoly f = LambdaPoly::constant(r, 1);
      ExpVec e = lambda_exp(r, p.sigma[j], 1);
      add_exp(e, lambda_exp(r, p.sigma[i], -1));
      f.add_term(e, -1);
      prod = prod * f;
    }
  return prod;
}

QRational chi_flag(const LocalizedClass& phi) {
  const int r = phi.rank;
  auto points = fixed_points(r);
  if (phi.values.size() != points.size()) throw Error("localized class has wrong arity");
  QRational acc(r);
  for (std::size_t k = 0; k < points.size(); ++k) {
    QRational term = phi.values[k];
    term.scale(ScalarField::from_poly(euler_complement(r, points[k])));
    acc += term;
  }
  acc.scale(ScalarField(LambdaPoly::constant(r, 1), euler_denominator(r)));
  return acc;
}

QRational pairing(const LocalizedClass& a, const LocalizedClass& b) {
  LocalizedClass prod = a;
  prod *= b;
  return chi_flag(prod);
}

LambdaPoly weyl_character(int r, const std::vector<int>& z) {
  if (static_cast<int>(z.size()) != r) throw Error("z size != rank");
  for (int zi : z)
    if (zi < 0) throw Error("weyl_character needs a dominant weight");
  const int n = r + 1;
  // Partition mu_k = z_k + ... + z_r (mu_{r+1} = 0), staircase rho added.
  std::vector<int> exps(n);
  for (int k = 1; k <= n; ++k) {
    int mu = 0;
    for (int i = k; i <= r; ++i) mu += z[i - 1];
    exps[k - 1] = mu + n - k;
  }
  std::vector<int> rho(n);
  for (int k = 1; k <= n; ++k) rho[k - 1] = n - k;

  // Alternants in the inverse characters x_j = Λ_j^{-1}, by Leibniz expansion.
  auto alternant = [&](const std::vector<int>& column_exps) {
    LambdaPoly det(r);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inv = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (perm[i] > perm[j]) ++inv;
      ExpVec e(r, 0);
      for (int row = 0; row < n; ++row) add_exp(e, lambda_exp(r, row, -column_exps[perm[row]]));
      det.add_term(e, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
  };

  LambdaPoly num = alternant(exps);
  LambdaPoly den = alternant(rho);
  auto q = LambdaPoly::try_divide(num, den);
  if (!q) throw Error("alternant ratio failed to divide");
  return *q;
}

}  // namespace qtoda
