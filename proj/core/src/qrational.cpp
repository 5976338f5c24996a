#include "qtoda/qrational.hpp"

#include <algorithm>

#include "qtoda/errors.hpp"

namespace qtoda {

namespace {

Rational rat_pow(const Rational& b, int e) {
  if (e == 0) return Rational(1);
  Rational base = e > 0 ? b : Rational(Rational(1) / b);
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
  return out;
}

Rational eval_lambda(const LambdaPoly& p, const std::vector<Rational>& lam) {
  Rational acc(0);
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < lam.size(); ++i)
      if (e[i] != 0) t *= rat_pow(lam[i], e[i]);
    acc += t;
  }
  return acc;
}

// Dense rational image of p under Lambda_i := lam_i; false when a coefficient
// denominator vanishes at the point.
bool eval_qpoly(const QPoly& p, const std::vector<Rational>& lam, std::vector<Rational>& out) {
  out.assign(p.degree() + 1, Rational(0));
  for (int k = 0; k <= p.degree(); ++k) {
    const ScalarField& c = p.coeff(k);
    if (c.is_zero()) continue;
    Rational d = eval_lambda(c.den(), lam);
    if (rat_is_zero(d)) return false;
    out[k] = eval_lambda(c.num(), lam) / d;
  }
  return true;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!rat_is_zero(x)) return false;
  return true;
}

// Exact-division test for the images; f must be monic.  A symbolic division
// specializes coefficientwise (only the leading coefficient of f, which is 1,
// gets inverted), so failure here proves symbolic failure.
bool uni_divides(const std::vector<Rational>& n, const std::vector<Rational>& f) {
  int dn = static_cast<int>(n.size()) - 1;
  while (dn >= 0 && rat_is_zero(n[dn])) --dn;
  if (dn < 0) return true;
  int df = static_cast<int>(f.size()) - 1;
  if (dn < df) return false;
  std::vector<Rational> r(n.begin(), n.begin() + dn + 1);
  for (int k = dn; k >= df; --k) {
    if (rat_is_zero(r[k])) continue;
    Rational t = r[k];
    for (int i = 0; i < df; ++i) r[k - df + i] -= t * f[i];
    r[k] = 0;
  }
  for (int i = 0; i < df; ++i)
    if (!rat_is_zero(r[i])) return false;
  return true;
}

std::vector<mpz_class> to_primitive(const std::vector<Rational>& v) {
  mpz_class l(1);
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> out(v.size());
  mpz_class g(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_class m;
    mpz_divexact(m.get_mpz_t(), l.get_mpz_t(), v[i].get_den_mpz_t());
    out[i] = mpz_class(v[i].get_num()) * m;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

int mpz_deg(const std::vector<mpz_class>& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[d] == 0) --d;
  return d;
}

void mpz_strip_content(std::vector<mpz_class>& p) {
  mpz_class g(0);
  for (const auto& x : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Degree of gcd(a, b) over Q via a primitive pseudo-remainder sequence.
int uni_gcd_degree(std::vector<mpz_class> a, std::vector<mpz_class> b) {
  if (mpz_deg(a) < mpz_deg(b)) std::swap(a, b);
  while (true) {
    int db = mpz_deg(b);
    if (db < 0) return mpz_deg(a);
    if (db == 0) return 0;
    std::vector<mpz_class> r = a;
    const mpz_class& lcb = b[db];
    for (int k = mpz_deg(r); k >= db; k = mpz_deg(r)) {
      mpz_class lcr = r[k];
      for (auto& x : r) x *= lcb;
      for (int i = 0; i <= db; ++i) r[k - db + i] -= lcr * b[i];
    }
    r.resize(db);
    mpz_strip_content(r);
    a = std::move(b);
    b = std::move(r);
  }
}

// A shared specialization Lambda_i := prime_i of the numerator and the
// denominator factors.  Where the images exist they give sound one-sided
// tests: a factor keeps its degree (it is monic), so a common symbolic factor
// survives specialization; divisibility and coprimality certificates follow.
struct ProbeImage {
  bool usable = false;
  std::vector<Rational> lam;
  std::vector<Rational> num;
  std::vector<mpz_class> num_prim;
  std::vector<std::optional<std::vector<Rational>>> fac;

  void refresh_num(const QPoly& n) {
    usable = eval_qpoly(n, lam, num);
    if (usable) num_prim = to_primitive(num);
  }
};

ProbeImage make_probe(const QPoly& num, const std::vector<QPoly>& fac) {
  static const int kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
                                89, 97, 101, 103, 107, 109, 113, 127, 131, 137};
  ProbeImage pr;
  const int r = num.rank();
  const int attempts = r == 0 ? 1 : std::min<int>(4, 32 / std::max(r, 1));
  for (int attempt = 0; attempt < attempts && !pr.usable; ++attempt) {
    pr.lam.assign(r, Rational(0));
    for (int i = 0; i < r; ++i) pr.lam[i] = Rational(kPrimes[attempt * r + i]);
    pr.refresh_num(num);
  }
  if (!pr.usable) return pr;
  pr.fac.resize(fac.size());
  for (std::size_t i = 0; i < fac.size(); ++i) {
    std::vector<Rational> t;
    if (eval_qpoly(fac[i], pr.lam, t)) pr.fac[i] = std::move(t);
  }
  return pr;
}

}  // namespace

QRational::QRational(QPoly num, QPoly den) : num_(std::move(num)) {
  if (num_.rank() != den.rank()) throw Error("rank mismatch in QRational");
  fac_.assign(1, std::move(den));
  normalize();
}

QRational QRational::one(int rank) {
  QRational x(rank);
  x.num_ = QPoly::one(rank);
  return x;
}

QRational QRational::constant(int rank, const Rational& c) {
  QRational x(rank);
  x.num_ = QPoly::constant(ScalarField::constant(rank, c));
  return x;
}

QRational QRational::from_scalar(const ScalarField& s) {
  QRational x(s.rank());
  x.num_ = QPoly::constant(s);
  return x;
}

QRational QRational::from_qpoly(QPoly p) {
  QRational x(p.rank());
  x.num_ = std::move(p);
  return x;
}

QRational QRational::lambda_power(int rank, int j, int power) {
  return from_scalar(ScalarField::lambda_power(rank, j, power));
}

QRational QRational::q_monomial(const ScalarField& s, int k) {
  QRational x(s.rank());
  if (s.is_zero()) return x;
  if (k >= 0) {
    x.num_ = QPoly::q_power(s.rank(), k, s);
  } else {
    x.num_ = QPoly::constant(s);
    x.fac_.assign(1, QPoly::q_power(s.rank(), -k));
  }
  return x;
}

QPoly QRational::den() const {
  QPoly d = QPoly::one(rank());
  for (const auto& f : fac_) d = d * f;
  return d;
}

ScalarField QRational::as_scalar() const {
  if (!is_q_constant()) throw Error("QRational is not constant in q");
  if (is_zero()) return ScalarField(rank());
  return num_.coeff(0);
}

void QRational::normalize() {
  const int r = rank();
  ScalarField unit = ScalarField::one(r);
  {
    std::vector<QPoly> keep;
    keep.reserve(fac_.size());
    for (auto& f : fac_) {
      if (f.is_zero()) throw DivisionByZero("QRational denominator");
      if (f.is_constant())
        unit *= f.coeff(0);
      else
        keep.push_back(std::move(f));
    }
    fac_ = std::move(keep);
  }
  if (num_.is_zero()) {
    fac_.clear();
    return;
  }
  int vd = 0;
  for (const auto& f : fac_) vd += f.valuation();
  int v = std::min(num_.valuation(), vd);
  if (v > 0) {
    num_ = num_.shifted_down(v);
    int left = v;
    std::vector<QPoly> keep;
    keep.reserve(fac_.size());
    for (auto& f : fac_) {
      int s = std::min(left, f.valuation());
      if (s > 0) {
        f = f.shifted_down(s);
        left -= s;
      }
      if (f.is_constant())
        unit *= f.coeff(0);
      else
        keep.push_back(std::move(f));
    }
    fac_ = std::move(keep);
  }
  for (auto& f : fac_) {
    const ScalarField& lc = f.leading();
    if (!lc.is_one()) {
      unit *= lc;
      f = f.scaled(lc.inverse());
    }
  }
  if (!unit.is_one()) num_ = num_.scaled(unit.inverse());
  if (num_.is_constant() || fac_.empty()) return;

  ProbeImage pr = make_probe(num_, fac_);

  // cancel whole factors by exact division, cheap-rejecting via the images
  for (std::size_t i = 0; i < fac_.size();) {
    if (num_.is_constant()) break;
    if (fac_[i].degree() <= num_.degree() &&
        (!pr.usable || !pr.fac[i] || uni_divides(pr.num, *pr.fac[i]))) {
      if (auto q = qpoly_try_divide(num_, fac_[i])) {
        num_ = std::move(*q);
        if (pr.usable) pr.refresh_num(num_);
        fac_.erase(fac_.begin() + i);
        if (!pr.fac.empty()) pr.fac.erase(pr.fac.begin() + i);
        continue;
      }
    }
    ++i;
  }

  // partial overlaps: certify coprimality per factor, small gcd fallback
  bool progress = true;
  while (progress && !num_.is_constant() && !fac_.empty()) {
    progress = false;
    for (std::size_t i = 0; i < fac_.size();) {
      if (num_.is_constant()) break;
      if (pr.usable && pr.fac[i] && !all_zero(pr.num) &&
          uni_gcd_degree(pr.num_prim, to_primitive(*pr.fac[i])) == 0) {
        ++i;
        continue;
      }
      QPoly g = qpoly_gcd(num_, fac_[i]);
      if (g.degree() > 0) {
        num_ = qpoly_divide_exact(num_, g);
        fac_[i] = qpoly_divide_exact(fac_[i], g);
        progress = true;
        if (pr.usable) {
          pr.refresh_num(num_);
          std::vector<Rational> t;
          pr.fac[i].reset();
          if (eval_qpoly(fac_[i], pr.lam, t)) pr.fac[i] = std::move(t);
        }
        if (fac_[i].is_constant()) {
          fac_.erase(fac_.begin() + i);
          if (!pr.fac.empty()) pr.fac.erase(pr.fac.begin() + i);
          continue;
        }
      }
      ++i;
    }
  }
}

QRational& QRational::operator+=(const QRational& o) {
  if (rank() != o.rank()) throw Error("rank mismatch in QRational +");
  if (this == &o) {
    num_ = num_.scaled(ScalarField::constant(rank(), Rational(2)));
    return *this;
  }
  std::vector<char> used(o.fac_.size(), 0);
  QPoly prod_a = QPoly::one(rank());
  for (const auto& f : fac_) {
    bool matched = false;
    for (std::size_t j = 0; j < o.fac_.size(); ++j)
      if (!used[j] && f == o.fac_[j]) {
        used[j] = 1;
        matched = true;
        break;
      }
    if (!matched) prod_a = prod_a * f;
  }
  QPoly prod_b = QPoly::one(rank());
  for (std::size_t j = 0; j < o.fac_.size(); ++j)
    if (!used[j]) {
      prod_b = prod_b * o.fac_[j];
      fac_.push_back(o.fac_[j]);
    }
  num_ = num_ * prod_b + o.num_ * prod_a;
  normalize();
  return *this;
}

QRational& QRational::operator-=(const QRational& o) {
  if (rank() != o.rank()) throw Error("rank mismatch in QRational -");
  if (this == &o) {
    *this = QRational(rank());
    return *this;
  }
  std::vector<char> used(o.fac_.size(), 0);
  QPoly prod_a = QPoly::one(rank());
  for (const auto& f : fac_) {
    bool matched = false;
    for (std::size_t j = 0; j < o.fac_.size(); ++j)
      if (!used[j] && f == o.fac_[j]) {
        used[j] = 1;
        matched = true;
        break;
      }
    if (!matched) prod_a = prod_a * f;
  }
  QPoly prod_b = QPoly::one(rank());
  for (std::size_t j = 0; j < o.fac_.size(); ++j)
    if (!used[j]) {
      prod_b = prod_b * o.fac_[j];
      fac_.push_back(o.fac_[j]);
    }
  num_ = num_ * prod_b - o.num_ * prod_a;
  normalize();
  return *this;
}

QRational& QRational::operator*=(const QRational& o) {
  if (rank() != o.rank()) throw Error("rank mismatch in QRational *");
  if (this == &o) {
    QRational tmp(o);
    return *this *= tmp;
  }
  if (o.fac_.empty() && o.num_.is_constant()) {
    if (o.num_.is_zero()) {
      num_ = QPoly(rank());
      fac_.clear();
      return *this;
    }
    num_ = num_.scaled(o.num_.coeff(0));
    return *this;
  }
  num_ = num_ * o.num_;
  fac_.insert(fac_.end(), o.fac_.begin(), o.fac_.end());
  normalize();
  return *this;
}

QRational& QRational::operator/=(const QRational& o) {
  if (rank() != o.rank()) throw Error("rank mismatch in QRational /");
  if (o.is_zero()) throw DivisionByZero("QRational divide");
  if (this == &o) {
    *this = QRational::one(rank());
    return *this;
  }
  if (o.fac_.empty() && o.num_.is_constant()) {
    num_ = num_.scaled(o.num_.coeff(0).inverse());
    return *this;
  }
  num_ = num_ * o.den();
  fac_.push_back(o.num_);
  normalize();
  return *this;
}

QRational QRational::operator-() const {
  QRational x(*this);
  x.num_ = -x.num_;
  return x;
}

QRational QRational::inverse() const {
  if (is_zero()) throw DivisionByZero("QRational inverse");
  QRational x(rank());
  x.num_ = den();
  x.fac_.assign(1, num_);
  x.normalize();
  return x;
}

QRational& QRational::scale(const ScalarField& s) {
  if (s.is_zero()) {
    num_ = QPoly(rank());
    fac_.clear();
    return *this;
  }
  num_ = num_.scaled(s);
  return *this;
}

int QRational::q_degree_gap() const {
  if (is_zero()) throw Error("q_degree_gap of zero");
  int dd = 0;
  for (const auto& f : fac_) dd += f.degree();
  return dd - num_.degree();
}

QRational QRational::substituted_q(const QRational& v) const {
  auto eval = [&](const QPoly& p) {
    QRational acc(rank());
    for (int k = p.degree(); k >= 0; --k) {
      acc *= v;
      acc += QRational::from_scalar(p.coeff(k));
    }
    return acc;
  };
  QRational dv = QRational::one(rank());
  for (const auto& f : fac_) {
    QRational fv = eval(f);
    if (fv.is_zero())
      throw PoleError("substitution q := " + v.str() + " annihilates denominator " + den().str());
    dv *= fv;
  }
  return eval(num_) / dv;
}

QRational QRational::substituted_q_power(int k) const {
  if (k == 0) throw Error("q := q^0 collapses the variable");
  if (k == 1 || is_zero()) return *this;
  const int r = rank();
  // p(q^k) written as q-shift * polynomial, shift = k*deg when k < 0.
  auto remap = [&](const QPoly& p, int& shift) {
    QPoly out(r);
    if (k > 0) {
      shift = 0;
      for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) out.set_coeff(k * i, p.coeff(i));
    } else {
      shift = k * p.degree();
      for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) out.set_coeff(k * i - shift, p.coeff(i));
    }
    return out;
  };
  int sn = 0;
  QRational out(r);
  out.num_ = remap(num_, sn);
  int net = sn;
  out.fac_.reserve(fac_.size() + 1);
  for (const auto& f : fac_) {
    int sf = 0;
    out.fac_.push_back(remap(f, sf));
    net -= sf;
  }
  if (net >= 0)
    out.num_ = out.num_.times_q(net);
  else
    out.fac_.push_back(QPoly::q_power(r, -net));
  out.normalize();
  return out;
}

QRational QRational::permuted(const std::vector<int>& pi) const {
  QRational x(rank());
  x.num_ = num_.permuted(pi);
  x.fac_.reserve(fac_.size());
  for (const auto& f : fac_) x.fac_.push_back(f.permuted(pi));
  x.normalize();
  return x;
}

QRational QRational::inverted_lambda() const {
  QRational x(rank());
  x.num_ = num_.inverted_lambda();
  x.fac_.reserve(fac_.size());
  for (const auto& f : fac_) x.fac_.push_back(f.inverted_lambda());
  x.normalize();
  return x;
}

bool QRational::operator==(const QRational& o) const {
  if (rank() != o.rank()) return false;
  if (fac_.size() == o.fac_.size()) {
    std::vector<char> used(o.fac_.size(), 0);
    bool same = true;
    for (const auto& f : fac_) {
      bool matched = false;
      for (std::size_t j = 0; j < o.fac_.size(); ++j)
        if (!used[j] && f == o.fac_[j]) {
          used[j] = 1;
          matched = true;
          break;
        }
      if (!matched) {
        same = false;
        break;
      }
    }
    if (same) return num_ == o.num_;
  }
  return num_ * o.den() == o.num_ * den();
}

std::string QRational::str() const {
  if (fac_.empty()) return num_.str();
  return "(" + num_.str() + ")/(" + den().str() + ")";
}

}  // namespace qtoda
