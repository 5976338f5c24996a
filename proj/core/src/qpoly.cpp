#include "qtoda/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qtoda/errors.hpp"

namespace qtoda {

QPoly QPoly::constant(ScalarField c) {
  QPoly p(c.rank());
  if (!c.is_zero()) p.c_.push_back(std::move(c));
  return p;
}

QPoly QPoly::q_power(int rank, int k, ScalarField c) {
  if (k < 0) throw Error("QPoly exponent must be >= 0");
  QPoly p(rank);
  if (c.is_zero()) return p;
  p.c_.assign(k + 1, ScalarField(rank));
  p.c_[k] = std::move(c);
  return p;
}

QPoly QPoly::q_power(int rank, int k) { return q_power(rank, k, ScalarField::one(rank)); }

int QPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

const ScalarField& QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) throw Error("QPoly coefficient out of range");
  return c_[k];
}

const ScalarField& QPoly::leading() const {
  if (is_zero()) throw Error("leading coefficient of zero QPoly");
  return c_.back();
}

void QPoly::set_coeff(int k, ScalarField v) {
  if (k < 0) throw Error("QPoly exponent must be >= 0");
  if (k >= static_cast<int>(c_.size())) {
    if (v.is_zero()) return;
    c_.resize(k + 1, ScalarField(rank_));
  }
  c_[k] = std::move(v);
  trim();
}

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (rank_ != o.rank_) throw Error("rank mismatch in QPoly +");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ScalarField(rank_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (rank_ != o.rank_) throw Error("rank mismatch in QPoly -");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ScalarField(rank_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly p(*this);
  for (auto& v : p.c_) v = -v;
  return p;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.rank() != b.rank()) throw Error("rank mismatch in QPoly *");
  QPoly out(a.rank());
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, ScalarField(a.rank()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  out.trim();
  return out;
}

QPoly QPoly::scaled(const ScalarField& s) const {
  QPoly out(rank_);
  if (s.is_zero()) return out;
  out.c_ = c_;
  for (auto& v : out.c_) v *= s;
  return out;
}

QPoly QPoly::times_q(int k) const {
  if (k < 0) throw Error("times_q exponent must be >= 0");
  if (is_zero() || k == 0) return *this;
  QPoly out(rank_);
  out.c_.assign(c_.size() + k, ScalarField(rank_));
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i + k] = c_[i];
  return out;
}

QPoly QPoly::shifted_down(int k) const {
  if (k == 0) return *this;
  if (is_zero()) return *this;
  if (valuation() < k) throw Error("shifted_down below valuation");
  QPoly out(rank_);
  out.c_.assign(c_.begin() + k, c_.end());
  return out;
}

QPoly QPoly::permuted(const std::vector<int>& pi) const {
  QPoly out(rank_);
  out.c_.reserve(c_.size());
  for (const auto& v : c_) out.c_.push_back(v.permuted(pi));
  out.trim();
  return out;
}

QPoly QPoly::inverted_lambda() const {
  QPoly out(rank_);
  out.c_.reserve(c_.size());
  for (const auto& v : c_) out.c_.push_back(v.inverted_lambda());
  out.trim();
  return out;
}

bool QPoly::operator==(const QPoly& o) const {
  if (rank_ != o.rank_ || c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

std::optional<QPoly> qpoly_try_divide(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero("QPoly divide");
  if (a.is_zero()) return QPoly(a.rank());
  if (a.degree() < b.degree()) return std::nullopt;
  QPoly quot(a.rank());
  QPoly rem = a;
  ScalarField lb_inv = b.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int k = rem.degree() - b.degree();
    ScalarField t = rem.leading() * lb_inv;
    quot += QPoly::q_power(a.rank(), k, t);
    rem -= b.scaled(t).times_q(k);
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

QPoly qpoly_divide_exact(const QPoly& a, const QPoly& b) {
  auto q = qpoly_try_divide(a, b);
  if (!q) throw Error("QPoly division not exact");
  return std::move(*q);
}

namespace {

// Denominator-cleared image of a QPoly: LambdaPoly coefficients, dense in q.
using Cleared = std::vector<LambdaPoly>;

int cdeg(const Cleared& p) { return static_cast<int>(p.size()) - 1; }

void ctrim(Cleared& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Cleared clear_denominators(const QPoly& f) {
  const int r = f.rank();
  const int n = f.degree() + 1;
  std::vector<LambdaPoly> dens;
  dens.reserve(n);
  for (int i = 0; i < n; ++i) dens.push_back(f.coeff(i).den());
  std::vector<LambdaPoly> pre(n + 1, LambdaPoly::constant(r, 1));
  std::vector<LambdaPoly> suf(n + 1, LambdaPoly::constant(r, 1));
  for (int i = 0; i < n; ++i) pre[i + 1] = pre[i] * dens[i];
  for (int i = n - 1; i >= 0; --i) suf[i] = suf[i + 1] * dens[i];
  Cleared out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(f.coeff(i).num() * (pre[i] * suf[i + 1]));
  ctrim(out);
  return out;
}

// Rational and monomial content shared by all coefficients; stripping it is a
// unit operation over the field, so the gcd class is unchanged.
void strip_content(Cleared& p, int rank) {
  if (p.empty()) return;
  Rational c(0);
  ExpVec floor(rank, 0);
  bool first = true;
  for (const auto& v : p) {
    if (v.is_zero()) continue;
    mpz_gcd(c.get_num_mpz_t(), c.get_num_mpz_t(), v.content().get_num_mpz_t());
    mpz_lcm(c.get_den_mpz_t(), c.get_den_mpz_t(), v.content().get_den_mpz_t());
    ExpVec f = v.exponent_floor();
    if (first) {
      floor = f;
      first = false;
    } else {
      for (int i = 0; i < rank; ++i) floor[i] = std::min(floor[i], f[i]);
    }
  }
  c.canonicalize();
  if (rat_is_zero(c)) return;
  ExpVec neg(rank);
  for (int i = 0; i < rank; ++i) neg[i] = -floor[i];
  for (auto& v : p) {
    v = v.times_monomial(neg, Rational(1) / c);
  }
}

LambdaPoly exact_div(const LambdaPoly& a, const LambdaPoly& b) {
  auto q = LambdaPoly::try_divide(a, b);
  if (!q) throw Error("subresultant sequence: non-exact division");
  return *q;
}

Cleared scaled_cleared(const Cleared& p, const LambdaPoly& s) {
  Cleared out;
  out.reserve(p.size());
  for (const auto& v : p) out.push_back(v * s);
  return out;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
Cleared prem(const Cleared& a, const Cleared& b) {
  const int n = cdeg(b);
  const LambdaPoly& lb = b.back();
  Cleared rem = a;
  int e = cdeg(a) - n + 1;
  while (!rem.empty() && cdeg(rem) >= n) {
    LambdaPoly top = rem.back();
    int k = cdeg(rem) - n;
    Cleared next = scaled_cleared(rem, lb);
    for (int i = 0; i <= n; ++i) next[i + k] -= top * b[i];
    ctrim(next);
    if (!next.empty() && cdeg(next) >= cdeg(rem)) throw Error("prem failed to reduce degree");
    rem = std::move(next);
    --e;
  }
  if (e > 0) {
    LambdaPoly factor = LambdaPoly::constant(lb.rank(), 1);
    for (int i = 0; i < e; ++i) factor = factor * lb;
    rem = scaled_cleared(rem, factor);
  }
  return rem;
}

LambdaPoly poly_pow(const LambdaPoly& b, int e, int rank) {
  LambdaPoly out = LambdaPoly::constant(rank, 1);
  for (int i = 0; i < e; ++i) out = out * b;
  return out;
}

Cleared gcd_cleared(Cleared u, Cleared v, int rank) {
  strip_content(u, rank);
  strip_content(v, rank);
  if (cdeg(u) < cdeg(v)) std::swap(u, v);
  LambdaPoly g = LambdaPoly::constant(rank, 1);
  LambdaPoly h = LambdaPoly::constant(rank, 1);
  while (true) {
    int delta = cdeg(u) - cdeg(v);
    Cleared rem = prem(u, v);
    if (rem.empty()) {
      strip_content(v, rank);
      return v;
    }
    if (cdeg(rem) == 0) {
      return {LambdaPoly::constant(rank, 1)};
    }
    u = std::move(v);
    LambdaPoly divisor = g * poly_pow(h, delta, rank);
    v.clear();
    v.reserve(rem.size());
    for (const auto& coefficient : rem) {
      v.push_back(coefficient.is_zero() ? LambdaPoly(rank) : exact_div(coefficient, divisor));
    }
    g = u.back();
    if (delta > 0) {
      h = exact_div(poly_pow(g, delta, rank), poly_pow(h, delta - 1, rank));
    }
  }
}

}  // namespace

QPoly qpoly_gcd(const QPoly& a, const QPoly& b) {
  const int r = a.rank();
  if (a.is_zero() && b.is_zero()) return QPoly(r);
  auto monic = [](const QPoly& p) { return p.scaled(p.leading().inverse()); };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);

  int va = a.valuation(), vb = b.valuation();
  int v = std::min(va, vb);
  QPoly a0 = a.shifted_down(va), b0 = b.shifted_down(vb);
  QPoly core;
  if (a0.is_constant() || b0.is_constant()) {
    core = QPoly::one(r);
  } else {
    Cleared g = gcd_cleared(clear_denominators(a0), clear_denominators(b0), r);
    QPoly gq(r);
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
      gq.set_coeff(i, ScalarField::from_poly(g[i]));
    core = monic(gq);
  }
  return core.times_q(v);
}

namespace {

// One printed term: sign split off only when the coefficient is a plain
// monomial, so every rendering stays parseable.
void append_qterm(std::ostream& os, bool first, const ScalarField& s, int k) {
  std::string body;
  bool neg = false;
  if (s.is_monomial()) {
    const auto& [e, c] = *s.num().terms().begin();
    Rational mag = c;
    if (sgn(c) < 0) {
      neg = true;
      mag = -mag;
    }
    std::ostringstream t;
    bool any_var = false;
    for (int x : e)
      if (x != 0) any_var = true;
    bool coeff_shown = (!any_var && k == 0) || mag != 1;
    if (coeff_shown) t << mag.get_str();
    bool need_star = coeff_shown;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) t << "*";
      t << "Λ" << (i + 1);
      if (e[i] != 1) t << "^" << e[i];
      need_star = true;
    }
    if (k != 0) {
      if (need_star) t << "*";
      t << "q";
      if (k != 1) t << "^" << k;
    }
    body = t.str();
  } else {
    std::ostringstream t;
    if (s.is_polynomial())
      t << "(" << s.num().str() << ")";
    else
      t << s.str();
    if (k != 0) t << "*q" << (k == 1 ? std::string() : "^" + std::to_string(k));
    body = t.str();
  }
  if (first)
    os << (neg ? "-" : "") << body;
  else
    os << (neg ? " - " : " + ") << body;
}

}  // namespace

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    append_qterm(os, first, c_[k], k);
    first = false;
  }
  return os.str();
}

}  // namespace qtoda
