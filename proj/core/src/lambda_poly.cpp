#include "qtoda/lambda_poly.hpp"

#include <algorithm>
#include <sstream>

#include "qtoda/errors.hpp"
#include "qtoda/limits.hpp"

namespace qtoda {

std::string rational_to_string(const Rational& x) { return x.get_str(); }

Rational rational_from_string(const std::string& s) {
  mpq_class x;
  if (x.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  x.canonicalize();
  return x;
}

int total_degree(const ExpVec& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool GradedLexBefore::operator()(const ExpVec& a, const ExpVec& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

LambdaPoly LambdaPoly::constant(int rank, const Rational& c) {
  LambdaPoly p(rank);
  if (!rat_is_zero(c)) p.terms_.emplace(ExpVec(rank, 0), c);
  return p;
}

LambdaPoly LambdaPoly::monomial(int rank, const ExpVec& e, const Rational& c) {
  if (static_cast<int>(e.size()) != rank) throw Error("monomial exponent size != rank");
  LambdaPoly p(rank);
  if (!rat_is_zero(c)) p.terms_.emplace(e, c);
  return p;
}

LambdaPoly LambdaPoly::lambda_power(int rank, int j, int power) {
  if (j < 0 || j > rank) throw Error("lambda index out of range");
  ExpVec e(rank, 0);
  if (j == 0) {
    for (int i = 0; i < rank; ++i) e[i] = -power;
  } else {
    e[j - 1] = power;
  }
  return monomial(rank, e);
}

bool LambdaPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == ExpVec(rank_, 0));
}

bool LambdaPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == ExpVec(rank_, 0) &&
         terms_.begin()->second == 1;
}

const ExpVec& LambdaPoly::leading_exponent() const {
  if (is_zero()) throw Error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& LambdaPoly::leading_coeff() const {
  if (is_zero()) throw Error("leading term of zero polynomial");
  return terms_.begin()->second;
}

Rational LambdaPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LambdaPoly::coeff_sum() const {
  Rational s(0);
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void LambdaPoly::add_term(const ExpVec& e, const Rational& c) {
  if (rat_is_zero(c)) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (rat_is_zero(it->second)) terms_.erase(it);
  }
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  if (rank_ != o.rank_) throw Error("rank mismatch in +");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  if (rank_ != o.rank_) throw Error("rank mismatch in -");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LambdaPoly& LambdaPoly::operator*=(const Rational& c) {
  if (rat_is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly p(*this);
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.rank_ != b.rank_) throw Error("rank mismatch in *");
  LambdaPoly out(a.rank_);
  if (a.is_zero() || b.is_zero()) return out;
  const LambdaPoly& small = a.term_count() <= b.term_count() ? a : b;
  const LambdaPoly& big = a.term_count() <= b.term_count() ? b : a;
  if (small.is_monomial())
    return big.times_monomial(small.leading_exponent(), small.leading_coeff());
  // Collect the pairwise products, sort once, fold equal exponents; much
  // cheaper than per-term tree inserts when both operands are large.
  std::vector<std::pair<ExpVec, Rational>> prod;
  prod.reserve(small.term_count() * big.term_count());
  ExpVec e(a.rank_);
  for (const auto& [ea, ca] : small.terms_) {
    for (const auto& [eb, cb] : big.terms_) {
      for (int i = 0; i < a.rank_; ++i) e[i] = ea[i] + eb[i];
      prod.emplace_back(e, ca * cb);
    }
  }
  GradedLexBefore before;
  std::sort(prod.begin(), prod.end(),
            [&](const auto& x, const auto& y) { return before(x.first, y.first); });
  std::vector<std::pair<ExpVec, Rational>> folded;
  folded.reserve(prod.size());
  for (auto& t : prod) {
    if (!folded.empty() && folded.back().first == t.first)
      folded.back().second += t.second;
    else
      folded.push_back(std::move(t));
  }
  folded.erase(std::remove_if(folded.begin(), folded.end(),
                              [](const auto& t) { return rat_is_zero(t.second); }),
               folded.end());
  guard_terms(folded.size(), "LambdaPoly product");
  out.terms_ = LambdaPoly::TermMap(folded.begin(), folded.end());
  return out;
}

ExpVec LambdaPoly::exponent_floor() const {
  if (is_zero()) return ExpVec(rank_, 0);
  ExpVec f = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < rank_; ++i) f[i] = std::min(f[i], e[i]);
  return f;
}

LambdaPoly LambdaPoly::times_monomial(const ExpVec& m, const Rational& c) const {
  if (static_cast<int>(m.size()) != rank_) throw Error("monomial size != rank");
  LambdaPoly out(rank_);
  if (rat_is_zero(c)) return out;
  ExpVec e(rank_);
  for (const auto& [e0, c0] : terms_) {
    for (int i = 0; i < rank_; ++i) e[i] = e0[i] + m[i];
    out.terms_.emplace_hint(out.terms_.end(), e, c0 * c);
  }
  return out;
}

Rational LambdaPoly::content() const {
  if (is_zero()) return Rational(0);
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  if (sgn(r) < 0) r = -r;
  return r;
}

LambdaPoly LambdaPoly::permuted(const std::vector<int>& pi) const {
  if (static_cast<int>(pi.size()) != rank_ + 1) throw Error("permutation size != rank+1");
  std::vector<int> inv(rank_ + 1, -1);
  for (int j = 0; j <= rank_; ++j) {
    if (pi[j] < 0 || pi[j] > rank_ || inv[pi[j]] != -1) throw Error("not a permutation");
    inv[pi[j]] = j;
  }
  LambdaPoly out(rank_);
  // Lift e to (0, e1..er) on indices 0..r, permute slots, then subtract the
  // new 0-slot so Λ0 is eliminated again.
  std::vector<int> lifted(rank_ + 1);
  ExpVec e2(rank_);
  for (const auto& [e, c] : terms_) {
    lifted[0] = 0;
    for (int i = 1; i <= rank_; ++i) lifted[i] = e[i - 1];
    int base = lifted[inv[0]];
    for (int i = 1; i <= rank_; ++i) e2[i - 1] = lifted[inv[i]] - base;
    out.add_term(e2, c);
  }
  return out;
}

LambdaPoly LambdaPoly::inverted_lambda() const {
  LambdaPoly out(rank_);
  ExpVec e2(rank_);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < rank_; ++i) e2[i] = -e[i];
    out.add_term(e2, c);
  }
  return out;
}

std::optional<LambdaPoly> LambdaPoly::try_divide(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.rank_ != b.rank_) throw Error("rank mismatch in try_divide");
  if (b.is_zero()) throw DivisionByZero("LambdaPoly try_divide");
  const int r = a.rank_;
  if (a.is_zero()) return LambdaPoly(r);
  // Monomials are units in the Laurent ring: strip the monomial content from
  // both sides and run ordinary multivariate division in the polynomial cone.
  ExpVec fa = a.exponent_floor(), fb = b.exponent_floor();
  ExpVec neg(r);
  for (int i = 0; i < r; ++i) neg[i] = -fa[i];
  LambdaPoly rem = a.times_monomial(neg);
  for (int i = 0; i < r; ++i) neg[i] = -fb[i];
  LambdaPoly div = b.times_monomial(neg);

  LambdaPoly quot(r);
  const ExpVec& lead_e = div.leading_exponent();
  const Rational& lead_c = div.leading_coeff();
  ExpVec t(r);
  while (!rem.is_zero()) {
    const ExpVec& re = rem.leading_exponent();
    bool ok = true;
    for (int i = 0; i < r; ++i) {
      t[i] = re[i] - lead_e[i];
      if (t[i] < 0) ok = false;
    }
    if (!ok) return std::nullopt;
    Rational c = rem.leading_coeff() / lead_c;
    quot.add_term(t, c);
    rem -= div.times_monomial(t, c);
    guard_terms(rem.term_count(), "LambdaPoly division remainder");
  }
  ExpVec shift(r);
  for (int i = 0; i < r; ++i) shift[i] = fa[i] - fb[i];
  return quot.times_monomial(shift);
}

namespace {

void append_term(std::ostream& os, bool first, const ExpVec& e, const Rational& c) {
  Rational mag = c;
  bool neg = sgn(c) < 0;
  if (neg) mag = -mag;
  if (first) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  bool any_var = false;
  for (int x : e)
    if (x != 0) any_var = true;
  bool coeff_shown = !any_var || mag != 1;
  if (coeff_shown) os << mag.get_str();
  bool need_star = coeff_shown;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (need_star) os << "*";
    os << "Λ" << (i + 1);
    if (e[i] != 1) os << "^" << e[i];
    need_star = true;
  }
}

}  // namespace

std::string LambdaPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(os, first, e, c);
    first = false;
  }
  return os.str();
}

}  // namespace qtoda
