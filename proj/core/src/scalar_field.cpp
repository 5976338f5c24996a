#include "qtoda/scalar_field.hpp"

#include "qtoda/errors.hpp"

namespace qtoda {

ScalarField::ScalarField(LambdaPoly num, LambdaPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.rank() != den_.rank()) throw Error("rank mismatch in ScalarField");
  normalize();
}

ScalarField ScalarField::constant(int rank, const Rational& c) {
  ScalarField s(rank);
  s.num_ = LambdaPoly::constant(rank, c);
  return s;
}

ScalarField ScalarField::from_poly(LambdaPoly p) {
  ScalarField s(p.rank());
  s.num_ = std::move(p);
  return s;
}

ScalarField ScalarField::monomial(int rank, const ExpVec& e, const Rational& c) {
  ScalarField s(rank);
  s.num_ = LambdaPoly::monomial(rank, e, c);
  return s;
}

ScalarField ScalarField::lambda_power(int rank, int j, int power) {
  ScalarField s(rank);
  s.num_ = LambdaPoly::lambda_power(rank, j, power);
  return s;
}

namespace {
ExpVec negated(ExpVec e) {
  for (int& x : e) x = -x;
  return e;
}
}  // namespace

void ScalarField::normalize() {
  if (den_.is_zero()) throw DivisionByZero("ScalarField denominator");
  const int r = num_.rank();
  if (num_.is_zero()) {
    den_ = LambdaPoly::constant(r, 1);
    return;
  }
  if (den_.is_monomial()) {
    num_ = num_.times_monomial(negated(den_.leading_exponent()),
                               Rational(1) / den_.leading_coeff());
    den_ = LambdaPoly::constant(r, 1);
    return;
  }
  // Strip monomial content off both sides; the net Laurent shift goes back
  // onto the numerator afterwards.
  ExpVec fn = num_.exponent_floor(), fd = den_.exponent_floor();
  num_ = num_.times_monomial(negated(fn));
  den_ = den_.times_monomial(negated(fd));

  if (auto q = LambdaPoly::try_divide(num_, den_)) {
    num_ = std::move(*q);
    den_ = LambdaPoly::constant(r, 1);
  } else if (auto h = LambdaPoly::try_divide(den_, num_)) {
    den_ = std::move(*h);
    num_ = LambdaPoly::constant(r, 1);
  }
  ExpVec shift(r);
  for (int i = 0; i < r; ++i) shift[i] = fn[i] - fd[i];
  num_ = num_.times_monomial(shift);

  if (den_.is_monomial()) {
    num_ = num_.times_monomial(negated(den_.leading_exponent()),
                               Rational(1) / den_.leading_coeff());
    den_ = LambdaPoly::constant(r, 1);
  } else if (!den_.is_one()) {
    // den with exponent floor zero and unit leading coefficient is the
    // canonical representative of its monomial-times-scalar class.
    ExpVec f2 = den_.exponent_floor();
    bool flat = true;
    for (int x : f2) flat = flat && x == 0;
    if (!flat) {
      den_ = den_.times_monomial(negated(f2));
      num_ = num_.times_monomial(negated(f2));
    }
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
      num_ *= 1 / lc;
      den_ *= 1 / lc;
    }
  }
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  if (rank() != o.rank()) throw Error("rank mismatch in ScalarField +");
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  if (rank() != o.rank()) throw Error("rank mismatch in ScalarField -");
  if (den_ == o.den_) {
    num_ -= o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

ScalarField& ScalarField::operator*=(const ScalarField& o) {
  if (rank() != o.rank()) throw Error("rank mismatch in ScalarField *");
  num_ = num_ * o.num_;
  if (den_.is_one()) {
    den_ = o.den_;
  } else if (!o.den_.is_one()) {
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

ScalarField& ScalarField::operator/=(const ScalarField& o) {
  if (rank() != o.rank()) throw Error("rank mismatch in ScalarField /");
  if (o.is_zero()) throw DivisionByZero("ScalarField divide");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

ScalarField ScalarField::operator-() const {
  ScalarField s(*this);
  s.num_ = -s.num_;
  return s;
}

ScalarField ScalarField::inverse() const {
  if (is_zero()) throw DivisionByZero("ScalarField inverse");
  ScalarField s(rank());
  s.num_ = den_;
  s.den_ = num_;
  s.normalize();
  return s;
}

ScalarField ScalarField::permuted(const std::vector<int>& pi) const {
  ScalarField s(rank());
  s.num_ = num_.permuted(pi);
  s.den_ = den_.permuted(pi);
  s.normalize();
  return s;
}

ScalarField ScalarField::inverted_lambda() const {
  ScalarField s(rank());
  s.num_ = num_.inverted_lambda();
  s.den_ = den_.inverted_lambda();
  s.normalize();
  return s;
}

bool ScalarField::operator==(const ScalarField& o) const {
  if (rank() != o.rank()) return false;
  if (num_ == o.num_ && den_ == o.den_) return true;
  return num_ * o.den_ == o.num_ * den_;
}

std::string ScalarField::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qtoda
