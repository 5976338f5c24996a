#include "qtoda/parse.hpp"

#include <cctype>

#include "qtoda/errors.hpp"

namespace qtoda {

namespace {

class Parser {
 public:
  Parser(int rank, const std::string& s) : rank_(rank), s_(s) {}

  QRational run() {
    QRational v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_lambda() {
    skip_ws();
    if (pos_ + 1 < s_.size() && static_cast<unsigned char>(s_[pos_]) == 0xCE &&
        static_cast<unsigned char>(s_[pos_ + 1]) == 0x9B) {
      pos_ += 2;
      return true;
    }
    return false;
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000L) fail("integer too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  QRational expr() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    QRational acc = term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  QRational term() {
    QRational acc = factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        acc /= factor();
      } else {
        return acc;
      }
    }
  }

  QRational factor() {
    QRational b = base();
    skip_ws();
    if (eat('^')) {
      long e = integer();
      if (e > 10000 || e < -10000) fail("exponent too large");
      QRational out = QRational::one(rank_);
      QRational p = e < 0 ? b.inverse() : b;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= p;
      return out;
    }
    return b;
  }

  QRational base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      QRational v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat_lambda()) {
      long j = integer();
      if (j < 0 || j > rank_) fail("lambda index out of range");
      return QRational::lambda_power(rank_, static_cast<int>(j));
    }
    char c = s_[pos_];
    if (c == 'q') {
      ++pos_;
      return QRational::q_power(rank_, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = integer();
      return QRational::constant(rank_, Rational(v));
    }
    fail("unexpected character");
  }

  int rank_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

QRational parse_qrational(int rank, const std::string& s) { return Parser(rank, s).run(); }

ScalarField parse_scalar_field(int rank, const std::string& s) {
  QRational v = parse_qrational(rank, s);
  if (!v.is_q_constant()) throw ParseError("'" + s + "' involves q");
  return v.as_scalar();
}

LambdaPoly parse_lambda_poly(int rank, const std::string& s) {
  ScalarField v = parse_scalar_field(rank, s);
  if (!v.is_polynomial()) throw ParseError("'" + s + "' is not polynomial");
  return v.num();
}

}  // namespace qtoda
