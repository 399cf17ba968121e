#include "pingpong/rational.hpp"

#include <cctype>

namespace pingpong {

  namespace {
    bool all_digits(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Rational::Rational(long numerator, long denominator)
      : Rational(mpz_class(numerator), mpz_class(denominator)) {}

  Rational::Rational(mpz_class numerator, mpz_class denominator) {
    if (denominator == 0) {
      throw input_error("rational with zero denominator");
    }
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
  }

  mpz_class parse_integer(std::string_view text) {
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && digits.front() == '-') {
      negative = true;
      digits.remove_prefix(1);
    }
    if (!all_digits(digits)) {
      throw input_error("malformed integer '" + std::string(text) + "'");
    }
    mpz_class z(std::string(digits), 10);
    return negative ? mpz_class(-z) : z;
  }

  Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_integer(text), mpz_class(1));
    }
    auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw input_error("malformed rational '" + std::string(text) + "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) {
      throw input_error("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash)), den);
  }

  Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
      throw input_error("division by zero");
    }
    q_ /= o.q_;
    return *this;
  }

  mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  Rational Rational::frac() const {
    return *this - Rational(floor(), mpz_class(1));
  }

  std::string Rational::str() const {
    if (is_integer()) {
      return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

}  // namespace pingpong
