#include "pingpong/cyclic.hpp"

namespace pingpong {

  ProjPoint::ProjPoint(mpz_class x, mpz_class y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_ == 0 && y_ == 0) {
      throw input_error("projective point (0:0)");
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x_.get_mpz_t(), y_.get_mpz_t());
    x_ /= g;
    y_ /= g;
    if (y_ < 0 || (y_ == 0 && x_ < 0)) {
      x_ = -x_;
      y_ = -y_;
    }
  }

  ProjPoint ProjPoint::from_vector(const Rational& x, const Rational& y) {
    mpz_class den;
    mpz_lcm(den.get_mpz_t(),
            x.value().get_den_mpz_t(),
            y.value().get_den_mpz_t());
    mpz_class xi = x.numerator() * (den / x.denominator());
    mpz_class yi = y.numerator() * (den / y.denominator());
    return ProjPoint(xi, yi);
  }

  ProjPoint ProjPoint::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw input_error("projective point must be written p:q, got '"
                        + std::string(text) + "'");
    }
    return ProjPoint(parse_integer(text.substr(0, colon)),
                     parse_integer(text.substr(colon + 1)));
  }

}  // namespace pingpong
