// Exact rational numbers backed by GMP.

#ifndef PINGPONG_RATIONAL_HPP_
#define PINGPONG_RATIONAL_HPP_

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pingpong/errors.hpp"

namespace pingpong {

  //! Arbitrary-precision rational in lowest terms with a positive denominator.
  //!
  //! Thin value wrapper over `mpq_class`. Every constructor and arithmetic
  //! operator leaves the value canonical, so equality is representation
  //! equality and the text form is unique.
  class Rational {
   public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(runtime/explicit)
    Rational(long numerator, long denominator);
    Rational(mpz_class numerator, mpz_class denominator);
    explicit Rational(mpq_class q) : q_(std::move(q)) {
      q_.canonicalize();
    }

    //! Parses `p` or `p/q` with decimal integers, optional leading `-` on
    //! `p`, and `q > 0`. Throws `input_error` otherwise (including `1/0`).
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept {
      return q_;
    }
    mpz_class numerator() const {
      return q_.get_num();
    }
    mpz_class denominator() const {
      return q_.get_den();
    }

    int sign() const noexcept {
      return sgn(q_);
    }
    bool is_zero() const noexcept {
      return sign() == 0;
    }
    bool is_integer() const {
      return q_.get_den() == 1;
    }

    //! Largest integer not exceeding the value.
    mpz_class floor() const;
    //! The residue in [0, 1).
    Rational frac() const;

    Rational operator-() const {
      return Rational(mpq_class(-q_));
    }
    Rational& operator+=(const Rational& o) {
      q_ += o.q_;
      return *this;
    }
    Rational& operator-=(const Rational& o) {
      q_ -= o.q_;
      return *this;
    }
    Rational& operator*=(const Rational& o) {
      q_ *= o.q_;
      return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) {
      return a += b;
    }
    friend Rational operator-(Rational a, const Rational& b) {
      return a -= b;
    }
    friend Rational operator*(Rational a, const Rational& b) {
      return a *= b;
    }
    friend Rational operator/(Rational a, const Rational& b) {
      return a /= b;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
      return a.q_ == b.q_;
    }
    friend std::strong_ordering operator<=>(const Rational& a,
                                            const Rational& b) {
      int c = cmp(a.q_, b.q_);
      return c < 0   ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    //! `p/q`, or `p` when the denominator is 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
      return os << r.str();
    }

   private:
    mpq_class q_;
  };

  //! Parses a decimal integer with optional leading `-`.
  mpz_class parse_integer(std::string_view text);

}  // namespace pingpong

#endif  // PINGPONG_RATIONAL_HPP_
