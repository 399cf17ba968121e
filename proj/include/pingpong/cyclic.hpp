// Points of the two cyclically ordered exact domains: the circle R/Z and the
// projective line RP^1 over Q.

#ifndef PINGPONG_CYCLIC_HPP_
#define PINGPONG_CYCLIC_HPP_

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pingpong/rational.hpp"

namespace pingpong {

  //! A point of a cyclically ordered domain with a distinguished cut point.
  //!
  //! `operator<=>` is the linear order obtained by cutting the circle at
  //! `P::cut()`, which is the least element. `right_str()` is the text used
  //! when the point closes an arc (the circle prints the cut as `1`).
  template <typename P>
  concept CyclicPoint = std::totally_ordered<P> && requires(const P& p) {
    { P::cut() } -> std::same_as<P>;
    { p.str() } -> std::convertible_to<std::string>;
    { p.right_str() } -> std::convertible_to<std::string>;
  };

  //! Point of S^1 = R/Z, stored as its residue in [0, 1).
  class CirclePoint {
   public:
    CirclePoint() = default;
    explicit CirclePoint(const Rational& t) : t_(t.frac()) {}
    CirclePoint(long n, long d) : CirclePoint(Rational(n, d)) {}

    static CirclePoint cut() {
      return CirclePoint();
    }
    //! Accepts any rational; the value is reduced mod 1.
    static CirclePoint parse(std::string_view text) {
      return CirclePoint(Rational::parse(text));
    }

    const Rational& coordinate() const noexcept {
      return t_;
    }

    friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
    friend std::strong_ordering operator<=>(const CirclePoint& a,
                                            const CirclePoint& b) {
      return a.t_ <=> b.t_;
    }

    std::string str() const {
      return t_.str();
    }
    std::string right_str() const {
      return t_.is_zero() ? "1" : t_.str();
    }

   private:
    Rational t_;
  };

  //! Point (x:y) of the projective line with coprime integer coordinates.
  //!
  //! Canonical sign: y > 0, or y = 0 and x > 0. The cut is (1:0) and the
  //! order is by angle in [0, pi): P < Q iff x_P y_Q - x_Q y_P > 0.
  class ProjPoint {
   public:
    ProjPoint() : x_(1), y_(0) {}
    //! Throws `input_error` for (0,0).
    ProjPoint(mpz_class x, mpz_class y);
    ProjPoint(long x, long y) : ProjPoint(mpz_class(x), mpz_class(y)) {}

    //! The direction of the rational vector (x, y), scaled to integers.
    static ProjPoint from_vector(const Rational& x, const Rational& y);
    static ProjPoint cut() {
      return ProjPoint();
    }
    //! Parses `p:q`.
    static ProjPoint parse(std::string_view text);

    const mpz_class& x() const noexcept {
      return x_;
    }
    const mpz_class& y() const noexcept {
      return y_;
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
      return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend std::strong_ordering operator<=>(const ProjPoint& a,
                                            const ProjPoint& b) {
      mpz_class cross = a.x_ * b.y_ - b.x_ * a.y_;
      int s = sgn(cross);
      return s > 0   ? std::strong_ordering::less
             : s < 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::string str() const {
      return x_.get_str() + ":" + y_.get_str();
    }
    std::string right_str() const {
      return str();
    }

   private:
    mpz_class x_;
    mpz_class y_;
  };

  inline std::ostream& operator<<(std::ostream& os, const CirclePoint& p) {
    return os << p.str();
  }
  inline std::ostream& operator<<(std::ostream& os, const ProjPoint& p) {
    return os << p.str();
  }

  //! Walking the positive orientation from `a`, one meets `b` strictly
  //! before `c`. False whenever two of the points coincide.
  template <CyclicPoint P>
  bool between(const P& a, const P& b, const P& c) {
    return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
  }

}  // namespace pingpong

#endif  // PINGPONG_CYCLIC_HPP_
