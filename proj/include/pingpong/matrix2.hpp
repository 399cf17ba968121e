// 2x2 rational matrices and their Moebius action on the projective line.

#ifndef PINGPONG_MATRIX2_HPP_
#define PINGPONG_MATRIX2_HPP_

#include <array>
#include <string>
#include <string_view>

#include "pingpong/arcset.hpp"
#include "pingpong/cyclic.hpp"
#include "pingpong/rational.hpp"

namespace pingpong {

  //! Matrix [[m11, m12], [m21, m22]] over Q.
  //!
  //! The plain constructor accepts any entries. `special` insists on
  //! determinant 1 and `positive` on determinant > 0; the latter records the
  //! relaxation in `is_special()` so callers can warn about it.
  class Matrix2 {
   public:
    Matrix2(Rational m11, Rational m12, Rational m21, Rational m22)
        : e_{std::move(m11), std::move(m12), std::move(m21), std::move(m22)} {}

    static Matrix2 identity() {
      return Matrix2(1, 0, 0, 1);
    }
    //! Throws `input_error` unless det = 1.
    static Matrix2 special(Rational m11, Rational m12, Rational m21, Rational m22);
    //! Throws `input_error` unless det > 0.
    static Matrix2 positive(Rational m11, Rational m12, Rational m21, Rational m22);
    //! Parses `mat [a b; c d]`.
    static Matrix2 parse(std::string_view text);

    const Rational& operator()(int row, int col) const {
      return e_[static_cast<std::size_t>(2 * (row - 1) + (col - 1))];
    }

    Rational det() const {
      return e_[0] * e_[3] - e_[1] * e_[2];
    }
    bool is_special() const {
      return det() == Rational(1);
    }

    //! Adjugate over the determinant; throws `input_error` when det = 0.
    Matrix2 inverse() const;

    Matrix2 operator-() const {
      return Matrix2(-e_[0], -e_[1], -e_[2], -e_[3]);
    }
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
    friend bool operator==(const Matrix2&, const Matrix2&) = default;

    bool equal_up_to_sign(const Matrix2& other) const {
      return *this == other || -*this == other;
    }
    bool is_identity() const {
      return *this == identity();
    }
    //! I or -I: the elements acting trivially on RP^1.
    bool is_plus_minus_identity() const {
      return equal_up_to_sign(identity());
    }

    //! Image of the direction P. Throws `input_error` when det <= 0.
    ProjPoint operator()(const ProjPoint& p) const;

    ArcSet<ProjPoint> image(const ArcSet<ProjPoint>& s) const;

    //! `mat [a b; c d]`.
    std::string str() const;

   private:
    std::array<Rational, 4> e_;
  };

  inline Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
    return a * b;
  }

}  // namespace pingpong

#endif  // PINGPONG_MATRIX2_HPP_
