// Orientation-preserving piecewise-linear homeomorphisms of the circle with
// rational breakpoints.

#ifndef PINGPONG_PLHOMEO_HPP_
#define PINGPONG_PLHOMEO_HPP_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pingpong/arcset.hpp"
#include "pingpong/cyclic.hpp"
#include "pingpong/rational.hpp"

namespace pingpong {

  //! Exact element of PLF_+(S^1).
  //!
  //! Stored as breakpoints (x_i, y_i) with x_i strictly increasing in [0, 1).
  //! On the cyclic arc [x_i, x_{i+1}) the map is the affine bijection onto
  //! [y_i, y_{i+1}). The stored form is canonical: breakpoints where the
  //! incoming and outgoing slopes agree are dropped, and a map with no real
  //! break (a rotation) is stored as the single breakpoint (0, theta). Two
  //! maps are equal iff their breakpoint lists are equal.
  class PLHomeo {
   public:
    struct Breakpoint {
      CirclePoint x;
      CirclePoint y;

      friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
    };

    //! The identity.
    PLHomeo();

    //! Builds the map through the given points. Throws `input_error` if the
    //! points do not define an orientation-preserving degree-one
    //! homeomorphism (repeated x or y, or y out of cyclic order).
    static PLHomeo from_points(std::vector<Breakpoint> points);
    static PLHomeo rotation(const Rational& theta);
    static PLHomeo identity() {
      return PLHomeo();
    }
    //! Parses `rot q` or `pl [(x0,y0),(x1,y1),...]`.
    static PLHomeo parse(std::string_view text);

    CirclePoint operator()(const CirclePoint& p) const;

    PLHomeo inverse() const;

    //! `f * g` is the composite p -> f(g(p)).
    friend PLHomeo operator*(const PLHomeo& f, const PLHomeo& g);

    bool is_rotation() const noexcept {
      return points_.size() == 1;
    }
    bool is_identity() const {
      return is_rotation() && points_[0].y.coordinate().is_zero();
    }

    std::span<const Breakpoint> breakpoints() const noexcept {
      return points_;
    }
    //! Slope of the piece starting at breakpoint i.
    std::span<const Rational> slopes() const noexcept {
      return slopes_;
    }

    //! The lift F : R -> R of this map with F(0) in [0, 1).
    Rational lift(const Rational& x) const;
    //! Inverse of `lift`.
    Rational lift_inverse(const Rational& y) const;

    ArcSet<CirclePoint> image(const ArcSet<CirclePoint>& s) const {
      return s.image(*this);
    }

    friend bool operator==(const PLHomeo& f, const PLHomeo& g) {
      return f.points_ == g.points_;
    }

    //! `rot q` for rotations, otherwise `pl [(x0,y0),...]`.
    std::string str() const;

   private:
    explicit PLHomeo(std::vector<Breakpoint> canonical);

    // Index of the piece containing p.
    std::size_t piece_of(const CirclePoint& p) const;
    // Inverse evaluation without building the inverse map.
    CirclePoint preimage(const CirclePoint& q) const;
    static PLHomeo canonical(std::vector<Breakpoint> sorted);

    std::vector<Breakpoint> points_;
    std::vector<Rational>   slopes_;
  };

  inline PLHomeo compose(const PLHomeo& f, const PLHomeo& g) {
    return f * g;
  }

  //! Length of the positive walk from a to b on R/Z; a full turn (1) when
  //! a == b.
  Rational cyclic_gap(const Rational& a, const Rational& b);

}  // namespace pingpong

#endif  // PINGPONG_PLHOMEO_HPP_
