// Group actions on the two cyclic domains, behind one compile-time contract
// so that certificates, generator recipes and the freeness oracle are written
// once.

#ifndef PINGPONG_ACTION_HPP_
#define PINGPONG_ACTION_HPP_

#include <concepts>
#include <string>
#include <string_view>

#include "pingpong/arcset.hpp"
#include "pingpong/matrix2.hpp"
#include "pingpong/plhomeo.hpp"

namespace pingpong {

  template <typename C>
  concept ActionContext = requires(const typename C::Element& e,
                                   const typename C::Point&   p,
                                   const ArcSet<typename C::Point>& s) {
    requires CyclicPoint<typename C::Point>;
    { C::name } -> std::convertible_to<std::string_view>;
    { C::identity() } -> std::same_as<typename C::Element>;
    { C::compose(e, e) } -> std::same_as<typename C::Element>;
    { C::invert(e) } -> std::same_as<typename C::Element>;
    { C::is_identity(e) } -> std::same_as<bool>;
    { C::is_trivial(e) } -> std::same_as<bool>;
    { C::apply(e, p) } -> std::same_as<typename C::Point>;
    { C::image(e, s) } -> std::same_as<ArcSet<typename C::Point>>;
    { C::format(e) } -> std::convertible_to<std::string>;
  };

  //! PLF_+(S^1) acting on the circle.
  struct CircleAction {
    using Element = PLHomeo;
    using Point   = CirclePoint;

    static constexpr std::string_view name = "circle";

    static Element identity() {
      return PLHomeo::identity();
    }
    static Element compose(const Element& f, const Element& g) {
      return f * g;
    }
    static Element invert(const Element& f) {
      return f.inverse();
    }
    static bool is_identity(const Element& f) {
      return f.is_identity();
    }
    static bool is_trivial(const Element& f) {
      return f.is_identity();
    }
    static Point apply(const Element& f, const Point& p) {
      return f(p);
    }
    static ArcSet<Point> image(const Element& f, const ArcSet<Point>& s) {
      return f.image(s);
    }
    static std::string format(const Element& f) {
      return f.str();
    }
  };

  //! Matrices of positive determinant acting on RP^1.
  //!
  //! `is_trivial` accepts -I as well as I: -I fixes every direction, and a
  //! word equal to -I squares to a relation anyway.
  struct ProjectiveAction {
    using Element = Matrix2;
    using Point   = ProjPoint;

    static constexpr std::string_view name = "projective";

    static Element identity() {
      return Matrix2::identity();
    }
    static Element compose(const Element& f, const Element& g) {
      return f * g;
    }
    static Element invert(const Element& f) {
      return f.inverse();
    }
    static bool is_identity(const Element& f) {
      return f.is_identity();
    }
    static bool is_trivial(const Element& f) {
      return f.is_plus_minus_identity();
    }
    static Point apply(const Element& f, const Point& p) {
      return f(p);
    }
    static ArcSet<Point> image(const Element& f, const ArcSet<Point>& s) {
      return f.image(s);
    }
    static std::string format(const Element& f) {
      return f.str();
    }
  };

  static_assert(ActionContext<CircleAction>);
  static_assert(ActionContext<ProjectiveAction>);

}  // namespace pingpong

#endif  // PINGPONG_ACTION_HPP_
