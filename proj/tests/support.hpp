// Random generators and small helpers shared by the unit tests.

#ifndef PINGPONG_TESTS_SUPPORT_HPP_
#define PINGPONG_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "pingpong/arcset.hpp"
#include "pingpong/matrix2.hpp"
#include "pingpong/plhomeo.hpp"
#include "pingpong/word.hpp"

namespace testing {

  using namespace pingpong;

  inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
  }

  inline long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
  }

  inline Rational random_rational(long max_den = 24) {
    long d = uniform(1, max_den);
    return Rational(uniform(-3 * d, 3 * d), d);
  }

  // Distinct points of [0, 1) in increasing order.
  inline std::vector<Rational> random_unit_points(std::size_t count, long max_den = 24) {
    std::set<Rational> s;
    while (s.size() < count) {
      long d = uniform(1, max_den);
      s.insert(Rational(uniform(0, d - 1), d));
    }
    return {s.begin(), s.end()};
  }

  inline CirclePoint random_circle_point() {
    return CirclePoint(random_rational());
  }

  inline ArcSet<CirclePoint> random_circle_set() {
    switch (uniform(0, 9)) {
      case 0:
        return ArcSet<CirclePoint>::empty();
      case 1:
        return ArcSet<CirclePoint>::full();
      default:
        break;
    }
    std::vector<Arc<CirclePoint>> arcs;
    auto count = static_cast<std::size_t>(uniform(1, 4));
    for (std::size_t i = 0; i < count; ++i) {
      auto pts = random_unit_points(2);
      if (uniform(0, 1)) {
        std::swap(pts[0], pts[1]);
      }
      arcs.push_back(Arc<CirclePoint>::proper(CirclePoint(pts[0]), CirclePoint(pts[1])));
    }
    return ArcSet<CirclePoint>::normalize(arcs);
  }

  inline ProjPoint random_proj_point() {
    while (true) {
      long x = uniform(-9, 9), y = uniform(-9, 9);
      if (x != 0 || y != 0) {
        return ProjPoint(x, y);
      }
    }
  }

  inline ArcSet<ProjPoint> random_proj_set() {
    if (uniform(0, 9) == 0) {
      return ArcSet<ProjPoint>::full();
    }
    std::vector<Arc<ProjPoint>> arcs;
    auto count = static_cast<std::size_t>(uniform(0, 3));
    while (arcs.size() < count) {
      auto p = random_proj_point(), q = random_proj_point();
      if (!(p == q)) {
        arcs.push_back(Arc<ProjPoint>::proper(p, q));
      }
    }
    return ArcSet<ProjPoint>::normalize(arcs);
  }

  // A PL homeomorphism through m random breakpoints.
  inline PLHomeo random_plhomeo() {
    auto m  = static_cast<std::size_t>(uniform(1, 4));
    auto xs = random_unit_points(m);
    auto ys = random_unit_points(m);
    auto s  = static_cast<std::size_t>(uniform(0, static_cast<long>(m) - 1));
    std::vector<PLHomeo::Breakpoint> pts;
    for (std::size_t i = 0; i < m; ++i) {
      pts.push_back({CirclePoint(xs[i]), CirclePoint(ys[(i + s) % m])});
    }
    return PLHomeo::from_points(pts);
  }

  inline Matrix2 random_positive_matrix() {
    while (true) {
      Matrix2 m(uniform(-5, 5), uniform(-5, 5), uniform(-5, 5), uniform(-5, 5));
      if (m.det().sign() > 0) {
        return m;
      }
    }
  }

  inline Word random_word(std::size_t k, std::size_t max_len) {
    std::vector<Letter> raw;
    auto len = static_cast<std::size_t>(uniform(0, static_cast<long>(max_len)));
    for (std::size_t i = 0; i < len; ++i) {
      raw.push_back({static_cast<std::uint32_t>(uniform(0, static_cast<long>(k) - 1)),
                     uniform(0, 1) == 1});
    }
    return Word::reduce(raw);
  }

  // Plain 2x2 product over rationals.
  inline std::array<Rational, 4> naive_product(const std::array<Rational, 4>& x,
                                               const std::array<Rational, 4>& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  }

  inline std::array<Rational, 4> entries(const Matrix2& m) {
    return {m(1, 1), m(1, 2), m(2, 1), m(2, 2)};
  }

}  // namespace testing

#endif  // PINGPONG_TESTS_SUPPORT_HPP_
