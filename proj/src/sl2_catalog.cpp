#include "pingpong/sl2_catalog.hpp"

#include <string>

namespace pingpong::sl2 {

  namespace {
    void require(bool ok, const std::string& what) {
      if (!ok) {
        throw input_error("constraint violated: " + what);
      }
    }
    void require_positive(const Rational& x, const char* name) {
      require(x.sign() > 0, std::string(name) + " = " + x.str() + " is not > 0");
    }
    void require_at_least(const Rational& x, const Rational& bound, const std::string& name) {
      require(x >= bound, name + " = " + x.str() + " < " + bound.str());
    }
  }  // namespace

  Matrix2 quarter_turn() {
    return Matrix2::special(0, -1, 1, 0);
  }

  Certificate example_certificate(const Rational& alpha, const Rational& beta,
                                  const Rational& gamma, const Rational& delta) {
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
    require_positive(gamma, "gamma");
    require_positive(delta, "delta");
    require_at_least(alpha * beta, 1, "alpha*beta");
    require_at_least(gamma * delta, 1, "gamma*delta");
    return Certificate{ArcSet<ProjPoint>::arc(ProjPoint(1, 0), ProjPoint(0, 1)),
                       ArcSet<ProjPoint>::full(),
                       quarter_turn(),
                       {Matrix2::special(1, alpha, 0, 1),
                        Matrix2::special(1, 0, beta, 1),
                        Matrix2::special(0, -1, 1, gamma),
                        Matrix2::special(-delta, -1, 1, 0)}};
  }

  std::pair<Matrix2, Matrix2> st_pair(const Rational& s, const Rational& t) {
    require_at_least(s, 2, "s");
    require_at_least(t, 2, "t");
    return {Matrix2::special(0, -1, 1, -s), Matrix2::special(0, -1, 1, t)};
  }

  std::pair<Matrix2, Matrix2> uv_pair(const Rational& u, const Rational& v) {
    require_positive(u, "u");
    require_positive(v, "v");
    require_at_least(u * v, 4, "u*v");
    return {Matrix2::special(1, u, 0, 1), Matrix2::special(1, 0, v, 1)};
  }

}  // namespace pingpong::sl2
