// The SL2 examples acting on RP^1.

#ifndef PINGPONG_SL2_CATALOG_HPP_
#define PINGPONG_SL2_CATALOG_HPP_

#include <utility>

#include "pingpong/action.hpp"
#include "pingpong/certificate.hpp"
#include "pingpong/matrix2.hpp"

namespace pingpong::sl2 {

  using Certificate = CondIII<ProjectiveAction>;

  //! Rotation by pi/2, [[0,-1],[1,0]].
  Matrix2 quarter_turn();

  //! n = 4 certificate with A = [(1:0),(0:1)), Y = full, a = quarter_turn()
  //! and translators
  //!   a0 = [[1,alpha],[0,1]],  a1 = [[1,0],[beta,1]],
  //!   a2 = [[0,-1],[1,gamma]], a3 = [[-delta,-1],[1,0]].
  //! Requires alpha, beta, gamma, delta > 0, alpha*beta >= 1 and
  //! gamma*delta >= 1; throws `input_error` naming the failed inequality.
  Certificate example_certificate(const Rational& alpha, const Rational& beta,
                                  const Rational& gamma, const Rational& delta);

  //! ([[0,-1],[1,-s]], [[0,-1],[1,t]]) for s, t >= 2.
  std::pair<Matrix2, Matrix2> st_pair(const Rational& s, const Rational& t);
  //! ([[1,u],[0,1]], [[1,0],[v,1]]) for u, v > 0 and uv >= 4.
  std::pair<Matrix2, Matrix2> uv_pair(const Rational& u, const Rational& v);

}  // namespace pingpong::sl2

#endif  // PINGPONG_SL2_CATALOG_HPP_
