// The free group of rank 2 acting on itself by left multiplication, checked
// on a finite ball.

#ifndef PINGPONG_COROLLARY_HPP_
#define PINGPONG_COROLLARY_HPP_

#include <cstddef>

#include "pingpong/report.hpp"
#include "pingpong/word.hpp"

namespace pingpong {

  //! F = <a, b> acting on itself; a is letter g1, b is g2.
  //!
  //! A' is the set of nonempty reduced words starting with a or a^-1. The
  //! transversal is trivial, so A = A' and Y = F.
  struct RegularActionModel {
    static constexpr std::size_t rank = 2;

    static Word a() {
      return Word::generator(0);
    }
    static Word b() {
      return Word::generator(1);
    }
    static bool in_A_prime(const Word& w) {
      return !w.empty() && w.front().generator == 0;
    }
    //! w in hA'  <=>  h^-1 w in A'.
    static bool in_translate(const Word& h, const Word& w) {
      return in_A_prime(h.inverse() * w);
    }
  };

  //! Checks F = A' u aA' on words of length <= radius-1 and that A', bA',
  //! b^2A' are pairwise disjoint on words of length <= radius.
  Report corollary_ball_check(std::size_t radius);

}  // namespace pingpong

#endif  // PINGPONG_COROLLARY_HPP_
