#ifndef PINGPONG_EVALUATE_HPP_
#define PINGPONG_EVALUATE_HPP_

#include <span>
#include <string>

#include "pingpong/action.hpp"
#include "pingpong/errors.hpp"
#include "pingpong/word.hpp"

namespace pingpong {

  //! Product of the letters of `w` from left to right, with letter i taken
  //! to `assignment[i]`. The empty word gives the identity.
  template <ActionContext C>
  typename C::Element evaluate_word(const Word& w,
                                    std::span<const typename C::Element> assignment) {
    auto result = C::identity();
    for (auto const& x : w.letters()) {
      if (x.generator >= assignment.size()) {
        throw input_error("no element assigned to letter g" + std::to_string(x.generator + 1));
      }
      auto const& g = assignment[x.generator];
      result        = C::compose(result, x.inverse ? C::invert(g) : g);
    }
    return result;
  }

}  // namespace pingpong

#endif  // PINGPONG_EVALUATE_HPP_
