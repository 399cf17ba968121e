#include "pingpong/corollary.hpp"

#include <optional>
#include <string>
#include <vector>

#include "pingpong/errors.hpp"

namespace pingpong {

  Report corollary_ball_check(std::size_t radius) {
    if (radius < 2) {
      throw input_error("corollary check needs radius >= 2");
    }
    using M = RegularActionModel;
    std::vector<Word> ball{Word()};
    for_each_reduced_word(M::rank, radius, [&](const Word& w) { ball.push_back(w); });

    Report r("regular action of F(a,b), radius " + std::to_string(radius) + " ("
             + std::to_string(ball.size()) + " words)");
    r.add("empty word not in A'", !M::in_A_prime(Word()), "1 in A'");

    std::optional<Word> uncovered;
    for (auto const& w : ball) {
      if (w.size() < radius && !M::in_A_prime(w) && !M::in_translate(M::a(), w)) {
        uncovered = w;
        break;
      }
    }
    r.add("F = A' u aA' on words of length <= " + std::to_string(radius - 1), !uncovered,
          uncovered ? uncovered->str() + " lies in neither A' nor aA'" : "");

    auto const b  = M::b();
    auto const b2 = b * b;
    struct Pair {
      const char* name;
      Word        h1;
      Word        h2;
    };
    for (auto const& p : {Pair{"A' n bA'", Word(), b}, Pair{"A' n b^2A'", Word(), b2},
                          Pair{"bA' n b^2A'", b, b2}}) {
      std::optional<Word> common;
      for (auto const& w : ball) {
        if (M::in_translate(p.h1, w) && M::in_translate(p.h2, w)) {
          common = w;
          break;
        }
      }
      r.add(std::string(p.name) + " empty on words of length <= " + std::to_string(radius),
            !common, common ? common->str() + " lies in both" : "");
    }
    return r;
  }

}  // namespace pingpong
