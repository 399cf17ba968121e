#include "pingpong/freeness.hpp"

namespace pingpong {

  Rational lifted_orbit_point(const Word& w, std::span<const PLHomeo> gens, const CirclePoint& p) {
    Rational x = p.coordinate();
    auto     letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (it->generator >= gens.size()) {
        throw input_error("no element assigned to letter g" + std::to_string(it->generator + 1));
      }
      auto const& g = gens[it->generator];
      x             = it->inverse ? g.lift_inverse(x) : g.lift(x);
    }
    return x;
  }

  std::strong_ordering orbit_order_compare(const Word& u, const Word& v,
                                           std::span<const PLHomeo> gens, const CirclePoint& p) {
    return lifted_orbit_point(u, gens, p) <=> lifted_orbit_point(v, gens, p);
  }

}  // namespace pingpong
