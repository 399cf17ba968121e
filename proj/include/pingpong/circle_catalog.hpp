// Concrete circle maps: rotations, the order-two map a, the closed forms of
// the s_i and t_j generators, Bennett's rotations b_j, and the resulting
// example certificates.

#ifndef PINGPONG_CIRCLE_CATALOG_HPP_
#define PINGPONG_CIRCLE_CATALOG_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pingpong/action.hpp"
#include "pingpong/certificate.hpp"
#include "pingpong/plhomeo.hpp"

namespace pingpong::circle {

  using Certificate = CondIII<CircleAction>;
  using IndexPairs  = std::vector<std::pair<std::size_t, std::size_t>>;

  inline PLHomeo rotation(const Rational& theta) {
    return PLHomeo::rotation(theta);
  }

  //! The order-two map exchanging [0,1/n) and [1/n,1):
  //! t -> (n-1)t + 1/n on [0,1/n), t -> t/(n-1) - 1/(n(n-1)) on [1/n,1).
  PLHomeo standard_a(long n);

  //! s0 = t0 = a r for n = 2k+1: x/(2k) on [0, 2k/(2k+1)),
  //! 2kx - (2k-1) on [2k/(2k+1), 1).
  PLHomeo closed_s0(long k);
  //! s_i(x) = s0(x + (i-1)/(2k+1)) + i/(2k+1), for 1 <= i <= k.
  PLHomeo closed_s(long i, long k);
  //! t_j(x) = t0(x - j/k) + j/k, for 0 <= j <= k-1.
  PLHomeo closed_t(long j, long k);
  //! b_{2i} = l^i and b_{2i+1} = l^i r^-1 with l, r the rotations by 1/k and
  //! 1/(2k+1); 0 <= j <= 2k-1.
  PLHomeo bennett_b(long j, long k);

  //! A = [0,1/n), Y = full, a = standard_a(n), a_i = rotation by i/n.
  Certificate standard_certificate(long n);

  //! The standard certificate for n = 2k+1 with the index scheme i -> (i, n-i),
  //! i = 1..k, which yields s_i = r^i a r^i.
  struct SunicExample {
    Certificate cert;
    IndexPairs  scheme;
  };
  SunicExample sunic_certificate(long k);

  //! A = [0,1/(2k+1)), Y = full, a = standard_a(2k+1), and the 2k Bennett
  //! rotations b_0..b_{2k-1} as translators.
  Certificate bennett_certificate(long k);
  //! Pairing (2i, 2i+1), i = 0..k-1, giving t_i = b_{2i} a b_{2i+1}^-1.
  IndexPairs bennett_scheme(long k);

  //! Union of w(A) over all reduced words w of length <= max_len in `gens`
  //! and their inverses.
  ArcSet<CirclePoint> partial_orbit_union(std::span<const PLHomeo>   gens,
                                          const ArcSet<CirclePoint>& A,
                                          std::size_t                max_len);

}  // namespace pingpong::circle

#endif  // PINGPONG_CIRCLE_CATALOG_HPP_
