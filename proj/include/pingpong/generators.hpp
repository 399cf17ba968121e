// Explicit free generators read off a verified certificate.

#ifndef PINGPONG_GENERATORS_HPP_
#define PINGPONG_GENERATORS_HPP_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pingpong/certificate.hpp"
#include "pingpong/evaluate.hpp"
#include "pingpong/word.hpp"

namespace pingpong {

  //! Generator words over the certificate letters a, a0, a1, ... together
  //! with their values.
  //!
  //! Letter 0 is `a` and letter i + 1 is the translator a_i. `elements[m]`
  //! is `words[m]` evaluated under `letters`.
  template <ActionContext C>
  struct GeneratorSet {
    using Element = typename C::Element;
    using Set     = ArcSet<typename C::Point>;

    std::string              recipe;
    std::vector<std::string> letter_names;
    std::vector<Element>     letters;
    std::vector<Word>        words;
    std::vector<Element>     elements;
    // rank_k only: a_j A for the index j left out of every pair.
    std::optional<Set>         seed;
    std::optional<std::size_t> seed_index;

    std::size_t rank() const noexcept {
      return words.size();
    }
  };

  namespace detail {
    template <ActionContext C>
    GeneratorSet<C> letters_of(std::string recipe, const typename C::Element& a,
                               std::span<const typename C::Element> translators) {
      GeneratorSet<C> g;
      g.recipe = std::move(recipe);
      g.letter_names.push_back("a");
      g.letters.push_back(a);
      for (std::size_t i = 0; i < translators.size(); ++i) {
        g.letter_names.push_back("a" + std::to_string(i));
        g.letters.push_back(translators[i]);
      }
      return g;
    }

    inline Word letter_a() {
      return Word::generator(0);
    }
    inline Word letter_t(std::size_t i, bool inverse = false) {
      return Word::generator(static_cast<std::uint32_t>(i + 1), inverse);
    }

    template <ActionContext C>
    void finish(GeneratorSet<C>& g) {
      for (auto const& w : g.words) {
        g.elements.push_back(evaluate_word<C>(w, g.letters));
      }
    }

    // Word a_i a a_j^-1.
    inline Word pair_word(std::size_t i, std::size_t j) {
      return letter_t(i) * letter_a() * letter_t(j, true);
    }

    inline void require_distinct(const std::vector<std::size_t>& idx, std::size_t n) {
      std::set<std::size_t> seen;
      for (auto i : idx) {
        if (i >= n) {
          throw input_error("translate index " + std::to_string(i)
                            + " out of range for n = " + std::to_string(n));
        }
        if (!seen.insert(i).second) {
          throw input_error("translate index " + std::to_string(i) + " used twice");
        }
      }
    }
  }  // namespace detail

  //! Commutators [a, a1^-1 a0] and [a, a2^-1 a0] with [x, y] = x y x^-1 y^-1.
  template <ActionContext C>
  GeneratorSet<C> generators_from_ii(const CondII<C>& cert) {
    detail::require_verified(cert, "generators");
    auto g = detail::letters_of<C>("ii", cert.a, cert.translators);
    auto a = detail::letter_a();
    for (std::size_t i : {1, 2}) {
      auto y = detail::letter_t(i, true) * detail::letter_t(0);
      g.words.push_back(a * y * a.inverse() * y.inverse());
    }
    detail::finish(g);
    return g;
  }

  //! a_i a a_j^-1 and a_p a a_q^-1 for a partition {i,j}, {p,q} of four
  //! distinct indices; the default is (0,1), (2,3).
  template <ActionContext C>
  GeneratorSet<C> generators_from_iii_n4(
      const CondIII<C>&                       cert,
      std::array<std::size_t, 4> pairing = {0, 1, 2, 3}) {
    if (cert.n() < 4) {
      throw input_error("recipe iii4 needs n >= 4, got n = " + std::to_string(cert.n()));
    }
    detail::require_distinct({pairing.begin(), pairing.end()}, cert.n());
    detail::require_verified(cert, "generators");
    auto g = detail::letters_of<C>("iii4", cert.a, cert.translators);
    g.words.push_back(detail::pair_word(pairing[0], pairing[1]));
    g.words.push_back(detail::pair_word(pairing[2], pairing[3]));
    detail::finish(g);
    return g;
  }

  //! k generators a_{i1} a a_{i2}^-1, ..., a_{i(2k-1)} a a_{i(2k)}^-1 over 2k
  //! distinct indices, defaulting to (1,2), ..., (2k-1,2k). Needs n >= 2k+1;
  //! the smallest unused index j gives the seed set a_j A.
  template <ActionContext C>
  GeneratorSet<C> generators_rank_k(
      const CondIII<C>&                                        cert,
      std::size_t                                              k,
      std::vector<std::pair<std::size_t, std::size_t>> pairs = {}) {
    if (k < 2) {
      throw input_error("rank_k needs k >= 2");
    }
    if (cert.n() < 2 * k + 1) {
      throw input_error("rank " + std::to_string(k) + " needs n >= " + std::to_string(2 * k + 1)
                        + ", got n = " + std::to_string(cert.n()));
    }
    if (pairs.empty()) {
      for (std::size_t i = 1; i <= k; ++i) {
        pairs.emplace_back(2 * i - 1, 2 * i);
      }
    }
    if (pairs.size() != k) {
      throw input_error("rank " + std::to_string(k) + " needs " + std::to_string(k)
                        + " index pairs, got " + std::to_string(pairs.size()));
    }
    std::vector<std::size_t> used;
    for (auto const& [i, j] : pairs) {
      used.push_back(i);
      used.push_back(j);
    }
    detail::require_distinct(used, cert.n());
    detail::require_verified(cert, "generators");

    auto g = detail::letters_of<C>("rankk", cert.a, cert.translators);
    for (auto const& [i, j] : pairs) {
      g.words.push_back(detail::pair_word(i, j));
    }
    std::set<std::size_t> used_set(used.begin(), used.end());
    for (std::size_t j = 0; j < cert.n(); ++j) {
      if (!used_set.contains(j)) {
        g.seed_index = j;
        g.seed       = C::image(cert.translators[j], cert.A);
        break;
      }
    }
    detail::finish(g);
    return g;
  }

}  // namespace pingpong

#endif  // PINGPONG_GENERATORS_HPP_
