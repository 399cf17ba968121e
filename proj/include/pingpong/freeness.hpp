// Brute-force checks over bounded balls of the free group: the freeness
// oracle and the orbit order on a circle orbit.

#ifndef PINGPONG_FREENESS_HPP_
#define PINGPONG_FREENESS_HPP_

#include <compare>
#include <future>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pingpong/action.hpp"
#include "pingpong/evaluate.hpp"
#include "pingpong/report.hpp"
#include "pingpong/word.hpp"

namespace pingpong {

  namespace detail {
    template <ActionContext C>
    struct LetterTable {
      std::vector<typename C::Element> forward;
      std::vector<typename C::Element> backward;

      explicit LetterTable(std::span<const typename C::Element> gens)
          : forward(gens.begin(), gens.end()) {
        for (auto const& g : gens) {
          backward.push_back(C::invert(g));
        }
      }
      const typename C::Element& operator[](Letter x) const {
        return x.inverse ? backward[x.generator] : forward[x.generator];
      }
    };

    // Runs `job(first_letter)` for every first letter, concurrently when
    // asked, and returns the results in alphabet order.
    template <typename Job>
    auto by_first_letter(std::size_t k, bool parallel, Job job) {
      using Result = decltype(job(Letter{}));
      std::vector<Result> out;
      auto const          letters = alphabet(k);
      if (!parallel) {
        for (auto const& x : letters) {
          out.push_back(job(x));
        }
        return out;
      }
      std::vector<std::future<Result>> futures;
      for (auto const& x : letters) {
        futures.push_back(std::async(std::launch::async, job, x));
      }
      for (auto& f : futures) {
        out.push_back(f.get());
      }
      return out;
    }
  }  // namespace detail

  //! Searches the reduced words of length <= max_len in `gens` for a relation.
  //!
  //! Without a basepoint the check fails iff some nonempty reduced word
  //! evaluates to a trivial element (`C::is_trivial`). With a basepoint p it
  //! fails iff two distinct reduced words of length 0..max_len send p to the
  //! same point. Words are visited depth-first in `alphabet` order, so the
  //! reported witness is deterministic; the search is split by first letter
  //! and may run the parts concurrently.
  template <ActionContext C>
  Report freeness_oracle(std::span<const typename C::Element> gens,
                         std::size_t                          max_len,
                         std::optional<typename C::Point>     basepoint = std::nullopt,
                         bool                                 parallel  = true) {
    using Element = typename C::Element;
    using Point   = typename C::Point;
    if (max_len < 1) {
      throw input_error("freeness oracle needs max length >= 1");
    }
    detail::LetterTable<C> table(gens);
    auto const             k      = gens.size();
    auto                   extend = [&](const Element& e, Letter x) {
      return C::compose(e, table[x]);
    };
    std::uint64_t total = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      total += count_reduced_words(k, len);
    }

    if (!basepoint) {
      Report r("freeness oracle: element identity, k=" + std::to_string(k)
               + ", max length " + std::to_string(max_len) + ", " + std::string(C::name));
      auto parts = detail::by_first_letter(k, parallel, [&](Letter first) {
        std::optional<Word> witness;
        walk_reduced_words(
            k, max_len, C::identity(), extend,
            [&](const Word& w, const Element& e) {
              if (C::is_trivial(e)) {
                witness = w;
                return false;
              }
              return true;
            },
            first);
        return witness;
      });
      std::optional<Word> witness;
      for (auto& p : parts) {
        if (p) {
          witness = std::move(p);
          break;
        }
      }
      r.add("no reduced word of length 1.." + std::to_string(max_len) + " is trivial ("
                + std::to_string(total) + " words)",
            !witness,
            witness ? witness->str() + " evaluates to " + C::format(evaluate_word<C>(*witness, gens))
                    : "");
      return r;
    }

    Point const p = *basepoint;
    Report      r("freeness oracle: orbit of " + p.str() + ", k=" + std::to_string(k)
                  + ", max length " + std::to_string(max_len) + ", " + std::string(C::name));
    auto parts = detail::by_first_letter(k, parallel, [&](Letter first) {
      std::vector<std::pair<Point, Word>> images;
      walk_reduced_words(
          k, max_len, C::identity(), extend,
          [&](const Word& w, const Element& e) {
            images.emplace_back(C::apply(e, p), w);
            return true;
          },
          first);
      return images;
    });
    std::map<Point, Word>                   seen{{p, Word()}};
    std::optional<std::pair<Word, Word>>    clash;
    std::optional<Point>                    clash_point;
    for (auto const& part : parts) {
      for (auto const& [q, w] : part) {
        auto [it, fresh] = seen.emplace(q, w);
        if (!fresh) {
          clash       = std::make_pair(it->second, w);
          clash_point = q;
          break;
        }
      }
      if (clash) {
        break;
      }
    }
    r.add("reduced words of length 0.." + std::to_string(max_len) + " send " + p.str()
              + " to distinct points (" + std::to_string(total + 1) + " words)",
          !clash,
          clash ? clash->first.str() + " and " + clash->second.str() + " both send " + p.str()
                      + " to " + clash_point->str()
                : "");
    return r;
  }

  //! Image of the circle point p under the lift of w to the real line, where
  //! each generator is lifted with its value at 0 in [0, 1).
  Rational lifted_orbit_point(const Word& w, std::span<const PLHomeo> gens, const CirclePoint& p);

  //! Compares u and v through their lifted images of p. On positive words
  //! these images stay in [0, 1) and agree with u(p), v(p) on the circle.
  //! The comparison is invariant under left multiplication by any word.
  std::strong_ordering orbit_order_compare(const Word& u, const Word& v,
                                           std::span<const PLHomeo> gens, const CirclePoint& p);

}  // namespace pingpong

#endif  // PINGPONG_FREENESS_HPP_
