// Freely reduced words over an abstract alphabet g1..gk and their inverses.

#ifndef PINGPONG_WORD_HPP_
#define PINGPONG_WORD_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pingpong {

  //! Generator index (0-based) with an inversion flag. Text form is 1-based:
  //! `g1` is generator 0, `G1` its inverse.
  struct Letter {
    std::uint32_t generator = 0;
    bool          inverse   = false;

    Letter inverted() const noexcept {
      return {generator, !inverse};
    }
    bool cancels(const Letter& other) const noexcept {
      return generator == other.generator && inverse != other.inverse;
    }

    friend bool operator==(const Letter&, const Letter&)                  = default;
    friend std::strong_ordering operator<=>(const Letter&, const Letter&) = default;
  };

  //! Freely reduced word; the empty word is the identity.
  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<Letter> letters)
        : Word(reduce(std::span<const Letter>(letters.begin(), letters.size()))) {}

    //! The unique freely reduced form of an arbitrary letter sequence.
    static Word reduce(std::span<const Letter> raw);
    static Word generator(std::uint32_t index, bool inverse = false) {
      Word w;
      w.letters_.push_back({index, inverse});
      return w;
    }
    //! Parses whitespace-separated `g<i>` / `G<i>` letters, reducing the
    //! result. Empty text or `1` is the identity.
    static Word parse(std::string_view text);

    std::span<const Letter> letters() const noexcept {
      return letters_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    const Letter& front() const {
      return letters_.front();
    }
    //! Largest generator index used plus one (0 for the identity).
    std::uint32_t rank_used() const;

    Word inverse() const;
    friend Word operator*(const Word& u, const Word& v);

    friend bool operator==(const Word&, const Word&)                  = default;
    friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

    //! `g1 G2 ...`, or `1` for the identity.
    std::string str() const;
    //! Same with custom letter names; inverses get a `^-1` suffix.
    std::string str(std::span<const std::string> names) const;

    friend std::ostream& operator<<(std::ostream& os, const Word& w) {
      return os << w.str();
    }

   private:
    std::vector<Letter> letters_;
  };

  //! The 2k letters in enumeration order g1, G1, g2, G2, ...
  std::vector<Letter> alphabet(std::size_t k);

  //! Number of reduced words of length exactly `len` over k generators.
  std::uint64_t count_reduced_words(std::size_t k, std::size_t len);

  //! Depth-first walk over the reduced words of length 1..max_len.
  //!
  //! Children are visited in `alphabet(k)` order. `extend(state, letter)`
  //! produces the state of the word extended on the right by `letter`;
  //! `visit(word, state)` returns false to stop the walk. If `first` is set
  //! only words starting with that letter are walked. Returns false when
  //! stopped early.
  template <typename State, typename Extend, typename Visit>
  bool walk_reduced_words(std::size_t             k,
                          std::size_t             max_len,
                          const State&            root,
                          Extend&&                extend,
                          Visit&&                 visit,
                          std::optional<Letter>   first = std::nullopt) {
    auto const          letters = alphabet(k);
    std::vector<Letter> path;
    auto rec = [&](auto& self, const State& state) -> bool {
      if (path.size() == max_len) {
        return true;
      }
      for (auto const& x : letters) {
        if (path.empty() && first && x != *first) {
          continue;
        }
        if (!path.empty() && path.back().cancels(x)) {
          continue;
        }
        path.push_back(x);
        State next = extend(state, x);
        Word  w    = Word::reduce(path);
        if (!visit(w, next) || !self(self, next)) {
          return false;
        }
        path.pop_back();
      }
      return true;
    };
    return rec(rec, root);
  }

  //! Calls `fn` on every reduced word of length 1..max_len exactly once.
  template <typename Fn>
  void for_each_reduced_word(std::size_t k, std::size_t max_len, Fn&& fn) {
    walk_reduced_words(
        k, max_len, 0, [](int, Letter) { return 0; },
        [&](const Word& w, int) {
          fn(w);
          return true;
        });
  }

  std::vector<Word> reduced_words(std::size_t k, std::size_t max_len);

}  // namespace pingpong

#endif  // PINGPONG_WORD_HPP_
