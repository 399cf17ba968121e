#include "pingpong/word.hpp"

#include <algorithm>
#include <sstream>

#include "pingpong/errors.hpp"

namespace pingpong {

  Word Word::reduce(std::span<const Letter> raw) {
    Word w;
    for (auto const& x : raw) {
      if (!w.letters_.empty() && w.letters_.back().cancels(x)) {
        w.letters_.pop_back();
      } else {
        w.letters_.push_back(x);
      }
    }
    return w;
  }

  Word Word::parse(std::string_view text) {
    std::istringstream  in{std::string(text)};
    std::string         tok;
    std::vector<Letter> raw;
    while (in >> tok) {
      if (tok == "1") {
        continue;
      }
      if (tok.size() < 2 || (tok[0] != 'g' && tok[0] != 'G')
          || !std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw input_error("malformed letter '" + tok + "' (expected g<i> or G<i>)");
      }
      auto index = std::stoul(tok.substr(1));
      if (index == 0) {
        throw input_error("letters are numbered from 1, got '" + tok + "'");
      }
      raw.push_back({static_cast<std::uint32_t>(index - 1), tok[0] == 'G'});
    }
    return reduce(raw);
  }

  std::uint32_t Word::rank_used() const {
    std::uint32_t r = 0;
    for (auto const& x : letters_) {
      r = std::max(r, x.generator + 1);
    }
    return r;
  }

  Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(it->inverted());
    }
    return w;
  }

  Word operator*(const Word& u, const Word& v) {
    std::vector<Letter> raw(u.letters_);
    raw.insert(raw.end(), v.letters_.begin(), v.letters_.end());
    return Word::reduce(raw);
  }

  std::string Word::str() const {
    if (letters_.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& x : letters_) {
      if (!out.empty()) {
        out += ' ';
      }
      out += (x.inverse ? "G" : "g") + std::to_string(x.generator + 1);
    }
    return out;
  }

  std::string Word::str(std::span<const std::string> names) const {
    if (letters_.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& x : letters_) {
      if (!out.empty()) {
        out += ' ';
      }
      out += x.generator < names.size() ? names[x.generator]
                                        : "g" + std::to_string(x.generator + 1);
      if (x.inverse) {
        out += "^-1";
      }
    }
    return out;
  }

  std::vector<Letter> alphabet(std::size_t k) {
    std::vector<Letter> out;
    out.reserve(2 * k);
    for (std::uint32_t i = 0; i < k; ++i) {
      out.push_back({i, false});
      out.push_back({i, true});
    }
    return out;
  }

  std::uint64_t count_reduced_words(std::size_t k, std::size_t len) {
    if (len == 0) {
      return 1;
    }
    std::uint64_t n = 2 * k;
    for (std::size_t i = 1; i < len; ++i) {
      n *= 2 * k - 1;
    }
    return n;
  }

  std::vector<Word> reduced_words(std::size_t k, std::size_t max_len) {
    std::vector<Word> out;
    for_each_reduced_word(k, max_len, [&](const Word& w) { out.push_back(w); });
    return out;
  }

}  // namespace pingpong
