// Freely reduced words in a free group of finite rank.

#ifndef FDOUBLE_WORD_HPP_
#define FDOUBLE_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace fdouble {

  //! A letter encodes a generator index together with a sign as
  //! `2 * generator + (inverse ? 1 : 0)`, so the inverse of a letter is the
  //! letter with its low bit flipped.
  using Letter = std::uint32_t;

  constexpr Letter make_letter(std::size_t generator, bool inverse = false) {
    return static_cast<Letter>(2 * generator + (inverse ? 1 : 0));
  }
  constexpr std::size_t generator_of(Letter x) noexcept {
    return x >> 1;
  }
  constexpr bool is_inverse_letter(Letter x) noexcept {
    return (x & 1U) != 0;
  }
  constexpr Letter inverse_letter(Letter x) noexcept {
    return x ^ 1U;
  }

  //! The largest rank with a letter-based text syntax (a..z / A..Z).
  inline constexpr std::size_t max_text_rank = 26;

  //! \brief An element of the free group F_r stored as a freely reduced
  //! letter sequence.
  //!
  //! Every constructor reduces, so two Words are equal as group elements
  //! exactly when they compare equal.
  class Word {
   public:
    Word() = default;
    explicit Word(std::size_t rank) : _rank(rank) {}

    //! Reduces an arbitrary letter sequence. Throws malformed_input if a
    //! generator index is out of range.
    Word(std::size_t rank, std::span<Letter const> raw) : _rank(rank) {
      _letters.reserve(raw.size());
      for (Letter x : raw) {
        if (generator_of(x) >= rank) {
          throw Error(ErrorKind::malformed_input,
                      "generator index " + std::to_string(generator_of(x))
                          + " out of range for rank "
                          + std::to_string(rank));
        }
        push_back(x);
      }
    }

    Word(std::size_t rank, std::initializer_list<Letter> raw)
        : Word(rank, std::span<Letter const>(raw.begin(), raw.size())) {}

    static Word generator(std::size_t rank, std::size_t index) {
      return Word(rank, {make_letter(index)});
    }

    //! Parses the text syntax: `a, b, c, ...` are generators 0, 1, 2, ...,
    //! upper case is the inverse, and `""` or `"1"` is the identity.
    static Word parse(std::string_view text, std::size_t rank) {
      while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
      }
      while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
        text.remove_suffix(1);
      }
      if (text.empty() || text == "1") {
        return Word(rank);
      }
      std::vector<Letter> raw;
      raw.reserve(text.size());
      for (char c : text) {
        if (c >= 'a' && c <= 'z') {
          raw.push_back(make_letter(static_cast<std::size_t>(c - 'a')));
        } else if (c >= 'A' && c <= 'Z') {
          raw.push_back(make_letter(static_cast<std::size_t>(c - 'A'), true));
        } else {
          throw Error(ErrorKind::malformed_input,
                      "unexpected character '" + std::string(1, c)
                          + "' in word \"" + std::string(text) + "\"");
        }
      }
      return Word(rank, raw);
    }

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }

    //! Empty string for the identity.
    [[nodiscard]] std::string to_string() const {
      std::string out;
      out.reserve(_letters.size());
      for (Letter x : _letters) {
        char base = is_inverse_letter(x) ? 'A' : 'a';
        out.push_back(static_cast<char>(base + generator_of(x)));
      }
      return out;
    }

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

    friend Word multiply(Word const& u, Word const& v) {
      check_same_rank(u, v);
      auto const&  a = u._letters;
      auto const&  b = v._letters;
      std::size_t k = 0;
      while (k < a.size() && k < b.size()
             && a[a.size() - 1 - k] == inverse_letter(b[k])) {
        ++k;
      }
      Word out(u._rank);
      out._letters.reserve(a.size() + b.size() - 2 * k);
      out._letters.insert(out._letters.end(), a.begin(), a.end() - k);
      out._letters.insert(out._letters.end(), b.begin() + k, b.end());
      return out;
    }

    friend Word invert(Word const& u) {
      Word out(u._rank);
      out._letters.reserve(u._letters.size());
      for (auto it = u._letters.rbegin(); it != u._letters.rend(); ++it) {
        out._letters.push_back(inverse_letter(*it));
      }
      return out;
    }

    friend Word operator*(Word const& u, Word const& v) {
      return multiply(u, v);
    }

    friend std::ostream& operator<<(std::ostream& os, Word const& w) {
      return os << (w.empty() ? std::string("1") : w.to_string());
    }

   private:
    static void check_same_rank(Word const& u, Word const& v) {
      if (u._rank != v._rank) {
        throw Error(ErrorKind::rank_mismatch,
                    "words of rank " + std::to_string(u._rank) + " and "
                        + std::to_string(v._rank));
      }
    }

    void push_back(Letter x) {
      if (!_letters.empty() && _letters.back() == inverse_letter(x)) {
        _letters.pop_back();
      } else {
        _letters.push_back(x);
      }
    }

    std::size_t         _rank = 0;
    std::vector<Letter> _letters;
  };

  Word multiply(Word const& u, Word const& v);
  Word invert(Word const& u);

  inline Word conjugate(Word const& w, Word const& by) {
    return by * w * invert(by);
  }

  inline Word power(Word const& w, long exponent) {
    Word base = exponent < 0 ? invert(w) : w;
    Word out(w.rank());
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
      out = out * base;
    }
    return out;
  }

  //! Uniformly random freely reduced word of the given length.
  template <typename Rng>
  Word random_word(Rng& rng, std::size_t rank, std::size_t length) {
    std::vector<Letter> raw;
    raw.reserve(length);
    std::uniform_int_distribution<std::size_t> first(0, 2 * rank - 1);
    std::uniform_int_distribution<std::size_t> rest(0, 2 * rank - 2);
    for (std::size_t i = 0; i < length; ++i) {
      auto x = static_cast<Letter>(i == 0 ? first(rng) : rest(rng));
      // Skip over the one letter that would cancel.
      if (i > 0 && x >= inverse_letter(raw.back())) {
        ++x;
      }
      raw.push_back(x);
    }
    return Word(rank, raw);
  }

  //! Parses a comma separated list of words; empty input is the empty list.
  inline std::vector<Word> parse_word_list(std::string_view text,
                                           std::size_t      rank) {
    std::vector<Word> out;
    bool              blank = true;
    for (char c : text) {
      if (c != ' ' && c != '\t') {
        blank = false;
      }
    }
    if (blank) {
      return out;
    }
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      out.push_back(Word::parse(text.substr(start, comma - start), rank));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    return out;
  }

}  // namespace fdouble

template <>
struct std::hash<fdouble::Word> {
  std::size_t operator()(fdouble::Word const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ w.rank();
    for (auto x : w.letters()) {
      h = (h ^ x) * 0x100000001b3ULL;
    }
    return h;
  }
};

#endif  // FDOUBLE_WORD_HPP_
