#pragma once

// Words in the free group F_d on generators x1, ..., xd.

#include <charconv>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace metab {

  //! One generator letter x_axis^sign, axis in 1..d, sign in {+1, -1}.
  struct Letter {
    std::size_t axis = 1;
    int         sign = 1;

    Letter inverse() const noexcept {
      return {axis, -sign};
    }
    friend bool operator==(Letter const&, Letter const&) = default;
  };

  class Word;
  Word free_reduce(std::size_t rank, std::span<Letter const> letters);

  //! A freely reduced word of F_d. The rank d travels with the word and
  //! words of different rank never mix.
  class Word {
   public:
    explicit Word(std::size_t rank) : rank_(rank) {
      if (rank == 0) {
        throw PreconditionError("rank must be at least 1");
      }
    }

    std::size_t rank() const noexcept {
      return rank_;
    }
    std::size_t length() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    std::span<Letter const> letters() const noexcept {
      return letters_;
    }

    friend bool operator==(Word const&, Word const&) = default;

   private:
    friend Word free_reduce(std::size_t, std::span<Letter const>);

    std::size_t         rank_;
    std::vector<Letter> letters_;
  };

  namespace detail {
    inline void check_letter(Letter const& l, std::size_t rank) {
      if (l.axis < 1 || l.axis > rank) {
        throw PreconditionError("generator index " + std::to_string(l.axis)
                                + " out of range 1.." + std::to_string(rank));
      }
      if (l.sign != 1 && l.sign != -1) {
        throw PreconditionError("letter sign must be +1 or -1");
      }
    }
  }  // namespace detail

  //! Cancels adjacent inverse pairs (stack based, single pass).
  inline Word free_reduce(std::size_t rank, std::span<Letter const> letters) {
    Word out(rank);
    out.letters_.reserve(letters.size());
    for (Letter const& l : letters) {
      detail::check_letter(l, rank);
      if (!out.letters_.empty() && out.letters_.back() == l.inverse()) {
        out.letters_.pop_back();
      } else {
        out.letters_.push_back(l);
      }
    }
    return out;
  }

  inline Word concat(Word const& u, Word const& v) {
    detail::check_rank(u.rank(), v.rank());
    std::vector<Letter> letters(u.letters().begin(), u.letters().end());
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return free_reduce(u.rank(), letters);
  }

  inline Word invert(Word const& w) {
    std::vector<Letter> letters;
    letters.reserve(w.length());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      letters.push_back(it->inverse());
    }
    return free_reduce(w.rank(), letters);
  }

  //! u v u^-1 v^-1
  inline Word commutator(Word const& u, Word const& v) {
    return concat(concat(u, v), concat(invert(u), invert(v)));
  }

  namespace detail {
    inline bool is_separator(char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '.';
    }

    // A token `<prefix>` optionally followed by `^<nonzero signed integer>`.
    // Returns the exponent and leaves the head in `head`.
    inline long long split_exponent(std::string_view token,
                                    std::string_view& head) {
      auto caret = token.find('^');
      head       = token.substr(0, caret);
      if (caret == std::string_view::npos) {
        return 1;
      }
      std::string_view exp = token.substr(caret + 1);
      if (!exp.empty() && exp.front() == '+') {
        exp.remove_prefix(1);
        if (!exp.empty() && exp.front() == '-') {
          throw ParseError("bad exponent in '" + std::string(token) + "'");
        }
      }
      long long value = 0;
      auto [ptr, ec]  = std::from_chars(exp.data(), exp.data() + exp.size(), value);
      if (exp.empty() || ec != std::errc() || ptr != exp.data() + exp.size()) {
        throw ParseError("bad exponent in '" + std::string(token) + "'");
      }
      if (value == 0) {
        throw ParseError("zero exponent in '" + std::string(token) + "'");
      }
      return value;
    }

    template <typename F>
    void for_each_token(std::string_view text, F&& f) {
      std::size_t i = 0;
      while (i < text.size()) {
        while (i < text.size() && is_separator(text[i])) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size() && !is_separator(text[j])) {
          ++j;
        }
        if (j > i) {
          f(text.substr(i, j - i));
        }
        i = j;
      }
    }

    inline void append_power(std::vector<Letter>& out, Letter l, long long e) {
      if (e < 0) {
        l = l.inverse();
      }
      unsigned long long n = e < 0 ? 0ULL - static_cast<unsigned long long>(e)
                                   : static_cast<unsigned long long>(e);
      for (unsigned long long k = 0; k < n; ++k) {
        out.push_back(l);
      }
    }
  }  // namespace detail

  //! Parses the letters of a word without reducing them, e.g.
  //! "x1 x2^-2 . x3". Exponents are expanded into unit letters.
  inline std::vector<Letter> parse_letters(std::string_view text,
                                           std::size_t      rank) {
    std::vector<Letter> letters;
    detail::for_each_token(text, [&](std::string_view token) {
      std::string_view head;
      long long        e = detail::split_exponent(token, head);
      if (head.size() < 2 || head.front() != 'x'
          || head.find_first_not_of("0123456789", 1) != std::string_view::npos) {
        throw ParseError("bad token '" + std::string(token) + "'");
      }
      std::size_t axis = 0;
      auto [ptr, ec]   = std::from_chars(head.data() + 1,
                                       head.data() + head.size(), axis);
      if (ec != std::errc() || axis == 0) {
        throw ParseError("bad generator index in '" + std::string(token) + "'");
      }
      if (axis > rank) {
        throw PreconditionError("generator index " + std::to_string(axis)
                                + " out of range 1.." + std::to_string(rank));
      }
      detail::append_power(letters, Letter{axis, 1}, e);
    });
    return letters;
  }

  inline Word parse_word(std::string_view text, std::size_t rank) {
    return free_reduce(rank, parse_letters(text, rank));
  }

  //! Inverse of parse_word with runs collapsed: "x1^2 x2^-1 x1". The empty
  //! word prints as the empty string.
  inline std::string to_string(Word const& w) {
    std::string out;
    auto        letters = w.letters();
    for (std::size_t i = 0; i < letters.size();) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) {
        ++j;
      }
      long long e = static_cast<long long>(j - i) * letters[i].sign;
      if (!out.empty()) {
        out += ' ';
      }
      out += 'x' + std::to_string(letters[i].axis);
      if (e != 1) {
        out += '^' + std::to_string(e);
      }
      i = j;
    }
    return out;
  }

}  // namespace metab
