#pragma once
/**
 * @file word.hpp
 * @brief Finite words over integer alphabets and the basic operations on them.
 *
 * A Word is a sequence of letters (unsigned integers) plus an alphabet size;
 * every letter is < alphabet_size(). Equality compares letter sequences only:
 * the alphabet size is rendering/validation metadata, so a word over {0,1} is
 * equal to the same word viewed over {0,1,2}.
 *
 * Indexing is 0-based throughout. Occurrence scans here are the naive
 * reference implementations; see occurrence_index.hpp for the indexed routes.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "palfac/errors.hpp"

namespace palfac {

using Letter = std::uint32_t;

class Word {
 public:
  Word() = default;

  Word(std::vector<Letter> letters, Letter alphabet_size)
      : letters_(std::move(letters)), alphabet_(alphabet_size) {
    if (alphabet_ == 0) throw std::invalid_argument("alphabet size must be positive");
    for (Letter a : letters_) {
      if (a >= alphabet_) {
        throw std::invalid_argument("letter " + std::to_string(a) + " outside alphabet of size " +
                                    std::to_string(alphabet_));
      }
    }
  }

  static Word single(Letter a, Letter alphabet_size) { return Word({a}, alphabet_size); }

  static Word empty_over(Letter alphabet_size) { return Word({}, alphabet_size); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter alphabet_size() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }

  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter at(std::size_t i) const { return letters_.at(i); }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter a) {
    if (a >= alphabet_) throw std::invalid_argument("letter outside alphabet");
    letters_.push_back(a);
  }

  void reserve(std::size_t n) { letters_.reserve(n); }

  /// Concatenation widens the alphabet to the larger of the two.
  Word& operator+=(const Word& o) {
    alphabet_ = std::max(alphabet_, o.alphabet_);
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
    return *this;
  }

  friend Word operator+(Word a, const Word& b) {
    a += b;
    return a;
  }

  /// Letter-sequence equality; alphabet size does not participate.
  bool operator==(const Word& o) const { return letters_ == o.letters_; }

  Word subword(std::size_t start, std::size_t len) const {
    if (start + len > letters_.size()) throw std::out_of_range("subword out of range");
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(start + len)),
                alphabet_);
  }

  Word prefix(std::size_t n) const { return subword(0, n); }
  Word suffix_from(std::size_t start) const { return subword(start, size() - start); }

 private:
  std::vector<Letter> letters_;
  Letter alphabet_ = 1;
};

inline Word reverse(const Word& w) {
  std::vector<Letter> v(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(v), w.alphabet_size());
}

/// Palindrome test on a slice, without materializing the slice.
inline bool is_palindrome(const Word& w, std::size_t start, std::size_t len) {
  if (start + len > w.size()) throw std::out_of_range("palindrome range out of range");
  for (std::size_t i = 0, j = len; i + 1 < j--; ++i) {
    if (w[start + i] != w[start + j]) return false;
  }
  return true;
}

inline bool is_palindrome(const Word& w) { return is_palindrome(w, 0, w.size()); }

/// Does `pattern` occur in `text` starting at `pos`? (Letters compared only.)
inline bool occurs_at(const Word& text, std::size_t pos, const Word& pattern) {
  if (pos + pattern.size() > text.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (text[pos + i] != pattern[i]) return false;
  }
  return true;
}

inline std::optional<std::size_t> find_first(const Word& text, const Word& pattern) {
  if (pattern.size() > text.size()) return std::nullopt;
  for (std::size_t j = 0; j + pattern.size() <= text.size(); ++j) {
    if (occurs_at(text, j, pattern)) return j;
  }
  return std::nullopt;
}

/// u is a factor (contiguous subword) of w; the empty word is a factor of everything.
inline bool is_factor(const Word& u, const Word& w) { return find_first(w, u).has_value(); }

inline std::vector<std::size_t> occurrences(const Word& text, const Word& pattern) {
  std::vector<std::size_t> out;
  if (pattern.size() > text.size()) return out;
  for (std::size_t j = 0; j + pattern.size() <= text.size(); ++j) {
    if (occurs_at(text, j, pattern)) out.push_back(j);
  }
  return out;
}

/**
 * Smallest j < start such that text[j, j+len) equals text[start, start+len).
 * The occurrence may overlap [start, start+len); only its start is constrained.
 * Naive reference scan; OccurrenceIndex::earliest_occurrence_before is the
 * indexed route with the same contract.
 */
inline std::optional<std::size_t> earliest_occurrence_before(const Word& text, std::size_t start,
                                                             std::size_t len) {
  if (start + len > text.size()) throw std::out_of_range("slice out of range");
  for (std::size_t j = 0; j < start; ++j) {
    bool match = true;
    for (std::size_t i = 0; i < len; ++i) {
      if (text[j + i] != text[start + i]) {
        match = false;
        break;
      }
    }
    if (match) return j;
  }
  return std::nullopt;
}

inline Word strip_prefix(const Word& w, const Word& p) {
  if (p.size() > w.size() || !occurs_at(w, 0, p)) throw NotAPrefix("not a prefix");
  return w.suffix_from(p.size());
}

inline Word strip_suffix(const Word& w, const Word& s) {
  if (s.size() > w.size() || !occurs_at(w, w.size() - s.size(), s)) throw NotASuffix("not a suffix");
  return w.prefix(w.size() - s.size());
}

/**
 * Display form: a digit string when the alphabet has at most 10 letters,
 * otherwise comma-separated integers. Empty word renders as "".
 */
inline std::string render(const Word& w) {
  std::string out;
  if (w.alphabet_size() <= 10) {
    out.reserve(w.size());
    for (Letter a : w) out.push_back(static_cast<char>('0' + a));
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(w[i]);
    }
  }
  return out;
}

/**
 * Parse the display form back into a word. Accepts a digit string or
 * comma-separated integers; surrounding whitespace is ignored. When no
 * alphabet size is given, the smallest one covering the letters is used
 * (minimum 1).
 */
inline Word parse_word(std::string_view text, std::optional<Letter> alphabet_size = std::nullopt) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  text = text.substr(b, e - b);

  std::vector<Letter> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                              : comma - pos);
      std::size_t tb = 0, te = tok.size();
      while (tb < te && std::isspace(static_cast<unsigned char>(tok[tb]))) ++tb;
      while (te > tb && std::isspace(static_cast<unsigned char>(tok[te - 1]))) --te;
      tok = tok.substr(tb, te - tb);
      if (tok.empty()) throw std::invalid_argument("empty entry in comma-separated word");
      Letter value = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad letter token in word");
        value = value * 10 + static_cast<Letter>(c - '0');
      }
      letters.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad character in word");
      letters.push_back(static_cast<Letter>(c - '0'));
    }
  }

  Letter max_letter = 0;
  for (Letter a : letters) max_letter = std::max(max_letter, a);
  Letter alpha = alphabet_size.value_or(letters.empty() ? 1 : max_letter + 1);
  return Word(std::move(letters), alpha);
}

}  // namespace palfac
