#pragma once
/**
 * @file codes.hpp
 * @brief Unique-decodability test (Sardinas–Patterson).
 *
 * A set X of nonempty words is a code when every word of X* has exactly one
 * factorization over X. The dangling-suffix iteration detects ambiguity:
 * X fails to be a code iff the empty word ever appears as a dangling suffix.
 *
 * Desk-scale caps keep the state space small; they are parameters, with
 * defaults of 64 codewords of length at most 64.
 */

#include <cstddef>
#include <set>
#include <vector>

#include "palfac/errors.hpp"
#include "palfac/word.hpp"

namespace palfac {

inline bool is_code(const std::vector<Word>& words, std::size_t max_words = 64,
                    std::size_t max_word_len = 64) {
  if (words.size() > max_words) {
    throw CapExceeded("code check capped at " + std::to_string(max_words) + " words");
  }
  std::set<std::vector<Letter>> set;
  for (const Word& w : words) {
    if (w.empty()) throw EmptyWordInSet("the empty word is never part of a code");
    if (w.size() > max_word_len) {
      throw CapExceeded("code check capped at word length " + std::to_string(max_word_len));
    }
    if (!set.insert(w.letters()).second) return false;  // duplicate => two parses
  }

  std::vector<std::vector<Letter>> xs(set.begin(), set.end());
  auto is_prefix = [](const std::vector<Letter>& p, const std::vector<Letter>& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
  };

  std::set<std::vector<Letter>> seen;
  std::vector<std::vector<Letter>> queue;
  for (const auto& u : xs) {
    for (const auto& v : xs) {
      if (u.size() < v.size() && is_prefix(u, v)) {
        std::vector<Letter> d(v.begin() + static_cast<std::ptrdiff_t>(u.size()), v.end());
        if (seen.insert(d).second) queue.push_back(std::move(d));
      }
    }
  }

  while (!queue.empty()) {
    std::vector<Letter> d = std::move(queue.back());
    queue.pop_back();
    for (const auto& u : xs) {
      if (u == d) return false;  // dangling suffix completes => ambiguous
      if (u.size() < d.size() && is_prefix(u, d)) {
        std::vector<Letter> next(d.begin() + static_cast<std::ptrdiff_t>(u.size()), d.end());
        if (seen.insert(next).second) queue.push_back(std::move(next));
      } else if (d.size() < u.size() && is_prefix(d, u)) {
        std::vector<Letter> next(u.begin() + static_cast<std::ptrdiff_t>(d.size()), u.end());
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return true;
}

}  // namespace palfac
