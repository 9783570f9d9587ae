#pragma once
/**
 * @file occurrence_index.hpp
 * @brief Combined occurrence / palindrome oracle for one fixed word.
 *
 * Wraps a suffix automaton of the word and a palindromic tree of its
 * reversal. The automaton answers "longest prefix of w[s..) that already
 * starts before s" (the quantity every factorization mode reduces to) and
 * earliest-occurrence queries; the tree answers "which prefixes of w[s..)
 * are palindromes". Palindromic prefixes of w starting at s are exactly the
 * palindromic suffixes of reverse(w) ending at n-1-s, which is where the
 * reversal comes from.
 *
 * Construction cost is linear in the word; it is gated by the process-wide
 * construction budget using a flat per-letter estimate.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palfac/budget.hpp"
#include "palfac/eertree.hpp"
#include "palfac/errors.hpp"
#include "palfac/suffix_automaton.hpp"
#include "palfac/word.hpp"

namespace palfac {

class OccurrenceIndex {
 public:
  /** Rough bytes per source letter across both structures, used for the budget gate. */
  static constexpr std::size_t kBytesPerLetter = 160;

  explicit OccurrenceIndex(const Word& w) : w_(checked(w)), sam_(w_), pal_(reverse(w_)) {}

  const Word& word() const { return w_; }
  std::size_t size() const { return w_.size(); }

  /**
   * Length of the longest prefix of w[s..) with an occurrence starting at
   * some j < s. The occurrence may overlap [s, s+len); 0 when none exists.
   */
  std::size_t longest_previous_factor(std::size_t s) const {
    std::size_t l = 0;
    int st = sam_.root();
    while (s + l < w_.size()) {
      const int nxt = sam_.transition(st, w_[s + l]);
      if (nxt == -1) break;
      // Earliest start of w[s, s+l+1) is first_end - (l+1); require it < s.
      if (static_cast<std::size_t>(sam_.first_end(nxt)) >= s + l + 1) break;
      st = nxt;
      ++l;
    }
    return l;
  }

  /** Indexed twin of the scanning earliest_occurrence_before in word.hpp. */
  std::optional<std::size_t> earliest_occurrence_before(std::size_t start, std::size_t len) const {
    if (start + len > w_.size()) throw std::out_of_range("slice out of range");
    if (len == 0) return start > 0 ? std::optional<std::size_t>(0) : std::nullopt;
    const std::size_t j = leftmost_occurrence(start, start + len);
    if (j < start) return j;
    return std::nullopt;
  }

  /** Start of the leftmost occurrence of w[a, b) anywhere in the word. */
  std::size_t leftmost_occurrence(std::size_t a, std::size_t b) const {
    int st = sam_.root();
    for (std::size_t i = a; i < b; ++i) st = sam_.transition(st, w_[i]);
    return static_cast<std::size_t>(sam_.first_end(st)) - (b - a);
  }

  /** Lengths l such that w[s, s+l) is a palindrome, ascending; empty past the end. */
  std::vector<std::size_t> palindromic_prefix_lengths(std::size_t s) const {
    if (s >= w_.size()) return {};
    std::vector<std::size_t> out = pal_.suffix_palindrome_lengths(w_.size() - 1 - s);
    std::reverse(out.begin(), out.end());
    return out;
  }

  /** Smallest palindromic prefix length of w[s..) strictly above bound; 0 when none. */
  std::size_t shortest_palindromic_prefix_above(std::size_t s, std::size_t bound) const {
    if (s >= w_.size()) return 0;
    std::size_t best = 0;
    for (int v = pal_.longest_suffix_node(w_.size() - 1 - s); pal_.length_of(v) > 0;
         v = pal_.suffix_link(v)) {
      const std::size_t len = static_cast<std::size_t>(pal_.length_of(v));
      if (len <= bound) break;
      best = len;
    }
    return best;
  }

  /** Largest palindromic prefix length of w[s..) at most bound; 0 when none. */
  std::size_t longest_palindromic_prefix_at_most(std::size_t s, std::size_t bound) const {
    if (s >= w_.size()) return 0;
    for (int v = pal_.longest_suffix_node(w_.size() - 1 - s); pal_.length_of(v) > 0;
         v = pal_.suffix_link(v)) {
      const std::size_t len = static_cast<std::size_t>(pal_.length_of(v));
      if (len <= bound) return len;
    }
    return 0;
  }

  /** Number of distinct nonempty palindromic factors of the word. */
  std::size_t distinct_palindromes() const { return pal_.distinct_palindromes(); }

  /** Number of distinct nonempty factors of the word. */
  std::uint64_t distinct_factors() const { return sam_.distinct_factors(); }

  /**
   * Every distinct nonempty palindromic factor. The set is reversal-closed,
   * so reading them off the reversed word changes nothing.
   */
  std::vector<Word> palindrome_inventory() const { return pal_.all_palindromes(); }

 private:
  static const Word& checked(const Word& w) {
    if (w.size() * kBytesPerLetter > construction_budget_bytes()) {
      throw BudgetExceeded("occurrence index for " + std::to_string(w.size()) +
                           " letters would exceed the construction budget");
    }
    return w;
  }

  Word w_;
  SuffixAutomaton sam_;
  Eertree pal_;
};

inline OccurrenceIndex build_index(const Word& w) { return OccurrenceIndex(w); }

}  // namespace palfac
