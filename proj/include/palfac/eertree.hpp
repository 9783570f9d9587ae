#pragma once
/**
 * @file eertree.hpp
 * @brief Palindromic tree over a word.
 *
 * One node per distinct nonempty palindromic factor, plus the two standard
 * roots of length -1 and 0. Node suffix links point to the longest proper
 * palindromic suffix, so the chain from longest_suffix_node(i) enumerates
 * every palindromic suffix ending at position i in strictly decreasing
 * length order. OccurrenceIndex builds this over the reversed word to get
 * palindromic prefixes.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "palfac/word.hpp"

namespace palfac {

class Eertree {
 public:
  explicit Eertree(Word w) : src_(std::move(w)) {
    nodes_.reserve(src_.size() + 3);
    nodes_.push_back(Node{-1, 0, -1, {}});  // length -1 root
    nodes_.push_back(Node{0, 0, -1, {}});   // empty word
    longest_at_.resize(src_.size());
    int last = 1;
    for (std::size_t i = 0; i < src_.size(); ++i) {
      last = add(last, static_cast<std::int32_t>(i));
      longest_at_[i] = last;
    }
  }

  const Word& source() const { return src_; }

  /** Node of the longest palindromic suffix ending at position i (inclusive). */
  int longest_suffix_node(std::size_t i) const { return longest_at_[i]; }

  std::int32_t length_of(int node) const { return at(node).len; }
  int suffix_link(int node) const { return at(node).link; }

  /** Lengths of all palindromic suffixes ending at i, strictly decreasing. */
  std::vector<std::size_t> suffix_palindrome_lengths(std::size_t i) const {
    std::vector<std::size_t> out;
    for (int v = longest_at_[i]; at(v).len > 0; v = at(v).link) {
      out.push_back(static_cast<std::size_t>(at(v).len));
    }
    return out;
  }

  /** Number of distinct nonempty palindromic factors. */
  std::size_t distinct_palindromes() const { return nodes_.size() - 2; }

  /** The palindrome a node stands for, cut from its first occurrence. */
  Word node_word(int node) const {
    const Node& nd = at(node);
    const std::size_t len = static_cast<std::size_t>(nd.len);
    const std::size_t end = static_cast<std::size_t>(nd.first_seen_end);
    return src_.subword(end + 1 - len, len);
  }

  /** Every distinct nonempty palindromic factor, in node creation order. */
  std::vector<Word> all_palindromes() const {
    std::vector<Word> out;
    out.reserve(nodes_.size() - 2);
    for (std::size_t v = 2; v < nodes_.size(); ++v) {
      out.push_back(node_word(static_cast<int>(v)));
    }
    return out;
  }

 private:
  struct Node {
    std::int32_t len;
    std::int32_t link;
    std::int32_t first_seen_end;
    std::vector<std::pair<Letter, std::int32_t>> next;
  };

  Node& at(int v) { return nodes_[static_cast<std::size_t>(v)]; }
  const Node& at(int v) const { return nodes_[static_cast<std::size_t>(v)]; }

  int transition(int node, Letter c) const {
    for (const auto& [letter, to] : at(node).next) {
      if (letter == c) return to;
    }
    return -1;
  }

  /** Can the palindrome at v, ending just before i, be wrapped as c...c ending at i? */
  bool extendable(int v, std::int32_t i, Letter c) const {
    const std::int32_t p = i - at(v).len - 1;
    return p >= 0 && src_[static_cast<std::size_t>(p)] == c;
  }

  int add(int last, std::int32_t i) {
    const Letter c = src_[static_cast<std::size_t>(i)];
    int x = last;
    while (!extendable(x, i, c)) x = at(x).link;
    const int existing = transition(x, c);
    if (existing != -1) return existing;
    nodes_.push_back(Node{at(x).len + 2, 1, i, {}});
    const int cur = static_cast<int>(nodes_.size()) - 1;
    if (at(cur).len > 1) {
      int y = at(x).link;
      while (!extendable(y, i, c)) y = at(y).link;
      at(cur).link = transition(y, c);
    }
    at(x).next.emplace_back(c, cur);
    return cur;
  }

  Word src_;
  std::vector<Node> nodes_;
  std::vector<int> longest_at_;
};

}  // namespace palfac
