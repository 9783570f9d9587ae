#pragma once
/**
 * @file suffix_automaton.hpp
 * @brief Online suffix automaton with earliest-end tracking.
 *
 * The automaton recognizes exactly the factors of the source word. Every
 * state additionally stores the smallest end position (exclusive) over all
 * occurrences of the strings it represents. Since all strings of one state
 * share their end-position set, the earliest start of a concrete factor p
 * reachable at state v is first_end(v) - |p|, which is what the occurrence
 * queries in OccurrenceIndex build on.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "palfac/word.hpp"

namespace palfac {

class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(const Word& w) {
    states_.reserve(2 * w.size() + 2);
    states_.push_back(State{0, -1, 0, {}});
    int last = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      last = extend(last, w[i], static_cast<std::int32_t>(i + 1));
    }
  }

  int root() const { return 0; }
  int state_count() const { return static_cast<int>(states_.size()); }

  /** Target of the edge labelled c, or -1 when no such factor exists. */
  int transition(int state, Letter c) const {
    for (const auto& [letter, to] : at(state).next) {
      if (letter == c) return to;
    }
    return -1;
  }

  std::int32_t length_of(int state) const { return at(state).len; }

  /** Smallest exclusive end position over all occurrences of the state's strings. */
  std::int32_t first_end(int state) const { return at(state).first_end; }

  bool contains(const Word& p) const {
    int st = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      st = transition(st, p[i]);
      if (st == -1) return false;
    }
    return true;
  }

  /** Number of distinct nonempty factors of the source word. */
  std::uint64_t distinct_factors() const {
    std::uint64_t total = 0;
    for (std::size_t v = 1; v < states_.size(); ++v) {
      total += static_cast<std::uint64_t>(states_[v].len - at(states_[v].link).len);
    }
    return total;
  }

 private:
  struct State {
    std::int32_t len;
    std::int32_t link;
    std::int32_t first_end;
    std::vector<std::pair<Letter, std::int32_t>> next;
  };

  State& at(int v) { return states_[static_cast<std::size_t>(v)]; }
  const State& at(int v) const { return states_[static_cast<std::size_t>(v)]; }

  int new_state(std::int32_t len, std::int32_t first_end) {
    states_.push_back(State{len, -1, first_end, {}});
    return static_cast<int>(states_.size()) - 1;
  }

  void set_transition(int state, Letter c, int to) {
    for (auto& [letter, target] : at(state).next) {
      if (letter == c) {
        target = to;
        return;
      }
    }
  }

  int extend(int last, Letter c, std::int32_t end) {
    const int cur = new_state(at(last).len + 1, end);
    int p = last;
    while (p != -1 && transition(p, c) == -1) {
      at(p).next.emplace_back(c, cur);
      p = at(p).link;
    }
    if (p == -1) {
      at(cur).link = 0;
      return cur;
    }
    const int q = transition(p, c);
    if (at(p).len + 1 == at(q).len) {
      at(cur).link = q;
      return cur;
    }
    // Split q: the clone keeps q's occurrence history, so it inherits q's
    // earliest end rather than the position being added now.
    const int clone = new_state(at(p).len + 1, at(q).first_end);
    at(clone).next = at(q).next;
    at(clone).link = at(q).link;
    while (p != -1 && transition(p, c) == q) {
      set_transition(p, c, clone);
      p = at(p).link;
    }
    at(q).link = clone;
    at(cur).link = clone;
    return cur;
  }

  std::vector<State> states_;
};

}  // namespace palfac
