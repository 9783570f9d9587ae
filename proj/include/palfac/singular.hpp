#pragma once
/**
 * @file singular.hpp
 * @brief The m-bonacci morphism, its singular words, and the block constructions
 *        built from them.
 *
 * phi_m maps i -> 0(i+1) for i < m-1 and (m-1) -> 0; its fixed point from 0 is
 * the m-bonacci word (m = 2: the Fibonacci word). h(m, n) = phi_m^n(0).
 *
 * The singular sequence z_n (n >= -1) over the m-letter alphabet:
 *   z_{-1} = empty, z_0 = 0,
 *   z_n = z_{n-2} z_{n-3} ... z_1 z_0 . n . z_0 z_1 ... z_{n-3} z_{n-2}   (1 <= n <= m-1)
 *   z_n = z_{n-2} ... z_{n-(m-1)} . z_{n-m} . z_{n-(m+1)} . z_{n-m} . z_{n-(m-1)} ... z_{n-2}
 *                                                                         (n >= m)
 * Every z_n is a palindrome. For m = 2 these are the Fibonacci singular words
 * shifted by one index.
 *
 * Derived blocks:
 *   p(m)   = z_0 z_1 ... z_{m-3} z_{m-2} z_{m-3} ... z_1 z_0 . (m-1)
 *   Q(n)   = z_{n-(m-1)} ... z_{n-1} z_n z_{n-1} ... z_{n-(m-1)}          (n >= m-2)
 *   g(n)   = p(m) Q(m-2) Q(m-1) ... Q(n-1)                                (n >= m-2)
 */

#include <cstddef>
#include <deque>
#include <mutex>
#include <string>
#include <vector>

#include "palfac/budget.hpp"
#include "palfac/errors.hpp"
#include "palfac/morphism.hpp"
#include "palfac/word.hpp"

namespace palfac {

/// i -> 0(i+1) for i < m-1, (m-1) -> 0. Throws InvalidM for m < 2.
inline Morphism phi_m(Letter m) {
  if (m < 2) throw InvalidM("phi_m needs m >= 2");
  std::vector<Word> images;
  images.reserve(m);
  for (Letter i = 0; i + 1 < m; ++i) images.push_back(Word({0, i + 1}, m));
  images.push_back(Word({0}, m));
  return Morphism(std::move(images));
}

/// h(m, n) = phi_m^n(0).
inline Word h_word(Letter m, unsigned n) {
  Morphism phi = phi_m(m);
  Word w = Word::single(0, m);
  for (unsigned k = 0; k < n; ++k) w = phi.apply(w);
  return w;
}

/**
 * Memoized cache of the singular sequence for one m. Thread-safe; returned
 * references stay valid for the cache's lifetime. Construction beyond the
 * byte budget throws BudgetExceeded.
 */
class PSingularSeq {
 public:
  explicit PSingularSeq(Letter m, std::size_t budget_bytes = construction_budget_bytes())
      : m_(m), budget_(budget_bytes) {
    if (m < 2) throw InvalidM("singular sequence needs m >= 2");
    zs_.push_back(Word::empty_over(m));   // z_{-1}
    zs_.push_back(Word::single(0, m));    // z_0
    used_ = sizeof(Letter);
  }

  Letter m() const { return m_; }

  /// z_n for n >= -1.
  const Word& z(int n) {
    if (n < -1) throw IndexBelowRange("singular index starts at -1");
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(zs_.size()) - 2 < n) build_next();
    return zs_[static_cast<std::size_t>(n + 1)];
  }

 private:
  const Word& cached(int n) const { return zs_[static_cast<std::size_t>(n + 1)]; }

  void build_next() {
    int n = static_cast<int>(zs_.size()) - 1;
    std::vector<int> idx;
    if (n <= static_cast<int>(m_) - 1) {
      for (int k = n - 2; k >= 0; --k) idx.push_back(k);
      idx.push_back(-2);  // marker: the bare letter n
      for (int k = 0; k <= n - 2; ++k) idx.push_back(k);
    } else {
      int lo = n - static_cast<int>(m_) + 1;
      for (int k = n - 2; k >= lo; --k) idx.push_back(k);
      idx.push_back(n - static_cast<int>(m_));
      idx.push_back(n - static_cast<int>(m_) - 1);
      idx.push_back(n - static_cast<int>(m_));
      for (int k = lo; k <= n - 2; ++k) idx.push_back(k);
    }

    std::size_t total = 0;
    for (int k : idx) total += k == -2 ? 1 : cached(k).size();
    if (used_ + total * sizeof(Letter) > budget_) {
      throw BudgetExceeded("singular cache for m=" + std::to_string(m_) + " would exceed " +
                           std::to_string(budget_ >> 20) + " MiB at n=" + std::to_string(n));
    }

    Word w = Word::empty_over(m_);
    w.reserve(total);
    for (int k : idx) {
      if (k == -2) {
        w.push_back(static_cast<Letter>(n));
      } else {
        w += cached(k);
      }
    }
    used_ += total * sizeof(Letter);
    zs_.push_back(std::move(w));
  }

  Letter m_;
  std::size_t budget_;
  std::size_t used_ = 0;
  std::deque<Word> zs_;
  std::mutex mu_;
};

/// One-shot z_n; builds (and discards) the chain each call.
inline Word z_singular(Letter m, int n) {
  PSingularSeq seq(m);
  return seq.z(n);
}

/// Fibonacci singular words: index shift of the m = 2 sequence. n >= 1.
inline Word fib_singular(int n) {
  if (n < 1) throw IndexBelowRange("Fibonacci singular words start at index 1");
  return z_singular(2, n - 1);
}

/// Flip the final letter of a binary word.
inline Word flip_last(const Word& w) {
  if (w.empty()) throw EmptyWord("flip_last needs a nonempty word");
  if (w.alphabet_size() != 2) throw NonBinaryAlphabet("flip_last is defined on binary words");
  std::vector<Letter> v = w.letters();
  v.back() = 1 - v.back();
  return Word(std::move(v), 2);
}

/**
 * Closed form: z_n equals the product of reversed h-words of one parity with
 * the reversed product of the other parity stripped off its end:
 *   n odd:  z_n = (h_1^R h_3^R ... h_n^R) with suffix (h_0^R h_2^R ... h_{n-1}^R) removed
 *   n even: z_n = (h_0^R h_2^R ... h_n^R) with suffix (h_1^R h_3^R ... h_{n-1}^R) removed
 * Throws StripMismatch if the quotient does not divide (which would mean a
 * construction bug, not bad input).
 */
inline Word z_singular_closed(Letter m, int n) {
  if (m < 2) throw InvalidM("singular sequence needs m >= 2");
  if (n < -1) throw IndexBelowRange("singular index starts at -1");
  Morphism phi = phi_m(m);
  std::vector<Word> h{Word::single(0, m)};
  while (static_cast<int>(h.size()) <= n) h.push_back(phi.apply(h.back()));

  Word big = Word::empty_over(m);
  Word small = Word::empty_over(m);
  int big_parity = (n % 2 + 2) % 2;
  for (int k = 0; k <= n; ++k) {
    Word rev = reverse(h[static_cast<std::size_t>(k)]);
    if (k % 2 == big_parity) {
      big += rev;
    } else {
      small += rev;
    }
  }
  try {
    return strip_suffix(big, small);
  } catch (const NotASuffix&) {
    throw StripMismatch("reversed h-product quotient failed for m=" + std::to_string(m) +
                        ", n=" + std::to_string(n));
  }
}

/// p(m): the palindromic seed block ending in the letter m-1. "01", "0102", "01020103", ...
inline Word p_word(Letter m, PSingularSeq& seq) {
  if (m < 2) throw InvalidM("p block needs m >= 2");
  if (seq.m() != m) throw std::invalid_argument("sequence built for a different m");
  Word w = Word::empty_over(m);
  for (int k = 0; k <= static_cast<int>(m) - 3; ++k) w += seq.z(k);
  w += seq.z(static_cast<int>(m) - 2);
  for (int k = static_cast<int>(m) - 3; k >= 0; --k) w += seq.z(k);
  w.push_back(m - 1);
  return w;
}

inline Word p_word(Letter m) {
  PSingularSeq seq(m);
  return p_word(m, seq);
}

/**
 * The 2m-2 palindromic factors whose concatenation is p(m): for j = 1..m-1 a
 * palindromic block (z_0 for j = 1, else z_0 z_1 ... z_{j-3} z_{j-2} z_{j-3} ... z_0)
 * followed by the single letter j.
 */
inline std::vector<Word> p_word_pal_decomposition(Letter m, PSingularSeq& seq) {
  if (m < 2) throw InvalidM("p block needs m >= 2");
  if (seq.m() != m) throw std::invalid_argument("sequence built for a different m");
  std::vector<Word> out;
  out.reserve(2 * (m - 1));
  for (Letter j = 1; j < m; ++j) {
    Word block = Word::empty_over(m);
    if (j == 1) {
      block += seq.z(0);
    } else {
      for (int k = 0; k <= static_cast<int>(j) - 3; ++k) block += seq.z(k);
      block += seq.z(static_cast<int>(j) - 2);
      for (int k = static_cast<int>(j) - 3; k >= 0; --k) block += seq.z(k);
    }
    out.push_back(std::move(block));
    out.push_back(Word::single(j, m));
  }
  return out;
}

inline std::vector<Word> p_word_pal_decomposition(Letter m) {
  PSingularSeq seq(m);
  return p_word_pal_decomposition(m, seq);
}

/// Q(n) = z_{n-(m-1)} ... z_{n-1} z_n z_{n-1} ... z_{n-(m-1)}, n >= m-2.
inline Word q_block(Letter m, int n, PSingularSeq& seq) {
  if (seq.m() != m) throw std::invalid_argument("sequence built for a different m");
  if (n < static_cast<int>(m) - 2) {
    throw IndexBelowRange("Q blocks start at n = m-2");
  }
  Word w = Word::empty_over(m);
  for (int k = n - static_cast<int>(m) + 1; k <= n; ++k) w += seq.z(k);
  for (int k = n - 1; k >= n - static_cast<int>(m) + 1; --k) w += seq.z(k);
  return w;
}

inline Word q_block(Letter m, int n) {
  PSingularSeq seq(m);
  return q_block(m, n, seq);
}

/// g(n) = p(m) Q(m-2) ... Q(n-1), n >= m-2; g(m-2) = p(m).
inline Word g_prefix(Letter m, int n, PSingularSeq& seq) {
  if (seq.m() != m) throw std::invalid_argument("sequence built for a different m");
  if (n < static_cast<int>(m) - 2) {
    throw IndexBelowRange("g prefixes start at n = m-2");
  }
  Word w = p_word(m, seq);
  for (int k = static_cast<int>(m) - 2; k < n; ++k) w += q_block(m, k, seq);
  return w;
}

inline Word g_prefix(Letter m, int n) {
  PSingularSeq seq(m);
  return g_prefix(m, n, seq);
}

}  // namespace palfac
