#pragma once
/**
 * @file lengths.hpp
 * @brief Exact singular-word lengths, without constructing the words.
 *
 * |z_{-1}| = 0, |z_0| = 1,
 * |z_n| = |z_{n-1}| + 2 |z_{n-2}|                    for 1 <= n <= m-1,
 * |z_n| = |z_{n-1}| + ... + |z_{n-m}|                for n >= m, m even,
 * |z_n| = |z_{n-1}| + ... + |z_{n-m}| + (-1)^n      for n >= m, m odd.
 *
 * For m = 2 this is the Fibonacci sequence shifted by one: |z_n| = F_{n+1}.
 * Arbitrary-precision integers keep the values exact far past word scale.
 */

#include <deque>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "palfac/errors.hpp"
#include "palfac/word.hpp"

namespace palfac {

using BigInt = boost::multiprecision::cpp_int;

class LengthTable {
 public:
  explicit LengthTable(Letter m) : m_(m) {
    if (m < 2) throw InvalidM("length table needs m >= 2");
    len_.push_back(0);  // |z_{-1}|
    len_.push_back(1);  // |z_0|
  }

  Letter m() const { return m_; }

  const BigInt& z_length(int n) {
    if (n < -1) throw IndexBelowRange("singular index starts at -1");
    while (static_cast<int>(len_.size()) - 2 < n) build_next();
    return len_[static_cast<std::size_t>(n + 1)];
  }

  /// F_0 = 0, F_1 = 1.
  static BigInt fibonacci(unsigned n) {
    BigInt a = 0, b = 1;
    for (unsigned k = 0; k < n; ++k) {
      BigInt c = a + b;
      a = b;
      b = c;
    }
    return a;
  }

 private:
  const BigInt& at(int n) const { return len_[static_cast<std::size_t>(n + 1)]; }

  void build_next() {
    int n = static_cast<int>(len_.size()) - 1;
    BigInt v;
    if (n <= static_cast<int>(m_) - 1) {
      v = at(n - 1) + 2 * at(n - 2);
    } else {
      for (int k = 1; k <= static_cast<int>(m_); ++k) v += at(n - k);
      if (m_ % 2 == 1) v += (n % 2 == 0) ? 1 : -1;
    }
    len_.push_back(std::move(v));
  }

  Letter m_;
  std::deque<BigInt> len_;
};

inline BigInt z_length(Letter m, int n) {
  LengthTable t(m);
  return t.z_length(n);
}

}  // namespace palfac
