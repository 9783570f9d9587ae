#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>

#include "palfac/codes.hpp"
#include "support.hpp"

using namespace palfac;
using testsupport::random_word;
using testsupport::wd;

TEST_CASE("code check golden verdicts") {
  CHECK(is_code({wd("0", 2), wd("01", 2), wd("011", 2)}));
  CHECK_FALSE(is_code({wd("0", 2), wd("01", 2), wd("10", 2)}));  // 010 = 0.10 = 01.0
  CHECK(is_code({wd("00", 2)}));
  CHECK(is_code({wd("0", 2), wd("1", 2)}));
  CHECK(is_code({wd("01", 2), wd("0110", 2)}));
  CHECK(is_code({}));
  CHECK_FALSE(is_code({wd("01", 2), wd("01", 2)}));  // duplicates are ambiguous
}

TEST_CASE("code check errors") {
  CHECK_THROWS_AS(is_code({Word::empty_over(2)}), EmptyWordInSet);
  CHECK_THROWS_AS(is_code({wd("0", 2)}, 0), CapExceeded);
  CHECK_THROWS_AS(is_code({wd("0101", 2)}, 64, 3), CapExceeded);
}

namespace {

// Brute-force ambiguity witness: some binary text of length <= max_len with
// at least two factorizations over xs, found by counting parses with a DP.
bool brute_force_ambiguous(const std::vector<Word>& xs, std::size_t max_len) {
  std::vector<Letter> text(max_len);
  std::vector<unsigned long long> dp(max_len + 1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      for (std::size_t i = 0; i < len; ++i) text[i] = (bits >> i) & 1;
      dp.assign(len + 1, 0);
      dp[0] = 1;
      for (std::size_t i = 1; i <= len; ++i) {
        for (const Word& x : xs) {
          if (x.size() > i) continue;
          bool match = true;
          for (std::size_t j = 0; j < x.size(); ++j) {
            if (text[i - x.size() + j] != x[j]) {
              match = false;
              break;
            }
          }
          if (match) dp[i] += dp[i - x.size()];
        }
      }
      if (dp[len] >= 2) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("code check agrees with brute-force ambiguity search") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> nd(1, 3), ld(1, 2);
  for (int trial = 0; trial < 400; ++trial) {
    std::set<std::vector<Letter>> set;
    int k = nd(rng);
    for (int i = 0; i < k; ++i) {
      set.insert(random_word(rng, static_cast<std::size_t>(ld(rng)), 2).letters());
    }
    std::vector<Word> xs;
    for (const auto& v : set) xs.emplace_back(v, 2);
    // Small sets of words of length <= 2: any ambiguity shows up well before
    // total length 12, so the two verdicts must agree exactly.
    CHECK(is_code(xs) == !brute_force_ambiguous(xs, 12));
  }
}
