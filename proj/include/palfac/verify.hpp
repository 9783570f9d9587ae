#pragma once
/**
 * @file verify.hpp
 * @brief Cross-checks between the factorization engines and the singular-word
 *        constructions, packaged as self-describing pass/fail reports.
 *
 * Every check pits two independent routes against each other: factorization
 * engines vs. recursive word constructions, closed forms vs. recursions,
 * length recurrences vs. constructed words, full scans vs. structural claims.
 * A report carries the first counterexample found, so a red result always
 * names a concrete location.
 *
 * Singular words enter through a SingularProvider so tests can swap in a
 * corrupted source and prove the checks are not vacuous.
 */

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "palfac/errors.hpp"
#include "palfac/factorizer.hpp"
#include "palfac/families.hpp"
#include "palfac/lengths.hpp"
#include "palfac/morphism.hpp"
#include "palfac/occurrence_index.hpp"
#include "palfac/singular.hpp"
#include "palfac/word.hpp"

namespace palfac {

struct Counterexample {
  std::string location;
  std::string expected;
  std::string actual;

  bool operator==(const Counterexample&) const = default;
};

/// One executed check. pass == false implies counterexample is present.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool pass = true;
  std::optional<Counterexample> counterexample;
  double elapsed_seconds = 0.0;
};

inline nlohmann::ordered_json report_to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["checkName"] = r.name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.parameters) params[key] = value;
  j["parameters"] = std::move(params);
  j["pass"] = r.pass;
  if (r.counterexample) {
    j["counterexample"] = {{"location", r.counterexample->location},
                           {"expected", r.counterexample->expected},
                           {"actual", r.counterexample->actual}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

/// Source of singular words z_n^(m). The default implementation builds them by
/// recursion; tests substitute corrupted sources to prove checks can fail.
class SingularProvider {
 public:
  virtual ~SingularProvider() = default;
  virtual Word z(Letter m, int n) = 0;
};

class CachedSingularProvider : public SingularProvider {
 public:
  Word z(Letter m, int n) override {
    std::unique_lock<std::mutex> lock(mu_);
    auto& seq = seqs_[m];
    if (!seq) seq = std::make_unique<PSingularSeq>(m);
    PSingularSeq& s = *seq;
    lock.unlock();  // PSingularSeq locks internally
    return s.z(n);
  }

 private:
  std::mutex mu_;
  std::map<Letter, std::unique_ptr<PSingularSeq>> seqs_;
};

/// Wraps another provider and flips one letter of one word. Exists so the
/// suite can demonstrate that every consumer of that word turns red.
class MutatedSingularProvider : public SingularProvider {
 public:
  MutatedSingularProvider(std::shared_ptr<SingularProvider> base, Letter m, int n,
                          std::size_t position)
      : base_(std::move(base)), m_(m), n_(n), position_(position) {}

  Word z(Letter m, int n) override {
    Word w = base_->z(m, n);
    if (m == m_ && n == n_ && position_ < w.size()) {
      std::vector<Letter> v = w.letters();
      v[position_] = static_cast<Letter>((v[position_] + 1) % m);
      return Word(std::move(v), m);
    }
    return w;
  }

 private:
  std::shared_ptr<SingularProvider> base_;
  Letter m_;
  int n_;
  std::size_t position_;
};

/**
 * Offset from the engine's 1-based factor ordinal to the subscript the
 * singular-word naming scheme assigns that factor for the given family and
 * mode: subscript = ordinal + offset. The m-bonacci pz list starts at z_0
 * (offset -1) and its pc list starts at c_{-m} (offset -(m+1)); Fibonacci pc
 * starts at c_{-1} (offset -2). Everything else counts plainly from 1.
 */
constexpr int paper_index_offset(FactorizationMode mode, FamilyKind kind, Letter m) noexcept {
  if (kind == FamilyKind::Fibonacci && mode == FactorizationMode::PC) return -2;
  if (kind == FamilyKind::MBonacci) {
    if (mode == FactorizationMode::PZ) return -1;
    if (mode == FactorizationMode::PC) return -(static_cast<int>(m) + 1);
  }
  return 0;
}

namespace detail {

inline std::vector<std::size_t> kmp_failure(const std::vector<Letter>& p) {
  std::vector<std::size_t> f(p.size(), 0);
  for (std::size_t i = 1, k = 0; i < p.size(); ++i) {
    while (k > 0 && p[i] != p[k]) k = f[k - 1];
    if (p[i] == p[k]) ++k;
    f[i] = k;
  }
  return f;
}

inline std::vector<std::size_t> kmp_occurrences(const Word& text, const Word& pat) {
  std::vector<std::size_t> out;
  if (pat.empty() || pat.size() > text.size()) return out;
  const std::vector<std::size_t> f = kmp_failure(pat.letters());
  std::size_t k = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (k > 0 && text[i] != pat[k]) k = f[k - 1];
    if (text[i] == pat[k]) ++k;
    if (k == pat.size()) {
      out.push_back(i + 1 - pat.size());
      k = f[k - 1];
    }
  }
  return out;
}

inline bool contains_factor(const Word& text, const Word& pat) {
  if (pat.empty()) return true;
  return !kmp_occurrences(text, pat).empty();
}

/// Length of the longest suffix of a that is also a prefix of b.
inline std::size_t suffix_prefix_overlap(const Word& a, const Word& b) {
  if (a.empty() || b.empty()) return 0;
  const std::vector<std::size_t> f = kmp_failure(b.letters());
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    while (k > 0 && a[i] != b[k]) k = f[k - 1];
    if (a[i] == b[k]) ++k;
    if (k == b.size()) {
      if (i + 1 == a.size()) return k;  // b itself is a suffix of a
      k = f[k - 1];
    }
  }
  return k;
}

inline std::optional<std::size_t> first_mismatch(const Word& a, const Word& b,
                                                 std::size_t limit) {
  const std::size_t n = std::min({a.size(), b.size(), limit});
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

inline std::string describe(const Word& w) {
  if (w.size() <= 48) return render(w);
  return render(w.prefix(24)) + ".. (" + std::to_string(w.size()) + " letters)";
}

/**
 * Decode a palindromic factor p of the m-bonacci word back through the
 * morphism: p starting with 0 equals image(p') with a single 0 appended, any
 * other p equals image(p') with its leading 0 removed. Images are 0(i+1) for
 * i < m-1 and the bare letter 0 for m-1, so the image stream decodes greedily.
 * Returns nothing when p does not have the claimed shape.
 */
inline std::optional<Word> palindrome_preimage(const Word& p, Letter m) {
  if (p.empty()) return Word::empty_over(m);
  Word target = Word::empty_over(m);
  if (p[0] == 0) {
    if (p[p.size() - 1] != 0) return std::nullopt;
    target = p.prefix(p.size() - 1);
  } else {
    target = Word::single(0, m);
    target += p;
  }
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < target.size()) {
    if (target[i] != 0) return std::nullopt;
    if (i + 1 < target.size() && target[i + 1] != 0) {
      out.push_back(static_cast<Letter>(target[i + 1] - 1));
      i += 2;
    } else {
      out.push_back(static_cast<Letter>(m - 1));
      i += 1;
    }
  }
  return Word(std::move(out), m);
}

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) : start_(std::chrono::steady_clock::now()) {
    report_.name = std::move(name);
  }

  void param(const std::string& key, std::string value) {
    report_.parameters.emplace_back(key, std::move(value));
  }
  void param(const std::string& key, long long value) { param(key, std::to_string(value)); }

  bool failed() const { return !report_.pass; }

  /// Records the first failure; later calls are ignored.
  void fail(std::string location, std::string expected, std::string actual) {
    if (!report_.pass) return;
    report_.pass = false;
    report_.counterexample =
        Counterexample{std::move(location), std::move(expected), std::move(actual)};
  }

  CheckReport take() {
    report_.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  CheckReport report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/**
 * Runs the theorem checks. Each check_* returns one CheckReport; run_all
 * composes them over a range of alphabets in a fixed order and converts
 * escaped exceptions into failed reports instead of aborting.
 */
class Verifier {
 public:
  Verifier() : provider_(std::make_shared<CachedSingularProvider>()) {}
  explicit Verifier(std::shared_ptr<SingularProvider> provider)
      : provider_(std::move(provider)) {}

  /// Certified Z factors of the Fibonacci word are the singular words z_0^(2)..
  CheckReport check_z_fib(int k) {
    require_count(k);
    detail::CheckBuilder run("check_z_fib");
    run.param("k", static_cast<long long>(k));
    run.param("paper_index_offset",
              static_cast<long long>(
                  paper_index_offset(FactorizationMode::Z, FamilyKind::Fibonacci, 2)));
    expect_theorem_list(run, FamilyHandle::fibonacci(), FactorizationMode::Z,
                        fib_singular_list(k));
    return run.take();
  }

  CheckReport check_pz_fib(int k) {
    require_count(k);
    detail::CheckBuilder run("check_pz_fib");
    run.param("k", static_cast<long long>(k));
    run.param("paper_index_offset",
              static_cast<long long>(
                  paper_index_offset(FactorizationMode::PZ, FamilyKind::Fibonacci, 2)));
    expect_theorem_list(run, FamilyHandle::fibonacci(), FactorizationMode::PZ,
                        fib_singular_list(k));
    return run.take();
  }

  /// PC factors of the Fibonacci word: 0, 1, 0, then z_{n-2} z_{n-1} z_{n-2}.
  CheckReport check_pc_fib(int k) {
    require_count(k);
    detail::CheckBuilder run("check_pc_fib");
    run.param("k", static_cast<long long>(k));
    run.param("paper_index_offset",
              static_cast<long long>(
                  paper_index_offset(FactorizationMode::PC, FamilyKind::Fibonacci, 2)));
    std::vector<Word> expected;
    expected.push_back(provider_->z(2, 0));
    expected.push_back(provider_->z(2, 1));
    expected.push_back(provider_->z(2, 0));
    for (int n = 2; n <= k; ++n) {
      Word w = provider_->z(2, n - 2);
      w += provider_->z(2, n - 1);
      w += provider_->z(2, n - 2);
      expected.push_back(std::move(w));
    }
    expect_theorem_list(run, FamilyHandle::fibonacci(), FactorizationMode::PC, expected);
    return run.take();
  }

  /// Certified PZ factors of the m-bonacci word are z_0^(m), ..., z_k^(m).
  CheckReport check_pz_mbonacci(Letter m, int k) {
    detail::CheckBuilder run("check_pz_mbonacci");
    run.param("m", static_cast<long long>(m));
    run.param("k", static_cast<long long>(k));
    run.param("paper_index_offset",
              static_cast<long long>(
                  paper_index_offset(FactorizationMode::PZ, FamilyKind::MBonacci, m)));
    std::vector<Word> expected;
    for (int n = 0; n <= k; ++n) expected.push_back(provider_->z(m, n));
    expect_theorem_list(run, FamilyHandle::mbonacci(m), FactorizationMode::PZ, expected);
    return run.take();
  }

  /// Certified PC factors of the m-bonacci word: the 2m-2 seed factors, then
  /// the symmetric blocks Q(m-2), ..., Q(k).
  CheckReport check_pc_mbonacci(Letter m, int k) {
    detail::CheckBuilder run("check_pc_mbonacci");
    run.param("m", static_cast<long long>(m));
    run.param("k", static_cast<long long>(k));
    run.param("paper_index_offset",
              static_cast<long long>(
                  paper_index_offset(FactorizationMode::PC, FamilyKind::MBonacci, m)));
    std::vector<Word> expected;
    for (Letter j = 1; j < m; ++j) {
      Word block = Word::empty_over(m);
      if (j == 1) {
        block += provider_->z(m, 0);
      } else {
        for (int i = 0; i <= static_cast<int>(j) - 3; ++i) block += provider_->z(m, i);
        block += provider_->z(m, static_cast<int>(j) - 2);
        for (int i = static_cast<int>(j) - 3; i >= 0; --i) block += provider_->z(m, i);
      }
      expected.push_back(std::move(block));
      expected.push_back(Word::single(j, m));
    }
    for (int n = static_cast<int>(m) - 2; n <= k; ++n) {
      expected.push_back(symmetric_block(m, n));
    }
    expect_theorem_list(run, FamilyHandle::mbonacci(m), FactorizationMode::PC, expected);
    return run.take();
  }

  /// Word identities: morphic shift and closed form for every m; the binary
  /// case adds the three-term, flip-last and parity-product identities.
  CheckReport check_singular_identities(Letter m, int n_max) {
    detail::CheckBuilder run("check_singular_identities");
    run.param("m", static_cast<long long>(m));
    run.param("n_max", static_cast<long long>(n_max));
    const Morphism phi = phi_m(m);
    const int cap = constructible_cap(m, n_max, kWordLetterCap);
    run.param("n_constructed", static_cast<long long>(cap));
    for (int n = 0; n <= cap && !run.failed(); ++n) {
      const Word zn = provider_->z(m, n);
      const Word shifted = phi.apply(provider_->z(m, n - 1));
      if (n % 2 == 1) {
        Word lhs = Word::single(0, m);
        lhs += zn;
        if (!(lhs == shifted)) {
          run.fail("morphic shift at n=" + std::to_string(n), detail::describe(shifted),
                   detail::describe(lhs));
          break;
        }
      } else {
        Word rhs = shifted;
        rhs.push_back(0);
        if (!(zn == rhs)) {
          run.fail("morphic shift at n=" + std::to_string(n), detail::describe(rhs),
                   detail::describe(zn));
          break;
        }
      }
      const Word closed = z_singular_closed(m, n);
      if (!(zn == closed)) {
        run.fail("closed form at n=" + std::to_string(n), detail::describe(closed),
                 detail::describe(zn));
        break;
      }
      if (m == 2) {
        if (n >= 3) {
          Word three = provider_->z(2, n - 2);
          three += provider_->z(2, n - 3);
          three += provider_->z(2, n - 2);
          if (!(zn == three)) {
            run.fail("three-term identity at n=" + std::to_string(n),
                     detail::describe(three), detail::describe(zn));
            break;
          }
        }
        if (n >= 2) {
          Word fl = provider_->z(2, n - 2);
          fl += flip_last(provider_->z(2, n - 1));
          if (!(zn == fl)) {
            run.fail("flip-last identity at n=" + std::to_string(n), detail::describe(fl),
                     detail::describe(zn));
            break;
          }
          Word par = Word::single(n % 2 == 0 ? 0 : 1, 2);
          for (int i = 0; i <= n - 2; ++i) par += provider_->z(2, i);
          if (!(zn == par)) {
            run.fail("parity product at n=" + std::to_string(n), detail::describe(par),
                     detail::describe(zn));
            break;
          }
        }
      }
    }
    return run.take();
  }

  /// Length table against constructed words, an independent recurrence route,
  /// the Fibonacci correspondence, and the three comparison inequalities.
  CheckReport check_lengths(Letter m, int n_max) {
    detail::CheckBuilder run("check_lengths");
    run.param("m", static_cast<long long>(m));
    run.param("n_max", static_cast<long long>(n_max));
    const int n_far = std::max(n_max, 200);
    run.param("n_recurrence", static_cast<long long>(n_far));
    LengthTable table(m);
    const int cap = constructible_cap(m, n_max, kWordLetterCap);
    for (int n = 0; n <= cap && !run.failed(); ++n) {
      const Word zn = provider_->z(m, n);
      if (table.z_length(n) != zn.size()) {
        run.fail("constructed length at n=" + std::to_string(n), table.z_length(n).str(),
                 std::to_string(zn.size()));
      }
    }
    if (m == 2) {
      for (int n = 0; n <= n_far && !run.failed(); ++n) {
        const BigInt fib = LengthTable::fibonacci(static_cast<unsigned>(n + 1));
        if (table.z_length(n) != fib) {
          run.fail("Fibonacci correspondence at n=" + std::to_string(n), fib.str(),
                   table.z_length(n).str());
        }
      }
    }
    // doubled-window route: |z_n| = 2 (|z_{n-m}| + ... + |z_{n-2}|) + |z_{n-m-1}|
    for (int n = m; n <= n_far && !run.failed(); ++n) {
      BigInt v = 0;
      for (int j = n - static_cast<int>(m); j <= n - 2; ++j) v += table.z_length(j);
      v *= 2;
      v += table.z_length(n - static_cast<int>(m) - 1);
      if (table.z_length(n) != v) {
        run.fail("length recurrence at n=" + std::to_string(n), v.str(),
                 table.z_length(n).str());
      }
    }
    for (int n = 0; n <= std::min<int>(m - 1, n_far) && !run.failed(); ++n) {
      BigInt sum = 0;
      for (int j = 0; j < n; ++j) sum += table.z_length(j);
      if (table.z_length(n) < sum) {
        run.fail("length comparison (sum bound) at n=" + std::to_string(n),
                 ">= " + sum.str(), table.z_length(n).str());
      }
    }
    for (int n = 1; n <= n_far && !run.failed(); ++n) {
      const BigInt two = table.z_length(n - 1) + table.z_length(n - 2);
      if (table.z_length(n) < two) {
        run.fail("length comparison (two-term bound) at n=" + std::to_string(n),
                 ">= " + two.str(), table.z_length(n).str());
      }
    }
    for (int n = 1; n < n_far && !run.failed(); ++n) {
      if (!(table.z_length(n + 1) > table.z_length(n))) {
        run.fail("length comparison (strict growth) at n=" + std::to_string(n),
                 "> " + table.z_length(n).str(), table.z_length(n + 1).str());
      }
    }
    return run.take();
  }

  /// Structural claims checked by full scans: non-containment, empty
  /// suffix/prefix overlaps, the exactly-two-occurrences picture inside the g
  /// prefixes, non-extendable symmetric blocks, palindrome preimages, and the
  /// palindromic-prefix sets of the singular words themselves.
  CheckReport check_structure(Letter m, int n_max) {
    detail::CheckBuilder run("check_structure");
    run.param("m", static_cast<long long>(m));
    run.param("n_max", static_cast<long long>(n_max));
    const int cap = constructible_cap(m, n_max, kWordLetterCap);
    run.param("n_constructed", static_cast<long long>(cap));
    std::vector<Word> zs;  // zs[i] = z_{i-1}
    for (int n = -1; n <= cap; ++n) zs.push_back(provider_->z(m, n));
    const auto z = [&zs](int n) -> const Word& {
      return zs[static_cast<std::size_t>(n + 1)];
    };
    std::vector<std::size_t> prefix_sum{0};  // prefix_sum[t+1] = |z_0| + .. + |z_t|
    for (int n = 0; n <= cap; ++n) prefix_sum.push_back(prefix_sum.back() + z(n).size());

    for (int n = 0; n < cap && !run.failed(); ++n) {
      const auto occ = detail::kmp_occurrences(z(n + 1), z(n));
      if (!occ.empty()) {
        run.fail("containment in successor at n=" + std::to_string(n),
                 "no occurrence of z_" + std::to_string(n) + " inside z_" +
                     std::to_string(n + 1),
                 "occurrence at position " + std::to_string(occ.front()));
      }
    }

    {
      Word prod = Word::empty_over(m);
      for (int n = 0; n <= cap && !run.failed(); ++n) {
        if (prod.size() > kScanLetterCap) break;
        const auto occ = detail::kmp_occurrences(prod, z(n));
        if (!occ.empty()) {
          run.fail("containment in preceding product at n=" + std::to_string(n),
                   "no occurrence of z_" + std::to_string(n) + " inside z_0 .. z_" +
                       std::to_string(n - 1),
                   "occurrence at position " + std::to_string(occ.front()));
        }
        prod += z(n);
      }
    }

    for (int n = 1; n <= std::min<int>(cap, static_cast<int>(m) - 1) && !run.failed();
         ++n) {
      for (int j = 0; j < n; ++j) {
        const auto& w = z(j).letters();
        const auto hit = std::find(w.begin(), w.end(), static_cast<Letter>(n));
        if (hit != w.end()) {
          run.fail("letter introduction at n=" + std::to_string(n),
                   "letter " + std::to_string(n) + " absent from z_" + std::to_string(j),
                   "present at position " + std::to_string(hit - w.begin()));
        }
      }
    }

    for (int n = 1; n <= cap && !run.failed(); ++n) {
      const std::size_t overlap = detail::suffix_prefix_overlap(z(n - 1), z(n));
      if (overlap != 0) {
        run.fail("suffix-prefix overlap at n=" + std::to_string(n), "empty overlap only",
                 "overlap of length " + std::to_string(overlap));
      }
    }

    {
      PSingularSeq seq(m);
      Word g = p_word(m, seq);
      int built = static_cast<int>(m) - 2;  // g is currently the block prefix g(built)
      for (int n = static_cast<int>(m) - 1; n < cap && !run.failed(); ++n) {
        while (built <= n) {
          g += q_block(m, built, seq);
          ++built;
        }
        if (g.size() > kScanLetterCap) break;
        const auto occ = detail::kmp_occurrences(g, z(n));
        const std::size_t first = prefix_sum[static_cast<std::size_t>(n)];
        const std::size_t second = prefix_sum[static_cast<std::size_t>(n + 2)];
        if (occ.size() != 2 || occ[0] != first || occ[1] != second) {
          std::string got;
          for (std::size_t p : occ) got += (got.empty() ? "" : ", ") + std::to_string(p);
          run.fail("occurrences of z_" + std::to_string(n) + " in the block prefix",
                   "exactly at " + std::to_string(first) + ", " + std::to_string(second),
                   got.empty() ? "none" : got);
        }
      }

      // No common prefix w of the two continuations turns Q(n+1) w into a
      // palindrome; depth-limited to |z_{n+1}| as in the two-occurrence proof.
      for (int n = static_cast<int>(m) - 2; n <= cap - 2 && !run.failed(); ++n) {
        const std::size_t depth = z(n + 1).size();
        if (depth > kScanLetterCap) break;
        Word a = z(n + 1 - static_cast<int>(m));
        for (int j = n + 1; a.size() < depth && j <= cap; ++j) a += q_block(m, j, seq);
        Word b = Word::empty_over(m);
        for (int j = n + 2; b.size() < depth && j <= cap; ++j) b += q_block(m, j, seq);
        const Word q1 = q_block(m, n + 1, seq);
        std::size_t lcp = std::min({depth, a.size(), b.size()});
        if (const auto bad = detail::first_mismatch(a, b, lcp)) lcp = *bad;
        for (std::size_t len = 1; len <= lcp && !run.failed(); ++len) {
          const std::size_t total = q1.size() + len;
          const auto at = [&](std::size_t i) {
            return i < q1.size() ? q1[i] : a[i - q1.size()];
          };
          bool pal = true;
          for (std::size_t i = 0; i < total / 2; ++i) {
            if (at(i) != at(total - 1 - i)) {
              pal = false;
              break;
            }
          }
          if (pal) {
            run.fail("palindromic extension at n=" + std::to_string(n),
                     "no palindrome among the extended blocks",
                     "palindrome of length " + std::to_string(total));
          }
        }
      }
    }

    {
      const std::size_t window = kPreimageWindow;
      run.param("preimage_window", static_cast<long long>(window));
      const Word wpref = FamilyHandle::mbonacci(m).prefix(window);
      const OccurrenceIndex idx = build_index(wpref);
      for (const Word& p : idx.palindrome_inventory()) {
        if (run.failed()) break;
        const auto pre = detail::palindrome_preimage(p, m);
        if (!pre) {
          run.fail("palindrome preimage of " + detail::describe(p),
                   "decodable through the morphism", "no decoding");
          break;
        }
        if (!is_palindrome(*pre)) {
          run.fail("palindrome preimage of " + detail::describe(p), "a palindrome",
                   detail::describe(*pre));
          break;
        }
        if (!pre->empty() && !detail::contains_factor(wpref, *pre)) {
          run.fail("palindrome preimage of " + detail::describe(p),
                   "a factor of the window", detail::describe(*pre));
          break;
        }
      }
    }

    for (int n = 0; n <= cap && !run.failed(); ++n) {
      std::vector<std::size_t> expected_lengths;
      for (int j = n % 2; j <= n; j += 2) {
        if (!(z(n).prefix(z(j).size()) == z(j))) {
          run.fail("palindromic prefix set of z_" + std::to_string(n),
                   "z_" + std::to_string(j) + " as a prefix",
                   detail::describe(z(n).prefix(z(j).size())));
        }
        expected_lengths.push_back(z(j).size());
      }
      if (run.failed()) break;
      const auto got = build_index(z(n)).palindromic_prefix_lengths(0);
      if (got != expected_lengths) {
        const auto join = [](const std::vector<std::size_t>& v) {
          std::string s;
          for (std::size_t x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
          return s.empty() ? "none" : s;
        };
        run.fail("palindromic prefix set of z_" + std::to_string(n),
                 "lengths " + join(expected_lengths), "lengths " + join(got));
      }
    }

    return run.take();
  }

  /// The three global product displays are prefixes of the morphism fixed
  /// point: the singular product, the seed-and-blocks product, and every g
  /// prefix inside the window.
  CheckReport check_global_factorizations(Letter m, std::size_t window) {
    detail::CheckBuilder run("check_global_factorizations");
    run.param("m", static_cast<long long>(m));
    run.param("window", static_cast<long long>(window));
    const Word w = FamilyHandle::mbonacci(m).prefix(window);

    Word cum = Word::empty_over(m);
    for (int n = 0; cum.size() < window; ++n) cum += provider_->z(m, n);
    if (const auto bad = detail::first_mismatch(cum, w, window)) {
      run.fail("singular product at position " + std::to_string(*bad),
               "letter " + std::to_string(w[*bad]), "letter " + std::to_string(cum[*bad]));
    }

    PSingularSeq seq(m);
    Word g = p_word(m, seq);
    int j = static_cast<int>(m) - 2;
    while (!run.failed()) {
      if (const auto bad = detail::first_mismatch(g, w, window)) {
        run.fail("block prefix g(" + std::to_string(j) + ") at position " +
                     std::to_string(*bad),
                 "letter " + std::to_string(w[*bad]), "letter " + std::to_string(g[*bad]));
        break;
      }
      if (g.size() >= window) break;
      g += q_block(m, j, seq);
      ++j;
    }
    return run.take();
  }

  /// The symmetric products z_0 .. z_{n-1} z_n z_{n-1} .. z_0 are palindromic
  /// prefixes of the m-bonacci word, strictly growing in length.
  CheckReport check_pal_prefix_identity(Letter m, int n_max) {
    detail::CheckBuilder run("check_pal_prefix_identity");
    run.param("m", static_cast<long long>(m));
    run.param("n_max", static_cast<long long>(n_max));
    LengthTable table(m);
    int cap = -1;
    for (int n = 0; n <= n_max; ++n) {
      BigInt total = table.z_length(n);
      for (int j = 0; j < n; ++j) total += 2 * table.z_length(j);
      if (total > kScanLetterCap) break;
      cap = n;
    }
    run.param("n_constructed", static_cast<long long>(cap));
    if (cap < 0) return run.take();
    std::vector<Word> us;
    for (int n = 0; n <= cap; ++n) {
      Word u = Word::empty_over(m);
      for (int j = 0; j < n; ++j) u += provider_->z(m, j);
      u += provider_->z(m, n);
      for (int j = n - 1; j >= 0; --j) u += provider_->z(m, j);
      us.push_back(std::move(u));
    }
    const Word w = FamilyHandle::mbonacci(m).prefix(us.back().size());
    std::size_t prev = 0;
    for (int n = 0; n <= cap && !run.failed(); ++n) {
      const Word& u = us[static_cast<std::size_t>(n)];
      if (!is_palindrome(u)) {
        run.fail("symmetric product at n=" + std::to_string(n), "a palindrome",
                 detail::describe(u));
      } else if (!(u == w.prefix(u.size()))) {
        run.fail("symmetric product at n=" + std::to_string(n), "a prefix of the word",
                 detail::describe(u));
      } else if (u.size() <= prev) {
        run.fail("symmetric product at n=" + std::to_string(n),
                 "length > " + std::to_string(prev), std::to_string(u.size()));
      }
      prev = u.size();
    }
    return run.take();
  }

  /// Z and PZ factor lists over one window; pass means equal so far. The first
  /// divergence index is the counterexample (family membership probe).
  CheckReport check_family_membership(const FamilyHandle& family, std::size_t window) {
    detail::CheckBuilder run("check_family_membership");
    run.param("family", family.name());
    run.param("window", static_cast<long long>(window));
    const Word w = family.prefix(window);
    const OccurrenceIndex idx = build_index(w);
    const Factorization fz = factorize_indexed(idx, FactorizationMode::Z);
    const Factorization fpz = factorize_indexed(idx, FactorizationMode::PZ);
    const std::size_t common = std::min(fz.factors.size(), fpz.factors.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (!(fz.factors[i] == fpz.factors[i])) {
        run.fail("factor index " + std::to_string(i),
                 detail::describe(w.subword(fz.factors[i].start, fz.factors[i].len)),
                 detail::describe(w.subword(fpz.factors[i].start, fpz.factors[i].len)));
        break;
      }
    }
    return run.take();
  }

  /// Every check over m in [2, m_max], fixed order, exceptions turned into
  /// failed reports. `only` restricts to one check name; empty means all.
  std::vector<CheckReport> run_matching(Letter m_max, int depth, std::size_t window,
                                        std::string_view only) {
    std::vector<std::pair<std::string, std::function<CheckReport()>>> plan;
    plan.emplace_back("check_z_fib", [this, depth] { return check_z_fib(depth); });
    plan.emplace_back("check_pz_fib", [this, depth] { return check_pz_fib(depth); });
    plan.emplace_back("check_pc_fib", [this, depth] { return check_pc_fib(depth); });
    for (Letter m = 2; m <= m_max; ++m) {
      plan.emplace_back("check_pz_mbonacci",
                        [this, m, depth] { return check_pz_mbonacci(m, depth); });
      plan.emplace_back("check_pc_mbonacci",
                        [this, m, depth] { return check_pc_mbonacci(m, depth); });
      plan.emplace_back("check_singular_identities",
                        [this, m, depth] { return check_singular_identities(m, depth); });
      plan.emplace_back("check_lengths", [this, m, depth] { return check_lengths(m, depth); });
      plan.emplace_back("check_structure",
                        [this, m, depth] { return check_structure(m, depth); });
      plan.emplace_back("check_global_factorizations", [this, m, window] {
        return check_global_factorizations(m, window);
      });
      plan.emplace_back("check_pal_prefix_identity", [this, m, depth] {
        return check_pal_prefix_identity(m, depth);
      });
    }
    plan.emplace_back("check_family_membership", [this, window] {
      return check_family_membership(FamilyHandle::fibonacci(), window);
    });
    plan.emplace_back("check_family_membership", [this, window] {
      return check_family_membership(FamilyHandle::blocks(), window);
    });

    std::vector<CheckReport> out;
    for (const auto& [name, fn] : plan) {
      if (!only.empty() && name != only) continue;
      out.push_back(guarded(name, fn));
    }
    return out;
  }

  std::vector<CheckReport> run_all(Letter m_max, int depth, std::size_t window) {
    return run_matching(m_max, depth, window, {});
  }

  static const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "check_z_fib",           "check_pz_fib",
        "check_pc_fib",          "check_pz_mbonacci",
        "check_pc_mbonacci",     "check_singular_identities",
        "check_lengths",         "check_structure",
        "check_global_factorizations", "check_pal_prefix_identity",
        "check_family_membership"};
    return names;
  }

 private:
  static constexpr std::size_t kWordLetterCap = 200000;
  static constexpr std::size_t kScanLetterCap = 600000;
  static constexpr std::size_t kPreimageWindow = 1200;

  static void require_count(int k) {
    if (k < 1) throw std::invalid_argument("factor count must be at least 1");
  }

  static CheckReport guarded(const std::string& name,
                             const std::function<CheckReport()>& fn) {
    try {
      return fn();
    } catch (const std::exception& e) {
      CheckReport r;
      r.name = name;
      r.pass = false;
      r.counterexample = Counterexample{"exception", "check runs to completion", e.what()};
      return r;
    }
  }

  /// Largest n <= n_max whose singular word stays within `letters`.
  static int constructible_cap(Letter m, int n_max, std::size_t letters) {
    LengthTable table(m);
    int cap = -1;
    for (int n = 0; n <= n_max && table.z_length(n) <= letters; ++n) cap = n;
    return cap;
  }

  std::vector<Word> fib_singular_list(int k) {
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) out.push_back(provider_->z(2, i - 1));
    return out;
  }

  /// Q(n) = z_{n-m+1} .. z_{n-1} z_n z_{n-1} .. z_{n-m+1}, built from the
  /// provider so corrupted fixtures propagate.
  Word symmetric_block(Letter m, int n) {
    Word w = Word::empty_over(m);
    for (int i = n - static_cast<int>(m) + 1; i <= n; ++i) w += provider_->z(m, i);
    for (int i = n - 1; i >= n - static_cast<int>(m) + 1; --i) w += provider_->z(m, i);
    return w;
  }

  /// Certifies the factorization over the exact window the expected factors
  /// tile, then demands the engine reproduce them with nothing left over.
  void expect_theorem_list(detail::CheckBuilder& run, const FamilyHandle& family,
                           FactorizationMode mode, const std::vector<Word>& expected) {
    std::size_t total = 0;
    for (const Word& w : expected) total += w.size();
    run.param("window", static_cast<long long>(total));
    const Factorization got = certify_by_agreement(family, mode, total);
    const Word w = family.prefix(total);
    if (got.factors.size() != expected.size()) {
      run.fail("certified factor count", std::to_string(expected.size()),
               std::to_string(got.factors.size()));
      return;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const Word actual = w.subword(got.factors[i].start, got.factors[i].len);
      if (!(actual == expected[i])) {
        run.fail("factor index " + std::to_string(i), detail::describe(expected[i]),
                 detail::describe(actual));
        return;
      }
      if (got.factors[i].finality != Finality::Certified) {
        run.fail("factor index " + std::to_string(i), "a certified factor",
                 "window-local finality");
        return;
      }
    }
    if (got.has_residue()) {
      run.fail("residue", "none", "residue at " + std::to_string(*got.residue_start));
    }
  }

  std::shared_ptr<SingularProvider> provider_;
};

}  // namespace palfac
