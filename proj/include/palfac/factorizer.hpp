#pragma once
/**
 * @file factorizer.hpp
 * @brief The four factorization engines over finite words.
 *
 * Each mode walks a cursor s from the left and cuts one factor per step:
 *
 *   Z  : shortest prefix of w[s..) with no occurrence starting at j < s;
 *        when every prefix of the remainder occurs earlier, the remainder
 *        becomes the residue and the run records where it stalled.
 *   C  : longest prefix of w[s..) with an occurrence starting at j < s
 *        (the occurrence may overlap the factor window); single-letter
 *        fallback when even w[s] is new.
 *   PZ : like Z restricted to palindromic prefixes; stall -> residue.
 *   PC : like C restricted to palindromic prefixes; fallback single letter.
 *
 * The shortest/longest rules have unique answers, so no tie-breaking is ever
 * needed. Every mode reduces to one quantity: the length of the longest
 * prefix of w[s..) that already starts before s. Writing L for it,
 * Z cuts L+1 when that fits, C cuts max(L,1), PZ cuts the smallest
 * palindromic prefix length above L, PC the largest at most L.
 *
 * Finality of a cut: Z/PZ factors are always certified, because both the
 * rejections (an occurrence exists) and the acceptance (no occurrence of the
 * exact length, which would end inside the window) are witnessed entirely
 * in-window. A C factor is certified iff it stops short of the window end,
 * so that the one-letter extension was refuted in-window. PC factors are
 * never certified from a single window: the longest-palindromic rule is not
 * monotone under extension; certify_by_agreement upgrades them instead.
 *
 * Inputs that happen to be ultimately periodic are factorized verbatim;
 * nothing here tries to detect periodicity.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "palfac/errors.hpp"
#include "palfac/families.hpp"
#include "palfac/occurrence_index.hpp"
#include "palfac/word.hpp"

namespace palfac {

enum class FactorizationMode { Z, C, PZ, PC };

constexpr const char* mode_name(FactorizationMode mode) {
  switch (mode) {
    case FactorizationMode::Z: return "z";
    case FactorizationMode::C: return "c";
    case FactorizationMode::PZ: return "pz";
    case FactorizationMode::PC: return "pc";
  }
  return "?";
}

inline std::optional<FactorizationMode> parse_mode(std::string_view name) {
  if (name == "z") return FactorizationMode::Z;
  if (name == "c") return FactorizationMode::C;
  if (name == "pz") return FactorizationMode::PZ;
  if (name == "pc") return FactorizationMode::PC;
  return std::nullopt;
}

constexpr std::array<FactorizationMode, 4> kAllModes = {
    FactorizationMode::Z, FactorizationMode::C, FactorizationMode::PZ, FactorizationMode::PC};

enum class Finality { Certified, WindowLocal };

struct Factor {
  std::size_t start;
  std::size_t len;
  Finality finality;

  bool operator==(const Factor&) const = default;
};

struct Factorization {
  FactorizationMode mode;
  std::size_t source_length;
  std::vector<Factor> factors;
  /** Start of the unfactored tail (stall or truncation); none when factors tile everything. */
  std::optional<std::size_t> residue_start;
  /** Cursor where a novelty mode ran out of candidates; always equals residue_start when set. */
  std::optional<std::size_t> stalled_at;

  bool operator==(const Factorization&) const = default;

  bool has_residue() const { return residue_start.has_value(); }
  std::size_t factored_end() const { return residue_start.value_or(source_length); }
};

namespace detail {

inline Finality finality_for(FactorizationMode mode, std::size_t start, std::size_t len,
                             std::size_t n) {
  switch (mode) {
    case FactorizationMode::Z:
    case FactorizationMode::PZ: return Finality::Certified;
    case FactorizationMode::C:
      return start + len < n ? Finality::Certified : Finality::WindowLocal;
    case FactorizationMode::PC: return Finality::WindowLocal;
  }
  return Finality::WindowLocal;
}

}  // namespace detail

/** Reference engine: definition-level scans, quadratic but obviously right. */
inline Factorization factorize_naive(const Word& w, FactorizationMode mode) {
  if (w.size() == 0) throw EmptyInput("cannot factorize an empty word");
  const std::size_t n = w.size();
  Factorization out{mode, n, {}, std::nullopt, std::nullopt};
  std::size_t s = 0;
  while (s < n) {
    std::size_t len = 0;
    switch (mode) {
      case FactorizationMode::Z:
        for (std::size_t l = 1; s + l <= n; ++l) {
          if (!earliest_occurrence_before(w, s, l)) {
            len = l;
            break;
          }
        }
        break;
      case FactorizationMode::C: {
        std::size_t best = 0;
        for (std::size_t l = 1; s + l <= n; ++l) {
          // An occurrence of the longer prefix is one of the shorter at the
          // same start, so the first failing length ends the scan.
          if (!earliest_occurrence_before(w, s, l)) break;
          best = l;
        }
        len = std::max<std::size_t>(best, 1);
        break;
      }
      case FactorizationMode::PZ:
        for (std::size_t l = 1; s + l <= n; ++l) {
          if (is_palindrome(w, s, l) && !earliest_occurrence_before(w, s, l)) {
            len = l;
            break;
          }
        }
        break;
      case FactorizationMode::PC: {
        std::size_t best = 0;
        for (std::size_t l = 1; s + l <= n; ++l) {
          if (is_palindrome(w, s, l) && earliest_occurrence_before(w, s, l)) best = l;
        }
        len = std::max<std::size_t>(best, 1);
        break;
      }
    }
    if (len == 0) {
      out.stalled_at = s;
      out.residue_start = s;
      break;
    }
    out.factors.push_back(Factor{s, len, detail::finality_for(mode, s, len, n)});
    s += len;
  }
  return out;
}

/** Indexed engine over a prebuilt index; bit-identical to factorize_naive. */
inline Factorization factorize_indexed(const OccurrenceIndex& idx, FactorizationMode mode) {
  const Word& w = idx.word();
  if (w.size() == 0) throw EmptyInput("cannot factorize an empty word");
  const std::size_t n = w.size();
  Factorization out{mode, n, {}, std::nullopt, std::nullopt};
  std::size_t s = 0;
  while (s < n) {
    const std::size_t lpf = idx.longest_previous_factor(s);
    std::size_t len = 0;
    switch (mode) {
      case FactorizationMode::Z:
        if (lpf < n - s) len = lpf + 1;
        break;
      case FactorizationMode::C:
        len = std::max<std::size_t>(lpf, 1);
        break;
      case FactorizationMode::PZ:
        len = idx.shortest_palindromic_prefix_above(s, lpf);
        break;
      case FactorizationMode::PC:
        len = idx.longest_palindromic_prefix_at_most(s, lpf);
        if (len == 0) len = 1;
        break;
    }
    if (len == 0) {
      out.stalled_at = s;
      out.residue_start = s;
      break;
    }
    out.factors.push_back(Factor{s, len, detail::finality_for(mode, s, len, n)});
    s += len;
  }
  return out;
}

inline Factorization factorize_indexed(const Word& w, FactorizationMode mode) {
  if (w.size() == 0) throw EmptyInput("cannot factorize an empty word");
  return factorize_indexed(OccurrenceIndex(w), mode);
}

/**
 * Window-agreement finality certificate for a family prefix: factorize the
 * n-window and the 2n-window and keep the longest common initial factor run,
 * all marked certified; whatever the windows disagree on past that run is
 * reported as a truncation residue of the n-window. A heuristic certificate
 * for arbitrary aperiodic sources; no aperiodicity check is attempted, the
 * caller owns that assumption.
 */
inline Factorization certify_by_agreement(const FamilyHandle& family, FactorizationMode mode,
                                          std::size_t n) {
  if (n == 0) throw EmptyInput("certification window must be nonempty");
  const Word wide_word = family.prefix(2 * n);
  const Word base_word = wide_word.prefix(n);
  const Factorization base = factorize_indexed(base_word, mode);
  const Factorization wide = factorize_indexed(wide_word, mode);
  Factorization out{mode, n, {}, std::nullopt, std::nullopt};
  std::size_t agreed_end = 0;
  const std::size_t shared = std::min(base.factors.size(), wide.factors.size());
  for (std::size_t i = 0; i < shared; ++i) {
    const Factor& a = base.factors[i];
    const Factor& b = wide.factors[i];
    if (a.start != b.start || a.len != b.len) break;
    out.factors.push_back(Factor{a.start, a.len, Finality::Certified});
    agreed_end = a.start + a.len;
  }
  if (agreed_end < n) {
    out.residue_start = agreed_end;
    if (base.stalled_at && *base.stalled_at == agreed_end) out.stalled_at = base.stalled_at;
  }
  return out;
}

}  // namespace palfac
