#pragma once
/**
 * @file errors.hpp
 * @brief Exception types thrown across the library.
 *
 * Every failure the library signals deliberately derives from palfac::Error,
 * so callers can catch one base type. Precondition violations that indicate a
 * caller bug (bad letter values, out-of-range slices) throw std::invalid_argument
 * or std::out_of_range instead.
 */

#include <stdexcept>
#include <string>

namespace palfac {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// strip_prefix: the given word is not a prefix.
struct NotAPrefix : Error {
  using Error::Error;
};

/// strip_suffix: the given word is not a suffix.
struct NotASuffix : Error {
  using Error::Error;
};

/// flip_last on the empty word.
struct EmptyWord : Error {
  using Error::Error;
};

/// flip_last needs a two-letter alphabet.
struct NonBinaryAlphabet : Error {
  using Error::Error;
};

/// fixed_point_prefix: the morphism is not prolongable on the start letter.
struct NotProlongable : Error {
  using Error::Error;
};

/// is_code rejects sets containing the empty word.
struct EmptyWordInSet : Error {
  using Error::Error;
};

/// is_code desk-scale caps exceeded.
struct CapExceeded : Error {
  using Error::Error;
};

/// Family / morphism constructions need m >= 2.
struct InvalidM : Error {
  using Error::Error;
};

/// Word construction would exceed the byte budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// Closed-form quotient failed to divide (would indicate a construction bug).
struct StripMismatch : Error {
  using Error::Error;
};

/// Indexed family accessed below its first defined index.
struct IndexBelowRange : Error {
  using Error::Error;
};

/// Factorization of the empty word.
struct EmptyInput : Error {
  using Error::Error;
};

/// Window-agreement certification could not generate its inputs.
struct GenerationFailed : Error {
  using Error::Error;
};

}  // namespace palfac
