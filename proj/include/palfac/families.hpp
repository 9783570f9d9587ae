#pragma once
/**
 * @file families.hpp
 * @brief Infinite-word generators: the sources the factorizers run on.
 *
 * A FamilyHandle produces prefixes of one fixed infinite word; prefix(n) is a
 * prefix of prefix(n') whenever n <= n'. Kinds:
 *   - fibonacci        fixed point of 0 -> 01, 1 -> 0  (= mbonacci with m = 2)
 *   - mbonacci(m)      fixed point of the m-bonacci morphism
 *   - thue-morse       fixed point of 0 -> 01, 1 -> 10
 *   - custom morphism  fixed point of a user morphism from a prolongable letter
 *   - blocks           the staircase 0 1 00 11 000 111 ... (block k = 0^k 1^k)
 */

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "palfac/budget.hpp"
#include "palfac/errors.hpp"
#include "palfac/morphism.hpp"
#include "palfac/singular.hpp"
#include "palfac/word.hpp"

namespace palfac {

enum class FamilyKind { Fibonacci, MBonacci, ThueMorse, CustomMorphism, ExplicitBlocks };

class FamilyHandle {
 public:
  static FamilyHandle fibonacci() {
    return FamilyHandle(FamilyKind::Fibonacci, 2, phi_m(2), 0, "fibonacci");
  }

  static FamilyHandle mbonacci(Letter m) {
    return FamilyHandle(FamilyKind::MBonacci, m, phi_m(m), 0, "mbonacci(" + std::to_string(m) + ")");
  }

  static FamilyHandle thue_morse() {
    Morphism tau(std::vector<Word>{Word({0, 1}, 2), Word({1, 0}, 2)});
    return FamilyHandle(FamilyKind::ThueMorse, 2, std::move(tau), 0, "thue-morse");
  }

  static FamilyHandle custom(Morphism sigma, Letter start) {
    if (!sigma.is_prolongable(start)) {
      throw NotProlongable("family needs a prolongable start letter");
    }
    Letter alpha = std::max(sigma.domain_size(), sigma.codomain_size());
    return FamilyHandle(FamilyKind::CustomMorphism, alpha, std::move(sigma), start, "morphism");
  }

  static FamilyHandle blocks() {
    return FamilyHandle(FamilyKind::ExplicitBlocks, 2, std::nullopt, 0, "blocks");
  }

  FamilyKind kind() const { return kind_; }
  Letter alphabet_size() const { return alphabet_; }
  const std::string& name() const { return name_; }

  Word prefix(std::size_t n) const {
    if (n * sizeof(Letter) > construction_budget_bytes()) {
      throw BudgetExceeded("prefix of " + std::to_string(n) +
                           " letters exceeds the construction budget");
    }
    if (kind_ == FamilyKind::ExplicitBlocks) {
      Word w = Word::empty_over(2);
      w.reserve(n);
      for (std::size_t k = 1; w.size() < n; ++k) {
        for (std::size_t i = 0; i < k && w.size() < n; ++i) w.push_back(0);
        for (std::size_t i = 0; i < k && w.size() < n; ++i) w.push_back(1);
      }
      return w;
    }
    if (n == 0) return Word::empty_over(alphabet_);
    return sigma_->fixed_point_prefix(start_, n);
  }

 private:
  FamilyHandle(FamilyKind kind, Letter alphabet, std::optional<Morphism> sigma, Letter start,
               std::string name)
      : kind_(kind), alphabet_(alphabet), sigma_(std::move(sigma)), start_(start),
        name_(std::move(name)) {}

  FamilyKind kind_;
  Letter alphabet_;
  std::optional<Morphism> sigma_;
  Letter start_;
  std::string name_;
};

}  // namespace palfac
