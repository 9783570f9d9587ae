#pragma once
/**
 * @file budget.hpp
 * @brief Process-wide construction byte budget.
 *
 * Word construction that can grow exponentially (singular-word caches, family
 * prefixes) checks this budget and throws BudgetExceeded instead of eating all
 * memory. Default 256 MiB; the CLI overrides it from PALFAC_BUDGET_MB.
 */

#include <atomic>
#include <cstddef>

namespace palfac {

inline constexpr std::size_t kDefaultBudgetBytes = std::size_t{256} << 20;

inline std::atomic<std::size_t>& budget_cell() {
  static std::atomic<std::size_t> bytes{kDefaultBudgetBytes};
  return bytes;
}

inline std::size_t construction_budget_bytes() { return budget_cell().load(); }

inline void set_construction_budget_bytes(std::size_t bytes) { budget_cell().store(bytes); }

}  // namespace palfac
