#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "orthokit/error.hpp"
#include "orthokit/lattice.hpp"

namespace orthokit {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Limits and parallelism for exhaustive assignment searches.
struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
  /// Searches smaller than this stay on the calling thread.
  std::uint64_t parallel_threshold = 1u << 14;
};

/// universe^arity, or throws `BudgetExceeded` if it is above `budget`.
inline std::uint64_t assignment_count(std::size_t universe, std::size_t arity, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (universe != 0 && total > budget / universe) throw BudgetExceeded(universe, arity, budget);
    total *= universe;
  }
  if (total > budget) throw BudgetExceeded(universe, arity, budget);
  return total;
}

namespace detail {

// Scans assignments whose first coordinate lies in [first_lo, first_hi), in
// lexicographic order, and returns the first one accepted by `hit`.
template <typename Pred>
std::optional<std::vector<Element>> scan_block(std::size_t universe, std::size_t arity, std::size_t first_lo,
                                               std::size_t first_hi, Pred& hit) {
  std::vector<Element> values(arity);
  if (arity == 0) {
    if (first_lo == 0 && hit(std::span<const Element>(values))) return values;
    return std::nullopt;
  }
  for (std::size_t first = first_lo; first < first_hi; ++first) {
    std::fill(values.begin(), values.end(), Element(0));
    values[0] = Element(static_cast<std::uint16_t>(first));
    while (true) {
      if (hit(std::span<const Element>(values))) return values;
      std::size_t pos = arity - 1;
      for (; pos >= 1; --pos) {
        const auto next = static_cast<std::size_t>(values[pos].id()) + 1;
        if (next < universe) {
          values[pos] = Element(static_cast<std::uint16_t>(next));
          break;
        }
        values[pos] = Element(0);
      }
      if (pos == 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Lexicographically first assignment of `arity` elements from
/// {0..universe-1} for which `hit` returns true.
///
/// With `workers > 1` the range of the first coordinate is split into
/// contiguous blocks and the least hit over all blocks is returned, so the
/// answer does not depend on the worker count. `hit` must be safe to call
/// concurrently; each worker gets its own copy.
template <typename Pred>
std::optional<std::vector<Element>> find_first_assignment(std::size_t universe, std::size_t arity,
                                                          const SearchOptions& options, Pred hit) {
  const auto total = assignment_count(universe, arity, options.budget);
  if (total == 0) return std::nullopt;
  const std::size_t workers = arity == 0 || total < options.parallel_threshold
                                  ? 1
                                  : std::clamp<std::size_t>(options.workers, 1, universe);
  if (workers == 1) return detail::scan_block(universe, arity, 0, arity == 0 ? 1 : universe, hit);

  std::vector<std::optional<std::vector<Element>>> results(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = universe * w / workers;
      const std::size_t hi = universe * (w + 1) / workers;
      threads.emplace_back([&, lo, hi, w, local = hit]() mutable {
        results[w] = detail::scan_block(universe, arity, lo, hi, local);
      });
    }
  }
  for (auto& r : results)
    if (r) return std::move(r);
  return std::nullopt;
}

}  // namespace orthokit
