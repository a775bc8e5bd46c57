#pragma once

// Sweeps over the nonempty subsets of a domain of at most 20 alternatives,
// encoded as bitmasks. Each sweep has an OpenMP kernel and a serial reference
// loop; both visit the same masks and return identical results.

#include "coarse/exec.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace coarse {

using Subset = std::uint32_t;

inline constexpr std::size_t kMaxSubsetDomain = 20;

inline Subset singleton(std::size_t x) { return Subset{1} << x; }
inline bool contains(Subset s, std::size_t x) { return (s >> x & 1U) != 0; }

/// Smallest nonempty mask over n elements for which pred(mask) is false.
template <class Pred>
std::optional<Subset> firstFailingSubset(std::size_t n, Pred pred, Exec exec) {
  const std::int64_t total = std::int64_t{1} << n;
  std::int64_t first = total;
  if (exec == Exec::parallel) {
#pragma omp parallel for reduction(min : first) schedule(static)
    for (std::int64_t m = 1; m < total; ++m) {
      if (m < first && !pred(static_cast<Subset>(m))) first = m;
    }
  } else {
    for (std::int64_t m = 1; m < total; ++m) {
      if (!pred(static_cast<Subset>(m))) {
        first = m;
        break;
      }
    }
  }
  if (first == total) return std::nullopt;
  return static_cast<Subset>(first);
}

/// table[mask] = fn(mask) for every nonempty mask; table[0] = 0.
template <class Fn>
std::vector<Subset> tabulateSubsets(std::size_t n, Fn fn, Exec exec) {
  const std::int64_t total = std::int64_t{1} << n;
  std::vector<Subset> table(static_cast<std::size_t>(total), 0);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t m = 1; m < total; ++m) table[m] = fn(static_cast<Subset>(m));
  } else {
    for (std::int64_t m = 1; m < total; ++m) table[m] = fn(static_cast<Subset>(m));
  }
  return table;
}

}  // namespace coarse
