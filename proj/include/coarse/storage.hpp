#pragma once

#include "coarse/cost.hpp"
#include "coarse/efficiency.hpp"
#include "coarse/exec.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace coarse {

/// Storing an integer in 1..n with `digits` base-k digits at cost kappa(k) * digits.
struct StoragePlan {
  std::uint64_t n = 1;
  std::size_t k = 2;
  std::size_t digits = 0;
  Cost cost;
};

/// Smallest N with k^N >= n, by exact integer multiplication.
std::size_t digitCount(std::uint64_t n, std::size_t k);

StoragePlan storageCost(std::uint64_t n, std::size_t k, const CostModel& kappa);

struct OptimalBases {
  std::vector<std::size_t> bases;  // ascending, all tied at the minimum
  Cost cost;
};

OptimalBases optimalBases(std::uint64_t n, const CostModel& kappa, std::size_t kMax);

struct StorageWitness {
  std::uint64_t n = 0;
  std::size_t k = 0;
  Cost baseCost;
  Cost binaryCost;
  bool tie = false;  // base k matches binary instead of beating it
};

struct BinaryOptimalityReport {
  /// Base 2 strictly beats every base in 3..kMax for every n in 2..nMax.
  bool binaryOptimal = true;
  std::optional<StorageWitness> witness;
  /// binaryCondition(kappa, kMax).holds and its first failing e.
  bool conditionHolds = true;
  std::optional<std::size_t> conditionFailure;
  bool agree = true;
};

BinaryOptimalityReport binaryAlwaysOptimal(const CostModel& kappa, std::size_t kMax,
                                           std::uint64_t nMax, Exec exec = Exec::parallel);

struct SweepRow {
  std::uint64_t n = 0;
  std::vector<std::size_t> bases;
  Cost cost;
};

/// Optimal bases for every n in 1..nMax.
std::vector<SweepRow> radixSweep(const CostModel& kappa, std::size_t kMax, std::uint64_t nMax,
                                 Exec exec = Exec::parallel);

/// value - 1 in base k, big-endian, zero padded to plan.digits.
std::vector<std::size_t> encode(std::uint64_t value, const StoragePlan& plan);
std::uint64_t decode(const std::vector<std::size_t>& digits, const StoragePlan& plan);

}  // namespace coarse
