#include "coarse/storage.hpp"

#include "coarse/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

namespace coarse {

std::size_t digitCount(std::uint64_t n, std::size_t k) {
  if (n < 1) throw InputError("storage range n must be at least 1");
  if (k < 2) throw InputError("digit base must be at least 2");
  std::size_t digits = 0;
  std::uint64_t reach = 1;
  while (reach < n) {
    reach = reach > std::numeric_limits<std::uint64_t>::max() / k
                ? std::numeric_limits<std::uint64_t>::max()
                : reach * k;
    ++digits;
  }
  return digits;
}

StoragePlan storageCost(std::uint64_t n, std::size_t k, const CostModel& kappa) {
  StoragePlan plan;
  plan.n = n;
  plan.k = k;
  plan.digits = digitCount(n, k);
  plan.cost = kappa(k) * Cost(static_cast<long long>(plan.digits));
  return plan;
}

OptimalBases optimalBases(std::uint64_t n, const CostModel& kappa, std::size_t kMax) {
  if (kMax < 2) throw InputError("kMax must be at least 2");
  OptimalBases best;
  for (std::size_t k = 2; k <= kMax; ++k) {
    const StoragePlan plan = storageCost(n, k, kappa);
    const auto cmp = best.bases.empty() ? std::strong_ordering::less : compare(plan.cost, best.cost);
    if (cmp < 0) {
      best.bases = {k};
      best.cost = plan.cost;
    } else if (cmp == 0) {
      best.bases.push_back(k);
    }
  }
  return best;
}

namespace {

// Costs kappa(k) * N for every base and digit count the sweep can meet,
// replaced by integer ranks so the inner loop compares machine integers.
class RankedCosts {
 public:
  RankedCosts(const CostModel& kappa, std::size_t kMax, std::uint64_t nMax)
      : kMax_(kMax), maxDigits_(digitCount(std::max<std::uint64_t>(nMax, 1), 2)) {
    costs_.assign((kMax + 1) * (maxDigits_ + 1), Cost(0LL));
    reach_.assign((kMax + 1) * (maxDigits_ + 1), 0);
    for (std::size_t k = 2; k <= kMax; ++k) {
      const Cost unit = kappa(k);
      std::uint64_t reach = 1;
      for (std::size_t d = 0; d <= maxDigits_; ++d) {
        costs_[slot(k, d)] = unit * Cost(static_cast<long long>(d));
        reach_[slot(k, d)] = reach;
        reach = reach > std::numeric_limits<std::uint64_t>::max() / k
                    ? std::numeric_limits<std::uint64_t>::max()
                    : reach * k;
      }
    }
    std::vector<std::size_t> order;
    for (std::size_t k = 2; k <= kMax; ++k) {
      for (std::size_t d = 0; d <= maxDigits_; ++d) order.push_back(slot(k, d));
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return compare(costs_[a], costs_[b]) < 0; });
    rank_.assign(costs_.size(), 0);
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && compare(costs_[order[i]], costs_[order[i - 1]]) != 0) ++r;
      rank_[order[i]] = r;
    }
  }

  // Digits needed for n in base k (n <= nMax).
  std::size_t digits(std::uint64_t n, std::size_t k) const {
    std::size_t d = 0;
    while (reach_[slot(k, d)] < n) ++d;
    return d;
  }

  std::uint32_t rank(std::uint64_t n, std::size_t k) const { return rank_[slot(k, digits(n, k))]; }
  const Cost& cost(std::uint64_t n, std::size_t k) const { return costs_[slot(k, digits(n, k))]; }
  std::size_t kMax() const { return kMax_; }

 private:
  std::size_t slot(std::size_t k, std::size_t d) const { return k * (maxDigits_ + 1) + d; }

  std::size_t kMax_;
  std::size_t maxDigits_;
  std::vector<Cost> costs_;
  std::vector<std::uint64_t> reach_;
  std::vector<std::uint32_t> rank_;
};

// Smallest base k >= 3 that matches or beats binary at n, or 0.
std::size_t firstRival(const RankedCosts& table, std::uint64_t n) {
  const std::uint32_t binary = table.rank(n, 2);
  for (std::size_t k = 3; k <= table.kMax(); ++k) {
    if (table.rank(n, k) <= binary) return k;
  }
  return 0;
}

}  // namespace

BinaryOptimalityReport binaryAlwaysOptimal(const CostModel& kappa, std::size_t kMax,
                                           std::uint64_t nMax, Exec exec) {
  if (kMax < 2 || nMax < 2) throw InputError("kMax and nMax must be at least 2");
  BinaryOptimalityReport report;
  if (kMax >= 3) {
    const BinaryConditionReport condition = binaryCondition(kappa, kMax);
    report.conditionHolds = condition.holds;
    report.conditionFailure = condition.firstFailure;
  }

  const RankedCosts table(kappa, kMax, nMax);
  const auto last = static_cast<std::int64_t>(nMax);
  std::int64_t firstFailure = last + 1;
  if (exec == Exec::parallel) {
#pragma omp parallel for reduction(min : firstFailure) schedule(static)
    for (std::int64_t n = 2; n <= last; ++n) {
      if (n < firstFailure && firstRival(table, static_cast<std::uint64_t>(n)) != 0) firstFailure = n;
    }
  } else {
    for (std::int64_t n = 2; n <= last; ++n) {
      if (firstRival(table, static_cast<std::uint64_t>(n)) != 0) {
        firstFailure = n;
        break;
      }
    }
  }
  report.binaryOptimal = firstFailure > last;
  report.agree = report.binaryOptimal == report.conditionHolds;
  if (report.binaryOptimal) return report;

  auto witnessAt = [&](std::uint64_t n, std::size_t k) {
    StorageWitness w;
    w.n = n;
    w.k = k;
    w.baseCost = table.cost(n, k);
    w.binaryCost = table.cost(n, 2);
    w.tie = compare(w.baseCost, w.binaryCost) == 0;
    return w;
  };

  // Canonical witness: a base k that fails the condition stores n = k in one digit.
  if (report.conditionFailure) {
    for (std::size_t k = *report.conditionFailure; k <= kMax; ++k) {
      if (k > nMax) break;
      if (table.rank(k, k) <= table.rank(k, 2)) {
        report.witness = witnessAt(k, k);
        return report;
      }
    }
  }
  const auto n = static_cast<std::uint64_t>(firstFailure);
  report.witness = witnessAt(n, firstRival(table, n));
  return report;
}

std::vector<SweepRow> radixSweep(const CostModel& kappa, std::size_t kMax, std::uint64_t nMax,
                                 Exec exec) {
  if (kMax < 2 || nMax < 1) throw InputError("sweep needs kMax >= 2 and nMax >= 1");
  const RankedCosts table(kappa, kMax, nMax);
  std::vector<SweepRow> rows(nMax);
  auto fill = [&](std::uint64_t n) {
    SweepRow& row = rows[n - 1];
    row.n = n;
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t k = 2; k <= kMax; ++k) {
      const std::uint32_t r = table.rank(n, k);
      if (r < best) {
        best = r;
        row.bases = {k};
      } else if (r == best) {
        row.bases.push_back(k);
      }
    }
    row.cost = table.cost(n, row.bases.front());
  };
  const auto last = static_cast<std::int64_t>(nMax);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t n = 1; n <= last; ++n) fill(static_cast<std::uint64_t>(n));
  } else {
    for (std::int64_t n = 1; n <= last; ++n) fill(static_cast<std::uint64_t>(n));
  }
  return rows;
}

std::vector<std::size_t> encode(std::uint64_t value, const StoragePlan& plan) {
  if (value < 1 || value > plan.n) {
    throw InputError("value " + std::to_string(value) + " outside 1.." + std::to_string(plan.n));
  }
  std::vector<std::size_t> digits(plan.digits, 0);
  std::uint64_t rest = value - 1;
  for (std::size_t pos = plan.digits; pos-- > 0;) {
    digits[pos] = static_cast<std::size_t>(rest % plan.k);
    rest /= plan.k;
  }
  return digits;
}

std::uint64_t decode(const std::vector<std::size_t>& digits, const StoragePlan& plan) {
  if (digits.size() != plan.digits) {
    throw InputError("expected " + std::to_string(plan.digits) + " digits, got " +
                     std::to_string(digits.size()));
  }
  std::uint64_t value = 0;
  for (std::size_t d : digits) {
    if (d >= plan.k) throw InputError("digit " + std::to_string(d) + " out of range for base " +
                                      std::to_string(plan.k));
    value = value * plan.k + d;
  }
  if (value >= plan.n) throw InputError("digits encode a value outside 1.." + std::to_string(plan.n));
  return value + 1;
}

}  // namespace coarse
