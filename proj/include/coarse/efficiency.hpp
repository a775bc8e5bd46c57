#pragma once

#include "coarse/cost.hpp"
#include "coarse/criteria.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coarse {

class CostExpression;

/// Cost of a criterion as a function of its category count e. kappa(1) = 0
/// for every kind; parametric formulas are consulted only for e >= 2.
class CostModel {
 public:
  enum class Kind { table, power, scaledCeilLog2, linear, expression, custom };

  /// Entries for e >= 2; must include e = 2, be contiguous and nondecreasing.
  static CostModel table(std::map<std::size_t, Rational> entries);
  /// kappa(e) = e^p.
  static CostModel power(Rational p);
  /// kappa(e) = alpha * ceil(log2 e).
  static CostModel scaledCeilLog2(Rational alpha);
  /// kappa(e) = beta * e.
  static CostModel linear(Rational beta);
  /// Arithmetic formula over the variable e, see CostExpression.
  static CostModel expression(const std::string& formula);
  static CostModel custom(std::string description, std::function<Cost(std::size_t)> fn);

  Kind kind() const { return kind_; }
  const std::string& description() const { return description_; }

  /// Throws InputError for e = 0 or an e beyond a table's range.
  Cost operator()(std::size_t e) const;

  /// Largest e the model can evaluate (tables are finite).
  std::size_t maxCategories() const { return maxE_; }

 private:
  CostModel(Kind kind, std::string description, std::function<Cost(std::size_t)> fn,
            std::size_t maxE = SIZE_MAX)
      : kind_(kind), description_(std::move(description)), fn_(std::move(fn)), maxE_(maxE) {}

  Kind kind_;
  std::string description_;
  std::function<Cost(std::size_t)> fn_;
  std::size_t maxE_;
};

/// Throws InputError unless kappa is nondecreasing and nonnegative on 1..eMax.
void requireNondecreasing(const CostModel& kappa, std::size_t eMax);

struct MarginalProfile {
  /// increments[k] = kappa(k + 2) - kappa(k + 1), i.e. m_2, m_3, ..., m_eMax.
  std::vector<Cost> increments;
  bool increasing = true;
  bool strictlyIncreasing = true;
};

MarginalProfile marginalProfile(const CostModel& kappa, std::size_t eMax);

struct EfficiencyPoint {
  DiscriminationVector vector;
  Cost cost;
  std::uint64_t maxDistinctions = 0;
};

/// Sum of kappa over the entries.
Cost vectorCost(const DiscriminationVector& v, const CostModel& kappa);
Cost setCost(const CriteriaSet& cs, const CostModel& kappa);

/// Point of a maximally discriminating pair: n = min(prod e_i, domainSize).
EfficiencyPoint makePoint(DiscriminationVector v, const CostModel& kappa, std::uint64_t domainSize);

enum class Efficiency { more, less, equal, incomparable };

const char* toString(Efficiency e);

/// Compares (nP, costP) against (nQ, costQ).
Efficiency moreEfficient(std::uint64_t nP, const Cost& costP, std::uint64_t nQ, const Cost& costQ);
Efficiency moreEfficient(const EfficiencyPoint& p, const EfficiencyPoint& q);

struct BinaryConditionRow {
  std::size_t e = 0;
  Cost cost;
  Cost bound;  // kappa(2) * ceil(log2 e)
  bool holds = false;
};

struct BinaryConditionReport {
  std::vector<BinaryConditionRow> rows;
  bool holds = true;
  std::optional<std::size_t> firstFailure;
};

/// kappa(e) > kappa(2) * ceil(log2 e) for every e in 3..eMax.
BinaryConditionReport binaryCondition(const CostModel& kappa, std::size_t eMax);

/// First-order dominance of v's category-count distribution toward smaller
/// counts; one-category entries are stripped first.
bool coarsenessDominates(const DiscriminationVector& v, const DiscriminationVector& w);

enum class VerdictStatus { pass, fail, notApplicable };

const char* toString(VerdictStatus s);

struct Result1Verdict {
  VerdictStatus status = VerdictStatus::notApplicable;
  /// "strictly-increasing", "increasing" or empty when not applicable.
  std::string variant;
  std::string reason;
  EfficiencyPoint v;
  EfficiencyPoint w;
  Efficiency relation = Efficiency::incomparable;
};

/// Checks that a maximally discriminating v with equal costly-category budget
/// and coarser proportions is more efficient than w. The verdict is
/// conditional on the cumulative-fraction reading of "coarser proportions".
Result1Verdict verifyResult1(const DiscriminationVector& v, const DiscriminationVector& w,
                             const CostModel& kappa, std::uint64_t domainSize);

inline constexpr std::size_t kMaxFrontierBudget = 24;

/// All multisets of entries >= 2 (nondecreasing order) with sum(e - 1) in 1..budgetMax.
std::vector<DiscriminationVector> enumerateVectors(std::size_t budgetMax);

/// Points not MORE-dominated by any other enumerated point, ordered by cost,
/// then maxDistinctions, then vector. Throws ResourceError beyond kMaxFrontierBudget.
std::vector<EfficiencyPoint> frontier(const CostModel& kappa, std::uint64_t domainSize,
                                      std::size_t budgetMax);

}  // namespace coarse
