#pragma once

#include "coarse/criteria.hpp"
#include "coarse/exec.hpp"
#include "coarse/relations.hpp"
#include "coarse/subset_kernels.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coarse {

/// A choice function c on either every nonempty subset of X (|X| <= 20) or an
/// explicit list of menus. c(A) is a nonempty subset of A.
class ChoiceFunction {
 public:
  /// table[mask] holds c(mask) for every nonempty mask; table[0] is ignored.
  static ChoiceFunction allSubsets(DomainPtr domain, std::vector<Subset> table);
  static ChoiceFunction explicitMenus(DomainPtr domain, std::vector<std::pair<Subset, Subset>> entries);
  /// Tabulates rule over every nonempty subset.
  static ChoiceFunction fromRule(DomainPtr domain, const std::function<Subset(Subset)>& rule,
                                 Exec exec = Exec::parallel);

  const Domain& domain() const { return *domain_; }
  const DomainPtr& domainPtr() const { return domain_; }
  bool coversAllSubsets() const { return all_; }

  /// Throws InputError for a menu outside the choice domain.
  Subset choose(Subset menu) const;

  /// Menus of the choice domain with their choices, ascending by mask.
  std::vector<std::pair<Subset, Subset>> entries() const;

 private:
  ChoiceFunction(DomainPtr domain, bool all) : domain_(std::move(domain)), all_(all) {}

  DomainPtr domain_;
  bool all_;
  std::vector<Subset> table_;
  std::vector<std::pair<Subset, Subset>> explicit_;
};

struct ChoiceClassPartition {
  std::vector<std::vector<std::size_t>> classes;
  bool wellDefined = true;
  /// When not well defined: x ~ via, via ~ y, but not x ~ y.
  std::size_t witnessX = kNoCell;
  std::size_t witnessVia = kNoCell;
  std::size_t witnessY = kNoCell;
};

/// Pairwise interchangeability closed into classes. Throws
/// UnsupportedDomainError for explicit-menu choice functions.
ChoiceClassPartition choiceClasses(const ChoiceFunction& c, Exec exec = Exec::parallel);

/// Number of choice classes; throws PreconditionError when they are not well defined.
std::size_t choiceClassCount(const ChoiceFunction& c, Exec exec = Exec::parallel);

bool uses(const CriteriaSet& cs, const ChoiceFunction& c, Exec exec = Exec::parallel);

/// Throws PreconditionError unless uses(cs, c).
bool maximallyDiscriminates(const CriteriaSet& cs, const ChoiceFunction& c,
                            Exec exec = Exec::parallel);

/// Chooses, from each menu, its members in the best discrimination cell, with
/// cells ranked lexicographically by signature (lower indices preferred).
ChoiceFunction buildMaxChoice(const CriteriaSet& cs, Exec exec = Exec::parallel);

/// Complete, transitive relation; levels list indifference classes best first.
struct WeakOrder {
  DenseRelation atLeastAsGood;
  std::vector<std::vector<std::size_t>> levels;
};

std::optional<WeakOrder> rationalizable(const ChoiceFunction& c, Exec exec = Exec::parallel);

bool condorcetConsistent(const ChoiceFunction& c, Exec exec = Exec::parallel);

/// Maximizers of a numeric ranking (higher is better); ties keep every maximizer.
ChoiceFunction maximizeRanking(DomainPtr domain, const std::vector<long long>& rank,
                               Exec exec = Exec::parallel);

std::string subsetString(const Domain& domain, Subset s);

}  // namespace coarse
