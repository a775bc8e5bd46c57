#pragma once

#include "coarse/choice.hpp"
#include "coarse/cost.hpp"
#include "coarse/criteria.hpp"

#include <optional>
#include <vector>

namespace coarse {

/// Positive weight per criterion.
struct WeightProfile {
  std::vector<Rational> weights;
};

/// Weighted pairwise margins: margin(x, y) = sum_i w_i * sigma_i(x, y), where
/// sigma_i is +1 / -1 when C_i orders x's category above / below y's, else 0.
class Tournament {
 public:
  Tournament(DomainPtr domain, std::vector<Rational> margins);

  const Domain& domain() const { return *domain_; }
  const DomainPtr& domainPtr() const { return domain_; }
  const Rational& margin(std::size_t x, std::size_t y) const {
    return margins_[x * domain_->size() + y];
  }

 private:
  DomainPtr domain_;
  std::vector<Rational> margins_;
};

/// Throws InputError on a weight count mismatch or a nonpositive weight.
Tournament weightedTournament(const CriteriaSet& cs, const WeightProfile& w);

/// Additive weighted voting over binary criteria: s(x) sums the weights of the
/// criteria that place x in their top category; c(A) keeps every maximizer.
/// Throws PreconditionError naming the first criterion that is not binary with
/// strictly ordered categories.
ChoiceFunction aggregateChoice(const CriteriaSet& cs, const WeightProfile& w,
                               Exec exec = Exec::parallel);

/// Shortest cycle x1 -> x2 -> ... -> xm -> x1 of strictly positive margins.
std::optional<std::vector<std::size_t>> findCondorcetCycle(const Tournament& t);

/// Members of A unbeaten by any other member (margin >= 0); all of A when
/// every member is beaten.
ChoiceFunction majorityChoice(const Tournament& t, Exec exec = Exec::parallel);

}  // namespace coarse
