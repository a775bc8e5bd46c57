#include "coarse/efficiency.hpp"

#include "coarse/cost_expression.hpp"
#include "coarse/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace coarse {

namespace {

std::string rationalText(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

CostModel CostModel::table(std::map<std::size_t, Rational> entries) {
  entries.erase(1);
  if (!entries.count(2)) throw InputError("cost table has no entry for e=2");
  std::size_t expected = 2;
  Rational previous = 0;
  std::ostringstream desc;
  desc << "table:{";
  for (const auto& [e, cost] : entries) {
    if (e != expected) throw InputError("cost table is missing e=" + std::to_string(expected));
    if (cost < 0) throw InputError("cost table entry for e=" + std::to_string(e) + " is negative");
    if (cost < previous) {
      throw InputError("cost table decreases at e=" + std::to_string(e));
    }
    desc << (e > 2 ? "," : "") << e << ":" << cost;
    previous = cost;
    ++expected;
  }
  desc << "}";
  const std::size_t maxE = entries.rbegin()->first;
  return CostModel(
      Kind::table, desc.str(),
      [entries = std::move(entries)](std::size_t e) { return Cost(entries.at(e)); }, maxE);
}

CostModel CostModel::power(Rational p) {
  if (p < 0) throw InputError("power cost exponent must be nonnegative");
  const bool integral = denominator(p) == 1;
  auto fn = [p, integral](std::size_t e) -> Cost {
    if (integral) {
      Rational r = 1;
      for (BigInt k = 0; k < numerator(p); ++k) r *= static_cast<long long>(e);
      return Cost(r);
    }
    return Cost::approximate(std::pow(static_cast<double>(e), static_cast<double>(p)));
  };
  return CostModel(Kind::power, "power:" + rationalText(p), fn);
}

CostModel CostModel::scaledCeilLog2(Rational alpha) {
  if (alpha < 0) throw InputError("ceillog2 scale must be nonnegative");
  return CostModel(Kind::scaledCeilLog2, "ceillog2:" + rationalText(alpha), [alpha](std::size_t e) {
    return Cost(Rational(alpha * static_cast<long long>(ceilLog2(e))));
  });
}

CostModel CostModel::linear(Rational beta) {
  if (beta < 0) throw InputError("linear cost slope must be nonnegative");
  return CostModel(Kind::linear, "linear:" + rationalText(beta), [beta](std::size_t e) {
    return Cost(Rational(beta * static_cast<long long>(e)));
  });
}

CostModel CostModel::expression(const std::string& formula) {
  CostExpression ex = CostExpression::parse(formula);
  return CostModel(Kind::expression, "expr:" + formula,
                   [ex = std::move(ex)](std::size_t e) { return ex.evaluate(e); });
}

CostModel CostModel::custom(std::string description, std::function<Cost(std::size_t)> fn) {
  return CostModel(Kind::custom, std::move(description), std::move(fn));
}

Cost CostModel::operator()(std::size_t e) const {
  if (e == 0) throw InputError("a criterion has at least one category");
  if (e == 1) return Cost(0LL);
  if (e > maxE_) {
    throw InputError("cost model " + description_ + " has no value for e=" + std::to_string(e));
  }
  return fn_(e);
}

void requireNondecreasing(const CostModel& kappa, std::size_t eMax) {
  Cost previous(0LL);
  for (std::size_t e = 2; e <= eMax; ++e) {
    const Cost c = kappa(e);
    if (c < Cost(0LL)) throw InputError("cost model is negative at e=" + std::to_string(e));
    if (c < previous) throw InputError("cost model decreases at e=" + std::to_string(e));
    previous = c;
  }
}

MarginalProfile marginalProfile(const CostModel& kappa, std::size_t eMax) {
  MarginalProfile p;
  Cost previous = kappa(1);
  for (std::size_t e = 2; e <= eMax; ++e) {
    const Cost current = kappa(e);
    p.increments.push_back(current - previous);
    previous = current;
  }
  for (std::size_t k = 1; k < p.increments.size(); ++k) {
    const auto cmp = compare(p.increments[k], p.increments[k - 1]);
    if (cmp < 0) p.increasing = false;
    if (cmp <= 0) p.strictlyIncreasing = false;
  }
  if (!p.increasing) p.strictlyIncreasing = false;
  return p;
}

Cost vectorCost(const DiscriminationVector& v, const CostModel& kappa) {
  Cost total(0LL);
  for (std::size_t e : v.entries) total += kappa(e);
  return total;
}

Cost setCost(const CriteriaSet& cs, const CostModel& kappa) {
  return vectorCost(discriminationVector(cs), kappa);
}

EfficiencyPoint makePoint(DiscriminationVector v, const CostModel& kappa, std::uint64_t domainSize) {
  EfficiencyPoint p;
  p.cost = vectorCost(v, kappa);
  p.maxDistinctions = std::min<std::uint64_t>(v.product(), domainSize);
  p.vector = std::move(v);
  return p;
}

const char* toString(Efficiency e) {
  switch (e) {
    case Efficiency::more:
      return "MORE";
    case Efficiency::less:
      return "LESS";
    case Efficiency::equal:
      return "EQUAL";
    case Efficiency::incomparable:
      return "INCOMPARABLE";
  }
  return "?";
}

Efficiency moreEfficient(std::uint64_t nP, const Cost& costP, std::uint64_t nQ, const Cost& costQ) {
  const auto costCmp = compare(costP, costQ);
  if (nP == nQ && costCmp == 0) return Efficiency::equal;
  if (nP >= nQ && costCmp <= 0) return Efficiency::more;
  if (nP <= nQ && costCmp >= 0) return Efficiency::less;
  return Efficiency::incomparable;
}

Efficiency moreEfficient(const EfficiencyPoint& p, const EfficiencyPoint& q) {
  return moreEfficient(p.maxDistinctions, p.cost, q.maxDistinctions, q.cost);
}

BinaryConditionReport binaryCondition(const CostModel& kappa, std::size_t eMax) {
  if (eMax < 3) throw InputError("binary condition needs eMax >= 3");
  BinaryConditionReport report;
  const Cost binary = kappa(2);
  for (std::size_t e = 3; e <= eMax; ++e) {
    BinaryConditionRow row;
    row.e = e;
    row.cost = kappa(e);
    row.bound = binary * Cost(static_cast<long long>(ceilLog2(e)));
    row.holds = row.cost > row.bound;
    if (!row.holds && !report.firstFailure) report.firstFailure = e;
    report.holds = report.holds && row.holds;
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool coarsenessDominates(const DiscriminationVector& v, const DiscriminationVector& w) {
  auto strip = [](const DiscriminationVector& d) {
    std::vector<std::size_t> out;
    for (std::size_t e : d.entries) {
      if (e >= 2) out.push_back(e);
    }
    return out;
  };
  const auto a = strip(v);
  const auto b = strip(w);
  if (a.empty() || b.empty()) return false;
  const std::size_t top = std::max(*std::max_element(a.begin(), a.end()),
                                   *std::max_element(b.begin(), b.end()));
  bool strict = false;
  for (std::size_t t = 2; t <= top; ++t) {
    const auto countA = static_cast<std::size_t>(
        std::count_if(a.begin(), a.end(), [t](std::size_t e) { return e <= t; }));
    const auto countB = static_cast<std::size_t>(
        std::count_if(b.begin(), b.end(), [t](std::size_t e) { return e <= t; }));
    // countA/|a| against countB/|b| by cross-multiplication.
    const std::size_t lhs = countA * b.size();
    const std::size_t rhs = countB * a.size();
    if (lhs < rhs) return false;
    if (lhs > rhs) strict = true;
  }
  return strict;
}

const char* toString(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::pass:
      return "PASS";
    case VerdictStatus::fail:
      return "FAIL";
    case VerdictStatus::notApplicable:
      return "NOT_APPLICABLE";
  }
  return "?";
}

Result1Verdict verifyResult1(const DiscriminationVector& v, const DiscriminationVector& w,
                             const CostModel& kappa, std::uint64_t domainSize) {
  Result1Verdict verdict;
  verdict.v = makePoint(v, kappa, domainSize);
  verdict.w = makePoint(w, kappa, domainSize);

  auto budget = [](const DiscriminationVector& d) {
    std::size_t b = 0;
    for (std::size_t e : d.entries) b += e - 1;
    return b;
  };
  if (budget(v) != budget(w)) {
    verdict.reason = "costly-category budgets differ";
    return verdict;
  }
  if (!coarsenessDominates(v, w)) {
    verdict.reason = "first vector does not have greater proportions of coarser criteria";
    return verdict;
  }

  std::size_t eMax = 2;
  for (std::size_t e : v.entries) eMax = std::max(eMax, e);
  for (std::size_t e : w.entries) eMax = std::max(eMax, e);
  const MarginalProfile profile = marginalProfile(kappa, eMax);
  const std::uint64_t smaller = std::min(verdict.v.maxDistinctions, verdict.w.maxDistinctions);
  if (profile.strictlyIncreasing) {
    verdict.variant = "strictly-increasing";
  } else if (profile.increasing && smaller < domainSize) {
    verdict.variant = "increasing";
  } else {
    verdict.reason = profile.increasing
                         ? "marginal costs not strictly increasing and min(n, n') reaches |X|"
                         : "marginal costs are not increasing";
    return verdict;
  }

  verdict.relation = moreEfficient(verdict.v, verdict.w);
  verdict.status = verdict.relation == Efficiency::more ? VerdictStatus::pass : VerdictStatus::fail;
  verdict.reason = "conditional on cumulative-fraction coarseness dominance";
  return verdict;
}

namespace {

void enumerateFrom(std::size_t minEntry, std::size_t remaining, std::vector<std::size_t>& current,
                   std::vector<DiscriminationVector>& out) {
  if (!current.empty()) out.push_back(DiscriminationVector{current});
  for (std::size_t e = minEntry; e - 1 <= remaining; ++e) {
    current.push_back(e);
    enumerateFrom(e, remaining - (e - 1), current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<DiscriminationVector> enumerateVectors(std::size_t budgetMax) {
  if (budgetMax > kMaxFrontierBudget) {
    throw ResourceError("budget " + std::to_string(budgetMax) + " exceeds the enumeration bound " +
                        std::to_string(kMaxFrontierBudget));
  }
  std::vector<DiscriminationVector> out;
  std::vector<std::size_t> current;
  enumerateFrom(2, budgetMax, current, out);
  return out;
}

std::vector<EfficiencyPoint> frontier(const CostModel& kappa, std::uint64_t domainSize,
                                      std::size_t budgetMax) {
  if (budgetMax < 1) throw InputError("frontier budget must be at least 1");
  if (domainSize < 1) throw InputError("domain size must be at least 1");
  const auto vectors = enumerateVectors(budgetMax);

  std::vector<Cost> kappaTable(budgetMax + 2);
  for (std::size_t e = 1; e <= budgetMax + 1; ++e) kappaTable[e] = kappa(e);

  std::vector<EfficiencyPoint> points;
  points.reserve(vectors.size());
  for (const auto& v : vectors) {
    EfficiencyPoint p;
    p.cost = Cost(0LL);
    for (std::size_t e : v.entries) p.cost += kappaTable[e];
    p.maxDistinctions = std::min<std::uint64_t>(v.product(), domainSize);
    p.vector = v;
    points.push_back(std::move(p));
  }

  // Cheapest first; within a cost level, most distinctions first.
  std::sort(points.begin(), points.end(), [](const EfficiencyPoint& a, const EfficiencyPoint& b) {
    const auto c = compare(a.cost, b.cost);
    if (c != 0) return c < 0;
    if (a.maxDistinctions != b.maxDistinctions) return a.maxDistinctions > b.maxDistinctions;
    return a.vector.entries < b.vector.entries;
  });

  // A point survives iff no strictly cheaper point reaches its n and no
  // equally cheap point exceeds it.
  std::vector<EfficiencyPoint> kept;
  std::uint64_t bestCheaper = 0;
  for (std::size_t lo = 0; lo < points.size();) {
    std::size_t hi = lo;
    while (hi < points.size() && compare(points[hi].cost, points[lo].cost) == 0) ++hi;
    const std::uint64_t levelBest = points[lo].maxDistinctions;
    for (std::size_t k = lo; k < hi; ++k) {
      if (points[k].maxDistinctions == levelBest && points[k].maxDistinctions > bestCheaper) {
        kept.push_back(points[k]);
      }
    }
    bestCheaper = std::max(bestCheaper, levelBest);
    lo = hi;
  }

  std::sort(kept.begin(), kept.end(), [](const EfficiencyPoint& a, const EfficiencyPoint& b) {
    const auto c = compare(a.cost, b.cost);
    if (c != 0) return c < 0;
    if (a.maxDistinctions != b.maxDistinctions) return a.maxDistinctions < b.maxDistinctions;
    return a.vector.entries < b.vector.entries;
  });
  return kept;
}

}  // namespace coarse
