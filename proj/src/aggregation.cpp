#include "coarse/aggregation.hpp"

#include "coarse/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace coarse {

Tournament::Tournament(DomainPtr domain, std::vector<Rational> margins)
    : domain_(std::move(domain)), margins_(std::move(margins)) {
  const std::size_t n = domain_->size();
  if (margins_.size() != n * n) throw InputError("tournament needs |X|^2 margins");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (margin(x, y) != -margin(y, x)) throw InputError("tournament margins must be antisymmetric");
    }
  }
}

namespace {

void checkWeights(const CriteriaSet& cs, const WeightProfile& w) {
  if (w.weights.size() != cs.size()) {
    throw InputError("expected " + std::to_string(cs.size()) + " weights, got " +
                     std::to_string(w.weights.size()));
  }
  for (std::size_t i = 0; i < w.weights.size(); ++i) {
    if (w.weights[i] <= 0) {
      throw InputError("weight of criterion '" + cs[i].name + "' must be positive");
    }
  }
}

}  // namespace

Tournament weightedTournament(const CriteriaSet& cs, const WeightProfile& w) {
  checkWeights(cs, w);
  const std::size_t n = cs.domain().size();
  std::vector<Rational> margins(n * n, Rational(0));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const CategoryStructure& s = cs[i].structure;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (s.order(s.cellOf[x], s.cellOf[y])) {
          margins[x * n + y] += w.weights[i];
        } else if (s.order(s.cellOf[y], s.cellOf[x])) {
          margins[x * n + y] -= w.weights[i];
        }
      }
    }
  }
  return Tournament(cs.domainPtr(), std::move(margins));
}

ChoiceFunction aggregateChoice(const CriteriaSet& cs, const WeightProfile& w, Exec exec) {
  checkWeights(cs, w);
  const std::size_t n = cs.domain().size();
  std::vector<Rational> score(n, Rational(0));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const CategoryStructure& s = cs[i].structure;
    if (s.e() != 2 || s.order(0, 1) == s.order(1, 0)) {
      throw PreconditionError("criterion '" + cs[i].name +
                              "' is not binary with strictly ordered categories");
    }
    const std::size_t top = s.order(0, 1) ? 0 : 1;
    for (std::size_t x : s.cells[top]) score[x] += w.weights[i];
  }

  // Replace rational scores by dense integer ranks for the subset kernel.
  std::vector<Rational> distinct = score;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<long long> rank(n);
  for (std::size_t x = 0; x < n; ++x) {
    rank[x] = std::lower_bound(distinct.begin(), distinct.end(), score[x]) - distinct.begin();
  }
  return maximizeRanking(cs.domainPtr(), rank, exec);
}

std::optional<std::vector<std::size_t>> findCondorcetCycle(const Tournament& t) {
  const std::size_t n = t.domain().size();
  std::optional<std::vector<std::size_t>> best;
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> parent(n, kNoCell);
    std::vector<std::size_t> dist(n, kNoCell);
    std::deque<std::size_t> queue{start};
    dist[start] = 0;
    std::optional<std::size_t> closer;
    while (!queue.empty() && !closer) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (t.margin(u, v) <= 0) continue;
        if (v == start) {
          closer = u;
          break;
        }
        if (dist[v] == kNoCell) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (!closer) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t v = *closer; v != kNoCell; v = parent[v]) cycle.push_back(v);
    std::reverse(cycle.begin(), cycle.end());
    if (!best || cycle.size() < best->size()) best = std::move(cycle);
  }
  return best;
}

ChoiceFunction majorityChoice(const Tournament& t, Exec exec) {
  const std::size_t n = t.domain().size();
  std::vector<Subset> beatenBy(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (t.margin(y, x) > 0) beatenBy[x] |= singleton(y);
    }
  }
  return ChoiceFunction::fromRule(
      t.domainPtr(),
      [beatenBy, n](Subset menu) -> Subset {
        Subset unbeaten = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (contains(menu, x) && (beatenBy[x] & menu) == 0) unbeaten |= singleton(x);
        }
        return unbeaten != 0 ? unbeaten : menu;
      },
      exec);
}

}  // namespace coarse
