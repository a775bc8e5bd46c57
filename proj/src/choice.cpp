#include "coarse/choice.hpp"

#include "coarse/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace coarse {

namespace {

void requireSubsetDomain(const Domain& d) {
  if (d.size() > kMaxSubsetDomain) {
    throw ResourceError("subset-lattice analysis is limited to " +
                        std::to_string(kMaxSubsetDomain) + " alternatives, got " +
                        std::to_string(d.size()));
  }
}

void requireAll(const ChoiceFunction& c, const char* op) {
  if (!c.coversAllSubsets()) {
    throw UnsupportedDomainError(std::string(op) +
                                 " requires a choice function defined on every nonempty subset");
  }
}

Subset fullMask(std::size_t n) {
  return n == 32 ? ~Subset{0} : (Subset{1} << n) - 1;
}

void checkChoice(const Domain& d, Subset menu, Subset chosen) {
  if (menu == 0 || (menu & ~fullMask(d.size())) != 0) {
    throw InputError("choice menu is empty or outside the domain");
  }
  if (chosen == 0) throw InputError("c(" + subsetString(d, menu) + ") is empty");
  if ((chosen & ~menu) != 0) {
    throw InputError("c(" + subsetString(d, menu) + ") is not a subset of the menu");
  }
}

}  // namespace

ChoiceFunction ChoiceFunction::allSubsets(DomainPtr domain, std::vector<Subset> table) {
  requireSubsetDomain(*domain);
  const std::size_t total = std::size_t{1} << domain->size();
  if (table.size() != total) throw InputError("choice table must have 2^|X| entries");
  for (std::size_t m = 1; m < total; ++m) checkChoice(*domain, static_cast<Subset>(m), table[m]);
  ChoiceFunction c(std::move(domain), true);
  c.table_ = std::move(table);
  return c;
}

ChoiceFunction ChoiceFunction::explicitMenus(DomainPtr domain,
                                             std::vector<std::pair<Subset, Subset>> entries) {
  requireSubsetDomain(*domain);
  std::sort(entries.begin(), entries.end());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    checkChoice(*domain, entries[k].first, entries[k].second);
    if (k > 0 && entries[k].first == entries[k - 1].first) {
      throw InputError("menu " + subsetString(*domain, entries[k].first) + " listed twice");
    }
  }
  const std::size_t total = std::size_t{1} << domain->size();
  if (entries.size() == total - 1) {
    std::vector<Subset> table(total, 0);
    for (const auto& [menu, chosen] : entries) table[menu] = chosen;
    return allSubsets(std::move(domain), std::move(table));
  }
  ChoiceFunction c(std::move(domain), false);
  c.explicit_ = std::move(entries);
  return c;
}

ChoiceFunction ChoiceFunction::fromRule(DomainPtr domain, const std::function<Subset(Subset)>& rule,
                                        Exec exec) {
  requireSubsetDomain(*domain);
  auto table = tabulateSubsets(domain->size(), rule, exec);
  return allSubsets(std::move(domain), std::move(table));
}

Subset ChoiceFunction::choose(Subset menu) const {
  if (all_) {
    if (menu == 0 || menu >= table_.size()) throw InputError("menu outside the choice domain");
    return table_[menu];
  }
  auto it = std::lower_bound(explicit_.begin(), explicit_.end(), std::pair<Subset, Subset>{menu, 0});
  if (it == explicit_.end() || it->first != menu) throw InputError("menu outside the choice domain");
  return it->second;
}

std::vector<std::pair<Subset, Subset>> ChoiceFunction::entries() const {
  if (!all_) return explicit_;
  std::vector<std::pair<Subset, Subset>> out;
  out.reserve(table_.size() - 1);
  for (std::size_t m = 1; m < table_.size(); ++m) out.emplace_back(static_cast<Subset>(m), table_[m]);
  return out;
}

std::string subsetString(const Domain& domain, Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x = 0; x < domain.size(); ++x) {
    if (!contains(s, x)) continue;
    if (!first) out += ',';
    out += domain.label(x);
    first = false;
  }
  return out + "}";
}

namespace {

// x and y are interchangeable: within any menu holding both, one is chosen
// iff the other is; and swapping x for y in a menu swaps their fates.
bool interchangeable(const ChoiceFunction& c, std::size_t x, std::size_t y) {
  const std::uint64_t total = std::uint64_t{1} << c.domain().size();
  const Subset bx = singleton(x);
  const Subset by = singleton(y);
  for (std::uint64_t m = 1; m < total; ++m) {
    const auto menu = static_cast<Subset>(m);
    if (!(menu & bx)) continue;
    const Subset chosen = c.choose(menu);
    if (menu & by) {
      if (contains(chosen, x) != contains(chosen, y)) return false;
    } else {
      const Subset mirrored = (menu & ~bx) | by;
      if (contains(chosen, x) != contains(c.choose(mirrored), y)) return false;
    }
  }
  return true;
}

}  // namespace

ChoiceClassPartition choiceClasses(const ChoiceFunction& c, Exec exec) {
  requireAll(c, "choiceClasses");
  const std::size_t n = c.domain().size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  }
  std::vector<char> same(pairs.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t p = 0; p < count; ++p) {
      same[p] = interchangeable(c, pairs[p].first, pairs[p].second) ? 1 : 0;
    }
  } else {
    for (std::ptrdiff_t p = 0; p < count; ++p) {
      same[p] = interchangeable(c, pairs[p].first, pairs[p].second) ? 1 : 0;
    }
  }

  DenseRelation rel(n);
  for (std::size_t x = 0; x < n; ++x) rel.set(x, x);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (same[p]) {
      rel.set(pairs[p].first, pairs[p].second);
      rel.set(pairs[p].second, pairs[p].first);
    }
  }

  ChoiceClassPartition out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t via = 0; via < n; ++via) {
      if (!rel(x, via)) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (rel(via, y) && !rel(x, y)) {
          out.wellDefined = false;
          out.witnessX = x;
          out.witnessVia = via;
          out.witnessY = y;
          return out;
        }
      }
    }
  }

  std::vector<bool> placed(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (placed[x]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t y = x; y < n; ++y) {
      if (rel(x, y)) {
        cls.push_back(y);
        placed[y] = true;
      }
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::size_t choiceClassCount(const ChoiceFunction& c, Exec exec) {
  const ChoiceClassPartition p = choiceClasses(c, exec);
  if (!p.wellDefined) {
    const Domain& d = c.domain();
    throw PreconditionError("choice classes are not well defined: " + d.label(p.witnessX) + " ~ " +
                            d.label(p.witnessVia) + " and " + d.label(p.witnessVia) + " ~ " +
                            d.label(p.witnessY) + " but not " + d.label(p.witnessX) + " ~ " +
                            d.label(p.witnessY));
  }
  return p.classes.size();
}

bool uses(const CriteriaSet& cs, const ChoiceFunction& c, Exec exec) {
  if (!(cs.domain() == c.domain())) throw InputError("criteria and choice function domains differ");
  const ChoiceClassPartition classes = choiceClasses(c, exec);
  if (!classes.wellDefined) {
    choiceClassCount(c, exec);  // throws with the witness
  }
  std::vector<std::size_t> classOf(c.domain().size());
  for (std::size_t k = 0; k < classes.classes.size(); ++k) {
    for (std::size_t x : classes.classes[k]) classOf[x] = k;
  }
  for (const auto& cell : discriminationPartition(cs).cells) {
    for (std::size_t x : cell) {
      if (classOf[x] != classOf[cell.front()]) return false;
    }
  }
  return true;
}

bool maximallyDiscriminates(const CriteriaSet& cs, const ChoiceFunction& c, Exec exec) {
  if (!uses(cs, c, exec)) {
    throw PreconditionError("choice function does not use the criteria set");
  }
  const std::uint64_t bound =
      std::min<std::uint64_t>(discriminationVector(cs).product(), cs.domain().size());
  return choiceClassCount(c, exec) == bound;
}

ChoiceFunction buildMaxChoice(const CriteriaSet& cs, Exec exec) {
  requireSubsetDomain(cs.domain());
  const DiscriminationPartition p = discriminationPartition(cs);
  std::vector<std::size_t> byRank(p.cells.size());
  std::iota(byRank.begin(), byRank.end(), std::size_t{0});
  std::sort(byRank.begin(), byRank.end(),
            [&](std::size_t a, std::size_t b) { return p.signatures[a] < p.signatures[b]; });

  std::vector<Subset> cellMask;
  for (std::size_t cell : byRank) {
    Subset m = 0;
    for (std::size_t x : p.cells[cell]) m |= singleton(x);
    cellMask.push_back(m);
  }
  return ChoiceFunction::fromRule(
      cs.domainPtr(),
      [cellMask](Subset menu) -> Subset {
        for (Subset cell : cellMask) {
          if (menu & cell) return menu & cell;
        }
        return menu;
      },
      exec);
}

std::optional<WeakOrder> rationalizable(const ChoiceFunction& c, Exec exec) {
  requireAll(c, "rationalizable");
  const std::size_t n = c.domain().size();

  // x R y iff x is chosen from {x, y}; atLeast[x] is the mask of such y.
  DenseRelation r(n);
  std::vector<Subset> atLeast(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Subset pair = singleton(x) | singleton(y);
      if (contains(c.choose(pair), x)) {
        r.set(x, y);
        atLeast[x] |= singleton(y);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!r(x, y) && !r(y, x)) return std::nullopt;
      if (!r(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (r(y, z) && !r(x, z)) return std::nullopt;
      }
    }
  }

  const auto failure = firstFailingSubset(
      n,
      [&](Subset menu) {
        Subset best = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (contains(menu, x) && (menu & ~atLeast[x]) == 0) best |= singleton(x);
        }
        return best == c.choose(menu);
      },
      exec);
  if (failure) return std::nullopt;

  WeakOrder w{r, {}};
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto dominated = [&](std::size_t x) { return std::popcount(atLeast[x]); };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return dominated(a) > dominated(b); });
  for (std::size_t x : order) {
    if (w.levels.empty() || !r(w.levels.back().front(), x) || !r(x, w.levels.back().front())) {
      w.levels.emplace_back();
    }
    w.levels.back().push_back(x);
  }
  for (auto& level : w.levels) std::sort(level.begin(), level.end());
  return w;
}

bool condorcetConsistent(const ChoiceFunction& c, Exec exec) {
  requireAll(c, "condorcetConsistent");
  const std::size_t n = c.domain().size();
  std::vector<Subset> beats(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    beats[x] = singleton(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x && contains(c.choose(singleton(x) | singleton(y)), x)) beats[x] |= singleton(y);
    }
  }
  const auto failure = firstFailingSubset(
      n,
      [&](Subset menu) {
        const Subset chosen = c.choose(menu);
        for (std::size_t x = 0; x < n; ++x) {
          if (contains(menu, x) && (menu & ~beats[x]) == 0 && !contains(chosen, x)) return false;
        }
        return true;
      },
      exec);
  return !failure.has_value();
}

ChoiceFunction maximizeRanking(DomainPtr domain, const std::vector<long long>& rank, Exec exec) {
  if (rank.size() != domain->size()) throw InputError("ranking size does not match the domain");
  const std::size_t n = domain->size();
  return ChoiceFunction::fromRule(
      std::move(domain),
      [rank, n](Subset menu) -> Subset {
        Subset best = 0;
        long long top = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (!contains(menu, x)) continue;
          if (best == 0 || rank[x] > top) {
            best = singleton(x);
            top = rank[x];
          } else if (rank[x] == top) {
            best |= singleton(x);
          }
        }
        return best;
      },
      exec);
}

}  // namespace coarse
