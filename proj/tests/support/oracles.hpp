#pragma once

// Slow, direct implementations used to cross-check the library. They share no
// code with src/ beyond the plain data types.

#include "coarse/choice.hpp"
#include "coarse/cost.hpp"
#include "coarse/criteria.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Partition = std::set<std::set<std::size_t>>;

inline Partition asPartition(const std::vector<std::vector<std::size_t>>& cells) {
  Partition p;
  for (const auto& c : cells) p.insert(std::set<std::size_t>(c.begin(), c.end()));
  return p;
}

inline std::vector<std::vector<bool>> matrix(const coarse::Relation& r) {
  const std::size_t n = r.domain().size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (const auto& [x, y] : r.pairs()) m[x][y] = true;
  return m;
}

/// x and y share a category when no third element tells them apart.
inline Partition categories(const coarse::Relation& r) {
  const auto m = matrix(r);
  const std::size_t n = m.size();
  std::vector<int> cls(n, -1);
  int next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    cls[x] = next;
    for (std::size_t y = x + 1; y < n; ++y) {
      bool same = true;
      for (std::size_t z = 0; z < n && same; ++z) same = m[x][z] == m[y][z] && m[z][x] == m[z][y];
      if (same) cls[y] = next;
    }
    ++next;
  }
  std::vector<std::vector<std::size_t>> cells(next);
  for (std::size_t x = 0; x < n; ++x) cells[cls[x]].push_back(x);
  return asPartition(cells);
}

/// Blocks of the common refinement, grouping by the tuple of block ids.
inline Partition meet(const std::vector<Partition>& parts, std::size_t n) {
  std::map<std::vector<std::size_t>, std::set<std::size_t>> groups;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> key;
    for (const auto& p : parts) {
      std::size_t id = 0;
      for (const auto& block : p) {
        if (block.count(x)) break;
        ++id;
      }
      key.push_back(id);
    }
    groups[key].insert(x);
  }
  Partition out;
  for (auto& [k, g] : groups) out.insert(g);
  return out;
}

/// Categories as element sets with the order "every member of A above every member of B".
struct Ordered {
  std::vector<std::set<std::size_t>> cats;
  std::vector<std::vector<bool>> above;
};

inline Ordered ordered(const coarse::Relation& r) {
  const auto m = matrix(r);
  Ordered o;
  for (const auto& c : oracle::categories(r)) o.cats.push_back(c);
  const std::size_t e = o.cats.size();
  o.above.assign(e, std::vector<bool>(e, false));
  for (std::size_t a = 0; a < e; ++a) {
    for (std::size_t b = 0; b < e; ++b) {
      o.above[a][b] = m[*o.cats[a].begin()][*o.cats[b].begin()];
    }
  }
  return o;
}

/// Isomorphism of two small orders by trying every permutation.
inline bool isomorphic(const std::vector<std::vector<bool>>& a, const std::vector<std::vector<bool>>& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a[i][j] == b[perm[i]][perm[j]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::uint64_t productOfCategoryCounts(const coarse::CriteriaSet& cs) {
  std::uint64_t p = 1;
  for (const auto& c : cs.criteria()) p *= oracle::categories(c.relation).size();
  return p;
}

inline bool maximallyCategorizes(const coarse::CriteriaSet& cs) {
  std::vector<Partition> parts;
  for (const auto& c : cs.criteria()) parts.push_back(oracle::categories(c.relation));
  return meet(parts, cs.domain().size()).size() == productOfCategoryCounts(cs);
}

/// Order-isomorphism property by its definition: every nonempty union of
/// cells of the other criteria's meet restricts C_i to an order isomorphic
/// to C_i itself.
inline bool orderIsomorphismProperty(const coarse::CriteriaSet& cs) {
  const std::size_t n = cs.domain().size();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::vector<Partition> others;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (k != i) others.push_back(oracle::categories(cs[k].relation));
    }
    const Partition cellSet = others.empty() ? Partition{[&] {
      std::set<std::size_t> all;
      for (std::size_t x = 0; x < n; ++x) all.insert(x);
      return all;
    }()}
                                             : meet(others, n);
    const std::vector<std::set<std::size_t>> cells(cellSet.begin(), cellSet.end());
    const Ordered full = ordered(cs[i].relation);
    for (std::size_t mask = 1; mask < (std::size_t{1} << cells.size()); ++mask) {
      std::set<std::size_t> u;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (mask >> c & 1U) u.insert(cells[c].begin(), cells[c].end());
      }
      std::vector<std::size_t> kept;
      for (std::size_t a = 0; a < full.cats.size(); ++a) {
        const bool meets = std::any_of(full.cats[a].begin(), full.cats[a].end(),
                                       [&](std::size_t x) { return u.count(x) != 0; });
        if (meets) kept.push_back(a);
      }
      std::vector<std::vector<bool>> restricted(kept.size(), std::vector<bool>(kept.size()));
      for (std::size_t a = 0; a < kept.size(); ++a) {
        for (std::size_t b = 0; b < kept.size(); ++b) restricted[a][b] = full.above[kept[a]][kept[b]];
      }
      if (!isomorphic(restricted, full.above)) return false;
    }
  }
  return true;
}

// ---- choice ----------------------------------------------------------------

using Menu = std::set<std::size_t>;

inline Menu toMenu(coarse::Subset s, std::size_t n) {
  Menu m;
  for (std::size_t x = 0; x < n; ++x) {
    if (s >> x & 1U) m.insert(x);
  }
  return m;
}

inline coarse::Subset toMask(const Menu& m) {
  coarse::Subset s = 0;
  for (std::size_t x : m) s |= coarse::Subset{1} << x;
  return s;
}

inline std::vector<Menu> allMenus(std::size_t n) {
  std::vector<Menu> out;
  for (coarse::Subset s = 1; s < (coarse::Subset{1} << n); ++s) out.push_back(toMenu(s, n));
  return out;
}

inline Menu choose(const coarse::ChoiceFunction& c, const Menu& a) {
  return toMenu(c.choose(toMask(a)), c.domain().size());
}

/// Interchangeability: same fate in every shared menu, and swapping one for
/// the other in a menu swaps the verdict.
inline bool interchangeable(const coarse::ChoiceFunction& c, std::size_t x, std::size_t y) {
  if (x == y) return true;
  for (const Menu& a : allMenus(c.domain().size())) {
    const Menu chosen = choose(c, a);
    if (a.count(x) && a.count(y)) {
      if (chosen.count(x) != chosen.count(y)) return false;
    }
    for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
      if (a.count(p) && !a.count(q)) {
        Menu swapped = a;
        swapped.erase(p);
        swapped.insert(q);
        if (chosen.count(p) != choose(c, swapped).count(q)) return false;
      }
    }
  }
  return true;
}

inline bool condorcetConsistent(const coarse::ChoiceFunction& c) {
  for (const Menu& a : allMenus(c.domain().size())) {
    const Menu chosen = choose(c, a);
    for (std::size_t x : a) {
      bool beatsAll = true;
      for (std::size_t y : a) {
        if (y != x && !choose(c, {x, y}).count(x)) beatsAll = false;
      }
      if (beatsAll && !chosen.count(x)) return false;
    }
  }
  return true;
}

inline bool maximizes(const coarse::ChoiceFunction& c, const std::vector<std::size_t>& rank) {
  for (const Menu& a : allMenus(c.domain().size())) {
    std::size_t best = 0;
    for (std::size_t x : a) best = std::max(best, rank[x]);
    Menu top;
    for (std::size_t x : a) {
      if (rank[x] == best) top.insert(x);
    }
    if (top != choose(c, a)) return false;
  }
  return true;
}

/// Whether c maximizes some weak order, trying every rank function.
inline bool rationalizable(const coarse::ChoiceFunction& c) {
  const std::size_t n = c.domain().size();
  std::vector<std::size_t> rank(n, 0);
  while (true) {
    if (maximizes(c, rank)) return true;
    std::size_t pos = 0;
    while (pos < n && ++rank[pos] == n) rank[pos++] = 0;
    if (pos == n) return false;
  }
}

// ---- costs -----------------------------------------------------------------

/// Digits of n - 1 in base k, by repeated division.
inline std::size_t digitCount(std::uint64_t n, std::size_t k) {
  std::uint64_t v = n - 1;
  std::size_t d = 0;
  while (v > 0) {
    v /= k;
    ++d;
  }
  return d;
}

}  // namespace oracle
