#include "coarse/relations.hpp"

#include "coarse/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace coarse {

Domain::Domain(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InputError("domain must contain at least one alternative");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InputError("domain labels must be nonempty");
    if (!index_.emplace(labels_[i], i).second) {
      throw InputError("duplicate domain label '" + labels_[i] + "'");
    }
  }
}

std::size_t Domain::indexOf(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw InputError("unknown label '" + label + "'");
  return it->second;
}

Relation::Relation(DomainPtr domain, std::vector<Pair> pairs)
    : domain_(std::move(domain)), pairs_(std::move(pairs)) {
  for (const auto& [x, y] : pairs_) {
    if (x >= domain_->size() || y >= domain_->size()) {
      throw InputError("relation pair refers to an index outside the domain");
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Relation Relation::fromLabels(DomainPtr domain,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Pair> idx;
  idx.reserve(pairs.size());
  for (const auto& [a, b] : pairs) idx.emplace_back(domain->indexOf(a), domain->indexOf(b));
  return Relation(std::move(domain), std::move(idx));
}

bool Relation::related(std::size_t x, std::size_t y) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{x, y});
}

bool DenseRelation::asymmetric() const {
  for (std::size_t a = 0; a < n_; ++a) {
    if ((*this)(a, a)) return false;
    for (std::size_t b = a + 1; b < n_; ++b) {
      if ((*this)(a, b) && (*this)(b, a)) return false;
    }
  }
  return true;
}

std::size_t DenseRelation::outDegree(std::size_t a) const {
  std::size_t d = 0;
  for (std::size_t b = 0; b < n_; ++b) d += (*this)(a, b) ? 1 : 0;
  return d;
}

std::size_t DenseRelation::inDegree(std::size_t a) const {
  std::size_t d = 0;
  for (std::size_t b = 0; b < n_; ++b) d += (*this)(b, a) ? 1 : 0;
  return d;
}

bool validateAsymmetric(const Relation& rel) {
  for (const auto& [x, y] : rel.pairs()) {
    if (x == y || rel.related(y, x)) return false;
  }
  return true;
}

CategoryStructure categories(const Relation& rel) {
  if (!validateAsymmetric(rel)) {
    throw InputError("criterion is not asymmetric");
  }
  const std::size_t n = rel.domain().size();
  const std::size_t words = (n + 63) / 64;

  // Contour key per element: superior set bits followed by inferior set bits.
  std::vector<std::vector<std::uint64_t>> key(n, std::vector<std::uint64_t>(2 * words, 0));
  for (const auto& [x, y] : rel.pairs()) {
    key[y][x / 64] |= std::uint64_t{1} << (x % 64);
    key[x][words + y / 64] |= std::uint64_t{1} << (y % 64);
  }

  CategoryStructure s;
  s.cellOf.assign(n, kNoCell);
  std::map<std::vector<std::uint64_t>, std::size_t> cellByKey;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, inserted] = cellByKey.emplace(key[x], s.cells.size());
    if (inserted) s.cells.emplace_back();
    s.cells[it->second].push_back(x);
    s.cellOf[x] = it->second;
  }

  s.order = DenseRelation(s.cells.size());
  for (const auto& [x, y] : rel.pairs()) s.order.set(s.cellOf[x], s.cellOf[y]);
  return s;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const DenseRelation& a, const DenseRelation& b)
      : a_(a), b_(b), map_(a.size(), kNoCell), used_(b.size(), false) {}

  bool run() { return extend(0); }
  std::vector<std::size_t> mapping() const { return map_; }

 private:
  bool compatible(std::size_t u, std::size_t v) const {
    if (a_.outDegree(u) != b_.outDegree(v) || a_.inDegree(u) != b_.inDegree(v)) return false;
    if (a_(u, u) != b_(v, v)) return false;
    for (std::size_t w = 0; w < u; ++w) {
      const std::size_t img = map_[w];
      if (a_(u, w) != b_(v, img) || a_(w, u) != b_(img, v)) return false;
    }
    return true;
  }

  bool extend(std::size_t u) {
    if (u == a_.size()) return true;
    for (std::size_t v = 0; v < b_.size(); ++v) {
      if (used_[v] || !compatible(u, v)) continue;
      map_[u] = v;
      used_[v] = true;
      if (extend(u + 1)) return true;
      used_[v] = false;
    }
    map_[u] = kNoCell;
    return false;
  }

  const DenseRelation& a_;
  const DenseRelation& b_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> findOrderIsomorphism(const CategoryStructure& s1,
                                                             const CategoryStructure& s2) {
  if (s1.order.size() != s2.order.size()) return std::nullopt;

  // Degree-signature multisets must agree before any search.
  auto signatures = [](const DenseRelation& r) {
    std::vector<std::pair<std::size_t, std::size_t>> sig;
    for (std::size_t a = 0; a < r.size(); ++a) sig.emplace_back(r.outDegree(a), r.inDegree(a));
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  if (signatures(s1.order) != signatures(s2.order)) return std::nullopt;

  IsomorphismSearch search(s1.order, s2.order);
  if (!search.run()) return std::nullopt;
  return search.mapping();
}

bool orderIsomorphic(const CategoryStructure& s1, const CategoryStructure& s2) {
  return findOrderIsomorphism(s1, s2).has_value();
}

Relation quotientRelation(const CategoryStructure& s) {
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < s.e(); ++j) labels.push_back("E" + std::to_string(j + 1));
  std::vector<Relation::Pair> pairs;
  for (std::size_t a = 0; a < s.e(); ++a) {
    for (std::size_t b = 0; b < s.e(); ++b) {
      if (s.order(a, b)) pairs.emplace_back(a, b);
    }
  }
  return Relation(makeDomain(std::move(labels)), std::move(pairs));
}

}  // namespace coarse
