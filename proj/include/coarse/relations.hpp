#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coarse {

inline constexpr std::size_t kNoCell = std::numeric_limits<std::size_t>::max();

/// Finite, ordered set of distinct labelled alternatives.
class Domain {
 public:
  explicit Domain(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  /// Throws InputError for a label outside the domain.
  std::size_t indexOf(const std::string& label) const;
  bool contains(const std::string& label) const { return index_.count(label) != 0; }

  friend bool operator==(const Domain& a, const Domain& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using DomainPtr = std::shared_ptr<const Domain>;

inline DomainPtr makeDomain(std::vector<std::string> labels) {
  return std::make_shared<const Domain>(std::move(labels));
}

/// Binary relation on a domain stored as a sorted set of index pairs.
/// (x, y) means x is superior to y.
class Relation {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  Relation(DomainPtr domain, std::vector<Pair> pairs);

  static Relation fromLabels(DomainPtr domain,
                             const std::vector<std::pair<std::string, std::string>>& pairs);

  const Domain& domain() const { return *domain_; }
  const DomainPtr& domainPtr() const { return domain_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  bool related(std::size_t x, std::size_t y) const;

 private:
  DomainPtr domain_;
  std::vector<Pair> pairs_;
};

/// Dense square boolean matrix, used for relations on category indices.
class DenseRelation {
 public:
  DenseRelation() = default;
  explicit DenseRelation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool operator()(std::size_t a, std::size_t b) const { return bits_[a * n_ + b] != 0; }
  void set(std::size_t a, std::size_t b, bool value = true) { bits_[a * n_ + b] = value ? 1 : 0; }

  bool asymmetric() const;
  std::size_t outDegree(std::size_t a) const;
  std::size_t inDegree(std::size_t a) const;

  friend bool operator==(const DenseRelation&, const DenseRelation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<char> bits_;
};

/// Categories of a criterion: the partition into equivalence classes of
/// alternatives with identical superior and inferior sets, plus the lifted order.
struct CategoryStructure {
  /// Element indices per category, categories in order of first appearance.
  std::vector<std::vector<std::size_t>> cells;
  /// Category of each domain element, kNoCell for elements not covered.
  std::vector<std::size_t> cellOf;
  /// order(a, b): every member of category a is superior to every member of b.
  DenseRelation order;

  std::size_t e() const { return cells.size(); }
};

bool validateAsymmetric(const Relation& rel);

/// Throws InputError when rel is not asymmetric.
CategoryStructure categories(const Relation& rel);

/// A bijection from s1's categories to s2's that preserves the order in both
/// directions, if one exists. mapping[a] is the image of category a.
std::optional<std::vector<std::size_t>> findOrderIsomorphism(const CategoryStructure& s1,
                                                             const CategoryStructure& s2);

bool orderIsomorphic(const CategoryStructure& s1, const CategoryStructure& s2);

/// The lifted order as a relation on a fresh domain of category labels "E1".."Ee".
Relation quotientRelation(const CategoryStructure& s);

}  // namespace coarse
