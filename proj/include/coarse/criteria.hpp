#pragma once

#include "coarse/exec.hpp"
#include "coarse/relations.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coarse {

struct Criterion {
  std::string name;
  Relation relation;
  CategoryStructure structure;
};

/// Ordered, nonempty list of criteria sharing one domain.
class CriteriaSet {
 public:
  CriteriaSet(DomainPtr domain, std::vector<Relation> relations, std::vector<std::string> names = {});

  const Domain& domain() const { return *domain_; }
  const DomainPtr& domainPtr() const { return domain_; }
  std::size_t size() const { return criteria_.size(); }
  const Criterion& operator[](std::size_t i) const { return criteria_.at(i); }
  const std::vector<Criterion>& criteria() const { return criteria_; }

 private:
  DomainPtr domain_;
  std::vector<Criterion> criteria_;
};

struct DiscriminationVector {
  std::vector<std::size_t> entries;

  /// Product of entries, saturating at UINT64_MAX.
  std::uint64_t product() const;
  std::string str() const;
  friend bool operator==(const DiscriminationVector&, const DiscriminationVector&) = default;
};

struct DiscriminationPartition {
  std::vector<std::vector<std::size_t>> cells;
  std::vector<std::size_t> cellOf;
  /// Category index (j_1, ..., j_N) shared by every member of each cell.
  std::vector<std::vector<std::size_t>> signatures;
};

DiscriminationVector discriminationVector(const CriteriaSet& cs);

/// Meet of all category partitions.
DiscriminationPartition discriminationPartition(const CriteriaSet& cs);

/// Meet of the category partitions of every criterion except `excluded`
/// (the C_{-i} partition). With N = 1 this is the single cell X.
/// Signatures keep a slot for the excluded criterion, filled with kNoCell.
DiscriminationPartition meetExcluding(const CriteriaSet& cs, std::size_t excluded);

bool maximallyCategorizes(const CriteriaSet& cs);

/// C_i restricted to the union of the selected C_{-i} meet cells. Empty
/// intersections with C_i categories are dropped. Throws InputError on an
/// empty selector or an out-of-range cell index.
CategoryStructure restrictedOrder(const CriteriaSet& cs, std::size_t i,
                                  const std::vector<std::size_t>& selector);

/// Literal reading: C_i restricted to a union of raw categories (k, j) of
/// other criteria k != i.
CategoryStructure restrictedOrderByCategories(
    const CriteriaSet& cs, std::size_t i,
    const std::vector<std::pair<std::size_t, std::size_t>>& categoriesOfOthers);

enum class SelectorSemantics { meetCells, categoryUnions };

struct OrderIsomorphismOptions {
  SelectorSemantics semantics = SelectorSemantics::meetCells;
  /// Check every nonempty selector instead of the minimal-cell shortcut.
  bool exhaustive = false;
  /// Largest number of selectable units per criterion in exhaustive mode.
  std::size_t maxSelectorUnits = 16;
};

bool orderIsomorphismProperty(const CriteriaSet& cs, const OrderIsomorphismOptions& options = {});

struct ProductRepresentation {
  /// |Y_i| = e(C_i); attribute value j of Y_i is the singleton block Y_i^j.
  std::vector<std::size_t> attributeSizes;
  /// Y = prod Y_i, points labelled "j1,j2,...,jN" in lexicographic order.
  DomainPtr productDomain;
  /// Criteria on Y whose categories are the slabs Y_i^j x prod_{k != i} Y_k.
  std::vector<Relation> mirroredCriteria;
  /// categoryBijections[i][j]: category of the mirrored criterion matched with E_i^j.
  std::vector<std::vector<std::size_t>> categoryBijections;
  /// Attribute-index vector for every domain label, by domain index.
  std::vector<std::vector<std::size_t>> relabeling;
};

std::optional<ProductRepresentation> productRepresentation(const CriteriaSet& cs);

/// Re-derives the mirrored categories and checks that every bijection is
/// order preserving both ways and that every attribute combination is used.
bool verifyProductRepresentation(const CriteriaSet& cs, const ProductRepresentation& rep);

struct TheoremReport {
  bool maximallyCategorizes = false;
  bool orderIsomorphismProperty = false;
  bool productRepresentation = false;

  bool agree() const {
    return maximallyCategorizes == orderIsomorphismProperty &&
           orderIsomorphismProperty == productRepresentation;
  }
};

TheoremReport theoremCheck(const CriteriaSet& cs, const OrderIsomorphismOptions& options = {});

struct TheoremBatchSummary {
  std::size_t cases = 0;
  std::size_t allTrue = 0;
  std::size_t allFalse = 0;
  /// Indices of inputs whose three statements disagree.
  std::vector<std::size_t> violations;
};

TheoremBatchSummary theoremBatch(std::span<const CriteriaSet> sets, Exec exec = Exec::parallel);

/// One attribute of a product domain: raw values, the range (category) each
/// value falls in, and the order between ranges.
struct Attribute {
  std::string name;
  std::vector<std::string> values;
  std::vector<std::size_t> rangeOf;
  DenseRelation rangeOrder;
};

/// Criteria based on a product of attributes. Each criterion orders one
/// attribute's ranges. `keep` selects a subset of the product (all points when
/// empty); labels join attribute values with `separator`.
CriteriaSet productCriteria(const std::vector<Attribute>& attributes,
                            const std::function<bool(const std::vector<std::size_t>&)>& keep = {},
                            const std::string& separator = "");

/// N coordinate criteria on the bit-cube {0,1}^N (bit 1 superior to bit 0).
/// `keep` filters points by their label, e.g. "001".
CriteriaSet bitCubeCriteria(std::size_t n, const std::function<bool(const std::string&)>& keep = {});

}  // namespace coarse
